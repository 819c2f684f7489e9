"""Command-line interface.

Subcommands: relations, hilbert, picard-sl, picard-pgl, picard-nddd,
codim2, localize, verify-paper.  Output is deterministic: identical
invocations produce byte-identical bytes.  Exit codes: 0 on success, 2
for INCONCLUSIVE verdicts or failed verification, 1 for input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .codim2 import chow_codim2
from .gradedring import GradedPresentation, hilbert_function, ring_pattern
from .picard import n_ddd, pic_pgl, pic_sl
from .poly import rat_str
from .relgen import make_profile, output_registry, pure_pushforward, relation_generators


def _threads():
    """Thread cap from CICHOW_THREADS; the CLI is sequential either way,
    the value only bounds worker pools of future parallel paths."""
    try:
        return max(1, int(os.environ.get("CICHOW_THREADS", "1")))
    except ValueError:
        return 1


def _parse_degrees(text):
    try:
        degrees = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise SystemExit2(f"malformed degree list: {text!r}")
    if not degrees:
        raise SystemExit2("empty degree list")
    return degrees


class SystemExit2(Exception):
    """Input error carrying the message for exit code 1."""


def _profile(args):
    if args.degrees is None:
        raise SystemExit2("--degrees is required")
    try:
        return make_profile(args.n, _parse_degrees(args.degrees))
    except ValueError as ex:
        raise SystemExit2(str(ex))


def _poly_text(poly):
    return str(poly).replace("gamma", "g")


def _label_text(label):
    if not label:
        return "1"
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in sorted(label.items()))


def _emit(args, obj, text_lines):
    if args.format == "json":
        out = json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    else:
        out = "\n".join(text_lines) + "\n"
    sys.stdout.write(out)


def cmd_relations(args):
    p = _profile(args)
    rels = relation_generators(p, args.group, args.max_degree, basis=args.basis)
    obj = [
        {"degree": deg, "P": label, "generator": gen.to_obj()}
        for deg, label, gen in rels
    ]
    lines = [f"relations n={p.n} degrees={list(p.degrees)} group={args.group}"]
    for deg, label, gen in rels:
        lines.append(f"degree {deg}  P = {_label_text(label)}")
        lines.append(f"  {_poly_text(gen)}")
    _emit(args, obj, lines)
    return 0


def cmd_hilbert(args):
    p = _profile(args)
    D = args.max_degree if args.max_degree is not None else p.n + 2
    rels = [g for _, _, g in relation_generators(p, args.group, D)]
    pres = GradedPresentation(output_registry(p, args.group), rels)
    dims = hilbert_function(pres, D)
    kind, detail = ring_pattern(pres, max(D, 2))
    obj = {"dims": dims, "pattern": {"kind": kind, "detail": detail}}
    lines = [
        f"hilbert n={p.n} degrees={list(p.degrees)} group={args.group} D={D}",
        "dims " + " ".join(str(d) for d in dims),
        f"pattern {kind}" + (f"({detail})" if detail is not None else ""),
    ]
    _emit(args, obj, lines)
    return 0


def _group_obj(g):
    return {"rank": g.rank, "torsion": list(g.torsion)}


def cmd_picard(args, pgl):
    p = _profile(args)
    from .picard import block_f

    g = (pic_pgl if pgl else pic_sl)(p, char2_doubling=args.char2_doubling)
    F = block_f(p, args.char2_doubling)
    obj = {"group": _group_obj(g), "F": F}
    lines = [
        f"pic {'pgl' if pgl else 'sl'} n={p.n} degrees={list(p.degrees)}",
        f"F = {F}",
        f"group = {g}",
    ]
    _emit(args, obj, lines)
    return 0


def cmd_nddd(args):
    try:
        N = n_ddd(args.n, args.r, args.d)
    except ValueError as ex:
        raise SystemExit2(str(ex))
    _emit(args, {"N": N}, [f"N({args.n},{args.r},{args.d}) = {N}"])
    return 0


def cmd_codim2(args):
    p = _profile(args)
    if p.r != 2 or p.n < 3:
        raise SystemExit2("codim2 needs r=2 and n >= 3")
    v = chow_codim2(p)
    c = v.det
    from .codim2 import coeffs_closed_form

    coeffs = coeffs_closed_form(p)
    obj = {
        "case": v.case,
        "det": rat_str(c.value),
        "criterion": c.criterion,
        "ring": v.ring_str,
        "coeffs": {
            k: rat_str(getattr(coeffs, k))
            for k in ("A10", "A01", "B20", "B11", "B02", "B00", "C20", "C11", "C02", "C00")
        },
    }
    lines = [
        f"codim2 n={p.n} degrees={list(p.degrees)} case={v.case}",
        f"det ({c.criterion}) = {rat_str(c.value)}",
        f"ring = {v.ring_str}",
    ]
    _emit(args, obj, lines)
    return 2 if v.ring_str == "INCONCLUSIVE" else 0


def cmd_localize(args):
    p = _profile(args)
    label = {}
    if args.p:
        for part in args.p.split(","):
            if "=" in part:
                var, exp = part.split("=", 1)
            elif "^" in part:
                var, exp = part.split("^", 1)
            else:
                var, exp = part, "1"
            try:
                label[var.strip()] = int(exp)
            except ValueError:
                raise SystemExit2(f"malformed monomial part: {part!r}")
    try:
        result = pure_pushforward(p, label, basis=args.basis)
    except (KeyError, ValueError) as ex:
        raise SystemExit2(str(ex))
    obj = {"P": label, "pushforward": result.to_obj()}
    lines = [
        f"localize n={p.n} degrees={list(p.degrees)} P={_label_text(label)}",
        _poly_text(result),
    ]
    _emit(args, obj, lines)
    return 0


def cmd_verify_paper(args):
    from .pins import run_verify

    results = run_verify()
    ok = all(r["ok"] for r in results)
    obj = {"pass": sum(r["ok"] for r in results), "total": len(results), "cases": results}
    lines = []
    for r in results:
        lines.append(("PASS  " if r["ok"] else "FAIL  ") + r["case"])
        if not r["ok"]:
            lines.append(f"      expected: {r['expected']}")
            lines.append(f"      got:      {r['got']}")
    lines.append(f"{obj['pass']}/{obj['total']} pinned cases passed")
    _emit(args, obj, lines)
    return 0 if ok else 2


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cichow",
        description="Exact Chow-ring and Picard-group computations for "
        "moduli of smooth complete intersections.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, degrees=True):
        sp.add_argument("--n", type=int, required=True)
        if degrees:
            sp.add_argument("--degrees", help="comma-separated degree list")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("relations", help="relation ideal generators")
    common(sp)
    sp.add_argument("--group", choices=("gl", "sl", "pgl"), default="gl")
    sp.add_argument("--max-degree", type=int, default=3)
    sp.add_argument("--basis", choices=("b", "sigma"), default="b")
    sp.set_defaults(func=cmd_relations)

    sp = sub.add_parser("hilbert", help="Hilbert function of the presentation")
    common(sp)
    sp.add_argument("--group", choices=("gl", "sl", "pgl"), default="pgl")
    sp.add_argument("--max-degree", type=int, default=None)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("picard-sl", help="Picard group of the SL-stack")
    common(sp)
    sp.add_argument("--char2-doubling", action="store_true")
    sp.set_defaults(func=lambda a: cmd_picard(a, pgl=False))

    sp = sub.add_parser("picard-pgl", help="Picard group of the PGL-stack")
    common(sp)
    sp.add_argument("--char2-doubling", action="store_true")
    sp.set_defaults(func=lambda a: cmd_picard(a, pgl=True))

    sp = sub.add_parser("picard-nddd", help="order formula for type (d,...,d)")
    common(sp, degrees=False)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_nddd)

    sp = sub.add_parser("codim2", help="codimension-two ring verdict")
    common(sp)
    sp.set_defaults(func=cmd_codim2)

    sp = sub.add_parser("localize", help="pushforward of a P-monomial")
    common(sp)
    sp.add_argument("--p", default="", help="monomial, e.g. beta1=3,sigma3=1")
    sp.add_argument("--basis", choices=("b", "sigma"), default="sigma")
    sp.set_defaults(func=cmd_localize)

    sp = sub.add_parser("verify-paper", help="run the pinned regression suite")
    sp.add_argument("--format", choices=("json", "text"), default="text")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify_paper)

    return ap


def main(argv=None):
    _threads()
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as ex:
        sys.stderr.write(f"error: {ex}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
