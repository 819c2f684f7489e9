"""Pinned regression values and the verify-paper suite.

The tables below freeze the printed relation generators for the two
worked complete-intersection cases (n=4 and n=5, degrees (2,2,2)), the
degree-one coefficients, the Picard-group spot values, and the
codimension-two verdicts.  run_verify recomputes every pinned case from
scratch and reports exact-match results; it never repairs a mismatch.

One pinned polynomial differs from its printed source by a single sign:
the n=4 degree-three relation for P = beta1^2 is pinned with leading
term -48 c1^3 (the printed text has +48 c1^3).  The pinned value is the
one reproduced independently by the localization pipeline and is
consistent with the adjacent printed pushforwards; the discrepancy is
exercised explicitly by the test suite.
"""

from __future__ import annotations

from .codim2 import chow_codim2
from .gradedring import GradedPresentation, hilbert_function
from .picard import f_vector_closed_form, f_vector_sum_form, n_ddd, pic_pgl, pic_sl
from .poly import QQ, rat_str
from .relgen import Engine, expand_P, make_profile, output_registry, pure_pushforward

# Each entry: (name, kind, P-label, terms); kind "relation" compares the
# full gamma-summed generator, "pure" the gamma-free pushforward.  Terms
# are (coefficient, {variable: exponent}) pairs on the GL registry.
M5_PROFILE = (4, (2, 2, 2))
M5_PINS = [
    ("m5 degree 1", "relation", {}, [(-48, {"c1": 1}), (40, {"a1_1": 1})]),
    (
        "m5 degree 2, P=beta1",
        "relation",
        {"beta1": 1},
        [
            (48, {"c1": 2}),
            (-24, {"c2": 1}),
            (-56, {"c1": 1, "a1_1": 1}),
            (20, {"a1_1": 2}),
        ],
    ),
    (
        "m5 degree 2, P=sigma1",
        "relation",
        {"sigma1": 1},
        [
            (112, {"c1": 2}),
            (-40, {"c2": 1}),
            (-136, {"c1": 1, "a1_1": 1}),
            (40, {"a1_1": 2}),
            (20, {"a1_2": 1}),
        ],
    ),
    (
        "m5 degree 3, P=sigma2",
        "relation",
        {"sigma2": 1},
        [
            (-112, {"c1": 3}),
            (88, {"c1": 1, "c2": 1}),
            (-24, {"c3": 1}),
            (184, {"c1": 2, "a1_1": 1}),
            (-48, {"c2": 1, "a1_1": 1}),
            (-96, {"c1": 1, "a1_1": 2}),
            (12, {"a1_1": 3}),
            (-56, {"c1": 1, "a1_2": 1}),
            (46, {"a1_1": 1, "a1_2": 1}),
            (-18, {"a1_3": 1}),
        ],
    ),
    (
        "m5 degree 3, P=beta1^2",
        "relation",
        {"beta1": 2},
        [
            (-48, {"c1": 3}),
            (72, {"c1": 1, "c2": 1}),
            (-32, {"c3": 1}),
            (56, {"c1": 2, "a1_1": 1}),
            (-36, {"c2": 1, "a1_1": 1}),
            (-24, {"c1": 1, "a1_1": 2}),
            (4, {"a1_1": 3}),
            (-4, {"c1": 1, "a1_2": 1}),
            (2, {"a1_1": 1, "a1_2": 1}),
            (4, {"a1_3": 1}),
        ],
    ),
    (
        "m5 pushforward beta1^3",
        "pure",
        {"beta1": 3},
        [
            (48, {"c1": 4}),
            (-120, {"c1": 2, "c2": 1}),
            (24, {"c2": 2}),
            (80, {"c1": 1, "c3": 1}),
            (-32, {"c4": 1}),
        ],
    ),
    (
        "m5 pushforward beta1^4",
        "pure",
        {"beta1": 4},
        [
            (-48, {"c1": 5}),
            (168, {"c1": 3, "c2": 1}),
            (-96, {"c1": 1, "c2": 2}),
            (-128, {"c1": 2, "c3": 1}),
            (56, {"c2": 1, "c3": 1}),
            (80, {"c1": 1, "c4": 1}),
            (-32, {"c5": 1}),
        ],
    ),
]

U8_PROFILE = (5, (2, 2, 2))
U8_PINS = [
    ("u8 degree 1", "relation", {}, [(-80, {"c1": 1}), (80, {"a1_1": 1})]),
    (
        "u8 degree 2, P=beta1",
        "relation",
        {"beta1": 1},
        [
            (80, {"c1": 2}),
            (-32, {"c2": 1}),
            (-120, {"c1": 1, "a1_1": 1}),
            (60, {"a1_1": 2}),
            (-20, {"a1_2": 1}),
        ],
    ),
    (
        "u8 degree 2, P=sigma1",
        "relation",
        {"sigma1": 1},
        [
            (200, {"c1": 2}),
            (-56, {"c2": 1}),
            (-300, {"c1": 1, "a1_1": 1}),
            (120, {"a1_1": 2}),
            (10, {"a1_2": 1}),
        ],
    ),
    (
        "u8 degree 3, P=beta1^2",
        "relation",
        {"beta1": 2},
        [
            (-80, {"c1": 3}),
            (112, {"c1": 1, "c2": 1}),
            (-56, {"c3": 1}),
            (120, {"c1": 2, "a1_1": 1}),
            (-64, {"c2": 1, "a1_1": 1}),
            (-80, {"c1": 1, "a1_1": 2}),
            (24, {"a1_1": 3}),
            (20, {"c1": 1, "a1_2": 1}),
            (-18, {"a1_1": 1, "a1_2": 1}),
            (14, {"a1_3": 1}),
        ],
    ),
    (
        "u8 degree 3, P=sigma2",
        "relation",
        {"sigma2": 1},
        [
            (-240, {"c1": 3}),
            (168, {"c1": 1, "c2": 1}),
            (-72, {"c3": 1}),
            (480, {"c1": 2, "a1_1": 1}),
            (-92, {"c2": 1, "a1_1": 1}),
            (-340, {"c1": 1, "a1_1": 2}),
            (72, {"a1_1": 3}),
            (-80, {"c1": 1, "a1_2": 1}),
            (96, {"a1_1": 1, "a1_2": 1}),
            (-63, {"a1_3": 1}),
        ],
    ),
    (
        "u8 pushforward beta1^3",
        "pure",
        {"beta1": 3},
        [
            (80, {"c1": 4}),
            (-192, {"c1": 2, "c2": 1}),
            (32, {"c2": 2}),
            (136, {"c1": 1, "c3": 1}),
            (-48, {"c4": 1}),
        ],
    ),
    (
        "u8 pushforward beta1*sigma3",
        "pure",
        {"beta1": 1, "sigma3": 1},
        [
            (-200, {"c1": 5}),
            (512, {"c1": 3, "c2": 1}),
            (-136, {"c1": 1, "c2": 2}),
            (-464, {"c1": 2, "c3": 1}),
            (64, {"c2": 1, "c3": 1}),
            (272, {"c1": 1, "c4": 1}),
            (-48, {"c5": 1}),
        ],
    ),
    (
        "u8 pushforward beta1^2*sigma3",
        "pure",
        {"beta1": 2, "sigma3": 1},
        [
            (200, {"c1": 6}),
            (-712, {"c1": 4, "c2": 1}),
            (448, {"c1": 2, "c2": 2}),
            (-24, {"c2": 3}),
            (664, {"c1": 3, "c3": 1}),
            (-440, {"c1": 1, "c2": 1, "c3": 1}),
            (88, {"c3": 2}),
            (-472, {"c1": 2, "c4": 1}),
            (96, {"c2": 1, "c4": 1}),
            (200, {"c1": 1, "c5": 1}),
            (-48, {"c6": 1}),
        ],
    ),
]

PICARD_PINS = [
    # (n, degrees, F vector, SL group as (rank, torsion))
    ((3, (2, 2)), [12, 12], (0, (12,))),
    ((3, (2, 3)), [33, 34], (1, ())),
    ((4, (2, 2, 2)), [40, 40, 40], (0, (40,))),
]

NDDD_PINS = [((4, 2, 2), 4), ((3, 2, 2), 12), ((5, 3, 2), 80)]

CODIM2_PINS = [
    # (n, degrees, ring string)
    ((3, (2, 3)), "Q[g1]/(g1^2)"),
    ((4, (2, 3)), "Q[g1]/(g1^2)"),
    ((3, (2, 2)), "Q"),
]


def build_pin_poly(reg, terms):
    p = reg.zero()
    for coeff, exps in terms:
        p = p + reg.monomial(coeff, exps)
    return p


def _check_relations(profile, pins, results):
    p = make_profile(*profile)
    eng = Engine(p)
    reg = output_registry(p, "gl")
    for name, kind, label, terms in pins:
        want = build_pin_poly(reg, terms)
        if kind == "relation":
            got = eng.relation_for_P(expand_P(p, eng.reg, label, basis="sigma"))
        else:
            got = pure_pushforward(p, label, basis="sigma")
        results.append(_entry(name, got.convert(reg) == want, str(want), str(got)))
    return eng


def _entry(name, ok, expected, got):
    return {"case": name, "ok": bool(ok), "expected": expected, "got": got}


def _check_hilbert(profile, D, results):
    from .relgen import relation_generators

    p = make_profile(*profile)
    rels = [g for _, _, g in relation_generators(p, "pgl", max_degree=D)]
    pres = GradedPresentation(output_registry(p, "pgl"), rels)
    dims = hilbert_function(pres, D)
    want = [1] + [0] * D
    results.append(
        _entry(f"hilbert n={p.n} (2,2,2) pgl", dims == want, str(want), str(dims))
    )


def run_verify():
    """Recompute every pinned case; returns a list of report entries."""
    results = []
    _check_relations(M5_PROFILE, M5_PINS, results)
    _check_relations(U8_PROFILE, U8_PINS, results)
    _check_hilbert(M5_PROFILE, 6, results)
    _check_hilbert(U8_PROFILE, 7, results)
    for (n, degrees), F, group in PICARD_PINS:
        p = make_profile(n, degrees)
        got = f_vector_sum_form(p)
        results.append(_entry(f"F vector n={n} {degrees}", got == F, str(F), str(got)))
        if len(set(p.e)) == p.r:
            closed = f_vector_closed_form(p)
            results.append(
                _entry(
                    f"F closed form n={n} {degrees}", closed == F, str(F), str(closed)
                )
            )
        g = pic_sl(p)
        results.append(
            _entry(
                f"pic sl n={n} {degrees}",
                (g.rank, g.torsion) == group,
                str(group),
                str((g.rank, g.torsion)),
            )
        )
    for (n, r, d), N in NDDD_PINS:
        got = n_ddd(n, r, d)
        results.append(_entry(f"N({n},{r},{d})", got == N, str(N), str(got)))
        g = pic_pgl(make_profile(n, (d,) * r))
        want = (0, (N,)) if N > 1 else (0, ())
        results.append(
            _entry(
                f"pic pgl n={n} r={r} d={d}",
                (g.rank, g.torsion) == want,
                str(want),
                str((g.rank, g.torsion)),
            )
        )
    for (n, degrees), ring in CODIM2_PINS:
        v = chow_codim2(make_profile(n, degrees))
        results.append(
            _entry(
                f"codim2 n={n} {degrees}",
                v.ring_str == ring and v.det.value != 0,
                ring,
                f"{v.ring_str} (det {rat_str(v.det.value)})",
            )
        )
    if not results:
        raise RuntimeError("pin table is empty")
    return results
