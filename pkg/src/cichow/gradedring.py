"""Graded linear algebra over the rationals for quotient presentations.

A GradedPresentation is a weighted polynomial ring (the registry) together
with a list of homogeneous relations.  Hilbert functions and ideal
membership in bounded degree are computed by exact row reduction of the
span {relation * monomial} degree by degree; no Groebner bases.
"""

from __future__ import annotations

from .poly import QQ


class GradedPresentation:
    """Generators with degrees (a VarRegistry) plus homogeneous relations."""

    def __init__(self, reg, relations):
        self.reg = reg
        self.relations = []
        for rel in relations:
            if rel.is_zero():
                continue
            if rel.reg is not reg:
                rel = rel.convert(reg)
            if not rel.is_homogeneous():
                raise ValueError("relations must be homogeneous")
            self.relations.append(rel)


def monomials_of_degree(reg, d):
    """All exponent tuples of weighted degree exactly d, in canonical order."""
    out = []

    def rec(i, rem, exps):
        if i == reg.size:
            if rem == 0:
                out.append(tuple(exps))
            return
        w = reg.degrees[i]
        for e in range(rem // w + 1):
            exps[i] = e
            rec(i + 1, rem - e * w, exps)
        exps[i] = 0

    rec(0, d, [0] * reg.size)
    out.sort(key=reg.sort_key)
    return out


def _rref(rows):
    """In-place exact reduced row echelon; returns pivot-column -> row map."""
    pivots = {}
    for row in rows:
        for col, lead in pivots.items():
            c = row.get(col)
            if c:
                for m, v in lead.items():
                    s = row.get(m, 0) - c * v
                    if s:
                        row[m] = s
                    else:
                        row.pop(m, None)
        if not row:
            continue
        col = min(row)
        inv = 1 / QQ(row[col])
        lead = {m: v * inv for m, v in row.items()}
        # back-substitute into existing leads
        for pc, prow in pivots.items():
            c = prow.get(col)
            if c:
                for m, v in lead.items():
                    s = prow.get(m, 0) - c * v
                    if s:
                        prow[m] = s
                    else:
                        prow.pop(m, None)
        pivots[col] = lead
    return pivots


def _degree_span(pres, d):
    """Row-reduced span of {relation * monomial} in degree d."""
    reg = pres.reg
    mono_index = {m: i for i, m in enumerate(monomials_of_degree(reg, d))}
    rows = []
    for rel in pres.relations:
        dr = rel.degree()
        if dr > d:
            continue
        for m in monomials_of_degree(reg, d - dr):
            row = {}
            for rm, rc in rel.terms.items():
                key = tuple(a + b for a, b in zip(rm, m))
                row[mono_index[key]] = rc
            rows.append(row)
    return _rref(rows), len(mono_index)


def hilbert_function(pres, D):
    """dim_Q of (free graded algebra / ideal) in degrees 0..D."""
    if D < 0:
        raise ValueError("D must be >= 0")
    dims = []
    for d in range(D + 1):
        pivots, total = _degree_span(pres, d)
        dims.append(total - len(pivots))
    return dims


def reduces_to_zero(elem, pres):
    """True iff elem lies in the degree-d span of the relation ideal."""
    if elem.is_zero():
        return True
    if not elem.is_homogeneous():
        raise ValueError("element must be homogeneous")
    if elem.reg is not pres.reg:
        elem = elem.convert(pres.reg)
    d = elem.degree()
    pivots, _ = _degree_span(pres, d)
    mono_index = {m: i for i, m in enumerate(monomials_of_degree(pres.reg, d))}
    row = {mono_index[m]: c for m, c in elem.terms.items()}
    for col, lead in pivots.items():
        c = row.get(col)
        if c:
            for m, v in lead.items():
                s = row.get(m, 0) - c * v
                if s:
                    row[m] = s
                else:
                    row.pop(m, None)
    return not row


def ring_pattern(pres, D):
    """Classify the quotient by its Hilbert function through degree D.

    Returns ("TRIVIAL_RING", None), ("TRUNCATED_LINE", k) for the pattern
    of Q[x]/(x^k) with a single degree-one survivor, or ("OTHER", dims).
    """
    if D < 2:
        raise ValueError("D must be >= 2")
    dims = hilbert_function(pres, D)
    if dims[0] != 1:
        return ("OTHER", dims)
    if all(v == 0 for v in dims[1:]):
        return ("TRIVIAL_RING", None)
    k = next(i for i, v in enumerate(dims) if v != 1)
    if all(v == 1 for v in dims[:k]) and all(v == 0 for v in dims[k:]):
        return ("TRUNCATED_LINE", k)
    return ("OTHER", dims)
