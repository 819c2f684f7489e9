"""Pieri-rule Schubert calculus on the Grassmannian Gr(s, n+1).

Partitions live in the s x (n+1-s) box.  Only the special-class products
needed here are implemented: multiplication by sigma_{(1^m)} (a column of m
boxes, at most one per row) and by sigma_{(p)} (a row of p boxes, at most
one per column).  Integrals against the point class reduce to the
multiplicity of the full-box partition.
"""

from __future__ import annotations

from itertools import combinations

from .poly import QQ


def _validate(lam, rows, cols):
    if len(lam) != rows:
        raise ValueError("partition must be padded to the number of rows")
    if any(a < b for a, b in zip(lam[1:], lam)):
        pass
    for a, b in zip(lam, lam[1:]):
        if a < b:
            raise ValueError("parts must be weakly decreasing")
    if any(p < 0 or p > cols for p in lam):
        raise ValueError("part out of box")


def pieri_multiply(lam, m, column, box):
    """Multiply the Schubert class of lam by sigma_{(1^m)} or sigma_{(p)}.

    box is (rows, cols) = (s, n+1-s).  Returns the sorted list of resulting
    partitions (each with multiplicity one, as Pieri guarantees); partitions
    leaving the box are dropped.
    """
    rows, cols = box
    lam = tuple(lam) + (0,) * (rows - len(lam))
    _validate(lam, rows, cols)
    if m < 0:
        raise ValueError("negative Pieri degree")
    out = []
    if column:
        if m > rows:
            return []
        # add m boxes, at most one per row, keeping a partition in the box
        for rows_hit in combinations(range(rows), m):
            mu = list(lam)
            for i in rows_hit:
                mu[i] += 1
            if all(p <= cols for p in mu) and all(
                a >= b for a, b in zip(mu, mu[1:])
            ):
                out.append(tuple(mu))
    else:
        if m > cols:
            return []
        # add m boxes, at most one per column: lam_i <= mu_i <= lam_{i-1}
        def rec(i, remaining, mu):
            if i == rows:
                if remaining == 0:
                    out.append(tuple(mu))
                return
            upper = cols if i == 0 else lam[i - 1]
            lo = lam[i]
            for v in range(lo, min(upper, lo + remaining) + 1):
                rec(i + 1, remaining - (v - lo), mu + [v])

        rec(0, m, [])
    return sorted(out, reverse=True)


def grassmann_integral(factors, s, n):
    """Integral over Gr(s, n+1) of a product of special Schubert classes.

    factors is a list of ("column"|"row", m) pairs; the total number of
    boxes must equal s*(n+1-s).  Returns the multiplicity of the full-box
    partition in the iterated Pieri product, as an exact rational.
    """
    box = (s, n + 1 - s)
    area = box[0] * box[1]
    total = sum(m for _, m in factors)
    if total != area:
        raise ValueError(f"degree mismatch: {total} boxes vs box area {area}")
    state = {(0,) * s: QQ(1)}
    for kind, m in factors:
        nxt = {}
        for lam, mult in state.items():
            for mu in pieri_multiply(lam, m, kind == "column", box):
                nxt[mu] = nxt.get(mu, QQ(0)) + mult
        state = {k: v for k, v in nxt.items() if v}
    full = (box[1],) * s
    return state.get(full, QQ(0))


def vanishing_range_check(k, s, n):
    """True iff sum(k) lies in the non-vanishing window [s-1, n]."""
    return s - 1 <= sum(k) <= n
