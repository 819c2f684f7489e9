"""Integral Picard groups of moduli of smooth complete intersections.

The degree-one relation has integer coefficient vector F (the multidegree
of the discriminant).  F is computed canonically by the admissible-tuple
sum, verified against the closed form when the e_i are distinct, and fed
into integer-lattice computations: Pic of the SL-stack is Z^ell / <F>, and
the PGL-stack version quotients the sublattice of PGL-linearizable line
bundles instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb, gcd, lcm

from .poly import QQ


class RepeatedExponents(Exception):
    pass


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in invariant-factor normal form."""

    rank: int
    torsion: tuple  # invariant factors, each > 1, n_1 | n_2 | ...

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def tuple_multiplicity(k, i, s):
    """Multiplicity of the tuple k in the F-vector sum with special index i.

    This counts subsets S of {j != i} with |S| = sum(k) - (s-1) such that
    subtracting one from k_j for j in S leaves every entry in [0, s-1];
    it equals the Grassmannian integral of the corresponding product of
    special Schubert classes.  Zero outside the window s-1 <= sum k <= n,
    and 1 on every admissible tuple when r <= 2.
    """
    r = len(k)
    if k[i] > s - 1 or any(kj < 0 or kj > s for kj in k):
        return 0
    size = sum(k) - (s - 1)
    if size < 0:
        return 0
    forced = sum(1 for j in range(r) if j != i and k[j] == s)
    optional = sum(1 for j in range(r) if j != i and 1 <= k[j] <= s - 1)
    if forced > size:
        return 0
    return comb(optional, size - forced)


def f_vector_sum_form(p):
    """F_i = sum over tuples (k_1..k_r) of (k_i+1) * mult(k) * e^k.

    mult is tuple_multiplicity; only tuples in the admissible window
    s-1 <= sum k <= n with k_i <= s-1 contribute.  Always integral; the
    canonical F.
    """
    r, s, e = p.r, p.s, p.e
    F = [0] * r
    for k in product(range(s + 1), repeat=r):
        weight = 1
        for ei, ki in zip(e, k):
            weight *= ei**ki
        for i in range(r):
            m = tuple_multiplicity(k, i, s)
            if m:
                F[i] += (k[i] + 1) * m * weight
    return F


def _power_quotient(ei, ej, n):
    """(e_i^{n+1} - e_j^{n+1})/(e_i - e_j) as the polynomial sum, valid
    also on the diagonal e_i = e_j."""
    return sum(ei ** (n - k) * ej**k for k in range(n + 1))


def f_vector_closed_form(p):
    """Benoist's closed form for F; requires pairwise distinct e_i."""
    r, n, e, d = p.r, p.n, p.e, p.degrees
    if len(set(e)) != r:
        raise RepeatedExponents("closed form needs pairwise distinct e_i")
    F = []
    for i in range(r):
        dprod = 1
        for i2 in range(r):
            if i2 != i:
                dprod *= d[i2]
        acc = QQ(0)
        for j in range(r):
            den = 1
            for j2 in range(r):
                if j2 != j:
                    den *= e[j] - e[j2]
            acc += QQ(_power_quotient(e[i], e[j], n), den)
        val = dprod * acc
        if val.denominator != 1:
            raise AssertionError(f"closed form not integral: {val}")
        F.append(int(val))
    return F


def localization_identity_check(e, n, i):
    """Check the localization identity behind the closed form for F.

    e is a tuple of pairwise distinct integers >= 0, i is 1-based.  The
    left side uses the degrees d_j = e_j + 1; the right side is the
    admissible-tuple sum with r = len(e) and s = n - r + 2.
    """
    e = tuple(e)
    r = len(e)
    s = n - r + 2
    if len(set(e)) != r:
        raise RepeatedExponents("identity needs pairwise distinct e_j")
    i -= 1
    dprod = 1
    for j in range(r):
        if j != i:
            dprod *= e[j] + 1
    lhs = QQ(0)
    for j in range(r):
        den = 1
        for j2 in range(r):
            if j2 != j:
                den *= e[j] - e[j2]
        lhs += QQ(_power_quotient(e[i], e[j], n), den)
    lhs *= dprod
    rhs = 0
    for k in product(range(s + 1), repeat=r):
        m = tuple_multiplicity(k, i, s)
        if m:
            weight = 1
            for ej, kj in zip(e, k):
                weight *= ej**kj
            rhs += (k[i] + 1) * m * weight
    return lhs == rhs


def block_f(p, char2_doubling=False):
    """F collapsed to one integer per degree block (coefficient of a_{j,1})."""
    F = f_vector_sum_form(p)
    out = []
    start = 0
    for size in p.block_sizes:
        block = F[start : start + size]
        if len(set(block)) != 1:
            raise AssertionError("F is not block-constant")
        out.append(block[0] * (2 if char2_doubling else 1))
        start += size
    return out


def smith_invariant_factors(rows):
    """Invariant factors of an integer matrix (list of row lists)."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return []
    nr, nc = len(m), len(m[0])
    factors = []
    top = 0
    while top < min(nr, nc):
        # find the nonzero entry of smallest absolute value
        best = None
        for i in range(top, nr):
            for j in range(top, nc):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[top], m[bi] = m[bi], m[top]
        for row in m:
            row[top], row[bj] = row[bj], row[top]
        pivot = m[top][top]
        dirty = False
        for i in range(top + 1, nr):
            q = m[i][top] // pivot
            if q:
                for j in range(top, nc):
                    m[i][j] -= q * m[top][j]
            if m[i][top]:
                dirty = True
        for j in range(top + 1, nc):
            q = m[top][j] // pivot
            if q:
                for i in range(top, nr):
                    m[i][j] -= q * m[i][top]
            if m[top][j]:
                dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry
        ok = all(
            m[i][j] % pivot == 0 for i in range(top + 1, nr) for j in range(top + 1, nc)
        )
        if not ok:
            bad = next(
                (i, j)
                for i in range(top + 1, nr)
                for j in range(top + 1, nc)
                if m[i][j] % pivot
            )
            for j in range(top, nc):
                m[top][j] += m[bad[0]][j]
            continue
        factors.append(abs(pivot))
        top += 1
    return factors


def group_from_relations(ell, rows):
    """Z^ell modulo the subgroup generated by the given integer rows."""
    factors = smith_invariant_factors(rows) if rows else []
    rank = ell - len(factors)
    torsion = tuple(f for f in factors if f > 1)
    if any(f == 0 for f in factors):
        raise AssertionError("zero invariant factor from nonzero relations")
    return AbelianGroup(rank=rank, torsion=torsion)


def pic_sl(p, char2_doubling=False):
    """Pic of the SL-stack: Z^ell modulo the single relation F."""
    F = block_f(p, char2_doubling)
    return group_from_relations(p.ell, [F])


def _row_gcd_transform(m):
    """Unimodular column operations sending the row m to (g, 0, ..., 0).

    Returns (g, U) with U an ell x ell integer matrix of determinant +-1
    whose first column w satisfies sum w_j m_j = g and whose remaining
    columns span the kernel lattice of x -> sum x_j m_j.
    """
    ell = len(m)
    row = list(m)
    U = [[1 if i == j else 0 for j in range(ell)] for i in range(ell)]

    def colop(j1, j2, a, b, c, d):
        # (col j1, col j2) <- (a*col j1 + b*col j2, c*col j1 + d*col j2)
        for i in range(ell):
            x, y = U[i][j1], U[i][j2]
            U[i][j1], U[i][j2] = a * x + b * y, c * x + d * y
        x, y = row[j1], row[j2]
        row[j1], row[j2] = a * x + b * y, c * x + d * y

    for j in range(1, ell):
        if row[j] == 0:
            continue
        if row[0] == 0:
            colop(0, j, 0, 1, -1, 0)
            continue
        # extended gcd of row[0], row[j]
        a, b = row[0], row[j]
        old_r, r = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        g = old_r
        colop(0, j, old_s, old_t, -(b // g), a // g)
    if row[0] < 0:
        for i in range(ell):
            U[i][0] = -U[i][0]
        row[0] = -row[0]
    return row[0], U


def _solve_integer(B, F):
    """Solve B x = F exactly (B square, nonsingular); assert integrality."""
    ell = len(F)
    aug = [[QQ(B[i][j]) for j in range(ell)] + [QQ(F[i])] for i in range(ell)]
    for col in range(ell):
        piv = next(i for i in range(col, ell) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for i in range(ell):
            if i != col and aug[i][col]:
                c = aug[i][col]
                aug[i] = [v - c * w for v, w in zip(aug[i], aug[col])]
    x = [aug[i][ell] for i in range(ell)]
    if any(v.denominator != 1 for v in x):
        raise AssertionError("F does not lie in the PGL-linearizable lattice")
    return [int(v) for v in x]


def pic_pgl(p, char2_doubling=False):
    """Pic of the PGL-stack via the linearizable sublattice of Z^ell.

    The sublattice is Lambda + <u*w> where Lambda is the kernel of
    x -> sum x_j r_j d'_j, w realizes the gcd of the r_j d'_j, and
    u = lcm(n+1, gcd)/gcd.  The group is that lattice modulo F.
    """
    ell = p.ell
    m = [rj * dj for rj, dj in zip(p.block_sizes, p.distinct_degrees)]
    g, U = _row_gcd_transform(m)
    if sum(U[i][0] * m[i] for i in range(ell)) != g:
        raise AssertionError("extended gcd postcondition failed")
    u = lcm(p.n + 1, g) // g
    # basis of the sublattice: u*w followed by the kernel columns of U
    B = [[U[i][0] * u if j == 0 else U[i][j] for j in range(ell)] for i in range(ell)]
    F = block_f(p, char2_doubling)
    x = _solve_integer(B, F)
    return group_from_relations(ell, [x])


def n_ddd(n, r, d):
    """Order of Pic of the PGL-stack for type (d,...,d)."""
    if not 0 < r < n:
        raise ValueError("need 0 < r < n")
    if d < 2:
        raise ValueError("need d >= 2")
    num = comb(n + 1, r) * r * d**r * (d - 1) ** (n - r + 1)
    den = lcm(n + 1, r * d)
    if num % den:
        raise AssertionError("N is not integral")
    return num // den
