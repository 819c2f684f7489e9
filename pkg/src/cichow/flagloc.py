"""Torus fixed points and localization pushforwards on the flag variety Fl(n+1, s).

Fl(n+1, s) parametrizes flags L < F < A^{n+1} with dim L = 1, dim F = s.
Fixed points of the diagonal torus are pairs (i1, I); the pushforward to a
point of a class in the Chern roots beta_1..beta_s of the dual tautological
bundle is the sum over fixed points of the restricted class divided by the
tangent Euler class.  The sum of rational functions is assembled over the
full Vandermonde determinant as common denominator and divided out exactly
at the end, which certifies polynomiality of the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .poly import InexactDivision, MPoly, QQ, VarRegistry


@dataclass(frozen=True)
class FixedPoint:
    """Torus-fixed flag <e_i1> < <e_i1, e_I> indexed by (i1, I)."""

    i1: int
    I: tuple

    def subset(self):
        return tuple(sorted((self.i1,) + self.I))


def t_names(n):
    return [f"t{i}" for i in range(1, n + 2)]


def beta_names(s):
    return [f"beta{j}" for j in range(1, s + 1)]


def make_t_registry(n):
    return VarRegistry([(v, 1) for v in t_names(n)])


def make_tb_registry(n, s):
    return VarRegistry([(v, 1) for v in t_names(n) + beta_names(s)])


def flag_dim(n, s):
    """Dimension of Fl(n+1, s): Grassmannian plus projective fiber."""
    return s * (n + 1 - s) + (s - 1)


def fixed_points(n, s):
    """All fixed points (i1, I), |I| = s-1, in lexicographic order."""
    if not 1 <= s <= n:
        raise ValueError(f"s={s} out of range for n={n}")
    pts = []
    for i1 in range(1, n + 2):
        rest = [i for i in range(1, n + 2) if i != i1]
        for I in combinations(rest, s - 1):
            pts.append(FixedPoint(i1, I))
    return pts


def tangent_euler(fp, n, s, reg=None):
    """Equivariant top Chern class of the tangent space at a fixed point."""
    reg = reg or make_t_registry(n)
    S = set(fp.subset())
    out = reg.one()
    for m in fp.I:
        out = out * (reg.var(f"t{m}") - reg.var(f"t{fp.i1}"))
    for j in sorted(S):
        for k in range(1, n + 2):
            if k not in S:
                out = out * (reg.var(f"t{k}") - reg.var(f"t{j}"))
    return out


def _divide_linear(terms, size, ia, ib):
    """Exact division of a term dict by (t_ia - t_ib); raises if inexact."""
    if not terms:
        return {}
    bydeg = {}
    for m, c in terms.items():
        k = m[ia]
        m0 = list(m)
        m0[ia] = 0
        key = tuple(m0)
        level = bydeg.setdefault(k, {})
        level[key] = level.get(key, 0) + c
    D = max(bydeg)
    out = {}

    def emit(level, k):
        for m0, c in level.items():
            m = list(m0)
            m[ia] = k
            out[tuple(m)] = c

    def shift_b(level):
        shifted = {}
        for m0, c in level.items():
            m = list(m0)
            m[ib] += 1
            shifted[tuple(m)] = c
        return shifted

    def merge(a, b):
        res = dict(a)
        for m, c in b.items():
            s2 = res.get(m, 0) + c
            if s2:
                res[m] = s2
            else:
                del res[m]
        return res

    qk = dict(bydeg.get(D, {}))
    emit(qk, D - 1)
    for k in range(D - 1, 0, -1):
        qk = merge(bydeg.get(k, {}), shift_b(qk))
        emit(qk, k - 1)
    rem = merge(bydeg.get(0, {}), shift_b(qk))
    if rem:
        raise InexactDivision("localization sum is not a polynomial")
    return {m: c for m, c in out.items() if c}


def _mul_linear(terms, ia, ib):
    """Multiply a term dict by (t_ia - t_ib)."""
    out = {}
    for m, c in terms.items():
        ma = list(m)
        ma[ia] += 1
        key = tuple(ma)
        s2 = out.get(key, 0) + c
        if s2:
            out[key] = s2
        else:
            del out[key]
        mb = list(m)
        mb[ib] += 1
        key = tuple(mb)
        s2 = out.get(key, 0) - c
        if s2:
            out[key] = s2
        else:
            del out[key]
    return out


def pushforward_flag(q, n, s):
    """Equivariant pushforward CH_T(Fl(n+1,s)) -> CH_T(pt) by localization.

    q is an MPoly on a registry containing t1..t{n+1} and beta1..beta{s};
    it must be symmetric in beta2..beta{s} (restriction assigns those roots
    to the unordered set I).  Returns an MPoly on the same registry, purely
    in the t variables.
    """
    reg = q.reg
    tidx = [reg.index(v) for v in t_names(n)]
    bidx = [reg.index(v) for v in beta_names(s)]
    allowed = set(tidx) | set(bidx)
    for m in q.terms:
        for i, e in enumerate(m):
            if e and i not in allowed:
                raise ValueError(f"unexpected variable {reg.names[i]} in pushforward")
    if q.is_zero():
        return reg.zero()
    # a homogeneous class of degree below dim Fl pushes forward to zero
    if q.is_homogeneous() and q.degree() < flag_dim(n, s):
        return reg.zero()

    size = reg.size
    universe = list(range(1, n + 2))

    def restrict(i1, I):
        # beta_1 -> -t_i1, beta_{j+1} -> -t_{I[j]}; monomial relabeling
        target = [tidx[i1 - 1]] + [tidx[m - 1] for m in I]
        out = {}
        for m, c in q.terms.items():
            exps = list(m)
            btot = 0
            for pos, bi in enumerate(bidx):
                e = exps[bi]
                if e:
                    btot += e
                    exps[bi] = 0
                    exps[target[pos]] += e
            key = tuple(exps)
            val = c if btot % 2 == 0 else -c
            s2 = out.get(key, 0) + val
            if s2:
                out[key] = s2
            else:
                del out[key]
        return out

    total = {}
    for S in combinations(universe, s):
        Sset = set(S)
        comp = [k for k in universe if k not in Sset]
        num_S = {}
        for i1 in S:
            I = tuple(m for m in S if m != i1)
            terms = restrict(i1, I)
            # cofactor: Vandermonde pairs inside S avoiding i1
            for a, b in combinations(S, 2):
                if a != i1 and b != i1:
                    terms = _mul_linear(terms, tidx[a - 1], tidx[b - 1])
            sign = (-1) ** sum(1 for m in I if m > i1)
            for m, c in terms.items():
                val = c if sign == 1 else -c
                s2 = num_S.get(m, 0) + val
                if s2:
                    num_S[m] = s2
                else:
                    del num_S[m]
        # complement Vandermonde
        for a, b in combinations(comp, 2):
            num_S = _mul_linear(num_S, tidx[a - 1], tidx[b - 1])
        # orientation of the mixed denominator prod_{j in S, k not in S} (t_k - t_j)
        sign = (-1) ** sum(1 for j in S for k in comp if k > j)
        for m, c in num_S.items():
            val = c if sign == 1 else -c
            s2 = total.get(m, 0) + val
            if s2:
                total[m] = s2
            else:
                del total[m]

    for a, b in combinations(universe, 2):
        total = _divide_linear(total, size, tidx[a - 1], tidx[b - 1])
    return MPoly(reg, total)


def segre_classes(reg, n, top, dual=False):
    """Segre classes s_0..s_top of the standard bundle V (or its dual).

    Defined by the formal inverse of the total Chern class; c_i(V) is the
    registry variable c{i}, and c_i(V^dual) = (-1)^i c{i}.
    """
    cs = []
    for i in range(1, n + 2):
        ci = reg.var(f"c{i}")
        cs.append(-ci if (dual and i % 2 == 1) else ci)
    segre = [reg.one()]
    for k in range(1, top + 1):
        acc = reg.zero()
        for i in range(1, min(k, n + 1) + 1):
            acc = acc - cs[i - 1] * segre[k - i]
        segre.append(acc)
    return segre


def pushforward_fl_r2(a, b, n, reg=None):
    """Closed-form pushforward of beta1^a * xi1^b on Fl(n, n+1).

    Fl(n, n+1) is the projectivization of Omega(1) over P^n = P(V^dual);
    the pushforward is expressed through Segre classes of V and V^dual:
    s_{a-n+1}(V) s_{b-n}(V*) + s_{a-n}(V) s_{b-n+1}(V*).
    Returns an MPoly in c1..c{n+1} (negative Segre indices vanish).
    """
    if a < 0 or b < 0:
        raise ValueError("exponents must be nonnegative")
    reg = reg or VarRegistry([(f"c{i}", i) for i in range(1, n + 2)])
    top = max(a - n + 1, b - n + 1, 0)
    sV = segre_classes(reg, n, top)
    sVd = segre_classes(reg, n, top, dual=True)

    def pick(table, k):
        return table[k] if 0 <= k < len(table) else reg.zero()

    return pick(sV, a - n + 1) * pick(sVd, b - n) + pick(sV, a - n) * pick(sVd, b - n + 1)
