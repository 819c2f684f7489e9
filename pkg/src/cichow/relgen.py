"""Relation-ideal generation for Chow rings of smooth complete intersections.

A Profile fixes the ambient dimension n and the hypersurface degrees
d_1 <= ... <= d_r.  The degree-one-and-up relations are pushforwards from
the flag variety Fl(n+1, s), s = n - r + 2, of the equivariant fundamental
class of the resolved discriminant multiplied by monomials P(beta_1, b_m).
Raw pushforwards live in the torus weights t and the gamma variables; they
are rewritten into the symmetric generators c_i = sigma_i(t) and
a_{j,k} = sigma_k(gamma-block j).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .flagloc import beta_names, flag_dim, pushforward_flag, t_names
from .poly import MPoly, VarRegistry
from .symfun import elementary_all_of, is_block_symmetric, rewrite_in_elementary


@dataclass(frozen=True)
class Profile:
    """Problem instance: complete intersections of type (d_1..d_r) in P^n."""

    n: int
    degrees: tuple
    r: int
    s: int
    ell: int
    block_sizes: tuple
    distinct_degrees: tuple
    e: tuple


def make_profile(n, degrees):
    degrees = tuple(sorted(int(d) for d in degrees))
    r = len(degrees)
    if n < 2:
        raise ValueError(f"n={n} must be at least 2")
    if not 0 < r < n:
        raise ValueError(f"need 0 < r < n, got r={r}, n={n}")
    if any(d < 2 for d in degrees):
        raise ValueError("every degree must be at least 2")
    distinct = []
    sizes = []
    for d in degrees:
        if distinct and distinct[-1] == d:
            sizes[-1] += 1
        else:
            distinct.append(d)
            sizes.append(1)
    return Profile(
        n=n,
        degrees=degrees,
        r=r,
        s=n - r + 2,
        ell=len(distinct),
        block_sizes=tuple(sizes),
        distinct_degrees=tuple(distinct),
        e=tuple(d - 1 for d in degrees),
    )


def gamma_names(r):
    return [f"gamma{i}" for i in range(1, r + 1)]


def a_names(p):
    """Symmetric gamma-block generators a{j}_{k}, degree k, per block."""
    out = []
    for j, size in enumerate(p.block_sizes, start=1):
        for k in range(1, size + 1):
            out.append((f"a{j}_{k}", k))
    return out


def c_names(n):
    return [(f"c{i}", i) for i in range(1, n + 2)]


def work_registry(p):
    """Registry for raw equivariant classes: t, gamma, beta (all degree 1)."""
    names = t_names(p.n) + gamma_names(p.r) + beta_names(p.s)
    return VarRegistry([(v, 1) for v in names])


def output_registry(p, group="gl"):
    """Registry of the presentation generators: c_i and a_{j,k}."""
    cs = c_names(p.n)
    if group in ("sl", "pgl"):
        cs = cs[1:]
    return VarRegistry(cs + a_names(p))


class Engine:
    """Shared state for relation generation on one profile.

    Caches the sigma tables of the linear forms e*beta_1 + beta_j and the
    pushforwards of C_s(a) * P, which depend only on the multiset of
    (e_i, a_i) pairs and on P.
    """

    def __init__(self, p):
        self.p = p
        self.reg = work_registry(p)
        self._sig = {}
        self._push = {}
        # intermediate registry: c generators plus untouched gammas
        self.reg_mid = VarRegistry(c_names(p.n) + [(g, 1) for g in gamma_names(p.r)])
        self.reg_out = output_registry(p, "gl")

    def sigma_table(self, e):
        """sigma_0..sigma_s of (e*beta_1 + beta_j), j = 1..s."""
        if e not in self._sig:
            reg = self.reg
            b1 = reg.var("beta1")
            forms = [b1 * e + reg.var(f"beta{j}") for j in range(1, self.p.s + 1)]
            self._sig[e] = elementary_all_of(reg, forms)
        return self._sig[e]

    def c_s_coefficient(self, a):
        """C_s(a) = prod_i sigma_{s-a_i} of the i-th block of linear forms."""
        p = self.p
        if len(a) != p.r or any(not 0 <= ai <= p.s for ai in a):
            raise ValueError(f"a={a} out of range [0, s]^r")
        out = self.reg.one()
        for e, ai in zip(p.e, a):
            out = out * self.sigma_table(e)[p.s - ai]
        return out

    def fundamental_class(self):
        """[W~] as a product of rs linear forms; asserted against the
        gamma-expansion sum of C_s(a) coefficients."""
        p, reg = self.p, self.reg
        b1 = reg.var("beta1")
        direct = reg.one()
        for i in range(1, p.r + 1):
            g = reg.var(f"gamma{i}")
            for j in range(1, p.s + 1):
                direct = direct * (g + b1 * p.e[i - 1] + reg.var(f"beta{j}"))
        expanded = reg.zero()
        for a in product(range(p.s + 1), repeat=p.r):
            mono = reg.monomial(1, {f"gamma{i+1}": a[i] for i in range(p.r)})
            expanded = expanded + mono * self.c_s_coefficient(a)
        if direct != expanded:
            raise AssertionError("fundamental-class expansions disagree")
        return direct

    def pushforward_c(self, a, P_beta):
        """pi_*(C_s(a) * P) rewritten in c_1..c_{n+1}, cached by multiset."""
        p = self.p
        key = (tuple(sorted(zip(p.e, a))), _poly_key(P_beta))
        if key not in self._push:
            q = self.c_s_coefficient(a) * P_beta
            raw = pushforward_flag(q, p.n, p.s)
            self._push[key] = rewrite_in_elementary(
                raw,
                t_names(p.n),
                [name for name, _ in c_names(p.n)],
                self.reg_mid,
            )
        return self._push[key]

    def relation_gamma(self, P_beta):
        """sum_a gamma^a * pi_*(C_s(a) * P), in c and raw gamma variables."""
        p = self.p
        total = self.reg_mid.zero()
        for a in product(range(p.s + 1), repeat=p.r):
            part = self.pushforward_c(a, P_beta)
            if part.is_zero():
                continue
            mono = self.reg_mid.monomial(1, {f"gamma{i+1}": a[i] for i in range(p.r)})
            total = total + mono * part
        return total

    def relation_for_P(self, P_beta):
        """sum_a gamma^a * pi_*(C_s(a) * P), in c and a_{j,k} generators."""
        return self.rewrite_gamma(self.relation_gamma(P_beta))

    def xi1(self):
        """The hyperplane class of the Grassmannian factor, as sigma_1(t)
        plus sigma_1(beta); restricts to the complement weight at every
        fixed point."""
        reg = self.reg
        out = reg.zero()
        for v in t_names(self.p.n) + beta_names(self.p.s):
            out = out + reg.var(v)
        return out

    def rewrite_gamma(self, poly_mid):
        """Rewrite each gamma-block into its a_{j,k} generators."""
        p = self.p
        blocks = []
        start = 0
        for size in p.block_sizes:
            blocks.append(gamma_names(p.r)[start : start + size])
            start += size
        if not is_block_symmetric(poly_mid, blocks):
            raise AssertionError("pushforward is not block-symmetric in gamma")
        cur = poly_mid
        cur_reg = self.reg_mid
        done = []
        for j, block in enumerate(blocks, start=1):
            targets = [f"a{j}_{k}" for k in range(1, len(block) + 1)]
            done.extend((t, k) for k, t in enumerate(targets, start=1))
            remaining = [
                (g, 1) for blk in blocks[j:] for g in blk
            ]
            nxt_reg = VarRegistry(
                c_names(p.n)
                + [(name, k) for k, name in ((k, t) for t, k in done)]
                + remaining
            )
            cur = rewrite_in_elementary(cur, block, targets, nxt_reg)
            cur_reg = nxt_reg
        return cur.convert(self.reg_out)


def _poly_key(p):
    return frozenset(p.terms.items())


def expand_P(p, reg, label, basis="b"):
    """Monomial label {var: exp} in (beta_1, b_m) or (beta_1, sigma_m) to a
    beta-polynomial on the work registry."""
    from .symfun import elementary_all

    out = reg.one()
    if basis == "b":
        tail = elementary_all(reg, beta_names(p.s)[1:])
    else:
        tail = elementary_all(reg, beta_names(p.s))
    for var, exp in label.items():
        if var == "beta1":
            out = out * reg.var("beta1") ** exp
        else:
            m = int(var[1:] if basis == "b" else var[5:])
            base = tail[m]
            if basis == "b" and m % 2 == 1:
                base = -base
            out = out * base**exp
    return out


def monomial_basis_P(p, max_rel_degree, basis="b"):
    """All P-monomial labels with beta_1-exponent < s, total degree <= rs-1,
    and total degree small enough to keep the relation within max_rel_degree.

    Returns a deterministic list of (degree, label) pairs, where degree is
    the relation degree rs + deg P - dim Fl.
    """
    rs = p.r * p.s
    dim = flag_dim(p.n, p.s)
    max_degP = min(rs - 1, max_rel_degree - rs + dim)
    names = "b" if basis == "b" else "sigma"
    out = []

    def rec(m, degP, label):
        if m > p.s - 1:
            out.append((rs + degP - dim, dict(label)))
            return
        var = f"{names}{m}" if basis == "sigma" else f"b{m}"
        e = 0
        while degP + e * m <= max_degP:
            if e:
                label[var] = e
            rec(m + 1, degP + e * m, label)
            if e:
                del label[var]
            e += 1

    for i in range(p.s):
        if i > max_degP:
            break
        rec(1, i, {"beta1": i} if i else {})
    out = [(d, lab) for d, lab in out if d >= 1]
    out.sort(key=lambda t: (t[0], sorted(t[1].items())))
    return out


def relation_generators(p, group="gl", max_degree=3, basis="b"):
    """The relation set of the presentation, up to relation degree max_degree.

    Returns a list of (degree, P-label, generator) with generators on
    output_registry(p, group); for sl/pgl the generators are reduced modulo
    c_1 = 0.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    eng = Engine(p)
    out_reg = output_registry(p, group)
    rs, dim = p.r * p.s, flag_dim(p.n, p.s)
    rels = []
    for deg, label in monomial_basis_P(p, max_degree, basis):
        P_beta = expand_P(p, eng.reg, label, basis)
        gen = eng.relation_for_P(P_beta)
        if gen.is_zero():
            continue
        if not (gen.is_homogeneous() and gen.degree() == deg):
            raise AssertionError(f"relation degree mismatch for P={label}")
        if group in ("sl", "pgl"):
            gen = gen.substitute({"c1": 0}).convert(out_reg)
        rels.append((deg, label, gen))
    return rels


def pure_pushforward(p, label, basis="sigma"):
    """pi_*(C_s(0,...,0) * P) in the c generators (gamma-free pushforward).

    Used for the higher-degree auxiliary relations, where P may carry a
    beta_1-exponent of s or more.
    """
    eng = Engine(p)
    P_beta = expand_P(p, eng.reg, label, basis)
    part = eng.pushforward_c((0,) * p.r, P_beta)
    return part.convert(eng.reg_out)
