"""Symmetric-function calculus on sparse polynomials.

Elementary symmetric polynomials, block-symmetry checks, and rewriting of
symmetric polynomials in terms of elementary generators (the classical
leading-term elimination algorithm).
"""

from __future__ import annotations


class NotSymmetric(Exception):
    pass


def elementary_symmetric(reg, var_names, k):
    """sigma_k of the named variables; sigma_0 = 1."""
    n = len(var_names)
    if k < 0 or k > n:
        raise ValueError(f"k={k} out of range for {n} variables")
    # coefficient extraction from prod (1 + x_i z), done degree by degree
    layers = [reg.one()] + [reg.zero() for _ in range(k)]
    for v in var_names:
        x = reg.var(v)
        for d in range(k, 0, -1):
            layers[d] = layers[d] + layers[d - 1] * x
    return layers[k]


def elementary_all(reg, var_names):
    """All sigma_0..sigma_n of the named variables, as a list."""
    n = len(var_names)
    layers = [reg.one()] + [reg.zero() for _ in range(n)]
    for v in var_names:
        x = reg.var(v)
        for d in range(n, 0, -1):
            layers[d] = layers[d] + layers[d - 1] * x
    return layers


def elementary_all_of(reg, polys):
    """sigma_0..sigma_len(polys) of arbitrary polynomial arguments."""
    n = len(polys)
    layers = [reg.one()] + [reg.zero() for _ in range(n)]
    for x in polys:
        for d in range(n, 0, -1):
            layers[d] = layers[d] + layers[d - 1] * x
    return layers


def _swap_exps(m, i, j):
    m = list(m)
    m[i], m[j] = m[j], m[i]
    return tuple(m)


def is_symmetric_in(p, block):
    """True iff p is invariant under adjacent transpositions of the block."""
    idx = [p.reg.index(v) for v in block]
    for a, b in zip(idx, idx[1:]):
        swapped = {_swap_exps(m, a, b): c for m, c in p.terms.items()}
        if swapped != p.terms:
            return False
    return True


def is_block_symmetric(p, blocks):
    """True iff p is invariant under permutations within every block."""
    return all(is_symmetric_in(p, block) for block in blocks)


def rewrite_in_elementary(p, block, targets, out_reg, sign_alternating=False):
    """Rewrite p, symmetric in `block`, as a polynomial in elementary generators.

    block    -- variable names (in p's registry) to eliminate
    targets  -- names in out_reg for sigma_1..sigma_len(block); the k-th
                target must carry weight k in out_reg
    out_reg  -- registry of the result; variables of p outside the block
                must exist there under the same name
    sign_alternating -- map sigma_k to (-1)^k * target_k (the b_m convention)

    Raises NotSymmetric if p is not invariant in the block.
    """
    reg = p.reg
    if not is_symmetric_in(p, block):
        raise NotSymmetric(f"polynomial is not symmetric in block {block}")
    for k, t in enumerate(targets, start=1):
        if out_reg.degrees[out_reg.index(t)] != k * reg.degrees[reg.index(block[0])]:
            raise ValueError(f"target {t} has wrong weight")
    bidx = [reg.index(v) for v in block]
    bset = set(bidx)
    nblock = len(bidx)
    others = [i for i in range(reg.size) if i not in bset]

    sigmas = elementary_all(reg, block)

    # split terms by their exponents outside the block
    groups = {}
    for m, c in p.terms.items():
        outer = tuple(m[i] for i in others)
        inner = tuple(m[i] for i in bidx)
        groups.setdefault(outer, {})[inner] = c

    result = out_reg.zero()
    for outer, inner_terms in groups.items():
        outer_exps = {}
        for pos, i in enumerate(others):
            if outer[pos]:
                outer_exps[reg.names[i]] = outer[pos]
        rewritten = _rewrite_pure(
            inner_terms, nblock, sigmas, bidx, reg, targets, out_reg, sign_alternating
        )
        result = result + out_reg.monomial(1, outer_exps) * rewritten
    return result


def _rewrite_pure(terms, nblock, sigmas, bidx, reg, targets, out_reg, sign_alternating):
    """Leading-term elimination for a polynomial purely in the block variables.

    `terms` maps block-exponent tuples to coefficients.  Each step removes
    the lex-leading monomial c*x^lam (lam weakly decreasing by symmetry) by
    subtracting c * prod sigma_k^(lam_k - lam_{k+1}); the lex leader
    strictly decreases, so the loop terminates.
    """
    work = dict(terms)
    out = out_reg.zero()
    while work:
        lam = max(work)
        c = work[lam]
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise NotSymmetric("lex-leading exponent is not weakly decreasing")
        mults = [0] * (nblock + 1)
        for k in range(nblock):
            nxt = lam[k + 1] if k + 1 < nblock else 0
            mults[k + 1] = lam[k] - nxt
        prod = reg.one()
        sign = 1
        target_exps = {}
        for k in range(1, nblock + 1):
            if mults[k]:
                prod = prod * sigmas[k] ** mults[k]
                target_exps[targets[k - 1]] = mults[k]
                if sign_alternating and (k % 2 == 1) and (mults[k] % 2 == 1):
                    sign = -sign
        out = out + out_reg.monomial(c * sign, target_exps)
        for m, pc in prod.terms.items():
            inner = tuple(m[i] for i in bidx)
            s = work.get(inner, 0) - c * pc
            if s:
                work[inner] = s
            else:
                work.pop(inner, None)
    return out
