"""Symmetric-function rewriting against brute-force references."""

from itertools import combinations

import pytest

from cichow.poly import VarRegistry
from cichow.symfun import (
    NotSymmetric,
    elementary_all,
    elementary_symmetric,
    is_block_symmetric,
    rewrite_in_elementary,
)


@pytest.fixture
def reg():
    return VarRegistry([("x1", 1), ("x2", 1), ("x3", 1), ("u", 1)])


def brute_elementary(reg, names, k):
    out = reg.one() if k == 0 else reg.zero()
    for combo in combinations(names, k):
        term = reg.one()
        for v in combo:
            term = term * reg.var(v)
        if k:
            out = out + term
    return out


def test_elementary_vs_brute_force(reg):
    names = ["x1", "x2", "x3"]
    for k in range(4):
        assert elementary_symmetric(reg, names, k) == brute_elementary(reg, names, k)
    assert elementary_all(reg, names) == [
        brute_elementary(reg, names, k) for k in range(4)
    ]


def test_elementary_out_of_range(reg):
    with pytest.raises(ValueError):
        elementary_symmetric(reg, ["x1", "x2"], 3)


def test_block_symmetry(reg):
    sym = elementary_symmetric(reg, ["x1", "x2", "x3"], 2) * reg.var("u")
    assert is_block_symmetric(sym, [["x1", "x2", "x3"]])
    assert not is_block_symmetric(reg.var("x1"), [["x1", "x2"]])


def test_rewrite_roundtrip(reg):
    names = ["x1", "x2", "x3"]
    out_reg = VarRegistry([("s1", 1), ("s2", 2), ("s3", 3), ("u", 1)])
    # power sum p_3 = s1^3 - 3 s1 s2 + 3 s3
    p3 = sum((reg.var(v) ** 3 for v in names), reg.zero())
    rewritten = rewrite_in_elementary(p3, names, ["s1", "s2", "s3"], out_reg)
    expected = (
        out_reg.var("s1") ** 3
        - 3 * out_reg.var("s1") * out_reg.var("s2")
        + 3 * out_reg.var("s3")
    )
    assert rewritten == expected
    # substitute the elementary polynomials back in and compare
    sigmas = elementary_all(reg, names)
    subs = {"s1": sigmas[1], "s2": sigmas[2], "s3": sigmas[3]}
    recomposed = reg.zero()
    for m, c in rewritten.terms.items():
        term = reg.const(c)
        for i, e in enumerate(m):
            if e:
                name = out_reg.names[i]
                base = subs[name] if name in subs else reg.var(name)
                term = term * base**e
        recomposed = recomposed + term
    assert recomposed == p3


def test_rewrite_with_outer_variables(reg):
    names = ["x1", "x2"]
    out_reg = VarRegistry([("s1", 1), ("s2", 2), ("u", 1), ("x3", 1)])
    p = reg.var("u") * (reg.var("x1") + reg.var("x2")) + reg.var("x3") ** 2
    rewritten = rewrite_in_elementary(p, names, ["s1", "s2"], out_reg)
    assert rewritten == out_reg.var("u") * out_reg.var("s1") + out_reg.var("x3") ** 2


def test_rewrite_sign_alternating(reg):
    names = ["x1", "x2"]
    out_reg = VarRegistry([("b1", 1), ("b2", 2)])
    p = elementary_symmetric(reg, names, 1)
    q = elementary_symmetric(reg, names, 2)
    assert rewrite_in_elementary(p, names, ["b1", "b2"], out_reg, True) == -out_reg.var(
        "b1"
    )
    assert rewrite_in_elementary(q, names, ["b1", "b2"], out_reg, True) == out_reg.var(
        "b2"
    )


def test_rewrite_rejects_asymmetric(reg):
    out_reg = VarRegistry([("s1", 1), ("s2", 2)])
    with pytest.raises(NotSymmetric):
        rewrite_in_elementary(reg.var("x1"), ["x1", "x2"], ["s1", "s2"], out_reg)
