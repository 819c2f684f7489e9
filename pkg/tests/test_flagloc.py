"""Localization on Fl(n+1, s): fixed points, Euler classes, pushforwards."""

import pytest

from cichow.flagloc import (
    beta_names,
    fixed_points,
    flag_dim,
    make_t_registry,
    make_tb_registry,
    pushforward_fl_r2,
    pushforward_flag,
    segre_classes,
    tangent_euler,
    t_names,
)
from cichow.poly import VarRegistry
from cichow.symfun import elementary_symmetric, is_block_symmetric, rewrite_in_elementary


def test_fixed_point_counts():
    assert len(fixed_points(1, 1)) == 2
    assert len(fixed_points(2, 2)) == 6
    assert len(fixed_points(4, 3)) == 30
    with pytest.raises(ValueError):
        fixed_points(3, 4)


def test_tangent_euler_projective_line():
    reg = make_t_registry(1)
    fps = fixed_points(1, 1)
    eulers = {fp.i1: tangent_euler(fp, 1, 1, reg) for fp in fps}
    t1, t2 = reg.var("t1"), reg.var("t2")
    assert eulers[1] == t2 - t1
    assert eulers[2] == t1 - t2


def test_tangent_euler_degree():
    for n, s in [(2, 1), (3, 2), (4, 3)]:
        fp = fixed_points(n, s)[0]
        e = tangent_euler(fp, n, s)
        assert e.is_homogeneous()
        assert e.degree() == flag_dim(n, s)


def test_pushforward_point_classes():
    # integral of beta1^n over P^n is 1
    for n in (1, 2, 3):
        reg = make_tb_registry(n, 1)
        q = reg.var("beta1") ** n
        assert pushforward_flag(q, n, 1) == reg.one()


def test_pushforward_low_degree_vanishes():
    reg = make_tb_registry(2, 2)
    assert pushforward_flag(reg.one(), 2, 2).is_zero()
    assert pushforward_flag(reg.var("beta1"), 2, 2).is_zero()
    assert pushforward_flag(reg.zero(), 2, 2).is_zero()


def test_pushforward_linearity_across_degrees():
    # the low-degree shortcut must agree with linearity of the pushforward
    n, s = 2, 2
    reg = make_tb_registry(n, s)
    top = reg.var("beta1") ** 2 * elementary_symmetric(reg, beta_names(s), 1)
    low = reg.var("beta1")
    assert pushforward_flag(top + low, n, s) == pushforward_flag(
        top, n, s
    ) + pushforward_flag(low, n, s)


def test_pushforward_t_symmetric_and_degree():
    n, s = 3, 2
    reg = make_tb_registry(n, s)
    q = reg.var("beta1") ** 3 * elementary_symmetric(reg, beta_names(s), 1) ** 4
    out = pushforward_flag(q, n, s)
    assert not out.is_zero()
    assert is_block_symmetric(out, [t_names(n)])
    assert out.is_homogeneous()
    assert out.degree() == q.degree() - flag_dim(n, s)


def test_pushforward_rejects_foreign_variables():
    reg = VarRegistry([(v, 1) for v in t_names(2) + beta_names(1) + ["u"]])
    with pytest.raises(ValueError):
        pushforward_flag(reg.var("u") * reg.var("beta1") ** 2, 2, 1)


def test_segre_dual_is_sign_twist():
    reg = VarRegistry([(f"c{i}", i) for i in range(1, 5)])
    s_v = segre_classes(reg, 3, 4)
    s_dual = segre_classes(reg, 3, 4, dual=True)
    twist = {f"c{i}": -reg.var(f"c{i}") for i in (1, 3)}
    for k in range(5):
        assert s_dual[k] == s_v[k].substitute(twist)


def test_segre_inverts_chern():
    # total Segre class times total Chern class is 1, degree by degree
    n, top = 3, 5
    reg = VarRegistry([(f"c{i}", i) for i in range(1, n + 2)])
    s_v = segre_classes(reg, n, top)
    for k in range(1, top + 1):
        acc = s_v[k]
        for i in range(1, min(k, n + 1) + 1):
            acc = acc + reg.var(f"c{i}") * s_v[k - i]
        assert acc.is_zero()


def _closed_vs_localized(n, a, b):
    s = n
    reg = make_tb_registry(n, s)
    xi1 = sum((reg.var(v) for v in t_names(n) + beta_names(s)), reg.zero())
    q = reg.var("beta1") ** a * xi1**b
    raw = pushforward_flag(q, n, s)
    creg = VarRegistry([(f"c{i}", i) for i in range(1, n + 2)])
    localized = rewrite_in_elementary(raw, t_names(n), [f"c{i}" for i in range(1, n + 2)], creg)
    return localized, pushforward_fl_r2(a, b, n, creg)


def test_pushforward_fl_r2_top_class():
    for n in (2, 3):
        reg = VarRegistry([(f"c{i}", i) for i in range(1, n + 2)])
        assert pushforward_fl_r2(n - 1, n, n, reg) == reg.one()


def test_pushforward_fl_r2_matches_localization():
    for n in (2, 3):
        for a in range(0, n + 1):
            for b in range(0, n + 2):
                localized, closed = _closed_vs_localized(n, a, b)
                assert localized == closed, (n, a, b)


def test_pushforward_fl_r2_rejects_negative():
    with pytest.raises(ValueError):
        pushforward_fl_r2(-1, 0, 3)
