"""Picard groups: F-vectors, lattice normal forms, order formulas."""

from itertools import combinations_with_replacement, product

import pytest

from cichow.picard import (
    AbelianGroup,
    RepeatedExponents,
    block_f,
    f_vector_closed_form,
    f_vector_sum_form,
    group_from_relations,
    localization_identity_check,
    n_ddd,
    pic_pgl,
    pic_sl,
    smith_invariant_factors,
    tuple_multiplicity,
    _row_gcd_transform,
)
from cichow.relgen import make_profile
from cichow.schubert import grassmann_integral


def test_tuple_multiplicity_matches_schubert_integral():
    # mult(k) is the Grassmannian integral of the special-class product
    for n in range(2, 6):
        for s in range(2, n + 1):
            r = n - s + 2
            for k in product(range(s + 1), repeat=r):
                for i in range(r):
                    want = 0
                    if k[i] <= s - 1 and s - 1 <= sum(k) <= n:
                        factors = [
                            ("row", sum(k) - (s - 1)),
                            ("column", s - 1 - k[i]),
                        ] + [("column", s - kj) for j, kj in enumerate(k) if j != i]
                        want = grassmann_integral(factors, s, n)
                    assert tuple_multiplicity(k, i, s) == want, (n, s, k, i)


def test_multiplicity_is_one_for_r_at_most_two():
    for n in range(2, 7):
        s = n  # r = 2
        for k in product(range(s + 1), repeat=2):
            for i in range(2):
                m = tuple_multiplicity(k, i, s)
                if k[i] <= s - 1 and s - 1 <= sum(k) <= n:
                    assert m == 1
                else:
                    assert m == 0


def test_f_vector_sum_equals_closed_form():
    for n in range(2, 6):
        for r in range(1, min(3, n - 1) + 1):
            for degs in combinations_with_replacement(range(2, 6), r):
                p = make_profile(n, degs)
                if len(set(p.e)) != p.r:
                    continue
                assert f_vector_sum_form(p) == f_vector_closed_form(p), (n, degs)


def test_closed_form_rejects_repeats():
    with pytest.raises(RepeatedExponents):
        f_vector_closed_form(make_profile(3, (2, 2)))


def test_f_vector_spot_values():
    assert f_vector_sum_form(make_profile(3, (2, 2))) == [12, 12]
    assert f_vector_sum_form(make_profile(3, (2, 3))) == [33, 34]
    assert f_vector_sum_form(make_profile(4, (2, 2, 2))) == [40, 40, 40]


def test_localization_identity():
    assert localization_identity_check((1, 2), 3, 1)
    assert localization_identity_check((0, 1), 3, 2)
    assert localization_identity_check((1, 2, 3), 4, 1)
    assert localization_identity_check((1, 2, 3, 4), 5, 2)
    with pytest.raises(RepeatedExponents):
        localization_identity_check((1, 1), 3, 1)


def test_block_f_collapses_blocks():
    p = make_profile(4, (2, 2, 2))
    assert block_f(p) == [40]
    assert block_f(p, char2_doubling=True) == [80]
    q = make_profile(3, (2, 3))
    assert block_f(q) == [33, 34]


def test_smith_invariant_factors():
    assert smith_invariant_factors([[2, 0], [0, 3]]) == [1, 6]
    assert smith_invariant_factors([[2, 4, 4]]) == [2]
    assert smith_invariant_factors([[1, 0], [0, 0]]) == [1]
    assert smith_invariant_factors([]) == []


def test_group_from_relations():
    g = group_from_relations(2, [[12, 12]])
    assert (g.rank, g.torsion) == (1, (12,))
    assert str(AbelianGroup(1, (12,))) == "Z + Z/12"
    assert str(AbelianGroup(0, ())) == "0"


def test_pic_sl_spot_values():
    assert str(pic_sl(make_profile(3, (2, 3)))) == "Z"
    g = pic_sl(make_profile(3, (2, 2)))
    assert (g.rank, g.torsion) == (0, (12,))
    g = pic_sl(make_profile(4, (2, 2, 2)))
    assert (g.rank, g.torsion) == (0, (40,))


def test_row_gcd_transform_postcondition():
    for m in [[6, 10, 15], [4, 6], [0, 5], [7], [-3, 9, 12]]:
        g, U = _row_gcd_transform(m)
        ell = len(m)
        assert g >= 0
        assert sum(U[i][0] * m[i] for i in range(ell)) == g
        for j in range(1, ell):
            assert sum(U[i][j] * m[i] for i in range(ell)) == 0


def test_n_ddd_arithmetic():
    assert n_ddd(4, 2, 2) == 4
    assert n_ddd(3, 2, 2) == 12
    assert n_ddd(5, 3, 2) == 80
    with pytest.raises(ValueError):
        n_ddd(3, 3, 2)
    with pytest.raises(ValueError):
        n_ddd(3, 2, 1)


def test_pic_pgl_matches_order_formula():
    for n in range(2, 6):
        for r in range(1, n):
            for d in range(2, 5):
                g = pic_pgl(make_profile(n, (d,) * r))
                N = n_ddd(n, r, d)
                want = (0, (N,)) if N > 1 else (0, ())
                assert (g.rank, g.torsion) == want, (n, r, d)


def test_pic_pgl_spot_values():
    g = pic_pgl(make_profile(3, (2, 2)))
    assert (g.rank, g.torsion) == (0, (12,))
    g = pic_pgl(make_profile(3, (2, 3)))
    assert (g.rank, g.torsion) == (1, ())
    g = pic_pgl(make_profile(4, (2, 3)))
    assert (g.rank, g.torsion) == (1, (2,))


def test_char2_doubling_changes_torsion():
    base = pic_sl(make_profile(3, (2, 2)))
    doubled = pic_sl(make_profile(3, (2, 2)), char2_doubling=True)
    assert doubled.torsion == tuple(2 * t for t in base.torsion)
