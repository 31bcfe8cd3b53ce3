from itertools import product

import pytest

from oscitab.polyring import (
    SparsePoly,
    f_expansion,
    fundamental_qsym,
    is_symmetric,
    littlewood_truncated,
    monomial_qsym,
    schur_expand,
    schur_poly,
    ssot_poly,
)
from oscitab.shapes import (
    even_conjugate_partitions,
    flat,
    in_N,
    partitions_of,
    trim,
)
from oscitab.tableaux import des_syt, enumerate_syt


def poly_from_pairs(k, pairs):
    return SparsePoly(k, dict(pairs))


def test_ring_operations():
    x1 = SparsePoly.variable(0, 2)
    x2 = SparsePoly.variable(1, 2)
    assert x1 * x2 == poly_from_pairs(2, {(1, 1): 1})
    one = SparsePoly.one(2)
    f = one + x1 * x2
    assert f.truncated_mul(f, 2) == poly_from_pairs(2, {(0, 0): 1, (1, 1): 2})
    assert f * one == f
    assert (f - f).is_zero()
    with pytest.raises(ValueError):
        x1 + SparsePoly.variable(0, 3)


def test_poly_json_round_trip():
    f = poly_from_pairs(3, {(2, 1, 0): 1, (0, 0, 3): -7})
    data = f.to_dict()
    assert data["terms"][0] == {"exp": [2, 1, 0], "coef": "1"}
    assert SparsePoly.from_dict(data) == f


def test_monomial_qsym():
    assert monomial_qsym((2,), 2) == poly_from_pairs(2, {(2, 0): 1, (0, 2): 1})
    assert monomial_qsym((1, 1), 2) == poly_from_pairs(2, {(1, 1): 1})
    # independent enumeration: weak compositions in 3 parts flattening to (2,1)
    expected = {}
    for c in product(range(4), repeat=3):
        if flat(c) == (2, 1):
            expected[c] = 1
    assert monomial_qsym((2, 1), 3) == poly_from_pairs(3, expected)
    assert monomial_qsym((2, 1), 1).is_zero()


def test_fundamental_qsym():
    assert fundamental_qsym((1,), 2) == poly_from_pairs(2, {(1, 0): 1, (0, 1): 1})
    assert fundamental_qsym((2,), 2) == monomial_qsym((2,), 2) + monomial_qsym((1, 1), 2)
    assert fundamental_qsym((3, 2), 3).coefficient((3, 2, 0)) == 1
    assert not fundamental_qsym((2, 1), 2).is_zero()
    assert fundamental_qsym((1, 1, 1), 2).is_zero()


def test_schur_poly():
    assert schur_poly((1,), 3) == poly_from_pairs(3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    assert schur_poly((1, 1), 2) == poly_from_pairs(2, {(1, 1): 1})
    f = schur_poly((2, 1), 3)
    assert f.evaluate((1, 1, 1)) == 8
    assert is_symmetric(f)
    assert schur_poly((1, 1, 1), 2).is_zero()
    assert schur_poly((), 2) == SparsePoly.one(2)


def test_ssot_poly_examples():
    assert ssot_poly((2, 1), 3, 3) == schur_poly((2, 1), 3)
    assert ssot_poly((2, 1), 4, 3).is_zero()
    f = ssot_poly((2, 1), 5, 3)
    expansion = f_expansion((2, 1), 5, 3)
    total = SparsePoly(3)
    for a, c in expansion.items():
        total = total + fundamental_qsym(a, 3).scale(c)
    assert f == total
    assert f.is_homogeneous() and f.degree() == 5


def test_f_expansion_paper_values():
    assert f_expansion((2, 1), 5, 3) == {
        (3, 2): 1,
        (3, 1, 1): 1,
        (2, 3): 1,
        (2, 2, 1): 3,
        (2, 1, 2): 2,
        (1, 3, 1): 2,
        (1, 2, 2): 3,
        (1, 1, 3): 1,
    }
    assert f_expansion((1,), 1, 1) == {(1,): 1}
    assert f_expansion((2, 1), 5, 2) == {(3, 2): 1, (2, 3): 1}


def test_f_expansion_oracle_exhaustive():
    # generating polynomial equals the fundamental expansion, small shapes
    for m in range(4):
        for lam in partitions_of(m):
            for n in range(m, m + 5):
                if not in_N(lam, n):
                    continue
                for k in range(1, 5):
                    lhs = ssot_poly(lam, n, k)
                    rhs = SparsePoly(k)
                    for a, c in f_expansion(lam, n, k).items():
                        rhs = rhs + fundamental_qsym(a, k).scale(c)
                    assert lhs == rhs, (lam, n, k)
                    assert all(c > 0 for c in f_expansion(lam, n, k).values())


def test_gessel_expansion_of_schur():
    for m in range(1, 6):
        for lam in partitions_of(m):
            k = m
            total = SparsePoly(k)
            for T in enumerate_syt(lam):
                total = total + fundamental_qsym(des_syt(T), k)
            assert total == schur_poly(lam, k), lam


def test_littlewood_truncated():
    assert littlewood_truncated(2, 4) == poly_from_pairs(
        2, {(0, 0): 1, (1, 1): 1, (2, 2): 1}
    )
    assert littlewood_truncated(3, 2) == poly_from_pairs(
        3, {(0, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
    )
    assert littlewood_truncated(1, 5) == SparsePoly.one(1)


def test_pair_series_product_low_variable_counts():
    # the full generating function factors through the truncated pair series
    for k in (1, 2):
        for lam in ((1,), (1, 1)):
            maxdeg = sum(lam) + 4
            total = SparsePoly(k)
            for n in range(sum(lam), maxdeg + 1):
                total = total + ssot_poly(lam, n, k)
            rhs = littlewood_truncated(k, maxdeg - sum(lam)).truncated_mul(
                schur_poly(lam, k) if len(lam) <= k else SparsePoly(k), maxdeg
            )
            assert total == rhs, (lam, k)


def test_littlewood_equals_even_conjugate_schur_sum():
    for k in range(1, 4):
        for d in range(7):
            total = SparsePoly(k)
            for size in range(0, d + 1, 2):
                for beta in even_conjugate_partitions(size):
                    total = total + schur_poly(beta, k)
            assert littlewood_truncated(k, d) == total, (k, d)


def test_is_symmetric():
    assert is_symmetric(ssot_poly((2, 1), 5, 3))
    assert not is_symmetric(poly_from_pairs(2, {(2, 1): 1}))
    assert not is_symmetric(monomial_qsym((2, 1), 3))
    assert is_symmetric(SparsePoly.zero(3))


def test_ssot_poly_symmetric_small():
    for m in range(4):
        for lam in partitions_of(m):
            for n in range(m, m + 5):
                if not in_N(lam, n):
                    continue
                for k in range(1, 5):
                    assert is_symmetric(ssot_poly(lam, n, k)), (lam, n, k)


def test_schur_expand():
    assert schur_expand(schur_poly((2, 1), 4)) == {(2, 1): 1}
    assert schur_expand(ssot_poly((2, 1), 5, 5)) == {
        (3, 2): 1,
        (3, 1, 1): 1,
        (2, 2, 1): 1,
        (2, 1, 1, 1): 1,
    }
    square = schur_poly((1,), 2) * schur_poly((1,), 2)
    assert schur_expand(square) == {(2,): 1, (1, 1): 1}
    assert schur_expand(SparsePoly.zero(3)) == {}


def test_schur_expand_unit_vectors():
    for m in range(1, 6):
        for nu in partitions_of(m):
            assert schur_expand(schur_poly(nu, m)) == {nu: 1}


def test_schur_expand_errors():
    with pytest.raises(ValueError):
        schur_expand(poly_from_pairs(2, {(2, 1): 1}))  # not symmetric
    with pytest.raises(ValueError):
        schur_expand(schur_poly((2, 1), 2))  # 2 variables for degree 3
    mixed = SparsePoly.one(2) + schur_poly((1,), 2)
    with pytest.raises(ValueError):
        schur_expand(mixed)


def test_lr_polynomial_oracle():
    # products of small Schur polynomials expand with LR multiplicities
    from oscitab.tableaux import lr_coefficient

    for total_size in range(1, 6):
        for a in range(total_size + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(total_size - a):
                    k = total_size
                    prod = schur_poly(lam, k) * schur_poly(mu, k)
                    expected = SparsePoly(k)
                    for nu in partitions_of(total_size):
                        c = lr_coefficient(lam, mu, nu)
                        if c:
                            expected = expected + schur_poly(nu, k).scale(c)
                    assert prod == expected, (lam, mu)


def test_composition_keys_are_trimmed():
    for a in f_expansion((2, 1), 5, 3):
        assert a == trim(a) and all(p > 0 for p in a)
