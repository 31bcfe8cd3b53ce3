from itertools import combinations_with_replacement

import pytest

from oscitab.analysis import (
    hall_inner,
    has_snp,
    in_convex_hull,
    independence_rank,
    n_similar,
    n_zero,
    rational_rank,
    ssot_schur,
)
from oscitab.polyring import SparsePoly, schur_expand, ssot_poly
from oscitab.shapes import dominance_leq, lambda_bar, partitions_of, v_set


def test_ssot_schur_paper_example():
    expansion = ssot_schur((2, 1), 5)
    assert expansion.degree == 5
    assert expansion.coefficients == {
        (3, 2): 1,
        (3, 1, 1): 1,
        (2, 2, 1): 1,
        (2, 1, 1, 1): 1,
    }


def test_ssot_schur_trivial_degree():
    for lam in ((), (1,), (3, 1), (2, 2)):
        assert ssot_schur(lam, sum(lam)).coefficients == {lam: 1}
    with pytest.raises(ValueError):
        ssot_schur((2, 1), 4)


def test_ssot_schur_algebraic_oracle_single_row():
    expansion = ssot_schur((1,), 3)
    assert expansion.coefficients == schur_expand(ssot_poly((1,), 3, 3))


def test_ssot_schur_algebraic_oracle_exhaustive():
    # combinatorial LR sums against brute-force generating functions
    for m in range(4):
        for lam in partitions_of(m):
            for n in range(m, m + 5, 2):
                combinatorial = ssot_schur(lam, n).coefficients
                algebraic = schur_expand(ssot_poly(lam, n, n if n else 1))
                assert combinatorial == algebraic, (lam, n)


def test_ssot_schur_support_and_top_coefficient():
    for m in range(4):
        for lam in partitions_of(m):
            for n in range(m, m + 5, 2):
                coeffs = ssot_schur(lam, n).coefficients
                reachable = set(v_set(lam, n))
                bar = lambda_bar(lam, n)
                assert set(coeffs) <= reachable
                assert coeffs[bar] == 1
                for nu in coeffs:
                    assert dominance_leq(nu, bar)


def test_hall_inner_examples():
    assert hall_inner((3,), (1, 1, 1), 5) == 0
    assert hall_inner((2, 1), (2, 1), 5) == 4
    assert hall_inner((2, 1), (2, 1), 3) == 1
    assert hall_inner((3,), (3,), 3) == 1
    with pytest.raises(ValueError):
        hall_inner((2,), (1, 1, 1), 5)
    with pytest.raises(ValueError):
        hall_inner((3,), (1, 1, 1), 4)


def test_similarity():
    assert n_similar((3,), (1, 1, 1), 7)
    assert not n_similar((3,), (1, 1, 1), 5)
    assert n_zero((3,), (1, 1, 1)) == 7
    assert n_zero((2, 1), (2, 1)) == 3
    assert n_zero((), ()) == 0
    with pytest.raises(ValueError):
        n_zero((2,), (1,))


def test_hall_positive_implies_similar():
    # Schur supports sit inside the reachable sets, so positivity forces a
    # common reachable shape; the converse is false (see the pin below).
    for m in range(1, 4):
        shapes = partitions_of(m)
        for lam, mu in combinations_with_replacement(shapes, 2):
            for n in range(m, m + 5, 2):
                if hall_inner(lam, mu, n) > 0:
                    assert n_similar(lam, mu, n)


def test_similarity_does_not_force_positivity():
    # (3) and (1,1,1) share reachable shapes at length 7, e.g. (3,2,2), yet no
    # even-conjugate beta of size 4 has a positive LR coefficient into any
    # shared shape, so the pairing first turns positive at length 9.  The
    # reachability threshold is a lower bound for positivity, not equal to it.
    assert n_similar((3,), (1, 1, 1), 7)
    assert hall_inner((3,), (1, 1, 1), 7) == 0
    assert hall_inner((3,), (1, 1, 1), 9) == 1
    assert n_similar((4,), (2, 1, 1), 8)
    assert hall_inner((4,), (2, 1, 1), 8) == 0


def test_rational_rank():
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_rank([[1, 0], [0, 1]]) == 2
    assert rational_rank([[0, 0], [0, 0]]) == 0
    assert rational_rank([]) == 0
    assert rational_rank([[2, 3, 5], [4, 6, 10], [1, 1, 1]]) == 2


def test_independence_rank_examples():
    assert independence_rank(3, 5) == 3
    assert independence_rank(1, 1) == 1
    assert independence_rank(4, 6) == 5
    with pytest.raises(ValueError):
        independence_rank(3, 4)


def test_in_convex_hull():
    square = [(0, 0), (2, 0), (0, 2), (2, 2)]
    assert in_convex_hull((1, 1), square)
    assert in_convex_hull((2, 2), square)
    assert not in_convex_hull((3, 0), square)
    assert in_convex_hull((1, 0), [(0, 0), (2, 0)])
    assert not in_convex_hull((1, 1), [(0, 0), (2, 0)])
    assert in_convex_hull((5,), [(5,)])
    assert not in_convex_hull((4,), [(5,)])


def test_hull_contains_own_support():
    f = ssot_poly((2,), 4, 3)
    support = list(f.terms)
    for point in support:
        assert in_convex_hull(point, support)


def test_scaled_simplex_lattice_count():
    # conv{(0,0),(3,0),(0,3)} holds the 10 staircase points
    corners = [(0, 0), (3, 0), (0, 3)]
    points = [
        (a, b) for a in range(4) for b in range(4) if in_convex_hull((a, b), corners)
    ]
    assert len(points) == 10
    # a primitive segment has no interior lattice points
    segment = [(0, 0), (7, 5)]
    hits = [
        (a, b)
        for a in range(8)
        for b in range(6)
        if in_convex_hull((a, b), segment)
    ]
    assert hits == [(0, 0), (7, 5)]
    # tetrahedron of side 5: all 56 points with coordinate sum at most 5
    corners3 = [(0, 0, 0), (5, 0, 0), (0, 5, 0), (0, 0, 5)]
    count = sum(
        1
        for a in range(6)
        for b in range(6)
        for c in range(6)
        if a + b + c <= 5 and in_convex_hull((a, b, c), corners3)
    )
    assert count == 56


def test_has_snp_examples():
    check = has_snp(ssot_poly((2, 1), 5, 3))
    assert check.snp
    assert set(check.support) == set(check.polytope_points)

    assert has_snp(SparsePoly(2, {(2, 1): 1})).snp

    negative = has_snp(SparsePoly(2, {(2, 0): 1, (0, 2): 1}))
    assert not negative.snp
    assert (1, 1) in negative.polytope_points

    with pytest.raises(ValueError):
        has_snp(SparsePoly.zero(2))


def test_has_snp_non_homogeneous():
    # 1 + x^2 misses the hull point x
    f = SparsePoly(1, {(0,): 1, (2,): 1})
    check = has_snp(f)
    assert not check.snp
    assert (1,) in check.polytope_points


def test_threshold_shape_small():
    # unique switch point: pairings are zero up to some length, positive after,
    # and never positive before the reachability threshold
    for m in range(1, 4):
        shapes = partitions_of(m)
        for lam, mu in combinations_with_replacement(shapes, 2):
            n0 = n_zero(lam, mu)
            flags = []
            for n in range(m, m + 7, 2):
                value = hall_inner(lam, mu, n)
                if n < n0:
                    assert value == 0, (lam, mu, n)
                flags.append(value > 0)
            assert flags == sorted(flags), (lam, mu)
