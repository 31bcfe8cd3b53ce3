"""Schur expansions, Hall inner products, independence and Newton-polytope checks.

Everything here is exact: coefficients are integers, linear algebra runs over
``fractions.Fraction``, and hull membership is decided by a rational
feasibility search rather than floating-point geometry.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .shapes import (
    Partition,
    contains,
    even_conjugate_partitions,
    in_N,
    partitions_of,
    v_set,
)
from .tableaux import lr_coefficient
from .polyring import SparsePoly


@dataclass
class SchurExpansion:
    """Nonnegative integer combination of Schur functions of one degree."""

    degree: int
    coefficients: dict[Partition, int]


def _parity_error(lam: Partition, n: int) -> ValueError:
    return ValueError(
        f"{n} not admissible for {tuple(lam)}: need n >= |lam| and n == |lam| (mod 2)"
    )


@lru_cache(maxsize=None)
def _ssot_schur_items(lam: Partition, n: int) -> tuple[tuple[Partition, int], ...]:
    m = n - sum(lam)
    betas = even_conjugate_partitions(m)
    items = []
    for nu in partitions_of(n):
        if not contains(lam, nu):
            continue
        c = sum(lr_coefficient(beta, lam, nu) for beta in betas)
        if c:
            items.append((nu, c))
    return tuple(items)


def ssot_schur(lam: Partition, n: int) -> SchurExpansion:
    """Schur coefficients of the degree-``n`` SSOT function of shape ``lam``.

    The coefficient of nu sums the LR coefficients c(beta, lam; nu) over
    partitions beta of n - |lam| with even conjugate.
    """
    lam = tuple(lam)
    if not in_N(lam, n):
        raise _parity_error(lam, n)
    return SchurExpansion(n, dict(_ssot_schur_items(lam, n)))


def hall_inner(lam: Partition, mu: Partition, n: int) -> int:
    """Hall pairing of two SSOT functions: dot product of their Schur coefficients."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    if not in_N(lam, n):
        raise _parity_error(lam, n)
    left = dict(_ssot_schur_items(lam, n))
    right = dict(_ssot_schur_items(mu, n))
    return sum(c * right.get(nu, 0) for nu, c in left.items())


def n_similar(lam: Partition, mu: Partition, n: int) -> bool:
    """True when some partition of ``n`` is reachable from both shapes."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return bool(set(v_set(lam, n)) & set(v_set(mu, n)))


def n_zero(lam: Partition, mu: Partition) -> int:
    """Smallest admissible length at which the two shapes become similar.

    Searches m, m+2, ... up to m*m, which always suffices: both shapes reach
    the square (m^m) by adding even vertical strips to the columns.
    """
    lam, mu = tuple(lam), tuple(mu)
    m = sum(lam)
    if m != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    for n in range(m, m * m + 1, 2):
        if n_similar(lam, mu, n):
            return n
    raise RuntimeError(f"no similarity up to {m * m}; this contradicts the bound")


def rational_rank(matrix) -> int:
    """Rank of an integer matrix by Gaussian elimination over the rationals."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def independence_rank(m: int, n: int) -> int:
    """Rank of the Schur-coefficient matrix of all SSOT functions of size ``m``."""
    if not (n >= m and (n - m) % 2 == 0):
        raise _parity_error((1,) * m if m else (), n)
    lams = partitions_of(m)
    nus = partitions_of(n)
    index = {nu: j for j, nu in enumerate(nus)}
    matrix = []
    for lam in lams:
        row = [0] * len(nus)
        for nu, c in _ssot_schur_items(lam, n):
            row[index[nu]] = c
        matrix.append(row)
    return rational_rank(matrix)


def in_convex_hull(point, points) -> bool:
    """Exact membership of ``point`` in the convex hull of ``points``.

    Phase-one simplex with Bland's rule over Fractions: feasibility of
    nonnegative weights summing to 1 with the prescribed barycenter.
    """
    points = [tuple(p) for p in points]
    point = tuple(point)
    if not points:
        return False
    k = len(point)
    ncols = len(points)
    nrows = k + 1
    total = ncols + nrows
    tab = []
    for r in range(nrows):
        row = [Fraction(points[c][r] if r < k else 1) for c in range(ncols)]
        row += [Fraction(int(i == r)) for i in range(nrows)]
        row.append(Fraction(point[r] if r < k else 1))
        tab.append(row)
    basis = list(range(ncols, ncols + nrows))

    def reduced_cost(j: int) -> Fraction:
        rc = Fraction(1 if j >= ncols else 0)
        for i in range(nrows):
            if basis[i] >= ncols:
                rc -= tab[i][j]
        return rc

    while True:
        enter = next((j for j in range(total) if reduced_cost(j) < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(nrows):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best, leave = ratio, i
        if leave is None:
            raise RuntimeError("phase-one simplex cannot be unbounded")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(nrows):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        basis[leave] = enter
    infeasibility = sum((tab[i][-1] for i in range(nrows) if basis[i] >= ncols), Fraction(0))
    return infeasibility == 0


@dataclass
class LatticePolytopeCheck:
    """Support, lattice points of its hull, and whether the two sets agree."""

    support: tuple[tuple[int, ...], ...]
    polytope_points: tuple[tuple[int, ...], ...]
    snp: bool


def _weak_compositions(n: int, k: int):
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _weak_compositions(n - first, k - 1):
            yield (first,) + rest


def has_snp(f: SparsePoly) -> LatticePolytopeCheck:
    """Saturated-Newton-polytope check: hull lattice points versus support."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    support = sorted(f.terms)
    if f.is_homogeneous():
        candidates = _weak_compositions(f.degree(), f.nvars)
    else:
        lo = [min(e[i] for e in support) for i in range(f.nvars)]
        hi = [max(e[i] for e in support) for i in range(f.nvars)]
        candidates = product(*(range(a, b + 1) for a, b in zip(lo, hi)))
    inside = tuple(p for p in candidates if in_convex_hull(p, support))
    support_set = set(support)
    return LatticePolytopeCheck(
        support=tuple(support),
        polytope_points=inside,
        snp=all(p in support_set for p in inside),
    )
