"""Exact sparse integer polynomials and the quasi-symmetric / Schur bases.

Exponent vectors are fixed-length tuples; coefficients are Python ints.
Serialization order is graded lexicographic, largest first.
"""

from itertools import combinations

from .shapes import (
    Composition,
    Partition,
    is_strong,
    ref_set,
    trim,
)
from .oscillating import com, enumerate_qyot, enumerate_ssot, descent_data
from .tableaux import ssyt_of_shape, weight


class SparsePoly:
    """Multivariate polynomial with exact integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for exp, coef in dict(terms).items():
                exp = tuple(exp)
                if len(exp) != nvars or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent vector {exp} for {nvars} variables")
                if coef:
                    self.terms[exp] = coef

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp, coef: int = 1) -> "SparsePoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: coef})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "SparsePoly":
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exp: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _check_compatible(self, other: "SparsePoly"):
        if not isinstance(other, SparsePoly):
            raise TypeError("expected a SparsePoly")
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check_compatible(other)
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            new = terms.get(exp, 0) + coef
            if new:
                terms[exp] = new
            else:
                terms.pop(exp, None)
        out = SparsePoly(self.nvars)
        out.terms = terms
        return out

    def __neg__(self) -> "SparsePoly":
        out = SparsePoly(self.nvars)
        out.terms = {exp: -coef for exp, coef in self.terms.items()}
        return out

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def scale(self, c: int) -> "SparsePoly":
        out = SparsePoly(self.nvars)
        if c:
            out.terms = {exp: c * coef for exp, coef in self.terms.items()}
        return out

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        self._check_compatible(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(exp, 0) + c1 * c2
                if new:
                    terms[exp] = new
                else:
                    terms.pop(exp, None)
        out = SparsePoly(self.nvars)
        out.terms = terms
        return out

    def truncated_mul(self, other: "SparsePoly", maxdeg: int) -> "SparsePoly":
        """Product with all terms of total degree above ``maxdeg`` dropped."""
        self._check_compatible(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > maxdeg:
                    continue
                exp = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(exp, 0) + c1 * c2
                if new:
                    terms[exp] = new
                else:
                    terms.pop(exp, None)
        out = SparsePoly(self.nvars)
        out.terms = terms
        return out

    def truncate(self, maxdeg: int) -> "SparsePoly":
        out = SparsePoly(self.nvars)
        out.terms = {e: c for e, c in self.terms.items() if sum(e) <= maxdeg}
        return out

    def homogeneous_part(self, degree: int) -> "SparsePoly":
        out = SparsePoly(self.nvars)
        out.terms = {e: c for e, c in self.terms.items() if sum(e) == degree}
        return out

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def evaluate(self, point) -> int:
        point = tuple(point)
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = 0
        for exp, coef in self.terms.items():
            v = coef
            for x, e in zip(point, exp):
                v *= x**e
            total += v
        return total

    def coefficient(self, exp) -> int:
        return self.terms.get(tuple(exp), 0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for exp, coef in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp)
                if e
            )
            if not mono:
                bits.append(str(coef))
            elif coef == 1:
                bits.append(mono)
            elif coef == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{coef}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")

    def to_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exp": list(exp), "coef": str(coef)}
                for exp, coef in self.sorted_terms()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SparsePoly":
        try:
            return cls(
                data["nvars"],
                {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]},
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed polynomial encoding: {exc}") from exc


def monomial_qsym(b: Composition, k: int) -> SparsePoly:
    """Sum of ``x^c`` over weak compositions ``c`` of length ``k`` flattening to ``b``."""
    b = trim(b)
    if not is_strong(b):
        raise ValueError("monomial quasi-symmetric functions are indexed by strong compositions")
    out = SparsePoly(k)
    if len(b) > k:
        return out
    for positions in combinations(range(k), len(b)):
        exp = [0] * k
        for pos, value in zip(positions, b):
            exp[pos] = value
        out.terms[tuple(exp)] = 1
    return out


def fundamental_qsym(a: Composition, k: int) -> SparsePoly:
    """Sum of the monomial quasi-symmetric polynomials over all refinements of ``a``."""
    total = SparsePoly(k)
    for b in ref_set(a):
        total = total + monomial_qsym(b, k)
    return total


def schur_poly(lam: Partition, k: int) -> SparsePoly:
    """Generating polynomial of semistandard tableaux of shape ``lam``, entries <= k."""
    if k < 1:
        raise ValueError("schur polynomials need at least one variable")
    out = SparsePoly(k)
    for T in ssyt_of_shape(tuple(lam), k):
        exp = weight(T, k)
        out.terms[exp] = out.terms.get(exp, 0) + 1
    return out


def ssot_poly(lam: Partition, n: int, k: int) -> SparsePoly:
    """Generating polynomial of SSOTs of shape ``lam``, length ``n``, letters <= k."""
    if k < 1:
        raise ValueError("SSOT polynomials need at least one variable")
    out = SparsePoly(k)
    for S in enumerate_ssot(tuple(lam), n, k):
        exp = tuple(com(S)) + (0,) * (k - len(com(S)))
        out.terms[exp] = out.terms.get(exp, 0) + 1
    return out


def f_expansion(lam: Partition, n: int, max_step: int) -> dict[Composition, int]:
    """Multiplicity of each descent composition over the quasi-Yamanouchi SSOTs."""
    counts: dict[Composition, int] = {}
    for Q in enumerate_qyot(tuple(lam), n, max_step):
        _, comp, _ = descent_data(Q)
        counts[comp] = counts.get(comp, 0) + 1
    return dict(sorted(counts.items(), reverse=True))


def littlewood_truncated(k: int, maxdeg: int) -> SparsePoly:
    """Truncation of the product over i<j of the geometric series in ``x_i x_j``."""
    if k < 1:
        raise ValueError("need at least one variable")
    if maxdeg < 0:
        raise ValueError("maxdeg must be nonnegative")
    total = SparsePoly.one(k)
    for i in range(k):
        for j in range(i + 1, k):
            factor = SparsePoly(k)
            for t in range(0, maxdeg // 2 + 1):
                exp = [0] * k
                exp[i] = exp[j] = t
                factor.terms[tuple(exp)] = 1
            total = total.truncated_mul(factor, maxdeg)
    return total


def is_symmetric(f: SparsePoly) -> bool:
    """True if ``f`` is invariant under every adjacent variable swap."""
    for i in range(f.nvars - 1):
        for exp, coef in f.terms.items():
            swapped = list(exp)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if f.terms.get(tuple(swapped), 0) != coef:
                return False
    return True


def schur_expand(f: SparsePoly) -> dict[Partition, int]:
    """Expand a symmetric homogeneous polynomial in Schur polynomials.

    Repeatedly subtracts the Schur polynomial at the lex-largest partition
    exponent in the support.  Requires at least as many variables as the
    degree, so that no partition of the degree is truncated away.
    """
    if f.is_zero():
        return {}
    if not f.is_homogeneous():
        raise ValueError("schur expansion needs a homogeneous polynomial")
    if not is_symmetric(f):
        raise ValueError("schur expansion needs a symmetric polynomial")
    n = f.degree()
    if f.nvars < n:
        raise ValueError(f"need at least {n} variables to expand degree {n}, got {f.nvars}")
    out: dict[Partition, int] = {}
    g = f
    while not g.is_zero():
        pivots = [e for e in g.terms if all(e[i] >= e[i + 1] for i in range(len(e) - 1))]
        # a nonzero symmetric polynomial always has a partition exponent
        pivot = max(pivots)
        coef = g.terms[pivot]
        nu = trim(pivot)
        out[nu] = coef
        g = g - schur_poly(nu, f.nvars).scale(coef)
    return dict(sorted(out.items(), reverse=True))
