"""Kronecker pairing of F0[k]* against monomials, F_2 linear algebra, Poincare series."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import DomainError
from .freealg import iterated_coproduct, primitive_x
from .seqcore import Sequence, compare, compositions, order_key


@dataclass(frozen=True)
class DualMonomial:
    """xi^Lambda = prod_i y_{k,i}^{lambda_i}; ``exponents`` is (lambda_1, ..., lambda_k)."""

    k: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if self.k < 1 or len(self.exponents) != self.k or any(e < 0 for e in self.exponents):
            raise DomainError(f"invalid dual monomial exponents {self.exponents} for k={self.k}")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def factors(self) -> list[Sequence]:
        """The primitives x_{k,i}, each repeated lambda_i times, in increasing i."""
        return [primitive_x(self.k, i) for i, e in enumerate(self.exponents, start=1) for _ in range(e)]


def lambda_sequence(xi: DualMonomial) -> Sequence:
    """Lambda(I) = sum lambda_i I(x_{k,i}): lambda_i written at position i from the right."""
    return tuple(reversed(xi.exponents))


def dual_monomials(k: int, d: int) -> list[DualMonomial]:
    return [DualMonomial(k, tuple(reversed(s))) for s in compositions(k, d)]


@lru_cache(maxsize=4096)
def _coproduct_support(j: Sequence, lam: int) -> frozenset:
    return iterated_coproduct({j}, lam)


def pair(xi: DualMonomial, j: Iterable[int], order: list[int] | None = None) -> int:
    """<xi^Lambda, Q^J> as the coefficient of the factor tuple in the iterated coproduct.

    ``order`` optionally permutes the factor tuple; the answer does not depend on it.
    """
    j = tuple(j)
    if len(j) != xi.k:
        raise DomainError(f"cannot pair a k={xi.k} dual monomial with a length-{len(j)} monomial")
    lam = xi.degree
    if sum(j) != lam:
        return 0
    if lam == 0:
        return 1
    factors = xi.factors()
    if order is not None:
        factors = [factors[p] for p in order]
    return int(tuple(factors) in _coproduct_support(j, lam))


# -- F_2 linear algebra ---------------------------------------------------------

def rank_f2(rows: Iterable[int]) -> int:
    """Rank of a set of F_2 row vectors packed into ints."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top in pivots:
                row ^= pivots[top]
            else:
                pivots[top] = row
                rank += 1
                break
    return rank


def pack_bits(bits: Iterable[int]) -> int:
    out = 0
    for p, b in enumerate(bits):
        if b:
            out |= 1 << p
    return out


@dataclass
class PairingMatrix:
    k: int
    degree: int
    rows: list[DualMonomial]
    columns: list[Sequence]
    entries: list[list[int]] = field(repr=False)

    @property
    def size(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    @property
    def rank(self) -> int:
        return rank_f2(pack_bits(r) for r in self.entries)

    @property
    def is_invertible(self) -> bool:
        return len(self.rows) == len(self.columns) == self.rank

    @property
    def is_triangular(self) -> bool:
        """pair = 1 only where the column is >= Lambda(I) of the row."""
        for xi, row in zip(self.rows, self.entries):
            diag = lambda_sequence(xi)
            for col, bit in zip(self.columns, row):
                if bit and compare(col, diag) < 0:
                    return False
        return True

    @property
    def is_unitriangular(self) -> bool:
        if not self.is_triangular:
            return False
        index = {c: p for p, c in enumerate(self.columns)}
        return all(row[index[lambda_sequence(xi)]] == 1 for xi, row in zip(self.rows, self.entries))


def pairing_matrix(k: int, d: int) -> PairingMatrix:
    columns = sorted(compositions(k, d), key=order_key)
    rows = sorted(dual_monomials(k, d), key=lambda xi: order_key(lambda_sequence(xi)))
    entries = [[pair(xi, j) for j in columns] for xi in rows]
    return PairingMatrix(k, d, rows, columns, entries)


# -- Poincare series ------------------------------------------------------------

def poincare_series(generator_degrees: Iterable[int], max_degree: int) -> list[int]:
    """Coefficients of prod (1 - q^d)^-1 up to ``max_degree``."""
    coeffs = [1] + [0] * max_degree
    for g in generator_degrees:
        if g <= 0:
            raise DomainError("generator degrees must be positive")
        for n in range(g, max_degree + 1):
            coeffs[n] += coeffs[n - g]
    return coeffs


def milnor_generator_degrees(max_degree: int) -> list[int]:
    """Degrees 2^{n+1} - 1 of the xi_n, truncated at ``max_degree``."""
    out, n = [], 0
    while 2 ** (n + 1) - 1 <= max(max_degree, 1):
        out.append(2 ** (n + 1) - 1)
        n += 1
    return out


def madsen_generator_degrees(k: int) -> list[int]:
    return [2 ** k - 2 ** t for t in range(k)]


# -- coproduct of the dual generators ---------------------------------------------

DualLabel = tuple[int, int]  # (k, i) standing for y_{k,i}; i = 0 is the unit of F0[k]*


def dual_coproduct_y(k: int, i: int) -> frozenset[tuple[DualLabel, DualLabel]]:
    """Terms of psi(y_{k,i}) dual to the factorisations x_{k,i} = a * b, a in F0[k-t], b in F0[t]."""
    if k < 1 or not 1 <= i <= k:
        raise DomainError(f"y_{{{k},{i}}} is undefined")
    terms = set()
    for t in range(1, k):
        if t >= i:
            terms.add(((k - t, 0), (t, i)))
        else:
            terms.add(((k - t, i - t), (t, 0)))
    return frozenset(terms)
