"""Maps between length components and between A2 and R, and the lifting algorithm.

``pi(k, .)`` pads an A2 monomial with Q^0's and reduces in R; :func:`lift`
builds an explicit preimage, so ``pi`` is onto R[k].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, GuardError
from .freealg import append_right
from .nishida import sq_act
from .quotients import (
    Algebra,
    basis,
    basis_vector_I,
    is_admissible,
    madsen_compose,
    madsen_decompose,
    normalize,
)
from .seqcore import Sequence, order_key

DEFAULT_LIFT_STEPS = 10**4


def _as_element(x: Iterable[Iterable[int]]) -> frozenset:
    return frozenset(tuple(s) for s in x)


def _check_r_normal(k: int, x: frozenset) -> None:
    for s in x:
        if len(s) != k or not is_admissible(s, Algebra.R):
            raise DomainError(f"{s} is not an R[{k}] basis monomial")


def phi_R(k: int, x: Iterable[Iterable[int]]) -> frozenset:
    """R[k] -> R[k+1], Q^I |-> Q^I Q^0."""
    x = _as_element(x)
    _check_r_normal(k, x)
    return normalize(append_right(x), Algebra.R)


def phi_R_fast(k: int, s: Iterable[int]) -> frozenset:
    """Closed form of :func:`phi_R` on a single admissible monomial of positive degree."""
    s = tuple(s)
    if len(s) != k or not is_admissible(s, Algebra.R) or not any(s):
        raise DomainError(f"{s} is not a positive-degree R[{k}] basis monomial")
    if any(v % 2 for v in s):
        return frozenset()
    halves = [v // 2 for v in madsen_decompose(s)]
    total = [0] * (k + 1)
    for t, c in enumerate(halves):
        for j, entry in enumerate(basis_vector_I(k + 1, t + 1)):
            total[j] += c * entry
    return frozenset({tuple(total)})


def stabilize(s: Iterable[int], n: int) -> frozenset:
    """Reduce Q^I Q^0...Q^0 (``n`` trailing zeros) in R[k+n]."""
    s = tuple(s)
    a = madsen_decompose(s)
    if n < 1 or any(v % 2**n for v in a) or not any(a):
        raise DomainError(f"Madsen coefficients {a} of {s} are not positive multiples of 2^{n}")
    return normalize({s + (0,) * n}, Algebra.R)


def stabilize_formula(s: Iterable[int], n: int) -> frozenset:
    """sum_i b_i I_{k+n,i+n} with a_i = 2^n b_i."""
    s = tuple(s)
    a = madsen_decompose(s)
    if n < 1 or any(v % 2**n for v in a) or not any(a):
        raise DomainError(f"Madsen coefficients {a} of {s} are not positive multiples of 2^{n}")
    k = len(s)
    total = [0] * (k + n)
    for i, ai in enumerate(a):
        for j, entry in enumerate(basis_vector_I(k + n, i + n)):
            total[j] += (ai >> n) * entry
    return frozenset({tuple(total)})


def phi_U_to_A2(x: Iterable[Iterable[int]], k: int | None = None) -> frozenset:
    """U[k] -> A2(k): set Q^0 = 1 and reduce with the cohomology Adem relations."""
    x = _as_element(x)
    if k is not None and any(len(s) != k for s in x):
        raise DomainError(f"phi_U_to_A2 expects length-{k} monomials")
    return normalize(normalize(x, Algebra.U), Algebra.A2)


def pi(k: int, x: Iterable[Iterable[int]]) -> frozenset:
    """A2(k) -> R[k]: pad each admissible monomial on the right with Q^0's to length k."""
    x = _as_element(x)
    for s in x:
        if len(s) > k:
            raise DomainError(f"{s} is longer than {k}")
        if not is_admissible(s, Algebra.A2):
            raise DomainError(f"{s} is not A2-admissible")
    return normalize({s + (0,) * (k - len(s)) for s in x}, Algebra.R)


def lift_sequence(s: Iterable[int]) -> Sequence:
    """J(I): b_{t+1} = 2^t (a_0 + ... + a_t), as a full length-k sequence."""
    a = madsen_decompose(tuple(s))
    k = len(a)
    b = [0] * k
    running = 0
    for t in range(k):
        running += a[t]
        b[k - 1 - t] = 2**t * running
    return tuple(b)


def _strip(s: Sequence) -> Sequence:
    return tuple(v for v in s if v)


def lift(k: int, s: Iterable[int], max_steps: int = DEFAULT_LIFT_STEPS) -> frozenset:
    """An element K of A2(k) with pi(k, K) = Q^I.

    Repeatedly cancel the smallest unwanted term of pi(k, K) by adding J of
    that term; each correction only introduces larger terms.
    """
    s = tuple(s)
    if len(s) != k or not is_admissible(s, Algebra.R):
        raise DomainError(f"{s} is not an R[{k}] basis monomial")
    if not any(s):
        return frozenset({()})
    target = frozenset({s})
    lifted: set = set()
    residual = target
    steps = 0
    while residual:
        steps += 1
        if steps > max_steps:
            raise GuardError(f"lift of {s} did not converge in {max_steps} steps")
        smallest = min(residual, key=order_key)
        lifted ^= {_strip(lift_sequence(smallest))}
        residual = pi(k, lifted) ^ target
    return frozenset(lifted)


@dataclass(frozen=True)
class LimitClass:
    """A representative of an element of the direct limit of the R[k]."""

    level: int
    rep: frozenset

    def __post_init__(self):
        object.__setattr__(self, "rep", _as_element(self.rep))
        _check_r_normal(self.level, self.rep)

    def equivalent(self, other: "LimitClass") -> bool:
        top = max(self.level, other.level)
        return limit_inject(self, top).rep == limit_inject(other, top).rep


def limit_inject(c: LimitClass, target_k: int) -> LimitClass:
    if target_k < c.level:
        raise DomainError(f"cannot lower level {c.level} to {target_k}")
    rep, level = c.rep, c.level
    while level < target_k:
        rep = phi_R(level, rep)
        level += 1
    return LimitClass(level, rep)


def a2_to_limit(x: Iterable[Iterable[int]], k: int | None = None) -> LimitClass:
    """The induced map A2 -> lim R[k], landing at level ``k`` (default: longest monomial)."""
    x = _as_element(x)
    level = k if k is not None else max((len(s) for s in x), default=1) or 1
    return LimitClass(level, pi(level, x))


def sq_claim_witnesses(k: int, i: int, m: int) -> list[Sequence]:
    """Basis monomials J' of R[k] with Sq^{2^m} Q^{J'} containing Q^{2 I_{k,i}}."""
    if not 0 <= i <= k - 1 or not 0 <= m <= k:
        raise DomainError(f"invalid claim parameters k={k}, i={i}, m={m}")
    target = tuple(2 * v for v in basis_vector_I(k, i))
    deg = 2 ** (k + 1) - 2 ** (i + 1) + 2**m
    return [j for j in basis(Algebra.R, deg, k) if target in sq_act(2**m, {j}, Algebra.R)]


def sq_claim_cases(k: int, i: int, m: int) -> list[Sequence]:
    """The witness list predicted by the claim, with its last case read as 2I_{k,i} + 2I_{k,k-1}."""
    if m == i and 1 <= i < k:
        return [tuple(2 * v for v in basis_vector_I(k, i - 1))]
    if i + 1 <= m == k:
        both = madsen_compose(tuple(2 * ((t == i) + (t == k - 1)) for t in range(k)), k)
        return [both]
    return []
