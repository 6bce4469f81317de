"""Normal forms and bases for the quotients F, A2, U and R of F0.

* ``F``  -- Q^0 = 1.
* ``A2`` -- the Steenrod algebra: Q^0 = 1 plus the cohomology Adem relations.
* ``U``  -- F0 modulo the ideal of negative-excess monomials.
* ``R``  -- the Dyer-Lashof algebra: U plus the homology Adem relations.
"""
from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterable

from .errors import DomainError, GuardError
from .seqcore import Sequence, binom_mod2, compositions, excess, sort_sequences, suffix_excesses

DEFAULT_MAX_STEPS = 10**6


class Algebra(str, enum.Enum):
    F0 = "f0"
    F = "f"
    A2 = "a2"
    U = "u"
    R = "r"

    @classmethod
    def parse(cls, name: "str | Algebra") -> "Algebra":
        if isinstance(name, Algebra):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise DomainError(f"unknown algebra {name!r}") from None


# -- basis vectors ----------------------------------------------------------

def basis_vector_I(k: int, t: int) -> Sequence:
    """I_{k,t}, of degree 2^k - 2^t."""
    if k < 1 or not 0 <= t <= k - 1:
        raise DomainError(f"I_{{{k},{t}}} is undefined")
    # j counts from the left; the first t entries carry a -2^{t-j} correction
    return tuple(2 ** (k - j) - (2 ** (t - j) if j <= t else 0) for j in range(1, k + 1))


def basis_vector_J(k: int, t: int) -> Sequence:
    """J_{k,t} = (2^{t-1}, ..., 2, 1, 1, 0, ..., 0) of length k and degree 2^t."""
    if t < 1 or t + 1 > k:
        raise DomainError(f"J_{{{k},{t}}} does not fit in length {k}")
    block = tuple(2 ** e for e in range(t - 1, -1, -1)) + (1,)
    return block + (0,) * (k - len(block))


def milnor_primitive(n: int) -> Sequence:
    """Q^{2^n} ... Q^2 Q^1."""
    if n < 0:
        raise DomainError("milnor_primitive needs n >= 0")
    return tuple(2 ** e for e in range(n, -1, -1))


# -- admissibility ------------------------------------------------------------

def _a2_admissible(s: Sequence) -> bool:
    if any(i < 1 for i in s):
        return False
    return all(s[p] >= 2 * s[p + 1] for p in range(len(s) - 1))


def _r_admissible(s: Sequence) -> bool:
    if not all(s[p] <= 2 * s[p + 1] for p in range(len(s) - 1)):
        return False
    return not s or excess(s) >= 0


def _u_admissible(s: Sequence) -> bool:
    return all(e >= 0 for e in suffix_excesses(s))


def is_admissible(s: Iterable[int], alg: "str | Algebra") -> bool:
    alg = Algebra.parse(alg)
    s = tuple(s)
    if alg is Algebra.A2:
        return _a2_admissible(s)
    if alg is Algebra.R:
        return _r_admissible(s)
    if alg is Algebra.U:
        return _u_admissible(s)
    raise DomainError(f"no admissibility notion for {alg.name}")


# -- Adem relations -------------------------------------------------------------

@lru_cache(maxsize=None)
def cohomology_adem(i: int, j: int) -> tuple[tuple[int, ...], ...]:
    """Q^i Q^j for 0 < i < 2j as admissible terms; zero superscripts already stripped."""
    terms: set = set()
    for k in range(i // 2 + 1):
        if binom_mod2(j - k - 1, i - 2 * k):
            terms ^= {(i + j - k, k) if k else (i + j,)}
    return tuple(sorted(terms))


@lru_cache(maxsize=None)
def homology_adem(r: int, s: int) -> tuple[tuple[int, int], ...]:
    """Q^r Q^s for r > 2s as a sum of terms Q^{r+s-t} Q^t with t > 0."""
    terms = []
    for t in range(max(1, (r + 1) // 2), r + 1):
        if binom_mod2(t - s - 1, 2 * t - r):
            terms.append((r + s - t, t))
    return tuple(terms)


def _strip_zeros(s: Sequence) -> Sequence:
    return tuple(i for i in s if i)


def _rightmost_a2_redex(s: Sequence) -> int:
    for p in range(len(s) - 2, -1, -1):
        if s[p] < 2 * s[p + 1]:
            return p
    return -1


def _rightmost_r_redex(s: Sequence) -> int:
    for p in range(len(s) - 2, -1, -1):
        if s[p] > 2 * s[p + 1]:
            return p
    return -1


def _reduce_a2(s: Sequence, max_steps: int) -> frozenset:
    result: set = set()
    todo = {_strip_zeros(s)}
    steps = 0
    while todo:
        m = todo.pop()
        p = _rightmost_a2_redex(m)
        if p < 0:
            result ^= {m}
            continue
        steps += 1
        if steps > max_steps:
            raise GuardError(f"A2 normalisation of {s} exceeded {max_steps} rewrite steps")
        head, tail = m[:p], m[p + 2:]
        for term in cohomology_adem(m[p], m[p + 1]):
            todo ^= {head + term + tail}
    return frozenset(result)


def _reduce_r(s: Sequence, max_steps: int) -> frozenset:
    result: set = set()
    todo = {s}
    steps = 0
    while todo:
        m = todo.pop()
        if not _u_admissible(m):
            continue
        p = _rightmost_r_redex(m)
        if p < 0:
            result ^= {m}
            continue
        steps += 1
        if steps > max_steps:
            raise GuardError(f"R normalisation of {s} exceeded {max_steps} rewrite steps")
        head, tail = m[:p], m[p + 2:]
        for term in homology_adem(m[p], m[p + 1]):
            todo ^= {head + term + tail}
    # the eager suffix filter already enforces e >= 0 on every survivor
    return frozenset(m for m in result if _r_admissible(m))


@lru_cache(maxsize=200_000)
def _normal_form(s: Sequence, alg: Algebra, max_steps: int) -> frozenset:
    if alg is Algebra.F0:
        return frozenset({s})
    if alg is Algebra.F:
        return frozenset({_strip_zeros(s)})
    if alg is Algebra.U:
        return frozenset({s}) if _u_admissible(s) else frozenset()
    if alg is Algebra.A2:
        return _reduce_a2(s, max_steps)
    return _reduce_r(s, max_steps)


def normalize(x: Iterable[Iterable[int]], alg: "str | Algebra", max_steps: int = DEFAULT_MAX_STEPS) -> frozenset:
    """Unique basis representative of the class of ``x`` in ``alg``."""
    alg = Algebra.parse(alg)
    out: set = set()
    for s in x:
        out ^= _normal_form(tuple(s), alg, max_steps)
    return frozenset(out)


# -- bases --------------------------------------------------------------------

def _a2_admissibles(d: int, max_len: int | None, upper: int) -> list[Sequence]:
    # admissible sequences of degree d whose leftmost entry is at most ``upper``,
    # built right-to-left is awkward, so build left-to-right with a bound on the next entry
    if d == 0:
        return [()]
    if max_len == 0:
        return []
    out = []
    for first in range(1, min(d, upper) + 1):
        rest_len = None if max_len is None else max_len - 1
        for rest in _a2_admissibles(d - first, rest_len, first // 2):
            out.append((first,) + rest)
    return out


def basis(alg: "str | Algebra", degree: int, length: int | None = None) -> list[Sequence]:
    """Sorted basis sequences of ``alg`` in ``degree``.

    ``length`` is mandatory for F0, U and R (exact length) and an optional
    upper bound for F and A2.
    """
    alg = Algebra.parse(alg)
    if degree < 0:
        return []
    if alg in (Algebra.F0, Algebra.U, Algebra.R):
        if length is None:
            raise DomainError(f"basis of {alg.name} needs a length")
        seqs = compositions(length, degree)
        if alg is Algebra.U:
            seqs = [s for s in seqs if _u_admissible(s)]
        elif alg is Algebra.R:
            seqs = [s for s in seqs if _r_admissible(s)]
        return sort_sequences(seqs)
    if alg is Algebra.F:
        cap = degree if length is None else min(length, degree)
        seqs = [s for k in range(cap + 1) for s in compositions(k, degree) if all(s)]
        if degree == 0:
            seqs = [()]
        return sort_sequences(seqs)
    return sort_sequences(_a2_admissibles(degree, length, degree))


# -- Milnor coordinates on A2 -------------------------------------------------

def milnor_compose(n: Iterable[int], k: int) -> Sequence:
    """Admissible sequence sum n_i S_{i,i}; S_{i,i} sits in the leftmost i of k slots."""
    n = tuple(n)
    if len(n) != k or any(v < 0 for v in n):
        raise DomainError(f"expected {k} nonnegative Milnor coefficients, got {n}")
    total = [0] * k
    for i, ni in enumerate(n, start=1):
        for j, entry in enumerate(milnor_primitive(i - 1)):
            total[j] += ni * entry
    return _strip_zeros(tuple(total))


def milnor_decompose(s: Iterable[int], k: int) -> tuple[int, ...]:
    """Inverse of :func:`milnor_compose`: n_{k-t} = s_{t+1} - 2 s_t on the right-padded sequence."""
    s = tuple(s)
    if len(s) > k or not _a2_admissible(s):
        raise DomainError(f"{s} is not an admissible A2 sequence of length <= {k}")
    padded = s + (0,) * (k - len(s))
    # padded[k - p] is the entry at position p from the right
    at = lambda p: padded[k - p] if p >= 1 else 0  # noqa: E731
    n = [0] * k
    for t in range(k):
        n[k - t - 1] = at(t + 1) - 2 * at(t)
    return tuple(n)


# -- Madsen coordinates on R[k] -----------------------------------------------

def madsen_compose(a: Iterable[int], k: int) -> Sequence:
    """sum_t a_t I_{k,t}."""
    a = tuple(a)
    if len(a) != k or any(v < 0 for v in a):
        raise DomainError(f"expected {k} nonnegative Madsen coefficients, got {a}")
    total = [0] * k
    for t, at in enumerate(a):
        if at:
            for j, entry in enumerate(basis_vector_I(k, t)):
                total[j] += at * entry
    return tuple(total)


def madsen_decompose(s: Iterable[int]) -> tuple[int, ...]:
    """Coefficients (a_0, ..., a_{k-1}) with s = sum a_t I_{k,t}.

    Back-substitution from the right: a_{k-p} = 2 i_p - i_{p+1}, and
    a_0 = i_1 - (a_1 + ... + a_{k-1}), which is the excess.
    """
    s = tuple(s)
    k = len(s)
    if k == 0 or not _r_admissible(s):
        raise DomainError(f"{s} is not an R-admissible sequence")
    at = lambda p: s[k - p]  # noqa: E731
    a = [0] * k
    for p in range(1, k):
        a[k - p] = 2 * at(p) - at(p + 1)
    a[0] = at(1) - sum(a[1:])
    if any(v < 0 for v in a):
        raise DomainError(f"{s} has no nonnegative Madsen decomposition")
    return tuple(a)


def u_decompose(s: Iterable[int], k: int) -> tuple[int, ...]:
    """Nonnegative integer coefficients over J_{k,1}, ..., J_{k,k-1} reproducing ``s``.

    Solved as an exact linear system; raises when no nonnegative solution exists.
    """
    s = tuple(s)
    if len(s) != k:
        raise DomainError(f"{s} does not have length {k}")
    vectors = [basis_vector_J(k, t) for t in range(1, k)]
    sol = _solve_nonnegative(vectors, s)
    if sol is None:
        raise DomainError(f"{s} is not a nonnegative combination of the J_{{{k},t}}")
    return sol


def _solve_nonnegative(vectors: list[Sequence], target: Sequence) -> tuple[int, ...] | None:
    # bounded search; every J vector has positive degree so coefficients are bounded by degree
    deg = sum(target)
    degs = [sum(v) for v in vectors]

    def search(idx: int, remaining: tuple[int, ...]) -> tuple[int, ...] | None:
        if idx == len(vectors):
            return () if not any(remaining) else None
        v = vectors[idx]
        for c in range(deg // degs[idx] + 1):
            rem = tuple(r - c * e for r, e in zip(remaining, v))
            if any(r < 0 for r in rem):
                break
            tail = search(idx + 1, rem)
            if tail is not None:
                return (c,) + tail
        return None

    return search(0, target)
