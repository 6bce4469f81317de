"""Sequences of superscripts, gradings, the total order and mod-2 binomials.

A sequence ``(i_k, ..., i_1)`` names the monomial ``Q^{i_k} ... Q^{i_1}``.
Sequences are plain tuples stored in written order; positions are counted
from the right, so position 1 is the rightmost factor.
"""
from __future__ import annotations

import math
from itertools import product
from typing import Iterator, Sequence as _Seq

from .errors import DomainError

Sequence = tuple[int, ...]

#: excess of the empty sequence
INFINITE_EXCESS = math.inf


def binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2, zero unless 0 <= k <= n (Lucas)."""
    if k < 0 or n < k:
        return 0
    return int(n & k == k)


def degree(s: _Seq[int]) -> int:
    return sum(s)


def length(s: _Seq[int]) -> int:
    return len(s)


def excess(s: _Seq[int]) -> int | float:
    """Leftmost entry minus the sum of the others; +inf for the empty sequence."""
    if not s:
        return INFINITE_EXCESS
    return s[0] - sum(s[1:])


def suffix(s: _Seq[int], t: int) -> Sequence:
    """The rightmost ``t`` entries ``(i_t, ..., i_1)``."""
    if not 1 <= t <= len(s):
        raise DomainError(f"suffix length {t} out of range for sequence of length {len(s)}")
    return tuple(s[len(s) - t:])


def suffix_excesses(s: _Seq[int]) -> tuple[int, ...]:
    """``(e(I_1), e(I_2), ..., e(I_k))`` computed in one right-to-left pass."""
    out = []
    tail = 0
    for entry in reversed(s):
        out.append(entry - tail)
        tail += entry
    return tuple(out)


def order_key(s: _Seq[int]) -> tuple:
    """Sort key realising the total order: length first, then suffix excesses."""
    return (len(s), suffix_excesses(s))


def compare(a: _Seq[int], b: _Seq[int]) -> int:
    """Three-way comparison, returning -1, 0 or 1."""
    ka, kb = order_key(a), order_key(b)
    return (ka > kb) - (ka < kb)


def sort_sequences(seqs) -> list[Sequence]:
    return sorted((tuple(s) for s in seqs), key=order_key)


def compositions(k: int, d: int) -> list[Sequence]:
    """All length-``k`` sequences of nonnegative integers summing to ``d``, lexicographic."""
    return list(_compositions(k, d))


def _compositions(k: int, d: int) -> Iterator[Sequence]:
    if k == 0:
        if d == 0:
            yield ()
        return
    if k == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _compositions(k - 1, d - first):
            yield (first,) + rest


def all_sequences(k: int, max_entry: int) -> Iterator[Sequence]:
    """Every length-``k`` sequence with entries in ``0..max_entry``."""
    return product(range(max_entry + 1), repeat=k)
