"""The free algebra F0 on generators Q^i over F_2.

An element is a frozenset of sequences; membership is the coefficient, so
symmetric difference is addition.  Tensor elements are frozensets of tuples
of sequences.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import product
from typing import Iterable

from .errors import DomainError
from .seqcore import Sequence, compositions

Element = frozenset
TensorElement = frozenset

ZERO: Element = frozenset()
ONE: Element = frozenset({()})


def element(*seqs: Iterable[int]) -> Element:
    """Build an element from sequences, cancelling repeats mod 2."""
    out: set = set()
    for s in seqs:
        out ^= {tuple(s)}
    return frozenset(out)


def add(*xs: Iterable) -> frozenset:
    out: set = set()
    for x in xs:
        out ^= set(x)
    return frozenset(out)


def multiply(a: Iterable[Sequence], b: Iterable[Sequence]) -> Element:
    out: set = set()
    for s in a:
        for t in b:
            out ^= {s + t}
    return frozenset(out)


@lru_cache(maxsize=None)
def _generator_coproduct(i: int) -> tuple[tuple[int, int], ...]:
    return tuple((i - t, t) for t in range(i + 1))


@lru_cache(maxsize=None)
def _monomial_coproduct(s: Sequence) -> frozenset:
    # each splitting of the superscripts appears exactly once
    out = set()
    for choice in product(*(_generator_coproduct(i) for i in s)):
        left = tuple(c[0] for c in choice)
        right = tuple(c[1] for c in choice)
        out.add((left, right))
    return frozenset(out)


def coproduct(x: Iterable[Sequence]) -> TensorElement:
    out: set = set()
    for s in x:
        out ^= _monomial_coproduct(tuple(s))
    return frozenset(out)


def iterated_coproduct(x: Iterable[Sequence], lam: int) -> TensorElement:
    """The ``lam``-fold coproduct, associating to the left; ``lam=1`` wraps ``x`` in 1-tuples."""
    if lam < 1:
        raise DomainError("iterated coproduct needs lambda >= 1")
    current: set = {(tuple(s),) for s in x}
    for _ in range(lam - 1):
        nxt: set = set()
        for tup in current:
            for left, right in _monomial_coproduct(tup[-1]):
                nxt ^= {tup[:-1] + (left, right)}
        current = nxt
    return frozenset(current)


def tensor_map(f, t: Iterable[tuple]) -> TensorElement:
    """Apply element maps factorwise (``f`` may be one map or a tuple of maps) and expand."""
    out: set = set()
    for tup in t:
        maps = f if isinstance(f, tuple) else (f,) * len(tup)
        images = [sorted(g(frozenset({s}))) for g, s in zip(maps, tup)]
        for combo in product(*images):
            out ^= {combo}
    return frozenset(out)


def augmentation(x: Iterable[Sequence]) -> int:
    return sum(1 for s in x if all(i == 0 for i in s)) % 2


def primitive_x(k: int, i: int) -> Sequence:
    """x_{k,i}: zeros, with a single 1 at position ``i`` from the right (``i=0``: all zeros)."""
    if k < 1 or not 0 <= i <= k:
        raise DomainError(f"x_{{{k},{i}}} is undefined")
    s = [0] * k
    if i:
        s[k - i] = 1
    return tuple(s)


def grouplike(k: int) -> Sequence:
    return (0,) * k


def is_primitive(x: Iterable[Sequence], k: int) -> bool:
    x = frozenset(tuple(s) for s in x)
    if any(len(s) != k for s in x):
        raise DomainError(f"is_primitive expects length-{k} monomials")
    g = grouplike(k)
    expected: set = set()
    for s in x:
        expected ^= {(s, g)}
        expected ^= {(g, s)}
    return coproduct(x) == frozenset(expected)


def pad_left(x: Iterable[Sequence]) -> Element:
    """Left multiplication by Q^0."""
    return frozenset((0,) + tuple(s) for s in x)


def append_right(x: Iterable[Sequence]) -> Element:
    """Right multiplication by Q^0."""
    return frozenset(tuple(s) + (0,) for s in x)


def component_split(x: Iterable[Sequence]) -> dict[int, Element]:
    parts: dict[int, set] = defaultdict(set)
    for s in x:
        parts[len(s)].add(tuple(s))
    return {k: frozenset(v) for k, v in sorted(parts.items())}


def monomials(k: int, d: int) -> list[Sequence]:
    """Monomial basis of F0[k] in degree d."""
    return compositions(k, d)
