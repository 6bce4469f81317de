"""Left action of the opposite Steenrod algebra on F0 and its quotients."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import DomainError
from .quotients import Algebra, normalize
from .seqcore import Sequence, binom_mod2


@lru_cache(maxsize=None)
def _sq_monomial(a: int, s: Sequence) -> frozenset:
    if a == 0:
        return frozenset({s})
    if not s:
        return frozenset()
    b, rest = s[0], s[1:]
    if b == 0:
        return frozenset((0,) + m for m in _sq_monomial(a, rest))
    if not rest:
        return frozenset({(b - a,)}) if binom_mod2(b - a, a) and b - a >= 0 else frozenset()
    out: set = set()
    for t in range(a // 2 + 1):
        lead = b - a + t
        if lead < 0 or not binom_mod2(b - a, a - 2 * t):
            continue
        for m in _sq_monomial(t, rest):
            out ^= {(lead,) + m}
    return frozenset(out)


def sq_act(a: int, x: Iterable[Iterable[int]], alg: "str | Algebra" = Algebra.F0) -> frozenset:
    """Sq^a acting on ``x``; for U and R the F0 result is projected back to normal form.

    A2 is rejected because it is not closed under this action.
    """
    alg = Algebra.parse(alg)
    if alg is Algebra.A2:
        raise DomainError("A2 is not closed under the opposite Steenrod action")
    if a < 0:
        raise DomainError("Sq^a needs a >= 0")
    out: set = set()
    for s in x:
        out ^= _sq_monomial(a, tuple(s))
    if alg in (Algebra.U, Algebra.R):
        return normalize(out, alg)
    if alg is Algebra.F:
        return normalize(out, Algebra.F)
    return frozenset(out)


@dataclass(frozen=True)
class DualGeneratorPower:
    """y_{k,i}^exponent."""

    k: int
    i: int
    exponent: int

    def __post_init__(self):
        if self.k < 1 or not 1 <= self.i <= self.k or self.exponent < 0:
            raise DomainError(f"invalid dual generator power y_{{{self.k},{self.i}}}^{self.exponent}")


def sq_act_dual(a: int, y: DualGeneratorPower) -> tuple[int, DualGeneratorPower]:
    """Sq^a y^b = C(b, a) y^{b+a}."""
    return binom_mod2(y.exponent, a), DualGeneratorPower(y.k, y.i, y.exponent + a)
