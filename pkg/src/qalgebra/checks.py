"""Acceptance suites: exhaustive sweeps over bounded ranges, one result per suite.

Each suite returns a :class:`CheckResult`; the ``detail`` field carries the
counts and, on failure, the first few counterexamples.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Callable

from .duality import (
    madsen_generator_degrees,
    milnor_generator_degrees,
    pairing_matrix,
    poincare_series,
)
from .freealg import (
    augmentation,
    coproduct,
    grouplike,
    iterated_coproduct,
    monomials,
    multiply,
    tensor_map,
)
from .limitmaps import (
    lift,
    lift_sequence,
    phi_R,
    phi_R_fast,
    phi_U_to_A2,
    pi,
    sq_claim_cases,
    sq_claim_witnesses,
    stabilize,
    stabilize_formula,
)
from .nishida import sq_act
from .quotients import Algebra, basis, is_admissible, madsen_compose, madsen_decompose, normalize
from .seqcore import compare, compositions
from .duality import pack_bits, rank_f2


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def as_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


class _Tally:
    def __init__(self):
        self.count = 0
        self.failures: list[str] = []

    def check(self, ok: bool, label) -> None:
        self.count += 1
        if not ok:
            self.failures.append(str(label))

    def result(self, name: str) -> CheckResult:
        detail = f"{self.count - len(self.failures)}/{self.count} cases hold"
        if self.failures:
            detail += "; first failures: " + ", ".join(self.failures[:5])
        return CheckResult(name, not self.failures, detail)


def _nf(alg):
    return lambda e: normalize(e, alg)


def identities() -> CheckResult:
    t = _Tally()
    t.check(normalize({(1, 2)}, Algebra.A2) == {(3,)}, "Q1Q2 = Q3 in A2")
    t.check(normalize({(3, 2)}, Algebra.A2) == set(), "Q3Q2 = 0 in A2")
    t.check(sq_act(2, {(3, 2)}, Algebra.F0) == {(2, 1)}, "Sq2 Q3Q2 = Q2Q1")
    t.check(phi_R(1, {(1,)}) == set(), "phi_1 Q1 = 0")
    t.check(normalize({(2, 0)}, Algebra.R) == {(1, 1)}, "Q2Q0 = Q1Q1 in R")
    t.check(pi(2, phi_U_to_A2({(1, 1)}, 2)) == set(), "pi_2 phi_2 Q1Q1 = 0")
    hits = [s for s in basis(Algebra.R, 3, 1) if phi_R(1, {s}) == {(2, 1)}]
    t.check(not hits, "no preimage of Q2Q1 under phi_1")
    return t.result("1 identities")


def lifting_sweep(max_degree: int = 20) -> CheckResult:
    t = _Tally()
    for k in (1, 2, 3):
        for d in range(max_degree + 1):
            for s in basis(Algebra.R, d, k):
                lifted = lift(k, s)
                ok = pi(k, lifted) == {s} and all(
                    len(m) <= k and is_admissible(m, Algebra.A2) for m in lifted
                )
                t.check(ok, (k, s))
    return t.result("2 lifting sweep")


def dual_polynomiality(max_k: int = 4, max_degree: int = 6) -> CheckResult:
    t = _Tally()
    for k in range(1, max_k + 1):
        for d in range(max_degree + 1):
            m = pairing_matrix(k, d)
            size = comb(d + k - 1, k - 1)
            t.check(m.size == (size, size), f"size k={k} d={d}")
            t.check(m.is_invertible, f"rank k={k} d={d}")
            t.check(m.is_triangular, f"triangular k={k} d={d}")
    return t.result("3 dual polynomiality")


def copolynomial_dimensions(max_degree: int = 24) -> CheckResult:
    t = _Tally()
    series = poincare_series(milnor_generator_degrees(max_degree), max_degree)
    for d in range(max_degree + 1):
        t.check(len(basis(Algebra.A2, d)) == series[d], f"A2 degree {d}")
    t.check(len(basis(Algebra.A2, 7)) == 4, "A2 degree 7 has dimension 4")
    for k in (1, 2, 3):
        series = poincare_series(madsen_generator_degrees(k), max_degree)
        for d in range(max_degree + 1):
            t.check(len(basis(Algebra.R, d, k)) == series[d], f"R[{k}] degree {d}")
    t.check(len(basis(Algebra.R, 6, 2)) == 2, "R[2] degree 6 has dimension 2")
    return t.result("4 copolynomial dimensions")


def phi_proposition(max_degree: int = 20) -> CheckResult:
    t = _Tally()
    for k in (1, 2, 3):
        for d in range(1, max_degree + 1):
            for s in basis(Algebra.R, d, k):
                image = phi_R(k, {s})
                t.check(phi_R_fast(k, s) == image, ("fast", k, s))
                a = madsen_decompose(s)
                if any(v % 2 for v in a):
                    t.check(image == set(), ("odd", s))
                else:
                    expected = madsen_compose((0,) + tuple(v // 2 for v in a), k + 1)
                    t.check(image == {expected}, ("even", s))
    for k in (1, 2, 3):
        for n in (1, 2):
            for d in range(1, 25):
                for s in basis(Algebra.R, d, k):
                    if all(v % 2**n == 0 for v in madsen_decompose(s)):
                        t.check(stabilize(s, n) == stabilize_formula(s, n), ("stabilize", s, n))
    return t.result("5 phi_k proposition")


def sq_claim(max_k: int = 4) -> CheckResult:
    t = _Tally()
    for k in range(1, max_k + 1):
        for i in range(k):
            for m in range(k + 1):
                t.check(sq_claim_witnesses(k, i, m) == sq_claim_cases(k, i, m), (k, i, m))
    return t.result("6 Sq^(2^m) claim")


def nishida_well_defined(max_len: int = 3, max_degree: int = 10, max_a: int = 6) -> CheckResult:
    t = _Tally()
    for alg in (Algebra.U, Algebra.R):
        for k in range(1, max_len + 1):
            for d in range(max_degree + 1):
                for s in compositions(k, d):
                    for a in range(max_a + 1):
                        lhs = normalize(sq_act(a, {s}, Algebra.F0), alg)
                        rhs = normalize(sq_act(a, normalize({s}, alg), Algebra.F0), alg)
                        t.check(lhs == rhs, (alg.value, s, a))
    m = (3, 2)
    fails = normalize({m}, Algebra.A2) == set() and normalize(sq_act(2, {m}, Algebra.F0), Algebra.A2) == {(2, 1)}
    t.check(fails, "A2 counterexample Q3Q2, a=2")
    return t.result("7 Nishida well-definedness")


def _coalgebra_map(f: Callable, x, dom, cod) -> bool:
    lhs = tensor_map(_nf(cod), coproduct(f(x)))
    rhs = tensor_map(f, tensor_map(_nf(dom), coproduct(x)))
    return lhs == rhs


def coalgebra_laws() -> CheckResult:
    t = _Tally()
    for k in range(1, 4):
        for d in range(7):
            for s in monomials(k, d):
                x = frozenset({s})
                left = _expand(((a, b, c) for u, c in coproduct(x) for a, b in coproduct({u})))
                right = _expand(((a, b, c) for a, v in coproduct(x) for b, c in coproduct({v})))
                t.check(left == right == iterated_coproduct(x, 3), ("coassociative", s))
                cl = _counit(coproduct(x), 0)
                cr = _counit(coproduct(x), 1)
                t.check(cl == x == cr, ("counit", s))
    for d1 in range(4):
        for d2 in range(4):
            for s in monomials(2, d1):
                for u in monomials(1, d2):
                    prod = coproduct(multiply({s}, {u}))
                    sep = frozenset((a + c, b + e) for a, b in coproduct({s}) for c, e in coproduct({u}))
                    t.check(prod == sep, ("multiplicative", s, u))
    for k in range(1, 4):
        for d in range(5):
            for s in monomials(k, d):
                is_grouplike = coproduct({s}) == {(s, s)}
                t.check(is_grouplike == (s == grouplike(k)), ("grouplike", s))
        for d in range(1, 5):
            t.check(_primitive_dimension(k, d) == (k if d == 1 else 0), ("primitives", k, d))
    for k in (1, 2, 3):
        for d in range(13):
            for s in basis(Algebra.R, d, k):
                t.check(_coalgebra_map(lambda e, k=k: phi_R(k, e), {s}, Algebra.R, Algebra.R), ("phi", k, s))
            for s in basis(Algebra.A2, d, k):
                t.check(_coalgebra_map(lambda e, k=k: pi(k, e), {s}, Algebra.A2, Algebra.R), ("pi", k, s))
    return t.result("8 coalgebra laws")


def _expand(terms) -> frozenset:
    out: set = set()
    for term in terms:
        out ^= {term}
    return frozenset(out)


def _counit(t, side: int) -> frozenset:
    out: set = set()
    for tup in t:
        if augmentation({tup[side]}):
            out ^= {tup[1 - side]}
    return frozenset(out)


def _primitive_dimension(k: int, d: int) -> int:
    # kernel of x |-> psi(x) + x(x)g + g(x)x on the monomials of F0[k] in degree d
    g = grouplike(k)
    mons = monomials(k, d)
    images = []
    for s in mons:
        images.append(coproduct({s}) ^ {(s, g), (g, s)})
    support = sorted(set().union(*images)) if images else []
    rows = [pack_bits(term in img for term in support) for img in images]
    return len(mons) - rank_f2(rows)


def rewriting_order() -> CheckResult:
    t = _Tally()
    for d in range(1, 13):
        for i in range(1, d):
            s = (i, d - i)
            if is_admissible(s, Algebra.A2):
                continue
            t.check(all(compare(m, s) < 0 for m in normalize({s}, Algebra.A2)), ("decrease", s))
    for k in (1, 2, 3):
        for d in range(1, 17):
            for s in basis(Algebra.R, d, k):
                nf = normalize({lift_sequence(s)}, Algebra.R)
                t.check(s in nf and all(compare(m, s) > 0 for m in nf - {s}), ("increase", s))
    for alg, low in ((Algebra.A2, 1), (Algebra.R, 0)):
        for triple in itertools.product(range(low, 11), repeat=3):
            if sum(triple) > 12:
                continue
            x, y, z = ({(v,)} for v in triple)
            left = normalize(multiply(normalize(multiply(x, y), alg), z), alg)
            right = normalize(multiply(x, normalize(multiply(y, z), alg)), alg)
            t.check(left == right, ("associative", alg.value, triple))
    return t.result("9 rewriting order properties")


SUITES: list[Callable[[], CheckResult]] = [
    identities,
    lifting_sweep,
    dual_polynomiality,
    copolynomial_dimensions,
    phi_proposition,
    sq_claim,
    nishida_well_defined,
    coalgebra_laws,
    rewriting_order,
]


def run_all() -> list[CheckResult]:
    return [suite() for suite in SUITES]
