import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from qalgebra.duality import madsen_generator_degrees, milnor_generator_degrees, poincare_series
from qalgebra.errors import DomainError, GuardError
from qalgebra.freealg import multiply
from qalgebra.quotients import (
    Algebra,
    basis,
    basis_vector_I,
    basis_vector_J,
    is_admissible,
    madsen_compose,
    madsen_decompose,
    milnor_compose,
    milnor_decompose,
    milnor_primitive,
    normalize,
    u_decompose,
)
from qalgebra.seqcore import binom_mod2, compare, compositions, excess, suffix

from conftest import monomials_up_to

from math import comb


def adem_sum_cohomology(i, j):
    # brute force over the whole sum, exact integer binomials
    out = set()
    for k in range(0, i // 2 + 1):
        n, r = j - k - 1, i - 2 * k
        if n >= r >= 0 and comb(n, r) % 2:
            out ^= {tuple(v for v in (i + j - k, k) if v)}
    return out


def adem_sum_homology(r, s):
    out = set()
    for t in range(1, r + s + 1):
        n, m = t - s - 1, 2 * t - r
        if n >= m >= 0 and comb(n, m) % 2:
            out ^= {(r + s - t, t)}
    return out


@pytest.mark.parametrize("k,t,expected", [(2, 0, (2, 1)), (2, 1, (1, 1)), (3, 1, (3, 2, 1))])
def test_basis_vector_I_examples(k, t, expected):
    assert basis_vector_I(k, t) == expected


def test_basis_vector_I_degrees():
    for k in range(1, 7):
        for t in range(k):
            v = basis_vector_I(k, t)
            assert len(v) == k and sum(v) == 2**k - 2**t
            assert is_admissible(v, Algebra.R)
    with pytest.raises(DomainError):
        basis_vector_I(2, 2)


@pytest.mark.parametrize("k,t,expected", [(3, 1, (1, 1, 0)), (3, 2, (2, 1, 1)), (4, 2, (2, 1, 1, 0))])
def test_basis_vector_J_examples(k, t, expected):
    assert basis_vector_J(k, t) == expected
    assert sum(expected) == 2**t


def test_basis_vector_J_must_fit():
    with pytest.raises(DomainError):
        basis_vector_J(3, 3)


def test_is_admissible_examples():
    assert is_admissible((3, 2), Algebra.R)
    assert is_admissible((3, 1), Algebra.A2)
    assert not is_admissible((1, 2), Algebra.U)
    assert is_admissible((), Algebra.A2)
    assert not is_admissible((2, 0), Algebra.A2)
    assert is_admissible((0, 0), Algebra.R)
    assert not is_admissible((1, 0), Algebra.R)
    for alg in (Algebra.F0, Algebra.F):
        with pytest.raises(DomainError):
            is_admissible((1,), alg)


def test_r_admissible_zeros_only_in_zero_sequence():
    for s in monomials_up_to(3, 8):
        if is_admissible(s, Algebra.R) and 0 in s:
            assert not any(s)


@pytest.mark.parametrize(
    "s,alg,expected",
    [
        ((1, 2), "a2", {(3,)}),
        ((3, 2), "a2", set()),
        ((1, 0), "r", set()),
        ((2, 0), "r", {(1, 1)}),
        ((4, 1), "r", {(3, 2)}),
        ((2, 2), "a2", {(3, 1)}),
        ((2, 0, 1), "f", {(2, 1)}),
        ((1, 2), "u", set()),
        ((1, 2), "f0", {(1, 2)}),
    ],
)
def test_normalize_examples(s, alg, expected):
    assert normalize({s}, alg) == expected


def test_adem_pairs_match_oracle():
    for i in range(1, 16):
        for j in range(1, 16):
            if i < 2 * j:
                assert normalize({(i, j)}, Algebra.A2) == normalize(adem_sum_cohomology(i, j), Algebra.A2)
    for r in range(0, 16):
        for s in range(0, 8):
            if r > 2 * s:
                assert normalize({(r, s)}, Algebra.R) == normalize(adem_sum_homology(r, s), Algebra.R)


def test_normal_forms_are_admissible():
    for s in monomials_up_to(3, 10):
        assert all(is_admissible(m, Algebra.A2) for m in normalize({s}, Algebra.A2))
        for m in normalize({s}, Algebra.R):
            assert len(m) == len(s) and is_admissible(m, Algebra.R)


@pytest.mark.parametrize("alg", list(Algebra))
def test_idempotence(alg):
    for s in monomials_up_to(3, 10):
        once = normalize({s}, alg)
        assert normalize(once, alg) == once


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.integers(0, 5), min_size=1, max_size=2).map(tuple),
    st.lists(st.integers(0, 5), min_size=1, max_size=2).map(tuple),
    st.sampled_from([Algebra.F, Algebra.A2, Algebra.U, Algebra.R]),
)
def test_normalize_respects_products(s, t, alg):
    lhs = normalize(multiply({s}, {t}), alg)
    rhs = normalize(multiply(normalize({s}, alg), normalize({t}, alg)), alg)
    assert lhs == rhs


def test_cohomology_adem_decreases_in_order():
    for d in range(2, 13):
        for i in range(1, d):
            s = (i, d - i)
            if not is_admissible(s, Algebra.A2):
                assert all(compare(m, s) < 0 for m in normalize({s}, Algebra.A2))


def _negative_excess_words(max_len, max_degree):
    for s in monomials_up_to(max_len, max_degree):
        if excess(s) < 0:
            yield s


def test_u_kills_exactly_the_negative_excess_ideal():
    # ideal side: A * J * B with e(J) < 0 always dies
    for j in _negative_excess_words(2, 5):
        for a in monomials_up_to(1, 3, min_len=0):
            for b in monomials_up_to(1, 3, min_len=0):
                word = a + j + b
                if sum(word) <= 8:
                    assert normalize({word}, Algebra.U) == set()
    # quotient side: death iff some suffix has negative excess
    for s in monomials_up_to(3, 8):
        dead = any(excess(suffix(s, t)) < 0 for t in range(1, len(s) + 1))
        assert (normalize({s}, Algebra.U) == set()) == dead


@pytest.mark.parametrize(
    "alg,degree,length,expected",
    [
        ("a2", 7, None, [(7,), (6, 1), (5, 2), (4, 2, 1)]),
        ("r", 6, 2, [(4, 2), (3, 3)]),
        ("f0", 2, 2, [(2, 0), (1, 1), (0, 2)]),
    ],
)
def test_basis_examples(alg, degree, length, expected):
    assert basis(alg, degree, length) == expected


def test_basis_needs_length():
    for alg in ("f0", "u", "r"):
        with pytest.raises(DomainError):
            basis(alg, 3)


def test_a2_basis_matches_brute_force():
    for d in range(13):
        brute = {
            s
            for k in range(d + 1)
            for s in compositions(k, d)
            if all(s) and all(s[p] >= 2 * s[p + 1] for p in range(len(s) - 1))
        }
        assert set(basis(Algebra.A2, d)) == brute
        for cap in range(1, 4):
            assert set(basis(Algebra.A2, d, cap)) == {s for s in brute if len(s) <= cap}


def test_f_dimensions_are_compositions():
    for d in range(1, 13):
        assert len(basis(Algebra.F, d)) == 2 ** (d - 1)


def test_a2_dimensions_match_milnor_series():
    series = poincare_series(milnor_generator_degrees(24), 24)
    assert [len(basis(Algebra.A2, d)) for d in range(25)] == series


def test_madsen_parametrisation_complete():
    for k in (1, 2, 3):
        series = poincare_series(madsen_generator_degrees(k), 20)
        for d in range(21):
            composed = {
                madsen_compose(a, k)
                for a in itertools.product(range(d + 1), repeat=k)
                if sum(c * (2**k - 2**t) for t, c in enumerate(a)) == d
            }
            assert set(basis(Algebra.R, d, k)) == composed
            assert len(composed) == series[d]


@pytest.mark.parametrize("n,expected", [(0, (1,)), (1, (2, 1)), (2, (4, 2, 1))])
def test_milnor_primitive(n, expected):
    assert milnor_primitive(n) == expected
    assert sum(expected) == 2 ** (n + 1) - 1


@pytest.mark.parametrize("s,k,expected", [((2, 1), 2, (0, 1)), ((3,), 1, (3,)), ((2,), 2, (2, 0)), ((4, 2, 1), 3, (0, 0, 1))])
def test_milnor_decompose_examples(s, k, expected):
    assert milnor_decompose(s, k) == expected


@pytest.mark.parametrize("n,k,expected", [((0, 1), 2, (2, 1)), ((1, 0), 2, (1,)), ((1, 1), 2, (3, 1))])
def test_milnor_compose_examples(n, k, expected):
    assert milnor_compose(n, k) == expected


def test_milnor_round_trips():
    for d in range(13):
        for s in basis(Algebra.A2, d):
            for k in range(max(len(s), 1), len(s) + 2):
                assert milnor_compose(milnor_decompose(s, k), k) == s
    for k in (1, 2, 3, 4):
        for n in itertools.product(range(5), repeat=k):
            s = milnor_compose(n, k)
            if sum(s) <= 12:
                assert is_admissible(s, Algebra.A2)
                assert milnor_decompose(s, k) == n


def test_milnor_decompose_rejects_inadmissible():
    with pytest.raises(DomainError):
        milnor_decompose((2, 2), 2)
    with pytest.raises(DomainError):
        milnor_decompose((4, 2, 1), 2)


@pytest.mark.parametrize("s,expected", [((3, 2), (1, 1)), ((2, 1), (1, 0)), ((4, 2), (2, 0))])
def test_madsen_decompose_examples(s, expected):
    assert madsen_decompose(s) == expected


@pytest.mark.parametrize("a,k,expected", [((1, 1), 2, (3, 2)), ((1, 0), 2, (2, 1)), ((0, 3), 2, (3, 3)), ((0, 0), 2, (0, 0))])
def test_madsen_compose_examples(a, k, expected):
    assert madsen_compose(a, k) == expected


def test_madsen_round_trip_and_excess():
    for k in (1, 2, 3, 4):
        for d in range(1, 25):
            for s in basis(Algebra.R, d, k):
                a = madsen_decompose(s)
                assert madsen_compose(a, k) == s
                assert a[0] == excess(s)


def test_madsen_decompose_rejects_inadmissible():
    for bad in [(5, 1), (1, 2), ()]:
        with pytest.raises(DomainError):
            madsen_decompose(bad)


def test_u_decompose_examples():
    assert u_decompose((1, 1, 0), 3) == (1, 0)
    assert u_decompose((2, 1, 1), 3) == (0, 1)
    assert u_decompose((3, 2, 1), 3) == (1, 1)
    # an odd last entry with nothing above it is out of reach
    with pytest.raises(DomainError):
        u_decompose((0, 0, 1), 3)


def test_u_decompose_reconstructs():
    for a in itertools.product(range(4), repeat=2):
        s = tuple(a[0] * x + a[1] * y for x, y in zip(basis_vector_J(3, 1), basis_vector_J(3, 2)))
        assert u_decompose(s, 3) == a


@pytest.mark.parametrize("alg", [Algebra.A2, Algebra.R])
def test_associativity_safety_net(alg):
    rng = random.Random(20260101)
    low = 1 if alg is Algebra.A2 else 0
    for _ in range(300):
        x, y, z = ({(rng.randint(low, 6),)} for _ in range(3))
        left = normalize(multiply(normalize(multiply(x, y), alg), z), alg)
        right = normalize(multiply(x, normalize(multiply(y, z), alg)), alg)
        assert left == right


def test_rewrite_guard_trips():
    with pytest.raises(GuardError):
        normalize({(1, 2, 4, 8)}, Algebra.A2, max_steps=1)
    with pytest.raises(GuardError):
        normalize({(20, 2, 1)}, Algebra.R, max_steps=1)


def test_unknown_algebra():
    with pytest.raises(DomainError):
        normalize({(1,)}, "a3")


def test_binom_truncation_makes_adem_sums_finite():
    # homology sum is empty for Q^1 Q^0 and single-term for Q^2 Q^0
    assert normalize({(1, 0)}, Algebra.R) == set()
    assert binom_mod2(0, 0) == 1
