import math

import pytest
from hypothesis import given, strategies as st

from hallskew.errors import HypothesisError
from hallskew.numth import (
    check_linear_hypothesis,
    compatible_linear_pairs,
    e_value,
    family_cyclic_order,
    gcd_identity,
    hyp1_compatible,
    is_prime,
    prime_family,
    prime_power,
    primes_between,
    profile,
    profiles_of_order,
    psl2_pair_infeasible,
    psl_order,
    singer_congruence,
    singer_order,
    solvable_f_ok,
)

from oracles import is_prime as slow_is_prime


def test_is_prime_against_trial_division():
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if slow_is_prime(n)]


@pytest.mark.parametrize("n,expected", [(2**61 - 1, True), (2**64 + 1, False), (10**18 + 9, True), (3215031751, False)])
def test_is_prime_large(n, expected):
    assert is_prime(n) is expected


@given(st.integers(1, 400), st.integers(1, 400))
def test_primes_between_open_interval(a, b):
    lo, hi = min(a, b), max(a, b)
    assert primes_between(lo, hi) == [n for n in range(lo + 1, hi) if slow_is_prime(n)]


def test_prime_power():
    assert prime_power(64) == (2, 6)
    assert prime_power(49) == (7, 2)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            prime_power(bad)


@pytest.mark.parametrize(
    "d,q,order",
    [(2, 4, 60), (2, 8, 504), (2, 16, 4080), (3, 2, 168), (3, 3, 5616), (2, 5, 60), (2, 9, 360), (3, 4, 20160)],
)
def test_psl_order_formula(d, q, order):
    assert psl_order(d, q) == order


@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.sampled_from([2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32]))
def test_singer_congruence_always_holds(d, q):
    # (q^d - 1)/(q - 1) = 1 + q + ... + q^(d-1) ≡ d mod (q - 1)
    assert singer_congruence(d, q)
    assert singer_order(d, q) % (q - 1) == d % (q - 1)


@pytest.mark.parametrize("d,q", [(3, 2), (3, 3), (5, 2), (7, 2), (5, 3), (3, 5), (2, 8)])
def test_gcd_identity_direct(d, q):
    assert gcd_identity(d, q)
    e = singer_order(d, q)
    assert math.gcd(e, psl_order(d, q) // e) == 1
    assert all(math.gcd(e, q**j - 1) == 1 for j in range(1, d))


@pytest.mark.parametrize("d,q", [(3, 4), (2, 9), (4, 2), (3, 6)])
def test_linear_hypothesis_violations(d, q):
    with pytest.raises(HypothesisError):
        check_linear_hypothesis(d, q)


def test_e_values():
    assert e_value("alt:7") == 7
    assert e_value("sym:13") == 13
    assert e_value("psl:3,3") == 13
    assert e_value("psl:2,16") == 17
    assert e_value("psigma:2,4") == 17
    assert e_value("psl2_11") == 11
    assert e_value("m11") == 11
    assert e_value("m23") == 23
    with pytest.raises(ValueError):
        e_value("alt:6")
    with pytest.raises(ValueError):
        e_value("cyclic:5")


def test_hyp1_compatible():
    ok, bad = hyp1_compatible([profile("psl2_11"), profile("alt:7")])
    assert ok and bad is None
    ok, bad = hyp1_compatible([profile("alt:5"), profile("alt:7")])
    assert not ok and bad == (1, 0)  # gcd(|A7|, e(A5)) = gcd(2520, 5) = 5
    ok, _ = hyp1_compatible([profile("psl:2,4"), profile("psl:3,2")])
    assert ok


def test_prime_family_small():
    rep = prime_family(2, 3)
    assert rep.family == (5, 7) and rep.ok
    assert family_cyclic_order(rep) == singer_order(5, 32) * singer_order(7, 128)
    # every (i, j, k) appears, with k < d_i on the diagonal
    expected = sum(dj - (1 if i == j else 0) for i in range(2) for j, dj in enumerate(rep.family))
    assert len(rep.checks) == expected
    rep5 = prime_family(2, 5)
    assert rep5.family == (7, 11, 13, 17, 19, 23) and rep5.r == 6 and rep5.ok


def test_prime_family_rejects():
    with pytest.raises(ValueError):
        prime_family(3, 2)
    with pytest.raises(ValueError):
        prime_family(2, 4)


def test_psl2_pairs():
    assert psl2_pair_infeasible(2, 4)
    assert psl2_pair_infeasible(1, 2)
    assert all(psl2_pair_infeasible(e, f) for f in range(2, 11) for e in range(1, f))
    with pytest.raises(ValueError):
        psl2_pair_infeasible(3, 3)


def test_solvable_f():
    assert [f for f in range(1, 25) if solvable_f_ok(f)] == [f for f in range(1, 25) if f % 6 in (2, 4)]


def test_profiles_of_order():
    assert sorted(str(p.descriptor) for p in profiles_of_order(60)) == ["alt:5", "psl:2,4"]
    assert [str(p.descriptor) for p in profiles_of_order(168)] == ["psl:3,2"]
    assert [str(p.descriptor) for p in profiles_of_order(7920)] == ["m11"]


def test_search_harness_pairs_are_compatible():
    pairs = compatible_linear_pairs(10**5, 3)
    assert pairs
    for a, b in pairs:
        assert hyp1_compatible([a, b])[0]
