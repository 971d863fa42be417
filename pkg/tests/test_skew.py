import pytest

from hallskew.errors import BoundExceeded, NotCoreFree
from hallskew.factorization import certify_factorization
from hallskew.groups import PermGroup
from hallskew.perm import Permutation
from hallskew.skew import (
    brute_enumerate,
    identity_skew,
    is_automorphism,
    is_hall_skew,
    mutate_swap,
    skew_from_factorization,
    verify_axioms,
)
from hallskew.zoo.build import build_group, hall_triple

from oracles import is_skew


def d8_skew():
    S4, D8 = build_group("sym:4"), build_group("d8")
    return skew_from_factorization(certify_factorization(S4, D8, Permutation.from_cycles("(1,2,3)", 4)))


def test_d8_order_three():
    s = d8_skew()
    assert s.order == 3
    assert not s.trivial
    assert len(set(s.pi)) > 1
    assert is_hall_skew(s) and s.faithful
    assert verify_axioms(s).ok
    assert is_skew(s.elements, s.rho, s.pi)


def test_d8_in_brute_enumeration():
    found = brute_enumerate(build_group("d8"))
    assert len(found) == 20
    assert d8_skew() in found
    assert sum(t.trivial for t in found) == 8  # |Aut(D8)|


@pytest.mark.parametrize("desc,count,autos", [("cyclic:4", 2, 2), ("cyclic:5", 4, 4), ("cyclic:6", 4, 2), ("cyclic:8", 6, 4), ("dihedral:6", 12, 6)])
def test_brute_counts(desc, count, autos):
    found = brute_enumerate(build_group(desc))
    assert len(found) == count
    assert sum(t.trivial for t in found) == autos
    for t in found:
        assert is_skew(t.elements, t.rho, t.pi)


def test_brute_bound():
    with pytest.raises(BoundExceeded):
        brute_enumerate(build_group("cyclic:12"))


def test_wreath_gives_automorphism():
    f = certify_factorization(*hall_triple("wreath:5"))
    s = skew_from_factorization(f)
    assert s.order == 5 and s.trivial
    assert is_automorphism(s)
    assert verify_axioms(s).ok


def test_s5_order_five():
    s = skew_from_factorization(certify_factorization(*hall_triple("sym:5")))
    assert s.order == 5 and not s.trivial
    assert verify_axioms(s).ok


def test_mutation_detected():
    s = d8_skew()
    bad = mutate_swap(s, 1, 2)
    res = verify_axioms(bad)
    assert not res.ok and res.witness is not None
    assert not is_skew(bad.elements, bad.rho, bad.pi)


def test_identity_skew():
    s = identity_skew(build_group("d8"))
    assert s.order == 1 and s.trivial and verify_axioms(s).ok


def test_not_core_free():
    # D8 = <(1,3)><(1,2,3,4)> with the rotation subgroup normal
    G = PermGroup.from_cycles(["(1,2,3,4)", "(1,3)"], 4)
    H = PermGroup.from_cycles(["(1,3)"], 4)
    f = certify_factorization(G, H, Permutation.from_cycles("(1,2,3,4)", 4))
    assert f.k_core_order == 4
    with pytest.raises(NotCoreFree):
        skew_from_factorization(f)


def test_axiom_bound():
    with pytest.raises(BoundExceeded):
        verify_axioms(d8_skew(), bound=4)
