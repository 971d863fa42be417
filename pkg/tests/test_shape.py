import pytest

from hallskew.factorization import certify_factorization
from hallskew.perm import Permutation
from hallskew.shape import is_simple_nonabelian, minimal_normal_subgroups, shape_check
from hallskew.zoo.build import build_group, hall_triple


def test_minimal_normal_s4():
    mins = minimal_normal_subgroups(build_group("sym:4"))
    assert [M.order for M in mins] == [4]


def test_minimal_normal_direct_product():
    from hallskew.zoo.build import assemble

    G = assemble(["alt:5", "psl:3,2"]).G
    assert sorted(M.order for M in minimal_normal_subgroups(G)) == [60, 168]


@pytest.mark.parametrize("desc,simple", [("alt:5", True), ("psl:3,2", True), ("alt:4", False), ("cyclic:5", False), ("sym:5", False)])
def test_simplicity(desc, simple):
    assert is_simple_nonabelian(build_group(desc)) is simple


def test_s4_shape_one():
    f = certify_factorization(build_group("sym:4"), build_group("d8"), Permutation.from_cycles("(1,2,3)", 4))
    rep = shape_check(f)
    assert rep.shape == 1 and rep.N_order == 4 and rep.Gbar_order == 6
    assert rep.k_normal and rep.centralizer_order == 1


def test_wreath_shape():
    rep = shape_check(certify_factorization(*hall_triple("wreath:5")))
    # D10 contains the normal diagonal Z5, so the core of H has order 10 and G/N is cyclic of order 5
    assert rep.shape == 1 and rep.N_order == 10 and rep.Gbar_order == 5
    assert not rep.hall


@pytest.mark.parametrize("desc", ["psl2_11", "psl:3,2", "alt:7", "m11"])
def test_simple_groups_shape_two(desc):
    rep = shape_check(certify_factorization(*hall_triple(desc)))
    assert rep.shape == 2 and rep.N_order == 1
    assert rep.hyp1_ok
    assert len(rep.factors) == 1 and rep.factors[0].simple
    assert not rep.falsification_candidate
    assert rep.to_json()["shape"] == 2
