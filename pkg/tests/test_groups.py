import pytest
from hypothesis import given, settings, strategies as st

from hallskew.errors import BoundExceeded, DegreeMismatch, NotASubgroup
from hallskew.groups import (
    PermGroup,
    coset_action,
    count_involutions,
    cyclic_core_order,
    intersection_order,
    normal_closure,
    parse_group,
)
from hallskew.perm import Permutation
from hallskew.zoo.build import build_group

from oracles import closure, compose, right_cosets

SMALL_ZOO = [
    ("sym:4", 24), ("sym:5", 120), ("sym:6", 720),
    ("alt:5", 60), ("alt:6", 360), ("alt:7", 2520),
    ("psl:3,2", 168), ("psl:2,4", 60), ("psl:2,8", 504), ("psl:2,16", 4080),
    ("psigma:2,2", 120), ("psl2_11", 660),
    ("d8", 8), ("dihedral:10", 10), ("cyclic:12", 12),
    ("wreath:5", 50), ("wreath:7", 98),
]  # fmt: skip


@pytest.mark.parametrize("desc,order", SMALL_ZOO)
def test_chain_order_matches_closure(desc, order):
    G = build_group(desc)
    elems = closure([g.images for g in G.generators], G.degree)
    assert len(elems) == G.order == order
    assert set(G.element_images()) == elems


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.lists(st.permutations(range(n)).map(tuple), min_size=1, max_size=3)))
def test_random_generators_match_closure(gens):
    n = len(gens[0])
    G = PermGroup([Permutation(g) for g in gens], n)
    elems = closure(gens, n)
    assert G.order == len(elems)
    for x in list(elems)[:20]:
        assert G.chain.contains(x)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 6).flatmap(lambda n: st.tuples(
    st.lists(st.permutations(range(n)).map(tuple), min_size=1, max_size=2),
    st.permutations(range(n)).map(tuple),
)))
def test_min_coset_rep_is_coset_invariant(data):
    gens, x = data
    n = len(x)
    H = PermGroup([Permutation(g) for g in gens], n)
    coset = {compose(h, x) for h in closure(gens, n)}
    reps = {H.min_coset_rep(y) for y in coset}
    assert reps == {min(coset)}


def test_coset_action_s4_on_d8():
    S4, D8 = build_group("sym:4"), build_group("d8")
    act = coset_action(S4, D8)
    assert act.index == 3
    assert act.image.order == 6
    assert act.core.order == 4
    assert act.core == normal_closure(S4, [Permutation.from_cycles("(1,2)(3,4)", 4)])


def test_coset_action_matches_brute_cosets():
    A5 = build_group("alt:5")
    H = A5.stabilizer(0)
    act = coset_action(A5, H)
    cosets = right_cosets(A5.element_images(), H.element_images())
    assert act.index == len(cosets) == 5
    assert act.core.order == 1
    assert act.reps[0].is_identity()


def test_coset_action_errors():
    S4 = build_group("sym:4")
    with pytest.raises(NotASubgroup):
        coset_action(build_group("alt:4"), build_group("d8"))
    with pytest.raises(DegreeMismatch):
        coset_action(S4, build_group("alt:5"))
    with pytest.raises(BoundExceeded):
        coset_action(S4, PermGroup.trivial(4), index_bound=10)


def test_cyclic_core_and_intersection():
    S4 = build_group("sym:4")
    assert cyclic_core_order(S4, Permutation.from_cycles("(1,2,3)", 4)) == 1
    assert cyclic_core_order(S4, Permutation.from_cycles("(1,2)(3,4)", 4)) == 1
    D8 = build_group("d8")
    A4 = build_group("alt:4")
    assert intersection_order(D8, A4) == 4
    W = build_group("wreath:5")
    # the swap moves <a> to the other coordinate, so <a> has trivial core
    a = W.generators[0]
    assert a.order() == 5
    assert cyclic_core_order(W, a) == 1


def test_involution_counts_small():
    assert count_involutions(build_group("sym:4")) == 9
    assert count_involutions(build_group("alt:5")) == 15
    assert count_involutions(build_group("psl:3,2")) == 21


def test_group_json_roundtrip():
    G = build_group("psl:3,2")
    H = parse_group(G.to_json())
    assert H == G
    with pytest.raises(ValueError):
        parse_group({**G.to_json(), "order": "169"})
