import pytest
from hypothesis import given, settings, strategies as st

from hallskew.maps.graphs import Graph, bidirect_product, complete_graph, cycle_graph, direct_product
from hallskew.maps.rotary import (
    RotaryPair,
    build_map,
    coset_graph,
    edge_projection,
    example_rotary_pair,
    is_rotary_pair,
)
from hallskew.groups import PermGroup
from hallskew.perm import Permutation
from hallskew.zoo.build import build_group

from oracles import closure, product_edges


def test_k2_times_k2():
    g = direct_product(complete_graph(2), complete_graph(2))
    assert g.n == 4 and g.edge_count == 2 and g.components() == 2


def test_c4_times_k2():
    g = direct_product(cycle_graph(4), complete_graph(2))
    assert g.n == 8 and g.edge_count == 8 and g.components() == 2
    assert g.is_regular(2)


def test_c6_bidirect_k2_is_c6():
    g = bidirect_product(cycle_graph(6), complete_graph(2))
    assert g.n == 6 and g.edge_count == 6 and g.components() == 1
    assert g.is_regular(2)
    assert g.bipartition is not None


def test_bidirect_needs_bipartition():
    with pytest.raises(ValueError):
        bidirect_product(cycle_graph(5), complete_graph(2))


def graphs(max_n=6):
    return st.integers(2, max_n).flatmap(
        lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])).map(
            lambda es: Graph.from_edges(n, es)
        )
    )


@settings(max_examples=50, deadline=None)
@given(graphs(), graphs())
def test_direct_product_matches_oracle(A, B):
    assert direct_product(A, B).edges == product_edges(A.edges, B.edges, B.n)


def test_graph_validation_and_export():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, frozenset({(1, 0)}))
    g = cycle_graph(4)
    assert g.to_json()["edges"] == [[0, 1], [0, 3], [1, 2], [2, 3]]
    assert g.to_dot().startswith("graph G {") and "0 -- 1;" in g.to_dot()


def a5_pair():
    return RotaryPair(build_group("alt:5"), Permutation.from_cycles("(1,2,3,4,5)", 5), Permutation.from_cycles("(1,2)(3,4)", 5))


def test_a5_coset_graph():
    pair = a5_pair()
    cg = coset_graph(pair)
    assert cg.graph.n == 12 and cg.graph.edge_count == 30
    assert cg.graph.is_regular(5)
    assert edge_projection(pair, cg) == cg.graph.edges


def test_adjacency_tests_agree():
    pair = a5_pair()
    elems = pair.G.element_images()
    for x in elems[:12]:
        for y in elems:
            assert pair.adjacent(x, y) == pair.adjacent_by_reduction(x, y)


def test_maps_a5_s5():
    m = build_map(a5_pair(), "rotary")
    assert (m.V, m.E, m.F, m.chi, m.genus) == (12, 30, 20, 2, 0)
    b = build_map(a5_pair(), "birotary")
    assert (b.F, b.face_stabilizer_order, b.chi) == (6, 10, -12)
    s5 = build_map(example_rotary_pair("sym:5"), "rotary")
    assert (s5.chi, s5.genus) == (-6, 4)


def test_s3_coset_graph_is_k2():
    S3 = PermGroup.from_cycles(["(1,2,3)", "(1,2)"], 3)
    cg = coset_graph(RotaryPair(S3, Permutation.from_cycles("(1,2,3)", 3), Permutation.from_cycles("(1,2)", 3)))
    assert cg.graph.n == 2 and cg.graph.edge_count == 1
    assert cg.graph.bipartition is not None


def test_psl2_11_graph():
    pair = example_rotary_pair("psl2_11")
    cg = coset_graph(pair)
    assert cg.graph.n == 60 and cg.graph.is_regular(11)


def test_rotary_pair_checks():
    G = build_group("alt:5")
    rho = Permutation.from_cycles("(1,2,3,4,5)", 5)
    assert not is_rotary_pair(G, rho, Permutation.from_cycles("(1,2,3)", 5))
    # <(1,2,3,4,5), (2,5)(3,4)> is dihedral
    assert not is_rotary_pair(G, rho, Permutation.from_cycles("(2,5)(3,4)", 5))
    with pytest.raises(ValueError):
        is_rotary_pair(G, rho, Permutation.from_cycles("(1,2)", 5))


def test_closure_of_pair_is_group():
    pair = a5_pair()
    assert len(closure([pair.rho.images, pair.z.images], 5)) == 60
