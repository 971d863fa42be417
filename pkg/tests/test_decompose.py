import pytest

from hallskew.errors import HypothesisError
from hallskew.maps.decompose import (
    hall_cayley_certificate,
    product_graph,
    setup_product,
    socle_check,
    verify_decomposition,
)
from hallskew.maps.graphs import complete_graph, cycle_graph


def test_product_graph_shapes():
    g = product_graph([cycle_graph(4), cycle_graph(6), complete_graph(2)], 2)
    assert g.n == 24
    assert g.is_regular(4)  # 2 * 2 * 1


def test_direct_product_full():
    rep = verify_decomposition(["psl:2,4", "psl:3,2"], full=True)
    assert rep.ok and rep.mode == "full"
    assert (rep.vertices, rep.edges, rep.K_order) == (288, 5040, 35)


def test_single_twisted_factor():
    rep = verify_decomposition(["alt:5", "psl:3,2"], s=1, full=True)
    assert rep.ok


def test_sampled_mode_small():
    rep = verify_decomposition(["psl:2,4", "psl:3,2"], edge_bound=10, samples=400, seed=3)
    assert rep.ok and rep.mode == "sampled" and rep.checked == 400


def test_coprime_rotations_required():
    with pytest.raises(HypothesisError):
        setup_product(["alt:5", "psl:2,4"])


def test_certificates():
    setup = setup_product(["psl:2,4", "psl:3,2"])
    cert = hall_cayley_certificate(setup)
    assert cert.ok and cert.H_order == 12 * 24 and cert.V == 288
    soc = socle_check(setup)
    assert soc.ok and soc.index == 1
    twisted = setup_product(["alt:5", "psl:3,2"], s=1)
    assert socle_check(twisted).index == 2
