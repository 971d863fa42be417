import pytest
from hypothesis import given, settings, strategies as st

from hallskew.errors import DegreeMismatch, NotAFactorization, NotASubgroup
from hallskew.factorization import certify_factorization, decomposition_is_bijective
from hallskew.perm import Permutation
from hallskew.zoo.build import build_group, hall_triple

from oracles import compose


def test_s4_d8():
    S4, D8 = build_group("sym:4"), build_group("d8")
    f = certify_factorization(S4, D8, Permutation.from_cycles("(1,2,3)", 4))
    assert f.is_hall and f.k_order == 3
    assert f.k_core_free
    assert f.h_core_order == 4 and f.h_core_free is False
    assert f.to_json()["|G|"] == "24"


def test_not_a_factorization():
    S4, A4 = build_group("sym:4"), build_group("alt:4")
    with pytest.raises(NotAFactorization, match="meets"):
        certify_factorization(S4, A4, Permutation.from_cycles("(1,2)(3,4)", 4))
    with pytest.raises(NotAFactorization, match="!="):
        certify_factorization(S4, A4, Permutation.from_cycles("(1,2,3)", 4))
    with pytest.raises(NotASubgroup):
        certify_factorization(A4, build_group("d8"), Permutation.from_cycles("(1,2,3)", 4))
    with pytest.raises(NotAFactorization, match="not an element"):
        certify_factorization(A4, A4.stabilizer(0), Permutation.from_cycles("(1,2)", 4))


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        certify_factorization(build_group("sym:4"), build_group("alt:5"), Permutation.from_cycles("(1,2,3)", 4))


@pytest.mark.parametrize("desc", ["alt:5", "sym:5", "psl:3,2", "psl:2,8", "psl2_11", "psigma:2,2", "wreath:5"])
def test_decomposition_bijective(desc):
    f = certify_factorization(*hall_triple(desc))
    assert decomposition_is_bijective(f)


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_decompose_inverts_product(data):
    f = certify_factorization(*hall_triple("psl:3,2"))
    hs = f.H.element_images()
    h = data.draw(st.sampled_from(hs))
    j = data.draw(st.integers(0, f.k_order - 1))
    g = h
    for _ in range(j):
        g = compose(g, f.k.images)
    h2, j2 = f.decompose(Permutation(g))
    assert (h2.images, j2) == (h, j)
