import itertools

import pytest

from hallskew.errors import HypothesisError
from hallskew.groups import PermGroup
from hallskew.numth import descriptor_order, psl_order, singer_order
from hallskew.perm import Permutation
from hallskew.zoo import linear
from hallskew.zoo.build import assemble, build_group, outer_involution, simple_part, standard_h, standard_k
from hallskew.zoo.descriptors import GroupDescriptor, parse_descriptor
from hallskew.zoo.field import field, least_primitive_polynomial
from hallskew.zoo.named import find_a5, wreath_parts

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64]


@pytest.mark.parametrize(
    "text,expected",
    [
        ("alt:7", "alt:7"),
        ("PSL:3,2", "psl:3,2"),
        ("l2_11", "psl2_11"),
        ("psl:2,11", "psl2_11"),
        ("d8", "dihedral:8"),
        ("psigma:2,4", "psigma:2,4"),
        (" m23 ", "m23"),
    ],
)
def test_descriptor_grammar(text, expected):
    assert str(parse_descriptor(text)) == expected


@pytest.mark.parametrize("bad", ["foo:3", "alt", "alt:x", "psl:3", "m11:2", "alt:0"])
def test_descriptor_rejects(bad):
    with pytest.raises(ValueError):
        parse_descriptor(bad)


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_field_axioms(q):
    F = field(q)
    els = range(q)
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a
    sample = list(els)[: min(q, 12)]
    for a, b, c in itertools.product(sample, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, q - 1) == 1
    # the generator is primitive
    assert len({F.pow(F.gen, i) for i in range(q - 1)}) == q - 1
    # Frobenius is additive
    for a, b in itertools.product(sample, repeat=2):
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))


def test_least_primitive_polynomial_known():
    assert least_primitive_polynomial(2, 2) == (1, 1, 1)  # x^2 + x + 1
    assert least_primitive_polynomial(2, 3) == (1, 1, 0, 1)  # x^3 + x + 1
    assert least_primitive_polynomial(2, 4) == (1, 1, 0, 0, 1)  # x^4 + x + 1
    assert least_primitive_polynomial(3, 2) == (2, 1, 1)  # x^2 + x + 2


def test_subfield_basis():
    F = field(16)
    for x in F.subfield_basis(4):
        assert F.pow(x, 4) == x
    with pytest.raises(ValueError):
        F.subfield_basis(8)


@pytest.mark.parametrize("d,q", [(2, 4), (2, 8), (2, 16), (3, 2), (3, 3)])
def test_psl_orders(d, q):
    G = linear.psl(d, q)
    assert G.order == psl_order(d, q)
    assert G.degree == (q**d - 1) // (q - 1)
    assert G.is_transitive()


@pytest.mark.parametrize("d,q", [(2, 4), (2, 8), (2, 16), (3, 2), (3, 3)])
def test_singer_cycle(d, q):
    s = linear.singer_cycle(d, q)
    assert s.order() == singer_order(d, q) == s.degree
    assert linear.psl(d, q).contains(s)


@pytest.mark.parametrize("d,q", [(2, 5), (2, 7), (2, 9), (4, 2), (3, 4)])
def test_projective_construction_outside_hypothesis(d, q):
    # the generators still give PSL on projective points; only the public builder refuses
    assert linear._psl_unchecked(d, q).order == psl_order(d, q)


def test_linear_hypothesis_enforced():
    with pytest.raises(HypothesisError):
        linear.psl(3, 4)


def test_psl_sigma():
    G, phi = linear.psl_sigma(2, 4)
    assert G.order == 2 * psl_order(2, 16)
    assert not linear.psl(2, 16).contains(phi)
    assert linear.subfield_psl(2, 4).order == 60


@pytest.mark.parametrize(
    "desc",
    ["alt:5", "sym:7", "psl:3,2", "psigma:2,2", "psl2_11", "m11", "dihedral:10", "cyclic:6", "wreath:5"],
)
def test_build_orders(desc):
    assert build_group(desc).order == descriptor_order(parse_descriptor(desc))


def test_mathieu_orders():
    assert build_group("m11").order == 7920
    assert build_group("m23").order == 10200960


def test_psl2_11_on_eleven_points():
    G = build_group("psl2_11")
    assert G.degree == 11 and G.order == 660
    assert standard_h("psl2_11").order == 60
    assert standard_k("psl2_11").order() == 11
    assert find_a5(G).order == 60


def test_wreath_parts():
    a, b, swap = wreath_parts(5)
    assert a * b == b * a
    assert a.conjugate(swap) == b
    assert standard_h("wreath:5").order == 10


def test_simple_part():
    assert simple_part("psigma:2,4") == GroupDescriptor("psl", (2, 16))
    assert simple_part("sym:7") == GroupDescriptor("alt", (7,))


def test_outer_involutions():
    z = outer_involution("alt:7")
    assert str(z) == "(1,2)"
    x_phi = outer_involution("psl:2,16")
    T = build_group("psl:2,16")
    assert (x_phi * x_phi).is_identity()
    assert not T.contains(x_phi)
    assert T.is_normal_in(PermGroup(list(T.generators) + [x_phi], T.degree))


def test_assemble_direct_and_twisted():
    asm = assemble(["psl:2,4", "psl:3,2"])
    assert asm.G.order == 60 * 168 and asm.G.degree == 12
    twisted = assemble(["alt:5", "alt:7"], 2, [Permutation.from_cycles("(1,2)", 5), Permutation.from_cycles("(1,2)", 7)])
    assert twisted.G.order == 2 * 60 * 2520
    with pytest.raises(ValueError):
        assemble(["alt:5"], 1, [Permutation.from_cycles("(1,2)(3,4)", 5)])
