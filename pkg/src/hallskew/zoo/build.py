"""Descriptor -> group constructors, standard factorizations, product assembly."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from hallskew.errors import HypothesisError
from hallskew.groups import PermGroup
from hallskew.numth import check_linear_hypothesis, descriptor_order, is_prime
from hallskew.perm import Permutation
from hallskew.zoo import linear, named
from hallskew.zoo.descriptors import GroupDescriptor, parse_descriptor


def _desc(d: GroupDescriptor | str) -> GroupDescriptor:
    return parse_descriptor(d) if isinstance(d, str) else d


@lru_cache(maxsize=None)
def _build(desc: GroupDescriptor) -> PermGroup:
    kind, a = desc.kind, desc.params
    if kind == "alt":
        return named.alternating(a[0])
    if kind == "sym":
        return named.symmetric(a[0])
    if kind == "cyclic":
        return named.cyclic(a[0])
    if kind == "dihedral":
        return named.dihedral(a[0])
    if kind == "wreath":
        return named.wreath(a[0])
    if kind == "psl":
        return linear.psl(*a)
    if kind == "psigma":
        return linear.psl_sigma(*a)[0]
    if kind == "psl2_11":
        return named.psl2_11()
    if kind == "m11":
        return named.mathieu(11)
    if kind == "m23":
        return named.mathieu(23)
    raise ValueError(f"unknown kind {kind}")


def build_group(desc: GroupDescriptor | str) -> PermGroup:
    desc = _desc(desc)
    G = _build(desc)
    assert G.order == descriptor_order(desc)
    return G


classical_group = build_group


def simple_part(desc: GroupDescriptor | str) -> GroupDescriptor:
    """The simple socle T of a listed descriptor (PSL(d, q0^2) for psigma, Alt for Sym)."""
    desc = _desc(desc)
    if desc.kind == "psigma":
        d, q0 = desc.params
        return GroupDescriptor("psl", (d, q0 * q0))
    if desc.kind == "sym":
        return GroupDescriptor("alt", desc.params)
    return desc


def _first_of_order(G: PermGroup, n: int) -> Permutation:
    for x in sorted(G.element_images()):
        if len(x) and Permutation._trusted(x).order() == n:
            return Permutation._trusted(x)
    raise ValueError(f"no element of order {n}")


def standard_k(desc: GroupDescriptor | str) -> Permutation:
    """The cyclic Hall generator used for a listed almost simple group."""
    desc = _desc(desc)
    kind, a = desc.kind, desc.params
    if kind in ("alt", "sym"):
        if not is_prime(a[0]) or a[0] < 5:
            raise HypothesisError(f"{desc}: needs a prime p >= 5")
        return named.cycle(a[0])
    if kind == "psl":
        return linear.singer_cycle(*a)
    if kind == "psigma":
        d, q0 = a
        return linear.singer_cycle(d, q0 * q0)
    if kind == "psl2_11":
        return _first_of_order(build_group(desc), 11)
    if kind == "m11":
        return named.cycle(11)
    if kind == "m23":
        return named.cycle(23)
    if kind == "wreath":
        return named.wreath_parts(a[0])[0]
    raise ValueError(f"{desc} has no standard cyclic factor")


def standard_h(desc: GroupDescriptor | str) -> PermGroup:
    desc = _desc(desc)
    G = build_group(desc)
    if desc.kind == "wreath":
        a, b, swap = named.wreath_parts(desc.params[0])
        return PermGroup([a * b.inverse(), swap], G.degree, name=f"D{2 * desc.params[0]}")
    return G.stabilizer(0)


def hall_triple(desc: GroupDescriptor | str) -> tuple[PermGroup, PermGroup, Permutation]:
    desc = _desc(desc)
    return build_group(desc), standard_h(desc), standard_k(desc)


@lru_cache(maxsize=None)
def outer_involution(desc: GroupDescriptor | str) -> Permutation:
    """An order-2 element z outside T with T:<z> almost simple.

    Alt(p): the transposition (1,2).  PSL(d, q0^2): z = x*phi with x the
    first involution (sorted order) of the subfield PSL(d, q0) that does
    not normalize the Singer cycle.
    """
    desc = simple_part(_desc(desc))
    if desc.kind == "alt":
        return Permutation.from_cycles("(1,2)", desc.params[0])
    if desc.kind == "psl":
        d, q = desc.params
        q0 = math.isqrt(q)
        if q0 * q0 != q:
            raise HypothesisError(f"q = {q} is not a square")
        check_linear_hypothesis(d, q)
        rho = linear.singer_cycle(d, q)
        phi = linear.frobenius_perm(d, q, q0)
        K = PermGroup([rho], rho.degree)
        for xi in sorted(linear.subfield_psl(d, q0).element_images()):
            x = Permutation._trusted(xi)
            if x.order() == 2 and not K.contains(rho.conjugate(x)):
                z = x * phi
                assert (z * z).is_identity()
                return z
        raise AssertionError("no subfield involution outside N(K)")
    raise ValueError(f"{desc} has no outer involution in this construction")


@dataclass(frozen=True)
class Assembly:
    """((T_1 x ... x T_s):<z_1...z_s>) x T_{s+1} x ... x T_r on a disjoint union."""

    G: PermGroup
    factors: tuple[PermGroup, ...]
    offsets: tuple[int, ...]
    s: int
    z_outer: Permutation | None

    def embed(self, i: int, p: Permutation) -> Permutation:
        return p.extend(self.G.degree, self.offsets[i])

    def combine(self, parts: Sequence[Permutation]) -> Permutation:
        """The element (p_1, ..., p_r) of the full direct product."""
        images: list[int] = []
        for off, p in zip(self.offsets, parts):
            images.extend(off + x for x in p.images)
        return Permutation._trusted(tuple(images))


def assemble(
    descriptors: Sequence[GroupDescriptor | str],
    s: int = 0,
    involutions: Sequence[Permutation] = (),
) -> Assembly:
    descs = [simple_part(_desc(d)) for d in descriptors]
    r = len(descs)
    if not 0 <= s <= r:
        raise ValueError(f"s = {s} out of range 0..{r}")
    if len(involutions) != s:
        raise ValueError(f"{s} outer involutions required, got {len(involutions)}")
    factors = [build_group(d) for d in descs]
    offsets = []
    n = 0
    for T in factors:
        offsets.append(n)
        n += T.degree
    for i, z in enumerate(involutions):
        T = factors[i]
        if z.degree != T.degree:
            raise ValueError(f"z_{i + 1} has degree {z.degree}, factor has degree {T.degree}")
        if z.is_identity() or not (z * z).is_identity():
            raise ValueError(f"z_{i + 1} is not of order 2")
        if T.contains(z):
            raise ValueError(f"z_{i + 1} lies in T_{i + 1}")
        if not T.is_normal_in(PermGroup(list(T.generators) + [z], T.degree)):
            raise ValueError(f"z_{i + 1} does not normalize T_{i + 1}")
    gens = [g.extend(n, off) for T, off in zip(factors, offsets) for g in T.generators]
    z_outer = None
    if s:
        images = list(range(n))
        for off, z in zip(offsets, involutions):
            for x, y in enumerate(z.images):
                images[off + x] = off + y
        z_outer = Permutation._trusted(tuple(images))
        gens.append(z_outer)
    G = PermGroup(gens, n, name=" x ".join(map(str, descs)))
    expected = (2 if s else 1) * math.prod(T.order for T in factors)
    if G.order != expected:
        raise AssertionError(f"assembled order {G.order}, expected {expected}")
    return Assembly(G, tuple(factors), tuple(offsets), s, z_outer)
