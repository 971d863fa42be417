"""Coset graphs of assembled products against products of the component graphs.

The map under test is <rho>(s_1, ..., s_r) -> (<rho_1> s_1, ..., <rho_r> s_r).
It is checked edge-by-edge in both directions, exhaustively when the big
graph is small enough and on a seeded sample otherwise.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Sequence

from hallskew.errors import BoundExceeded, HypothesisError
from hallskew.groups import INDEX_BOUND, PermGroup, coset_action, intersection_order
from hallskew.maps.graphs import Graph, bidirect_product, direct_product
from hallskew.maps.rotary import CosetGraph, RotaryPair, coset_graph, example_rotary_pair
from hallskew.perm import Images, Permutation, mul, power
from hallskew.zoo.build import Assembly, assemble
from hallskew.zoo.descriptors import GroupDescriptor, parse_descriptor

EDGE_BOUND = 10**6
SAMPLES = 10**5


@dataclass
class ProductSetup:
    assembly: Assembly
    pair: RotaryPair
    components: list[RotaryPair]
    s: int

    @property
    def K_order(self) -> int:
        return self.pair.rho_order

    def split(self, x: Images) -> list[Images]:
        out = []
        for off, c in zip(self.assembly.offsets, self.components):
            n = c.G.degree
            out.append(tuple(y - off for y in x[off:off + n]))
        return out


def setup_product(
    descriptors: Sequence[GroupDescriptor | str],
    s: int = 0,
    pairs: Sequence[RotaryPair] | None = None,
) -> ProductSetup:
    descs = [parse_descriptor(d) if isinstance(d, str) else d for d in descriptors]
    if pairs is None:
        pairs = [example_rotary_pair(d, outer=i < s) for i, d in enumerate(descs)]
    if len(pairs) != len(descs):
        raise ValueError("one rotary pair per factor is required")
    orders = [p.rho_order for p in pairs]
    for i in range(len(orders)):
        for j in range(i + 1, len(orders)):
            if math.gcd(orders[i], orders[j]) != 1:
                raise HypothesisError(
                    f"|rho_{i + 1}| = {orders[i]} and |rho_{j + 1}| = {orders[j]} are not coprime"
                )
    asm = assemble(descs, s, [p.z for p in pairs[:s]])
    rho = asm.combine([p.rho for p in pairs])
    z = asm.combine([p.z for p in pairs])
    pair = RotaryPair(asm.G, rho, z)
    assert pair.rho_order == math.prod(orders)
    return ProductSetup(asm, pair, list(pairs), s)


def product_graph(graphs: Sequence[Graph], s: int) -> Graph:
    """(G_1 x_bi ... x_bi G_s) x G_{s+1} x ... x G_r."""
    acc = None
    for g in graphs[:s]:
        acc = g if acc is None else bidirect_product(acc, g)
    for g in graphs[s:]:
        acc = g if acc is None else direct_product(acc, g)
    return acc


class _ProductIndex:
    """Vertex numbering of :func:`product_graph`, from component vertex indices."""

    def __init__(self, graphs: Sequence[Graph], s: int):
        self.s = s
        self.sizes = [g.n for g in graphs]
        self.bi_index: dict | None = None
        if s > 1:
            # the bi-direct numbering: U-tuples then V-tuples, each lexicographic
            left = list(iproduct(*[sorted(g.bipartition[0]) for g in graphs[:s]]))
            right = list(iproduct(*[sorted(g.bipartition[1]) for g in graphs[:s]]))
            self.bi_index = {t: i for i, t in enumerate(left)}
            self.bi_index.update({t: len(left) + i for i, t in enumerate(right)})

    def __call__(self, coords: Sequence[int]) -> int:
        if self.s > 1:
            idx = self.bi_index[tuple(coords[: self.s])]
            rest = coords[self.s:]
            sizes = self.sizes[self.s:]
        else:
            # with s == 1 the single twisted factor keeps its own numbering
            idx = 0
            rest, sizes = coords, self.sizes
        for n, c in zip(sizes, rest):
            idx = idx * n + c
        return idx


@dataclass
class DecompositionReport:
    ok: bool
    mode: str
    vertices: int
    edges: int
    K_order: int
    checked: int
    witness: dict | None = None
    component_vertices: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "ok": self.ok,
            "mode": self.mode,
            "sampled": self.mode == "sampled",
            "V": str(self.vertices),
            "E": str(self.edges),
            "K": str(self.K_order),
            "checked": self.checked,
            "components": self.component_vertices,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def verify_decomposition(
    descriptors: Sequence[GroupDescriptor | str],
    s: int = 0,
    pairs: Sequence[RotaryPair] | None = None,
    full: bool = False,
    edge_bound: int = EDGE_BOUND,
    samples: int = SAMPLES,
    seed: int = 0,
) -> DecompositionReport:
    setup = setup_product(descriptors, s, pairs)
    comp = [coset_graph(p) for p in setup.components]
    if s and any(c.graph.bipartition is None for c in comp[:s]):
        raise ValueError("twisted components must give bipartite coset graphs")
    G = setup.pair.G
    V = G.order // setup.K_order
    E = V * setup.K_order // 2
    if full or E <= edge_bound:
        return _verify_full(setup, comp, V, E)
    return _verify_sampled(setup, comp, V, E, samples, seed)


def _phi(setup: ProductSetup, comp: Sequence[CosetGraph], x: Images) -> list[int]:
    return [c.vertex_of(p) for c, p in zip(comp, setup.split(x))]


def _verify_full(setup: ProductSetup, comp: list[CosetGraph], V: int, E: int) -> DecompositionReport:
    big = coset_graph(setup.pair, bipartite=False)
    prod = product_graph([c.graph for c in comp], setup.s)
    index = _ProductIndex([c.graph for c in comp], setup.s)
    sizes = [c.graph.n for c in comp]
    mapping = [index(_phi(setup, comp, x)) for x in big.reps]
    report = DecompositionReport(True, "full", V, E, setup.K_order, 0, component_vertices=sizes)
    if len(set(mapping)) != V or prod.n != V:
        report.ok = False
        report.witness = {"reason": "vertex map is not a bijection", "image_size": len(set(mapping)), "product_n": prod.n}
        return report
    image = set()
    for i, j in big.graph.edges:
        a, b = mapping[i], mapping[j]
        report.checked += 1
        if not prod.has_edge(a, b):
            report.ok = False
            report.witness = {"reason": "edge not preserved", "edge": [i, j]}
            return report
        image.add((min(a, b), max(a, b)))
    report.checked += len(prod.edges)
    if image != prod.edges:
        missing = sorted(prod.edges - image)[0]
        report.ok = False
        report.witness = {"reason": "product edge without a preimage", "edge": list(missing)}
    return report


def _verify_sampled(
    setup: ProductSetup,
    comp: list[CosetGraph],
    V: int,
    E: int,
    samples: int,
    seed: int,
) -> DecompositionReport:
    rng = random.Random(seed)
    pair, G = setup.pair, setup.pair.G
    chain = G.chain
    sizes = [c.graph.n for c in comp]
    report = DecompositionReport(True, "sampled", V, E, setup.K_order, 0, component_vertices=sizes)

    def comp_adjacent(xs: list[Images], ys: list[Images]) -> bool:
        return all(c.pair.adjacent(a, b) for c, a, b in zip(comp, xs, ys))

    def fail(kind: str, x: Images, y: Images) -> DecompositionReport:
        report.ok = False
        report.witness = {
            "check": kind,
            "x": str(Permutation._trusted(x)),
            "y": str(Permutation._trusted(y)),
        }
        return report

    rho = pair.rho.images
    per_kind = samples // 4
    for n in range(samples):
        kind = n // per_kind if per_kind else 0
        x = chain.random_element(rng)
        if kind == 0:
            # big-graph neighbor must map to a product neighbor
            y = pair.neighbor(x, rng.randrange(pair.rho_order))
            if not comp_adjacent(setup.split(x), setup.split(y)):
                return fail("big->product", x, y)
        elif kind == 1:
            # product neighbor, lifted coordinatewise, must be a big-graph neighbor
            parts = setup.split(x)
            ys = [c.pair.neighbor(p, rng.randrange(c.pair.rho_order)) for c, p in zip(comp, parts)]
            y = setup.assembly.combine([Permutation._trusted(t) for t in ys]).images
            if not chain.contains(y):
                return fail("product lift outside G", x, y)
            if not pair.adjacent(x, y):
                return fail("product->big", x, y)
        elif kind == 2:
            y = chain.random_element(rng)
            if pair.adjacent(x, y) != comp_adjacent(setup.split(x), setup.split(y)):
                return fail("random pair", x, y)
        else:
            # the vertex map does not depend on the coset representative
            y = mul(power(rho, rng.randrange(pair.rho_order)), x)
            if _phi(setup, comp, x) != _phi(setup, comp, y):
                return fail("well-defined", x, y)
        report.checked += 1
    return report


@dataclass
class HallCayleyCertificate:
    H_order: int
    V: int
    regular: bool
    hall: bool
    core_free: bool

    @property
    def ok(self) -> bool:
        return self.regular and self.hall and self.core_free

    def to_json(self) -> dict:
        return {
            "|H|": str(self.H_order),
            "V": str(self.V),
            "regular": self.regular,
            "hall": self.hall,
            "core_free": self.core_free,
            "ok": self.ok,
        }


def hall_cayley_certificate(setup: ProductSetup, index_bound: int = INDEX_BOUND) -> HallCayleyCertificate:
    """H = stabilizer in G of the first point of every factor, tested against the coset graph."""
    G = setup.pair.G
    H = G
    for off in setup.assembly.offsets:
        H = H.stabilizer(off)
    K = setup.pair.K
    V = G.order // K.order
    meet = intersection_order(H, K)
    regular = H.order == V and meet == 1
    hall = math.gcd(H.order, K.order) == 1
    try:
        core_free = coset_action(G, H, index_bound).core.order == 1
    except BoundExceeded:
        core_free = False
    return HallCayleyCertificate(H.order, V, regular, hall, core_free)


@dataclass
class SocleCheck:
    rho_in_socle: bool
    index: int

    @property
    def ok(self) -> bool:
        return self.rho_in_socle and self.index <= 2

    def to_json(self) -> dict:
        return {"rho_in_socle": self.rho_in_socle, "index": self.index, "ok": self.ok}


def socle_check(setup: ProductSetup) -> SocleCheck:
    """<rho> lies in T_1 x ... x T_r, which is normal of index at most 2 in G."""
    asm = setup.assembly
    M = PermGroup([g.extend(asm.G.degree, off) for T, off in zip(asm.factors, asm.offsets) for g in T.generators], asm.G.degree)
    if not M.is_normal_in(asm.G):
        raise AssertionError("product of the factors is not normal")
    return SocleCheck(M.contains(setup.pair.rho), asm.G.order // M.order)
