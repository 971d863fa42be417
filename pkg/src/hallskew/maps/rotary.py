"""Rotary pairs, coset graphs Cos(G, <rho>, <rho> z <rho>) and maps on the dart set G."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from hallskew.errors import BoundExceeded
from hallskew.groups import PermGroup
from hallskew.maps.graphs import Graph
from hallskew.perm import Images, Permutation, format_cycles, inv, mul, power
from hallskew.zoo import linear
from hallskew.zoo.build import build_group, outer_involution, simple_part, standard_k
from hallskew.zoo.descriptors import GroupDescriptor, parse_descriptor

VERTEX_BOUND = 10**6
DART_BOUND = 10**7


class RotaryPair:
    """``(rho, z)`` with z an involution and <rho, z> = G."""

    def __init__(self, G: PermGroup, rho: Permutation, z: Permutation, check: bool = True):
        self.G, self.rho, self.z = G, rho, z
        self.rho_order = rho.order()
        if check and not is_rotary_pair(G, rho, z):
            raise ValueError("not a rotary pair")

    @cached_property
    def K(self) -> PermGroup:
        return PermGroup([self.rho], self.G.degree)

    @cached_property
    def double_coset_keys(self) -> frozenset:
        """Canonical keys of the right cosets of <rho> making up <rho> z <rho>."""
        K = self.K
        keys = set()
        p = self.z.images
        for _ in range(self.rho_order):
            keys.add(K.min_coset_rep(p))
            p = mul(p, self.rho.images)
        return frozenset(keys)

    def vertex_key(self, x: Images) -> Images:
        return self.K.min_coset_rep(x)

    def adjacent(self, x: Images, y: Images) -> bool:
        """Whether y x^-1 lies in <rho> z <rho>."""
        return self.K.min_coset_rep(mul(y, inv(x))) in self.double_coset_keys

    def adjacent_by_reduction(self, x: Images, y: Images) -> bool:
        """Same test as :meth:`adjacent`, via z^-1 rho^-i (y x^-1) in <rho> for some i."""
        w = mul(y, inv(x))
        zi = inv(self.z.images)
        rinv = inv(self.rho.images)
        pw = tuple(range(len(w)))
        for _ in range(self.rho_order):
            if self.K.chain.contains(mul(zi, mul(pw, w))):
                return True
            pw = mul(pw, rinv)
        return False

    def neighbor(self, x: Images, j: int) -> Images:
        """The coset <rho> z rho^j x."""
        return mul(mul(self.z.images, power(self.rho.images, j)), x)

    @cached_property
    def even_subgroup(self) -> PermGroup:
        """<rho, rho^z>, of index 1 or 2 in G."""
        return PermGroup([self.rho, self.rho.conjugate(self.z)], self.G.degree)

    def to_json(self) -> dict:
        return {"rho": str(self.rho), "z": str(self.z), "rho_order": self.rho_order, "|G|": str(self.G.order)}


def is_rotary_pair(G: PermGroup, rho: Permutation, z: Permutation) -> bool:
    if not (G.contains(rho) and G.contains(z)):
        raise ValueError("rho and z must lie in G")
    if z.is_identity() or not (z * z).is_identity():
        return False
    return PermGroup([rho, z], G.degree).order == G.order


@dataclass(frozen=True)
class CosetGraph:
    pair: RotaryPair
    graph: Graph
    reps: tuple[Images, ...]
    index: dict

    def vertex_of(self, x: Images) -> int:
        return self.index[self.pair.vertex_key(x)]


def coset_graph(pair: RotaryPair, vertex_bound: int = VERTEX_BOUND, bipartite: bool = True) -> CosetGraph:
    """Vertices are the right cosets of <rho>, numbered by BFS from <rho>.

    When <rho, rho^z> has index 2, its cosets give the bipartition.
    """
    G = pair.G
    V = G.order // pair.rho_order
    if V > vertex_bound:
        raise BoundExceeded(f"{V} vertices exceed the bound {vertex_bound}")
    ident = tuple(range(G.degree))
    start = pair.vertex_key(ident)
    reps = [start]
    index = {start: 0}
    gens = [g.images for g in G.generators]
    for r in reps:
        for s in gens:
            key = pair.vertex_key(mul(r, s))
            if key not in index:
                index[key] = len(reps)
                reps.append(key)
    assert len(reps) == V
    rho_pows = [ident]
    for _ in range(pair.rho_order - 1):
        rho_pows.append(mul(rho_pows[-1], pair.rho.images))
    left = [mul(pair.z.images, p) for p in rho_pows]
    edges = set()
    for i, x in enumerate(reps):
        for w in left:
            j = index[pair.vertex_key(mul(w, x))]
            if j == i:
                raise ValueError("coset graph has a loop")
            edges.add((min(i, j), max(i, j)))
    bp = None
    T = pair.even_subgroup
    if bipartite and 2 * T.order == G.order:
        U = frozenset(i for i, x in enumerate(reps) if T.chain.contains(x))
        bp = (U, frozenset(range(V)) - U)
    labels = tuple(format_cycles(r) for r in reps)
    graph = Graph(V, frozenset(edges), bp, labels)
    return CosetGraph(pair, graph, tuple(reps), index)


@dataclass(frozen=True)
class RotationMap:
    kind: str
    darts: int
    V: int
    E: int
    F: int
    face_stabilizer_order: int

    @property
    def chi(self) -> int:
        return self.V - self.E + self.F

    @property
    def genus(self) -> int | None:
        return (2 - self.chi) // 2 if self.kind == "rotary" else None

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "V": self.V,
            "E": self.E,
            "F": self.F,
            "chi": self.chi,
            "faceStabilizerOrder": self.face_stabilizer_order,
        }
        if self.kind == "rotary":
            out["genus"] = self.genus
        return out


def face_subgroup(pair: RotaryPair, kind: str) -> PermGroup:
    if kind == "rotary":
        return PermGroup([pair.rho * pair.z], pair.G.degree)
    if kind == "birotary":
        return PermGroup([pair.z, pair.z.conjugate(pair.rho)], pair.G.degree)
    raise ValueError(f"unknown map kind {kind!r}")


def count_cosets(G: PermGroup, S: PermGroup, bound: int = DART_BOUND) -> int:
    """Number of blocks in the partition of the darts G into right cosets of S."""
    if G.order > bound:
        raise BoundExceeded(f"|G| = {G.order} darts exceed the bound {bound}")
    return len({S.min_coset_rep(x) for x in G.chain.elements()})


def build_map(pair: RotaryPair, kind: str = "rotary", dart_bound: int = DART_BOUND) -> RotationMap:
    """Vertices, edges, faces as right-coset partitions of the darts by <rho>, <z> and the face subgroup."""
    G = pair.G
    if G.order > dart_bound:
        raise BoundExceeded(f"|G| = {G.order} darts exceed the bound {dart_bound}")
    face = face_subgroup(pair, kind)
    Zs = PermGroup([pair.z], G.degree)
    V = count_cosets(G, pair.K, dart_bound)
    E = count_cosets(G, Zs, dart_bound)
    F = count_cosets(G, face, dart_bound)
    for blocks, sub in ((V, pair.K), (E, Zs), (F, face)):
        if blocks * sub.order != G.order:
            raise AssertionError("coset partition does not match |G|/|S|")
    m = RotationMap(kind, G.order, V, E, F, face.order)
    if kind == "rotary" and m.chi % 2:
        raise AssertionError(f"odd Euler characteristic {m.chi} for a rotary map")
    return m


def edge_projection(pair: RotaryPair, cg: CosetGraph) -> frozenset:
    """Edges obtained by projecting each <z>-coset {x, zx} of darts to its two vertices."""
    out = set()
    z = pair.z.images
    for x in pair.G.chain.elements():
        i, j = cg.vertex_of(x), cg.vertex_of(mul(z, x))
        out.add((min(i, j), max(i, j)))
    return frozenset(out)


def _involutions(G: PermGroup):
    for x in G.chain.iter_elements():
        p = Permutation._trusted(x)
        if not p.is_identity() and (p * p).is_identity():
            yield p


def _first_generating_involution(G: PermGroup, rho: Permutation, skip=None, limit: int = 10**6) -> Permutation:
    for n, z in enumerate(_involutions(G)):
        if n > limit:
            break
        if skip is not None and skip(z):
            continue
        if PermGroup([rho, z], G.degree).order == G.order:
            return z
    raise LookupError("no involution z with <rho, z> = G within the search bound")


def example_rotary_pair(desc: GroupDescriptor | str, outer: bool = False) -> RotaryPair:
    """The explicit pairs: (1..p) with (12)(34) or (12), Singer cycles with a searched involution, x*phi."""
    if isinstance(desc, str):
        desc = parse_descriptor(desc)
    kind = desc.kind
    if kind == "sym" or (kind == "alt" and outer):
        p = desc.params[0]
        G = build_group(GroupDescriptor("sym", (p,)))
        return RotaryPair(G, standard_k(desc), Permutation.from_cycles("(1,2)", p))
    if kind == "alt":
        p = desc.params[0]
        return RotaryPair(build_group(desc), standard_k(desc), Permutation.from_cycles("(1,2)(3,4)", p))
    if kind == "psigma" or (kind == "psl" and outer):
        T = simple_part(desc)
        d, q = T.params
        rho = linear.singer_cycle(d, q)
        z = outer_involution(T)
        G = build_group(GroupDescriptor("psigma", (d, math.isqrt(q))))
        return RotaryPair(G, rho, z)
    if kind == "psl":
        G = build_group(desc)
        rho = standard_k(desc)
        K = PermGroup([rho], G.degree)
        z = _first_generating_involution(G, rho, skip=lambda z: K.contains(rho.conjugate(z)))
        return RotaryPair(G, rho, z)
    if kind in ("psl2_11", "m11", "m23"):
        G = build_group(desc)
        rho = standard_k(desc)
        return RotaryPair(G, rho, _first_generating_involution(G, rho))
    raise ValueError(f"{desc} has no example rotary pair")
