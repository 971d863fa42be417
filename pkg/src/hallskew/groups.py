"""Permutation groups backed by a stabilizer chain."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from hallskew.errors import BoundExceeded, DegreeMismatch, NotASubgroup
from hallskew.perm import Images, Permutation, mul
from hallskew.schreier import StabChain, schreier_sims

INDEX_BOUND = 10**5
ENUM_BOUND = 10**7


class PermGroup:
    """A permutation group given by generators; immutable once built."""

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None, name: str | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("empty generator set needs an explicit degree")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.name = name

    @classmethod
    def from_cycles(cls, cycles: Sequence[str], degree: int, name: str | None = None) -> "PermGroup":
        return cls([Permutation.from_cycles(c, degree) for c in cycles], degree, name)

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls([], degree, name="1")

    def _gen_images(self) -> list[Images]:
        return [g.images for g in self.generators]

    @cached_property
    def chain(self) -> StabChain:
        return schreier_sims(self._gen_images(), self.degree)

    @cached_property
    def lex_chain(self) -> StabChain:
        """Chain whose base is every moved point in ascending order."""
        moved = sorted({x for g in self.generators for x in g.support()})
        return schreier_sims(self.chain.strong_generators(), self.degree, base=moved)

    @cached_property
    def order(self) -> int:
        return self.chain.order()

    def __len__(self) -> int:
        return self.order

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"permutation of degree {p.degree}, group of degree {self.degree}")
        return self.chain.contains(p.images)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def elements(self, bound: int = ENUM_BOUND) -> list[Permutation]:
        if self.order > bound:
            raise BoundExceeded(f"|G| = {self.order} exceeds the enumeration bound {bound}")
        return [Permutation._trusted(x) for x in self.chain.elements()]

    def element_images(self, bound: int = ENUM_BOUND) -> list[Images]:
        if self.order > bound:
            raise BoundExceeded(f"|G| = {self.order} exceeds the enumeration bound {bound}")
        return list(self.chain.elements())

    def iter_elements(self) -> Iterator[Permutation]:
        for x in self.chain.iter_elements():
            yield Permutation._trusted(x)

    def sorted_elements(self, bound: int = ENUM_BOUND) -> list[Permutation]:
        return [Permutation._trusted(x) for x in sorted(self.element_images(bound))]

    def random_element(self, rng) -> Permutation:
        return Permutation._trusted(self.chain.random_element(rng))

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def is_normal_in(self, other: "PermGroup") -> bool:
        return all(self.contains(g.conjugate(s)) for s in other.generators for g in self.generators)

    def orbit(self, point: int) -> list[int]:
        seen = {point: None}
        queue = [point]
        for x in queue:
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen[y] = None
                    queue.append(y)
        return queue

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def moved_points(self) -> list[int]:
        return sorted({x for g in self.generators for x in g.support()})

    def stabilizer(self, point: int) -> "PermGroup":
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range for degree {self.degree}")
        ch = schreier_sims(self.chain.strong_generators(), self.degree, base=[point])
        gens = ch.level_gens[1] if len(ch.base) > 1 else []
        stab = PermGroup([Permutation._trusted(g) for g in gens], self.degree)
        assert stab.order * len(ch.transversals[0]) == self.order
        return stab

    @cached_property
    def _lex_levels(self) -> list[dict[int, Images]]:
        return [t for t in self.lex_chain.transversals if len(t) > 1]

    def min_coset_rep(self, g: Images) -> Images:
        """Lexicographically least element of the right coset ``self * g``."""
        t = g
        for trans in self._lex_levels:
            best = min(trans, key=t.__getitem__)
            t = mul(trans[best], t)
        return t

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.order == other.order and other.is_subgroup_of(self)

    def __hash__(self) -> int:
        return hash((self.degree, self.order))

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "generators": [str(g) for g in self.generators],
            "order": str(self.order),
        }

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} order={self.order}>"


def group_from_generators(gens: Iterable[Permutation], name: str | None = None) -> PermGroup:
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator set")
    return PermGroup(gens, name=name)


def contains(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def cyclic_subgroup(k: Permutation) -> PermGroup:
    return PermGroup([k], k.degree)


def normal_closure(G: PermGroup, gens: Iterable[Permutation]) -> PermGroup:
    """Smallest normal subgroup of ``G`` containing ``gens``."""
    found = [g for g in gens if not g.is_identity()]
    N = PermGroup(found, G.degree)
    queue = list(found)
    while queue:
        x = queue.pop(0)
        for s in G.generators:
            y = x.conjugate(s)
            if not N.contains(y):
                found.append(y)
                N = PermGroup(found, G.degree)
                queue.append(y)
    return N


def point_stabilizer(G: PermGroup, point: int) -> PermGroup:
    return G.stabilizer(point)


def pointwise_stabilizer(G: PermGroup, points: Sequence[int]) -> PermGroup:
    S = G
    for p in points:
        S = S.stabilizer(p)
    return S


@dataclass(frozen=True)
class CosetAction:
    """Action of ``G`` on the right cosets of ``H``.

    ``reps[i]`` is the lexicographically least element of coset ``i``;
    coset 0 is ``H`` itself.
    """

    image: PermGroup
    core: PermGroup
    reps: tuple[Permutation, ...]

    @property
    def index(self) -> int:
        return len(self.reps)


def _require_subgroup(G: PermGroup, H: PermGroup) -> None:
    if H.degree != G.degree:
        raise DegreeMismatch(f"degrees {H.degree} and {G.degree}")
    if not H.is_subgroup_of(G):
        raise NotASubgroup("H is not a subgroup of G")


def coset_table(G: PermGroup, H: PermGroup, index_bound: int = INDEX_BOUND) -> tuple[list[Images], list[Images]]:
    """Coset representatives and the generator images on the right cosets of ``H``."""
    _require_subgroup(G, H)
    index = G.order // H.order
    if index > index_bound:
        raise BoundExceeded(f"index [G:H] = {index} exceeds the bound {index_bound}")
    ident = tuple(range(G.degree))
    start = H.min_coset_rep(ident)
    reps = [start]
    where = {start: 0}
    gens = G._gen_images()
    rows: list[list[int]] = [[] for _ in gens]
    for r in reps:
        for gi, s in enumerate(gens):
            key = H.min_coset_rep(mul(r, s))
            j = where.get(key)
            if j is None:
                j = len(reps)
                where[key] = j
                reps.append(key)
            rows[gi].append(j)
    assert len(reps) == index
    return reps, [tuple(r) for r in rows]


def coset_action(G: PermGroup, H: PermGroup, index_bound: int = INDEX_BOUND) -> CosetAction:
    reps, images = coset_table(G, H, index_bound)
    m = len(reps)
    n = G.degree
    image = PermGroup([Permutation._trusted(x) for x in images], m)
    if image.order == G.order:
        core = PermGroup.trivial(n)
    elif image.order == 1:
        core = G
    else:
        combined = [g + tuple(n + x for x in img) for g, img in zip(G._gen_images(), images)]
        ch = schreier_sims(combined, n + m, base=[n], allowed=range(n, n + m))
        assert ch.order() == image.order
        kernel_gens = [Permutation._trusted(r[:n]) for r in ch.residues]
        core = normal_closure(G, kernel_gens)
    if image.order * core.order != G.order:
        raise AssertionError("coset action kernel has the wrong order")
    return CosetAction(image, core, tuple(Permutation._trusted(r) for r in reps))


def core(G: PermGroup, H: PermGroup, index_bound: int = INDEX_BOUND) -> PermGroup:
    return coset_action(G, H, index_bound).core


def cyclic_core_order(G: PermGroup, k: Permutation) -> int:
    """Order of the largest subgroup of ``<k>`` normal in ``G``.

    Subgroups of a cyclic group are ``<k^d>`` for ``d | |k|``; the core is the
    first normal one in order of decreasing size.
    """
    n = k.order()
    for d in sorted(x for x in range(1, n + 1) if n % x == 0):
        sub = k ** d
        m = n // d
        powers = {(sub ** i).images for i in range(m)}
        if all((sub.conjugate(s)).images in powers for s in G.generators):
            return m
    return 1


def is_hall_subgroup(G: PermGroup, H: PermGroup) -> bool:
    _require_subgroup(G, H)
    return math.gcd(H.order, G.order // H.order) == 1


def count_involutions(G: PermGroup, bound: int = ENUM_BOUND) -> int:
    if G.order > bound:
        raise BoundExceeded(f"|G| = {G.order} exceeds the enumeration bound {bound}")
    count = 0
    ident = tuple(range(G.degree))
    for x in G.chain.elements():
        if x != ident and mul(x, x) == ident:
            count += 1
    return count


def intersection_order(A: PermGroup, B: PermGroup, bound: int = ENUM_BOUND) -> int:
    if A.degree != B.degree:
        raise DegreeMismatch(f"degrees {A.degree} and {B.degree}")
    small, big = (A, B) if A.order <= B.order else (B, A)
    if small.order > bound:
        raise BoundExceeded(f"min(|A|,|B|) = {small.order} exceeds the enumeration bound {bound}")
    return sum(1 for x in small.chain.elements() if big.chain.contains(x))


def parse_group(spec: dict) -> PermGroup:
    """Inverse of :meth:`PermGroup.to_json`; the order field is checked."""
    G = PermGroup.from_cycles(spec["generators"], spec["degree"])
    if "order" in spec and int(spec["order"]) != G.order:
        raise ValueError(f"declared order {spec['order']} but generators give {G.order}")
    return G


__all__ = [
    "CosetAction",
    "ENUM_BOUND",
    "INDEX_BOUND",
    "PermGroup",
    "contains",
    "core",
    "coset_action",
    "count_involutions",
    "cyclic_core_order",
    "cyclic_subgroup",
    "group_from_generators",
    "intersection_order",
    "is_hall_subgroup",
    "normal_closure",
    "parse_group",
    "point_stabilizer",
    "pointwise_stabilizer",
]
