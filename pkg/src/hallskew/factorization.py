"""Exact factorizations G = H<k> with H ∩ <k> = 1."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from hallskew.errors import BoundExceeded, DegreeMismatch, NotAFactorization, NotASubgroup
from hallskew.groups import INDEX_BOUND, PermGroup, coset_action, cyclic_core_order
from hallskew.perm import Images, Permutation, inv, mul


@dataclass(frozen=True)
class Factorization:
    G: PermGroup
    H: PermGroup
    k: Permutation
    k_order: int
    is_hall: bool
    k_core_order: int
    # None when [G:<k>] is beyond the coset-action bound
    h_core_order: int | None
    _table: dict = field(repr=False, compare=False)
    _k_inv_powers: tuple = field(repr=False, compare=False)

    @property
    def k_core_free(self) -> bool:
        return self.k_core_order == 1

    @property
    def h_core_free(self) -> bool | None:
        return None if self.h_core_order is None else self.h_core_order == 1

    def decompose(self, g: Permutation) -> tuple[Permutation, int]:
        """The unique ``(h, j)`` with ``g == h * k**j``."""
        if not self.G.contains(g):
            raise ValueError("element is not in G")
        h, j = self.decompose_images(g.images)
        return Permutation._trusted(h), j

    def decompose_images(self, g: Images) -> tuple[Images, int]:
        j = self._table[self.H.min_coset_rep(g)]
        return mul(g, self._k_inv_powers[j]), j

    def to_json(self) -> dict:
        return {
            "|G|": str(self.G.order),
            "|H|": str(self.H.order),
            "|K|": str(self.k_order),
            "k": str(self.k),
            "hall": self.is_hall,
            "k_core_free": self.k_core_free,
            "h_core_free": self.h_core_free,
        }


def certify_factorization(
    G: PermGroup,
    H: PermGroup,
    k: Permutation,
    index_bound: int = INDEX_BOUND,
) -> Factorization:
    if not G.degree == H.degree == k.degree:
        raise DegreeMismatch(f"degrees G={G.degree}, H={H.degree}, k={k.degree}")
    if not H.is_subgroup_of(G):
        raise NotASubgroup("H is not a subgroup of G")
    if not G.contains(k):
        raise NotAFactorization("k is not an element of G")
    n = k.order()
    if H.order * n != G.order:
        raise NotAFactorization(f"|H|*|k| = {H.order}*{n} != |G| = {G.order}")
    powers = [Permutation.identity(G.degree).images]
    for _ in range(n - 1):
        powers.append(mul(powers[-1], k.images))
    for i in range(1, n):
        if H.chain.contains(powers[i]):
            raise NotAFactorization(f"H meets <k> nontrivially: k^{i} lies in H")
    table = {H.min_coset_rep(p): j for j, p in enumerate(powers)}
    assert len(table) == n
    k_core = cyclic_core_order(G, k)
    try:
        h_core = coset_action(G, H, index_bound).core.order
    except BoundExceeded:
        h_core = None
    return Factorization(
        G=G,
        H=H,
        k=k,
        k_order=n,
        is_hall=math.gcd(H.order, n) == 1,
        k_core_order=k_core,
        h_core_order=h_core,
        _table=table,
        _k_inv_powers=tuple(inv(p) for p in powers),
    )


def decompose(f: Factorization, g: Permutation) -> tuple[Permutation, int]:
    return f.decompose(g)


def decomposition_is_bijective(f: Factorization, bound: int = 10**5) -> bool:
    """Exhaustively check that ``(h, j) -> h * k**j`` hits every element of G once."""
    if f.G.order > bound:
        raise BoundExceeded(f"|G| = {f.G.order} exceeds the exhaustive bound {bound}")
    kp = [inv(x) for x in f._k_inv_powers]
    seen = set()
    for h in f.H.chain.elements():
        for p in kp:
            seen.add(mul(h, p))
    return len(seen) == f.G.order and all(f.G.chain.contains(x) for x in seen)
