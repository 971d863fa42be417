"""Skew-morphisms from factorizations G = H<k>, axiom checks and a brute-force oracle.

A skew-morphism is stored on the sorted element list of H (identity first):
``rho[i]`` is the index of rho(e_i) and ``pi[i]`` the power function value
reduced modulo the order of rho.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

import numpy as np

from hallskew.errors import BoundExceeded, NotCoreFree
from hallskew.factorization import Factorization
from hallskew.groups import PermGroup
from hallskew.perm import Images, Permutation, format_cycles, mul

VERIFY_BOUND = 4096
BRUTE_BOUND = 10


@dataclass(frozen=True)
class SkewMorphism:
    H: PermGroup = field(compare=False, hash=False)
    elements: tuple[Images, ...]
    rho: tuple[int, ...]
    pi: tuple[int, ...]
    order: int
    k: Permutation | None = field(default=None, compare=False, hash=False)
    k_order: int | None = field(default=None, compare=False, hash=False)

    @property
    def trivial(self) -> bool:
        return all(x == 1 % self.order for x in self.pi)

    @property
    def faithful(self) -> bool | None:
        """Whether the order of rho equals the order of k (None without a source k)."""
        return None if self.k_order is None else self.order == self.k_order

    def image(self, h: Permutation) -> Permutation:
        i = self.elements.index(h.images)
        return Permutation._trusted(self.elements[self.rho[i]])

    def power(self, h: Permutation) -> int:
        return self.pi[self.elements.index(h.images)]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "trivial": self.trivial,
            "hall": is_hall_skew(self),
            "faithful": self.faithful,
            "rho": list(self.rho),
            "pi": list(self.pi),
            "elements": [format_cycles(e) for e in self.elements],
        }


def _perm_order(idx: Sequence[int]) -> int:
    seen = [False] * len(idx)
    out = 1
    for i in range(len(idx)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = idx[j]
                n += 1
            out = math.lcm(out, n)
    return out


def skew_from_factorization(f: Factorization, bound: int = 10**6) -> SkewMorphism:
    """rho and pi from ``k * h == rho(h) * k**pi(h)`` for every h in H."""
    if not f.k_core_free:
        raise NotCoreFree(f"<k> has a core of order {f.k_core_order} in G")
    elems = tuple(sorted(f.H.element_images(bound)))
    where = {e: i for i, e in enumerate(elems)}
    kk = f.k.images
    rho, raw_pi = [], []
    for h in elems:
        h2, j = f.decompose_images(mul(kk, h))
        rho.append(where[h2])
        raw_pi.append(j)
    order = _perm_order(rho)
    return SkewMorphism(
        H=f.H,
        elements=elems,
        rho=tuple(rho),
        pi=tuple(j % order for j in raw_pi),
        order=order,
        k=f.k,
        k_order=f.k_order,
    )


def multiplication_table(elements: Sequence[Images]) -> np.ndarray:
    """``M[i, j]`` = index of ``elements[i] * elements[j]``; elements must be sorted."""
    E = np.asarray(elements, dtype=np.int64)
    n, deg = E.shape
    # Sorted tuples compare like base-deg integers; sorting is preserved by the key.
    if deg**deg < 2**62:
        w = np.array([deg ** (deg - 1 - c) for c in range(deg)], dtype=np.int64)
        keys = E @ w
        M = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            prod = E[:, E[i]]  # row j holds elements[i] * elements[j]
            M[i] = np.searchsorted(keys, prod @ w)
        return M
    where = {bytes(np.asarray(e, dtype=np.uint8)): i for i, e in enumerate(elements)}
    M = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        prod = E[:, E[i]].astype(np.uint8)
        M[i] = [where[r.tobytes()] for r in prod]
    return M


def rho_powers(rho: Sequence[int], order: int) -> np.ndarray:
    R = np.empty((order, len(rho)), dtype=np.int64)
    R[0] = np.arange(len(rho))
    r = np.asarray(rho, dtype=np.int64)
    for m in range(1, order):
        R[m] = r[R[m - 1]]
    return R


@dataclass(frozen=True)
class AxiomResult:
    ok: bool
    # (g, h) indices of the first failing pair, or (0, 0) when rho(1) != 1
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_axioms(s: SkewMorphism, bound: int = VERIFY_BOUND) -> AxiomResult:
    """Exhaustive check of rho(1) = 1 and rho(gh) = rho(g) rho^pi(g)(h) over all pairs."""
    n = len(s.elements)
    if n > bound:
        raise BoundExceeded(f"|H| = {n} exceeds the exhaustive axiom bound {bound}")
    if s.rho[0] != 0:
        return AxiomResult(False, (0, 0))
    M = multiplication_table(s.elements)
    rho = np.asarray(s.rho, dtype=np.int64)
    R = rho_powers(s.rho, s.order)
    pi = np.asarray(s.pi, dtype=np.int64) % s.order
    lhs = rho[M]
    rhs = M[rho[:, None], R[pi]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        g, h = bad[0]
        return AxiomResult(False, (int(g), int(h)))
    return AxiomResult(True)


def is_hall_skew(s: SkewMorphism) -> bool:
    return math.gcd(len(s.elements), s.order) == 1


def is_automorphism(s: SkewMorphism, bound: int = VERIFY_BOUND) -> bool:
    if len(s.elements) > bound:
        raise BoundExceeded(f"|H| = {len(s.elements)} exceeds the bound {bound}")
    M = multiplication_table(s.elements)
    rho = np.asarray(s.rho, dtype=np.int64)
    return bool(np.array_equal(rho[M], M[rho[:, None], rho[None, :]]))


def identity_skew(H: PermGroup) -> SkewMorphism:
    elems = tuple(sorted(H.element_images()))
    n = len(elems)
    return SkewMorphism(H, elems, tuple(range(n)), (0,) * n, 1)


def _gen_indices(H: PermGroup, where: dict) -> list[int]:
    return sorted({where[g.images] for g in H.generators if not g.is_identity()})


def brute_enumerate(H: PermGroup, bound: int = BRUTE_BOUND) -> set[SkewMorphism]:
    """Every skew-morphism of H, by trying all (|H|-1)! identity-fixing bijections.

    For a candidate rho, pi(g) is the unique t modulo |rho| with
    rho(g x) = rho(g) rho^t(x) for every generator x, confirmed over all x.
    """
    n = H.order
    if n > bound:
        raise BoundExceeded(f"|H| = {n} exceeds the brute-force bound {bound}")
    elems = tuple(sorted(H.element_images()))
    where = {e: i for i, e in enumerate(elems)}
    M = [[where[mul(a, b)] for b in elems] for a in elems]
    gens = _gen_indices(H, where)
    found = set()
    for tail in permutations(range(1, n)):
        rho = (0,) + tail
        order = _perm_order(rho)
        powers = [tuple(range(n))]
        for _ in range(order - 1):
            powers.append(tuple(rho[x] for x in powers[-1]))
        pi = []
        for g in range(n):
            rg, row = rho[g], M[g]
            mrow = M[rg]
            t_found = None
            for t in range(order):
                pt = powers[t]
                if all(rho[row[x]] == mrow[pt[x]] for x in gens) and all(
                    rho[row[x]] == mrow[pt[x]] for x in range(n)
                ):
                    t_found = t
                    break
            if t_found is None:
                break
            pi.append(t_found)
        else:
            found.add(SkewMorphism(H, elems, rho, tuple(pi), order))
    return found


def mutate_swap(s: SkewMorphism, i: int, j: int) -> SkewMorphism:
    """Copy of ``s`` with the rho images of elements ``i`` and ``j`` exchanged."""
    rho = list(s.rho)
    rho[i], rho[j] = rho[j], rho[i]
    return SkewMorphism(s.H, s.elements, tuple(rho), s.pi, s.order, s.k, s.k_order)
