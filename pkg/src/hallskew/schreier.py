"""Deterministic Schreier-Sims on image tuples.

The chain supports an ``allowed`` point set: base points are only drawn from
it, and sifted residues acting trivially on it are returned separately
instead of becoming strong generators.  With ``allowed`` = the coset points
of a combined action this yields generators whose normal closure is the
kernel of the action.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from hallskew.perm import Images, inv, mul


def _orbit_transversal(point: int, gens: Sequence[Images], ident: Images) -> dict[int, Images]:
    trans = {point: ident}
    queue = [point]
    for beta in queue:
        u = trans[beta]
        for s in gens:
            gamma = s[beta]
            if gamma not in trans:
                trans[gamma] = mul(u, s)
                queue.append(gamma)
    return trans


@dataclass
class StabChain:
    degree: int
    base: list[int]
    level_gens: list[list[Images]]
    transversals: list[dict[int, Images]]
    inverses: list[dict[int, Images]] = field(default_factory=list)
    residues: list[Images] = field(default_factory=list)

    def __post_init__(self):
        if not self.inverses:
            self.inverses = [{b: inv(u) for b, u in t.items()} for t in self.transversals]

    @property
    def identity(self) -> Images:
        return tuple(range(self.degree))

    def order(self) -> int:
        n = 1
        for t in self.transversals:
            n *= len(t)
        return n

    def strong_generators(self) -> list[Images]:
        out: dict[Images, None] = {}
        for gens in self.level_gens:
            out.update(dict.fromkeys(gens))
        return list(out)

    def sift(self, g: Images, start: int = 0) -> tuple[Images, int]:
        """Strip ``g`` through levels ``start..``; return residue and the failing level."""
        for i in range(start, len(self.base)):
            beta = g[self.base[i]]
            uinv = self.inverses[i].get(beta)
            if uinv is None:
                return g, i
            g = mul(g, uinv)
        return g, len(self.base)

    def contains(self, g: Images) -> bool:
        h, _ = self.sift(g)
        return h == self.identity

    def elements(self) -> Iterator[Images]:
        """Every element once, as ``u_k ... u_1 u_0`` over the transversals."""
        level = [self.identity]
        for t in reversed(self.transversals):
            reps = list(t.values())
            level = [mul(e, u) for e in level for u in reps]
        yield from level

    def iter_elements(self) -> Iterator[Images]:
        """Lazy version of :meth:`elements` (same set, depth-first order)."""
        reps = [list(t.values()) for t in self.transversals]
        k = len(reps)

        def rec(i: int, acc: Images) -> Iterator[Images]:
            if i < 0:
                yield acc
                return
            for u in reps[i]:
                yield from rec(i - 1, mul(acc, u))

        yield from rec(k - 1, self.identity)

    def random_element(self, rng) -> Images:
        g = self.identity
        for t in reversed(self.transversals):
            reps = list(t.values())
            g = mul(g, reps[rng.randrange(len(reps))])
        return g


def _first_moved(g: Images, allowed: Sequence[int] | None) -> int | None:
    pts = range(len(g)) if allowed is None else allowed
    for x in pts:
        if g[x] != x:
            return x
    return None


def schreier_sims(
    gens: Iterable[Images],
    degree: int,
    base: Sequence[int] = (),
    allowed: Sequence[int] | None = None,
) -> StabChain:
    ident = tuple(range(degree))
    allowed_sorted = None if allowed is None else sorted(allowed)
    uniq: list[Images] = []
    seen = set()
    for g in gens:
        if g != ident and g not in seen:
            seen.add(g)
            uniq.append(g)

    base = list(base)
    residues: list[Images] = []
    strong: list[Images] = []
    for g in uniq:
        if all(g[b] == b for b in base):
            pt = _first_moved(g, allowed_sorted)
            if pt is None:
                residues.append(g)
                continue
            base.append(pt)
        strong.append(g)

    k = len(base)
    level_gens = [[s for s in strong if all(s[b] == b for b in base[:i])] for i in range(k)]
    trans = [_orbit_transversal(base[i], level_gens[i], ident) for i in range(k)]
    invs = [{b: inv(u) for b, u in t.items()} for t in trans]
    residue_set = set(residues)

    def strip(g: Images, start: int) -> tuple[Images, int]:
        for lvl in range(start, len(base)):
            uinv = invs[lvl].get(g[base[lvl]])
            if uinv is None:
                return g, lvl
            g = mul(g, uinv)
        return g, len(base)

    i = k - 1
    while i >= 0:
        added = False
        t = trans[i]
        for beta, u in list(t.items()):
            for s in level_gens[i]:
                us = mul(u, s)
                v = t[s[beta]]
                if us == v:
                    continue
                y = mul(us, invs[i][s[beta]])
                h, j = strip(y, i + 1)
                if h == ident:
                    continue
                if j == len(base):
                    pt = _first_moved(h, allowed_sorted)
                    if pt is None:
                        if h not in residue_set:
                            residue_set.add(h)
                            residues.append(h)
                        continue
                    base.append(pt)
                    level_gens.append([])
                    trans.append({pt: ident})
                    invs.append({pt: ident})
                for lvl in range(i + 1, j + 1):
                    level_gens[lvl].append(h)
                    trans[lvl] = _orbit_transversal(base[lvl], level_gens[lvl], ident)
                    invs[lvl] = {b: inv(w) for b, w in trans[lvl].items()}
                i = j
                added = True
                break
            if added:
                break
        if not added:
            i -= 1

    return StabChain(degree, base, level_gens, trans, invs, residues)
