"""Alternating, symmetric, cyclic, dihedral, wreath and sporadic groups."""
from __future__ import annotations

from functools import lru_cache

from hallskew.groups import PermGroup, coset_action
from hallskew.numth import is_prime
from hallskew.perm import Permutation, mul, order_of
from hallskew.zoo.linear import _psl_unchecked

# Standard generators, 1-indexed.
M11_GENERATORS = ("(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)")
M23_GENERATORS = (
    "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
    "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
)
MATHIEU_ORDERS = {11: 7920, 23: 10200960}


def cycle(n: int, start: int = 1, stop: int | None = None, degree: int | None = None) -> Permutation:
    """The cycle (start, start+1, ..., stop) on ``degree`` points, 1-indexed."""
    stop = n if stop is None else stop
    return Permutation.from_cycle_lists([list(range(start, stop + 1))], degree or n)


def symmetric(n: int) -> PermGroup:
    if n < 2:
        raise ValueError("Sym(n) needs n >= 2")
    return PermGroup([cycle(n), Permutation.from_cycles("(1,2)", n)], n, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        raise ValueError("Alt(n) needs n >= 3")
    three = Permutation.from_cycles("(1,2,3)", n)
    if n == 3:
        return PermGroup([three], n, name="A3")
    long = cycle(n) if n % 2 else cycle(n, 2, n)
    return PermGroup([long, three], n, name=f"A{n}")


def cyclic(n: int) -> PermGroup:
    if n < 2:
        raise ValueError("Cyclic(n) needs n >= 2")
    return PermGroup([cycle(n)], n, name=f"Z{n}")


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given order acting on order/2 points."""
    if order % 2 or order < 6:
        raise ValueError("dihedral order must be even and at least 6")
    m = order // 2
    refl = Permutation([(-i) % m for i in range(m)])
    return PermGroup([cycle(m), refl], m, name=f"D{order}")


def wreath(p: int) -> PermGroup:
    """Z_p wr S_2 on 2p points: a p-cycle on the first block and the block swap."""
    if not is_prime(p):
        raise ValueError("wreath needs a prime p")
    swap = Permutation([i + p if i < p else i - p for i in range(2 * p)])
    return PermGroup([cycle(p, degree=2 * p), swap], 2 * p, name=f"Z{p}wrS2")


def wreath_parts(p: int) -> tuple[Permutation, Permutation, Permutation]:
    """``(a, b, swap)``: p-cycles on the two blocks and the swap."""
    G = wreath(p)
    a, swap = G.generators
    b = a.conjugate(swap)
    return a, b, swap


def mathieu(n: int) -> PermGroup:
    if n not in MATHIEU_ORDERS:
        raise ValueError("only M11 and M23 are provided")
    gens = M11_GENERATORS if n == 11 else M23_GENERATORS
    G = PermGroup.from_cycles(gens, n, name=f"M{n}")
    if G.order != MATHIEU_ORDERS[n]:
        raise AssertionError(f"M{n} constants give order {G.order}")
    return G


def find_a5(G: PermGroup) -> PermGroup:
    """First <a, b> of order 60 with |a| = 2, |b| = 3, pairs in sorted element order."""
    elems = sorted(G.element_images())
    invols = [x for x in elems if order_of(x) == 2]
    threes = [x for x in elems if order_of(x) == 3]
    for a in invols:
        for b in threes:
            # <a,b> is a quotient of the (2,3,5) triangle group iff |ab| = 5
            if order_of(mul(a, b)) != 5:
                continue
            S = PermGroup([Permutation._trusted(a), Permutation._trusted(b)], G.degree)
            if S.order == 60:
                return S
    raise AssertionError("no A5 found")


@lru_cache(maxsize=None)
def psl2_11() -> PermGroup:
    """PSL(2,11) on the 11 cosets of an A5."""
    P = _psl_unchecked(2, 11)
    act = coset_action(P, find_a5(P))
    assert act.index == 11 and act.image.order == 660
    return PermGroup(act.image.generators, 11, name="PSL(2,11)")
