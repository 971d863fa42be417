"""Structure of G/N for a factorization G = H<k>, with N the core of H.

Shape (1): the image of <k> is normal in G/N and the image of H acts
faithfully on it by conjugation.  Shape (2): the socle of G/N is a product
of nonabelian simple groups matching listed profiles with pairwise
coprime gcd(|T_i|, e(T_j)).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from hallskew.errors import BoundExceeded
from hallskew.factorization import Factorization
from hallskew.groups import ENUM_BOUND, INDEX_BOUND, PermGroup, coset_action, cyclic_core_order, normal_closure
from hallskew.numth import SimpleFactorProfile, hyp1_compatible, is_prime, profiles_of_order
from hallskew.perm import Permutation, mul, order_of


@dataclass
class SimpleFactor:
    order: int
    simple: bool
    profiles: list[SimpleFactorProfile]

    def to_json(self) -> dict:
        return {
            "order": str(self.order),
            "simple": self.simple,
            "matches": [str(p.descriptor) for p in self.profiles],
        }


@dataclass
class ShapeReport:
    hall: bool
    N_order: int
    Gbar_order: int
    Hbar_order: int
    kbar_order: int
    k_normal: bool
    centralizer_order: int | None
    shape: int | None
    factors: list[SimpleFactor] = field(default_factory=list)
    socle_order: int | None = None
    K0_order: int | None = None
    hyp1_ok: bool | None = None

    @property
    def falsification_candidate(self) -> bool:
        return self.hall and self.shape is None

    def to_json(self) -> dict:
        out = {
            "hall": self.hall,
            "shape": self.shape,
            "|N|": str(self.N_order),
            "|G/N|": str(self.Gbar_order),
            "|H/N|": str(self.Hbar_order),
            "|kN|": str(self.kbar_order),
            "k_normal": self.k_normal,
            "centralizer_in_H": None if self.centralizer_order is None else str(self.centralizer_order),
        }
        if self.factors:
            out["socle"] = str(self.socle_order)
            out["factors"] = [f.to_json() for f in self.factors]
            out["K0"] = str(self.K0_order)
            out["hyp1_compatible"] = self.hyp1_ok
        if self.falsification_candidate:
            out["warning"] = "neither shape verified for a Hall factorization"
        return out


def _conjugacy_class(G: PermGroup, x: tuple) -> set:
    seen = {x}
    queue = [x]
    gens = [(g.images, g.inverse().images) for g in G.generators]
    for y in queue:
        for g, gi in gens:
            c = mul(mul(gi, y), g)
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return seen


def _is_prime_order(x: tuple) -> bool:
    n = order_of(x)
    return n > 1 and is_prime(n)


def minimal_normal_subgroups(G: PermGroup, bound: int = ENUM_BOUND) -> list[PermGroup]:
    """Minimal normal subgroups as the inclusion-minimal normal closures of prime-order classes."""
    if G.order > bound:
        raise BoundExceeded(f"|G| = {G.order} exceeds the enumeration bound {bound}")
    closures: list[PermGroup] = []
    covered: set = set()
    for x in sorted(G.element_images(bound)):
        if x in covered or not _is_prime_order(x):
            continue
        covered |= _conjugacy_class(G, x)
        N = normal_closure(G, [Permutation._trusted(x)])
        if not any(N == M for M in closures):
            closures.append(N)
    return [
        N for N in closures if not any(M.order < N.order and M.is_subgroup_of(N) for M in closures)
    ]


def is_simple_nonabelian(M: PermGroup, bound: int = ENUM_BOUND) -> bool:
    """Every prime-order element of M has normal closure M in M, and M is not abelian."""
    gens = M.generators
    if all(a * b == b * a for a in gens for b in gens):
        return False
    covered: set = set()
    for x in sorted(M.element_images(bound)):
        if x in covered or not _is_prime_order(x):
            continue
        covered |= _conjugacy_class(M, x)
        if normal_closure(M, [Permutation._trusted(x)]).order != M.order:
            return False
    return True


def shape_check(
    f: Factorization,
    index_bound: int = INDEX_BOUND,
    enum_bound: int = ENUM_BOUND,
) -> ShapeReport:
    act = coset_action(f.G, f.H, index_bound)
    N = act.core
    Gbar = act.image
    where = {r.images: i for i, r in enumerate(act.reps)}

    def bar(g: Permutation) -> Permutation:
        return Permutation._trusted(
            tuple(where[f.H.min_coset_rep(mul(r.images, g.images))] for r in act.reps)
        )

    kbar = bar(f.k)
    Hbar = Gbar.stabilizer(0)
    Kbar = PermGroup([kbar], Gbar.degree)
    k_normal = all(Kbar.contains(kbar.conjugate(s)) for s in Gbar.generators)
    cent = None
    if Hbar.order <= enum_bound:
        cent = sum(1 for h in Hbar.chain.elements() if mul(h, kbar.images) == mul(kbar.images, h))
    report = ShapeReport(
        hall=f.is_hall,
        N_order=N.order,
        Gbar_order=Gbar.order,
        Hbar_order=Hbar.order,
        kbar_order=kbar.order(),
        k_normal=k_normal,
        centralizer_order=cent,
        shape=None,
    )
    if k_normal and cent == 1:
        report.shape = 1
        return report

    mins = minimal_normal_subgroups(Gbar, enum_bound)
    factors = []
    for M in mins:
        simple = is_simple_nonabelian(M, enum_bound)
        factors.append(SimpleFactor(M.order, simple, profiles_of_order(M.order) if simple else []))
    report.factors = factors
    report.socle_order = PermGroup([g for M in mins for g in M.generators], Gbar.degree).order
    report.K0_order = cyclic_core_order(Gbar, kbar)
    ok = all(fa.simple and fa.profiles for fa in factors)
    if ok:
        chosen = [fa.profiles[0] for fa in factors]
        report.hyp1_ok = hyp1_compatible(chosen)[0]
        ok = report.hyp1_ok
    if ok:
        report.shape = 2
    return report
