"""Named batches of instance checks, shared by ``hallskew verify`` and the test suite."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from hallskew.errors import HallSkewError
from hallskew.factorization import certify_factorization
from hallskew.groups import PermGroup, coset_action, intersection_order
from hallskew.maps.decompose import verify_decomposition
from hallskew.numth import (
    gcd_identity,
    hyp1_compatible,
    prime_family,
    profile,
    psl2_pair_infeasible,
    singer_congruence,
    solvable_f_ok,
)
from hallskew.perm import Permutation, mul
from hallskew.zoo.build import assemble, build_group, hall_triple, standard_h, standard_k

HALL_GROUPS = (
    "alt:5", "alt:7", "alt:11", "alt:13",
    "sym:5", "sym:7", "sym:11", "sym:13",
    "psl2_11", "m11", "m23",
    "psl:3,2", "psl:3,3",
    "psl:2,4", "psl:2,8", "psl:2,16",
    "psigma:2,2", "psigma:2,4",
)  # fmt: skip

GCD_GRID = ((3, 2), (3, 3), (5, 2), (3, 4), (7, 2))


@dataclass
class Item:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, **self.detail}


def _run(name: str, fn: Callable[[], tuple[bool, dict]]) -> Item:
    try:
        ok, detail = fn()
    except (HallSkewError, ValueError, AssertionError) as exc:
        return Item(name, False, {"error": f"{type(exc).__name__}: {exc}"})
    return Item(name, ok, detail)


def hall_item(desc: str) -> Item:
    def check():
        f = certify_factorization(*hall_triple(desc))
        ok = f.is_hall and f.k_core_free and f.h_core_free is True
        return ok, f.to_json()

    return _run(desc, check)


def suite_hall_groups() -> list[Item]:
    return [hall_item(d) for d in HALL_GROUPS]


def _quotient_sizes(G: PermGroup, M: PermGroup, H: PermGroup, k: Permutation) -> tuple[int, int, int]:
    """|G/M|, |HM/M| and the order of kM, read off the action on the cosets of M."""
    act = coset_action(G, M)
    where = {r.images: i for i, r in enumerate(act.reps)}

    def image(g: Permutation) -> Permutation:
        return Permutation._trusted(
            tuple(where[M.min_coset_rep(mul(r.images, g.images))] for r in act.reps)
        )

    Hbar = PermGroup([image(h) for h in H.generators], act.index)
    return act.image.order, Hbar.order, image(k).order()


def splitting_instances() -> list[tuple[str, PermGroup, PermGroup, Permutation, PermGroup]]:
    S4 = build_group("sym:4")
    D8 = build_group("d8")
    A4 = build_group("alt:4")
    W = build_group("wreath:5")
    D10 = standard_h("wreath:5")
    a = standard_k("wreath:5")
    b = a.conjugate(W.generators[1])
    Z5sq = PermGroup([a, b], W.degree)
    return [
        ("S4=D8.Z3, M=A4", S4, D8, Permutation.from_cycles("(1,2,3)", 4), A4),
        ("Z5wrS2=D10.Z5, M=Z5^2", W, D10, a, Z5sq),
    ]


def splitting_item(name, G, H, k, M) -> Item:
    def check():
        K = PermGroup([k], G.degree)
        mh, mk = intersection_order(M, H), intersection_order(M, K)
        normal = M.is_normal_in(G)
        g_m, hm_m, km = _quotient_sizes(G, M, H, k)
        detail = {
            "|M|": M.order,
            "|M∩H|": mh,
            "|M∩K|": mk,
            "normal": normal,
            "|G/M|": g_m,
            "|HM/M|": hm_m,
            "|kM|": km,
        }
        ok = normal and mh * mk == M.order and g_m == hm_m * km and math.gcd(hm_m, km) == 1
        return ok, detail

    return _run(name, check)


def suite_splitting() -> list[Item]:
    return [splitting_item(*inst) for inst in splitting_instances()]


def suite_gcd() -> list[Item]:
    items = []
    for d, q in GCD_GRID:
        items.append(
            _run(f"gcd_identity({d},{q})", lambda d=d, q=q: (gcd_identity(d, q), {"congruence": singer_congruence(d, q)}))
        )
    return items


def suite_family() -> list[Item]:
    items = []

    def fam(p, d, expect_family=None, expect_r=None):
        rep = prime_family(p, d)
        ok = rep.ok
        if expect_family is not None:
            ok = ok and rep.family == tuple(expect_family)
        if expect_r is not None:
            ok = ok and rep.r == expect_r
        return ok, {"family": list(rep.family), "r": rep.r, "checks": len(rep.checks)}

    items.append(_run("prime_family(2,3)", lambda: fam(2, 3, expect_family=(5, 7))))
    items.append(_run("prime_family(2,5)", lambda: fam(2, 5, expect_r=6)))
    pairs = [(e, f) for f in range(2, 11) for e in range(1, f)]
    items.append(
        _run(
            "psl2_pair_infeasible e<f<=10",
            lambda: (all(psl2_pair_infeasible(e, f) for e, f in pairs), {"pairs": len(pairs)}),
        )
    )
    items.append(
        _run(
            "solvable_f_ok 1..24",
            lambda: (all(solvable_f_ok(f) == (f % 6 in (2, 4)) for f in range(1, 25)), {}),
        )
    )
    return items


def suite_products(full: bool = False) -> list[Item]:
    def one(descs, s):
        rep = verify_decomposition(descs, s, full=full)
        return rep.ok, rep.to_json()

    return [
        _run("PSL(2,4) x PSL(3,2)", lambda: one(["psl:2,4", "psl:3,2"], 0)),
        _run("(A7 x PSL(2,16)):<(z1, x phi)>", lambda: one(["alt:7", "psigma:2,4"], 2)),
    ]


def catalog_factorization(descs=("psl2_11", "alt:7")):
    """T_1 x ... x T_r = (H_1 x ... x H_r) <(k_1, ..., k_r)> with H_i the first-point stabilizers."""
    asm = assemble(list(descs))
    G = asm.G
    H = G
    for off in asm.offsets:
        H = H.stabilizer(off)
    k = asm.combine([standard_k(d) for d in descs])
    return asm, H, k


def suite_catalog() -> list[Item]:
    def pair():
        asm, H, k = catalog_factorization()
        f = certify_factorization(asm.G, H, k)
        detail = f.to_json()
        detail["degree"] = asm.G.degree
        ok = f.is_hall and f.k_core_free and f.h_core_free is True and asm.G.degree == 18 and f.k_order == 77
        return ok, detail

    def compat():
        profs = [profile("psl2_11"), profile("alt:7")]
        ok, bad = hyp1_compatible(profs)
        return ok and [p.e for p in profs] == [11, 7], {"e": [p.e for p in profs], "violation": bad}

    return [
        _run("PSL(2,11) x A7 = (A5 x A6).Z77", pair),
        _run("hyp1_compatible(PSL(2,11), A7)", compat),
    ]


SUITES: dict[str, Callable[..., list[Item]]] = {
    "table1": suite_hall_groups,
    "lemma21": suite_splitting,
    "gcd": suite_gcd,
    "family": suite_family,
    "products": suite_products,
    "catalog": suite_catalog,
}


def run_suite(name: str, full: bool = False) -> list[Item]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if name == "products":
        return suite_products(full=full)
    return SUITES[name]()
