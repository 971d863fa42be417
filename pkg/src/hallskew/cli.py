"""Command-line front end.  Every command prints one JSON document (or DOT) on stdout.

Exit status: 0 when the object was built or the check passed, 1 when a check
came out false, 2 on usage errors, violated hypotheses or exceeded bounds.
"""
from __future__ import annotations

import argparse
import json
import sys

from hallskew.errors import BoundExceeded, HallSkewError, NotAFactorization, NotASubgroup, NotCoreFree
from hallskew.factorization import Factorization, certify_factorization
from hallskew.groups import INDEX_BOUND, PermGroup, count_involutions
from hallskew.maps.rotary import DART_BOUND, RotaryPair, build_map, coset_graph, example_rotary_pair
from hallskew.numth import (
    compatible_linear_pairs,
    gcd_identity,
    hyp1_compatible,
    prime_family,
    profile,
    psl2_pair_infeasible,
    singer_congruence,
)
from hallskew.perm import Permutation
from hallskew.shape import shape_check
from hallskew.skew import skew_from_factorization, verify_axioms
from hallskew.suites import SUITES, run_suite
from hallskew.zoo.build import build_group, standard_h, standard_k
from hallskew.zoo.descriptors import parse_descriptor

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class CheckFailed(Exception):
    """Carries a payload that should still be printed before exiting with status 1."""

    def __init__(self, payload):
        super().__init__("check failed")
        self.payload = payload


def _group(text: str) -> PermGroup:
    return build_group(parse_descriptor(text))


def _parse_gens(text: str, degree: int) -> list[Permutation]:
    parts = [t for t in text.split(";") if t.strip()]
    if not parts:
        raise ValueError("gens: needs at least one permutation in cycle notation")
    return [Permutation.from_cycles(t, degree) for t in parts]


def resolve_subgroup(G: PermGroup, spec: str, group_desc: str) -> PermGroup:
    """``auto`` | ``stab:N`` (0-indexed point) | ``gens:(..);(..)`` | a descriptor on the same points."""
    if spec == "auto":
        return standard_h(group_desc)
    if spec.startswith("stab:"):
        point = int(spec[5:])
        if not 0 <= point < G.degree:
            raise ValueError(f"point {point} is outside 0..{G.degree - 1}")
        return G.stabilizer(point)
    if spec.startswith("gens:"):
        return PermGroup(_parse_gens(spec[5:], G.degree), G.degree)
    H = _group(spec)
    if H.degree != G.degree:
        raise ValueError(f"{spec} acts on {H.degree} points, G on {G.degree}")
    return H


def _first_core_free_k(G: PermGroup, H: PermGroup, index_bound: int) -> Factorization:
    if G.order % H.order:
        raise NotAFactorization(f"|H| = {H.order} does not divide |G| = {G.order}")
    n = G.order // H.order
    for x in G.sorted_elements():
        if x.order() != n:
            continue
        try:
            f = certify_factorization(G, H, x, index_bound)
        except NotAFactorization:
            continue
        if f.k_core_free:
            return f
    raise NotAFactorization(f"no element of order {n} gives a core-free complement to H")


def resolve_factorization(G, H, k_spec: str, group_desc: str | None, index_bound: int) -> Factorization:
    if k_spec == "auto":
        if group_desc is not None and H == standard_h(group_desc):
            return certify_factorization(G, H, standard_k(group_desc), index_bound)
        return _first_core_free_k(G, H, index_bound)
    if k_spec == "singer":
        if group_desc is None or parse_descriptor(group_desc).kind not in ("psl", "psigma"):
            raise ValueError("--k singer needs a psl or psigma group")
        k = standard_k(group_desc)
    else:
        k = Permutation.from_cycles(k_spec, G.degree)
    return certify_factorization(G, H, k, index_bound)


def cmd_group(args) -> dict:
    desc = parse_descriptor(args.descriptor)
    G = build_group(desc)
    out = {"descriptor": str(desc), **G.to_json()}
    if args.involutions:
        out["involutions"] = str(count_involutions(G))
    try:
        out["profile"] = profile(desc).to_json()
    except ValueError:
        pass
    return out


def cmd_factorize(args) -> dict:
    G = _group(args.group)
    H = resolve_subgroup(G, args.sub, args.group)
    f = resolve_factorization(G, H, args.k, args.group, args.bound_index)
    out = f.to_json()
    if args.shape:
        out["shape"] = shape_check(f, args.bound_index).to_json()
    if not f.k_core_free:
        raise CheckFailed(out)
    return out


def cmd_skew(args) -> dict:
    G = _group(args.via)
    H = resolve_subgroup(G, args.H or "auto", args.via)
    f = resolve_factorization(G, H, args.k, args.via, args.bound_index)
    s = skew_from_factorization(f)
    result = verify_axioms(s)
    out = {"k": str(f.k), **s.to_json(), "axioms": result.ok}
    if not args.elements:
        for key in ("rho", "pi", "elements"):
            out.pop(key)
    if not result.ok:
        out["witness"] = list(result.witness)
        raise CheckFailed(out)
    return out


def _rotary_pair(args) -> RotaryPair:
    if (args.rho is None) != (args.z is None):
        raise ValueError("--rho and --z go together")
    if args.rho is not None:
        G = _group(args.group)
        return RotaryPair(G, Permutation.from_cycles(args.rho, G.degree), Permutation.from_cycles(args.z, G.degree))
    return example_rotary_pair(args.group, outer=args.outer)


def cmd_map(args):
    pair = _rotary_pair(args)
    if args.kind == "graph":
        cg = coset_graph(pair, vertex_bound=args.bound_darts)
        if args.format == "dot":
            return cg.graph.to_dot()
        g = cg.graph
        degs = sorted(set(g.degrees()))
        return {
            **pair.to_json(),
            "V": g.n,
            "E": g.edge_count,
            "degrees": degs,
            "bipartite": g.bipartition is not None,
            "graph": g.to_json(),
        }
    kind = {"rota": "rotary", "biro": "birotary"}[args.kind]
    m = build_map(pair, kind, args.bound_darts)
    return {**pair.to_json(), **m.to_json()}


def cmd_numth(args) -> dict:
    if args.what == "family":
        rep = prime_family(args.p, args.d)
        if not rep.ok:
            raise CheckFailed(rep.to_json())
        return rep.to_json()
    if args.what == "gcd":
        ok = gcd_identity(args.d, args.q)
        out = {"d": args.d, "q": args.q, "ok": ok, "congruence": singer_congruence(args.d, args.q)}
        if not ok:
            raise CheckFailed(out)
        return out
    if args.what == "psl2":
        return {"e": args.e, "f": args.f, "infeasible": psl2_pair_infeasible(args.e, args.f)}
    if args.what == "profile":
        profs = [profile(d) for d in args.descriptors]
        ok, bad = hyp1_compatible(profs)
        return {"profiles": [p.to_json() for p in profs], "compatible": ok, "violation": bad}
    if args.what == "search":
        pairs = compatible_linear_pairs(args.max_order, args.max_d)
        return {"pairs": [[a.to_json(), b.to_json()] for a, b in pairs]}
    raise ValueError(f"unknown numth command {args.what!r}")


def cmd_verify(args) -> dict:
    items = run_suite(args.suite, full=args.full)
    out = {"suite": args.suite, "ok": all(i.ok for i in items), "items": [i.to_json() for i in items]}
    if not out["ok"]:
        raise CheckFailed(out)
    return out


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # on subparsers the defaults are suppressed so flags given before the subcommand survive
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--bound-index", type=int, default=d(INDEX_BOUND), help="largest coset index to enumerate")
    parser.add_argument("--bound-darts", type=int, default=d(DART_BOUND), help="largest dart set for maps")
    parser.add_argument("--full", action="store_true", default=d(False), help="disable sampling in verify products")
    parser.add_argument("--format", choices=("json", "dot"), default=d("json"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hallskew", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", parents=[common], help="build a group from a descriptor")
    p.add_argument("descriptor")
    p.add_argument("--involutions", action="store_true", help="also count involutions")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("factorize", parents=[common], help="certify G = H<k>")
    p.add_argument("--group", required=True)
    p.add_argument("--sub", default="auto", help="auto | stab:N | gens:(..);(..) | descriptor")
    p.add_argument("--k", default="auto", help="auto | singer | cycle notation")
    p.add_argument("--shape", action="store_true", help="also report the shape of G/core(H)")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("skew", parents=[common], help="skew-morphism of H from a factorization")
    p.add_argument("--via", required=True, help="the group G containing H")
    p.add_argument("--H", default=None, help="subgroup spec, as for factorize --sub")
    p.add_argument("--k", default="auto")
    p.add_argument("--elements", action="store_true", help="include rho, pi and the element list")
    p.set_defaults(func=cmd_skew)

    p = sub.add_parser("map", parents=[common], help="coset graph or map of a rotary pair")
    p.add_argument("kind", choices=("rota", "biro", "graph"))
    p.add_argument("--group", required=True)
    p.add_argument("--outer", action="store_true", help="use the pair with an outer involution")
    p.add_argument("--rho", default=None)
    p.add_argument("--z", default=None)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("numth", parents=[common], help="arithmetic checks")
    p.add_argument("what", choices=("family", "gcd", "psl2", "profile", "search"))
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--f", type=int, default=2)
    p.add_argument("--max-order", type=int, default=10**12)
    p.add_argument("--max-d", type=int, default=5)
    p.add_argument("descriptors", nargs="*")
    p.set_defaults(func=cmd_numth)

    p = sub.add_parser("verify", parents=[common], help="run a named suite of checks")
    p.add_argument("suite", choices=tuple(SUITES))
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    sys.stdout.write(text)
    sys.stdout.flush()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    if args.format == "dot" and not (args.command == "map" and args.kind == "graph"):
        parser.error("--format dot is only available for 'map graph'")
    try:
        payload = args.func(args)
    except CheckFailed as exc:
        _emit(exc.payload)
        return EXIT_FALSE
    except (NotAFactorization, NotCoreFree, NotASubgroup) as exc:
        _emit({"ok": False, "error": type(exc).__name__, "message": str(exc)})
        return EXIT_FALSE
    except (BoundExceeded, HallSkewError, ValueError, LookupError) as exc:
        print(f"hallskew: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _emit(payload)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
