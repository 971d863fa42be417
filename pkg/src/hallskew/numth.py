"""Coprimality arithmetic for the simple factors T with a cyclic Hall complement.

Every integer here is a Python int, so nothing overflows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from hallskew.errors import HypothesisError
from hallskew.zoo.descriptors import GroupDescriptor, parse_descriptor

FAMILY_D_CUTOFF = 13


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, f)`` with ``q == p**f``; raise if ``q`` is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(x for x in range(2, q + 1) if q % x == 0)
    f, r = 0, q
    while r % p == 0:
        r //= p
        f += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, f


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes in the open interval ``(lo, hi)`` by a sieve of Eratosthenes."""
    if hi <= 2:
        return []
    sieve = bytearray([1]) * hi
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(hi - 1) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, hi, i)))
    return [i for i in range(lo + 1, hi) if sieve[i]]


def check_linear_hypothesis(d: int, q: int) -> None:
    """Raise :class:`HypothesisError` unless d is prime and gcd(d, q-1) = 1."""
    try:
        prime_power(q)
    except ValueError as exc:
        raise HypothesisError(str(exc)) from None
    if not is_prime(d):
        raise HypothesisError(f"d = {d} is not prime")
    g = math.gcd(d, q - 1)
    if g != 1:
        raise HypothesisError(f"gcd(d, q-1) = gcd({d}, {q - 1}) = {g} != 1")


def singer_order(d: int, q: int) -> int:
    return (q**d - 1) // (q - 1)


def psl_order(d: int, q: int) -> int:
    n = q ** (d * (d - 1) // 2)
    for j in range(2, d + 1):
        n *= q**j - 1
    return n // math.gcd(d, q - 1)


def descriptor_order(desc: GroupDescriptor) -> int:
    kind, a = desc.kind, desc.params
    if kind == "alt":
        return math.factorial(a[0]) // 2
    if kind == "sym":
        return math.factorial(a[0])
    if kind == "psl":
        return psl_order(*a)
    if kind == "psigma":
        return 2 * psl_order(a[0], a[1] ** 2)
    if kind == "psl2_11":
        return 660
    if kind == "m11":
        return 7920
    if kind == "m23":
        return 10200960
    if kind == "cyclic":
        return a[0]
    if kind == "dihedral":
        return a[0]
    if kind == "wreath":
        return 2 * a[0] ** 2
    raise ValueError(f"unknown kind {kind}")


def e_value(desc: GroupDescriptor | str) -> int:
    """e(T), the order of the cyclic Hall factor of a listed almost simple group."""
    if isinstance(desc, str):
        desc = parse_descriptor(desc)
    kind, a = desc.kind, desc.params
    if kind in ("alt", "sym"):
        if not is_prime(a[0]) or a[0] < 5:
            raise ValueError(f"{desc} is not a listed group (needs a prime p >= 5)")
        return a[0]
    if kind == "psl":
        check_linear_hypothesis(*a)
        return singer_order(*a)
    if kind == "psigma":
        d, q0 = a
        check_linear_hypothesis(d, q0 * q0)
        return singer_order(d, q0 * q0)
    if kind in ("psl2_11", "m11"):
        return 11
    if kind == "m23":
        return 23
    raise ValueError(f"{desc} is not a listed group")


@dataclass(frozen=True)
class SimpleFactorProfile:
    descriptor: GroupDescriptor
    order: int
    e: int

    def __post_init__(self):
        if self.order % self.e:
            raise ValueError(f"e = {self.e} does not divide |T| = {self.order}")

    def to_json(self) -> dict:
        return {"descriptor": str(self.descriptor), "order": str(self.order), "e": str(self.e)}


def profile(desc: GroupDescriptor | str) -> SimpleFactorProfile:
    if isinstance(desc, str):
        desc = parse_descriptor(desc)
    return SimpleFactorProfile(desc, descriptor_order(desc), e_value(desc))


def hyp1_compatible(profiles: Sequence[SimpleFactorProfile]) -> tuple[bool, tuple[int, int] | None]:
    """True iff gcd(|T_i|, e(T_j)) = 1 for all i != j; else the first failing (i, j)."""
    if not profiles:
        raise ValueError("at least one profile is required")
    for i, a in enumerate(profiles):
        for j, b in enumerate(profiles):
            if i != j and math.gcd(a.order, b.e) != 1:
                return False, (i, j)
    return True, None


def gcd_identity(d: int, q: int) -> bool:
    """Check gcd((q^d-1)/(q-1), q^j-1) = 1 for 1 <= j < d and gcd(|PSL(d,q)|, e) = 1."""
    check_linear_hypothesis(d, q)
    e = singer_order(d, q)
    ok = all(math.gcd(e, q**j - 1) == 1 for j in range(1, d))
    # |PSL(d,q)| / e is the order of a 1-space stabilizer
    return ok and math.gcd(e, psl_order(d, q) // e) == 1


def singer_congruence(d: int, q: int) -> bool:
    """(q^d-1)/(q-1) is congruent to d modulo q-1."""
    return singer_order(d, q) % (q - 1) == d % (q - 1)


@dataclass(frozen=True)
class FamilyCheck:
    i: int
    j: int
    k: int
    ok: bool

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "k": self.k, "ok": self.ok}


@dataclass(frozen=True)
class FamilyReport:
    p: int
    d: int
    family: tuple[int, ...]
    coprime_d_q: tuple[bool, ...]
    checks: tuple[FamilyCheck, ...]

    @property
    def r(self) -> int:
        return len(self.family)

    @property
    def ok(self) -> bool:
        return all(self.coprime_d_q) and all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "family": list(self.family),
            "r": self.r,
            "ok": self.ok,
            "coprime_d_q": list(self.coprime_d_q),
            "checks": [c.to_json() for c in self.checks],
        }


def prime_family(p: int, d: int, cutoff: int = FAMILY_D_CUTOFF) -> FamilyReport:
    """Primes d < d_i < d^2 with q_i = p^{d_i}, every gcd condition checked directly.

    Checks run over all ordered pairs (i, j) and every 1 <= k <= d_j, except
    that k stops at d_i - 1 when i == j (e_i always divides q_i^{d_i} - 1).
    ``checks`` indexes i, j from 1.
    """
    if not (is_prime(p) and is_prime(d)):
        raise ValueError("p and d must both be prime")
    if not d > p:
        raise ValueError(f"requires d > p, got d={d}, p={p}")
    if d > cutoff:
        raise ValueError(f"d = {d} is beyond the cutoff {cutoff}")
    family = primes_between(d, d * d)
    qs = [p**di for di in family]
    es = [singer_order(di, qi) for di, qi in zip(family, qs)]
    coprime = tuple(math.gcd(di, qi - 1) == 1 for di, qi in zip(family, qs))
    checks = []
    for i, e_i in enumerate(es):
        for j, (dj, qj) in enumerate(zip(family, qs)):
            qk = 1
            for k in range(1, dj + 1 if i != j else dj):
                qk *= qj
                checks.append(FamilyCheck(i + 1, j + 1, k, math.gcd(e_i, qk - 1) == 1))
    return FamilyReport(p, d, tuple(family), coprime, tuple(checks))


def family_cyclic_order(report: FamilyReport) -> int:
    """Order of the cyclic Hall factor of the product of the PSL(d_i, p^{d_i})."""
    return math.prod(singer_order(di, report.p**di) for di in report.family)


def solvable_f_ok(f: int) -> bool:
    if f < 1:
        raise ValueError("f must be positive")
    return f % 6 in (2, 4)


def psl2_pair_infeasible(e: int, f: int) -> bool:
    """PSL(2,2^e) and PSL(2,2^f) cannot both be factors: some needed gcd is > 1."""
    if not e < f:
        raise ValueError("requires e < f")
    a_plus, a_minus = 2**e + 1, 2**e - 1
    b_plus, b_minus = 2**f + 1, 2**f - 1
    feasible = (
        math.gcd(a_plus, b_plus) == 1
        and math.gcd(a_minus, b_plus) == 1
        and math.gcd(a_plus, b_minus) == 1
    )
    return not feasible


def linear_candidates(max_order: int, max_d: int = 7) -> list[SimpleFactorProfile]:
    """PSL(d, q) under the linear hypothesis with |T| <= max_order, sorted by order."""
    out = []
    for d in (x for x in range(2, max_d + 1) if is_prime(x)):
        q = 2
        while psl_order(d, q) <= max_order:
            try:
                check_linear_hypothesis(d, q)
            except HypothesisError:
                pass
            else:
                out.append(profile(GroupDescriptor("psl", (d, q))))
            q += 1
            while True:
                try:
                    prime_power(q)
                    break
                except ValueError:
                    q += 1
    out.sort(key=lambda pr: (pr.order, str(pr.descriptor)))
    return out


def compatible_linear_pairs(max_order: int, max_d: int = 7) -> list[tuple[SimpleFactorProfile, SimpleFactorProfile]]:
    """Search harness for small compatible pairs of linear groups.

    Makes no claim of completeness beyond the enumerated range.
    """
    cands = linear_candidates(max_order, max_d)
    pairs = []
    for i, a in enumerate(cands):
        for b in cands[i + 1:]:
            if hyp1_compatible([a, b])[0]:
                pairs.append((a, b))
    return pairs


def hall_profiles(max_order: int) -> list[SimpleFactorProfile]:
    """Every simple listed group with |T| <= max_order (alternating, linear, sporadic)."""
    out = list(linear_candidates(max_order))
    p = 5
    while math.factorial(p) // 2 <= max_order:
        out.append(profile(GroupDescriptor("alt", (p,))))
        p = next(x for x in range(p + 1, 2 * p + 2) if is_prime(x))
    for name in ("psl2_11", "m11", "m23"):
        pr = profile(GroupDescriptor(name, ()))
        if pr.order <= max_order:
            out.append(pr)
    out.sort(key=lambda pr: (pr.order, str(pr.descriptor)))
    return out


def profiles_of_order(order: int) -> list[SimpleFactorProfile]:
    return [pr for pr in hall_profiles(order) if pr.order == order]


def iter_profiles(descs: Iterable[str]) -> list[SimpleFactorProfile]:
    return [profile(d) for d in descs]
