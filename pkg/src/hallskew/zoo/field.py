"""Finite fields GF(p^f) with log/exp tables.

An element is an int in ``range(q)`` whose base-p digits are its polynomial
coefficients, lowest degree first.  The modulus is the least primitive
polynomial of degree f when monic polynomials are ordered by that same
integer encoding of their lower coefficients.
"""
from __future__ import annotations

from functools import lru_cache

from hallskew.numth import prime_power

MAX_Q = 2**16


def _digits(x: int, p: int, f: int) -> list[int]:
    out = []
    for _ in range(f):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _times_x(v: list[int], low: list[int], p: int) -> list[int]:
    """Multiply ``v`` by x modulo the monic polynomial x^f + sum(low[i] x^i)."""
    top = v[-1]
    out = [0] + v[:-1]
    if top:
        out = [(a - top * c) % p for a, c in zip(out, low)]
    return out


def _x_order(low: list[int], p: int, limit: int) -> int | None:
    """Multiplicative order of x modulo the polynomial, if at most ``limit``."""
    f = len(low)
    one = [1] + [0] * (f - 1)
    v = one
    for n in range(1, limit + 1):
        v = _times_x(v, low, p)
        if v == one:
            return n
    return None


def least_primitive_polynomial(p: int, f: int) -> tuple[int, ...]:
    """Coefficients ``(c_0, ..., c_{f-1}, 1)`` of the least primitive polynomial."""
    q = p**f
    for code in range(p**f):
        low = _digits(code, p, f)
        if low[0] == 0:
            continue
        if f == 1:
            # x - a is primitive iff a is a primitive root
            a = (-low[0]) % p
            if _root_order(a, p) == p - 1:
                return tuple(low) + (1,)
            continue
        if _x_order(low, p, q - 1) == q - 1:
            return tuple(low) + (1,)
    raise AssertionError(f"no primitive polynomial for GF({p}^{f})")


def _root_order(a: int, p: int) -> int:
    if a == 0:
        return 0
    n, x = 1, a % p
    while x != 1:
        x = x * a % p
        n += 1
    return n


class Field:
    """GF(q) with ``q = p**f``; element 0 is zero, ``gen`` is a primitive element."""

    def __init__(self, q: int):
        p, f = prime_power(q)
        if q > MAX_Q:
            raise ValueError(f"q = {q} exceeds the supported bound {MAX_Q}")
        self.p, self.f, self.q = p, f, q
        self.modulus = least_primitive_polynomial(p, f)
        low = list(self.modulus[:-1])
        exp = []
        if f == 1:
            g = (-low[0]) % p
            x = 1
            for _ in range(q - 1):
                exp.append(x)
                x = x * g % p
        else:
            v = [1] + [0] * (f - 1)
            for _ in range(q - 1):
                exp.append(_undigits(v, p))
                v = _times_x(v, low, p)
        self.exp = exp
        self.log = {x: i for i, x in enumerate(exp)}
        assert len(self.log) == q - 1
        self.gen = exp[1] if q > 2 else 1
        self._digits = [_digits(x, p, f) for x in range(q)]

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.f == 1:
            return (a + b) % self.p
        return _undigits([(x + y) % self.p for x, y in zip(self._digits[a], self._digits[b])], self.p)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return _undigits([(-x) % self.p for x in self._digits[a]], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[-self.log[a] % (self.q - 1)]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 0 if n > 0 else 1
        return self.exp[self.log[a] * n % (self.q - 1)]

    def frobenius(self, a: int, power: int | None = None) -> int:
        """``a ** power``, defaulting to ``a ** p``."""
        return self.pow(a, self.p if power is None else power)

    def subfield_basis(self, q0: int) -> list[int]:
        """A GF(p)-basis of the subfield of order q0: powers of its primitive element."""
        p0, f0 = prime_power(q0)
        if p0 != self.p or self.f % f0:
            raise ValueError(f"GF({q0}) is not a subfield of GF({self.q})")
        mu = self.exp[(self.q - 1) // (q0 - 1)] if q0 > 2 else 1
        return [self.pow(mu, i) for i in range(f0)]


@lru_cache(maxsize=None)
def field(q: int) -> Field:
    """Shared, immutable field instance for ``q``."""
    return Field(q)
