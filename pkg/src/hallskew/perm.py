"""Permutations on {0..n-1}, composed left to right.

Internally a permutation is its image tuple ``p`` with ``p[x]`` the image of
``x``.  The product ``p * q`` applies ``p`` first: ``(p*q)[x] == q[p[x]]``.
Cycle strings in all I/O are 1-indexed, e.g. ``"(1,2)(3,4)"``.
"""
from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Sequence

from hallskew.errors import DegreeMismatch

Images = tuple  # tuple[int, ...]


def identity_images(n: int) -> Images:
    return tuple(range(n))


def mul(p: Images, q: Images) -> Images:
    return tuple(map(q.__getitem__, p))


def inv(p: Images) -> Images:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def cycles_of(p: Images) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def order_of(p: Images) -> int:
    return reduce(math.lcm, (len(c) for c in cycles_of(p)), 1)


def power(p: Images, e: int) -> Images:
    n = len(p)
    if e < 0:
        p, e = inv(p), -e
    result = tuple(range(n))
    base = p
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Images:
    """Parse 1-indexed disjoint-cycle notation.

    Both ``(1,2)(3,4)`` and ``(12)(34)`` are accepted; the comma-free form
    only works when every point is a single digit.
    """
    text = text.strip()
    if text in ("", "()", "id", "1"):
        if degree is None:
            raise ValueError("degree required for the identity")
        return identity_images(degree)
    if _CYCLE_RE.sub("", text).strip():
        raise ValueError(f"not a cycle string: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        if "," in body or " " in body:
            pts = [int(t) for t in re.split(r"[,\s]+", body) if t]
        else:
            pts = [int(ch) for ch in body]
        if any(x < 1 for x in pts):
            raise ValueError("cycle points are 1-indexed")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle ({body})")
        cycles.append([x - 1 for x in pts])
    top = max((max(c) for c in cycles if c), default=-1) + 1
    if degree is None:
        degree = top
    elif top > degree:
        raise ValueError(f"point {top} exceeds degree {degree}")
    images = list(range(degree))
    used: set[int] = set()
    for c in cycles:
        if used.intersection(c):
            raise ValueError("cycles are not disjoint")
        used.update(c)
        for a, b in zip(c, c[1:] + c[:1]):
            images[a] = b
    return tuple(images)


def format_cycles(p: Images) -> str:
    cyc = cycles_of(p)
    if not cyc:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cyc)


class Permutation:
    """An immutable permutation of ``degree`` points."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images do not form a permutation")
        if not images:
            raise ValueError("degree must be positive")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: Images) -> "Permutation":
        obj = cls.__new__(cls)
        obj.images = images
        obj._hash = hash(images)
        return obj

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(identity_images(degree))

    @classmethod
    def from_cycles(cls, text: str, degree: int | None = None) -> "Permutation":
        return cls._trusted(parse_cycles(text, degree))

    @classmethod
    def from_cycle_lists(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        """Build from 1-indexed cycles given as integer sequences."""
        images = list(range(degree))
        for c in cycles:
            for a, b in zip(c, list(c[1:]) + [c[0]]):
                images[a - 1] = b - 1
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        return Permutation._trusted(mul(self.images, other.images))

    def __pow__(self, e: int) -> "Permutation":
        return Permutation._trusted(power(self.images, e))

    def inverse(self) -> "Permutation":
        return Permutation._trusted(inv(self.images))

    def conjugate(self, by: "Permutation") -> "Permutation":
        """``by^-1 * self * by``: relabel the cycles of ``self`` through ``by``."""
        return by.inverse() * self * by

    def order(self) -> int:
        return order_of(self.images)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 0-indexed."""
        return cycles_of(self.images)

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i == x]

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in cycles_of(self.images)) % 2 == 0

    def extend(self, degree: int, offset: int = 0) -> "Permutation":
        """Embed into ``degree`` points, moving only ``offset..offset+self.degree-1``."""
        images = list(range(degree))
        for i, x in enumerate(self.images):
            images[offset + i] = offset + x
        return Permutation._trusted(tuple(images))

    def restrict(self, offset: int, length: int) -> "Permutation":
        block = self.images[offset:offset + length]
        if any(not offset <= x < offset + length for x in block):
            raise ValueError("block is not invariant")
        return Permutation._trusted(tuple(x - offset for x in block))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return format_cycles(self.images)

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({str(self)!r}, {self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: ``compose(p, q)(x) == q(p(x))``."""
    return p * q


def element_order(p: Permutation) -> int:
    return p.order()
