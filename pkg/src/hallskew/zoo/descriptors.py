"""Group descriptors and the ``kind:params`` text grammar.

Grammar: ``alt:p``, ``sym:p``, ``psl:d,q``, ``psigma:d,q0``, ``m11``, ``m23``,
``dihedral:n``, ``wreath:p``, ``cyclic:n``.  Aliases: ``l2_11`` and
``psl:2,11`` name PSL(2,11) on 11 points, ``d8`` is ``dihedral:8``.
"""
from __future__ import annotations

from dataclasses import dataclass

KINDS = {
    "alt": 1,
    "sym": 1,
    "psl": 2,
    "psigma": 2,
    "psl2_11": 0,
    "m11": 0,
    "m23": 0,
    "cyclic": 1,
    "dihedral": 1,
    "wreath": 1,
}

ALIASES = {
    "l2_11": "psl2_11",
    "psl:2,11": "psl2_11",
    "d8": "dihedral:8",
}


@dataclass(frozen=True)
class GroupDescriptor:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown group kind {self.kind!r}")
        if len(self.params) != KINDS[self.kind]:
            raise ValueError(f"{self.kind} takes {KINDS[self.kind]} parameter(s), got {len(self.params)}")
        if any(x < 1 for x in self.params):
            raise ValueError("parameters must be positive")

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:" + ",".join(map(str, self.params))


def parse_descriptor(text: str) -> GroupDescriptor:
    text = text.strip().lower().replace(" ", "")
    text = ALIASES.get(text, text)
    kind, _, rest = text.partition(":")
    try:
        params = tuple(int(x) for x in rest.split(",")) if rest else ()
    except ValueError:
        raise ValueError(f"bad descriptor parameters in {text!r}") from None
    return GroupDescriptor(kind, params)
