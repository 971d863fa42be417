"""Simple undirected graphs, direct and bi-direct products, DOT/JSON export."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset  # of (i, j) with i < j
    bipartition: tuple[frozenset, frozenset] | None = None
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        for i, j in self.edges:
            if not 0 <= i < j < self.n:
                raise ValueError(f"bad edge ({i}, {j})")
        if self.bipartition is not None:
            U, V = self.bipartition
            if U & V or len(U) + len(V) != self.n:
                raise ValueError("bipartition must split the vertex set")
            for i, j in self.edges:
                if (i in U) == (j in U):
                    raise ValueError(f"edge ({i}, {j}) does not cross the bipartition")

    @classmethod
    def from_edges(cls, n: int, edges, bipartition=None, labels=None) -> "Graph":
        es = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at {i}")
            es.add((min(i, j), max(i, j)))
        bp = None if bipartition is None else (frozenset(bipartition[0]), frozenset(bipartition[1]))
        return cls(n, frozenset(es), bp, None if labels is None else tuple(labels))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def degrees(self) -> list[int]:
        deg = np.zeros(self.n, dtype=np.int64)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg.tolist()

    def is_regular(self, k: int | None = None) -> bool:
        d = set(self.degrees())
        return len(d) <= 1 and (k is None or d <= {k})

    def components(self) -> int:
        adj = self.adjacency()
        seen = [False] * self.n
        count = 0
        for v in range(self.n):
            if seen[v]:
                continue
            count += 1
            seen[v] = True
            stack = [v]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
        return count

    def to_json(self) -> dict:
        out = {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}
        if self.bipartition is not None:
            out["bipartition"] = [sorted(self.bipartition[0]), sorted(self.bipartition[1])]
        return out

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            label = self.labels[v] if self.labels else str(v)
            lines.append(f'  {v} [label="{label}"];')
        for i, j in sorted(self.edges):
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def complete_graph(n: int) -> Graph:
    bp = (range(1), range(1, 2)) if n == 2 else None
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], bp)


def cycle_graph(n: int) -> Graph:
    bp = (range(0, n, 2), range(1, n, 2)) if n % 2 == 0 else None
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], bp)


def direct_product(A: Graph, B: Graph) -> Graph:
    """(a1, b1) ~ (a2, b2) iff a1 ~ a2 and b1 ~ b2; vertex (a, b) has index a * B.n + b."""
    edges = []
    for a1, a2 in A.edges:
        for b1, b2 in B.edges:
            edges.append((a1 * B.n + b1, a2 * B.n + b2))
            edges.append((a1 * B.n + b2, a2 * B.n + b1))
    return Graph.from_edges(A.n * B.n, edges)


def _parts(G: Graph) -> tuple[list[int], list[int]]:
    if G.bipartition is None:
        raise ValueError("bi-direct product needs graphs with a declared bipartition")
    return sorted(G.bipartition[0]), sorted(G.bipartition[1])


def bidirect_product(A: Graph, B: Graph) -> Graph:
    """Parts U1 x U2 and V1 x V2 with (u1, u2) ~ (v1, v2) iff u1 ~ v1 and u2 ~ v2.

    Vertices of U1 x U2 come first, in lexicographic order, then V1 x V2.
    """
    U1, V1 = _parts(A)
    U2, V2 = _parts(B)
    left = {pair: i for i, pair in enumerate(product(U1, U2))}
    right = {pair: len(left) + i for i, pair in enumerate(product(V1, V2))}
    adjA, adjB = A.adjacency(), B.adjacency()
    edges = []
    for (u1, u2), i in left.items():
        for v1 in adjA[u1]:
            for v2 in adjB[u2]:
                edges.append((i, right[(v1, v2)]))
    n = len(left) + len(right)
    return Graph.from_edges(n, edges, (range(len(left)), range(len(left), n)))


def tuple_index(sizes: Sequence[int], coords: Sequence[int]) -> int:
    """Mixed-radix index of a coordinate tuple, first coordinate most significant."""
    idx = 0
    for n, c in zip(sizes, coords):
        idx = idx * n + c
    return idx
