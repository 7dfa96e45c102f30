"""Simple undirected graphs with bitset rows, and the prime-order element graph.

Rows of the adjacency structure are Python ints used as bitsets: bit ``j``
of ``adj[i]`` is set iff ``{i, j}`` is an edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .groups import Group, is_prime

__all__ = ["UGraph", "build_gamma", "complement", "induced", "iter_bits"]


def iter_bits(mask: int):
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class UGraph:
    n: int
    adj: tuple[int, ...] = field(repr=False)
    labels: tuple[str, ...] = field(repr=False, default=None)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "UGraph":
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError("self-loops are not allowed")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    @classmethod
    def from_matrix(cls, A, labels=None) -> "UGraph":
        A = np.asarray(A, dtype=bool)
        rows = tuple(
            int.from_bytes(np.packbits(r, bitorder="little").tobytes(), "little") for r in A
        )
        return cls(A.shape[0], rows, None if labels is None else tuple(labels))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return list(iter_bits(self.adj[i]))

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))]

    def to_matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=bool)
        for i, j in self.edges():
            A[i, j] = A[j, i] = True
        return A

    def __eq__(self, other) -> bool:
        if not isinstance(other, UGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    __hash__ = None

    def to_dot(self, name: str = "gamma") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {_dot_id(lab)};" for lab in self.labels]
        lines += [f"  {_dot_id(self.labels[i])} -- {_dot_id(self.labels[j])};" for i, j in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {"edges": [list(e) for e in self.edges()], "labels": list(self.labels), "n": self.n}
        return json.dumps(payload, sort_keys=True, ensure_ascii=False) + "\n"


def _dot_id(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def build_gamma(G: Group) -> UGraph:
    """Prime-order element graph: ``x ~ y`` iff ``x != y`` and ``ord(xy)`` is prime."""
    prime = np.array([is_prime(int(k)) for k in range(int(G.orders.max()) + 1)])
    A = prime[G.orders[G.table]]
    # ord(xy) = ord(yx); a failure here means a broken Cayley table
    assert np.array_equal(A, A.T), f"asymmetric adjacency for {G.family}"
    np.fill_diagonal(A, False)
    return UGraph.from_matrix(A, G.labels)


def complement(g: UGraph) -> UGraph:
    full = g.full_mask
    rows = tuple((full ^ row) & ~(1 << i) for i, row in enumerate(g.adj))
    return UGraph(g.n, rows, g.labels)


def induced(g: UGraph, verts) -> UGraph:
    """Induced subgraph on ``verts``, relabelled ``0..k-1`` in the given order."""
    verts = list(verts)
    if len(set(verts)) != len(verts):
        raise ValueError("induced vertex list has repeats")
    for v in verts:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for {g.n} vertices")
    rows = []
    for v in verts:
        row = g.adj[v]
        rows.append(sum(1 << k for k, w in enumerate(verts) if row >> w & 1))
    return UGraph(len(verts), tuple(rows), tuple(g.labels[v] for v in verts))
