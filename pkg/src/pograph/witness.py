"""Forbidden-subgraph certificates and their independent validator.

The validator only uses ``UGraph.has_edge`` and its own breadth-first
search; it never trusts anything a recognizer computed along the way.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations

__all__ = ["WitnessKind", "Witness", "NO_WITNESS", "validate_witness", "is_induced_cycle"]


class WitnessKind(str, enum.Enum):
    ODD_HOLE = "OddHole"
    ODD_ANTIHOLE = "OddAntihole"
    P4 = "P4"
    CLAW = "Claw"
    CHORDLESS_CYCLE = "ChordlessCycle"
    ASTEROIDAL_TRIPLE = "AsteroidalTriple"
    TWO_K2 = "TwoK2"
    C4 = "C4"
    C5 = "C5"
    NONE = "None"


@dataclass(frozen=True)
class Witness:
    """A forbidden induced structure.

    ``vertices`` follow cycle order for holes and cycles, path order for
    P4, center-first for claws, and ``(a, b, c, d)`` with edges ``ab`` and
    ``cd`` for 2K2.
    """

    kind: WitnessKind
    vertices: tuple[int, ...] = ()

    def labels(self, g) -> list[str]:
        return [g.labels[v] for v in self.vertices]

    def to_dict(self, g) -> dict:
        return {"kind": self.kind.value, "valid": validate_witness(g, self), "vertices": self.labels(g)}


NO_WITNESS = Witness(WitnessKind.NONE)


def is_induced_cycle(edge, vs) -> bool:
    """Do ``vs`` (in order) form an induced cycle under the predicate ``edge``?"""
    k = len(vs)
    if k < 3 or len(set(vs)) != k:
        return False
    for i, j in combinations(range(k), 2):
        consecutive = j == i + 1 or (i == 0 and j == k - 1)
        if edge(vs[i], vs[j]) != consecutive:
            return False
    return True


def _pattern_holds(edge, vs, pairs) -> bool:
    k = len(vs)
    want = {frozenset(p) for p in pairs}
    return all(edge(vs[i], vs[j]) == (frozenset((i, j)) in want) for i, j in combinations(range(k), 2))


def _connected_avoiding(g, a, b, blocked) -> bool:
    if a in blocked or b in blocked:
        return False
    seen, queue = {a}, deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            return True
        for y in range(g.n):
            if y not in seen and y not in blocked and g.has_edge(x, y):
                seen.add(y)
                queue.append(y)
    return False


def validate_witness(g, w: Witness) -> bool:
    """Check that ``w`` really is the claimed induced structure in ``g``."""
    vs = tuple(w.vertices)
    if any(not 0 <= v < g.n for v in vs) or len(set(vs)) != len(vs):
        return False
    edge = g.has_edge
    kind = w.kind
    if kind is WitnessKind.NONE:
        return not vs
    if kind is WitnessKind.ODD_HOLE:
        return len(vs) >= 5 and len(vs) % 2 == 1 and is_induced_cycle(edge, vs)
    if kind is WitnessKind.ODD_ANTIHOLE:
        co = lambda x, y: not edge(x, y)
        return len(vs) >= 5 and len(vs) % 2 == 1 and is_induced_cycle(co, vs)
    if kind is WitnessKind.CHORDLESS_CYCLE:
        return len(vs) >= 4 and is_induced_cycle(edge, vs)
    if kind is WitnessKind.C4:
        return len(vs) == 4 and is_induced_cycle(edge, vs)
    if kind is WitnessKind.C5:
        return len(vs) == 5 and is_induced_cycle(edge, vs)
    if kind is WitnessKind.P4:
        return len(vs) == 4 and _pattern_holds(edge, vs, [(0, 1), (1, 2), (2, 3)])
    if kind is WitnessKind.CLAW:
        return len(vs) == 4 and _pattern_holds(edge, vs, [(0, 1), (0, 2), (0, 3)])
    if kind is WitnessKind.TWO_K2:
        return len(vs) == 4 and _pattern_holds(edge, vs, [(0, 1), (2, 3)])
    if kind is WitnessKind.ASTEROIDAL_TRIPLE:
        if len(vs) != 3 or any(edge(x, y) for x, y in combinations(vs, 2)):
            return False
        for i in range(3):
            a, b, c = vs[i], vs[(i + 1) % 3], vs[(i + 2) % 3]
            blocked = {c} | {y for y in range(g.n) if edge(c, y)}
            if not _connected_avoiding(g, a, b, blocked):
                return False
        return True
    return False
