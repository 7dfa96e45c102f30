"""Exhaustive subset enumeration used to cross-check the recognizers.

Nothing here shares code with :mod:`pograph.classes`; every answer comes
from looking at vertex subsets one by one through ``UGraph.has_edge``.
Intended for graphs with at most :data:`ORACLE_CAP` vertices.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations

__all__ = [
    "ORACLE_CAP",
    "PATTERNS",
    "oracle_induced_scan",
    "induced_cycles",
    "ground_truth",
]

ORACLE_CAP = 14

PATTERNS: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "P4": (4, [(0, 1), (1, 2), (2, 3)]),
    "C4": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "C5": (5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    "C6": (6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]),
    "claw": (4, [(0, 1), (0, 2), (0, 3)]),
    "2K2": (4, [(0, 1), (2, 3)]),
}


def _check_cap(g, cap):
    if g.n > cap:
        raise ValueError(f"oracle limited to {cap} vertices, graph has {g.n}")


def oracle_induced_scan(g, pattern: str, cap: int = ORACLE_CAP) -> list[tuple[int, ...]]:
    """Every induced copy of ``pattern`` in ``g``, one per vertex subset.

    Each occurrence is the lexicographically smallest vertex ordering that
    maps pattern position ``i`` to the ``i``-th vertex.
    """
    _check_cap(g, cap)
    k, pedges = PATTERNS[pattern]
    want = {frozenset(e) for e in pedges}
    want_degrees = sorted(sum(1 for e in pedges if i in e) for i in range(k))
    found = []
    for subset in combinations(range(g.n), k):
        present = [(a, b) for a, b in combinations(subset, 2) if g.has_edge(a, b)]
        if len(present) != len(pedges):
            continue
        deg = {v: 0 for v in subset}
        for a, b in present:
            deg[a] += 1
            deg[b] += 1
        if sorted(deg.values()) != want_degrees:
            continue
        for order in permutations(subset):
            if all(
                g.has_edge(order[i], order[j]) == (frozenset((i, j)) in want)
                for i, j in combinations(range(k), 2)
            ):
                found.append(order)
                break
    return found


def _induces_cycle(edge, subset) -> bool:
    """Is the subgraph on ``subset`` a single cycle (2-regular and connected)?"""
    nbrs = {v: [w for w in subset if w != v and edge(v, w)] for v in subset}
    if any(len(ws) != 2 for ws in nbrs.values()):
        return False
    start = subset[0]
    seen, queue = {start}, deque([start])
    while queue:
        for w in nbrs[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(subset)


def induced_cycles(g, lengths, complement: bool = False, cap: int = ORACLE_CAP):
    """Vertex subsets inducing a cycle (in ``g`` or its complement) of the given lengths."""
    _check_cap(g, cap)
    if complement:
        edge = lambda a, b: not g.has_edge(a, b)
    else:
        edge = g.has_edge
    for k in lengths:
        for subset in combinations(range(g.n), k):
            if _induces_cycle(edge, subset):
                yield subset


def _has_asteroidal_triple(g) -> bool:
    adj = {v: {w for w in range(g.n) if g.has_edge(v, w)} for v in range(g.n)}

    def linked(a, b, c):
        blocked = adj[c] | {c}
        seen, queue = {a}, deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                return True
            for y in adj[x] - blocked - seen:
                seen.add(y)
                queue.append(y)
        return False

    for a, b, c in combinations(range(g.n), 3):
        if b in adj[a] or c in adj[a] or c in adj[b]:
            continue
        if linked(a, b, c) and linked(b, c, a) and linked(a, c, b):
            return True
    return False


def ground_truth(g, cap: int = ORACLE_CAP) -> dict[str, bool]:
    """Class memberships decided purely from forbidden induced subgraphs."""
    _check_cap(g, cap)
    n = g.n
    odd = [k for k in range(5, n + 1, 2)]
    has = {name: bool(oracle_induced_scan(g, name, cap)) for name in ("P4", "C4", "C5", "claw", "2K2")}
    perfect = not any(True for _ in induced_cycles(g, odd, cap=cap)) and not any(
        True for _ in induced_cycles(g, odd, complement=True, cap=cap)
    )
    chordal = not any(True for _ in induced_cycles(g, range(4, n + 1), cap=cap))
    return {
        "perfect": perfect,
        "cograph": not has["P4"],
        "chordal": chordal,
        "interval": chordal and not _has_asteroidal_triple(g),
        "split": not (has["2K2"] or has["C4"] or has["C5"]),
        "threshold": not (has["P4"] or has["C4"] or has["2K2"]),
        "clawfree": not has["claw"],
    }
