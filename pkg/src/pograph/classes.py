"""Graph-class recognizers that return forbidden-subgraph certificates.

Each recognizer returns a :class:`CheckOutcome`. A ``NotInClass`` verdict
always carries a witness; ``InClass`` with ``certified=True`` means the
underlying search ran to completion. Only the odd-hole search can run out
of budget, in which case the verdict is ``Unknown``.
"""

from __future__ import annotations

import enum
import time
from collections import deque
from dataclasses import dataclass, field

from .graph import UGraph, complement, induced, iter_bits
from .witness import NO_WITNESS, Witness, WitnessKind

__all__ = [
    "DEFAULT_BUDGET",
    "Verdict",
    "CheckOutcome",
    "find_odd_hole",
    "is_perfect",
    "find_p4",
    "is_cograph",
    "is_chordal",
    "lex_bfs",
    "find_asteroidal_triple",
    "is_interval",
    "is_split",
    "is_threshold",
    "find_claw",
    "is_clawfree",
    "canonical_cycle",
]

DEFAULT_BUDGET = 30.0


class Verdict(str, enum.Enum):
    IN_CLASS = "InClass"
    NOT_IN_CLASS = "NotInClass"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class CheckOutcome:
    verdict: Verdict
    witness: Witness = NO_WITNESS
    certified: bool = True
    elapsed: float = field(default=0.0, compare=False)

    @property
    def in_class(self) -> bool | None:
        """``True``/``False`` for decided verdicts, ``None`` for ``Unknown``."""
        if self.verdict is Verdict.UNKNOWN:
            return None
        return self.verdict is Verdict.IN_CLASS

    def to_dict(self, g: UGraph) -> dict:
        return {
            "certified": self.certified,
            "elapsed": f"PT{self.elapsed:.6f}S",
            "verdict": self.verdict.value,
            "witness": self.witness.to_dict(g),
        }


def _member(start: float) -> CheckOutcome:
    return CheckOutcome(Verdict.IN_CLASS, NO_WITNESS, True, time.perf_counter() - start)


def _found(kind: WitnessKind, vertices, start: float) -> CheckOutcome:
    return CheckOutcome(Verdict.NOT_IN_CLASS, Witness(kind, tuple(vertices)), True, time.perf_counter() - start)


def canonical_cycle(cycle) -> tuple[int, ...]:
    """Rotate so the smallest vertex leads and orient so that second < last."""
    c = list(cycle)
    k = c.index(min(c))
    c = c[k:] + c[:k]
    if len(c) > 2 and c[1] > c[-1]:
        c = [c[0]] + c[:0:-1]
    return tuple(c)


# odd holes -------------------------------------------------------------------


class _OutOfBudget(Exception):
    pass


def _hole_search(adj, n: int, accept, deadline: float, max_len: int | None = None):
    """First induced cycle whose length satisfies ``accept``, or ``None``.

    Depth-first over induced paths ``v0 v1 ... u``: every vertex is larger
    than ``v0``, and each new vertex is adjacent to ``u`` but to no earlier
    path vertex except possibly ``v0`` (which closes the cycle). Closing is
    only allowed on a vertex larger than ``v1`` so each cycle is met once.
    """
    ticks = 0
    for v0 in range(n):
        above = -1 << (v0 + 1)
        n0 = adj[v0]
        for v1 in iter_bits(n0 & above):
            beyond_v1 = -1 << (v1 + 1)
            path = [v0, v1]
            start_forbid = (1 << v0) | (1 << v1)
            # frames: (pending extension mask, forbidden mask for the child level)
            # a two-vertex path cannot close, so this is always a mask
            stack = [_expand(adj, path, start_forbid, n0, above, beyond_v1, accept, max_len)]
            forbids = [start_forbid]
            while stack:
                ticks += 1
                if ticks & 0x3FF == 0 and time.perf_counter() > deadline:
                    raise _OutOfBudget
                pending = stack[-1]
                if not pending:
                    stack.pop()
                    forbids.pop()
                    path.pop()
                    continue
                low = pending & -pending
                stack[-1] = pending ^ low
                w = low.bit_length() - 1
                u = path[-1]
                forbid = forbids[-1] | adj[u] | (1 << u) | low
                # the cycle must still be closable through a neighbour of v0 beyond v1
                if not (n0 & beyond_v1 & ~forbid):
                    continue
                path.append(w)
                nxt = _expand(adj, path, forbid, n0, above, beyond_v1, accept, max_len)
                if isinstance(nxt, tuple):
                    return nxt[1]
                stack.append(nxt)
                forbids.append(forbid)
        if time.perf_counter() > deadline:
            raise _OutOfBudget
    return None


def _expand(adj, path, forbid, n0, above, beyond_v1, accept, max_len):
    """Candidate mask for extending ``path``, or ``("hit", cycle)`` when one closes."""
    u = path[-1]
    cands = adj[u] & above & ~forbid
    length = len(path) + 1
    if len(path) >= 3:
        closers = cands & n0 & beyond_v1
        if closers and accept(length):
            w = (closers & -closers).bit_length() - 1
            return ("hit", tuple(path) + (w,))
    if max_len is not None and length >= max_len:
        return 0
    return cands & ~n0


def _odd_at_least(k: int):
    return lambda length: length % 2 == 1 and length >= k


def find_odd_hole(g: UGraph, budget: float = DEFAULT_BUDGET, min_length: int = 5) -> CheckOutcome:
    """Search ``g`` for an induced odd cycle of length at least ``min_length`` (>= 5)."""
    start = time.perf_counter()
    if g.n < 5:
        return _member(start)
    try:
        cycle = _hole_search(g.adj, g.n, _odd_at_least(max(5, min_length)), start + budget)
    except _OutOfBudget:
        return CheckOutcome(Verdict.UNKNOWN, NO_WITNESS, False, time.perf_counter() - start)
    if cycle is None:
        return _member(start)
    return _found(WitnessKind.ODD_HOLE, cycle, start)


def _components(adj, mask: int) -> list[int]:
    """Connected components (as bit masks) of the subgraph induced on ``mask``."""
    out = []
    rest = mask
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & mask & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def _is_bipartite(adj, mask: int) -> bool:
    side: dict[int, int] = {}
    for root in iter_bits(mask):
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in iter_bits(adj[x] & mask):
                if y not in side:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def _pieces(adj, co_adj, n: int) -> list[int]:
    """Vertex sets connected in both the graph and its complement, found by alternate splitting.

    Odd holes and odd antiholes of length >= 5 are connected with connected
    complements, so each one lies inside a single piece.
    """
    out = []
    stack = [((1 << n) - 1, True, False)]
    while stack:
        mask, in_graph, settled = stack.pop()
        if mask.bit_count() < 5:
            continue
        parts = _components(adj if in_graph else co_adj, mask)
        if len(parts) == 1 and settled:
            out.append(mask)
            continue
        stack.extend((p, not in_graph, True) for p in reversed(parts))
    return out


def is_perfect(g: UGraph, budget: float = DEFAULT_BUDGET) -> CheckOutcome:
    """No odd hole and no odd antihole (Strong Perfect Graph Theorem).

    The graph is cut into pieces connected in both ``g`` and its complement;
    bipartite and co-bipartite pieces are perfect and skipped. On the other
    pieces an antihole of length 5 is itself a 5-hole, so once the hole
    search has completed the complement is only searched for lengths >= 7.
    """
    start = time.perf_counter()
    if g.n < 5:
        return _member(start)
    co = complement(g)
    certified = True
    for piece in _pieces(g.adj, co.adj, g.n):
        if _is_bipartite(g.adj, piece) or _is_bipartite(co.adj, piece):
            continue
        verts = list(iter_bits(piece))
        sub = induced(g, verts)
        remaining = max(0.0, budget - (time.perf_counter() - start))
        holes = find_odd_hole(sub, remaining)
        if holes.verdict is Verdict.NOT_IN_CLASS:
            return _found(WitnessKind.ODD_HOLE, [verts[v] for v in holes.witness.vertices], start)
        remaining = max(0.0, budget - (time.perf_counter() - start))
        anti = find_odd_hole(complement(sub), remaining, min_length=7 if holes.certified else 5)
        if anti.verdict is Verdict.NOT_IN_CLASS:
            return _found(WitnessKind.ODD_ANTIHOLE, [verts[v] for v in anti.witness.vertices], start)
        certified = certified and holes.certified and anti.certified
    verdict = Verdict.IN_CLASS if certified else Verdict.UNKNOWN
    return CheckOutcome(verdict, NO_WITNESS, certified, time.perf_counter() - start)


# cographs --------------------------------------------------------------------


def find_p4(g: UGraph) -> CheckOutcome:
    """Scan middle edges ``b-c`` for endpoints ``a`` (only near b) and ``d`` (only near c)."""
    start = time.perf_counter()
    adj = g.adj
    for b, c in g.edges():
        A = adj[b] & ~adj[c] & ~(1 << c)
        if not A:
            continue
        D = adj[c] & ~adj[b] & ~(1 << b)
        if not D:
            continue
        for a in iter_bits(A):
            rest = D & ~adj[a]
            if rest:
                d = (rest & -rest).bit_length() - 1
                return _found(WitnessKind.P4, (a, b, c, d), start)
    return _member(start)


def is_cograph(g: UGraph) -> CheckOutcome:
    return find_p4(g)


# chordal and interval ----------------------------------------------------------


def lex_bfs(g: UGraph) -> list[int]:
    """Lexicographic BFS visit order; ties go to the smallest vertex index."""
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    unvisited = set(range(n))
    order = []
    for step in range(n):
        v = max(unvisited, key=lambda x: (labels[x], -x))
        unvisited.remove(v)
        order.append(v)
        for w in iter_bits(g.adj[v]):
            if w in unvisited:
                labels[w].append(n - step)
    return order


def _chordless_through(g: UGraph, v: int, a: int, b: int):
    """Shortest a-b path avoiding N[v] except a, b; closes a chordless cycle with v."""
    adj = g.adj
    blocked = adj[v] | (1 << v)
    allowed = ~blocked | (1 << a) | (1 << b)
    parent = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y in iter_bits(adj[x] & allowed):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if b not in parent:
        return None
    path, x = [], b
    while x is not None:
        path.append(x)
        x = parent[x]
    return [v] + path[::-1]


def _find_chordless_cycle(g: UGraph, hint):
    cyc = _chordless_through(g, *hint)
    if cyc is not None:
        return cyc
    adj = g.adj
    for v in range(g.n):
        for a in iter_bits(adj[v]):
            for b in iter_bits(adj[v] & ~adj[a] & (-1 << (a + 1))):
                cyc = _chordless_through(g, v, a, b)
                if cyc is not None:
                    return cyc
    return None


def is_chordal(g: UGraph) -> CheckOutcome:
    """LexBFS + perfect-elimination check; a violation yields a chordless cycle."""
    start = time.perf_counter()
    order = lex_bfs(g)
    pos = {v: i for i, v in enumerate(order)}
    adj = g.adj
    for v in order:
        earlier = [u for u in iter_bits(adj[v]) if pos[u] < pos[v]]
        if len(earlier) < 2:
            continue
        parent = max(earlier, key=pos.__getitem__)
        for u in earlier:
            if u != parent and not adj[parent] >> u & 1:
                cyc = _find_chordless_cycle(g, hint=(v, parent, u))
                if cyc is None:
                    raise AssertionError("PEO violation without a chordless cycle")
                return _found(WitnessKind.CHORDLESS_CYCLE, canonical_cycle(cyc), start)
    return _member(start)


def _components_avoiding(g: UGraph, c: int) -> list[int]:
    """For each vertex, the bitmask of its component in ``g - N[c]`` (0 if removed)."""
    adj = g.adj
    alive = g.full_mask & ~(adj[c] | (1 << c))
    comp = [0] * g.n
    todo = alive
    while todo:
        seed = todo & -todo
        mask, frontier = seed, seed
        while frontier:
            grow = 0
            for x in iter_bits(frontier):
                grow |= adj[x]
            grow &= alive & ~mask
            mask |= grow
            frontier = grow
        for x in iter_bits(mask):
            comp[x] = mask
        todo &= ~mask
    return comp


def find_asteroidal_triple(g: UGraph) -> CheckOutcome:
    """Three pairwise non-adjacent vertices, each pair linked avoiding the third's closed neighbourhood."""
    start = time.perf_counter()
    n, adj = g.n, g.adj
    comps = [_components_avoiding(g, c) for c in range(n)]
    full = g.full_mask
    for a in range(n):
        non_a = full & ~adj[a] & (-1 << (a + 1))
        for b in iter_bits(non_a):
            # c beyond b, non-adjacent to both, joined to b avoiding N[a] and to a avoiding N[b]
            cands = non_a & ~adj[b] & (-1 << (b + 1)) & comps[a][b] & comps[b][a]
            for c in iter_bits(cands):
                if comps[c][a] >> b & 1:
                    return _found(WitnessKind.ASTEROIDAL_TRIPLE, (a, b, c), start)
    return _member(start)


def is_interval(g: UGraph) -> CheckOutcome:
    """Chordal and asteroidal-triple-free (Lekkerkerker-Boland)."""
    start = time.perf_counter()
    chordal = is_chordal(g)
    if chordal.verdict is not Verdict.IN_CLASS:
        return chordal
    at = find_asteroidal_triple(g)
    return CheckOutcome(at.verdict, at.witness, True, time.perf_counter() - start)


# split and threshold ----------------------------------------------------------


def _splittance_ok(g: UGraph) -> bool:
    d = sorted(g.degrees(), reverse=True)
    m = 0
    for i, di in enumerate(d, start=1):
        if di >= i - 1:
            m = i
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


def _find_2k2(g: UGraph):
    adj = g.adj
    for a, b in g.edges():
        far = g.full_mask & ~(adj[a] | adj[b] | (1 << a) | (1 << b))
        for c in iter_bits(far):
            rest = adj[c] & far
            if rest:
                d = (rest & -rest).bit_length() - 1
                return (a, b, c, d)
    return None


def _find_c4(g: UGraph):
    adj, full = g.adj, g.full_mask
    for a in range(g.n):
        for c in iter_bits(full & ~adj[a] & (-1 << (a + 1))):
            common = adj[a] & adj[c]
            for b in iter_bits(common):
                rest = common & ~adj[b] & ~(1 << b)
                if rest:
                    d = (rest & -rest).bit_length() - 1
                    return (a, b, c, d)
    return None


def _find_c5(g: UGraph):
    cyc = _hole_search(g.adj, g.n, lambda length: length == 5, float("inf"), max_len=5)
    return cyc


def is_split(g: UGraph) -> CheckOutcome:
    """Degree-sequence splittance test; failures are explained by a 2K2, C4 or C5."""
    start = time.perf_counter()
    if _splittance_ok(g):
        return _member(start)
    for kind, finder in (
        (WitnessKind.TWO_K2, _find_2k2),
        (WitnessKind.C4, _find_c4),
        (WitnessKind.C5, _find_c5),
    ):
        found = finder(g)
        if found is not None:
            if kind is not WitnessKind.TWO_K2:
                found = canonical_cycle(found)
            return _found(kind, found, start)
    raise AssertionError("non-split degree sequence without a 2K2, C4 or C5")


def is_threshold(g: UGraph) -> CheckOutcome:
    start = time.perf_counter()
    for check in (is_cograph, is_split):
        out = check(g)
        if out.verdict is not Verdict.IN_CLASS:
            return CheckOutcome(out.verdict, out.witness, True, time.perf_counter() - start)
    return _member(start)


# claws -------------------------------------------------------------------------


def find_claw(g: UGraph) -> CheckOutcome:
    """First claw in (center, leaf, leaf, leaf) lexicographic order."""
    start = time.perf_counter()
    adj = g.adj
    for v in range(g.n):
        nb = adj[v]
        if nb.bit_count() < 3:
            continue
        for y1 in iter_bits(nb):
            r1 = nb & ~adj[y1] & (-1 << (y1 + 1))
            for y2 in iter_bits(r1):
                r2 = r1 & ~adj[y2] & (-1 << (y2 + 1))
                if r2:
                    y3 = (r2 & -r2).bit_length() - 1
                    return _found(WitnessKind.CLAW, (v, y1, y2, y3), start)
    return _member(start)


def is_clawfree(g: UGraph) -> CheckOutcome:
    return find_claw(g)
