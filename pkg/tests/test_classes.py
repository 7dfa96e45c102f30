import random

import networkx as nx
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from pograph import classes
from pograph.classes import Verdict, canonical_cycle, is_perfect, lex_bfs
from pograph.graph import UGraph, build_gamma, complement
from pograph.groups import build
from pograph.oracle import ground_truth
from pograph.report import CHECKS
from pograph.witness import WitnessKind, validate_witness


def cycle(n):
    return UGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return UGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return UGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


PETERSEN = UGraph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
SPIDER = UGraph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
TWO_K2 = UGraph.from_edges(4, [(0, 1), (2, 3)])
CLAW = UGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])

# (graph, expected flags in CHECKS order: perfect, cograph, chordal, interval, split, threshold, clawfree)
NAMED = {
    "C5": (cycle(5), (False, False, False, False, False, False, True)),
    "C7": (cycle(7), (False, False, False, False, False, False, True)),
    "co-C7": (complement(cycle(7)), (False, False, False, False, False, False, True)),
    "C4": (cycle(4), (True, True, False, False, False, False, True)),
    "C6": (cycle(6), (True, False, False, False, False, False, True)),
    "P4": (path(4), (True, False, True, True, True, False, True)),
    "K5": (complete(5), (True, True, True, True, True, True, True)),
    "empty": (UGraph(6, (0,) * 6), (True, True, True, True, True, True, True)),
    "null": (UGraph(0, ()), (True, True, True, True, True, True, True)),
    "claw": (CLAW, (True, True, True, True, True, True, False)),
    "2K2": (TWO_K2, (True, True, True, True, False, False, True)),
    "spider": (SPIDER, (True, False, True, False, False, False, False)),
    "petersen": (PETERSEN, (False, False, False, False, False, False, False)),
}


@pytest.mark.parametrize("name", sorted(NAMED))
def test_named_graphs(name):
    g, flags = NAMED[name]
    for (check, fn), want in zip(CHECKS.items(), flags):
        out = fn(g)
        assert out.certified
        assert out.in_class is want, (name, check)
        assert validate_witness(g, out.witness)
        if want:
            assert out.witness.kind is WitnessKind.NONE
        else:
            assert out.witness.kind is not WitnessKind.NONE


def test_antihole_reported_with_kind():
    out = is_perfect(complement(cycle(7)))
    assert out.witness.kind is WitnessKind.ODD_ANTIHOLE
    assert len(out.witness.vertices) == 7


def test_spider_gives_asteroidal_triple():
    out = classes.is_interval(SPIDER)
    assert out.witness.kind is WitnessKind.ASTEROIDAL_TRIPLE
    assert sorted(out.witness.vertices) == [2, 4, 6]


def random_graph(rng, n, p):
    return UGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


graphs = st.tuples(st.integers(0, 11), st.floats(0.0, 1.0), st.integers(0, 2**32 - 1)).map(
    lambda t: random_graph(random.Random(t[2]), t[0], t[1])
)


@settings(max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(graphs)
def test_recognizers_agree_with_exhaustive_oracle(g):
    truth = ground_truth(g)
    for name, fn in CHECKS.items():
        out = fn(g)
        assert out.in_class is truth[name], name
        assert validate_witness(g, out.witness), name


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_chordal_agrees_with_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    assert classes.is_chordal(g).in_class is nx.is_chordal(G)


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_lex_bfs_is_a_permutation(g):
    order = lex_bfs(g)
    assert sorted(order) == list(range(g.n))


@given(st.lists(st.integers(0, 50), min_size=3, max_size=9, unique=True), st.integers(0, 8), st.booleans())
def test_canonical_cycle_is_rotation_and_reflection_invariant(vs, k, flip):
    k %= len(vs)
    other = vs[k:] + vs[:k]
    if flip:
        other = other[::-1]
    assert canonical_cycle(vs) == canonical_cycle(other)
    c = canonical_cycle(vs)
    assert c[0] == min(vs) and c[1] < c[-1]


def test_budget_exhaustion_is_unknown_not_member():
    # has a piece that is neither bipartite nor co-bipartite, so a search must run
    g = build_gamma(build("C:6 x C:3"))
    out = is_perfect(g, budget=0.0)
    assert out.verdict is Verdict.UNKNOWN
    assert out.in_class is None
    assert not out.certified


def test_bipartite_pieces_need_no_search():
    # every piece of Gamma(A_5) is bipartite or tiny, so even a zero budget certifies
    out = is_perfect(build_gamma(build("A:5")), budget=0.0)
    assert out.verdict is Verdict.IN_CLASS and out.certified


def test_pieces_partition_odd_structures():
    from pograph.classes import _pieces
    # C5 joined to a disjoint C7 antihole: pieces must keep each intact
    c5 = [(i, (i + 1) % 5) for i in range(5)]
    anti7 = [(5 + i, 5 + j) for i in range(7) for j in range(i + 1, 7) if (j - i) % 7 not in (1, 6)]
    g = UGraph.from_edges(12, c5 + anti7 + [(a, b) for a in range(5) for b in range(5, 12)])
    co = complement(g)
    masks = sorted(_pieces(g.adj, co.adj, g.n))
    assert masks == [0b11111, 0b1111111 << 5]
    out = is_perfect(g)
    assert out.verdict is Verdict.NOT_IN_CLASS
    assert validate_witness(g, out.witness)


def test_group_witnesses():
    # [PAPER] D_4 claw b ~ e, a, a^3; Z_5 chordless 4-cycle
    d4 = build_gamma(build("D:4"))
    claw = classes.is_clawfree(d4).witness
    assert claw.labels(d4) == ["b", "e", "a", "a^3"]
    z5 = build_gamma(build("C:5"))
    assert classes.is_chordal(z5).witness.kind is WitnessKind.CHORDLESS_CYCLE


@pytest.mark.parametrize("spec", ["S:4", "A:6", "D:105", "C:35", "C:2 x C:2 x C:7"])
def test_non_perfect_groups_found_quickly(spec):
    g = build_gamma(build(spec, max_order=400))
    out = is_perfect(g, budget=30)
    assert out.verdict is Verdict.NOT_IN_CLASS
    assert out.elapsed < 30
    assert validate_witness(g, out.witness)
