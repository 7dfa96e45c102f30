"""The ten acceptance criteria, each at its stated tolerance.

Every test records a one-line PASS/FAIL summary that is printed in the
terminal summary (and echoed to stdout for ``pytest -s``).
"""

import json
import random
import time

import pytest

from conftest import ACCEPTANCE_LINES
from pograph import cli
from pograph.classes import Verdict, is_clawfree, is_perfect
from pograph.corpus import corpus, family
from pograph.graph import UGraph, build_gamma
from pograph.groups import build
from pograph.oracle import ground_truth
from pograph.report import CHECKS, classify
from pograph import verifier as V
from pograph.verifier import Context, Status
from pograph.witness import Witness, WitnessKind, validate_witness

BUDGET = 30.0


@pytest.fixture
def record(request):
    """Call ``record(k, ok, detail)`` once per criterion; a failed assert still records FAIL."""
    state = {}

    def _record(k, ok, detail=""):
        state.update(k=k, ok=ok, detail=detail)

    yield _record
    if state:
        failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else False
        ok = state["ok"] and not failed
        line = f"criterion {state['k']:>2}: {'PASS' if ok else 'FAIL'}  {state['detail']}"
        ACCEPTANCE_LINES[state["k"]] = line
        print(line)


def _flags(spec):
    r = classify(spec, ["perfect", "clawfree", "cograph", "chordal"], BUDGET)
    return tuple(r.flag(c) for c in ("perfect", "clawfree", "cograph", "chordal"))


def test_criterion_01_table1(record):
    # [PAPER] six-group reference flags
    table = {
        "S:3": (True, True, True, True),
        "C:2^3": (True, True, True, True),
        "D:5": (True, True, True, False),
        "D:8": (True, False, True, False),
        "C:27": (True, True, False, False),
        "D:25": (True, False, False, False),
    }
    t0 = time.perf_counter()
    got = {spec: _flags(spec) for spec in table}
    elapsed = time.perf_counter() - t0
    matches = sum(a == b for spec in table for a, b in zip(got[spec], table[spec]))
    ok = matches == 24 and elapsed < 10
    record(1, ok, f"reference flags {matches}/24 in {elapsed:.2f}s (< 10s)")
    assert got == table
    assert elapsed < 10


def test_criterion_02_degree_proposition(record):
    violations, groups = 0, 0
    for spec in corpus(128):
        G = build(spec)
        s = len(G.element_table.S)
        violations += sum(d not in (s, s - 1) for d in build_gamma(G).degrees())
        groups += 1
    record(2, violations == 0, f"{groups} groups of order <= 128, {violations} degree violations")
    assert violations == 0


def _certified(spec, want):
    g = build_gamma(build(spec, max_order=400))
    out = is_perfect(g, BUDGET)
    assert out.certified and out.elapsed < BUDGET, spec
    assert out.in_class is want, spec
    assert validate_witness(g, out.witness), spec
    return out


def _labels_hole(spec, labels):
    G = build(spec, max_order=400)
    w = Witness(WitnessKind.ODD_HOLE, tuple(G.index(x) for x in labels))
    return validate_witness(build_gamma(G), w)


def test_criterion_03_perfect_families(record):
    n = 0
    for k in (2, 3, 4, 5):
        _certified(f"S:{k}", k <= 3)
        n += 1
    assert _labels_hole("S:5", V.S4_HOLE)
    for k in (3, 4, 5):
        _certified(f"A:{k}", True)
        n += 1
    assert _labels_hole("A:6", [V._embed_even(x) for x in V.S4_HOLE])
    for k in (3, 4, 5, 8, 9, 12, 15, 105):
        odd = [p for p in (3, 5, 7) if k % p == 0]
        _certified(f"D:{k}", len(odd) < 2)
        n += 1
    for spec in ("C:15", "C:21", "C:35", "C:2 x C:2 x C:3", "C:2 x C:2 x C:5"):
        out = _certified(spec, False)
        assert out.witness.kind is WitnessKind.ODD_HOLE
        n += 1
    ctx = Context(360, BUDGET)
    statuses = {r.id: r.status for r in V.verify_perfect_families(ctx=ctx)}
    assert all(s is Status.PASS for s in statuses.values()), statuses
    record(3, True, f"{n} certified verdicts + S_5/A_6 embedded S_4 hole; perfect-family checks {len(statuses)}/{len(statuses)} Pass")


def test_criterion_04_matrix_witness(record):
    for p in (3, 5, 7):
        mats = V.matrix_cycle(p)
        G = build(f"SL:2:{p}", max_order=400)
        w = Witness(WitnessKind.ODD_HOLE, tuple(G.index(V._mat_label(m)) for m in mats))
        assert validate_witness(build_gamma(G), w), p
        for i in range(5):
            assert V._mat_order(V._mat_mul(mats[i], mats[(i + 1) % 5], p), p) == p
        r = V.verify_matrix_group_witness(p, ctx=Context(400, BUDGET))
        assert r.status is Status.PASS, r.to_dict()
    out = _certified("PSL:2:7", False)
    record(4, True, f"5-matrix C5 valid in SL(2,p), p=3,5,7; PSL(2,7) NotInClass ({out.witness.kind.value}, certified)")


def test_criterion_05_chordal_characterization(record):
    r = V.verify_chordal_family(ctx=Context(64, BUDGET))
    record(5, r.status is Status.PASS, f"chordal/interval/split/threshold over corpus n <= 64: {r.instances} comparisons, {r.status.value}")
    assert r.status is Status.PASS, r.to_dict()


def test_criterion_06_cograph_theorems(record):
    checks = {r.id: r for r in V.verify_cograph_theorems(ctx=Context(128, BUDGET))}
    wanted = ("cograph-eppo", "cograph-odd-pgroup", "cograph-abelian-2group")
    ok = all(checks[c].status is Status.PASS for c in wanted)
    record(6, ok, ", ".join(f"{c} {checks[c].status.value} ({checks[c].instances})" for c in wanted))
    for c in wanted:
        assert checks[c].status is Status.PASS, checks[c].to_dict()
    # [DERIVED] partition numbers p(0..7) sum to 45 abelian groups of order 2^k <= 128
    assert len(family("abelian-2-groups", 128)) == 1 + 1 + 2 + 3 + 5 + 7 + 11 + 15


def test_criterion_07_clawfree(record):
    checks = {r.id: r for r in V.verify_clawfree_theorems(ctx=Context(128, BUDGET))}
    for c in ("clawfree-3group", "clawfree-2group"):
        assert checks[c].status is Status.PASS, checks[c].to_dict()
    d4 = build_gamma(build("D:4"))
    assert is_clawfree(d4).witness.labels(d4) == ["b", "e", "a", "a^3"]
    a5 = build_gamma(build("A:5"))
    out = is_clawfree(a5)
    assert out.verdict is Verdict.IN_CLASS and out.certified and out.elapsed < 5
    psl = build_gamma(build("PSL:2:7"))
    claw = is_clawfree(psl)
    assert claw.verdict is Verdict.NOT_IN_CLASS and validate_witness(psl, claw.witness)
    record(7, True, f"2-/3-group biconditionals Pass; D_4 claw (b; e, a, a^3); A_5 claw-free in {out.elapsed:.3f}s; PSL(2,7) claw")


def _random_graph(rng, n, p):
    return UGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def test_criterion_08_oracle_equivalence(record):
    graphs = [build_gamma(build(s)) for s in corpus(14)]
    rng = random.Random(20261019)
    graphs += [_random_graph(rng, rng.randint(1, 12), rng.random()) for _ in range(200)]
    total = agree = 0
    for g in graphs:
        truth = ground_truth(g)
        for name, fn in CHECKS.items():
            total += 1
            agree += fn(g).in_class is truth[name]
    record(8, agree == total, f"{len(graphs)} graphs, {agree}/{total} verdicts agree with exhaustive oracle")
    assert agree == total


def test_criterion_09_witness_integrity(record):
    rng = random.Random(9)
    emitted = bad = 0
    for _ in range(1000):
        g = _random_graph(rng, rng.randint(0, 18), rng.random())
        for fn in CHECKS.values():
            w = fn(g).witness
            if w.kind is not WitnessKind.NONE:
                emitted += 1
                bad += not validate_witness(g, w)
    for spec in corpus(64):
        r = classify(spec, budget=BUDGET)
        for c in r.checks.values():
            if c["witness"]["kind"] != "None":
                emitted += 1
                bad += not c["witness"]["valid"]
    record(9, bad == 0, f"{emitted} witnesses from 1000 random graphs + corpus n <= 64, {bad} rejected")
    assert bad == 0


def test_criterion_10_classifications_and_full_suite(record, capsys):
    classes = V.verify_order_classifications(ctx=Context(128, BUDGET))
    assert all(r.status is Status.PASS for r in classes), [r.to_dict() for r in classes]
    code = cli.main(["verify", "--suite", "all", "--max-order", "128", "--format", "json"])
    rows = json.loads(capsys.readouterr().out)
    skipped = sorted(r["id"] for r in rows if r["status"] == "Skipped")
    failed = [r for r in rows if r["status"] == "Fail"]
    ok = code == 0 and not failed and skipped == sorted(c for c, _, _ in V.GAP_ONLY)
    record(10, ok, f"pq/2p^2/2pq Pass; verify all @128: exit {code}, {len(rows) - len(skipped)} Pass, Skipped = {skipped}")
    assert code == 0 and not failed
    assert skipped == sorted(c for c, _, _ in V.GAP_ONLY)
