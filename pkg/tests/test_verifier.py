import json

import pytest

from pograph import verifier as V
from pograph.groups import build
from pograph.verifier import Context, Status, _Tally, run_suite, suite_exit_code
from pograph.witness import WitnessKind


@pytest.fixture(scope="module")
def ctx64():
    return Context(64, 30.0)


def test_basics_pass_small(ctx64):
    r = V.verify_proposition_basics(ctx=ctx64)
    assert r.status is Status.PASS and r.instances > 0


@pytest.mark.parametrize(
    "fn",
    [
        V.verify_perfect_families,
        V.verify_order_classifications,
        V.verify_cograph_theorems,
        V.verify_clawfree_theorems,
    ],
)
def test_list_checks_pass_small(fn, ctx64):
    for r in fn(ctx=ctx64):
        assert r.status is not Status.FAIL, r.to_dict()


@pytest.mark.parametrize(
    "fn",
    [
        V.verify_sufficient_condition_pgroups,
        V.verify_odd_order_reduction,
        V.verify_abelian_characterization,
        V.verify_nilpotent_and_product_theorems,
        V.verify_chordal_family,
        V.verify_table1,
    ],
)
def test_single_checks_pass_small(fn, ctx64):
    r = fn(ctx=ctx64)
    assert r.status is Status.PASS, r.to_dict()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_matrix_cycle_arithmetic(p):
    mats = V.matrix_cycle(p)
    assert all((a * d - b * c) % p == 1 for a, b, c, d in mats)
    for i in range(5):
        o = V._mat_order(V._mat_mul(mats[i], mats[(i + 1) % 5], p), p)
        assert o == p


def test_matrix_witness_check_pass():
    r = V.verify_matrix_group_witness(5, ctx=Context(128, 30.0))
    assert r.status is Status.PASS
    assert "GL:2:5" in r.excluded
    with pytest.raises(ValueError):
        V.verify_matrix_group_witness(4)


def test_embed_even():
    assert V._embed_even("e") == "e"
    assert V._embed_even("(1 2 3)") == "(1 2 3)"
    assert V._embed_even("(1 3 4 2)") == "(1 3 4 2)(5 6)"


def test_group_helpers():
    s4 = build("S:4")
    assert len(V._sylow(s4, 2)) == 8
    assert len(V._sylow(s4, 3)) == 3
    assert V._center(s4) == [0]
    assert len(V._center(build("Q:8"))) == 2
    assert V._is_nilpotent(build("Q:8 x C:3"))
    assert not V._is_nilpotent(s4)
    assert V._is_quaternion(build("Q:16"))
    assert not V._is_quaternion(build("C:16"))
    assert V._has_Z2p_x_Z2(build("C:6 x C:2"))
    assert not V._has_Z2p_x_Z2(build("C:12"))
    assert V._has_pq_element(build("C:15"), odd_only=True)
    assert not V._has_pq_element(build("C:6"), odd_only=True)


def test_fail_carries_validated_counterexample():
    ctx = Context(64, 30.0)
    t = _Tally("deliberately-wrong", "claims S_4 is perfect", ctx)
    t.expect("S:4", "perfect", True)
    r = t.done()
    assert r.status is Status.FAIL
    ce = r.counterexample
    assert ce["spec"] == "S:4" and ce["expected"] is True and ce["observed"] is False
    assert ce["witness"]["kind"] == "OddHole" and ce["witness"]["valid"] is True
    json.dumps(r.to_dict())


def test_fail_on_missing_witness():
    t = _Tally("deliberately-wrong", "claims Z_4 is not perfect", Context(64, 30.0))
    t.expect("C:4", "perfect", False)
    r = t.done()
    assert r.status is Status.FAIL and r.counterexample["witness"] is None


def test_bad_explicit_witness_fails():
    t = _Tally("bad-witness", "", Context(64, 30.0))
    t.witness("C:5", WitnessKind.CHORDLESS_CYCLE, ["1", "2", "3", "4"])
    assert t.done().status is Status.FAIL
    t = _Tally("bad-label", "", Context(64, 30.0))
    t.witness("C:5", WitnessKind.CHORDLESS_CYCLE, ["1", "2", "4", "x"])
    assert t.done().counterexample["note"] == "unknown element label"


def test_unknown_becomes_skipped_not_pass():
    ctx = Context(64, 0.0)
    t = _Tally("tiny-budget", "", ctx)
    t.expect("C:6 x C:3", "perfect", True)
    r = t.done()
    assert r.status is Status.SKIPPED and "C:6 x C:3" in r.reason


def test_empty_corpus_all_skipped():
    results = run_suite("all", max_order=0)
    assert results and all(r.status is Status.SKIPPED for r in results)
    assert suite_exit_code(results) == 0


def test_gap_entries_listed():
    ids = [r.id for r in V.gap_only_checks()]
    assert ids == ["gap-81-7", "gap-81-9", "gap-32-44"]


def test_suite_json_schema():
    results = run_suite("table1")
    d = results[0].to_dict()
    assert set(d) == {"anchor", "elapsed", "id", "instances", "status"}
    assert d["status"] == "Pass" and d["instances"] == 24


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
