import pytest

from pograph.graph import UGraph, build_gamma
from pograph.groups import build
from pograph.oracle import ORACLE_CAP, ground_truth, induced_cycles, oracle_induced_scan


def test_scan_counts_on_c5():
    c5 = UGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    # [DERIVED] each of the 5 edges-removed paths is one induced P4
    assert len(oracle_induced_scan(c5, "P4")) == 5
    assert len(oracle_induced_scan(c5, "C5")) == 1
    assert oracle_induced_scan(c5, "claw") == []


def test_scan_reports_pattern_order():
    claw = UGraph.from_edges(4, [(3, 0), (3, 1), (3, 2)])
    assert oracle_induced_scan(claw, "claw") == [(3, 0, 1, 2)]


def test_cap_enforced():
    with pytest.raises(ValueError):
        ground_truth(UGraph(ORACLE_CAP + 1, (0,) * (ORACLE_CAP + 1)))


def test_complement_cycles():
    c5 = UGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert list(induced_cycles(c5, [5], complement=True)) == [(0, 1, 2, 3, 4)]


@pytest.mark.parametrize(
    "spec, perfect, cograph, chordal, clawfree",
    [
        # [PAPER] six-group reference rows within the oracle cap
        ("S:3", True, True, True, True),
        ("C:2^3", True, True, True, True),
        ("D:5", True, True, False, True),
    ],
)
def test_ground_truth_on_small_groups(spec, perfect, cograph, chordal, clawfree):
    truth = ground_truth(build_gamma(build(spec)))
    assert (truth["perfect"], truth["cograph"], truth["chordal"], truth["clawfree"]) == (perfect, cograph, chordal, clawfree)
