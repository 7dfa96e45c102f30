import pytest

from pograph.graph import UGraph
from pograph.witness import NO_WITNESS, Witness, WitnessKind, is_induced_cycle, validate_witness

C5 = UGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
C5_CHORD = UGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
P4 = UGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
CLAW = UGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
SPIDER = UGraph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


@pytest.mark.parametrize(
    "g, w, ok",
    [
        (C5, Witness(WitnessKind.ODD_HOLE, (0, 1, 2, 3, 4)), True),
        (C5, Witness(WitnessKind.ODD_HOLE, (0, 2, 4, 1, 3)), False),  # wrong order
        (C5, Witness(WitnessKind.ODD_ANTIHOLE, (0, 2, 4, 1, 3)), True),
        (C5, Witness(WitnessKind.C5, (4, 3, 2, 1, 0)), True),
        (C5_CHORD, Witness(WitnessKind.ODD_HOLE, (0, 1, 2, 3, 4)), False),
        (C5, Witness(WitnessKind.CHORDLESS_CYCLE, (0, 1, 2, 3, 4)), True),
        (P4, Witness(WitnessKind.P4, (0, 1, 2, 3)), True),
        (P4, Witness(WitnessKind.P4, (1, 0, 2, 3)), False),
        (P4, Witness(WitnessKind.TWO_K2, (0, 1, 2, 3)), False),
        (CLAW, Witness(WitnessKind.CLAW, (0, 1, 2, 3)), True),
        (CLAW, Witness(WitnessKind.CLAW, (1, 0, 2, 3)), False),
        (UGraph.from_edges(4, [(0, 1), (2, 3)]), Witness(WitnessKind.TWO_K2, (0, 1, 2, 3)), True),
        (UGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), Witness(WitnessKind.C4, (0, 1, 2, 3)), True),
        (SPIDER, Witness(WitnessKind.ASTEROIDAL_TRIPLE, (2, 4, 6)), True),
        (SPIDER, Witness(WitnessKind.ASTEROIDAL_TRIPLE, (1, 4, 6)), False),
        (C5, Witness(WitnessKind.ODD_HOLE, (0, 1, 2, 3, 9)), False),  # out of range
        (C5, Witness(WitnessKind.ODD_HOLE, (0, 1, 2, 1, 4)), False),  # repeat
        (C5, NO_WITNESS, True),
        (C5, Witness(WitnessKind.NONE, (1,)), False),
    ],
)
def test_validate(g, w, ok):
    assert validate_witness(g, w) is ok


def test_is_induced_cycle_needs_three_vertices():
    assert not is_induced_cycle(lambda a, b: True, (0, 1))


def test_to_dict_uses_labels():
    g = UGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)], labels=["b", "e", "a", "a^3"])
    d = Witness(WitnessKind.CLAW, (0, 1, 2, 3)).to_dict(g)
    assert d == {"kind": "Claw", "valid": True, "vertices": ["b", "e", "a", "a^3"]}
