import pytest

from pograph.grammar import Atom, GeneralizedDihedral, GroupSpecError, MatrixSemidirect, Power, Product, parse


@pytest.mark.parametrize(
    "text, node",
    [
        ("C:5", Atom("C", (5,))),
        ("  D : 8 ", Atom("D", (8,))),
        ("Q:8", Atom("Q", (8,))),
        ("SD:7:3:2", Atom("SD", (7, 3, 2))),
        ("PSL:2:7", Atom("PSL", (7,))),
        ("SL:2:5", Atom("SL", (5,))),
        ("GL:2:3", Atom("GL", (3,))),
        ("C:2^3", Power(Atom("C", (2,)), 3)),
        ("C:2 x D:5", Product((Atom("C", (2,)), Atom("D", (5,))))),
        ("GD:(C:3 x C:3)", GeneralizedDihedral(Product((Atom("C", (3,)), Atom("C", (3,)))))),
    ],
)
def test_parse_shapes(text, node):
    assert parse(text) == node


def test_parse_matrix_semidirect_with_signed_entries():
    node = parse("SDM:(C:3 x C:3):4:[0,-1;1,0]")
    assert isinstance(node, MatrixSemidirect)
    assert node.m == 4
    assert node.matrix == ((0, -1), (1, 0))


def test_parenthesised_product_power():
    node = parse("(C:2 x C:3)^2")
    assert node == Power(Product((Atom("C", (2,)), Atom("C", (3,)))), 2)


@pytest.mark.parametrize(
    "text",
    ["", "   ", "C", "C:", "C:x", "Z:5", "C:5 x", "C:5 y C:3", "(C:5", "GL:3:5", "C:2^0", "SD:7:3", "SDM:(C:3):2:[1"],
)
def test_parse_errors(text):
    with pytest.raises(GroupSpecError):
        parse(text)


def test_error_position_points_into_stripped_text():
    with pytest.raises(GroupSpecError) as info:
        parse("C:5 x Q")
    assert info.value.position is not None
    assert 0 <= info.value.position <= len("C:5xQ")
    assert "position" in str(info.value)


def test_error_is_value_error():
    assert issubclass(GroupSpecError, ValueError)
