"""Parser for textual group constructor expressions.

Grammar (whitespace is ignored)::

    product := power ("x" power)*
    power   := atom ("^" INT)?
    atom    := "(" product ")"
             | "C:" INT | "D:" INT | "Q:" INT | "S:" INT | "A:" INT
             | "GL:2:" INT | "SL:2:" INT | "PSL:2:" INT
             | "SD:" INT ":" INT ":" INT
             | "GD:" atom
             | "SDM:" atom ":" INT ":[" row (";" row)* "]"
    row     := SINT ("," SINT)*

``G^k`` is the k-fold direct power of ``G``; ``C:2^3`` is therefore
Z_2 x Z_2 x Z_2, not Z_8.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "GroupSpecError",
    "Atom",
    "Product",
    "Power",
    "GeneralizedDihedral",
    "MatrixSemidirect",
    "parse",
]


class GroupSpecError(ValueError):
    """Raised for malformed or invalid group expressions.

    ``position`` is the offset into the whitespace-stripped expression, or
    ``None`` when the error concerns a parameter rather than syntax.
    """

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


@dataclass(frozen=True)
class Atom:
    kind: str
    params: tuple[int, ...]


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class GeneralizedDihedral:
    base: object


@dataclass(frozen=True)
class MatrixSemidirect:
    base: object
    m: int
    matrix: tuple[tuple[int, ...], ...]


# longest names first so that "SDM" is not read as "SD" and "PSL" not as "S"
_NAMES = ("PSL", "SDM", "GL", "SL", "SD", "GD", "C", "D", "Q", "S", "A")
_ARITY = {"C": 1, "D": 1, "Q": 1, "S": 1, "A": 1, "SD": 3}


class _Parser:
    def __init__(self, text: str):
        self.s = "".join(text.split())
        self.i = 0

    def error(self, msg: str) -> GroupSpecError:
        return GroupSpecError(msg, self.i)

    def peek(self, tok: str) -> bool:
        return self.s.startswith(tok, self.i)

    def expect(self, tok: str) -> None:
        if not self.peek(tok):
            found = self.s[self.i : self.i + 1] or "end of input"
            raise self.error(f"expected {tok!r}, found {found!r}")
        self.i += len(tok)

    def integer(self, signed: bool = False) -> int:
        start = self.i
        if signed and self.peek("-"):
            self.i += 1
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        digits = self.s[start : self.i]
        if digits in ("", "-"):
            self.i = start
            raise self.error("expected an integer")
        return int(digits)

    def parse(self):
        if not self.s:
            raise self.error("empty group expression")
        node = self.product()
        if self.i != len(self.s):
            raise self.error(f"unexpected {self.s[self.i]!r}")
        return node

    def product(self):
        factors = [self.power()]
        while self.peek("x"):
            self.i += 1
            factors.append(self.power())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def power(self):
        node = self.atom()
        if self.peek("^"):
            self.i += 1
            k = self.integer()
            if k < 1:
                raise self.error("power exponent must be positive")
            node = Power(node, k)
        return node

    def atom(self):
        if self.peek("("):
            self.i += 1
            node = self.product()
            self.expect(")")
            return node
        for name in _NAMES:
            if self.peek(name + ":"):
                self.i += len(name) + 1
                return self.named(name)
        raise self.error("expected a group constructor")

    def named(self, name: str):
        if name in ("GL", "SL", "PSL"):
            if self.integer() != 2:
                raise self.error(f"{name} supports only degree 2")
            self.expect(":")
            return Atom(name, (self.integer(),))
        if name == "GD":
            return GeneralizedDihedral(self.atom())
        if name == "SDM":
            base = self.atom()
            self.expect(":")
            m = self.integer()
            self.expect(":")
            self.expect("[")
            rows = [self.row()]
            while self.peek(";"):
                self.i += 1
                rows.append(self.row())
            self.expect("]")
            return MatrixSemidirect(base, m, tuple(rows))
        params = [self.integer()]
        for _ in range(_ARITY[name] - 1):
            self.expect(":")
            params.append(self.integer())
        return Atom(name, tuple(params))

    def row(self) -> tuple[int, ...]:
        entries = [self.integer(signed=True)]
        while self.peek(","):
            self.i += 1
            entries.append(self.integer(signed=True))
        return tuple(entries)


def parse(text: str):
    """Parse a group expression into a small syntax tree."""
    return _Parser(text).parse()
