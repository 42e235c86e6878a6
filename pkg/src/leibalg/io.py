"""Line-oriented text format for algebra presentations.

::

    algebra example_4_9
    dim 6
    # unlisted products are zero
    [e2,e2] = e1
    [e3,e4] = e6
    [e1,e2] = 1/2 e1 - e3

A combination is ``term (("+" | "-") term)*`` or ``0``, where a term is an
optional rational coefficient followed by a basis symbol ``eK``.  The first
term may carry a leading minus sign.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import LeibnizAlgebra
from .errors import DuplicateEntry, IndexOutOfRange, ParseError
from .exactla import ZERO


class _Cursor:
    def __init__(self, text: str, lineno: int):
        self.text = text
        self.pos = 0
        self.lineno = lineno

    def error(self, message: str, cls=ParseError, pos: int | None = None) -> ParseError:
        return cls(message, self.lineno, (self.pos if pos is None else pos) + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of line"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        num = self.integer()
        if self.peek() == "/":
            self.pos += 1
            slash = self.pos - 1
            den = self.integer()
            if den == 0:
                raise self.error("zero denominator", pos=slash)
            return Fraction(num, den)
        return Fraction(num)

    def basis(self, dim: int) -> int:
        """Parse ``eK`` and return the 0-based index."""
        if self.peek() != "e":
            found = self.peek() or "end of line"
            raise self.error(f"expected a basis symbol 'eK', found {found!r}")
        start = self.pos
        self.pos += 1
        if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
            raise self.error("basis symbol needs an index, as in 'e3'", pos=start)
        k = self.integer()
        if not 1 <= k <= dim:
            raise self.error(f"basis index e{k} outside 1..{dim}", IndexOutOfRange, pos=start)
        return k - 1


def _combination(cur: _Cursor, dim: int) -> list[Fraction]:
    vec = [ZERO] * dim
    sign = 1
    if cur.peek() == "-":
        cur.pos += 1
        sign = -1
    first = True
    while True:
        coeff = Fraction(1)
        if cur.peek().isdigit():
            coeff = cur.rational()
            if first and sign == 1 and coeff == 0 and cur.at_end():
                return vec
        k = cur.basis(dim)
        vec[k] += sign * coeff
        first = False
        nxt = cur.peek()
        if nxt == "":
            return vec
        if nxt not in "+-":
            raise cur.error(f"expected '+', '-' or end of line, found {nxt!r}")
        sign = 1 if nxt == "+" else -1
        cur.pos += 1


def parse_algebra(text: str) -> LeibnizAlgebra:
    if text.startswith("﻿"):
        text = text[1:]
    name = None
    dim = None
    products: dict[tuple[int, int], list] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        cur = _Cursor(line, lineno)
        if cur.at_end():
            continue
        if name is None:
            word = line.split()
            if word[0] != "algebra" or len(word) != 2:
                raise cur.error("expected header 'algebra NAME'")
            name = word[1]
            continue
        if dim is None:
            word = line.split()
            if word[0] != "dim" or len(word) != 2:
                raise cur.error("expected 'dim N'")
            cur.pos = line.index("dim") + 3
            dim = cur.integer()
            if not cur.at_end():
                raise cur.error("unexpected text after dimension")
            continue
        start = cur.pos if cur.peek() == "[" else None
        cur.expect("[")
        i = cur.basis(dim)
        cur.expect(",")
        j = cur.basis(dim)
        cur.expect("]")
        cur.expect("=")
        if cur.at_end():
            raise cur.error("missing right-hand side")
        vec = _combination(cur, dim)
        if (i, j) in products:
            raise cur.error(f"duplicate entry for [e{i + 1},e{j + 1}]", DuplicateEntry, pos=start)
        products[(i, j)] = vec
    if name is None:
        raise ParseError("empty document; expected header 'algebra NAME'", 1, 1)
    if dim is None:
        raise ParseError("missing 'dim N' line", len(text.splitlines()) or 1, 1)
    return LeibnizAlgebra.from_products(dim, products, name)


def _format_combination(vec) -> str:
    parts = []
    for k, c in enumerate(vec):
        if not c:
            continue
        mag = abs(c)
        body = f"e{k + 1}" if mag == 1 else f"{mag} e{k + 1}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def emit_algebra(g: LeibnizAlgebra) -> str:
    name = "_".join((g.name or "unnamed").split())
    lines = [f"algebra {name}", f"dim {g.dim}"]
    for i in range(g.dim):
        for j in range(g.dim):
            v = g.table[i][j]
            if any(v):
                lines.append(f"[e{i + 1},e{j + 1}] = {_format_combination(v)}")
    return "\n".join(lines) + "\n"
