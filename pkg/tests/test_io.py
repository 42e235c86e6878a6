"""Document parser and emitter."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra_gen import corpus_paths, random_leibniz
from leibalg.algebra import LeibnizAlgebra
from leibalg.errors import DuplicateEntry, IndexOutOfRange, ParseError
from leibalg.families import build_example_4_9, build_truncated_4_10
from leibalg.io import emit_algebra, parse_algebra

G49_DOC = """\
algebra example_4_9
dim 6
[e2,e2] = e1
[e3,e3] = e5
[e3,e4] = e6
[e4,e3] = e5
[e5,e3] = e6
"""


def doc(*lines, dim=3):
    return "\n".join(["algebra t", f"dim {dim}", *lines]) + "\n"


class TestParse:
    def test_example_4_9(self):
        g = parse_algebra(G49_DOC)
        assert g == build_example_4_9() and g.name == "example_4_9"

    def test_rational_combination(self):
        g = parse_algebra(doc("[e1,e2] = 1/2 e1 - e3"))
        assert g.table[0][1] == (Fraction(1, 2), 0, -1)

    def test_leading_minus_and_spacing(self):
        g = parse_algebra(doc("[ e1 , e2 ]=-2e1+e2 - 3/4 e3"))
        assert g.table[0][1] == (-2, 1, Fraction(-3, 4))

    def test_explicit_zero(self):
        assert parse_algebra(doc("[e1,e1] = 0")).is_abelian()

    def test_repeated_symbol_accumulates(self):
        assert parse_algebra(doc("[e1,e1] = e2 + e2")).table[0][0] == (0, 2, 0)

    def test_comments_crlf_and_bom(self):
        text = "﻿# header comment\r\nalgebra t  # name\r\ndim 2\r\n\r\n[e2,e2] = e1 # square\r\n"
        assert parse_algebra(text).table[1][1] == (1, 0)

    def test_unlisted_products_are_zero(self):
        g = parse_algebra(doc())
        assert g.dim == 3 and g.is_abelian()


class TestErrors:
    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange) as info:
            parse_algebra(doc("[e1,e7] = e1", dim=6))
        assert (info.value.line, info.value.column) == (3, 5)

    def test_rhs_out_of_range(self):
        with pytest.raises(IndexOutOfRange) as info:
            parse_algebra(doc("[e1,e2] = e1 + e4"))
        assert info.value.column == 16

    def test_duplicate(self):
        with pytest.raises(DuplicateEntry) as info:
            parse_algebra(doc("[e1,e2] = e1", "  [e1,e2] = e3"))
        assert (info.value.line, info.value.column) == (4, 3)

    @pytest.mark.parametrize(
        "text, line, column",
        [
            ("", 1, 1),
            ("dim 3\n", 1, 1),
            ("algebra t\n", 1, 1),
            ("algebra t\ndim x\n", 2, 5),
            ("algebra t\ndim 3 4\n", 2, 1),
            (doc("e1,e2] = e1"), 3, 1),
            (doc("[e1 e2] = e1"), 3, 5),
            (doc("[e1,e2] e1"), 3, 9),
            (doc("[e1,e2] ="), 3, 10),
            (doc("[e1,e2] = 1/0 e1"), 3, 12),
            (doc("[e1,e2] = e"), 3, 11),
            (doc("[e1,e2] = e1 e2"), 3, 14),
            (doc("[e1,e2] = 2"), 3, 12),
            (doc("[e1,e2] = x1"), 3, 11),
            (doc("[e0,e1] = e1"), 3, 2),
        ],
    )
    def test_positional(self, text, line, column):
        with pytest.raises(ParseError) as info:
            parse_algebra(text)
        assert (info.value.line, info.value.column) == (line, column)
        assert str(info.value).startswith(f"line {line}, column {column}:")

    @settings(max_examples=300)
    @given(st.text(alphabet="[]e0123456789,=+-/ #\nalgebradim xyz", max_size=80))
    def test_garbage_never_panics(self, text):
        try:
            parse_algebra(text)
        except ParseError as exc:
            assert exc.line >= 1 and exc.column >= 1


class TestEmit:
    def test_format(self):
        text = emit_algebra(parse_algebra(doc("[e1,e2] = 1/2 e1 - e3", "[e2,e1] = -e2")))
        assert text == "algebra t\ndim 3\n[e1,e2] = 1/2 e1 - e3\n[e2,e1] = -e2\n"

    def test_unnamed(self):
        assert emit_algebra(LeibnizAlgebra.from_products(1, {})).startswith("algebra unnamed\n")

    def test_name_whitespace_is_joined(self):
        assert emit_algebra(LeibnizAlgebra.from_products(1, {}, "my algebra")).startswith("algebra my_algebra\n")

    @pytest.mark.parametrize("path", corpus_paths(), ids=lambda p: p.rsplit("/", 1)[-1])
    def test_corpus_round_trip(self, path):
        with open(path, encoding="utf-8", newline="") as fh:
            g = parse_algebra(fh.read())
        again = parse_algebra(emit_algebra(g))
        assert again == g and again.name == g.name

    def test_family_round_trip(self):
        g = build_truncated_4_10(12)
        assert parse_algebra(emit_algebra(g)) == g

    @settings(max_examples=40, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_random_round_trip(self, rng):
        g = random_leibniz(rng)
        assert parse_algebra(emit_algebra(g)) == g
