"""Test the trigraph and DIMACS text formats."""

from pathlib import Path

import pytest

from perfectsolve.errors import ParseError, PreconditionError
from perfectsolve.formats import (
    emit_dimacs, emit_tri, guess_format, parse, parse_dimacs, parse_tri, read_trigraph,
    write_trigraph
)
from perfectsolve.trigraph import STRONG_ANTIEDGE, STRONG_EDGE, SWITCHABLE, Trigraph

SAMPLE = """c sample
p tri 3
w 2 5
e 1 2
s 2 3
"""


class TestTriFormat:
    """Test parse_tri and emit_tri."""

    def test_parse(self):
        t = parse_tri(SAMPLE)
        assert t.n == 3
        assert t.weights == (1, 5, 1)
        assert t.value(0, 1) == STRONG_EDGE
        assert t.value(1, 2) == SWITCHABLE
        assert t.value(0, 2) == STRONG_ANTIEDGE

    def test_emit_is_normalized(self):
        """Test that comments are dropped and weight-1 lines omitted."""
        assert emit_tri(parse_tri(SAMPLE)) == "p tri 3\nw 2 5\ne 1 2\ns 2 3\n"

    def test_emit_with_comment(self, c4):
        assert emit_tri(c4, comment="square").startswith("c square\np tri 4\n")

    def test_empty_trigraph(self):
        assert parse_tri("p tri 0\n").n == 0

    @pytest.mark.parametrize("text, line", [
        ("e 1 2\n", 1),
        ("p tri 2\ne 1 3\n", 2),
        ("p tri 2\ne 1 1\n", 2),
        ("p tri 2\ne 1 2\ns 2 1\n", 3),
        ("p tri 2\nw 1 -4\n", 2),
        ("p tri 2\nw 1 2\nw 1 3\n", 3),
        ("p tri 2\nx 1 2\n", 2),
        ("p tri 2\np tri 2\n", 2),
        ("p tri 2\ne 1 b\n", 2),
        ("p edge 2\n", 1),
    ])
    def test_malformed(self, text, line):
        with pytest.raises(ParseError) as exc_info:
            parse_tri(text)
        assert exc_info.value.line == line

    def test_missing_header(self):
        with pytest.raises(ParseError) as exc_info:
            parse_tri("c nothing here\n")
        assert exc_info.value.line is None


class TestDimacsFormat:
    """Test parse_dimacs and emit_dimacs."""

    def test_parse_merges_repeated_edges(self):
        t = parse_dimacs("c demo\np edge 4 3\ne 1 2\ne 2 3\ne 2 1\nn 4 7\n")
        assert t.strong_edges() == [(0, 1), (1, 2)]
        assert t.weights == (1, 1, 1, 7)
        assert t.is_graph

    def test_round_trip(self, c5):
        assert parse_dimacs(emit_dimacs(c5)) == c5

    def test_switchable_pairs_rejected(self):
        with pytest.raises(PreconditionError):
            emit_dimacs(Trigraph.from_edges(2, switchable=[(0, 1)]))

    def test_bad_header(self):
        with pytest.raises(ParseError):
            parse_dimacs("p tri 3\n")

    def test_parse_dispatch(self):
        assert parse("p edge 2 1\ne 1 2\n", "dimacs").strong_edges() == [(0, 1)]


class TestFiles:
    """Test reading and writing files."""

    def test_guess_format(self):
        assert guess_format(Path("graph.col")) == "dimacs"
        assert guess_format(Path("graph.DIMACS")) == "dimacs"
        assert guess_format(Path("graph.tri")) == "tri"

    def test_write_and_read(self, tmp_path, c8):
        for name in ("c8.tri", "c8.dimacs"):
            target = tmp_path / name
            write_trigraph(c8, target)
            assert read_trigraph(target) == c8

    def test_explicit_format(self, tmp_path):
        target = tmp_path / "edges.txt"
        target.write_text("p edge 3 1\ne 1 3\n")
        assert read_trigraph(target, "dimacs").strong_edges() == [(0, 2)]
