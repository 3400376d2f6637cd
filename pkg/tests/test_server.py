"""Test MCP server helpers."""

import pytest

from perfectsolve import server
from perfectsolve.errors import ParseError


class TestServerHelpers:
    """Test the plain helpers behind the MCP tools."""

    def test_get_solver_is_shared(self, monkeypatch):
        monkeypatch.setattr(server, "solver", None)
        first = server.get_solver()
        assert server.get_solver() is first

    def test_parse_instance(self):
        t = server.parse_instance("p edge 3 2\ne 1 2\ne 2 3\n", "dimacs")
        assert t.strong_edges() == [(0, 1), (1, 2)]

    def test_parse_error(self):
        with pytest.raises(ParseError):
            server.parse_instance("e 1 2\n")
