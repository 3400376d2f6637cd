"""Test Perfect Solve CLI functionality."""

import json
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from perfectsolve.cli import cli
from perfectsolve.formats import emit_tri
from perfectsolve.trigraph import Trigraph

from .conftest import cycle


@pytest.fixture
def write_instance(tmp_path):
    """Write a trigraph to a .tri file and return its path."""
    def _write(t: Trigraph, name: str) -> str:
        target = tmp_path / name
        target.write_text(emit_tri(t))
        return str(target)
    return _write


class TestCLI:
    """Test CLI interface."""

    def setup_method(self):
        """Set up test fixtures."""
        self.runner = CliRunner()

    def test_cli_config_command(self, config_file):
        """Test config command."""
        result = self.runner.invoke(cli, ['--config', config_file, 'config'])

        assert result.exit_code == 0
        assert "Current Configuration" in result.output
        assert "bf_cap: 10" in result.output
        assert "cache_results: True" in result.output

    def test_cli_config_error(self):
        """Test config command with error."""
        with patch('perfectsolve.cli.PerfectSolver') as mock_solver_class:
            mock_solver_class.side_effect = Exception("Config error")

            result = self.runner.invoke(cli, ['config'])

            assert result.exit_code == 0
            assert "Error loading configuration" in result.output

    def test_cli_help(self):
        """Test CLI help."""
        result = self.runner.invoke(cli, ['--help'])

        assert result.exit_code == 0
        assert "Perfect Solve" in result.output
        for command in ("alpha", "color", "basic", "find-2join", "find-end", "gen", "oracle", "check"):
            assert command in result.output


class TestAlphaCommand:
    """Test the alpha command."""

    def setup_method(self):
        self.runner = CliRunner()

    def test_even_hole(self, c8_file):
        result = self.runner.invoke(cli, ['alpha', c8_file])

        assert result.exit_code == 0
        assert "alpha = 4" in result.output

    def test_json_output(self, c8_file):
        result = self.runner.invoke(cli, ['alpha', c8_file, '--json'])

        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["solved"] is True
        assert data["alpha"] == 4
        assert len(data["stable_set"]) == 4

    def test_certificate_exit_code(self, c5_file):
        """Test that an instance outside the class exits with code 2."""
        result = self.runner.invoke(cli, ['alpha', c5_file, '--emit-certificate'])

        assert result.exit_code == 2
        assert "not in class" in result.output
        assert '"kind": "not-in-class"' in result.output

    def test_missing_file(self, tmp_path):
        result = self.runner.invoke(cli, ['alpha', str(tmp_path / "absent.tri")])

        assert result.exit_code == 1
        assert "cannot read" in result.output

    def test_parse_error(self, tmp_path):
        bad = tmp_path / "bad.tri"
        bad.write_text("p tri 2\ne 1 3\n")

        result = self.runner.invoke(cli, ['alpha', str(bad)])

        assert result.exit_code == 1
        assert "line 2" in result.output


class TestStructureCommands:
    """Test basic, find-2join and find-end."""

    def setup_method(self):
        self.runner = CliRunner()

    def test_basic(self, write_instance):
        result = self.runner.invoke(cli, ['basic', write_instance(cycle(4), "c4.tri")])

        assert result.exit_code == 0
        assert "🧩 bipartite" in result.output
        assert "🧩 doubled" in result.output

    def test_basic_json(self, c5_file):
        result = self.runner.invoke(cli, ['basic', c5_file, '--json'])

        assert result.exit_code == 0
        assert json.loads(result.output) == []

    def test_find_2join(self, c8_file):
        result = self.runner.invoke(cli, ['find-2join', c8_file])

        assert result.exit_code == 0
        assert "proper odd 2-join" in result.output
        assert "X1: A={1} B={4} C={2, 3}" in result.output

    def test_find_complement_2join(self, c8_file):
        result = self.runner.invoke(cli, ['find-2join', c8_file, '--complement'])

        assert result.exit_code == 0
        assert "no proper 2-join found" in result.output

    def test_find_end_json(self, c8_file):
        result = self.runner.invoke(cli, ['find-end', c8_file, '--json'])

        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["side_map"] == [0, 1, 2, 3]
        assert data["markers"] == [4, 5]
        assert data["block"]["n"] == 6


class TestColorCommand:
    """Test the color command."""

    def setup_method(self):
        self.runner = CliRunner()

    def test_even_hole(self, write_instance):
        result = self.runner.invoke(cli, ['color', write_instance(cycle(6), "c6.tri")])

        assert result.exit_code == 0
        assert "2 colors (omega = 2)" in result.output

    def test_robust(self, write_instance):
        result = self.runner.invoke(cli, ['color', write_instance(cycle(6), "c6.tri"), '--robust'])

        assert result.exit_code == 0
        assert "3 covering cliques" in result.output

    def test_five_hole(self, c5_file):
        result = self.runner.invoke(cli, ['color', c5_file])

        assert result.exit_code == 2

    def test_rejects_trigraph(self, write_instance):
        t = Trigraph.from_edges(3, strong=[(0, 1)], switchable=[(1, 2)])
        result = self.runner.invoke(cli, ['color', write_instance(t, "tri.tri")])

        assert result.exit_code == 1
        assert "switchable pairs" in result.output


class TestGenAndOracle:
    """Test gen and oracle."""

    def setup_method(self):
        self.runner = CliRunner()

    def test_gen_to_stdout(self):
        result = self.runner.invoke(
            cli, ['gen', '--n', '8', '-r', 'path', '-r', 'path', '--parity', 'odd']
        )

        assert result.exit_code == 0
        assert "p tri 8" in result.output
        assert "e 1 5" in result.output

    def test_gen_to_directory(self, tmp_path):
        out = tmp_path / "generated"
        result = self.runner.invoke(cli, ['gen', '--count', '2', '--seed', '3', '--out', str(out)])

        assert result.exit_code == 0
        assert sorted(p.name for p in out.iterdir()) == ["gen_00003.tri", "gen_00004.tri"]

    def test_oracle_json(self, c5_file):
        result = self.runner.invoke(cli, ['oracle', c5_file, '--json'])

        assert result.exit_code == 0
        data = json.loads(result.output)
        assert (data["n"], data["alpha"], data["omega"], data["chi"]) == (5, 2, 2, 3)

    def test_oracle_cap(self, c5_file):
        result = self.runner.invoke(cli, ['oracle', c5_file, '--bf-cap', '3'])

        assert result.exit_code == 1
        assert "exceeds cap" in result.output


class TestCheckCommand:
    """Test corpus checks from the CLI."""

    def setup_method(self):
        self.runner = CliRunner()

    def test_clean_corpus(self, tmp_path, write_instance, c8, c5):
        write_instance(c8, "c8.tri")
        write_instance(c5, "c5.tri")

        result = self.runner.invoke(cli, ['check', str(tmp_path)])

        assert result.exit_code == 0
        assert "2 instances: 0 mismatches, 1 certificates, 0 errors" in result.output

    def test_broken_file(self, tmp_path):
        (tmp_path / "bad.tri").write_text("p tri 1\ne 1 2\n")

        result = self.runner.invoke(cli, ['check', str(tmp_path), '--json'])

        assert result.exit_code == 1
        assert json.loads(result.output)["errors"] == 1

    def test_empty_directory(self, tmp_path):
        result = self.runner.invoke(cli, ['check', str(tmp_path)])

        assert result.exit_code == 1
        assert "no instances" in result.output
