"""Test configuration and fixtures."""

import pytest
import tempfile
from itertools import combinations

from perfectsolve.formats import emit_tri
from perfectsolve.models import SolverConfig
from perfectsolve.trigraph import Trigraph


def cycle(n: int) -> Trigraph:
    """Hole on vertices 0..n-1, all pairs strong."""
    return Trigraph.from_edges(n, strong=[(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Trigraph:
    return Trigraph.from_edges(n, strong=list(combinations(range(n), 2)))


def path(n: int) -> Trigraph:
    return Trigraph.from_edges(n, strong=[(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def c8():
    return cycle(8)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def k33():
    """Complete bipartite graph with sides {0, 1, 2} and {3, 4, 5}."""
    return Trigraph.from_edges(6, strong=[(u, v) for u in range(3) for v in range(3, 6)])


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Trigraph.from_edges(10, strong=outer + spokes + inner)


@pytest.fixture
def diamond():
    """Two triangles sharing the edge 01."""
    return Trigraph.from_edges(4, strong=[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


@pytest.fixture
def sample_config():
    """Sample configuration for testing."""
    return SolverConfig(
        max_vertices=512,
        berge_cap=12,
        bf_cap=10,
        max_concurrent=2,
        settings={"cache_results": True}
    )


@pytest.fixture
def config_file(sample_config):
    """Temporary config file for testing."""
    with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
        f.write(sample_config.model_dump_json(indent=2))
        return f.name


@pytest.fixture
def c8_file(tmp_path, c8):
    target = tmp_path / "c8.tri"
    target.write_text(emit_tri(c8, comment="even hole"))
    return str(target)


@pytest.fixture
def c5_file(tmp_path, c5):
    target = tmp_path / "c5.tri"
    target.write_text(emit_tri(c5))
    return str(target)


@pytest.fixture
def pair_trigraph():
    """Homogeneous pair A = {0, 1}, B = {2, 3} with C = {4}, D = {5}, E = {6}, F = {7}."""
    return Trigraph.from_edges(8, strong=[
        (0, 2), (1, 3), (4, 0), (4, 1), (5, 2), (5, 3),
        (6, 0), (6, 1), (6, 2), (6, 3), (7, 4), (7, 5)
    ])
