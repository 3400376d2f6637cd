"""Test the exhaustive reference oracles."""

import pytest

from perfectsolve.errors import PreconditionError, SizeCapError
from perfectsolve.oracles import (
    BF_CAP_ENV, alpha_bf, bf_cap, chi_bf, has_bsp_bf, omega_bf, weak_fragments_bf
)
from perfectsolve.trigraph import Trigraph

from .conftest import cycle


class TestCap:
    """Test the oracle size cap."""

    def test_default(self, monkeypatch):
        monkeypatch.delenv(BF_CAP_ENV, raising=False)
        assert bf_cap() == 14
        assert bf_cap(3) == 3

    def test_environment(self, monkeypatch, c8):
        monkeypatch.setenv(BF_CAP_ENV, "5")
        assert bf_cap() == 5
        with pytest.raises(SizeCapError):
            alpha_bf(c8)

    def test_override(self, c8):
        with pytest.raises(SizeCapError):
            omega_bf(c8, cap=7)


class TestStableSetsAndCliques:
    """Test alpha_bf and omega_bf."""

    def test_five_hole(self, c5):
        assert alpha_bf(c5).value == 2
        assert omega_bf(c5).value == 2

    def test_complete_graph(self, k4):
        assert omega_bf(k4).value == 4
        assert alpha_bf(k4).value == 1

    def test_weighted(self, c6):
        result = alpha_bf(c6.with_weights([1, 9, 1, 1, 9, 1]))
        assert result.value == 18
        assert result.vertices == [1, 4]

    def test_switchable_pairs_block_stable_sets(self):
        t = Trigraph.from_edges(2, switchable=[(0, 1)])
        assert alpha_bf(t).value == 1
        assert omega_bf(t).value == 1


class TestChromaticNumber:
    """Test chi_bf."""

    def test_values(self, c5, c6, k4, petersen):
        assert chi_bf(c5) == 3
        assert chi_bf(c6) == 2
        assert chi_bf(k4) == 4
        assert chi_bf(petersen) == 3

    def test_rejects_trigraph(self):
        with pytest.raises(PreconditionError):
            chi_bf(Trigraph.from_edges(2, switchable=[(0, 1)]))


class TestSkewPartitions:
    """Test the balanced skew-partition search."""

    def test_holes_have_none(self, c6, c8):
        assert not has_bsp_bf(c6)
        assert not has_bsp_bf(c8)

    def test_diamond(self, diamond):
        """Test B = {0, 1} against the two tips A = {2, 3}."""
        assert has_bsp_bf(diamond)

    def test_weak_fragments(self, c8):
        found = weak_fragments_bf(c8)
        assert [0, 1, 2, 3] in [split.x for split in found]
        assert all(len(split.x) == 4 for split in found)

    def test_long_hole_is_capped(self):
        with pytest.raises(SizeCapError):
            has_bsp_bf(cycle(16))
