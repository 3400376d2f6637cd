"""Test basic class recognition and the per-class alpha algorithms."""

import networkx as nx
import numpy as np
import pytest

from perfectsolve.basic import (
    alpha_basic, alpha_bipartite, alpha_complement_bipartite, alpha_complement_line,
    alpha_doubled, alpha_line, good_partition, recognize_all, recognize_basic,
    validate_basic_report
)
from perfectsolve.errors import PreconditionError
from perfectsolve.generator import doubled_instance
from perfectsolve.models import BasicClass
from perfectsolve.oracles import alpha_bf
from perfectsolve.trigraph import Trigraph, complement

from .conftest import complete, cycle, path


class TestRecognition:
    """Test recognize_basic and recognize_all."""

    def test_four_hole(self, c4):
        """Test that C4 is bipartite first and also doubled."""
        report = recognize_basic(c4)
        assert report.class_name == BasicClass.BIPARTITE
        assert sorted([report.witness.left, report.witness.right]) == [[0, 2], [1, 3]]
        classes = {r.class_name for r in recognize_all(c4)}
        assert {BasicClass.BIPARTITE, BasicClass.DOUBLED} <= classes

    def test_every_witness_validates(self, c4, c6, k4, k33):
        """Test each emitted witness against the class definition."""
        for t in (c4, c6, k4, k33, complement(c6), path(5)):
            for report in recognize_all(t):
                assert validate_basic_report(t, report) == []

    def test_five_hole_is_not_basic(self, c5):
        assert recognize_basic(c5) is None
        assert recognize_all(c5) == []

    def test_petersen_is_not_basic(self, petersen):
        assert recognize_basic(petersen) is None

    def test_complement_bipartite(self, c6):
        report = recognize_basic(complement(c6))
        assert report.class_name == BasicClass.COMPLEMENT_BIPARTITE

    def test_line_graph(self):
        """Test a triangle with pendants at two corners, the line graph of a tree."""
        t = Trigraph.from_edges(5, strong=[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
        report = recognize_basic(t)
        assert report.class_name == BasicClass.LINE
        assert validate_basic_report(t, report) == []

    def test_semirealization_stays_basic(self):
        """Test that fixing a switchable pair of a basic trigraph keeps it basic."""
        t = Trigraph.from_edges(8, strong=[(i, i + 1) for i in range(6)], switchable=[(7, 0)])
        assert recognize_basic(t) is not None
        assert recognize_basic(t.realize({(0, 7): 1})) is not None


class TestAlphaBipartite:
    """Test the minimum-cut stable set."""

    def test_unit_path(self):
        assert alpha_bipartite(nx.path_graph(4), {0: 1, 1: 1, 2: 1, 3: 1}).value == 2

    def test_heavy_ends(self):
        result = alpha_bipartite(nx.path_graph(4), {0: 3, 1: 1, 2: 1, 3: 3})
        assert result.value == 6
        assert result.vertices == [0, 3]

    def test_heavy_inner(self):
        result = alpha_bipartite(nx.path_graph(4), {0: 2, 1: 5, 2: 1, 3: 1})
        assert result.value == 6
        assert result.vertices == [1, 3]

    def test_rejects_odd_cycle(self):
        with pytest.raises(PreconditionError):
            alpha_bipartite(nx.cycle_graph(5))


class TestAlphaOtherClasses:
    """Test the complement-bipartite, line, complement-line and doubled algorithms."""

    def test_complete_graph(self, k4):
        assert alpha_complement_bipartite(k4).value == 1
        assert alpha_complement_bipartite(k4.with_weights([5, 1, 1, 1])).value == 5

    def test_complement_of_path(self):
        assert alpha_complement_bipartite(complement(path(4))).value == 2

    def test_line(self, c6):
        assert alpha_line(c6).value == 3
        assert alpha_line(path(3)).value == 2
        assert alpha_line(Trigraph.from_edges(1, weights=[7])).value == 7

    def test_complement_line(self):
        assert alpha_complement_line(complement(path(3))).value == 2
        assert alpha_complement_line(complement(complete(3))).value == 3
        assert alpha_complement_line(Trigraph.from_edges(1, weights=[4])).value == 4

    def test_doubled(self):
        """Test X = {0, 1} with an edge and Y = {2} seeing vertex 0 only."""
        t = Trigraph.from_edges(3, strong=[(0, 1), (0, 2)])
        result = alpha_doubled(t, ([0, 1], [2]))
        assert result.value == 2
        assert result.vertices == [1, 2]

    def test_doubled_rejects_bad_partition(self, c5):
        with pytest.raises(PreconditionError):
            alpha_doubled(c5, ([0, 1, 3], [2, 4]))

    def test_good_partition_of_four_hole(self, c4):
        x, y = good_partition(c4)
        assert len(x) == 2 and len(y) == 2

    def test_generated_doubled_instances(self):
        """Test recognition and alpha on random doubled trigraphs."""
        for seed in range(3):
            t = doubled_instance(np.random.default_rng(seed), 10, switchable_rate=0.3)
            reports = recognize_all(t)
            assert BasicClass.DOUBLED in {r.class_name for r in reports}
            doubled = next(r for r in reports if r.class_name == BasicClass.DOUBLED)
            assert alpha_basic(t, doubled).value == alpha_bf(t).value


class TestAlphaBasic:
    """Test alpha_basic against brute force."""

    @pytest.mark.parametrize("t", [
        cycle(4), cycle(6), cycle(8), complete(5), path(7), complement(cycle(6))
    ])
    def test_matches_brute_force(self, t):
        assert alpha_basic(t).value == alpha_bf(t).value

    def test_weighted(self, c6):
        weighted = c6.with_weights([3, 1, 4, 1, 5, 9])
        result = alpha_basic(weighted)
        assert result.value == alpha_bf(weighted).value
        assert weighted.is_strong_stable(result.vertices)

    def test_not_basic(self, c5):
        with pytest.raises(PreconditionError):
            alpha_basic(c5)
