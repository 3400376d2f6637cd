"""Test coloring, duality pairs and their certificates."""

import pytest

from perfectsolve.color import (
    clique_incidence_rank, color, coloring_violations, duality_violations, omega_and_max_clique,
    robust_solve, stable_hitting_cliques, verify_imperfection
)
from perfectsolve.decompose import verify_not_in_class
from perfectsolve.errors import PreconditionError
from perfectsolve.generator import generate_many
from perfectsolve.models import (
    ColoringResult, DualityPair, GeneratorSpec, ImperfectionCertificate, NotInClassCertificate
)
from perfectsolve.oracles import chi_bf, omega_bf
from perfectsolve.trigraph import Trigraph, complement


class TestOmega:
    """Test cliques through the complement."""

    def test_complete_graph(self, k4):
        clique, omega = omega_and_max_clique(k4)
        assert omega == 4
        assert sorted(clique) == [0, 1, 2, 3]

    def test_zero_weights_are_skipped(self, k4):
        clique, omega = omega_and_max_clique(k4, [1, 0, 1, 0])
        assert omega == 2
        assert sorted(clique) == [0, 2]

    def test_stable_set_hits_cliques(self, c6):
        chosen, y = stable_hitting_cliques(c6, [[0, 1], [2, 3], [4, 5]])
        assert c6.is_strong_stable(chosen)
        assert sum(y[v] for v in chosen) == 3


class TestColor:
    """Test optimal coloring."""

    def test_even_hole(self, c6):
        result = color(c6)
        assert isinstance(result, ColoringResult)
        assert result.num_colors == 2
        assert coloring_violations(c6, result) == []

    def test_complete_graph(self, k4):
        result = color(k4)
        assert result.num_colors == 4
        assert coloring_violations(k4, result) == []
        assert len(result.rounds) == 4

    def test_prism(self, c6):
        result = color(complement(c6))
        assert result.num_colors == 3
        assert coloring_violations(complement(c6), result) == []

    def test_clique_ranks_are_full(self, c6, k4):
        """Test that each new clique raises the incidence rank by one."""
        for g in (c6, k4, complement(c6)):
            for round_ in color(g).rounds:
                assert round_.clique_ranks == list(range(1, len(round_.cliques) + 1))

    def test_petersen_gets_certificate(self, petersen):
        result = color(petersen)
        assert not isinstance(result, ColoringResult)
        if isinstance(result, NotInClassCertificate):
            assert verify_not_in_class(result) == []
        else:
            assert verify_imperfection(petersen, result) == []

    def test_rejects_trigraph(self):
        with pytest.raises(PreconditionError):
            color(Trigraph.from_edges(2, switchable=[(0, 1)]))

    def test_violations_of_bad_coloring(self, c6):
        bad = ColoringResult(
            color_of=[0] * 6, num_colors=1, omega=2, max_clique=[0, 1], clique_cover=[list(range(6))]
        )
        problems = coloring_violations(c6, bad)
        assert any("monochromatic" in p for p in problems)


class TestImperfection:
    """Test the imperfection certificate checker."""

    def test_too_few_cliques(self, c5):
        certificate = ImperfectionCertificate(omega=2, cliques=[[0, 1], [1, 2]])
        assert verify_imperfection(c5, certificate)

    def test_wrong_clique(self, c5):
        cliques = [[0, 2]] * 6
        problems = verify_imperfection(c5, ImperfectionCertificate(omega=2, cliques=cliques))
        assert any("not a clique" in p for p in problems)


class TestRank:
    """Test the clique incidence rank."""

    def test_independent_cliques(self):
        assert clique_incidence_rank([[0, 1], [1, 2], [0, 2]], 3) == 3

    def test_dependent_cliques(self):
        """Test that the four edges of C4 have rank 3."""
        assert clique_incidence_rank([[0, 1], [2, 3], [0, 2], [1, 3]], 4) == 3

    def test_single_clique(self):
        assert clique_incidence_rank([[0, 1, 2, 3]], 4) == 1


class TestRobust:
    """Test the robust stable set / clique cover algorithm."""

    def test_even_hole(self, c6):
        result = robust_solve(c6)
        assert result.solved
        assert len(result.duality.stable_set) == 3
        assert len(result.duality.cliques) == 3
        assert duality_violations(c6, result.duality) == []

    def test_five_hole(self, c5):
        result = robust_solve(c5)
        assert not result.solved
        assert result.certificate is not None

    def test_size_mismatch_gets_certificate(self, c6, monkeypatch):
        monkeypatch.setattr("perfectsolve.color.duality_violations", lambda g, pair: ["sizes differ"])
        result = robust_solve(c6)
        assert not result.solved
        assert result.duality is None
        assert isinstance(result.certificate, NotInClassCertificate)
        assert result.certificate.leaf.n == 6
        assert "differ" in result.certificate.reason

    def test_duality_violations(self, c6):
        pair = DualityPair(stable_set=[0, 1], cliques=[[0, 1], [2, 3], [4, 5]])
        problems = duality_violations(c6, pair)
        assert "stable set is not stable" in problems
        assert any("against" in p for p in problems)


GRAPH_SPECS = [
    GeneratorSpec(size=12, recipe=["bipartite", "line"]),
    GeneratorSpec(size=12, recipe=["path", "path", "bipartite"]),
    GeneratorSpec(size=10, recipe=["line", "bipartite"], glue="complement-two-join"),
]


class TestGeneratedGraphs:
    """Test coloring against the oracles on seeded generated graphs."""

    @pytest.mark.parametrize("spec", GRAPH_SPECS, ids=lambda s: "-".join(s.recipe) + f"-{s.glue}")
    def test_color_matches_oracles(self, spec):
        for current, g in generate_many(spec, 6):
            assert g.is_graph
            result = color(g)
            if isinstance(result, NotInClassCertificate):
                assert verify_not_in_class(result) == [], current
                continue
            assert isinstance(result, ColoringResult), current
            assert coloring_violations(g, result) == [], current
            omega = omega_bf(g.with_weights([1] * g.n)).value
            assert result.num_colors == chi_bf(g) == omega, current
            for round_ in result.rounds:
                assert round_.clique_ranks == list(range(1, len(round_.cliques) + 1)), current
