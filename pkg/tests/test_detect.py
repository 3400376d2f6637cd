"""Test 2-join, complement 2-join, homogeneous pair and end detection."""

import pytest

from perfectsolve.detect import (
    ForcingState, enumerate_quadruples, find_end, find_proper_2join, find_proper_complement_2join,
    forcing, forcing_homogeneous, homogeneous_pair_violations, is_compatible,
    proper_fragment_violations, verify_2join, weak_fragment_of, weak_fragment_violations
)
from perfectsolve.errors import PreconditionError
from perfectsolve.generator import generate_many
from perfectsolve.models import (
    FragmentKind, GeneratorSpec, HomogeneousPairSplit, Parity, ProperQuadruple, TwoJoinSplit
)
from perfectsolve.oracles import weak_fragments_bf
from perfectsolve.trigraph import SWITCHABLE, complement

EIGHT_HOLE_SPLIT = TwoJoinSplit(
    a1=[0], b1=[3], c1=[1, 2], a2=[7], b2=[4], c2=[5, 6], parity=Parity.ODD
)
SEED = ProperQuadruple(a1=0, b1=3, a2=7, b2=4)


class TestQuadruples:
    """Test proper 4-tuple enumeration."""

    def test_eight_hole(self, c8):
        assert SEED in enumerate_quadruples(c8)

    def test_clique_has_none(self, k4):
        assert enumerate_quadruples(k4) == []


class TestForcing:
    """Test the forcing procedure."""

    def test_eight_hole_side(self, c8):
        """Test that the seed {0, 1, 2, 3} grows into the 2-join side it already is."""
        split = forcing(c8, SEED, {0, 1, 2, 3})
        assert split.x == [0, 1, 2, 3]
        assert split.kind == FragmentKind.TWO_JOIN
        assert (split.a1, split.b1, split.c1) == ([0], [3], [1, 2])
        assert is_compatible(split, SEED)
        assert is_compatible(split, ProperQuadruple(a1=3, b1=0, a2=4, b2=7))

    def test_pair_reads(self, c8):
        """Test that exploring vertices 1 and 2 reads two rows of the matrix."""
        state = ForcingState(c8, SEED, {0, 1, 2, 3})
        assert state.run().x == [0, 1, 2, 3]
        assert state.pair_reads == 2 * c8.n

    def test_rejects_improper_seed(self, c8):
        with pytest.raises(PreconditionError):
            forcing(c8, ProperQuadruple(a1=0, b1=3, a2=6, b2=4), {0, 1, 3})

    def test_rejects_seed_without_a1(self, c8):
        with pytest.raises(PreconditionError):
            forcing(c8, SEED, {1, 2, 3})


class TestWeakFragments:
    """Test the direct weak-fragment check."""

    def test_eight_hole_side(self, c8):
        split = weak_fragment_of(c8, [0, 1, 2, 3])
        assert split is not None
        assert split.kind == FragmentKind.TWO_JOIN
        assert split.rest == [4, 5, 6, 7]

    def test_too_small(self, c8):
        assert weak_fragment_of(c8, [0, 1, 2]) is None

    def test_scattered_set(self, c8):
        assert weak_fragment_of(c8, [0, 2, 4, 6]) is None


class TestTwoJoins:
    """Test find_proper_2join, its complement variant and verify_2join."""

    def test_eight_hole(self, c8):
        split = find_proper_2join(c8)
        assert split == EIGHT_HOLE_SPLIT
        assert verify_2join(c8, split, require_class_invariants=True) == []

    def test_eight_hole_has_no_complement_2join(self, c8):
        assert find_proper_complement_2join(c8) is None

    def test_complement_of_eight_hole(self, c8):
        """Test that the complement has a complement 2-join and no 2-join."""
        flipped = complement(c8)
        assert find_proper_2join(flipped) is None
        split = find_proper_complement_2join(flipped)
        assert split.complemented
        assert split.x1 == [0, 1, 2, 3]
        assert verify_2join(flipped, split) == []

    def test_small_trigraphs(self, c6, k33):
        assert find_proper_2join(c6) is None
        assert find_proper_2join(k33) is None

    def test_wrong_parity_claim(self, c8):
        split = EIGHT_HOLE_SPLIT.model_copy(update={"parity": Parity.EVEN})
        problems = verify_2join(c8, split)
        assert any("parity" in p for p in problems)

    def test_not_a_partition(self, c8):
        split = EIGHT_HOLE_SPLIT.model_copy(update={"c2": [5]})
        assert verify_2join(c8, split) == ["the six sets do not partition the vertices"]

    def test_wrong_adjacency(self, c8):
        split = EIGHT_HOLE_SPLIT.model_copy(update={"a2": [4], "b2": [7]})
        assert verify_2join(c8, split)


class TestHomogeneousPairs:
    """Test homogeneous pair checks and forcing."""

    def test_valid_pair(self, pair_trigraph):
        split = HomogeneousPairSplit(a=[0, 1], b=[2, 3], c=[4], d=[5], e=[6], f=[7])
        assert homogeneous_pair_violations(pair_trigraph, split) == []

    def test_forcing_finds_pair(self, pair_trigraph):
        """Test that vertex 3 is pulled in because it is mixed on A."""
        split = forcing_homogeneous(pair_trigraph, (0, 2, 4), {0, 1, 2})
        assert split is not None
        assert (split.a, split.b) == ([0, 1], [2, 3])
        assert (split.c, split.d, split.e, split.f) == ([4], [5], [6], [7])

    def test_forcing_precondition(self, pair_trigraph):
        with pytest.raises(PreconditionError):
            forcing_homogeneous(pair_trigraph, (0, 2, 5), {0, 1, 2})

    def test_bad_pair(self, pair_trigraph):
        split = HomogeneousPairSplit(a=[0], b=[1, 2, 3], c=[4], d=[5], e=[6], f=[7])
        assert homogeneous_pair_violations(pair_trigraph, split)


class TestFindEnd:
    """Test minimum proper fragments."""

    def test_eight_hole(self, c8):
        """Test the end of C8 and its odd block."""
        fragment, block = find_end(c8)
        assert fragment.vertices == [0, 1, 2, 3]
        assert proper_fragment_violations(c8, fragment) == []
        assert block.side_map == [0, 1, 2, 3]
        assert block.size == 6
        assert (block.roles.a, block.roles.b) == (4, 5)
        assert block.trigraph.value(4, 5) == SWITCHABLE
        assert block.trigraph.weights == (1, 1, 1, 1, 0, 0)
        attached = {block.trigraph.strong_neighbors(4), block.trigraph.strong_neighbors(5)}
        assert attached == {frozenset({0}), frozenset({3})}

    def test_small_trigraph(self, c6):
        assert find_end(c6) is None


FORCING_SPECS = [
    GeneratorSpec(size=8, recipe=["bipartite", "line"]),
    GeneratorSpec(size=10, recipe=["bipartite", "bipartite"], switchable_rate=0.5),
    GeneratorSpec(size=10, recipe=["path", "line"], glue="complement-two-join"),
    GeneratorSpec(size=10, recipe=["doubled"]),
]


def _assert_forcing_is_minimal(t, fragments, limit=6):
    for z in enumerate_quadruples(t)[:limit]:
        for u in range(t.n):
            if u in (z.a1, z.b1, z.a2, z.b2):
                continue
            r0 = {z.a1, z.b1, u}
            split = forcing(t, z, r0)
            if split is None:
                continue
            assert weak_fragment_violations(t, split) == []
            assert is_compatible(split, z)
            assert r0 <= set(split.x)
            for fragment in fragments:
                if is_compatible(fragment, z) and r0 <= set(fragment.x):
                    assert set(split.x) <= set(fragment.x), (z, u, fragment.x)


class TestForcingMinimality:
    """Test forcing against every weak fragment found by brute force."""

    def test_eight_hole(self, c8):
        _assert_forcing_is_minimal(c8, weak_fragments_bf(c8), limit=None)

    @pytest.mark.parametrize("spec", FORCING_SPECS, ids=lambda s: f"{s.size}-" + "-".join(s.recipe))
    def test_generated(self, spec):
        for _, t in generate_many(spec, 4):
            _assert_forcing_is_minimal(t, weak_fragments_bf(t))
