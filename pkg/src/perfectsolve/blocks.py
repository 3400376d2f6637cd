"""Blocks of decomposition for 2-joins, complement 2-joins and homogeneous pairs.

A block is one side of a decomposition plus marker vertices that stand
for the other side. Marker vertices are appended after the side's own
vertices and carry weight 0.
"""

from typing import List, Literal, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from .errors import PreconditionError
from .models import (
    HomogeneousPairSplit, MarkerRoles, Parity, PreLabelKind, SwitchableComponent, TwoJoinSplit
)
from .trigraph import (
    STRONG_ANTIEDGE, STRONG_EDGE, SWITCHABLE, Trigraph, complement, switchable_components
)


class Block(BaseModel):
    """A block of decomposition with its marker roles and the map back to the original vertices."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    trigraph: Trigraph
    roles: MarkerRoles
    side_map: List[int]
    kind: Optional[PreLabelKind] = None

    @property
    def size(self) -> int:
        return self.trigraph.n

    @property
    def marker_component(self) -> SwitchableComponent:
        markers = set(self.roles.vertices)
        return next(c for c in switchable_components(self.trigraph) if markers <= set(c.vertices))

    def index_of(self, vertex: int) -> int:
        """Block index of an original vertex of the side."""
        return self.side_map.index(vertex)


def prelabel_kind(split: TwoJoinSplit) -> PreLabelKind:
    if split.parity == Parity.ODD:
        return PreLabelKind.COMPLEMENT_ODD if split.complemented else PreLabelKind.ODD
    if split.parity == Parity.EVEN:
        return PreLabelKind.COMPLEMENT_EVEN if split.complemented else PreLabelKind.EVEN
    raise PreconditionError("block construction needs a 2-join of known parity")


def _with_markers(
    t: Trigraph,
    side: Sequence[int],
    attachments: Sequence[Sequence[int]],
    marker_pairs: Sequence[tuple]
) -> Trigraph:
    """Induced subtrigraph on ``side`` plus one marker per attachment set.

    ``marker_pairs`` lists (i, j, value) adjacencies between markers; every
    marker pair not listed is a strong antiedge.
    """
    k = len(side)
    m = len(attachments)
    matrix = np.full((k + m, k + m), STRONG_ANTIEDGE, dtype=np.int64)
    matrix[:k, :k] = t.theta[np.ix_(side, side)]
    position = {v: i for i, v in enumerate(side)}
    for offset, attached in enumerate(attachments):
        for v in attached:
            matrix[k + offset, position[v]] = matrix[position[v], k + offset] = STRONG_EDGE
    for i, j, value in marker_pairs:
        matrix[k + i, k + j] = matrix[k + j, k + i] = value
    weights = [t.weights[v] for v in side] + [0] * m
    return Trigraph(matrix, weights)


def _check_sides(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> None:
    if not a or not b:
        raise PreconditionError("both A and B must be nonempty")
    if set(a) & set(b) or set(a) & set(c) or set(b) & set(c):
        raise PreconditionError("A, B and C must be disjoint")


def build_block(t: Trigraph, split: TwoJoinSplit, side: int = 1) -> Block:
    """Block of a 2-join or complement 2-join on side 1 or 2 of ``split``.

    Odd: markers a, b with ``ab`` switchable, a strongly complete to A and
    b to B. Even: markers a, c, b where ``ac`` and ``cb`` are switchable.
    The complement variants are the complement of the plain block of the
    complemented trigraph.
    """
    kind = prelabel_kind(split)
    a_side, b_side, c_side = split.side(side)
    _check_sides(a_side, b_side, c_side)
    base = complement(t) if split.complemented else t
    vertices = sorted(a_side + b_side + c_side)
    k = len(vertices)

    if split.parity == Parity.ODD:
        block = _with_markers(base, vertices, [a_side, b_side], [(0, 1, SWITCHABLE)])
        roles = MarkerRoles(a=k, b=k + 1)
    else:
        block = _with_markers(
            base, vertices, [a_side, b_side, []], [(0, 2, SWITCHABLE), (2, 1, SWITCHABLE)]
        )
        roles = MarkerRoles(a=k, b=k + 1, c=k + 2)

    if split.complemented:
        block = complement(block)
    return Block(trigraph=block, roles=roles, side_map=vertices, kind=kind)


def build_block_homogeneous(
    t: Trigraph,
    split: HomogeneousPairSplit,
    side: Literal["inside", "outside"] = "inside"
) -> Block:
    """Block of a proper homogeneous pair.

    Inside (A u B): marker c strongly complete to A, d to B, ``cd``
    switchable. Outside: marker a strongly complete to C u E, b to D u E,
    ``ab`` switchable.
    """
    if len(split.a) < 2 or len(split.b) < 2:
        raise PreconditionError("a proper homogeneous pair needs |A| > 1 and |B| > 1")
    if side == "inside":
        vertices = sorted(split.a + split.b)
        attachments = [split.a, split.b]
    elif side == "outside":
        vertices = sorted(split.c + split.d + split.e + split.f)
        attachments = [split.c + split.e, split.d + split.e]
    else:
        raise PreconditionError(f"side must be 'inside' or 'outside', got {side!r}")
    k = len(vertices)
    block = _with_markers(t, vertices, attachments, [(0, 1, SWITCHABLE)])
    return Block(trigraph=block, roles=MarkerRoles(a=k, b=k + 1), side_map=vertices)
