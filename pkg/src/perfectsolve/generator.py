"""Random instances composed from basic pieces glued by 2-joins.

Every piece carries two ports A and B and a parity: the parity of the
paths from A to B through the rest of the piece. Pieces of the same parity
are glued around the first piece (the hub): A of each piece is made
strongly complete to A of the hub, B to B. Each piece with a marker path
of its parity attached is bipartite or a line graph of a bipartite graph,
so the composite stays Berge.
"""

import logging
from itertools import combinations
from typing import Iterator, List, Set, Tuple

import numpy as np
from pydantic import BaseModel

from .errors import PreconditionError
from .models import GeneratorSpec
from .trigraph import STRONG_ANTIEDGE, STRONG_EDGE, SWITCHABLE, Trigraph, complement

logger = logging.getLogger(__name__)

MIN_PIECE = 4
EDGE_DENSITY = 0.35


class Piece(BaseModel):
    """A piece on vertices ``0..n-1`` with its two ports."""
    n: int
    strong: List[Tuple[int, int]]
    switchable: List[Tuple[int, int]] = []
    a: List[int]
    b: List[int]
    odd: bool


def _mark_switchable(
    rng: np.random.Generator,
    edges: List[Tuple[int, int]],
    ports: Set[int],
    rate: float
) -> List[Tuple[int, int]]:
    """Disjoint edges, away from the ports, chosen with probability ``rate``."""
    used = set(ports)
    chosen = []
    for u, v in edges:
        if u in used or v in used:
            continue
        if rng.random() < rate:
            chosen.append((u, v))
            used.update((u, v))
    return chosen


def bipartite_piece(
    rng: np.random.Generator,
    size: int,
    odd: bool,
    extra_edges: bool = True,
    switchable_rate: float = 0.0
) -> Piece:
    """Bipartite piece on a path backbone ``0-1-...-(size-1)`` with ports {0} and {k}.

    ``k`` is odd for odd pieces and even otherwise, so every path from 0
    to k has that parity.
    """
    size = max(size, MIN_PIECE)
    last = size - 1
    k = last if (last % 2 == 1) == odd else last - 1
    backbone = [(i, i + 1) for i in range(last)]
    extras = []
    if extra_edges:
        for u, v in combinations(range(size), 2):
            if (u + v) % 2 == 1 and v - u >= 3 and (u, v) != (0, k) and rng.random() < EDGE_DENSITY:
                extras.append((u, v))
    switchable = _mark_switchable(rng, backbone, {0, k}, switchable_rate)
    strong = [e for e in backbone + extras if e not in switchable]
    return Piece(n=size, strong=sorted(strong), switchable=switchable, a=[0], b=[k], odd=odd)


def line_piece(rng: np.random.Generator, size: int, odd: bool) -> Piece:
    """Line graph of a bipartite root built on a path x-...-y plus random edges.

    Ports are the root edges at x and at y. The root path has length 4
    (x and y on the same side, odd piece) or 3 (even piece).
    """
    r = 4 if odd else 3
    size = max(size, r)
    path = [(i, i + 1) for i in range(r)]
    side = [i % 2 for i in range(r + 1)]

    def candidates() -> List[Tuple[int, int]]:
        return [
            (u, v) for u, v in combinations(range(len(side)), 2)
            if side[u] != side[v] and (u, v) not in path and (u, v) != (0, r)
        ]

    while len(candidates()) < size - r:
        side.append(len(side) % 2)
    pool = candidates()
    picks = rng.choice(len(pool), size=size - r, replace=False) if size > r else []
    root = path + sorted(pool[int(i)] for i in picks)

    strong = [
        (i, j) for (i, e), (j, f) in combinations(enumerate(root), 2) if set(e) & set(f)
    ]
    a = [i for i, e in enumerate(root) if 0 in e]
    b = [i for i, e in enumerate(root) if r in e]
    return Piece(n=len(root), strong=strong, a=a, b=b, odd=odd)


def doubled_instance(rng: np.random.Generator, size: int, switchable_rate: float = 0.0) -> Trigraph:
    """Doubled trigraph: X is a perfect matching, Y a perfect antimatching.

    Every X edge and Y antiedge meets every other pair in the crossing
    pattern x1y1, x2y2 (or its mirror), picked at random.
    """
    pairs_x = max(1, size // 4)
    pairs_y = max(1, (size - 2 * pairs_x) // 2)
    n = 2 * (pairs_x + pairs_y)
    y_start = 2 * pairs_x
    theta = np.full((n, n), STRONG_ANTIEDGE, dtype=np.int64)
    theta[y_start:, y_start:] = STRONG_EDGE

    for i in range(pairs_x):
        x1, x2 = 2 * i, 2 * i + 1
        value = SWITCHABLE if rng.random() < switchable_rate else STRONG_EDGE
        theta[x1, x2] = theta[x2, x1] = value
    for j in range(pairs_y):
        y1, y2 = y_start + 2 * j, y_start + 2 * j + 1
        value = SWITCHABLE if rng.random() < switchable_rate else STRONG_ANTIEDGE
        theta[y1, y2] = theta[y2, y1] = value
        for i in range(pairs_x):
            x1, x2 = 2 * i, 2 * i + 1
            if rng.random() < 0.5:
                x1, x2 = x2, x1
            theta[x1, y1] = theta[y1, x1] = STRONG_EDGE
            theta[x2, y2] = theta[y2, x2] = STRONG_EDGE
    return Trigraph(theta)


def glue(pieces: List[Piece]) -> Trigraph:
    """Glue every piece after the first onto the ports of the first by a 2-join."""
    if not pieces:
        raise PreconditionError("nothing to glue")
    if len({p.odd for p in pieces}) > 1:
        raise PreconditionError("glued pieces must share one parity")
    offsets = np.cumsum([0] + [p.n for p in pieces])
    n = int(offsets[-1])
    theta = np.full((n, n), STRONG_ANTIEDGE, dtype=np.int64)
    for piece, offset in zip(pieces, offsets):
        for value, pairs in ((STRONG_EDGE, piece.strong), (SWITCHABLE, piece.switchable)):
            for u, v in pairs:
                theta[offset + u, offset + v] = theta[offset + v, offset + u] = value

    hub = pieces[0]
    for piece, offset in zip(pieces[1:], offsets[1:]):
        for ports, hub_ports in ((piece.a, hub.a), (piece.b, hub.b)):
            for u in ports:
                for v in hub_ports:
                    theta[offset + u, v] = theta[v, offset + u] = STRONG_EDGE
    return Trigraph(theta)


def _weights(rng: np.random.Generator, n: int, max_weight: int) -> List[int]:
    if max_weight <= 1:
        return [1] * n
    return [int(w) for w in rng.integers(0, max_weight + 1, size=n)]


def generate(spec: GeneratorSpec) -> Trigraph:
    """Build the instance described by ``spec``; the same spec always gives the same trigraph."""
    rng = np.random.default_rng(spec.seed)
    if not spec.recipe:
        raise PreconditionError("recipe is empty")

    if "doubled" in spec.recipe:
        if len(spec.recipe) > 1:
            raise PreconditionError("doubled pieces are stand-alone recipes")
        t = doubled_instance(rng, spec.size, spec.switchable_rate)
    else:
        if spec.parity is None:
            odd = bool(rng.random() < 0.5)
        else:
            odd = spec.parity == "odd"
        count = len(spec.recipe)
        share = max(MIN_PIECE, spec.size // count)
        pieces = []
        for i, kind in enumerate(spec.recipe):
            size = share + (max(0, spec.size - share * count) if i == 0 else 0)
            if kind == "bipartite":
                pieces.append(bipartite_piece(rng, size, odd, switchable_rate=spec.switchable_rate))
            elif kind == "path":
                pieces.append(bipartite_piece(rng, size, odd, extra_edges=False))
            else:
                pieces.append(line_piece(rng, size, odd))
        t = glue(pieces)

    t = t.with_weights(_weights(rng, t.n, spec.max_weight))
    if spec.glue == "complement-two-join":
        t = complement(t)
    logger.debug(f"generated {spec.recipe} seed={spec.seed}: n={t.n}")
    return t


def generate_many(spec: GeneratorSpec, count: int) -> Iterator[Tuple[GeneratorSpec, Trigraph]]:
    """``count`` instances with consecutive seeds starting at ``spec.seed``."""
    for i in range(count):
        current = spec.model_copy(update={"seed": spec.seed + i})
        yield current, generate(current)
