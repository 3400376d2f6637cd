"""Trigraph data model, its basic predicates and small exhaustive checkers."""

import logging
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .errors import PreconditionError, SizeCapError
from .models import (
    ClassFReport, ComponentShape, Parity, SwitchableComponent,
    TrigraphPayload, Violation, WeightClass
)

logger = logging.getLogger(__name__)

STRONG_EDGE = 1
SWITCHABLE = 0
STRONG_ANTIEDGE = -1

DEFAULT_MAX_VERTICES = 4096
DEFAULT_BERGE_CAP = 14


class Trigraph:
    """A trigraph on vertices ``0..n-1`` with nonnegative integer weights.

    ``theta`` is a dense symmetric int8 matrix with entries in {-1, 0, +1}
    (strong antiedge, switchable pair, strong edge). The diagonal is unused
    and kept at 0. Instances are immutable.
    """

    def __init__(
        self,
        theta,
        weights: Optional[Sequence[int]] = None,
        max_vertices: int = DEFAULT_MAX_VERTICES
    ):
        matrix = np.array(theta, dtype=np.int64)
        if matrix.size == 0:
            matrix = np.zeros((0, 0), dtype=np.int64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise PreconditionError(f"adjacency matrix must be square, got shape {matrix.shape}")
        n = matrix.shape[0]
        if n > max_vertices:
            raise SizeCapError(n, max_vertices, "trigraph construction")
        np.fill_diagonal(matrix, 0)
        if np.any(np.abs(matrix) > 1):
            raise PreconditionError("adjacency values must lie in {-1, 0, +1}")
        if not np.array_equal(matrix, matrix.T):
            raise PreconditionError("adjacency matrix must be symmetric")

        self.theta = matrix.astype(np.int8)
        self.theta.setflags(write=False)

        if weights is None:
            weights = [1] * n
        weights = tuple(int(w) for w in weights)
        if len(weights) != n:
            raise PreconditionError(f"expected {n} weights, got {len(weights)}")
        if any(w < 0 for w in weights):
            raise PreconditionError("weights must be nonnegative")
        self.weights: Tuple[int, ...] = weights

    @classmethod
    def from_edges(
        cls,
        n: int,
        strong: Iterable[Tuple[int, int]] = (),
        switchable: Iterable[Tuple[int, int]] = (),
        weights: Optional[Sequence[int]] = None
    ) -> "Trigraph":
        """Build from explicit strong edges and switchable pairs; every other pair is a strong antiedge."""
        matrix = np.full((n, n), STRONG_ANTIEDGE, dtype=np.int8)
        for value, pairs in ((STRONG_EDGE, strong), (SWITCHABLE, switchable)):
            for u, v in pairs:
                if u == v or not (0 <= u < n and 0 <= v < n):
                    raise PreconditionError(f"invalid pair ({u}, {v}) for n={n}")
                matrix[u, v] = matrix[v, u] = value
        return cls(matrix, weights)

    @classmethod
    def from_networkx(cls, graph: nx.Graph, weight: str = "weight") -> "Trigraph":
        """Build an all-strong trigraph from a graph; nodes are relabeled in sorted order."""
        nodes = sorted(graph.nodes)
        index = {v: i for i, v in enumerate(nodes)}
        weights = [int(graph.nodes[v].get(weight, 1)) for v in nodes]
        edges = [(index[u], index[v]) for u, v in graph.edges if u != v]
        return cls.from_edges(len(nodes), strong=edges, weights=weights)

    @classmethod
    def from_payload(cls, payload: TrigraphPayload) -> "Trigraph":
        return cls.from_edges(
            payload.n, payload.strong_edges, payload.switchable_pairs, payload.weights
        )

    @property
    def n(self) -> int:
        return self.theta.shape[0]

    def value(self, u: int, v: int) -> int:
        return int(self.theta[u, v])

    @cached_property
    def _neighborhoods(self) -> Dict[str, List[FrozenSet[int]]]:
        rows = {
            "strong": [],
            "switchable": [],
            "adjacent": [],
            "antiadjacent": [],
            "strong_anti": [],
        }
        for v in range(self.n):
            row = self.theta[v]
            strong = frozenset(np.flatnonzero(row == STRONG_EDGE).tolist())
            switchable = frozenset(np.flatnonzero(row == SWITCHABLE).tolist()) - {v}
            strong_anti = frozenset(np.flatnonzero(row == STRONG_ANTIEDGE).tolist())
            rows["strong"].append(strong)
            rows["switchable"].append(switchable)
            rows["adjacent"].append(strong | switchable)
            rows["antiadjacent"].append(strong_anti | switchable)
            rows["strong_anti"].append(strong_anti)
        return rows

    def strong_neighbors(self, v: int) -> FrozenSet[int]:
        return self._neighborhoods["strong"][v]

    def switchable_neighbors(self, v: int) -> FrozenSet[int]:
        return self._neighborhoods["switchable"][v]

    def neighbors(self, v: int) -> FrozenSet[int]:
        """Adjacent vertices, semiadjacent ones included."""
        return self._neighborhoods["adjacent"][v]

    def antineighbors(self, v: int) -> FrozenSet[int]:
        """Antiadjacent vertices, semiadjacent ones included."""
        return self._neighborhoods["antiadjacent"][v]

    def strong_antineighbors(self, v: int) -> FrozenSet[int]:
        return self._neighborhoods["strong_anti"][v]

    def _pairs_with(self, value: int) -> List[Tuple[int, int]]:
        upper = np.triu(self.theta == value, k=1)
        return [(int(u), int(v)) for u, v in np.argwhere(upper)]

    def strong_edges(self) -> List[Tuple[int, int]]:
        return self._pairs_with(STRONG_EDGE)

    def switchable_pairs(self) -> List[Tuple[int, int]]:
        return self._pairs_with(SWITCHABLE)

    @property
    def is_graph(self) -> bool:
        """True when there are no switchable pairs."""
        return not self.switchable_pairs()

    def with_weights(self, weights: Sequence[int]) -> "Trigraph":
        return Trigraph(self.theta, weights)

    def induced(self, vertices: Iterable[int]) -> Tuple["Trigraph", List[int]]:
        """Subtrigraph induced on ``vertices`` and the new-to-old index map."""
        order = sorted(set(vertices))
        sub = self.theta[np.ix_(order, order)]
        return Trigraph(sub, [self.weights[v] for v in order]), order

    def total_weight(self, vertices: Iterable[int]) -> int:
        return sum(self.weights[v] for v in vertices)

    def is_strong_stable(self, vertices: Iterable[int]) -> bool:
        chosen = sorted(set(vertices))
        return all(self.theta[u, v] == STRONG_ANTIEDGE for u, v in combinations(chosen, 2))

    def is_strong_clique(self, vertices: Iterable[int]) -> bool:
        chosen = sorted(set(vertices))
        return all(self.theta[u, v] == STRONG_EDGE for u, v in combinations(chosen, 2))

    def structure_key(self) -> bytes:
        """Hashable key of the adjacency alone (weights ignored)."""
        return self.n.to_bytes(4, "little") + self.theta.tobytes()

    def realize(self, assignment: Dict[Tuple[int, int], int]) -> "Trigraph":
        """Semirealization: each listed switchable pair becomes +1 or -1, others stay switchable."""
        matrix = self.theta.astype(np.int8, copy=True)
        for (u, v), value in assignment.items():
            if self.theta[u, v] != SWITCHABLE or u == v:
                raise PreconditionError(f"({u}, {v}) is not a switchable pair")
            if value not in (STRONG_EDGE, STRONG_ANTIEDGE):
                raise PreconditionError(f"switchable pairs realize to +1 or -1, got {value}")
            matrix[u, v] = matrix[v, u] = value
        return Trigraph(matrix, self.weights)

    def semirealization(self, rng: np.random.Generator, keep_probability: float = 0.5) -> "Trigraph":
        """Random semirealization: each switchable pair is kept or fixed to a random side."""
        assignment = {}
        for pair in self.switchable_pairs():
            if rng.random() >= keep_probability:
                assignment[pair] = STRONG_EDGE if rng.random() < 0.5 else STRONG_ANTIEDGE
        return self.realize(assignment)

    def payload(self) -> TrigraphPayload:
        return TrigraphPayload(
            n=self.n,
            weights=list(self.weights),
            strong_edges=self.strong_edges(),
            switchable_pairs=self.switchable_pairs()
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trigraph):
            return NotImplemented
        return self.weights == other.weights and np.array_equal(self.theta, other.theta)

    def __hash__(self) -> int:
        return hash((self.structure_key(), self.weights))

    def __repr__(self) -> str:
        return (
            f"Trigraph(n={self.n}, strong={len(self.strong_edges())}, "
            f"switchable={len(self.switchable_pairs())})"
        )


def complement(t: Trigraph) -> Trigraph:
    """Negate every adjacency value; weights are kept."""
    return Trigraph(-t.theta.astype(np.int64), t.weights)


def full_realization(t: Trigraph) -> nx.Graph:
    """Graph whose edges are the strong edges and the switchable pairs."""
    graph = nx.Graph()
    graph.add_nodes_from((v, {"weight": t.weights[v]}) for v in range(t.n))
    graph.add_edges_from(t.strong_edges())
    graph.add_edges_from(t.switchable_pairs())
    return graph


def strong_realization(t: Trigraph) -> nx.Graph:
    """Graph whose edges are the strong edges only."""
    graph = nx.Graph()
    graph.add_nodes_from((v, {"weight": t.weights[v]}) for v in range(t.n))
    graph.add_edges_from(t.strong_edges())
    return graph


def components_of(t: Trigraph, vertices: Iterable[int]) -> List[List[int]]:
    """Connected components of the subtrigraph induced on ``vertices``."""
    chosen = set(vertices)
    graph = nx.Graph()
    graph.add_nodes_from(chosen)
    graph.add_edges_from((u, v) for u in chosen for v in t.neighbors(u) if v in chosen)
    return sorted(sorted(c) for c in nx.connected_components(graph))


def anticomponents_of(t: Trigraph, vertices: Iterable[int]) -> List[List[int]]:
    """Anticomponents (components of the complement) of the subtrigraph on ``vertices``."""
    chosen = set(vertices)
    graph = nx.Graph()
    graph.add_nodes_from(chosen)
    graph.add_edges_from((u, v) for u in chosen for v in t.antineighbors(u) if v in chosen)
    return sorted(sorted(c) for c in nx.connected_components(graph))


def _weight_class(t: Trigraph, center: int, ends: Tuple[int, int]) -> WeightClass:
    x, y = ends
    rest = [u for u in range(t.n) if u not in (center, x, y)]
    row = t.theta[center]
    if all(row[u] == STRONG_EDGE for u in rest) and t.theta[x, y] == STRONG_EDGE:
        return WeightClass.HEAVY
    if all(row[u] == STRONG_ANTIEDGE for u in rest) and t.theta[x, y] == STRONG_ANTIEDGE:
        return WeightClass.LIGHT
    return WeightClass.PLAIN


def switchable_components(t: Trigraph) -> List[SwitchableComponent]:
    """Connected components of the switchable pairs, with shape and heavy/light class."""
    sigma = nx.Graph()
    sigma.add_edges_from(t.switchable_pairs())
    result = []
    for members in sorted(nx.connected_components(sigma), key=min):
        sub = sigma.subgraph(members)
        edges = sub.number_of_edges()
        vertices = tuple(sorted(members))
        if edges == 1:
            result.append(SwitchableComponent(vertices=vertices, shape=ComponentShape.SINGLE_PAIR))
        elif edges == 2:
            center = next(v for v in vertices if sub.degree(v) == 2)
            x, y = sorted(sub.neighbors(center))
            result.append(SwitchableComponent(
                vertices=vertices,
                shape=ComponentShape.TWO_PAIR_PATH,
                weight_class=_weight_class(t, center, (x, y)),
                center=center,
                edge_count=2
            ))
        else:
            result.append(SwitchableComponent(
                vertices=vertices, shape=ComponentShape.IRREGULAR, edge_count=edges
            ))
    return result


def classify_class_F(t: Trigraph) -> ClassFReport:  # noqa: N802
    """Check the switchable-structure conditions of class F (Berge-ness is not checked)."""
    violations = []
    for component in switchable_components(t):
        if component.shape == ComponentShape.IRREGULAR:
            crowded = [v for v in component.vertices if len(t.switchable_neighbors(v)) > 2]
            if crowded:
                for v in crowded:
                    violations.append(Violation(
                        vertices=[v],
                        reason=f"vertex is in {len(t.switchable_neighbors(v))} switchable pairs"
                    ))
            else:
                violations.append(Violation(
                    vertices=list(component.vertices),
                    reason=f"switchable component has {component.edge_count} switchable pairs"
                ))
        elif component.shape == ComponentShape.TWO_PAIR_PATH and component.weight_class == WeightClass.PLAIN:
            violations.append(Violation(
                vertices=[component.center],
                reason="degree-2 switchable vertex is neither heavy nor light"
            ))
    return ClassFReport(in_class=not violations, violations=violations)


def _has_odd_hole(t: Trigraph) -> bool:
    adjacent = [t.neighbors(v) for v in range(t.n)]
    anti = [t.antineighbors(v) for v in range(t.n)]

    def extend(path: List[int]) -> bool:
        start, last = path[0], path[-1]
        for v in sorted(adjacent[last]):
            if v <= start or v in path:
                continue
            if any(v not in anti[p] for p in path[1:-1]):
                continue
            length = len(path) + 1
            if length >= 5 and length % 2 == 1 and v in adjacent[start]:
                return True
            if len(path) == 1 or v in anti[start]:
                path.append(v)
                if extend(path):
                    return True
                path.pop()
        return False

    return any(extend([start]) for start in range(t.n))


def is_berge_small(t: Trigraph, cap: int = DEFAULT_BERGE_CAP) -> bool:
    """Exhaustive odd hole / odd antihole search for small trigraphs."""
    if t.n > cap:
        raise SizeCapError(t.n, cap, "Berge check")
    return not _has_odd_hole(t) and not _has_odd_hole(complement(t))


def find_path_parity(
    t: Trigraph,
    a_side: Iterable[int],
    b_side: Iterable[int],
    interior: Iterable[int]
) -> Parity:
    """Parity of a shortest path from A to B with interior in C.

    For each ``a`` in order, search the full realization restricted to
    ``{a} u interior u b_side`` with the edges inside ``b_side`` removed;
    the first ``a`` that reaches ``b_side`` decides.
    """
    a_set, b_set, c_set = set(a_side), set(b_side), set(interior)
    if not a_set or not b_set:
        raise PreconditionError("a_side and b_side must be nonempty")
    if a_set & b_set or a_set & c_set or b_set & c_set:
        raise PreconditionError("a_side, b_side and interior must be disjoint")

    graph = full_realization(t)
    for a in sorted(a_set):
        sub = nx.Graph(graph.subgraph({a} | c_set | b_set))
        sub.remove_edges_from([(u, v) for u, v in combinations(sorted(b_set), 2) if sub.has_edge(u, v)])
        lengths = nx.single_source_shortest_path_length(sub, a)
        reached = [lengths[b] for b in b_set if b in lengths]
        if reached:
            return Parity.ODD if min(reached) % 2 == 1 else Parity.EVEN
    return Parity.NOT_FOUND


def zero_outside(t: Trigraph, keep: Iterable[int]) -> Trigraph:
    """Same trigraph with every weight outside ``keep`` set to 0."""
    kept = set(keep)
    if any(not 0 <= v < t.n for v in kept):
        raise PreconditionError("keep must be a subset of the vertices")
    return t.with_weights([w if v in kept else 0 for v, w in enumerate(t.weights)])
