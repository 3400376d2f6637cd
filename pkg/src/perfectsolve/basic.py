"""Recognition of the five basic trigraph classes and exact alpha for each.

Every recognizer returns a witness that :func:`validate_basic_report` can
re-check directly against the class definition. Stable sets are always
strong stable sets, i.e. stable sets of the full realization.
"""

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .errors import PreconditionError
from .models import (
    BasicClass, BasicClassReport, BipartitionWitness, DoubledWitness,
    LineWitness, PairTag, StableSetResult
)
from .trigraph import (
    STRONG_ANTIEDGE, STRONG_EDGE, Trigraph, anticomponents_of, complement,
    components_of, full_realization
)

logger = logging.getLogger(__name__)

RECOGNITION_ORDER = (
    BasicClass.BIPARTITE,
    BasicClass.COMPLEMENT_BIPARTITE,
    BasicClass.LINE,
    BasicClass.COMPLEMENT_LINE,
    BasicClass.DOUBLED,
)

_SOURCE = "source"
_SINK = "sink"


def _result(t: Trigraph, vertices: Iterable[int]) -> StableSetResult:
    chosen = sorted(set(vertices))
    return StableSetResult(value=t.total_weight(chosen), vertices=chosen)


def alpha_bipartite(g: nx.Graph, weights: Optional[Mapping[int, int]] = None) -> StableSetResult:
    """Maximum weight stable set of a bipartite graph by minimum cut.

    Left vertices hang off the source and right vertices feed the sink with
    capacity equal to their weight; graph edges go left to right with
    unbounded capacity, so the source side of a minimum cut leaves a
    stable set of weight ``total - cut``.
    """
    if not nx.is_bipartite(g):
        raise PreconditionError("alpha_bipartite requires a bipartite graph")
    weight = {
        v: int(weights[v]) if weights is not None else int(g.nodes[v].get("weight", 1))
        for v in g.nodes
    }
    side = nx.bipartite.color(g)
    positive = {v for v in g.nodes if weight[v] > 0}

    network = nx.DiGraph()
    network.add_node(_SOURCE)
    network.add_node(_SINK)
    for v in positive:
        if side[v] == 0:
            network.add_edge(_SOURCE, v, capacity=weight[v])
        else:
            network.add_edge(v, _SINK, capacity=weight[v])
    for u, v in g.edges:
        if u in positive and v in positive:
            left, right = (u, v) if side[u] == 0 else (v, u)
            network.add_edge(left, right)

    _, (source_side, sink_side) = nx.minimum_cut(network, _SOURCE, _SINK)
    chosen = sorted(
        v for v in positive
        if (side[v] == 0 and v in source_side) or (side[v] == 1 and v in sink_side)
    )
    return StableSetResult(value=sum(weight[v] for v in chosen), vertices=chosen)


def _alpha_bipartite_part(t: Trigraph, vertices: Iterable[int]) -> StableSetResult:
    graph = full_realization(t).subgraph(set(vertices))
    return alpha_bipartite(graph, {v: t.weights[v] for v in graph.nodes})


def _bipartition(graph: nx.Graph) -> Optional[Tuple[List[int], List[int]]]:
    if not nx.is_bipartite(graph):
        return None
    side = nx.bipartite.color(graph)
    left = sorted(v for v in graph.nodes if side[v] == 0)
    right = sorted(v for v in graph.nodes if side[v] == 1)
    return left, right


def alpha_complement_bipartite(t: Trigraph) -> StableSetResult:
    """Best single vertex or strongly antiadjacent pair.

    The full realization of the complement is bipartite, hence triangle
    free, so no strong stable set has more than two vertices.
    """
    if _bipartition(full_realization(complement(t))) is None:
        raise PreconditionError("trigraph is not the complement of a bipartite trigraph")
    best: Tuple[int, Tuple[int, ...]] = (0, ())
    for v in range(t.n):
        best = max(best, (t.weights[v], (v,)))
    for u, v in combinations(range(t.n), 2):
        if t.theta[u, v] == STRONG_ANTIEDGE:
            best = max(best, (t.weights[u] + t.weights[v], (u, v)))
    return _result(t, best[1])


def line_root(graph: nx.Graph) -> Optional[Tuple[nx.Graph, Dict[int, Tuple[int, int]]]]:
    """Bipartite root graph R with ``graph == L(R)``, or None.

    Krausz-style: the neighborhood of every vertex must split into at most
    two cliques with no edges between them, and the resulting cells must
    agree from both ends. Root edges carry the graph vertex as ``vertex``.
    """
    cells_of: Dict[int, List[frozenset]] = {}
    for v in graph.nodes:
        neighborhood = graph.subgraph(graph[v])
        parts = list(nx.connected_components(neighborhood))
        if len(parts) > 2:
            return None
        cells = []
        for part in parts:
            size = len(part)
            if neighborhood.subgraph(part).number_of_edges() != size * (size - 1) // 2:
                return None
            cells.append(frozenset(part) | {v})
        cells_of[v] = cells

    for v, cells in cells_of.items():
        for cell in cells:
            if any(cell not in cells_of[u] for u in cell if u != v):
                return None

    root = nx.Graph()
    index: Dict[frozenset, int] = {}
    edge_of_vertex: Dict[int, Tuple[int, int]] = {}
    for v in sorted(graph.nodes):
        ends = []
        for cell in cells_of[v]:
            if cell not in index:
                index[cell] = root.number_of_nodes()
                root.add_node(index[cell])
            ends.append(index[cell])
        while len(ends) < 2:
            private = root.number_of_nodes()
            root.add_node(private)
            ends.append(private)
        root.add_edge(ends[0], ends[1], vertex=v)
        edge_of_vertex[v] = (min(ends), max(ends))

    if not nx.is_bipartite(root):
        return None
    return root, edge_of_vertex


def _cliques_are_strong(t: Trigraph) -> bool:
    """No switchable pair lies in a triangle, i.e. every clique of size >= 3 is strong."""
    return all(not (t.neighbors(u) & t.neighbors(v)) for u, v in t.switchable_pairs())


def _line_witness(t: Trigraph, complemented: bool = False) -> Optional[LineWitness]:
    if not _cliques_are_strong(t):
        return None
    found = line_root(full_realization(t))
    if found is None:
        return None
    root, edge_of_vertex = found
    return LineWitness(
        root_nodes=root.number_of_nodes(),
        edge_of_vertex=[edge_of_vertex[v] for v in range(t.n)],
        complemented=complemented
    )


def alpha_line(t: Trigraph) -> StableSetResult:
    """Maximum weight matching in the root graph of the full realization."""
    if _line_witness(t) is None:
        raise PreconditionError("trigraph is not a line trigraph")
    root, _ = line_root(full_realization(t))
    for p, q, data in root.edges(data=True):
        data["weight"] = t.weights[data["vertex"]]
    matching = nx.max_weight_matching(root, weight="weight")
    return _result(t, (root.edges[p, q]["vertex"] for p, q in matching))


def alpha_complement_line(t: Trigraph) -> StableSetResult:
    """Heaviest strong clique of the complement, found among the stars of its root graph.

    In the line graph of a bipartite graph every clique lies in a star, and
    stars of three or more vertices are strong since no switchable pair of
    the complement lies in a triangle.
    """
    if _line_witness(complement(t), complemented=True) is None:
        raise PreconditionError("trigraph is not the complement of a line trigraph")
    root, _ = line_root(full_realization(complement(t)))
    best: Tuple[int, Tuple[int, ...]] = (0, ())
    for node in sorted(root.nodes):
        star = tuple(sorted(root.edges[node, other]["vertex"] for other in root[node]))
        if t.is_strong_stable(star):
            best = max(best, (t.total_weight(star), star))
        else:
            for v in star:
                best = max(best, (t.weights[v], (v,)))
    return _result(t, best[1])


def _good_partition_violations(t: Trigraph, x: Sequence[int], y: Sequence[int]) -> List[str]:
    problems = []
    x_set, y_set = set(x), set(y)
    if x_set & y_set or (x_set | y_set) != set(range(t.n)):
        return ["X and Y do not partition the vertices"]
    x_parts = components_of(t, x_set)
    y_parts = anticomponents_of(t, y_set)
    if any(len(part) > 2 for part in x_parts):
        problems.append("a component of T|X has more than two vertices")
    if any(len(part) > 2 for part in y_parts):
        problems.append("an anticomponent of T|Y has more than two vertices")
    if any((u in x_set) != (v in x_set) for u, v in t.switchable_pairs()):
        problems.append("a switchable pair meets both X and Y")
    if problems:
        return problems
    for cx in x_parts:
        for cy in y_parts:
            for v in cx + cy:
                others = cy if v in cx else cx
                strong = sum(1 for u in others if t.theta[u, v] == STRONG_EDGE)
                anti = sum(1 for u in others if t.theta[u, v] == STRONG_ANTIEDGE)
                if strong > 1 or anti > 1:
                    problems.append(
                        f"vertex {v} has more than one strong edge or strong antiedge to a part"
                    )
                    return problems
    return problems


def _seeded_partition(t: Trigraph, a: int, b: int) -> Optional[Tuple[List[int], List[int]]]:
    x, y = [a, b], []
    for v in range(t.n):
        if v in (a, b):
            continue
        if t.theta[v, a] == STRONG_ANTIEDGE and t.theta[v, b] == STRONG_ANTIEDGE:
            x.append(v)
        elif t.theta[v, a] == STRONG_EDGE or t.theta[v, b] == STRONG_EDGE:
            y.append(v)
        else:
            return None
    return sorted(x), sorted(y)


def _split_partition(t: Trigraph) -> Optional[Tuple[List[int], List[int]]]:
    """Split graph partition (stable X, clique Y) from the degree sequence."""
    if not t.is_graph:
        return None
    graph = full_realization(t)
    order = sorted(graph.nodes, key=lambda v: (-graph.degree(v), v))
    degrees = [graph.degree(v) for v in order]
    m = max((i for i, d in enumerate(degrees, start=1) if d >= i - 1), default=0)
    if sum(degrees[:m]) != m * (m - 1) + sum(degrees[m:]):
        return None
    return sorted(order[m:]), sorted(order[:m])


def good_partition(t: Trigraph) -> Optional[Tuple[List[int], List[int]]]:
    """A good partition (X, Y), or None.

    Tries every adjacent pair as an edge of T|X, every antiadjacent pair as
    an antiedge of T|Y (the same search on the complement), then the split
    graph case where X is strongly stable and Y a strong clique.
    """
    for u, v in combinations(range(t.n), 2):
        if t.theta[u, v] != STRONG_ANTIEDGE:
            candidate = _seeded_partition(t, u, v)
            if candidate and not _good_partition_violations(t, *candidate):
                return candidate
    flipped = complement(t)
    for u, v in combinations(range(t.n), 2):
        if t.theta[u, v] != STRONG_EDGE:
            candidate = _seeded_partition(flipped, u, v)
            if candidate:
                x, y = candidate[1], candidate[0]
                if not _good_partition_violations(t, x, y):
                    return x, y
    candidate = _split_partition(t)
    if candidate and not _good_partition_violations(t, *candidate):
        return candidate
    return None


def _pair_tags(t: Trigraph, x: Sequence[int]) -> List[PairTag]:
    x_set = set(x)
    return [
        PairTag(u=u, v=v, tag="matching" if u in x_set else "antimatching")
        for u, v in t.switchable_pairs()
    ]


def alpha_doubled(t: Trigraph, gp: Tuple[Sequence[int], Sequence[int]]) -> StableSetResult:
    """Best of: stable sets inside X, inside Y, one Y vertex plus X, two Y vertices plus X."""
    x, y = list(gp[0]), list(gp[1])
    problems = _good_partition_violations(t, x, y)
    if problems:
        raise PreconditionError(f"not a good partition: {problems[0]}")
    x_set = set(x)

    candidates = [_alpha_bipartite_part(t, x_set)]
    for v in y:
        candidates.append(_result(t, [v]))
        free = x_set - t.neighbors(v)
        rest = _alpha_bipartite_part(t, free)
        candidates.append(_result(t, [v] + rest.vertices))
    for u, v in combinations(y, 2):
        if t.theta[u, v] == STRONG_ANTIEDGE:
            free = x_set - t.neighbors(u) - t.neighbors(v)
            rest = _alpha_bipartite_part(t, free)
            candidates.append(_result(t, [u, v] + rest.vertices))
    return max(candidates, key=lambda r: r.value)


def _recognize(t: Trigraph, class_name: BasicClass) -> Optional[BasicClassReport]:
    witness = None
    if class_name == BasicClass.BIPARTITE:
        parts = _bipartition(full_realization(t))
        if parts:
            witness = BipartitionWitness(left=parts[0], right=parts[1])
    elif class_name == BasicClass.COMPLEMENT_BIPARTITE:
        parts = _bipartition(full_realization(complement(t)))
        if parts:
            witness = BipartitionWitness(left=parts[0], right=parts[1])
    elif class_name == BasicClass.LINE:
        witness = _line_witness(t)
    elif class_name == BasicClass.COMPLEMENT_LINE:
        witness = _line_witness(complement(t), complemented=True)
    elif class_name == BasicClass.DOUBLED:
        gp = good_partition(t)
        if gp:
            witness = DoubledWitness(x=gp[0], y=gp[1], pair_tags=_pair_tags(t, gp[0]))
    if witness is None:
        return None
    return BasicClassReport(class_name=class_name, witness=witness)


def recognize_basic(t: Trigraph) -> Optional[BasicClassReport]:
    """First basic class that ``t`` belongs to, in :data:`RECOGNITION_ORDER`."""
    for class_name in RECOGNITION_ORDER:
        report = _recognize(t, class_name)
        if report is not None:
            logger.debug(f"n={t.n} recognized as {class_name.value}")
            return report
    return None


def recognize_all(t: Trigraph) -> List[BasicClassReport]:
    """Every basic class ``t`` belongs to, with one witness each."""
    return [r for r in (_recognize(t, c) for c in RECOGNITION_ORDER) if r is not None]


def validate_basic_report(t: Trigraph, report: BasicClassReport) -> List[str]:
    """Direct check of a witness against its class definition; empty when valid."""
    witness = report.witness
    if isinstance(witness, BipartitionWitness):
        left, right = set(witness.left), set(witness.right)
        if left & right or (left | right) != set(range(t.n)):
            return ["bipartition does not partition the vertices"]
        expected = STRONG_ANTIEDGE if report.class_name == BasicClass.BIPARTITE else STRONG_EDGE
        for part in (left, right):
            if any(t.theta[u, v] != expected for u, v in combinations(sorted(part), 2)):
                return ["a side of the bipartition is not homogeneous"]
        return []

    if isinstance(witness, LineWitness):
        base = complement(t) if witness.complemented else t
        if len(witness.edge_of_vertex) != t.n:
            return ["root edge missing for some vertex"]
        root = nx.Graph()
        root.add_nodes_from(range(witness.root_nodes))
        root.add_edges_from(witness.edge_of_vertex)
        if root.number_of_edges() != t.n or not nx.is_bipartite(root):
            return ["root graph is not a simple bipartite graph"]
        for u, v in combinations(range(t.n), 2):
            share = bool(set(witness.edge_of_vertex[u]) & set(witness.edge_of_vertex[v]))
            if share != (base.theta[u, v] != STRONG_ANTIEDGE):
                return [f"root edges of {u} and {v} disagree with adjacency"]
        if not _cliques_are_strong(base):
            return ["a switchable pair lies in a triangle"]
        return []

    problems = _good_partition_violations(t, witness.x, witness.y)
    x_set = set(witness.x)
    for tag in witness.pair_tags:
        expected = "matching" if tag.u in x_set else "antimatching"
        if tag.tag != expected or t.theta[tag.u, tag.v] != 0:
            problems.append(f"pair ({tag.u}, {tag.v}) is mistagged")
    return problems


def alpha_basic(t: Trigraph, report: Optional[BasicClassReport] = None) -> StableSetResult:
    """Exact alpha of a basic trigraph with the algorithm of its class."""
    if report is None:
        report = recognize_basic(t)
        if report is None:
            raise PreconditionError("trigraph is not basic")
    if report.class_name == BasicClass.BIPARTITE:
        return _alpha_bipartite_part(t, range(t.n))
    if report.class_name == BasicClass.COMPLEMENT_BIPARTITE:
        return alpha_complement_bipartite(t)
    if report.class_name == BasicClass.LINE:
        return alpha_line(t)
    if report.class_name == BasicClass.COMPLEMENT_LINE:
        return alpha_complement_line(t)
    return alpha_doubled(t, (report.witness.x, report.witness.y))
