"""Main recursion: decompose along proper 2-joins, label the marker components, expand at the leaves.

Each decomposition step computes four (or three) alpha values on the
smaller side, records them as a prelabel on the marker component of the
bigger block and recurses there. At a basic leaf every prelabeled
component gets the tag of the leaf's class, the labeled components are
replaced by their gadgets (the expansion) and alpha is read off the
expansion with the algorithm of its basic class.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from .basic import alpha_basic, recognize_basic
from .blocks import Block, build_block, prelabel_kind
from .detect import find_proper_2join, find_proper_complement_2join
from .errors import (
    LabelingMismatchError, NotInClassError, PerfectSolveError, PreconditionError, PrelabelError
)
from .models import (
    BasicClass, BasicClassReport, BasicLeaf, DecompositionNode, DoubledWitness, Label,
    LabeledComponent, LabelTag, MarkerRoles, NotInClassCertificate, PreLabel, PreLabelKind,
    PrelabeledComponent, SolveOutcome, SolverConfig, TwoJoinSplit
)
from .oracles import has_bsp_bf
from .trigraph import (
    DEFAULT_BERGE_CAP, STRONG_ANTIEDGE, STRONG_EDGE, SWITCHABLE, Trigraph, classify_class_F,
    is_berge_small, zero_outside
)

logger = logging.getLogger(__name__)

VertexKey = Tuple[int, bool]

_CLASS_TAGS = {
    BasicClass.BIPARTITE: LabelTag.BIPARTITE,
    BasicClass.COMPLEMENT_BIPARTITE: LabelTag.COMPLEMENT_OF_BIPARTITE,
    BasicClass.LINE: LabelTag.LINE,
    BasicClass.COMPLEMENT_LINE: LabelTag.COMPLEMENT_OF_LINE,
}

# odd-2join labels that get one clone per marker; the others get a single clone of a
_TWIN_CLONE_TAGS = frozenset({
    LabelTag.BIPARTITE, LabelTag.COMPLEMENT_OF_LINE, LabelTag.DOUBLED_MATCHING
})


class Expansion:
    """An expanded trigraph with the key of each of its vertices.

    Key ``(v, False)`` is vertex ``v`` of the labeled trigraph, ``(v, True)``
    is the vertex added next to marker ``v``.
    """

    def __init__(self, trigraph: Trigraph, keys: List[VertexKey]):
        self.trigraph = trigraph
        self.keys = keys
        self.index: Dict[VertexKey, int] = {key: i for i, key in enumerate(keys)}

    def expand_set(self, vertices: Iterable[int]) -> List[int]:
        """Indices of the given original vertices and of their clones."""
        chosen = set(vertices)
        return sorted(
            self.index[(v, primed)] for v in chosen for primed in (False, True)
            if (v, primed) in self.index
        )


def _check_shape(t: Trigraph, roles: MarkerRoles, kind: PreLabelKind) -> None:
    a, b, c = roles.a, roles.b, roles.c
    if kind in (PreLabelKind.ODD, PreLabelKind.COMPLEMENT_ODD):
        if c is not None or t.theta[a, b] != SWITCHABLE:
            raise PreconditionError(f"{kind.value} label needs a single switchable pair, got {roles}")
    elif c is None or t.theta[a, c] != SWITCHABLE or t.theta[c, b] != SWITCHABLE:
        raise PreconditionError(f"{kind.value} label needs a switchable path a-c-b, got {roles}")


def expand(t: Trigraph, labeled: Sequence[LabeledComponent]) -> Expansion:
    """Replace every labeled marker component by its gadget."""
    theta = t.theta.astype(np.int64)
    weights = list(t.weights)
    deleted: Set[int] = set()
    # (base, component, weight, adjacency to the vertices of its own component)
    clones: List[Tuple[int, int, int, Dict[int, int]]] = []

    for cid, component in enumerate(labeled):
        roles, pre, tag = component.roles, component.label.pre, component.label.tag
        _check_shape(t, roles, pre.kind)
        a, b, c = roles.a, roles.b, roles.c
        if pre.kind == PreLabelKind.COMPLEMENT_ODD:
            theta[a, b] = theta[b, a] = STRONG_EDGE
            weights[a], weights[b] = pre.alpha_a, pre.alpha_b
        elif pre.kind == PreLabelKind.ODD:
            theta[a, b] = theta[b, a] = STRONG_EDGE
            if tag in _TWIN_CLONE_TAGS:
                shared = pre.alpha_ac + pre.alpha_bc - pre.alpha_c - pre.alpha_x
                weights[a] = weights[b] = shared
                clones.append((a, cid, pre.alpha_x - pre.alpha_bc, {}))
                clones.append((b, cid, pre.alpha_x - pre.alpha_ac, {}))
            else:
                weights[a] = pre.alpha_ac - pre.alpha_c
                weights[b] = pre.alpha_bc - pre.alpha_c
                clones.append((a, cid, pre.alpha_x - pre.alpha_bc, {a: STRONG_EDGE}))
        elif pre.kind == PreLabelKind.COMPLEMENT_EVEN:
            deleted.add(c)
            weights[a], weights[b] = pre.alpha_a, pre.alpha_b
        else:
            theta[a, c] = theta[c, a] = theta[c, b] = theta[b, c] = STRONG_EDGE
            weights[a] = pre.alpha_x - pre.alpha_bc
            weights[b] = pre.alpha_x - pre.alpha_ac
            weights[c] = pre.alpha_x + pre.alpha_c - pre.alpha_ac - pre.alpha_bc

    members = {cid: set(component.roles.vertices) for cid, component in enumerate(labeled)}
    n, k = t.n, len(clones)
    matrix = np.full((n + k, n + k), STRONG_ANTIEDGE, dtype=np.int64)
    matrix[:n, :n] = theta
    for i, (base, cid, _, own) in enumerate(clones):
        row = theta[base].copy()
        for v in members[cid]:
            row[v] = own.get(v, STRONG_ANTIEDGE)
        matrix[n + i, :n] = matrix[:n, n + i] = row
        for j, (other, other_cid, _, _) in enumerate(clones):
            if j != i:
                matrix[n + i, n + j] = STRONG_ANTIEDGE if other_cid == cid else theta[base, other]

    all_weights = weights + [w for _, _, w, _ in clones]
    if any(w < 0 for w in all_weights):
        raise PrelabelError("expansion produces a negative weight")
    keys = [(v, False) for v in range(n)] + [(base, True) for base, _, _, _ in clones]
    alive = [i for i, (v, primed) in enumerate(keys) if primed or v not in deleted]
    expanded = Trigraph(matrix[np.ix_(alive, alive)], [all_weights[i] for i in alive])
    return Expansion(expanded, [keys[i] for i in alive])


def recover_alpha(pre: PreLabel, gadget_alpha: int) -> int:
    """Alpha of the decomposed trigraph from the alpha of its gadget side."""
    problems = pre.violations()
    if problems:
        raise PrelabelError("; ".join(problems))
    if pre.is_complement:
        return max(gadget_alpha, pre.alpha_x)
    if pre.kind == PreLabelKind.ODD:
        return gadget_alpha + pre.alpha_c
    return gadget_alpha + pre.alpha_ac + pre.alpha_bc - pre.alpha_x


class _Context:
    """Caches and counters shared by one top-level solve."""

    def __init__(self, config: Optional[SolverConfig] = None):
        self.config = config or SolverConfig()
        self.use_cache = bool(self.config.settings.get("cache_results", True))
        self._recognition: Dict[bytes, Optional[BasicClassReport]] = {}
        self._splits: Dict[bytes, Optional[TwoJoinSplit]] = {}
        self._outcomes: Dict[tuple, SolveOutcome] = {}
        self.stats = {"nodes": 0, "leaves": 0, "decompositions": 0, "cache_hits": 0}

    def recognize(self, t: Trigraph) -> Optional[BasicClassReport]:
        key = t.structure_key()
        if not self.use_cache or key not in self._recognition:
            self._recognition[key] = recognize_basic(t)
        return self._recognition[key]

    def split(self, t: Trigraph) -> Optional[TwoJoinSplit]:
        key = t.structure_key()
        if not self.use_cache or key not in self._splits:
            self._splits[key] = find_proper_2join(t) or find_proper_complement_2join(t)
        return self._splits[key]

    def lookup(self, key: tuple) -> Optional[SolveOutcome]:
        if not self.use_cache:
            return None
        outcome = self._outcomes.get(key)
        if outcome is not None:
            self.stats["cache_hits"] += 1
        return outcome

    def store(self, key: tuple, outcome: SolveOutcome) -> None:
        if self.use_cache:
            self._outcomes[key] = outcome


def _certificate(t: Trigraph, path: Sequence[str], reason: str) -> NotInClassCertificate:
    return NotInClassCertificate(reason=reason, path=list(path), leaf=t.payload())


def _leaf_tag(report: BasicClassReport, roles: MarkerRoles) -> LabelTag:
    if report.class_name in _CLASS_TAGS:
        return _CLASS_TAGS[report.class_name]
    witness: DoubledWitness = report.witness
    if set(roles.vertices) <= set(witness.x):
        return LabelTag.DOUBLED_MATCHING
    return LabelTag.DOUBLED_ANTIMATCHING


def _solve_leaf(
    t: Trigraph,
    prelabeled: Sequence[PrelabeledComponent],
    keep: Set[int],
    report: BasicClassReport,
    context: _Context,
    path: Sequence[str]
) -> SolveOutcome:
    context.stats["leaves"] += 1
    labeled = [
        LabeledComponent(roles=c.roles, label=Label(pre=c.pre, tag=_leaf_tag(report, c.roles)))
        for c in prelabeled
    ]
    try:
        expansion = expand(t, labeled)
    except PrelabelError as e:
        raise NotInClassError(_certificate(t, path, f"expansion failed: {e}")) from None
    masked = zero_outside(expansion.trigraph, expansion.expand_set(keep))
    expanded_report = context.recognize(masked) if labeled else report
    if expanded_report is None:
        raise NotInClassError(_certificate(t, path, "expansion of a basic leaf is not basic"))
    result = alpha_basic(masked, expanded_report)
    keys = sorted(expansion.keys[i] for i in result.vertices if masked.weights[i] > 0)
    logger.debug(f"leaf n={t.n} {report.class_name.value}: alpha={result.value}")
    return SolveOutcome(
        alpha=result.value,
        stable_set=keys,
        labeling=labeled,
        trace=BasicLeaf(
            class_name=report.class_name, n=t.n, labeled_components=len(labeled), report=report
        )
    )


def _map_component(component: PrelabeledComponent, block: Block) -> PrelabeledComponent:
    roles = component.roles
    return PrelabeledComponent(
        roles=MarkerRoles(
            a=block.index_of(roles.a),
            b=block.index_of(roles.b),
            c=None if roles.c is None else block.index_of(roles.c)
        ),
        pre=component.pre
    )


def _unmap_label(component: LabeledComponent, block: Block) -> LabeledComponent:
    roles = component.roles
    side = block.side_map
    return LabeledComponent(
        roles=MarkerRoles(a=side[roles.a], b=side[roles.b], c=None if roles.c is None else side[roles.c]),
        label=component.label
    )


def _targets(split: TwoJoinSplit, kind: PreLabelKind) -> Dict[str, Set[int]]:
    if kind in (PreLabelKind.COMPLEMENT_ODD, PreLabelKind.COMPLEMENT_EVEN):
        return {"a": set(split.a1), "b": set(split.b1), "x": set(split.x1)}
    return {
        "ac": set(split.a1) | set(split.c1),
        "bc": set(split.b1) | set(split.c1),
        "c": set(split.c1),
        "x": set(split.x1),
    }


def _prelabel(kind: PreLabelKind, calls: Dict[str, SolveOutcome]) -> PreLabel:
    if kind in (PreLabelKind.COMPLEMENT_ODD, PreLabelKind.COMPLEMENT_EVEN):
        return PreLabel(
            kind=kind, alpha_a=calls["a"].alpha, alpha_b=calls["b"].alpha, alpha_x=calls["x"].alpha
        )
    return PreLabel(
        kind=kind,
        alpha_ac=calls["ac"].alpha,
        alpha_bc=calls["bc"].alpha,
        alpha_c=calls["c"].alpha,
        alpha_x=calls["x"].alpha,
    )


def _small_side_choice(pre: PreLabel, gadget: SolveOutcome, roles: MarkerRoles) -> Optional[str]:
    """Which small-side stable set completes the gadget's stable set."""
    hit = {v for v, _ in gadget.stable_set}
    hit_a, hit_b = roles.a in hit, roles.b in hit
    if pre.is_complement:
        if pre.alpha_x > gadget.alpha:
            return "x"
        if hit_a:
            return "a"
        if hit_b:
            return "b"
        return None
    if hit_a and hit_b:
        return "x"
    if hit_a:
        return "ac"
    if hit_b:
        return "bc"
    return "c"


def _oriented(split: TwoJoinSplit) -> TwoJoinSplit:
    """Put the smaller side (ties: the side holding the smaller vertex) first."""
    x1, x2 = split.x1, split.x2
    if (len(x2), min(x2)) < (len(x1), min(x1)):
        return split.swapped()
    return split


def _check_block_sizes(n: int, small: Block, big: Block) -> None:
    if not (6 <= small.size <= big.size <= n - 1 and small.size + big.size <= n + 6):
        raise PerfectSolveError(
            f"block sizes {small.size} and {big.size} out of range for n={n}"
        )


def _solve_split(
    t: Trigraph,
    split: TwoJoinSplit,
    prelabeled: Sequence[PrelabeledComponent],
    keep: Set[int],
    context: _Context,
    path: Sequence[str]
) -> SolveOutcome:
    context.stats["decompositions"] += 1
    split = _oriented(split)
    kind = prelabel_kind(split)
    small = build_block(t, split, side=1)
    big = build_block(t, split, side=2)
    _check_block_sizes(t.n, small, big)
    step = f"{kind.value} X={split.x1}"
    logger.debug(f"n={t.n}: {step}, blocks of size {small.size} and {big.size}")

    x_side = set(split.x1)
    inner = [i for i, c in enumerate(prelabeled) if set(c.roles.vertices) <= x_side]
    outer = [i for i in range(len(prelabeled)) if i not in set(inner)]
    small_prelabeled = [_map_component(prelabeled[i], small) for i in inner]

    targets = _targets(split, kind)
    calls: Dict[str, SolveOutcome] = {}
    for name, target in targets.items():
        sub_keep = [small.index_of(v) for v in sorted(target & keep)]
        calls[name] = main_solve(
            small.trigraph, small_prelabeled, keep=sub_keep, context=context,
            path=list(path) + [f"{step} (small side, {name})"]
        )
    tags = {name: [c.label.tag for c in outcome.labeling] for name, outcome in calls.items()}
    if len({tuple(v) for v in tags.values()}) > 1:
        raise LabelingMismatchError(
            _certificate(t, path, f"small-side calls disagree on labels: {tags}")
        )

    pre = _prelabel(kind, calls)
    problems = pre.violations()
    if problems:
        raise NotInClassError(_certificate(t, path, f"prelabel inequalities fail: {problems[0]}"))

    big_prelabeled = [_map_component(prelabeled[i], big) for i in outer]
    big_prelabeled.append(PrelabeledComponent(roles=big.roles, pre=pre))
    big_keep = [big.index_of(v) for v in sorted(set(split.x2) & keep)] + list(big.roles.vertices)
    gadget = main_solve(
        big.trigraph, big_prelabeled, keep=big_keep, context=context,
        path=list(path) + [f"{step} (big side)"]
    )
    value = recover_alpha(pre, gadget.alpha)

    stable_set: List[VertexKey] = []
    choice = _small_side_choice(pre, gadget, big.roles)
    if choice != "x" or not pre.is_complement:
        stable_set.extend(
            (big.side_map[v], primed) for v, primed in gadget.stable_set if v < len(big.side_map)
        )
    if choice is not None:
        allowed = targets[choice] & keep
        stable_set.extend(
            (small.side_map[v], primed) for v, primed in calls[choice].stable_set
            if v < len(small.side_map) and small.side_map[v] in allowed
        )

    labels: Dict[int, LabeledComponent] = {}
    for i, component in zip(inner, calls["x"].labeling):
        labels[i] = _unmap_label(component, small)
    for i, component in zip(outer, gadget.labeling):
        labels[i] = _unmap_label(component, big)

    return SolveOutcome(
        alpha=value,
        stable_set=sorted(stable_set),
        labeling=[labels[i] for i in range(len(prelabeled))],
        trace=DecompositionNode(
            kind=kind,
            n=t.n,
            split=split,
            small_side=split.x1,
            small_block_size=small.size,
            big_block_size=big.size,
            prelabel=pre,
            small_calls=len(targets),
            big_calls=1,
            children=[calls["x"].trace, gadget.trace]
        )
    )


def main_solve(
    t: Trigraph,
    prelabeled: Sequence[PrelabeledComponent] = (),
    *,
    keep: Optional[Iterable[int]] = None,
    context: Optional[_Context] = None,
    path: Sequence[str] = ()
) -> SolveOutcome:
    """Alpha of the expansion of ``t`` once its prelabeled components are labeled.

    Weights outside ``keep`` (and outside the clones of kept markers) count
    as 0. The returned labeling lists the components of ``prelabeled`` in
    the same order, each with the tag of the leaf that absorbed it.

    Raises:
        NotInClassError: when some node is neither basic nor decomposable.
    """
    context = context or _Context()
    keep_set = set(range(t.n)) if keep is None else set(keep)
    key = (
        t.structure_key(), t.weights,
        tuple(c.model_dump_json() for c in prelabeled), frozenset(keep_set)
    )
    cached = context.lookup(key)
    if cached is not None:
        return cached
    context.stats["nodes"] += 1

    report = classify_class_F(t)
    if not report.in_class:
        reason = "; ".join(v.reason for v in report.violations)
        raise NotInClassError(_certificate(t, path, f"switchable structure outside class F: {reason}"))

    try:
        basic = context.recognize(t)
        if basic is not None:
            outcome = _solve_leaf(t, prelabeled, keep_set, basic, context, path)
        else:
            split = context.split(t)
            if split is None:
                raise NotInClassError(
                    _certificate(t, path, "not basic and has no proper 2-join or complement 2-join")
                )
            outcome = _solve_split(t, split, prelabeled, keep_set, context, path)
    except NotInClassError as e:
        raise _lift(e, t, path, context) from None
    context.store(key, outcome)
    return outcome


def _lift(
    error: NotInClassError, t: Trigraph, path: Sequence[str], context: _Context
) -> NotInClassError:
    """Move a certificate that its own leaf cannot confirm up to the node ``t``."""
    if error.certificate.leaf == t.payload():
        return error
    if not verify_not_in_class(error.certificate, context.config.berge_cap):
        return error
    logger.debug(f"n={t.n}: certificate from below does not verify, lifting it here")
    return NotInClassError(_certificate(t, path, f"{error.certificate.reason} (detected below)"))


def alpha(t: Trigraph, config: Optional[SolverConfig] = None) -> SolveOutcome:
    """Alpha, a stable set of the expansion and the decomposition trace, with a fresh context."""
    context = _Context(config)
    outcome = main_solve(t, context=context)
    logger.info(
        f"n={t.n}: alpha={outcome.alpha} after {context.stats['nodes']} nodes, "
        f"{context.stats['decompositions']} decompositions, {context.stats['cache_hits']} cache hits"
    )
    return outcome


def extract_stable_set(
    t: Trigraph,
    outcome: Optional[SolveOutcome] = None,
    config: Optional[SolverConfig] = None
) -> List[int]:
    """A strong stable set of weight alpha.

    The set carried by the outcome is used when it checks out; otherwise
    the set is rebuilt with one alpha call per vertex.
    """
    outcome = outcome or alpha(t, config)
    chosen = sorted(v for v, primed in outcome.stable_set if not primed)
    if t.is_strong_stable(chosen) and t.total_weight(chosen) == outcome.alpha:
        return chosen

    logger.warning(f"witness set of weight {t.total_weight(chosen)} rejected, rebuilding by self-reduction")
    context = _Context(config)
    alive = set(range(t.n))
    target = outcome.alpha
    chosen = []
    for v in range(t.n):
        if v not in alive or t.weights[v] == 0:
            continue
        rest = alive & t.strong_antineighbors(v)
        if main_solve(zero_outside(t, rest), context=context).alpha + t.weights[v] == target:
            chosen.append(v)
            target -= t.weights[v]
            alive = set(rest)
        else:
            alive.discard(v)
    if target != 0:
        raise PerfectSolveError(f"self-reduction ended {target} short of alpha")
    return chosen


def verify_not_in_class(
    certificate: NotInClassCertificate,
    berge_cap: int = DEFAULT_BERGE_CAP
) -> List[str]:
    """Re-check a not-in-class certificate; empty when it is confirmed.

    The leaf is confirmed when its switchable structure is outside class F,
    when it is small enough to check and is not Berge or has a balanced
    skew-partition, or when it is neither basic nor decomposable by a
    proper 2-join or complement 2-join.
    """
    leaf = Trigraph.from_payload(certificate.leaf)
    if not classify_class_F(leaf).in_class:
        return []
    if leaf.n <= berge_cap:
        if not is_berge_small(leaf, berge_cap) or has_bsp_bf(leaf, berge_cap):
            return []
    if recognize_basic(leaf) is not None:
        return ["leaf is basic"]
    if find_proper_2join(leaf) is not None:
        return ["leaf has a proper 2-join"]
    if find_proper_complement_2join(leaf) is not None:
        return ["leaf has a proper complement 2-join"]
    return []
