"""Data models for trigraph solving, decomposition traces and certificates."""

from enum import Enum
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field


class SolverConfig(BaseModel):
    """Configuration for the solver and its tooling."""
    max_vertices: int = 4096
    berge_cap: int = 14
    bf_cap: int = 14
    max_concurrent: int = 4
    settings: Dict[str, Any] = {
        "cache_results": True
    }


class Parity(str, Enum):
    """Parity of the A-C-B paths of a 2-join side."""
    ODD = "odd"
    EVEN = "even"
    NOT_FOUND = "not-found"


class ComponentShape(str, Enum):
    """Shape of a switchable component."""
    SINGLE_PAIR = "single-pair"
    TWO_PAIR_PATH = "two-pair-path"
    IRREGULAR = "irregular"


class WeightClass(str, Enum):
    """Heavy/light classification of a two-pair-path component."""
    PLAIN = "plain"
    HEAVY = "heavy"
    LIGHT = "light"


class BasicClass(str, Enum):
    """The five basic trigraph classes."""
    BIPARTITE = "bipartite"
    COMPLEMENT_BIPARTITE = "complement-bipartite"
    LINE = "line"
    COMPLEMENT_LINE = "complement-line"
    DOUBLED = "doubled"


class FragmentKind(str, Enum):
    """Kind of decomposition a fragment belongs to."""
    TWO_JOIN = "two-join"
    COMPLEMENT_TWO_JOIN = "complement-two-join"
    HOMOGENEOUS_PAIR = "homogeneous-pair"


class ForcingMode(str, Enum):
    """Decomposition type the forcing procedure has committed to."""
    UNKNOWN = "unknown"
    TWO_JOIN = "two-join"
    COMPLEMENT_TWO_JOIN = "complement-two-join"


class PreLabelKind(str, Enum):
    """Decomposition kind recorded on a marker component."""
    COMPLEMENT_ODD = "complement-odd-2join"
    ODD = "odd-2join"
    COMPLEMENT_EVEN = "complement-even-2join"
    EVEN = "even-2join"


class LabelTag(str, Enum):
    """Basic class tag attached to a prelabel once its leaf is reached."""
    BIPARTITE = "bipartite"
    COMPLEMENT_OF_BIPARTITE = "complement-of-bipartite"
    LINE = "line"
    COMPLEMENT_OF_LINE = "complement-of-line"
    DOUBLED_MATCHING = "doubled-matching"
    DOUBLED_ANTIMATCHING = "doubled-antimatching"


class Violation(BaseModel):
    """A failed structural condition, anchored at some vertices."""
    vertices: List[int] = []
    reason: str


class SwitchableComponent(BaseModel):
    """A connected component of the switchable pairs."""
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...]
    shape: ComponentShape
    weight_class: WeightClass = WeightClass.PLAIN
    center: Optional[int] = None
    edge_count: int = 1


class ClassFReport(BaseModel):
    """Membership report for the switchable-structure conditions of class F."""
    in_class: bool
    violations: List[Violation] = []


class TrigraphPayload(BaseModel):
    """JSON-friendly trigraph description (0-indexed)."""
    n: int
    weights: List[int]
    strong_edges: List[Tuple[int, int]] = []
    switchable_pairs: List[Tuple[int, int]] = []


class BipartitionWitness(BaseModel):
    """Two parts, each stable in the full realization (or strong cliques for the complement class)."""
    kind: Literal["bipartition"] = "bipartition"
    left: List[int]
    right: List[int]


class LineWitness(BaseModel):
    """Root bipartite graph given by the root edge of every vertex."""
    kind: Literal["line"] = "line"
    root_nodes: int
    edge_of_vertex: List[Tuple[int, int]]
    complemented: bool = False


class PairTag(BaseModel):
    """Position of a switchable pair relative to a good partition."""
    u: int
    v: int
    tag: Literal["matching", "antimatching"]


class DoubledWitness(BaseModel):
    """A good partition (X, Y) with per-pair tags."""
    kind: Literal["doubled"] = "doubled"
    x: List[int]
    y: List[int]
    pair_tags: List[PairTag] = []


class BasicClassReport(BaseModel):
    """Recognized basic class with a checkable witness."""
    class_name: BasicClass
    witness: Union[BipartitionWitness, LineWitness, DoubledWitness] = Field(discriminator="kind")


class StableSetResult(BaseModel):
    """A strong stable set and its weight."""
    value: int
    vertices: List[int]


class ProperQuadruple(BaseModel):
    """Seed (a1, b1, a2, b2) with a1a2, b1b2 strong edges and a1b2, b1a2 strong antiedges."""
    model_config = ConfigDict(frozen=True)

    a1: int
    b1: int
    a2: int
    b2: int


class WeakFragmentSplit(BaseModel):
    """Eight-set split of a weak fragment X = A1 u B1 u C1 u D1."""
    a1: List[int]
    b1: List[int]
    c1: List[int]
    d1: List[int]
    a2: List[int]
    b2: List[int]
    c2: List[int]
    d2: List[int]
    kind: FragmentKind

    @property
    def x(self) -> List[int]:
        return sorted(self.a1 + self.b1 + self.c1 + self.d1)

    @property
    def rest(self) -> List[int]:
        return sorted(self.a2 + self.b2 + self.c2 + self.d2)


class TwoJoinSplit(BaseModel):
    """Split (A1, B1, C1, A2, B2, C2) of a 2-join, or of a 2-join of the complement."""
    a1: List[int]
    b1: List[int]
    c1: List[int]
    a2: List[int]
    b2: List[int]
    c2: List[int]
    complemented: bool = False
    parity: Parity = Parity.NOT_FOUND

    @property
    def x1(self) -> List[int]:
        return sorted(self.a1 + self.b1 + self.c1)

    @property
    def x2(self) -> List[int]:
        return sorted(self.a2 + self.b2 + self.c2)

    def side(self, which: int) -> Tuple[List[int], List[int], List[int]]:
        """Return (A, B, C) of side 1 or 2."""
        if which == 1:
            return self.a1, self.b1, self.c1
        if which == 2:
            return self.a2, self.b2, self.c2
        raise ValueError(f"side must be 1 or 2, got {which}")

    def swapped(self) -> "TwoJoinSplit":
        """The same 2-join seen from the other side."""
        return TwoJoinSplit(
            a1=self.a2, b1=self.b2, c1=self.c2,
            a2=self.a1, b2=self.b1, c2=self.c1,
            complemented=self.complemented, parity=self.parity
        )


class HomogeneousPairSplit(BaseModel):
    """Split (A, B, C, D, E, F) of a homogeneous pair."""
    a: List[int]
    b: List[int]
    c: List[int]
    d: List[int]
    e: List[int]
    f: List[int]

    @property
    def inside(self) -> List[int]:
        return sorted(self.a + self.b)


class Fragment(BaseModel):
    """A proper fragment with the split that certifies it."""
    vertices: List[int]
    kind: FragmentKind
    two_join: Optional[TwoJoinSplit] = None
    homogeneous_pair: Optional[HomogeneousPairSplit] = None


class MarkerRoles(BaseModel):
    """Vertices of a marker component by role; c is the middle vertex of a two-pair path."""
    model_config = ConfigDict(frozen=True)

    a: int
    b: int
    c: Optional[int] = None

    @property
    def vertices(self) -> Tuple[int, ...]:
        if self.c is None:
            return tuple(sorted((self.a, self.b)))
        return tuple(sorted((self.a, self.b, self.c)))


class PreLabel(BaseModel):
    """Decomposition kind plus the alpha values computed on the small side."""
    kind: PreLabelKind
    alpha_a: int = 0
    alpha_b: int = 0
    alpha_ac: int = 0
    alpha_bc: int = 0
    alpha_c: int = 0
    alpha_x: int = 0

    @property
    def is_complement(self) -> bool:
        return self.kind in (PreLabelKind.COMPLEMENT_ODD, PreLabelKind.COMPLEMENT_EVEN)

    def violations(self) -> List[str]:
        """Failed inequalities; empty when the prelabel is consistent."""
        problems = []
        values = (self.alpha_a, self.alpha_b, self.alpha_ac, self.alpha_bc, self.alpha_c, self.alpha_x)
        if any(v < 0 for v in values):
            problems.append("negative alpha value")
        if self.is_complement:
            if max(self.alpha_a, self.alpha_b) > self.alpha_x:
                problems.append("alpha_A or alpha_B exceeds alpha_X")
            return problems
        if not self.alpha_c <= min(self.alpha_ac, self.alpha_bc):
            problems.append("alpha_C exceeds alpha_AC or alpha_BC")
        if not max(self.alpha_ac, self.alpha_bc) <= self.alpha_x <= self.alpha_ac + self.alpha_bc:
            problems.append("alpha_X outside [max(alpha_AC, alpha_BC), alpha_AC + alpha_BC]")
        if self.kind == PreLabelKind.ODD and self.alpha_c + self.alpha_x > self.alpha_ac + self.alpha_bc:
            problems.append("odd inequality alpha_C + alpha_X <= alpha_AC + alpha_BC fails")
        if self.kind == PreLabelKind.EVEN and self.alpha_ac + self.alpha_bc > self.alpha_c + self.alpha_x:
            problems.append("even inequality alpha_AC + alpha_BC <= alpha_C + alpha_X fails")
        return problems


class Label(BaseModel):
    """A prelabel extended by the basic class tag of the leaf that absorbed it."""
    pre: PreLabel
    tag: LabelTag


class PrelabeledComponent(BaseModel):
    """A marker component handed to a recursive call together with its prelabel."""
    roles: MarkerRoles
    pre: PreLabel


class LabeledComponent(BaseModel):
    """A marker component with its final label."""
    roles: MarkerRoles
    label: Label


class BasicLeaf(BaseModel):
    """Trace leaf solved by a basic-class algorithm."""
    node: Literal["basic-leaf"] = "basic-leaf"
    class_name: BasicClass
    n: int
    labeled_components: int = 0
    report: Optional[BasicClassReport] = None


class DecompositionNode(BaseModel):
    """Trace node for one 2-join or complement 2-join decomposition step."""
    node: Literal["decomposition"] = "decomposition"
    kind: PreLabelKind
    n: int
    split: TwoJoinSplit
    small_side: List[int]
    small_block_size: int
    big_block_size: int
    prelabel: PreLabel
    small_calls: int
    big_calls: int
    children: List["TraceNode"] = []


TraceNode = Union[BasicLeaf, DecompositionNode]
DecompositionNode.model_rebuild()


class NotInClassCertificate(BaseModel):
    """Decomposition path plus the leaf trigraph that fits none of the cases."""
    kind: Literal["not-in-class"] = "not-in-class"
    reason: str
    path: List[str] = []
    leaf: TrigraphPayload


class SolveOutcome(BaseModel):
    """Result of the main recursion: alpha of the (masked) expansion and a witness set.

    Stable-set entries are (vertex, primed) keys of the expansion; primed
    entries are the vertices added next to a marker by the expansion.
    """
    alpha: int
    stable_set: List[Tuple[int, bool]]
    labeling: List[LabeledComponent] = []
    trace: TraceNode = Field(discriminator="node")


class AlphaReport(BaseModel):
    """Outcome of an alpha computation: the value and a witness set, or a certificate."""
    n: int
    solved: bool
    alpha: Optional[int] = None
    stable_set: List[int] = []
    trace: Optional[TraceNode] = None
    certificate: Optional[NotInClassCertificate] = None


class ColorRound(BaseModel):
    """One color class search: the cliques listed and the set that finally hit them all."""
    color: int
    cliques: List[List[int]]
    stable_set: List[int]
    hit_weights: List[int] = []
    clique_ranks: List[int] = []
    clique_number: int


class ColoringResult(BaseModel):
    """An optimal coloring with its dual witnesses."""
    kind: Literal["coloring"] = "coloring"
    color_of: List[int]
    num_colors: int
    omega: int
    max_clique: List[int]
    clique_cover: List[List[int]]
    rounds: List[ColorRound] = []


class ImperfectionCertificate(BaseModel):
    """n+1 maximum cliques with independent incidence rows, plus the stable sets that missed."""
    kind: Literal["imperfection"] = "imperfection"
    omega: int
    cliques: List[List[int]]
    failed_stable_sets: List[List[int]] = []


class DualityPair(BaseModel):
    """A stable set of size k with a partition of the vertices into k cliques."""
    kind: Literal["duality"] = "duality"
    stable_set: List[int]
    cliques: List[List[int]]


Certificate = Union[NotInClassCertificate, ImperfectionCertificate]


class RobustResult(BaseModel):
    """Either a duality pair or a certificate."""
    solved: bool
    duality: Optional[DualityPair] = None
    certificate: Optional[Certificate] = None


class GeneratorSpec(BaseModel):
    """Recipe for a composed instance."""
    seed: int = 0
    size: int = 12
    recipe: List[Literal["bipartite", "line", "path", "doubled"]] = ["bipartite", "line"]
    glue: Literal["two-join", "complement-two-join"] = "two-join"
    parity: Optional[Literal["odd", "even"]] = None
    max_weight: int = 1
    switchable_rate: float = 0.0


class InstanceReport(BaseModel):
    """Outcome of checking one corpus instance against the oracles."""
    path: str
    n: int = 0
    status: Literal["ok", "mismatch", "certificate", "skipped", "error"]
    alpha: Optional[int] = None
    alpha_bf: Optional[int] = None
    error_message: Optional[str] = None
    elapsed_ms: Optional[float] = None


class CorpusReport(BaseModel):
    """Summary of a corpus sweep."""
    instances: List[InstanceReport]
    total: int
    mismatches: int
    certificates: int
    errors: int
