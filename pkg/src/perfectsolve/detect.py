"""Forcing-based detection of 2-joins, complement 2-joins, homogeneous pairs and ends."""

import logging
from collections import deque
from typing import Iterable, Iterator, List, Optional, Set, Tuple

from .blocks import Block, build_block, build_block_homogeneous
from .errors import PreconditionError
from .models import (
    ForcingMode, Fragment, FragmentKind, HomogeneousPairSplit, Parity,
    ProperQuadruple, TwoJoinSplit, WeakFragmentSplit
)
from .trigraph import (
    STRONG_ANTIEDGE, STRONG_EDGE, SWITCHABLE, Trigraph, complement,
    components_of, find_path_parity
)

logger = logging.getLogger(__name__)

MIN_SIDE = 4

_AB = "ab"
_A = "a"
_B = "b"
_EPS = "eps"


class _NoFragment(Exception):
    """Raised inside the forcing procedure when no compatible fragment exists."""


def iter_quadruples(t: Trigraph) -> Iterator[Tuple[int, int, int, int]]:
    """Proper 4-tuples (a1, b1, a2, b2) in lexicographic order."""
    for a1 in range(t.n):
        for b1 in range(t.n):
            if b1 == a1:
                continue
            a2_choices = sorted(t.strong_neighbors(a1) & t.strong_antineighbors(b1))
            b2_choices = sorted(t.strong_neighbors(b1) & t.strong_antineighbors(a1))
            for a2 in a2_choices:
                for b2 in b2_choices:
                    yield a1, b1, a2, b2


def enumerate_quadruples(t: Trigraph) -> List[ProperQuadruple]:
    return [ProperQuadruple(a1=a1, b1=b1, a2=a2, b2=b2) for a1, b1, a2, b2 in iter_quadruples(t)]


def _is_proper(t: Trigraph, z: ProperQuadruple) -> bool:
    if len({z.a1, z.b1, z.a2, z.b2}) != 4:
        return False
    return (
        t.theta[z.a1, z.a2] == STRONG_EDGE and t.theta[z.b1, z.b2] == STRONG_EDGE
        and t.theta[z.a1, z.b2] == STRONG_ANTIEDGE and t.theta[z.b1, z.a2] == STRONG_ANTIEDGE
    )


class ForcingState:
    """State of one run of the forcing procedure for a proper 4-tuple.

    ``r`` grows from the seed, ``s`` is its complement, ``a`` and ``b`` are
    the strong neighborhoods in ``s`` of the a1 and b1 classes. Every move
    is forced: any compatible weak fragment containing the seed contains
    ``r``.
    """

    def __init__(
        self,
        t: Trigraph,
        z: ProperQuadruple,
        r0: Iterable[int],
        mode: ForcingMode = ForcingMode.UNKNOWN
    ):
        self.t = t
        self.z = z
        self.r: Set[int] = set(r0)
        self.s: Set[int] = set(range(t.n)) - self.r
        self.a: Set[int] = set(t.strong_neighbors(z.a1)) & self.s
        self.b: Set[int] = set(t.strong_neighbors(z.b1)) & self.s
        self.mode = mode
        self.pair_reads = 0
        self.marks = {}
        near_a2, near_b2 = t.strong_neighbors(z.a2), t.strong_neighbors(z.b2)
        for v in range(t.n):
            if v in (z.a1, z.b1, z.a2, z.b2):
                continue
            if v in near_a2 and v in near_b2:
                self.marks[v] = _AB
            elif v in near_a2:
                self.marks[v] = _A
            elif v in near_b2:
                self.marks[v] = _B
            else:
                self.marks[v] = _EPS
        self.pending = deque(sorted(v for v in self.r if v in self.marks))

    def move(self, vertices: Iterable[int]) -> None:
        moved = set(vertices) & self.s
        if moved & {self.z.a2, self.z.b2}:
            raise _NoFragment()
        self.r |= moved
        self.s -= moved
        self.a -= moved
        self.b -= moved
        self.pending.extend(sorted(v for v in moved if v in self.marks))

    def explore(self, x: int) -> None:
        t = self.t
        mark = self.marks[x]
        self.pair_reads += t.n
        if mark == _AB and self.mode == ForcingMode.UNKNOWN:
            self.mode = ForcingMode.COMPLEMENT_TWO_JOIN
            self.move(self.s - (self.a | self.b))
        if mark == _AB and self.mode == ForcingMode.COMPLEMENT_TWO_JOIN:
            self.move(t.antineighbors(x) & self.s)
        if mark == _AB and self.mode == ForcingMode.TWO_JOIN:
            raise _NoFragment()
        if mark == _A:
            self.move(self.a ^ (t.strong_neighbors(x) & self.s))
            self.move(t.switchable_neighbors(x) & self.s)
        if mark == _B:
            self.move(self.b ^ (t.strong_neighbors(x) & self.s))
            self.move(t.switchable_neighbors(x) & self.s)
        if mark == _EPS and self.mode == ForcingMode.UNKNOWN:
            self.mode = ForcingMode.TWO_JOIN
            self.move(self.a & self.b)
        if mark == _EPS and self.mode == ForcingMode.TWO_JOIN:
            self.move(t.neighbors(x) & self.s)
        if mark == _EPS and self.mode == ForcingMode.COMPLEMENT_TWO_JOIN:
            raise _NoFragment()

    def run(self) -> Optional[WeakFragmentSplit]:
        z, t = self.z, self.t
        try:
            preset = self.mode == ForcingMode.TWO_JOIN
            self.move(t.switchable_neighbors(z.a1) & self.s)
            self.move(t.switchable_neighbors(z.b1) & self.s)
            if preset:
                self.move(self.a & self.b)
            explored = set()
            while self.pending:
                x = self.pending.popleft()
                if x in explored:
                    continue
                explored.add(x)
                self.explore(x)
        except _NoFragment:
            logger.debug(f"forcing from {z}: no fragment after {self.pair_reads} pair reads")
            return None
        logger.debug(f"forcing from {z}: |R|={len(self.r)} after {self.pair_reads} pair reads")
        if len(self.r) < MIN_SIDE or len(self.s) < MIN_SIDE:
            return None
        return self._split()

    def _split(self) -> Optional[WeakFragmentSplit]:
        t, z = self.t, self.z
        near_a2, near_b2 = t.strong_neighbors(z.a2), t.strong_neighbors(z.b2)
        r = self.r
        d2 = self.a & self.b
        sets = dict(
            a1=sorted(v for v in r if v in near_a2 and v not in near_b2),
            b1=sorted(v for v in r if v in near_b2 and v not in near_a2),
            c1=sorted(v for v in r if v not in near_a2 and v not in near_b2),
            d1=sorted(v for v in r if v in near_a2 and v in near_b2),
            a2=sorted(self.a - d2),
            b2=sorted(self.b - d2),
            c2=sorted(self.s - (self.a | self.b)),
            d2=sorted(d2),
        )
        kind = _kind_of(sets, prefer=self.mode)
        if kind is None:
            return None
        split = WeakFragmentSplit(kind=kind, **sets)
        if weak_fragment_violations(t, split):
            return None
        return split


def _kind_of(sets: dict, prefer: ForcingMode = ForcingMode.UNKNOWN) -> Optional[FragmentKind]:
    two_join = not sets["d1"] and not sets["d2"]
    co_two_join = not sets["c1"] and not sets["c2"]
    if two_join and co_two_join:
        if prefer == ForcingMode.COMPLEMENT_TWO_JOIN:
            return FragmentKind.COMPLEMENT_TWO_JOIN
        return FragmentKind.TWO_JOIN
    if two_join:
        return FragmentKind.TWO_JOIN
    if co_two_join:
        return FragmentKind.COMPLEMENT_TWO_JOIN
    if not sets["c1"] and not sets["d1"] and sets["c2"] and sets["d2"]:
        return FragmentKind.HOMOGENEOUS_PAIR
    return None


def forcing(
    t: Trigraph,
    z: ProperQuadruple,
    r0: Iterable[int],
    mode: ForcingMode = ForcingMode.UNKNOWN
) -> Optional[WeakFragmentSplit]:
    """Minimal weak fragment containing ``r0`` and compatible with ``z``, or None."""
    seed = set(r0)
    if not _is_proper(t, z):
        raise PreconditionError(f"{z} is not a proper 4-tuple")
    if z.a1 not in seed or z.b1 not in seed or z.a2 in seed or z.b2 in seed:
        raise PreconditionError("seed must contain a1 and b1 and avoid a2 and b2")
    if len(seed) < 3:
        raise PreconditionError("seed must have at least three vertices")
    return ForcingState(t, z, seed, mode).run()


def _strongly_complete(t: Trigraph, left: Iterable[int], right: Iterable[int]) -> bool:
    right = list(right)
    return all(t.theta[u, v] == STRONG_EDGE for u in left for v in right)


def _strongly_anticomplete(t: Trigraph, left: Iterable[int], right: Iterable[int]) -> bool:
    right = list(right)
    return all(t.theta[u, v] == STRONG_ANTIEDGE for u in left for v in right)


def weak_fragment_violations(t: Trigraph, split: WeakFragmentSplit) -> List[str]:
    """Failed weak-fragment conditions; empty when ``split`` is a valid split."""
    parts = [split.a1, split.b1, split.c1, split.d1, split.a2, split.b2, split.c2, split.d2]
    flat = [v for part in parts for v in part]
    if len(flat) != len(set(flat)) or set(flat) != set(range(t.n)):
        return ["the eight sets do not partition the vertices"]
    problems = []
    checks = (
        (_strongly_complete, split.a1, split.a2 + split.d2, "A1 not strongly complete to A2 u D2"),
        (_strongly_anticomplete, split.a1, split.b2 + split.c2, "A1 not strongly anticomplete to B2 u C2"),
        (_strongly_complete, split.b1, split.b2 + split.d2, "B1 not strongly complete to B2 u D2"),
        (_strongly_anticomplete, split.b1, split.a2 + split.c2, "B1 not strongly anticomplete to A2 u C2"),
        (_strongly_anticomplete, split.c1, split.a2 + split.b2 + split.c2, "C1 not strongly anticomplete to A2 u B2 u C2"),
        (_strongly_complete, split.d1, split.a2 + split.b2 + split.d2, "D1 not strongly complete to A2 u B2 u D2"),
    )
    for check, left, right, message in checks:
        if not check(t, left, right):
            problems.append(message)
    if len(split.x) < MIN_SIDE or len(split.rest) < MIN_SIDE:
        problems.append("both sides need at least four vertices")
    if not (split.a1 and split.b1 and split.a2 and split.b2):
        problems.append("A1, B1, A2 and B2 must be nonempty")
    sets = split.model_dump()
    kind = _kind_of(sets)
    if kind is None:
        problems.append("C/D emptiness pattern matches no fragment type")
    elif split.kind != kind and not (
        not split.c1 and not split.c2 and not split.d1 and not split.d2
    ):
        problems.append(f"pattern is {kind.value}, split says {split.kind.value}")
    return problems


def weak_fragment_of(t: Trigraph, x: Iterable[int]) -> Optional[WeakFragmentSplit]:
    """Split for ``x`` if it is a weak fragment, found from the rows of ``x`` across the cut."""
    inside = sorted(set(x))
    outside = [v for v in range(t.n) if v not in set(inside)]
    if len(inside) < MIN_SIDE or len(outside) < MIN_SIDE:
        return None
    rows = {}
    for v in inside:
        row = t.theta[v, outside]
        if (row == SWITCHABLE).any():
            return None
        rows[v] = frozenset(u for u, value in zip(outside, row) if value == STRONG_EDGE)
    full = frozenset(outside)
    patterns = sorted({p for p in rows.values() if p and p != full}, key=lambda p: min(
        v for v in inside if rows[v] == p
    ))
    if len(patterns) != 2:
        return None
    p, q = patterns
    sets = dict(
        a1=[v for v in inside if rows[v] == p],
        b1=[v for v in inside if rows[v] == q],
        c1=[v for v in inside if not rows[v]],
        d1=[v for v in inside if rows[v] == full],
        a2=sorted(p - q),
        b2=sorted(q - p),
        c2=sorted(full - p - q),
        d2=sorted(p & q),
    )
    kind = _kind_of(sets)
    if kind is None:
        return None
    split = WeakFragmentSplit(kind=kind, **sets)
    if weak_fragment_violations(t, split):
        return None
    return split


def is_compatible(split: WeakFragmentSplit, z: ProperQuadruple) -> bool:
    """True when ``z`` sits in (A1, B1, A2, B2), in either A/B orientation."""
    straight = z.a1 in split.a1 and z.b1 in split.b1 and z.a2 in split.a2 and z.b2 in split.b2
    swapped = z.a1 in split.b1 and z.b1 in split.a1 and z.a2 in split.b2 and z.b2 in split.a2
    return straight or swapped


def _is_length_two_path(t: Trigraph, side: List[int], a: int, b: int) -> bool:
    if len(side) != 3:
        return False
    (c,) = [v for v in side if v not in (a, b)]
    return (
        t.theta[a, b] == STRONG_ANTIEDGE and t.theta[a, c] != STRONG_ANTIEDGE
        and t.theta[c, b] != STRONG_ANTIEDGE
    )


def verify_2join(
    t: Trigraph,
    s: TwoJoinSplit,
    require_class_invariants: bool = False
) -> List[str]:
    """Failed 2-join conditions of ``s``; empty when the split is a valid proper 2-join.

    Complemented splits are checked in the complement. With
    ``require_class_invariants`` the structural consequences that hold for
    in-class trigraphs are checked too, including ``|X_i| >= 4``.
    """
    base = complement(t) if s.complemented else t
    parts = [s.a1, s.b1, s.c1, s.a2, s.b2, s.c2]
    flat = [v for part in parts for v in part]
    if len(flat) != len(set(flat)) or set(flat) != set(range(t.n)):
        return ["the six sets do not partition the vertices"]
    if not (s.a1 and s.b1 and s.a2 and s.b2):
        return ["A1, B1, A2 and B2 must be nonempty"]

    problems = []
    x1, x2 = set(s.x1), set(s.x2)
    if any((u in x1) != (v in x1) for u, v in base.switchable_pairs()):
        problems.append("a switchable pair meets both X1 and X2")
    a1, b1, a2, b2 = set(s.a1), set(s.b1), set(s.a2), set(s.b2)
    for u in sorted(x1):
        for v in sorted(x2):
            expected = STRONG_EDGE if (u in a1 and v in a2) or (u in b1 and v in b2) else STRONG_ANTIEDGE
            if base.theta[u, v] != expected:
                problems.append(f"pair ({u}, {v}) across the 2-join has the wrong adjacency")
                break
        else:
            continue
        break

    sides = ((1, s.a1, s.b1, s.c1), (2, s.a2, s.b2, s.c2))
    for i, a, b, c in sides:
        side = sorted(a + b + c)
        if len(side) < 3:
            problems.append(f"|X{i}| < 3")
            continue
        if len(a) == 1 and len(b) == 1 and _is_length_two_path(base, side, a[0], b[0]):
            problems.append(f"X{i} is a path of length two between A{i} and B{i}")
        for part in components_of(base, side):
            if not set(part) & set(a) or not set(part) & set(b):
                problems.append(f"a component of X{i} misses A{i} or B{i}")
                break

    if not problems:
        parities = [find_path_parity(base, a, b, c) for _, a, b, c in sides]
        if Parity.NOT_FOUND in parities:
            problems.append("no path from A to B through C on some side")
        elif parities[0] != parities[1]:
            problems.append("path parities of the two sides disagree")
        elif s.parity != Parity.NOT_FOUND and s.parity != parities[0]:
            problems.append(f"split claims {s.parity.value} parity, paths are {parities[0].value}")

    if require_class_invariants:
        problems.extend(_class_invariant_violations(base, sides))
    return problems


def _class_invariant_violations(base: Trigraph, sides) -> List[str]:
    problems = []
    for i, a, b, c in sides:
        side = set(a) | set(b) | set(c)
        if any(not (base.neighbors(v) & side) for v in side):
            problems.append(f"a vertex of X{i} has no neighbor in X{i}")
        if any(not (base.antineighbors(v) & set(b)) for v in a):
            problems.append(f"a vertex of A{i} has no antineighbor in B{i}")
        if any(not (base.antineighbors(v) & set(a)) for v in b):
            problems.append(f"a vertex of B{i} has no antineighbor in A{i}")
        if any(not (base.neighbors(v) & (set(c) | set(b))) for v in a):
            problems.append(f"a vertex of A{i} has no neighbor in C{i} u B{i}")
        if any(not (base.neighbors(v) & (set(c) | set(a))) for v in b):
            problems.append(f"a vertex of B{i} has no neighbor in C{i} u A{i}")
        if not c and (len(a) < 2 or len(b) < 2):
            problems.append(f"C{i} is empty but |A{i}| or |B{i}| < 2")
        if len(side) < MIN_SIDE:
            problems.append(f"|X{i}| < 4")
    return problems


def _two_join_from_weak(t: Trigraph, split: WeakFragmentSplit) -> Optional[TwoJoinSplit]:
    """Convert a weak fragment of 2-join or complement 2-join type into a parity-tagged split."""
    if split.kind == FragmentKind.TWO_JOIN:
        s = TwoJoinSplit(a1=split.a1, b1=split.b1, c1=split.c1, a2=split.a2, b2=split.b2, c2=split.c2)
    elif split.kind == FragmentKind.COMPLEMENT_TWO_JOIN:
        s = TwoJoinSplit(
            a1=split.a1, b1=split.b1, c1=split.d1,
            a2=split.b2, b2=split.a2, c2=split.d2,
            complemented=True
        )
    else:
        return None
    base = complement(t) if s.complemented else t
    parity = find_path_parity(base, s.a1, s.b1, s.c1)
    if parity == Parity.NOT_FOUND:
        return None
    return s.model_copy(update={"parity": parity})


def find_proper_2join(t: Trigraph) -> Optional[TwoJoinSplit]:
    """First proper 2-join found by forcing over proper 4-tuples and third seed vertices.

    Each 2-join is met in one orientation only: ``a1`` is the smallest of
    the four seed vertices.
    """
    if t.n < 2 * MIN_SIDE:
        return None
    for a1, b1, a2, b2 in iter_quadruples(t):
        if a1 > min(b1, a2, b2):
            continue
        z = ProperQuadruple(a1=a1, b1=b1, a2=a2, b2=b2)
        for u in range(t.n):
            if u in (a1, b1, a2, b2):
                continue
            weak = ForcingState(t, z, {a1, b1, u}, ForcingMode.TWO_JOIN).run()
            if weak is None or weak.kind != FragmentKind.TWO_JOIN:
                continue
            split = _two_join_from_weak(t, weak)
            if split is not None and not verify_2join(t, split, require_class_invariants=True):
                logger.debug(f"2-join found from seed {z} and u={u}: X1={split.x1}")
                return split
    return None


def find_proper_complement_2join(t: Trigraph) -> Optional[TwoJoinSplit]:
    """A proper 2-join of the complement, flagged as complemented."""
    split = find_proper_2join(complement(t))
    if split is None:
        return None
    return split.model_copy(update={"complemented": True})


def homogeneous_pair_violations(t: Trigraph, split: HomogeneousPairSplit) -> List[str]:
    """Failed proper-homogeneous-pair conditions; empty when ``split`` is valid."""
    parts = [split.a, split.b, split.c, split.d, split.e, split.f]
    flat = [v for part in parts for v in part]
    if len(flat) != len(set(flat)) or set(flat) != set(range(t.n)):
        return ["the six sets do not partition the vertices"]
    problems = []
    if len(split.a) < 2 or len(split.b) < 2:
        problems.append("|A| > 1 and |B| > 1 required")
    if not (split.c and split.d and split.e and split.f):
        problems.append("C, D, E and F must all be nonempty")
    checks = (
        (_strongly_complete, split.c + split.e, split.a, "C u E not strongly complete to A"),
        (_strongly_anticomplete, split.d + split.f, split.a, "D u F not strongly anticomplete to A"),
        (_strongly_complete, split.d + split.e, split.b, "D u E not strongly complete to B"),
        (_strongly_anticomplete, split.c + split.f, split.b, "C u F not strongly anticomplete to B"),
    )
    for check, left, right, message in checks:
        if not check(t, left, right):
            problems.append(message)
    for inner, other, name in ((split.a, split.b, "A"), (split.b, split.a, "B")):
        for v in inner:
            if not (t.neighbors(v) & set(other)) or not (t.antineighbors(v) & set(other)):
                problems.append(f"a vertex of {name} lacks a neighbor or an antineighbor across the pair")
                break
    return problems


def forcing_homogeneous(
    t: Trigraph,
    seed: Tuple[int, int, int],
    r0: Iterable[int]
) -> Optional[HomogeneousPairSplit]:
    """Minimal homogeneous pair (A, B) with a1 in A, b1 in B and r0 inside A u B.

    ``a2`` stays outside, strongly complete to A and strongly anticomplete
    to B, so it fixes the side of every vertex of the pair. Outside vertices
    that are mixed or semiadjacent toward A or B are pulled in until
    nothing changes; the result is returned only if it is proper.
    """
    a1, b1, a2 = seed
    inside = set(r0)
    if a1 not in inside or b1 not in inside or a2 in inside:
        raise PreconditionError("seed must contain a1 and b1 and avoid a2")
    if t.theta[a2, a1] != STRONG_EDGE or t.theta[a2, b1] != STRONG_ANTIEDGE:
        raise PreconditionError("a2 must be strongly adjacent to a1 and strongly antiadjacent to b1")

    a_set: Set[int] = set()
    b_set: Set[int] = set()
    pending = deque(sorted(inside))
    while pending:
        v = pending.popleft()
        if v in a_set or v in b_set:
            continue
        if v == a2 or t.theta[a2, v] == SWITCHABLE:
            return None
        (a_set if t.theta[a2, v] == STRONG_EDGE else b_set).add(v)
        for o in range(t.n):
            if o in a_set or o in b_set or o in pending:
                continue
            for group in (a_set, b_set):
                values = {int(t.theta[o, u]) for u in group}
                if values and values not in ({STRONG_EDGE}, {STRONG_ANTIEDGE}):
                    pending.append(o)
                    break

    outside = [v for v in range(t.n) if v not in a_set and v not in b_set]

    def toward(v: int, group: Set[int]) -> int:
        return int(t.theta[v, next(iter(group))])

    split = HomogeneousPairSplit(
        a=sorted(a_set),
        b=sorted(b_set),
        c=[v for v in outside if toward(v, a_set) == STRONG_EDGE and toward(v, b_set) == STRONG_ANTIEDGE],
        d=[v for v in outside if toward(v, a_set) == STRONG_ANTIEDGE and toward(v, b_set) == STRONG_EDGE],
        e=[v for v in outside if toward(v, a_set) == STRONG_EDGE and toward(v, b_set) == STRONG_EDGE],
        f=[v for v in outside if toward(v, a_set) == STRONG_ANTIEDGE and toward(v, b_set) == STRONG_ANTIEDGE],
    )
    if homogeneous_pair_violations(t, split):
        return None
    return split


def _fragment_from_weak(t: Trigraph, weak: WeakFragmentSplit) -> Optional[Fragment]:
    if weak.kind == FragmentKind.HOMOGENEOUS_PAIR:
        pair = HomogeneousPairSplit(a=weak.a1, b=weak.b1, c=weak.a2, d=weak.b2, e=weak.d2, f=weak.c2)
        if homogeneous_pair_violations(t, pair):
            return None
        return Fragment(vertices=pair.inside, kind=weak.kind, homogeneous_pair=pair)
    split = _two_join_from_weak(t, weak)
    if split is None or verify_2join(t, split):
        return None
    return Fragment(vertices=split.x1, kind=weak.kind, two_join=split)


def _fragment_candidates(t: Trigraph) -> Iterator[Fragment]:
    flipped = complement(t)
    for a1, b1, a2, b2 in iter_quadruples(t):
        z = ProperQuadruple(a1=a1, b1=b1, a2=a2, b2=b2)
        for u in range(t.n):
            if u in (a1, b1, a2, b2):
                continue
            weak = ForcingState(t, z, {a1, b1, u}).run()
            if weak is not None:
                fragment = _fragment_from_weak(t, weak)
                if fragment is not None:
                    yield fragment

    for a1, b1, a2, b2 in iter_quadruples(flipped):
        z = ProperQuadruple(a1=a1, b1=b1, a2=a2, b2=b2)
        for u in range(t.n):
            if u in (a1, b1, a2, b2):
                continue
            weak = ForcingState(flipped, z, {a1, b1, u}, ForcingMode.TWO_JOIN).run()
            if weak is None or weak.kind != FragmentKind.TWO_JOIN:
                continue
            split = _two_join_from_weak(flipped, weak)
            if split is None:
                continue
            split = split.model_copy(update={"complemented": True})
            if not verify_2join(t, split):
                yield Fragment(vertices=split.x1, kind=FragmentKind.COMPLEMENT_TWO_JOIN, two_join=split)

    for a2 in range(t.n):
        for a1 in sorted(t.strong_neighbors(a2)):
            for b1 in sorted(t.strong_antineighbors(a2)):
                if b1 == a1:
                    continue
                for u in range(t.n):
                    if u in (a1, b1, a2):
                        continue
                    pair = forcing_homogeneous(t, (a1, b1, a2), {a1, b1, u})
                    if pair is not None:
                        yield Fragment(
                            vertices=pair.inside, kind=FragmentKind.HOMOGENEOUS_PAIR, homogeneous_pair=pair
                        )


def find_end(t: Trigraph) -> Optional[Tuple[Fragment, Block]]:
    """A proper fragment of minimum cardinality and its block of decomposition.

    Ties are broken by the sorted vertex list.
    """
    if t.n < 2 * MIN_SIDE:
        return None
    best: Optional[Fragment] = None
    for fragment in _fragment_candidates(t):
        if best is None or (len(fragment.vertices), fragment.vertices) < (len(best.vertices), best.vertices):
            best = fragment
    if best is None:
        return None
    logger.debug(f"end of size {len(best.vertices)} ({best.kind.value}): {best.vertices}")
    if best.homogeneous_pair is not None:
        block = build_block_homogeneous(t, best.homogeneous_pair, "inside")
    else:
        block = build_block(t, best.two_join, side=1)
    return best, block


def proper_fragment_violations(t: Trigraph, fragment: Fragment) -> List[str]:
    """Re-check a fragment against the definition of its kind."""
    if fragment.homogeneous_pair is not None:
        problems = homogeneous_pair_violations(t, fragment.homogeneous_pair)
        if sorted(fragment.vertices) != fragment.homogeneous_pair.inside:
            problems.append("fragment vertices differ from A u B")
        return problems
    if fragment.two_join is None:
        return ["fragment carries no split"]
    problems = verify_2join(t, fragment.two_join)
    if sorted(fragment.vertices) != fragment.two_join.x1:
        problems.append("fragment vertices differ from X1")
    return problems
