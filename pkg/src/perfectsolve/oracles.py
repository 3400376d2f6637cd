"""Exhaustive reference oracles for small trigraphs.

Every oracle refuses inputs above the size cap, which defaults to 14 and
can be changed with the ``PERFECTSOLVE_BF_CAP`` environment variable.
"""

import os
from itertools import combinations
from typing import FrozenSet, List, Optional

from .detect import weak_fragment_of
from .errors import PreconditionError, SizeCapError
from .models import StableSetResult, WeakFragmentSplit
from .trigraph import Trigraph, anticomponents_of, complement, components_of

DEFAULT_BF_CAP = 14
BF_CAP_ENV = "PERFECTSOLVE_BF_CAP"


def bf_cap(override: Optional[int] = None) -> int:
    """The oracle size cap: ``override``, else the environment, else the default."""
    if override is not None:
        return override
    value = os.environ.get(BF_CAP_ENV)
    return int(value) if value else DEFAULT_BF_CAP


def _check_cap(t: Trigraph, cap: Optional[int], what: str) -> None:
    limit = bf_cap(cap)
    if t.n > limit:
        raise SizeCapError(t.n, limit, what)


def alpha_bf(t: Trigraph, cap: Optional[int] = None) -> StableSetResult:
    """Maximum-weight strong stable set by enumerating every strong stable set."""
    _check_cap(t, cap, "alpha_bf")
    anti = [t.strong_antineighbors(v) for v in range(t.n)]
    best_value, best_set = 0, []

    def extend(start: int, chosen: List[int], weight: int, allowed: FrozenSet[int]) -> None:
        nonlocal best_value, best_set
        if weight > best_value:
            best_value, best_set = weight, list(chosen)
        for v in range(start, t.n):
            if v in allowed:
                chosen.append(v)
                extend(v + 1, chosen, weight + t.weights[v], allowed & anti[v])
                chosen.pop()

    extend(0, [], 0, frozenset(range(t.n)))
    return StableSetResult(value=best_value, vertices=best_set)


def omega_bf(t: Trigraph, cap: Optional[int] = None) -> StableSetResult:
    """Maximum-weight strong clique."""
    _check_cap(t, cap, "omega_bf")
    return alpha_bf(complement(t), cap)


def chi_bf(g: Trigraph, cap: Optional[int] = None) -> int:
    """Chromatic number of a graph by backtracking over k = 1, 2, ..."""
    _check_cap(g, cap, "chi_bf")
    if not g.is_graph:
        raise PreconditionError("chi_bf needs a graph (no switchable pairs)")
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: -len(g.strong_neighbors(v)))

    def colorable(k: int) -> bool:
        colors = {}

        def place(i: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            used = {colors[u] for u in g.strong_neighbors(v) if u in colors}
            for c in range(min(k, len(set(colors.values())) + 1)):
                if c not in used:
                    colors[v] = c
                    if place(i + 1):
                        return True
                    del colors[v]
            return False

        return place(0)

    return next(k for k in range(1, g.n + 1) if colorable(k))


def _has_odd_path(t: Trigraph, ends: FrozenSet[int], interior: FrozenSet[int]) -> bool:
    """Odd path of length > 1 with both ends in ``ends`` and interior in ``interior``."""
    adjacent = [t.neighbors(v) for v in range(t.n)]
    anti = [t.antineighbors(v) for v in range(t.n)]

    def extend(path: List[int]) -> bool:
        last = path[-1]
        for v in sorted(adjacent[last]):
            if v in path or any(v not in anti[p] for p in path[:-1]):
                continue
            if v in ends:
                length = len(path)
                if length >= 3 and length % 2 == 1 and v > path[0]:
                    return True
                continue
            if v in interior:
                path.append(v)
                if extend(path):
                    return True
                path.pop()
        return False

    return any(extend([b]) for b in sorted(ends))


def is_balanced(t: Trigraph, a: FrozenSet[int], b: FrozenSet[int]) -> bool:
    """No odd path of length > 1 with ends in B and interior in A, and the same for antipaths with A and B swapped."""
    return not _has_odd_path(t, b, a) and not _has_odd_path(complement(t), a, b)


def has_bsp_bf(t: Trigraph, cap: Optional[int] = None) -> bool:
    """True when some partition (A, B) is a balanced skew-partition."""
    _check_cap(t, cap, "has_bsp_bf")
    everything = frozenset(range(t.n))
    for size in range(1, t.n - 1):
        for chosen in combinations(range(t.n), size):
            b = frozenset(chosen)
            a = everything - b
            if len(components_of(t, a)) < 2 or len(anticomponents_of(t, b)) < 2:
                continue
            if is_balanced(t, a, b):
                return True
    return False


def weak_fragments_bf(t: Trigraph, cap: Optional[int] = None) -> List[WeakFragmentSplit]:
    """Every weak fragment with its split, by testing every vertex subset."""
    _check_cap(t, cap, "weak_fragments_bf")
    found = []
    for size in range(4, t.n - 3):
        for chosen in combinations(range(t.n), size):
            split = weak_fragment_of(t, chosen)
            if split is not None:
                found.append(split)
    return found
