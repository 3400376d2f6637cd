"""Optimal coloring of perfect graphs from the stable-set oracle, with duality and imperfection certificates."""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .decompose import alpha, extract_stable_set
from .errors import NotInClassError, PreconditionError
from .models import (
    ColoringResult, ColorRound, DualityPair, ImperfectionCertificate,
    NotInClassCertificate, RobustResult, SolverConfig
)
from .trigraph import Trigraph, complement

logger = logging.getLogger(__name__)

ColorOutcome = Union[ColoringResult, ImperfectionCertificate, NotInClassCertificate]


def _require_graph(g: Trigraph) -> None:
    if not g.is_graph:
        raise PreconditionError("coloring needs a graph (no switchable pairs)")


def _max_weight_stable(
    g: Trigraph, weights: Sequence[int], config: Optional[SolverConfig] = None
) -> Tuple[List[int], int]:
    weighted = g.with_weights(weights)
    outcome = alpha(weighted, config)
    chosen = [v for v in extract_stable_set(weighted, outcome, config) if weights[v] > 0]
    return chosen, outcome.alpha


def omega_and_max_clique(
    g: Trigraph,
    weights: Optional[Sequence[int]] = None,
    config: Optional[SolverConfig] = None
) -> Tuple[List[int], int]:
    """Maximum-weight clique, found as a maximum stable set of the complement.

    Vertices of weight 0 never appear in the returned clique.
    """
    weights = list(g.weights if weights is None else weights)
    return _max_weight_stable(complement(g), weights, config)


def stable_hitting_cliques(
    g: Trigraph,
    cliques: Sequence[Sequence[int]],
    config: Optional[SolverConfig] = None
) -> Tuple[List[int], List[int]]:
    """Stable set of maximum weight under y, where y(v) counts the listed cliques holding v.

    Returns the set and the y weights. On perfect graphs the set meets
    every listed maximum clique, i.e. its y weight equals ``len(cliques)``.
    """
    y = [0] * g.n
    for clique in cliques:
        for v in clique:
            y[v] += 1
    chosen, _ = _max_weight_stable(g, y, config)
    return chosen, y


def clique_incidence_rank(cliques: Sequence[Sequence[int]], n: int) -> int:
    """Rank over the rationals of the clique/vertex incidence matrix."""
    rows = [[Fraction(1 if v in set(c) else 0) for v in range(n)] for c in cliques]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col] / rows[rank][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def color(g: Trigraph, config: Optional[SolverConfig] = None) -> ColorOutcome:
    """Color ``g`` with omega colors, one stable set hitting every maximum clique at a time.

    For each color class the maximum cliques of the remaining graph are
    collected until a stable set meets all of them. More than ``n`` cliques
    in one search proves the graph imperfect.
    """
    _require_graph(g)
    n = g.n
    unit = [1] * n
    try:
        max_clique, omega = omega_and_max_clique(g, unit, config)
        color_of = [-1] * n
        alive = set(range(n))
        rounds: List[ColorRound] = []
        current = omega
        while alive:
            weights = [1 if v in alive else 0 for v in range(n)]
            first, current = omega_and_max_clique(g, weights, config)
            cliques = [sorted(first)]
            ranks = [1]
            failed: List[List[int]] = []
            while True:
                chosen, y = stable_hitting_cliques(g, cliques, config)
                chosen = [v for v in chosen if v in alive]
                hit = sum(y[v] for v in chosen)
                if hit < len(cliques):
                    failed.append(sorted(chosen))
                rest = [1 if v in alive and v not in chosen else 0 for v in range(n)]
                clique, rest_omega = omega_and_max_clique(g, rest, config)
                if chosen and rest_omega < current:
                    break
                cliques.append(sorted(clique))
                ranks.append(clique_incidence_rank(cliques, n))
                if ranks[-1] < len(cliques):
                    logger.error(
                        f"color class {len(rounds)}: {len(cliques)} cliques have incidence rank {ranks[-1]}"
                    )
                if len(cliques) > n:
                    logger.warning(f"color class {len(rounds)}: {len(cliques)} cliques, graph is not perfect")
                    return ImperfectionCertificate(omega=current, cliques=cliques, failed_stable_sets=failed)
            for v in chosen:
                color_of[v] = len(rounds)
            alive -= set(chosen)
            rounds.append(ColorRound(
                color=len(rounds),
                cliques=cliques,
                stable_set=sorted(chosen),
                hit_weights=[y[v] for v in sorted(chosen)],
                clique_ranks=ranks,
                clique_number=current
            ))
            logger.debug(f"color {len(rounds) - 1}: {len(chosen)} vertices after {len(cliques)} cliques")
    except NotInClassError as e:
        logger.info(f"coloring stopped: {e.certificate.reason}")
        return e.certificate

    classes = [sorted(v for v in range(n) if color_of[v] == c) for c in range(len(rounds))]
    return ColoringResult(
        color_of=color_of,
        num_colors=len(rounds),
        omega=omega,
        max_clique=sorted(max_clique),
        clique_cover=classes,
        rounds=rounds
    )


def coloring_violations(g: Trigraph, result: ColoringResult) -> List[str]:
    """Failed checks of a coloring; empty when it is proper and uses omega colors."""
    problems = []
    if any(c < 0 or c >= result.num_colors for c in result.color_of):
        problems.append("some vertex has no color")
    for u, v in g.strong_edges():
        if result.color_of[u] == result.color_of[v]:
            problems.append(f"edge ({u}, {v}) is monochromatic")
            break
    if not g.is_strong_clique(result.max_clique) or len(result.max_clique) != result.omega:
        problems.append("max_clique is not a clique of size omega")
    if result.num_colors != result.omega:
        problems.append(f"{result.num_colors} colors for omega={result.omega}")
    return problems


def verify_imperfection(g: Trigraph, certificate: ImperfectionCertificate) -> List[str]:
    """Re-check an imperfection certificate; empty when it holds."""
    problems = []
    if len(certificate.cliques) <= g.n:
        problems.append(f"{len(certificate.cliques)} cliques recorded, need at least {g.n + 1}")
    for clique in certificate.cliques:
        if len(clique) != certificate.omega or not g.is_strong_clique(clique):
            problems.append(f"{clique} is not a clique of size {certificate.omega}")
            break
    for stable in certificate.failed_stable_sets:
        if not g.is_strong_stable(stable):
            problems.append(f"{stable} is not a stable set")
        elif all(set(stable) & set(c) for c in certificate.cliques):
            problems.append(f"{stable} meets every recorded clique")
    return problems


def duality_violations(g: Trigraph, pair: DualityPair) -> List[str]:
    """Check that the stable set and the clique partition certify each other."""
    problems = []
    if not g.is_strong_stable(pair.stable_set):
        problems.append("stable set is not stable")
    covered = [v for c in pair.cliques for v in c]
    if sorted(covered) != list(range(g.n)):
        problems.append("cliques do not partition the vertices")
    if any(not g.is_strong_clique(c) for c in pair.cliques):
        problems.append("some cover part is not a clique")
    if len(pair.stable_set) != len(pair.cliques):
        problems.append(f"stable set of {len(pair.stable_set)} against {len(pair.cliques)} cliques")
    return problems


def robust_solve(g: Trigraph, config: Optional[SolverConfig] = None) -> RobustResult:
    """A stable set of size k with a partition into k cliques, or a certificate.

    A returned pair is checked directly, so it proves optimality for any
    input, perfect or not.
    """
    _require_graph(g)
    unit = g.with_weights([1] * g.n)
    try:
        stable = extract_stable_set(unit, alpha(unit, config), config)
    except NotInClassError as e:
        return RobustResult(solved=False, certificate=e.certificate)

    cover = color(complement(unit), config)
    if not isinstance(cover, ColoringResult):
        return RobustResult(solved=False, certificate=cover)

    for candidate in (stable, cover.max_clique):
        pair = DualityPair(stable_set=sorted(candidate), cliques=cover.clique_cover)
        if not duality_violations(unit, pair):
            return RobustResult(solved=True, duality=pair)
    logger.error(f"stable set of {len(stable)} and {cover.num_colors} cliques do not match")
    certificate = NotInClassCertificate(reason="stable set and clique cover sizes differ", leaf=g.payload())
    return RobustResult(solved=False, certificate=certificate)
