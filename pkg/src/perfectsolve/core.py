"""Solver orchestration: configuration, per-instance caching and corpus sweeps."""

import asyncio
import hashlib
import json
import logging
import os
import time
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Union

from .color import ColorOutcome, color, robust_solve
from .decompose import _Context, extract_stable_set, main_solve, verify_not_in_class
from .errors import NotInClassError, SizeCapError
from .formats import Format, read_trigraph
from .models import AlphaReport, CorpusReport, InstanceReport, RobustResult, SolverConfig
from .oracles import BF_CAP_ENV, alpha_bf
from .trigraph import Trigraph

logger = logging.getLogger(__name__)

INSTANCE_SUFFIXES = {".tri", ".dimacs", ".col", ".clq"}


class PerfectSolver:
    """Entry point for solving instances, with result caching and bounded concurrency for sweeps."""

    def __init__(self, config_path: Optional[str] = None):
        """Initialize the solver with configuration."""
        self.config = self._load_config(config_path)
        self._cache: Dict[str, AlphaReport] = {}
        self._semaphore = asyncio.Semaphore(self.config.max_concurrent)

    def _load_config(self, config_path: Optional[str] = None) -> SolverConfig:
        """Load configuration from JSON file."""
        if config_path is None:
            config_path = Path(__file__).parent / "solver_config.json"

        try:
            with open(config_path, 'r') as f:
                data = json.load(f)
            config = SolverConfig(**data)
        except FileNotFoundError:
            logger.warning(f"Config file not found at {config_path}, using default config")
            config = SolverConfig()

        env_cap = os.environ.get(BF_CAP_ENV)
        if env_cap:
            config.bf_cap = int(env_cap)
        return config

    def _check_size(self, t: Trigraph) -> None:
        if t.n > self.config.max_vertices:
            raise SizeCapError(t.n, self.config.max_vertices, "solver")

    @staticmethod
    def _digest(t: Trigraph) -> str:
        payload = t.structure_key() + json.dumps(t.weights).encode()
        return hashlib.sha256(payload).hexdigest()

    def solve_alpha(self, t: Trigraph) -> AlphaReport:
        """Alpha and a maximum-weight strong stable set, or a not-in-class certificate."""
        self._check_size(t)
        key = self._digest(t)
        use_cache = self.config.settings.get("cache_results", True)
        if use_cache and key in self._cache:
            return self._cache[key]

        context = _Context(self.config)
        try:
            outcome = main_solve(t, context=context)
            report = AlphaReport(
                n=t.n,
                solved=True,
                alpha=outcome.alpha,
                stable_set=extract_stable_set(t, outcome, self.config),
                trace=outcome.trace
            )
        except NotInClassError as e:
            logger.warning(f"n={t.n}: certificate emitted ({e.certificate.reason})")
            report = AlphaReport(n=t.n, solved=False, certificate=e.certificate)

        if use_cache:
            self._cache[key] = report
        return report

    def color_graph(self, g: Trigraph) -> ColorOutcome:
        """Optimal coloring of a graph, or a certificate."""
        self._check_size(g)
        return color(g, self.config)

    def robust(self, g: Trigraph) -> RobustResult:
        """Stable set and clique cover of equal size, or a certificate."""
        self._check_size(g)
        return robust_solve(g, self.config)

    def _check_file(self, path: Path, fmt: Optional[Format] = None) -> InstanceReport:
        start_time = time.time()
        t = read_trigraph(path, fmt)
        report = self.solve_alpha(t)
        elapsed = (time.time() - start_time) * 1000

        if not report.solved:
            problems = verify_not_in_class(report.certificate, self.config.berge_cap)
            if problems:
                return InstanceReport(
                    path=str(path), n=t.n, status="error", elapsed_ms=elapsed,
                    error_message=f"certificate does not verify: {problems[0]}"
                )
            return InstanceReport(path=str(path), n=t.n, status="certificate", elapsed_ms=elapsed)

        if t.n > self.config.bf_cap:
            return InstanceReport(
                path=str(path), n=t.n, status="skipped", alpha=report.alpha, elapsed_ms=elapsed
            )
        expected = alpha_bf(t, self.config.bf_cap).value
        status = "ok" if expected == report.alpha else "mismatch"
        if status == "mismatch":
            logger.error(f"{path}: alpha {report.alpha} but brute force gives {expected}")
        return InstanceReport(
            path=str(path), n=t.n, status=status, alpha=report.alpha,
            alpha_bf=expected, elapsed_ms=elapsed
        )

    async def check_instance(self, path: Union[str, Path], fmt: Optional[Format] = None) -> InstanceReport:
        """Solve one file in a worker thread and compare it with the oracle."""
        async with self._semaphore:
            return await asyncio.to_thread(self._check_file, Path(path), fmt)

    async def check_corpus(self, paths: Iterable[Union[str, Path]], fmt: Optional[Format] = None) -> CorpusReport:
        """Check every instance concurrently; failures become error records."""
        files = [Path(p) for p in paths]
        tasks = [self.check_instance(p, fmt) for p in files]
        results = await asyncio.gather(*tasks, return_exceptions=True)

        reports: List[InstanceReport] = []
        for i, result in enumerate(results):
            if isinstance(result, Exception):
                logger.error(f"Error checking {files[i]}: {result}")
                reports.append(InstanceReport(path=str(files[i]), status="error", error_message=str(result)))
            else:
                reports.append(result)

        logger.info(f"checked {len(reports)} instances")
        return CorpusReport(
            instances=reports,
            total=len(reports),
            mismatches=sum(1 for r in reports if r.status == "mismatch"),
            certificates=sum(1 for r in reports if r.status == "certificate"),
            errors=sum(1 for r in reports if r.status == "error")
        )


def collect_instances(root: Union[str, Path]) -> List[Path]:
    """Instance files under ``root`` (or ``root`` itself when it is a file)."""
    root = Path(root)
    if root.is_file():
        return [root]
    return sorted(p for p in root.rglob("*") if p.suffix.lower() in INSTANCE_SUFFIXES)


# Convenience functions for CLI usage
async def solve_file(path: str, fmt: Optional[Format] = None, config_path: Optional[str] = None) -> AlphaReport:
    """Solve the instance stored in ``path``."""
    solver = PerfectSolver(config_path)
    t = await asyncio.to_thread(read_trigraph, path, fmt)
    return await asyncio.to_thread(solver.solve_alpha, t)


async def check_corpus(root: str, fmt: Optional[Format] = None, config_path: Optional[str] = None) -> CorpusReport:
    """Check every instance under ``root`` against the oracles."""
    solver = PerfectSolver(config_path)
    return await solver.check_corpus(collect_instances(root), fmt)
