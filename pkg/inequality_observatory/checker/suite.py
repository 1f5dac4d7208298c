"""Full suite: entry checks, witnesses and analysis runs aggregated into one report."""

from __future__ import annotations

import asyncio
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Awaitable, Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from ..catalog import CatalogRegistry, complementary, flipped, lookup
from ..catalog.sampling import integer, log_uniform, rng_for, uniform
from ..means import PopoviciuConvention, WeightedTuple
from ..numerics import PrecisionContext
from ..transforms import WitnessReport, get_witness, list_witnesses, verify_witness
from ..utils.hashing import report_digest
from .analysis import (
    ChainReport,
    ConsistencyReport,
    LimitReport,
    MonotoneFamily,
    MonotonicityReport,
    check_backward_consistency,
    check_function_monotonicity,
    check_popoviciu_chain,
    check_power_mean_limits,
    check_rado_chain,
    monotonicity_grid,
)
from .config import EntryPlan, SuiteConfig
from .engine import Counterexample, EntryReport, run_inequality_check, search_violation

logger = logging.getLogger(__name__)

REPORT_VERSION = "1"
MONOTONICITY_A = (-2, -1, 0, 1, 2)
TAIL_TOLERANCE = "1e-4"

T = TypeVar("T")


@dataclass(frozen=True)
class SearchResult:
    """search_violation against the flipped form of one entry."""

    key: str
    budget: int
    counterexample: Optional[Counterexample]

    @property
    def found(self) -> bool:
        return self.counterexample is not None

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"key": self.key, "budget": self.budget, "found": self.found}
        if self.counterexample is not None:
            payload["counterexample"] = self.counterexample.to_dict()
        return payload


@dataclass
class SuiteReport:
    """Aggregated suite outcome; `to_dict(include_wall_time=False)` is byte-stable per config."""

    seed: int
    precision_bits: int
    config: Dict[str, Any]
    entries: List[EntryReport] = field(default_factory=list)
    witnesses: List[WitnessReport] = field(default_factory=list)
    limits: List[LimitReport] = field(default_factory=list)
    monotonicity: List[MonotonicityReport] = field(default_factory=list)
    chains: List[ChainReport] = field(default_factory=list)
    consistency: List[ConsistencyReport] = field(default_factory=list)
    search: List[SearchResult] = field(default_factory=list)
    wall_time: float = 0.0
    version: str = REPORT_VERSION

    @property
    def violations(self) -> int:
        return sum(e.counts.violated for e in self.entries)

    @property
    def witness_failures(self) -> int:
        return sum(len(w.failures) for w in self.witnesses)

    @property
    def passed(self) -> bool:
        groups: Sequence[Sequence[Any]] = (
            self.entries,
            self.witnesses,
            self.limits,
            self.monotonicity,
            self.chains,
            self.consistency,
        )
        return all(item.passed for group in groups for item in group)

    def to_dict(self, include_wall_time: bool = True) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "version": self.version,
            "seed": self.seed,
            "precision_bits": self.precision_bits,
            "config": self.config,
            "entries": [e.to_dict() for e in self.entries],
            "witnesses": [w.to_dict() for w in self.witnesses],
            "limits": [r.to_dict() for r in self.limits],
            "monotonicity": [r.to_dict() for r in self.monotonicity],
            "chains": [r.to_dict() for r in self.chains],
            "consistency": [r.to_dict() for r in self.consistency],
            "search": [r.to_dict() for r in self.search],
            "violations": self.violations,
            "witness_failures": self.witness_failures,
            "passed": self.passed,
        }
        if include_wall_time:
            payload["wall_time"] = round(self.wall_time, 3)
        return payload

    def digest(self) -> str:
        return report_digest(self.to_dict(include_wall_time=False))


def limit_tuple(rng: np.random.Generator, ctx: PrecisionContext) -> WeightedTuple:
    """Tuple with max/min ratio <= 100 whose extreme values each carry weight share 0.45 (0.5 for n = 2).

    M^[+-1e4] then sits within -log(0.45)*1e-4 < 1e-4 relative of max and min.
    """
    n = integer(rng, 2, 6)
    low = log_uniform(rng, ctx)
    high = low * log_uniform(rng, ctx, 1.01, 100.0)
    middle = [low + (high - low) * uniform(rng, ctx, 0.05, 0.95) for _ in range(n - 2)]
    if n == 2:
        weights = [ctx.mp.mpf("0.5")] * 2
    else:
        raw = [uniform(rng, ctx, 0.5, 1.0) for _ in middle]
        share = ctx.mp.mpf("0.1") / ctx.mp.fsum(raw)
        weights = [ctx.mp.mpf("0.45"), ctx.mp.mpf("0.45")] + [r * share for r in raw]
    return WeightedTuple(tuple([low, high] + middle), tuple(weights))


def chain_tuple(rng: np.random.Generator, ctx: PrecisionContext, n: int) -> WeightedTuple:
    """Positive weighted tuple whose first two entries differ."""
    values = [log_uniform(rng, ctx) for _ in range(n)]
    while values[1] == values[0]:
        values[1] = log_uniform(rng, ctx)
    return WeightedTuple(tuple(values), tuple(log_uniform(rng, ctx) for _ in range(n)))


def _entry_jobs(
    config: SuiteConfig, ctx: PrecisionContext, registry: Optional[CatalogRegistry]
) -> List[Callable[[], EntryReport]]:
    jobs: List[Callable[[], EntryReport]] = []
    for plan in config.entries:
        d = lookup(plan.name, ctx=ctx, registry=registry)
        jobs.append(lambda d=d, plan=plan: run_inequality_check(d, config, plans=plan.plans, ctx=ctx))
        if config.include_complements and d.has_complement:
            c = complementary(d)
            plans = plan.complement_plans or ({},)
            jobs.append(lambda c=c, plans=plans: run_inequality_check(c, config, plans=plans, ctx=ctx))
    return jobs


def _witness_jobs(config: SuiteConfig, ctx: PrecisionContext) -> List[Callable[[], WitnessReport]]:
    if config.witnesses is None:
        chosen = list_witnesses()
    else:
        chosen = [get_witness(name) for name in config.witnesses]
    return [lambda w=w: verify_witness(w, config.witness_samples, config.seed, ctx) for w in chosen]


def _search_jobs(
    config: SuiteConfig, ctx: PrecisionContext, registry: Optional[CatalogRegistry]
) -> List[Callable[[], SearchResult]]:
    if config.search_budget <= 0:
        return []

    def job(plan: EntryPlan) -> SearchResult:
        d = flipped(lookup(plan.name, ctx=ctx, registry=registry))
        found = search_violation(d, config.search_budget, config.seed, ctx, plans=plan.plans)
        return SearchResult(d.key, config.search_budget, found)

    return [lambda plan=plan: job(plan) for plan in config.entries]


def _limits(config: SuiteConfig, ctx: PrecisionContext) -> List[LimitReport]:
    reports = []
    for index in range(config.limit_tuples):
        t = limit_tuple(rng_for(config.seed, "limits", index), ctx)
        reports.append(check_power_mean_limits(t, config.limit_tolerance, ctx))
    return reports


def _monotonicity(ctx: PrecisionContext) -> List[MonotonicityReport]:
    return [
        check_function_monotonicity(family, a, monotonicity_grid(a, ctx=ctx), ctx, tail_tolerance=TAIL_TOLERANCE)
        for a in MONOTONICITY_A
        for family in MonotoneFamily
    ]


def _chains(config: SuiteConfig, ctx: PrecisionContext) -> Tuple[List[ChainReport], List[ConsistencyReport]]:
    chains: List[ChainReport] = []
    consistency: List[ConsistencyReport] = []
    for index in range(config.chain_tuples):
        rng = rng_for(config.seed, "chains", index)
        t = chain_tuple(rng, ctx, integer(rng, 2, 10))
        chains.append(check_rado_chain(t, ctx))
        chains.append(check_popoviciu_chain(t, PopoviciuConvention.EXPONENT_WK, ctx))
        rng = rng_for(config.seed, "consistency", index)
        n = integer(rng, 3, 8)
        m = integer(rng, 2, n - 1)
        consistency.append(check_backward_consistency(chain_tuple(rng, ctx, n), m, ctx))
    return chains, consistency


async def _gather(jobs: Sequence[Callable[[], T]], workers: int) -> List[T]:
    """Run blocking jobs in threads, at most `workers` at a time; results keep job order."""
    semaphore = asyncio.Semaphore(workers)

    async def run(job: Callable[[], T]) -> T:
        async with semaphore:
            return await asyncio.to_thread(job)

    tasks: List[Awaitable[T]] = [run(job) for job in jobs]
    return list(await asyncio.gather(*tasks))


async def run_suite_async(
    config: Optional[SuiteConfig] = None, *, registry: Optional[CatalogRegistry] = None
) -> SuiteReport:
    """Entries and searches resolve names in registry (the default catalog when None)."""
    config = config or SuiteConfig.default()
    ctx = config.ctx
    started = time.perf_counter()
    entries = await _gather(_entry_jobs(config, ctx, registry), config.workers)
    witnesses = await _gather(_witness_jobs(config, ctx), config.workers)
    search = await _gather(_search_jobs(config, ctx, registry), config.workers)
    chains, consistency = _chains(config, ctx)
    report = SuiteReport(
        seed=config.seed,
        precision_bits=config.precision_bits,
        config=config.to_dict(),
        entries=entries,
        witnesses=witnesses,
        limits=_limits(config, ctx),
        monotonicity=_monotonicity(ctx),
        chains=chains,
        consistency=consistency,
        search=search,
    )
    report.wall_time = time.perf_counter() - started
    logger.info(
        "suite seed=%d: %d violation(s), %d witness failure(s), passed=%s in %.1fs",
        config.seed,
        report.violations,
        report.witness_failures,
        report.passed,
        report.wall_time,
    )
    return report


def run_suite(config: Optional[SuiteConfig] = None, *, registry: Optional[CatalogRegistry] = None) -> SuiteReport:
    """Synchronous entry point around run_suite_async."""
    return asyncio.run(run_suite_async(config, registry=registry))
