import asyncio
from dataclasses import replace

from inequality_observatory.catalog import DEFAULT_CATALOG
from inequality_observatory.catalog.entries.arithmetic_geometric import GA2E
from inequality_observatory.catalog.sampling import rng_for
from inequality_observatory.checker import EntryPlan, SuiteConfig, check_power_mean_limits, run_suite, run_suite_async
from inequality_observatory.checker.suite import chain_tuple, limit_tuple
from inequality_observatory.numerics import PrecisionContext

CTX = PrecisionContext()


def _tiny(**overrides):
    config = SuiteConfig(
        seed=9,
        samples_per_entry=4,
        witness_samples=4,
        limit_tuples=2,
        chain_tuples=2,
        search_budget=30,
        entries=(EntryPlan.for_entry("GA2E"), EntryPlan.for_entry("BERNOULLI_B1"), EntryPlan.for_entry("HOLDER")),
        witnesses=("W_REFLECT", "W_YOUNG"),
    )
    return replace(config, **overrides)


def test_tiny_suite_passes_and_reports_every_section():
    report = run_suite(_tiny())

    assert report.passed
    # GA2E, B1 and its complement, HOLDER and its complement
    assert len(report.entries) == 5
    assert [w.witness for w in report.witnesses] == ["W_REFLECT", "W_YOUNG"]
    assert len(report.limits) == 2
    assert len(report.monotonicity) == 10
    assert len(report.chains) == 4
    assert len(report.consistency) == 2
    assert len(report.search) == 3
    assert report.violations == 0


def test_reversed_entries_are_found_by_the_search_without_failing_the_suite():
    report = run_suite(_tiny())

    ga2e = next(result for result in report.search if result.key.startswith("!GA2E"))
    assert ga2e.found
    assert report.passed


def test_report_digest_is_stable_for_a_seed():
    first = run_suite(_tiny())
    second = run_suite(_tiny())

    assert first.digest() == second.digest()
    assert first.to_dict(include_wall_time=False) == second.to_dict(include_wall_time=False)
    assert "wall_time" in first.to_dict()


def test_worker_count_does_not_change_the_report():
    assert run_suite(_tiny(workers=1)).digest() == run_suite(_tiny(workers=3)).digest()


def test_different_seeds_give_different_reports():
    assert run_suite(_tiny(seed=1)).digest() != run_suite(_tiny(seed=2)).digest()


def test_async_runner_matches_the_sync_one():
    async def run():
        return await run_suite_async(_tiny(workers=2))

    report = asyncio.run(run())

    assert report.digest() == run_suite(_tiny()).digest()


def test_limit_tuples_pass_the_limit_check():
    for index in range(10):
        t = limit_tuple(rng_for(4, "limits", index), CTX)
        assert check_power_mean_limits(t, "1e-4", CTX).passed


def test_chain_tuples_have_distinct_leading_values():
    t = chain_tuple(rng_for(4, "chains", 0), CTX, 5)

    assert t.n == 5
    assert t.values[0] != t.values[1]


class _ShrunkGA2E(GA2E):
    def formula(self, params, pt, ctx):
        lhs, rhs = super().formula(params, pt, ctx)
        return lhs, rhs * ctx.mp.mpf("0.9")


def test_suite_with_a_corrupted_formula_reports_that_entry():
    registry = DEFAULT_CATALOG.copy()
    registry.register(_ShrunkGA2E())
    config = _tiny(samples_per_entry=40, witnesses=())

    report = run_suite(config, registry=registry)

    ga2e, *others = report.entries
    assert ga2e.name == "GA2E"
    assert ga2e.counts.violated > 0
    assert ga2e.counterexamples
    assert all(entry.passed for entry in others)
    assert report.passed is False
    assert run_suite(config).passed


def test_entry_reports_carry_their_parameters():
    payload = run_suite(_tiny()).to_dict(include_wall_time=False)

    names = [(entry["name"], entry["params"]) for entry in payload["entries"]]
    assert names[0] == ("GA2E", {})
    assert all(isinstance(params, dict) for _, params in names)
