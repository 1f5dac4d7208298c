import pytest

from inequality_observatory.catalog import DEFAULT_CATALOG, CatalogRegistry, Verdict, complementary, flipped, list_catalog, lookup
from inequality_observatory.catalog.entries.arithmetic_geometric import GA2E
from inequality_observatory.catalog.sampling import rng_for
from inequality_observatory.checker import SuiteConfig, reverify, run_inequality_check, sample_point, search_violation
from inequality_observatory.errors import InvalidScalar
from inequality_observatory.numerics import PrecisionContext

CTX = PrecisionContext()
SMALL = SuiteConfig(samples_per_entry=12, seed=3)
NAMES = [listing.name for listing in list_catalog()]


@pytest.mark.parametrize("name", NAMES)
def test_catalog_entries_never_report_violations(name):
    entry = DEFAULT_CATALOG.get(name)
    report = run_inequality_check(lookup(name, ctx=CTX), SMALL, plans=entry.default_plans, ctx=CTX)

    assert report.passed, [c.to_dict() for c in report.counterexamples]
    assert report.counts.total == SMALL.samples_per_entry
    assert report.counts.outside == 0


@pytest.mark.parametrize("name", [n for n in NAMES if DEFAULT_CATALOG.get(n).has_complement])
def test_complements_never_report_violations(name):
    entry = DEFAULT_CATALOG.get(name)
    d = complementary(lookup(name, ctx=CTX))
    report = run_inequality_check(d, SMALL, plans=entry.complement_plans or ({},), ctx=CTX)

    assert report.passed
    assert report.side == "complement"


def test_boundary_samples_include_exact_equality_points():
    config = SuiteConfig(samples_per_entry=200, boundary_fraction=0.5, exact_fraction=0.5)
    report = run_inequality_check(lookup("GA2E", ctx=CTX), config, ctx=CTX)

    assert report.boundary_samples > 0
    assert report.exact_samples > 0
    assert report.counts.equality >= report.exact_samples


def test_checks_are_reproducible_for_a_seed():
    d = lookup("YOUNG", ctx=CTX)

    first = run_inequality_check(d, SMALL, ctx=CTX).to_dict()
    second = run_inequality_check(d, SMALL, ctx=CTX).to_dict()

    assert first == second


def test_reversed_statements_are_refuted():
    holder = lookup("HOLDER", ctx=CTX)
    found = search_violation(flipped(holder), 200, 1, CTX, plans=DEFAULT_CATALOG.get("HOLDER").default_plans)

    assert found is not None
    assert found.entry.startswith("!HOLDER")
    assert found.margin < 0


def test_reversed_ga2e_and_bernoulli_complement_are_refuted():
    assert search_violation(flipped(lookup("GA2E", ctx=CTX)), 50, 2, CTX) is not None

    reversed_complement = flipped(complementary(lookup("BERNOULLI_FULL", ctx=CTX)))
    assert search_violation(reversed_complement, 200, 2, CTX) is not None


def test_popoviciu_reciprocal_convention_has_counterexamples():
    d = lookup("POPOVICIU", {"n": 3, "convention": "ExponentInvWk"}, ctx=CTX)
    found = search_violation(d, 400, 5, CTX)

    assert found is not None
    elevated = reverify(d, found.point, CTX)
    assert elevated is not None and elevated.verdict is Verdict.VIOLATED


def test_true_statements_survive_the_search():
    assert search_violation(lookup("GA2E", ctx=CTX), 100, 3, CTX) is None


def test_search_needs_a_positive_budget():
    with pytest.raises(ValueError):
        search_violation(lookup("GA2E", ctx=CTX), 0, 1, CTX)


def test_sample_point_stays_in_validity_and_is_seeded():
    d = lookup("HOLDER_EXT", {"p": -2}, ctx=CTX)

    first = sample_point(d, rng_for(1, "sample"), CTX, boundary_fraction=0.5)
    second = sample_point(d, rng_for(1, "sample"), CTX, boundary_fraction=0.5)

    assert d.validity(first, CTX)
    assert first == second


class _HalfBrokenGA2E(GA2E):
    def formula(self, params, pt, ctx):
        x, y = pt.scalars
        if x > y:
            raise InvalidScalar("formula rejects x > y")
        return super().formula(params, pt, ctx)


def test_per_sample_errors_are_counted_not_raised():
    registry = CatalogRegistry()
    registry.register(_HalfBrokenGA2E())
    config = SuiteConfig(samples_per_entry=20, seed=1)

    report = run_inequality_check(lookup("GA2E", ctx=CTX, registry=registry), config, ctx=CTX)

    assert 0 < report.counts.errors < 20
    assert report.counts.total == 20
    assert report.to_dict()["counts"]["errors"] == report.counts.errors
    assert not report.passed


def test_entry_report_carries_its_parameters():
    report = run_inequality_check(lookup("GAN", {"n": 3}, ctx=CTX), SMALL, ctx=CTX)

    assert report.to_dict()["params"] == {"n": 3}
    assert report.counts.errors == 0
