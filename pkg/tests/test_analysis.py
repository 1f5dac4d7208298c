import pytest

from inequality_observatory.catalog import Verdict
from inequality_observatory.checker import (
    MonotoneFamily,
    check_backward_consistency,
    check_function_monotonicity,
    check_popoviciu_chain,
    check_power_mean_limits,
    check_rado_chain,
    monotonicity_grid,
)
from inequality_observatory.checker.analysis import split_domain
from inequality_observatory.errors import GridOutsideDomain
from inequality_observatory.means import PopoviciuConvention, WeightedTuple
from inequality_observatory.numerics import PrecisionContext

CTX = PrecisionContext()


def test_power_mean_limits_on_four_and_nine():
    report = check_power_mean_limits(WeightedTuple.of([4, 9], ctx=CTX), "1e-4", CTX)

    assert report.passed
    assert len(report.grid) == 8
    assert report.to_dict()["passed"] is True


def test_power_mean_limits_fail_with_an_impossible_tolerance():
    report = check_power_mean_limits(WeightedTuple.of([4, 9], ctx=CTX), "1e-12", CTX)

    assert report.monotone
    assert not report.max_ok
    assert not report.passed


@pytest.mark.parametrize("family", [MonotoneFamily.F, MonotoneFamily.G])
@pytest.mark.parametrize("a", [-2, "-0.5", 1, 2])
def test_exponential_families_are_monotone_and_converge(family, a):
    grid = monotonicity_grid(a, ctx=CTX)
    report = check_function_monotonicity(family, a, grid, CTX, tail_tolerance="1e-4")

    assert report.passed, report.to_dict()
    assert report.points == len(grid)


def test_zero_parameter_gives_the_constant_one():
    grid = monotonicity_grid(0, depth=6, ctx=CTX)
    report = check_function_monotonicity(MonotoneFamily.F, 0, grid, CTX)

    assert report.passed
    assert report.tail_error == 0


def test_grid_points_between_zero_and_minus_a_are_rejected():
    with pytest.raises(GridOutsideDomain):
        split_domain(1, [-3, "-0.5", 2], CTX)
    with pytest.raises(GridOutsideDomain):
        check_function_monotonicity(MonotoneFamily.G, 1, [0, 2], CTX)

    left, right = split_domain(-1, [3, -2, 2, -5], CTX)
    assert [int(x) for x in left] == [-5, -2]
    assert [int(x) for x in right] == [2, 3]


def test_rado_chain_rises_and_levels_only_on_equality_steps():
    strict = check_rado_chain(WeightedTuple.of([1, 4, 3, 7], ctx=CTX), CTX)

    assert strict.passed
    assert strict.precision_bits == 512
    assert strict.equal_links == ()

    level = check_rado_chain(WeightedTuple.of([1, 4, 2], ctx=CTX), CTX)
    assert level.passed
    assert level.equal_links == (2,)


def test_popoviciu_chain_depends_on_the_exponent_convention():
    t = WeightedTuple.of([1, 4, 2], ctx=CTX)

    assert check_popoviciu_chain(t, PopoviciuConvention.EXPONENT_WK, CTX).passed
    inverse = check_popoviciu_chain(t, "ExponentInvWk", CTX)
    assert inverse.broken_links == (2,)
    assert inverse.to_dict()["convention"] == "ExponentInvWk"


@pytest.mark.parametrize("m", [2, 3])
def test_backward_reduction_recovers_the_prefix_margin(m):
    report = check_backward_consistency(WeightedTuple.of([1, 4, 9, 16], [1, 2, 1, 3], ctx=CTX), m, CTX)

    assert report.passed
    assert report.direct_verdict is Verdict.STRICT


def test_backward_reduction_on_a_constant_prefix_is_an_equality():
    report = check_backward_consistency(WeightedTuple.of([2, 2, 5], ctx=CTX), 2, CTX)

    assert report.direct_verdict is Verdict.EQUALITY
    assert report.reduced_verdict is Verdict.EQUALITY
    assert report.passed
