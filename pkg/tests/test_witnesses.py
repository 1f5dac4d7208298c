import pytest

from inequality_observatory.catalog import Point
from inequality_observatory.errors import (
    BadIndex,
    DegenerateExponents,
    PointOutsideValidity,
    UnknownName,
    UnsupportedDirection,
)
from inequality_observatory.means import WeightedTuple, arithmetic_mean, geometric_mean
from inequality_observatory.numerics import PrecisionContext
from inequality_observatory.transforms import (
    Derivation,
    MapDirection,
    apply_witness,
    backward_reduce,
    corrupted,
    get_witness,
    holder_to_liapunov,
    liapunov_exponent,
    liapunov_to_holder,
    list_witnesses,
    points_close,
    reduced_margin,
    verify_witness,
)

CTX = PrecisionContext()
WITNESS_NAMES = [w.name for w in list_witnesses()]


def test_registry_holds_every_witness_once():
    assert len(WITNESS_NAMES) == 23
    assert len(set(WITNESS_NAMES)) == 23
    assert WITNESS_NAMES[0] == "W_NORMALIZE"
    with pytest.raises(UnknownName):
        get_witness("W_MISSING")


def test_reflect_maps_one_half_to_minus_one_half():
    mapped = apply_witness(get_witness("W_REFLECT"), Point.of((1, "0.5"), ctx=CTX), ctx=CTX)

    assert points_close(mapped, Point.of(("-0.5", "0.5"), ctx=CTX), CTX)
    back = apply_witness(get_witness("W_REFLECT"), mapped, MapDirection.BACKWARD, ctx=CTX)
    assert points_close(back, Point.of((1, "0.5"), ctx=CTX), CTX)


def test_apply_rejects_points_off_the_validity_set():
    with pytest.raises(PointOutsideValidity):
        apply_witness(get_witness("W_REFLECT"), Point.of(("-0.5", "0.5"), ctx=CTX), ctx=CTX)


def test_one_way_witness_has_no_backward_map():
    w = get_witness("W_NORMALIZE")

    assert w.directions == (MapDirection.FORWARD,)
    assert not w.two_way
    t = WeightedTuple.of([1, 2, 3, 4, 5], ctx=CTX)
    with pytest.raises(UnsupportedDirection):
        apply_witness(w, Point(tuples=(t,)), MapDirection.BACKWARD, ctx=CTX)


def test_normalize_makes_the_product_one():
    t = WeightedTuple.of([1, 2, 3], ctx=CTX)
    mapped = apply_witness(get_witness("W_NORMALIZE"), Point(tuples=(t,)), params={"n": 3}, ctx=CTX)

    assert CTX.approx_equal(CTX.mp.fprod(mapped.tuples[0].values), 1)


def test_doubling_derivation_chains_block_means():
    t = WeightedTuple.of([1, 2, 3, 4], ctx=CTX)
    derivation = apply_witness(get_witness("W_DOUBLE"), Point(tuples=(t,)), params={"k": 2}, ctx=CTX)

    assert isinstance(derivation, Derivation)
    assert len(derivation.premises) == 3
    assert len(derivation.chain) == 3
    assert CTX.approx_equal(derivation.chain[0], geometric_mean(t, CTX))
    assert CTX.approx_equal(derivation.chain[1], CTX.mp.sqrt("5.25"))
    assert CTX.approx_equal(derivation.chain[-1], "2.5")


def test_backward_reduce_replaces_the_tail_by_the_prefix_mean():
    t = WeightedTuple.of([1, 4, 9], ctx=CTX)
    reduced = backward_reduce(t, 2, CTX)

    assert reduced.values[:2] == t.values[:2]
    assert CTX.approx_equal(reduced.values[2], "2.5")
    assert CTX.approx_equal(arithmetic_mean(reduced, CTX), "2.5")
    # A_2 - G_2 of (1, 4)
    assert CTX.approx_equal(reduced_margin(t, 2, CTX), "0.5")
    with pytest.raises(BadIndex):
        backward_reduce(t, 3, CTX)
    with pytest.raises(BadIndex):
        backward_reduce(t, 1, CTX)


def test_liapunov_exponents_are_conjugate():
    p, q = liapunov_exponent(3, 2, 1, CTX)

    assert CTX.approx_equal(p, 2) and CTX.approx_equal(q, 2)
    p, q = liapunov_exponent(2, "0.5", -1, CTX)
    assert CTX.approx_equal((p - 1) * (q - 1), 1)
    with pytest.raises(DegenerateExponents):
        liapunov_exponent(2, 2, 1, CTX)


def test_liapunov_change_of_variables_round_trips():
    x = WeightedTuple.of([1, 4, 9], ["0.5", 1, 2], ctx=CTX)
    p, a, b = liapunov_to_holder(3, 2, 1, x, CTX)

    assert CTX.approx_equal(p, 2)
    assert CTX.approx_equal(a.values[1], 2)
    assert CTX.approx_equal(b.values[1], 8)
    back = holder_to_liapunov(3, 2, 1, a, b, CTX)
    assert points_close(Point(tuples=(back,)), Point(tuples=(x,)), CTX)


@pytest.mark.parametrize("seed", [1, 42])
@pytest.mark.parametrize("name", WITNESS_NAMES)
def test_every_witness_passes_sampled_verification(name, seed):
    report = verify_witness(get_witness(name), 40, seed, CTX)

    assert report.passed, [f.to_dict() for f in report.failures[:3]]
    assert report.directions == get_witness(name).directions


@pytest.mark.parametrize("name", WITNESS_NAMES)
def test_corrupted_witnesses_are_caught(name):
    report = verify_witness(corrupted(get_witness(name), 0.1), 60, 7, CTX)

    assert not report.passed
    assert report.witness.endswith("~corrupted")


@pytest.mark.parametrize("name", ["W_RADON_MAP", "W_POWER_IDENT", "W_POWER_REFLECT"])
@pytest.mark.parametrize("delta", [-0.9, -5.0])
def test_inverse_errors_are_recorded_as_failures(name, delta):
    report = verify_witness(corrupted(get_witness(name), delta), 20, 7, CTX)

    assert not report.passed
    assert any(f.reason.startswith("inverse raised") for f in report.failures)


def test_two_step_derivation_mutant_is_caught():
    report = verify_witness(corrupted(get_witness("W_DOUBLE"), 0.1), 200, 7, CTX, params={"k": 1})

    assert not report.passed
    assert verify_witness(get_witness("W_DOUBLE"), 200, 7, CTX, params={"k": 1}).passed


def test_verification_is_deterministic_and_hits_equality():
    w = get_witness("W_YOUNG")

    first = verify_witness(w, 30, 5, CTX)
    second = verify_witness(w, 30, 5, CTX)

    assert first.to_dict() == second.to_dict()
    assert first.equality_hits > 0


def test_verification_rejects_empty_sample_counts():
    with pytest.raises(ValueError):
        verify_witness(get_witness("W_REFLECT"), 0, 1, CTX)
