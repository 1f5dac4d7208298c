import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inequality_observatory.errors import BadIndex, DegenerateExponents, InvalidTuple
from inequality_observatory.means import (
    PopoviciuConvention,
    SignedTuple,
    WeightedTuple,
    arithmetic_mean,
    conjugate_index,
    geometric_mean,
    harmonic_mean,
    popoviciu_ratio,
    popoviciu_sequence,
    power_mean,
    quadratic_mean,
    rado_gap,
    rado_sequence,
)
from inequality_observatory.numerics import PrecisionContext

CTX = PrecisionContext()

positive = st.floats(min_value=1e-3, max_value=1e3)
tuples = st.lists(positive, min_size=1, max_size=6)


def test_classical_means_of_four_and_nine():
    t = WeightedTuple.of([4, 9], ctx=CTX)

    assert CTX.approx_equal(arithmetic_mean(t, CTX), "6.5")
    assert CTX.approx_equal(geometric_mean(t, CTX), 6)
    assert CTX.approx_equal(harmonic_mean(t, CTX), CTX.mp.mpf(72) / 13)
    assert CTX.approx_equal(quadratic_mean(t, CTX), CTX.mp.sqrt("48.5"))


def test_power_mean_special_exponents():
    t = WeightedTuple.of([1, 4, 2], [1, 2, 3], ctx=CTX)

    assert power_mean(0, t, CTX) == geometric_mean(t, CTX)
    assert CTX.approx_equal(power_mean(1, t, CTX), arithmetic_mean(t, CTX))
    assert CTX.approx_equal(power_mean(-1, t, CTX), harmonic_mean(t, CTX))
    assert power_mean("inf", t, CTX) == 4
    assert power_mean("-inf", t, CTX) == 1


def test_weights_are_relative():
    t = WeightedTuple.of([2, 8], [1, 3], ctx=CTX)
    scaled = WeightedTuple.of([2, 8], [10, 30], ctx=CTX)

    assert CTX.approx_equal(power_mean(3, t, CTX), power_mean(3, scaled, CTX))


def test_conjugate_index():
    assert conjugate_index(2, CTX) == 2
    assert CTX.approx_equal(conjugate_index(3, CTX), "1.5")
    assert CTX.approx_equal(conjugate_index("0.5", CTX), -1)
    assert conjugate_index(0, CTX) == 0
    with pytest.raises(DegenerateExponents):
        conjugate_index(1, CTX)


@settings(max_examples=40, deadline=None)
@given(p=st.floats(min_value=-20, max_value=20).filter(lambda v: abs(v - 1) > 1e-3 and abs(v) > 1e-3))
def test_conjugate_index_is_an_involution(p):
    p = CTX.scalar(p)
    q = conjugate_index(p, CTX)

    assert CTX.approx_equal((p - 1) * (q - 1), 1)
    assert CTX.approx_equal(conjugate_index(q, CTX), p)


def test_tuple_validation():
    with pytest.raises(InvalidTuple):
        WeightedTuple.of([], ctx=CTX)
    with pytest.raises(InvalidTuple):
        WeightedTuple.of([1, -2], ctx=CTX)
    with pytest.raises(InvalidTuple):
        WeightedTuple.of([1, 2], [1, 0], ctx=CTX)
    with pytest.raises(InvalidTuple):
        WeightedTuple.of([1, 2], [1], ctx=CTX)

    signed = SignedTuple.of(["-0.5", 3], ctx=CTX)
    assert signed.n == 2
    assert isinstance(signed.prefix(1), SignedTuple)
    with pytest.raises(InvalidTuple):
        SignedTuple.of([-1, 3], ctx=CTX)


@settings(max_examples=50, deadline=None)
@given(values=tuples, data=st.data())
def test_means_lie_between_min_and_max_in_order(values, data):
    weights = data.draw(st.lists(positive, min_size=len(values), max_size=len(values)))
    t = WeightedTuple.of(values, weights, ctx=CTX)
    slack = 1 + CTX.rel_tolerance

    chain = [
        min(t.values),
        harmonic_mean(t, CTX),
        geometric_mean(t, CTX),
        arithmetic_mean(t, CTX),
        quadratic_mean(t, CTX),
        max(t.values),
    ]
    for lower, upper in zip(chain, chain[1:]):
        assert lower <= upper * slack


@settings(max_examples=40, deadline=None)
@given(values=tuples, factor=positive, r=st.floats(min_value=-8, max_value=8).filter(lambda v: abs(v) > 1e-2))
def test_power_means_are_homogeneous(values, factor, r):
    t = WeightedTuple.of(values, ctx=CTX)
    scaled = t.with_values([CTX.mp.mpf(factor) * v for v in t.values])

    assert CTX.approx_equal(power_mean(r, scaled, CTX), CTX.mp.mpf(factor) * power_mean(r, t, CTX))


def test_rado_gaps_start_at_zero_and_increase():
    t = WeightedTuple.of([1, 4, 3], ctx=CTX)
    gaps = rado_sequence(t, CTX)

    assert gaps[0] == 0
    # 2 * (2.5 - 2)
    assert CTX.approx_equal(gaps[1], 1)
    assert gaps[1] < gaps[2]
    # a_3 = G_2 leaves the gap unchanged
    flat = rado_sequence(WeightedTuple.of([1, 4, 2], ctx=CTX), CTX)
    assert CTX.approx_equal(flat[1], flat[2])
    with pytest.raises(BadIndex):
        rado_gap(t, 4, CTX)
    with pytest.raises(BadIndex):
        rado_gap(t, 0, CTX)


def test_popoviciu_conventions_on_one_four_two():
    t = WeightedTuple.of([1, 4, 2], ctx=CTX)

    wk = popoviciu_sequence(t, PopoviciuConvention.EXPONENT_WK, CTX)
    inv = popoviciu_sequence(t, PopoviciuConvention.EXPONENT_INV_WK, CTX)

    assert wk[0] == 1 and inv[0] == 1
    assert CTX.approx_equal(wk[1], "1.5625")
    assert wk[1] < wk[2]
    assert abs(inv[1] - CTX.mp.mpf("1.1180")) < CTX.mp.mpf("1e-4")
    assert abs(inv[2] - CTX.mp.mpf("1.0527")) < CTX.mp.mpf("1e-4")
    assert inv[2] < inv[1]
    assert popoviciu_ratio(t, 2, "ExponentWk", CTX) == wk[1]
