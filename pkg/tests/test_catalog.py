import pytest

from inequality_observatory.catalog import (
    DEFAULT_CATALOG,
    Direction,
    Point,
    Side,
    Verdict,
    classify,
    complementary,
    flipped,
    list_catalog,
    lookup,
)
from inequality_observatory.catalog.sampling import rng_for
from inequality_observatory.checker.sampling import with_plan
from inequality_observatory.errors import ArityMismatch, BadParams, NoComplement, UnknownName
from inequality_observatory.means import SignedTuple, WeightedTuple
from inequality_observatory.numerics import PrecisionContext

CTX = PrecisionContext()
NAMES = [listing.name for listing in list_catalog()]
COMPLEMENTED = [name for name in NAMES if DEFAULT_CATALOG.get(name).has_complement]
HOLDS = {Verdict.STRICT, Verdict.EQUALITY}


def _plans(name, complement=False):
    entry = DEFAULT_CATALOG.get(name)
    if complement:
        return entry.complement_plans or ({},)
    return entry.default_plans


def _descriptors(name, complement=False, seed=7):
    base = lookup(name, ctx=CTX)
    if complement:
        base = complementary(base)
    for index, plan in enumerate(_plans(name, complement)):
        yield with_plan(base, plan, rng_for(seed, name, complement, index), CTX)


def test_catalog_lists_every_entry_once_in_registration_order():
    assert len(NAMES) == len(set(NAMES))
    assert NAMES[:3] == ["GA2E", "GANE", "PROD1_SUM"]
    for expected in ("YOUNG", "BERNOULLI_FULL", "HOLDER", "MINKOWSKI", "RADON", "LIAPUNOV", "POWERMEAN"):
        assert expected in NAMES
    assert NAMES[-1] == "POWERMEAN"


def test_lookup_rejects_unknown_names_and_params():
    with pytest.raises(UnknownName) as excinfo:
        lookup("NOPE")
    assert "Unknown inequality 'NOPE'. Expected one of: GA2E" in str(excinfo.value)

    with pytest.raises(BadParams):
        lookup("GA2E", {"n": 3})
    with pytest.raises(BadParams):
        lookup("POWERMEAN", {"r": 2, "s": 1})
    with pytest.raises(BadParams):
        lookup("POWERMEAN", {"n": "2.5"})


def test_ga2e_classifies_the_textbook_points():
    d = lookup("GA2E", ctx=CTX)

    strict = classify(d, Point.of((4, 9), ctx=CTX), CTX)
    assert strict.verdict is Verdict.STRICT
    assert CTX.approx_equal(strict.margin, "0.5")

    assert classify(d, Point.of((5, 5), ctx=CTX), CTX).verdict is Verdict.EQUALITY
    assert classify(d, Point.of((4, -1), ctx=CTX), CTX).verdict is Verdict.OUTSIDE
    assert classify(flipped(d), Point.of((4, 9), ctx=CTX), CTX).verdict is Verdict.VIOLATED


def test_wrong_point_shape_is_an_arity_mismatch():
    d = lookup("GA2E", ctx=CTX)

    with pytest.raises(ArityMismatch):
        classify(d, Point.of((1, 2, 3), ctx=CTX), CTX)


def test_weighted_entries_take_tuples():
    gan = lookup("GAN", {"n": 3}, ctx=CTX)
    flat = Point(tuples=(WeightedTuple.of([2, 2, 2], [1, 2, 3], ctx=CTX),))
    spread = Point(tuples=(WeightedTuple.of([1, 4, 2], ctx=CTX),))

    assert classify(gan, flat, CTX).verdict is Verdict.EQUALITY
    assert classify(gan, spread, CTX).verdict is Verdict.STRICT


def test_popoviciu_reciprocal_convention_fails_on_one_four_two():
    t = WeightedTuple.of([1, 4, 2], ctx=CTX)
    pt = Point(tuples=(t,))

    wk = lookup("POPOVICIU", {"n": 3}, ctx=CTX)
    inv = lookup("POPOVICIU", {"n": 3, "convention": "ExponentInvWk"}, ctx=CTX)

    assert classify(wk, pt, CTX).verdict is Verdict.STRICT
    assert classify(inv, pt, CTX).verdict is Verdict.VIOLATED


def test_pecaric_accepts_values_above_minus_one():
    d = lookup("PECARIC", ctx=CTX)
    pt = Point(tuples=(SignedTuple.of(["-0.5", "0.25", 2], ["0.2", "0.3", "0.5"], ctx=CTX),))

    assert classify(d, pt, CTX).verdict in HOLDS


def test_complement_reverses_direction_and_swaps_validity():
    d = lookup("BERNOULLI_FULL", ctx=CTX)
    comp = complementary(d)

    assert comp.side is Side.COMPLEMENT
    assert comp.direction is d.direction.reversed()
    assert complementary(comp).side is Side.PRIMARY
    assert comp.key.startswith("~")
    assert flipped(d).key.startswith("!")

    with pytest.raises(NoComplement):
        complementary(lookup("GA2E", ctx=CTX))


def test_bernoulli_reverses_between_zero_and_one():
    comp = complementary(lookup("BERNOULLI_B1", ctx=CTX))

    assert comp.direction is Direction.GEQ
    # (1.5)^2 = 2.25 >= 2
    assert classify(comp, Point.of(("0.5", 2), ctx=CTX), CTX).verdict is Verdict.STRICT
    assert classify(comp, Point.of(("0.5", "0.5"), ctx=CTX), CTX).verdict is Verdict.OUTSIDE
    assert classify(comp, Point.of(("-0.5", 2), ctx=CTX), CTX).verdict is Verdict.OUTSIDE


@pytest.mark.parametrize("name", NAMES)
def test_exact_equality_points_classify_as_equality(name):
    for index, d in enumerate(_descriptors(name)):
        rng = rng_for(11, name, index)
        for _ in range(5):
            pt = d.near_equality(rng, 0.0, CTX)
            if pt is None:
                break
            assert d.validity(pt, CTX)
            assert classify(d, pt, CTX).verdict is Verdict.EQUALITY
            assert d.equality(pt, CTX)


@pytest.mark.parametrize("name", NAMES)
def test_points_just_off_equality_hold_strictly(name):
    for index, d in enumerate(_descriptors(name)):
        rng = rng_for(13, name, index)
        for _ in range(5):
            pt = d.near_equality(rng, 1e-3, CTX)
            if pt is None:
                break
            assert classify(d, pt, CTX).verdict is Verdict.STRICT


@pytest.mark.parametrize("name", NAMES)
def test_sampled_points_lie_in_validity_and_hold(name):
    for index, d in enumerate(_descriptors(name)):
        rng = rng_for(17, name, index)
        for _ in range(20):
            pt = d.sample(rng, CTX)
            assert classify(d, pt, CTX).verdict in HOLDS


@pytest.mark.parametrize("name", COMPLEMENTED)
def test_complements_hold_on_their_own_validity_set(name):
    for index, d in enumerate(_descriptors(name, complement=True)):
        rng = rng_for(19, name, index)
        for _ in range(20):
            assert classify(d, d.sample(rng, CTX), CTX).verdict in HOLDS
        exact = d.near_equality(rng, 0.0, CTX)
        if exact is not None:
            assert classify(d, exact, CTX).verdict is Verdict.EQUALITY
        near = d.near_equality(rng, 1e-3, CTX)
        if near is not None:
            assert classify(d, near, CTX).verdict is Verdict.STRICT


def test_listing_serializes_arity_and_complement_flag():
    row = next(listing for listing in list_catalog() if listing.name == "HOLDER").to_dict()

    assert row["arity"] == {"scalars": [], "tuples": ["a", "b"]}
    assert row["complement"] is True
    assert "p" in row["params"]
