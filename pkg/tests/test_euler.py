import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerslopes.errors import DomainError
from eulerslopes.euler import (AbelianGroup, Condition, FillingContext, RelEulerData, Vanishing,
                               admissible_a, branched_surface_rel_data,
                               branched_surface_vanishing, meridian_obstruction,
                               obstruction_residue, slope_potentially_vanishing,
                               sufficient_integral, thurston_zero_guard, vanishing_iff,
                               vanishing_necessary, z2_forces_zero)
from eulerslopes.slopes import LONGITUDE, MERIDIAN, change_meridian, make_slope

from conftest import slopes

HOLDS = Condition.HOLDS


def ctx(k=1, x=1, cond=HOLDS):
    return FillingContext(k=k, x=x, euler_condition_1=cond)


def test_residue_examples():
    for m in (1, 2, 7, 40):
        assert obstruction_residue(RelEulerData(1, 1), ctx(), make_slope(m, 1)) == 0
    assert obstruction_residue(RelEulerData(3, 1), ctx(x=3), make_slope(5, 2)) == 0
    assert obstruction_residue(RelEulerData(2, 1), ctx(x=2), make_slope(4, 1)) == 1


def test_residue_errors():
    with pytest.raises(DomainError, match="divisible"):
        obstruction_residue(RelEulerData(3, 1), ctx(k=2, x=3), make_slope(5, 2))
    with pytest.raises(DomainError, match="longitude"):
        obstruction_residue(RelEulerData(1, 1), ctx(), LONGITUDE)
    with pytest.raises(DomainError):
        RelEulerData(1, 0)


def test_vanishing_necessary_examples():
    assert vanishing_necessary(RelEulerData(1, 1), ctx(), make_slope(7, 1))
    assert not vanishing_necessary(RelEulerData(0, 1), ctx(x=0), make_slope(5, 2))
    assert not vanishing_necessary(RelEulerData(2, 1), ctx(k=2, x=2, cond=Condition.FAILS),
                                   make_slope(3, 1))


def test_vanishing_iff_examples():
    assert vanishing_iff(RelEulerData(3, 1), ctx(x=3), make_slope(5, 2)) is Vanishing.ZERO
    assert vanishing_iff(RelEulerData(3, 1), ctx(x=3), make_slope(4, 1)) is Vanishing.NONZERO
    # residue (1*1 - 1) mod 3 = 0, but k = 2 gives no sufficiency
    assert vanishing_iff(RelEulerData(2, 1), ctx(k=2, x=2), make_slope(3, 1)) \
        is Vanishing.UNDETERMINED
    assert vanishing_iff(RelEulerData(1, 1), ctx(cond=Condition.UNKNOWN), make_slope(3, 1)) \
        is Vanishing.UNDETERMINED


@given(slopes(allow_longitude=False), st.integers(-9, 9), st.sampled_from([-1, 1]))
def test_necessary_matches_definition(s, a, b):
    # a*q - b divisible by p, computed without the library
    expected = (a * s.q - b) % s.p == 0
    assert vanishing_necessary(RelEulerData(a, b), ctx(x=abs(a)), s) == expected


@pytest.mark.parametrize("x, k, expected", [
    (3, 1, [-3, -1, 1, 3]),
    (0, 1, [0]),
    (4, 2, [-4, -2, 0, 2, 4]),
    (5, 3, [-3, 3]),
])
def test_admissible_a(x, k, expected):
    assert admissible_a(FillingContext(k=k, x=x)) == expected


def _potential_oracle(x, k, s):
    for a in range(-x, x + 1):
        if (a - x) % 2 or a % k:
            continue
        for b in (1, -1):
            if ((a // k) * s.q - b) % s.p == 0:
                return True
    return False


def test_potentially_vanishing_examples():
    assert not slope_potentially_vanishing(FillingContext(x=1), make_slope(5, 12))
    for m in range(1, 30):
        assert slope_potentially_vanishing(FillingContext(x=1), make_slope(m, 1))
    # a = 3, b = -1: 3*2 = 6 = -1 (mod 7)
    assert slope_potentially_vanishing(FillingContext(x=3), make_slope(7, 2))


@given(slopes(allow_longitude=False), st.integers(0, 7), st.integers(1, 3))
def test_potentially_vanishing_matches_oracle(s, x, k):
    c = FillingContext(k=k, x=x)
    assert slope_potentially_vanishing(c, s) == _potential_oracle(x, k, s)


def _obstruction_oracle(x, k, s):
    best = None
    for n in range(-abs(s.q) - 3, abs(s.q) + 4):
        r = s.q + n * s.p
        if abs(r) >= 2 and abs(r) * (x + k) < s.p * k:
            if best is None or (abs(n), n) < (abs(best), best):
                best = n
    return best


def test_meridian_obstruction_examples():
    n = meridian_obstruction(FillingContext(x=1), make_slope(5, 12))
    assert n == -2
    assert change_meridian(make_slope(5, 12), n) == make_slope(5, 2)
    assert meridian_obstruction(FillingContext(x=1), make_slope(3, 1)) is None
    assert meridian_obstruction(FillingContext(x=3), make_slope(9, 2)) == 0
    with pytest.raises(DomainError):
        meridian_obstruction(FillingContext(x=1), MERIDIAN)


@given(slopes(max_p=80, max_q=80, allow_longitude=False), st.integers(0, 6), st.integers(1, 3))
def test_meridian_obstruction_matches_oracle(s, x, k):
    c = FillingContext(k=k, x=x)
    n = meridian_obstruction(c, s)
    assert n == _obstruction_oracle(x, k, s)
    if n is not None:
        t = change_meridian(s, n)
        assert abs(t.q) >= 2 and abs(t.value) > x / k + 1


def test_sufficient_integral():
    assert sufficient_integral(make_slope(3, 1), RelEulerData(1, 1))
    assert sufficient_integral(make_slope(3, -1), RelEulerData(-1, 1))
    assert not sufficient_integral(make_slope(3, 1), RelEulerData(-1, 1))
    with pytest.raises(DomainError):
        sufficient_integral(make_slope(3, 2), RelEulerData(1, 1))


def test_branched_surface_examples():
    for m in range(1, 25):
        assert branched_surface_vanishing(1, make_slope(m, 1))
        assert branched_surface_vanishing(1, make_slope(m, -1))
    assert branched_surface_vanishing(2, make_slope(2, 1))
    assert not branched_surface_vanishing(2, make_slope(3, 1))
    assert branched_surface_vanishing(2, make_slope(5, 2))
    with pytest.raises(DomainError):
        branched_surface_vanishing(2, LONGITUDE)


@given(st.integers(1, 5), slopes(allow_longitude=False))
def test_branched_surface_agrees_with_general_criterion(g, s):
    rel = branched_surface_rel_data(g, s)
    general = vanishing_iff(rel, FillingContext.knot_exterior(g), s)
    assert branched_surface_vanishing(g, s) == (general is Vanishing.ZERO)


@pytest.mark.parametrize("rank, torsion, expected", [
    (0, [], True), (0, [2], True), (0, [2, 2], True), (0, [4], False), (1, [2], False),
    (0, [2, 4], False),
])
def test_z2_forces_zero(rank, torsion, expected):
    assert z2_forces_zero(AbelianGroup(rank, tuple(torsion))) is expected


def test_abelian_group_validation():
    with pytest.raises(DomainError):
        AbelianGroup(0, (4, 2))
    with pytest.raises(DomainError):
        AbelianGroup(0, (1,))


def test_thurston_zero_guard():
    assert thurston_zero_guard(FillingContext(x=0))
    assert not thurston_zero_guard(FillingContext(x=1))
    assert not thurston_zero_guard(FillingContext(k=2, x=3))


def test_context_validation():
    with pytest.raises(DomainError):
        FillingContext(k=0)
    with pytest.raises(DomainError):
        FillingContext(k=2, integer_homology=True)
    c = FillingContext.knot_exterior(3)
    assert (c.k, c.x, c.euler_condition_1) == (1, 5, HOLDS)
    assert FillingContext(euler_condition_1="fails").euler_condition_1 is Condition.FAILS
