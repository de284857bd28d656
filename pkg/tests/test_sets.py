from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerslopes.errors import DomainError, ParseError
from eulerslopes.oracles import oracle_contains, oracle_members
from eulerslopes.sets import (EnumerationWindow, SlopeSetDescriptor, contains, enumerate_set,
                              format_descriptor, level, parse_descriptor, verify_inclusion)
from eulerslopes.slopes import MERIDIAN, RationalInterval, make_slope

from conftest import coprime_pairs, slopes

D = SlopeSetDescriptor
F = Fraction


def S(p, q=1):
    return make_slope(p, q)


@pytest.mark.parametrize("desc, slope, expected", [
    (D.M(2, 1), S(7, 2), True),
    (D.M(2, 1), S(3), False),
    (D.M(2, 1), S(1), False),
    (D.L(2), S(5, 2), True),
    (D.L(2), S(3), False),
    (D.M(1, 2), S(2, 5), True),
    # the open circles of the level-4 row sit at (odd)/4
    (D.M(2, 4), S(1, 4), False),
    (D.M(2, 4), S(3, 4), False),
    # 1/2 = (1 + 1/1)/4
    (D.M(2, 4), S(1, 2), True),
    (D.L(1), S(0), False),
    (D.L(2), S(0), False),
    (D.M(1), S(0), True),
    (D.integers(), S(-7), True),
    (D.integers(), S(1, 2), False),
    (D.L(1), S(2), True),
    (D.M(1, 1), S(2), True),
    (D.M(2, 1), S(1, 2), True),
    (D.L(2), S(1, 2), True),
    (D.L(2), S(4, 3), True),
    (D.L(1), S(1, 7), True),
    (D.L(1), S(3, 2), False),
    (D.Mx(4, 2), S(5, 2), True),
    (D.Mx(4, 2), S(7, 2), False),
])
def test_membership_examples(desc, slope, expected):
    assert contains(desc, slope) is expected
    assert oracle_contains(desc, slope) is expected


def test_meridian_rejected():
    for desc in (D.M(1), D.L(1), D.integers(), D.Mx(3, 1, 2)):
        with pytest.raises(DomainError):
            contains(desc, MERIDIAN)
        with pytest.raises(DomainError):
            oracle_contains(desc, MERIDIAN)


DESCRIPTORS = ([D.integers(), D.L(1), D.L(2), D.L(3)]
               + [D.M(g, n) for g in (1, 2, 3) for n in (1, 2, 3, 5)]
               + [D.M(g) for g in (1, 2, 3)]
               + [D.Mx(x, k) for x, k in ((1, 1), (2, 1), (3, 2), (4, 2), (5, 3))]
               + [D.Mx(4, 2, 3)])


@pytest.mark.parametrize("desc", DESCRIPTORS, ids=str)
def test_closed_form_matches_search_oracle(desc):
    bad = [(p, q) for p, q in coprime_pairs(25, 25)
           if contains(desc, S(p, q)) != oracle_contains(desc, S(p, q))]
    assert bad == []


@pytest.mark.parametrize("desc", DESCRIPTORS, ids=str)
def test_bulk_oracle_matches_closed_form(desc):
    got = {(p, q) for p, q in coprime_pairs(40, 40) if contains(desc, S(p, q))}
    assert got == oracle_members(desc, 40, max_numerator=40)


def test_bulk_oracle_interval_filter():
    iv = RationalInterval.open(F(1, 3), F(2, 5))
    got = oracle_members(D.M(2), 80, interval=iv)
    w = EnumerationWindow(iv, 80)
    assert got == {(s.p, s.q) for s in enumerate_set(D.M(2), w)}
    iv = RationalInterval.closed(F(-7, 2), F(-3))
    got = oracle_members(D.Mx(3, 1), 50, interval=iv)
    w = EnumerationWindow(iv, 50)
    assert got == {(s.p, s.q) for s in enumerate_set(D.Mx(3, 1), w)}


def test_enumerate_examples():
    w = EnumerationWindow(RationalInterval(0, 1, False, True), 4)
    assert [s.value for s in enumerate_set(D.L(1), w)] == \
        [F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4), F(1)]
    w = EnumerationWindow(RationalInterval(1, 2, False, True), 3)
    assert [s.value for s in enumerate_set(D.M(1, 1), w)] == [F(4, 3), F(3, 2), F(2)]
    w = EnumerationWindow(RationalInterval.closed(-2, 2), 5)
    assert [s.value for s in enumerate_set(D.integers(), w)] == [-2, -1, 0, 1, 2]


def test_enumerate_sorted_and_unique():
    w = EnumerationWindow(RationalInterval.closed(-4, 4), 30, max_level=6)
    vals = [s.value for s in enumerate_set(D.M(2), w)]
    assert vals == sorted(set(vals))


def test_max_level_restricts_union():
    s = S(1, 4)  # 2 * 1/4 - 1 = -1/2, and 1/4 - m is never 1/s for m = +-1
    assert contains(D.M(1), s)
    assert level(D.M(1), s) == 2
    assert not contains(D.M(1), s, max_level=1)
    assert contains(D.M(1), s, max_level=2)
    assert contains(D.M(1), S(5), max_level=1)


@given(slopes(max_p=30, max_q=30), st.sampled_from([D.M(1), D.M(2), D.Mx(4, 2), D.Mx(3, 1)]))
def test_level_consistent_with_membership(s, desc):
    n = level(desc, s)
    if n is None:
        assert not any(contains(desc.at_level(m), s) for m in range(1, 200))
    else:
        assert contains(desc.at_level(n), s)
        assert not any(contains(desc.at_level(m), s) for m in range(1, n))
    in_union = abs(s.q) == 1 or s.p == 0 or n is not None
    assert contains(desc, s) == in_union


@settings(max_examples=60)
@given(st.integers(1, 4), st.integers(1, 6), slopes(max_p=30, max_q=30))
def test_level_scaling(g, n, s):
    scaled = make_slope(s.p * n, s.q)
    assert contains(D.M(g, n), s) == contains(D.M(g, 1), scaled)


@given(st.integers(1, 4), st.integers(1, 6), slopes(max_p=50, max_q=50))
def test_level_bounded(g, n, s):
    if contains(D.M(g, n), s):
        assert abs(s.value) <= F(2 * g, n)


@given(st.integers(2, 5), slopes(max_p=200, max_q=40))
def test_L_bounded(g, s):
    if contains(D.L(g), s):
        assert abs(s.value) < 2 * g - 1


def test_inclusion_examples():
    w = EnumerationWindow(RationalInterval.closed(-4, 4), 50)
    assert verify_inclusion(D.L(1), D.M(1), w).ok
    assert verify_inclusion(D.L(2), D.M(2), w).ok
    w = EnumerationWindow(RationalInterval.closed(-10, 10), 1)
    rep = verify_inclusion(D.integers(), D.M(2), w)
    assert rep.ok and rep.checked == 21
    rep = verify_inclusion(D.M(2), D.M(1), EnumerationWindow(RationalInterval.closed(2, 4), 5))
    assert not rep.ok and S(7, 2) in rep.violations


@pytest.mark.parametrize("text", ["Z", "M:g=2,n=1", "M:g=2", "Mx:x=4,k=2", "Mx:x=4,k=2,n=3",
                                  "L:g=1", "L:g=2"])
def test_descriptor_round_trip(text):
    assert format_descriptor(parse_descriptor(text)) == text


@pytest.mark.parametrize("text", ["Q", "M", "M:g=0", "M:g=2,g=3", "L:g=2,n=1", "Mx:x=4",
                                  "Z:g=1", "M:g=x", "L:g=0"])
def test_descriptor_parse_errors(text):
    with pytest.raises(ParseError):
        parse_descriptor(text)


def test_descriptor_validation():
    with pytest.raises(DomainError):
        D("Lg", g=1)
    with pytest.raises(DomainError):
        D("Mg", g=1, n=2)
    with pytest.raises(DomainError):
        EnumerationWindow(RationalInterval(None, 1), 5)
    with pytest.raises(DomainError):
        EnumerationWindow(RationalInterval.closed(0, 1), 0)
    assert D.M(2).centers == (-3, -1, 1, 3)
    assert D.Mx(5, 2).centers == (-2, -1, 0, 1, 2)
    assert D.Mx(1, 2).level_one_bound == 1
