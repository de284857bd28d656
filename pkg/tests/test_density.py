import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerslopes.density import (boundary_filter_report, format_certificate, gap_certificate,
                                 parse_certificate, verify_certificate)
from eulerslopes.errors import DomainError, ParseError
from eulerslopes.euler import FillingContext
from eulerslopes.oracles import oracle_members
from eulerslopes.sets import EnumerationWindow, SlopeSetDescriptor, enumerate_set
from eulerslopes.slopes import RationalInterval

D = SlopeSetDescriptor
F = Fraction


@pytest.mark.parametrize("desc, lo, hi", [
    (D.M(1), F(1, 3), F(2, 5)),
    (D.M(2), F(7, 2), F(15, 4)),
    (D.M(2), F(-3, 10), F(-1, 10)),
    (D.Mx(4, 2), F(1, 7), F(1, 3)),
    (D.Mx(1, 2), F(1, 5), F(1, 2)),
])
def test_certificates_verify(desc, lo, hi):
    cert = gap_certificate(desc, RationalInterval.open(lo, hi))
    check = verify_certificate(desc, cert)
    assert check, check.reason
    assert cert.certified_interval.is_subinterval_of(cert.query_interval)
    assert F(0) not in cert.certified_interval
    # independent generator, twice the bound, all levels
    found = oracle_members(desc, 2 * cert.verification_denominator_bound,
                           interval=cert.certified_interval)
    assert found == set()


def test_certificate_fields_for_small_example():
    cert = gap_certificate(D.M(1), RationalInterval.open(F(1, 3), F(2, 5)))
    # B = 2g = 2 and distance to 0 is 1/3
    assert cert.cutoff_N == 7
    assert cert.limit_points == (F(1, 3),)
    assert gap_certificate(D.M(1), RationalInterval.open(F(1, 3), F(2, 5))) == cert


def test_cutoff_uses_largest_center_for_mx():
    # x/k = 1/2 gives centres {0}: every level lies in [-1/n, 1/n]
    cert = gap_certificate(D.Mx(1, 2), RationalInterval.open(F(1, 5), F(1, 2)))
    assert cert.cutoff_N == 6


def test_query_containing_zero_rejected():
    with pytest.raises(DomainError):
        gap_certificate(D.M(1), RationalInterval.open(F(-1, 5), F(1, 5)))
    with pytest.raises(DomainError):
        gap_certificate(D.M(1), RationalInterval.open(0, F(1, 5)))
    with pytest.raises(DomainError):
        gap_certificate(D.L(1), RationalInterval.open(F(1, 5), F(1, 3)))
    with pytest.raises(DomainError):
        gap_certificate(D.M(1), RationalInterval.open(F(1, 5), None))


def test_integers_are_isolated_members():
    # the query has only an integer inside: the certificate avoids it
    cert = gap_certificate(D.M(1), RationalInterval.open(F(39, 10), F(41, 10)))
    assert verify_certificate(D.M(1), cert)
    assert F(4) not in cert.certified_interval


def test_tampered_interval_rejected():
    desc = D.M(1)
    cert = gap_certificate(desc, RationalInterval.open(F(1, 3), F(2, 5)))
    w = EnumerationWindow(RationalInterval.open(F(1, 3), F(2, 5)), 40, 6)
    member = next(s.value for s in enumerate_set(desc, w)
                  if s.value > cert.certified_interval.hi)
    stretched = dataclasses.replace(
        cert, certified_interval=RationalInterval.open(cert.certified_interval.lo, member + F(1, 10**6)),
        verification_denominator_bound=10**4)
    check = verify_certificate(desc, stretched)
    assert not check
    assert "member" in check.reason or "limit point" in check.reason


def test_small_cutoff_rejected():
    cert = gap_certificate(D.M(1), RationalInterval.open(F(1, 3), F(2, 5)))
    bad = dataclasses.replace(cert, cutoff_N=3)
    check = verify_certificate(D.M(1), bad)
    assert not check and "cutoff" in check.reason


def test_small_bound_rejected():
    cert = gap_certificate(D.M(2), RationalInterval.open(F(1, 3), F(4, 7)))
    assert cert.verification_denominator_bound > 1
    bad = dataclasses.replace(cert, verification_denominator_bound=1)
    assert not verify_certificate(D.M(2), bad)


def test_wrong_limit_points_rejected():
    cert = gap_certificate(D.M(1), RationalInterval.open(F(1, 3), F(2, 5)))
    assert not verify_certificate(D.M(1), dataclasses.replace(cert, limit_points=()))
    assert not verify_certificate(D.M(2), cert)
    assert not verify_certificate(D.L(1), cert)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([D.M(1), D.M(2), D.Mx(3, 1), D.Mx(4, 2)]),
       st.fractions(min_value=F(1, 10), max_value=4, max_denominator=15),
       st.fractions(min_value=F(1, 15), max_value=1, max_denominator=15),
       st.booleans())
def test_certificates_sound(desc, lo, width, negative):
    iv = RationalInterval.open(lo, lo + width)
    if negative:
        iv = RationalInterval.open(-(lo + width), -lo)
    cert = gap_certificate(desc, iv)
    assert verify_certificate(desc, cert)
    assert oracle_members(desc, 2 * cert.verification_denominator_bound,
                          interval=cert.certified_interval) == set()


def test_certificate_text_round_trip():
    for desc, iv in [(D.M(1), RationalInterval.open(F(1, 3), F(2, 5))),
                     (D.M(2), RationalInterval.open(F(7, 2), F(15, 4))),
                     (D.Mx(4, 2), RationalInterval(F(-2), F(-1, 3), True, False))]:
        cert = gap_certificate(desc, iv)
        text = format_certificate(cert)
        assert parse_certificate(text) == cert
        assert format_certificate(parse_certificate(text)) == text


def test_certificate_parse_errors():
    text = format_certificate(gap_certificate(D.M(1), RationalInterval.open(F(1, 3), F(2, 5))))
    with pytest.raises(ParseError):
        parse_certificate(text.replace("cutoff_N: 7", "cutoff_N: seven"))
    with pytest.raises(ParseError):
        parse_certificate("\n".join(text.splitlines()[1:]))
    with pytest.raises(ParseError):
        parse_certificate(text + "extra: 1\n")


@pytest.mark.parametrize("x, k, half, edge", [
    (3, 1, 6, 4), (1, 1, 4, 2), (4, 2, 5, 3), (1, 1, 3, 2), (3, 1, 5, 4),
])
def test_boundary_filter(x, k, half, edge):
    w = EnumerationWindow(RationalInterval.closed(-half, half), 60)
    rep = boundary_filter_report(FillingContext(k=k, x=x), w)
    assert rep.ok and rep.violations == []
    assert rep.band == RationalInterval.closed(-edge, edge)
    assert rep.outside == rep.outside_integral == 2 * (half - edge)


def test_boundary_filter_needs_positive_norm():
    w = EnumerationWindow(RationalInterval.closed(-2, 2), 5)
    with pytest.raises(DomainError):
        boundary_filter_report(FillingContext(x=0), w)
