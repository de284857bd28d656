"""Finite certificates that an interval misses ``M(g)`` or ``Mx(x, k)``.

A certificate is built in three steps:

1. Pick a cutoff ``N`` so that every level ``n >= N`` lies in
   ``[-B/N, B/N]`` (``B = max|m| + 1``) and therefore misses the query.
2. List the finitely many limit points ``m/n``, ``n < N``.
3. Inside the middle third of the widest limit-point-free gap, enumerate the
   (finitely many) members and return the widest gap between consecutive ones.

A level-``n`` member ``m/n + 1/(n*s)`` at distance at least ``d`` from
``m/n`` has ``|s| <= 1/(n*d)``, hence reduced denominator at most
``n * ceil(1/(n*d))``.  That bound makes the certificate checkable by a
finite enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError, ParseError
from .euler import FillingContext
from .sets import (EnumerationWindow, SlopeSetDescriptor, enumerate_set,
                   format_descriptor, parse_descriptor)
from .slopes import (RationalInterval, format_fraction, format_interval,
                     parse_fraction, parse_interval)


@dataclass(frozen=True)
class GapCertificate:
    set_descriptor: SlopeSetDescriptor
    query_interval: RationalInterval
    cutoff_N: int
    limit_points: tuple
    certified_interval: RationalInterval
    verification_denominator_bound: int


@dataclass(frozen=True)
class CertificateCheck:
    """Outcome of :func:`verify_certificate`; truthy exactly when it passed."""

    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def _require_union(desc: SlopeSetDescriptor) -> None:
    if desc.kind not in ("Mg", "Mx"):
        raise DomainError(f"gap certificates are defined for M(g) and Mx(x,k), not {desc}")


def _distance_to_zero(iv: RationalInterval) -> Fraction:
    if not iv.is_bounded:
        raise DomainError("the query interval must be bounded")
    return iv.distance_to(Fraction(0))


def _cutoff(desc: SlopeSetDescriptor, d0: Fraction) -> int:
    return math.floor(desc.level_one_bound / d0) + 1


def _all_limit_points(desc: SlopeSetDescriptor, cutoff: int) -> list:
    pts = {Fraction(m, n) for n in range(1, cutoff) for m in desc.centers}
    return sorted(pts)


def _min_distance(iv: RationalInterval, points) -> Optional[Fraction]:
    dists = [iv.distance_to(v) for v in points]
    return min(dists) if dists else None


def _denominator_bound(cutoff: int, d: Optional[Fraction]) -> int:
    if d is None:
        return 1
    best = 1
    for n in range(1, cutoff):
        best = max(best, n * math.ceil(1 / (n * d)))
    return best


def gap_certificate(desc: SlopeSetDescriptor, query: RationalInterval) -> GapCertificate:
    """Certify a subinterval of ``query`` that contains no member of ``desc``.

    ``query`` must be bounded with ``0`` outside its closure.  The result is
    deterministic but not the widest possible gap.
    """
    _require_union(desc)
    d0 = _distance_to_zero(query)
    if d0 == 0:
        raise DomainError(f"query interval {format_interval(query)} must stay away from 0")
    if query.lo == query.hi:
        raise DomainError("the query interval must have positive length")
    cutoff = _cutoff(desc, d0)
    every = _all_limit_points(desc, cutoff)
    inside = [v for v in every if query.closure_contains(v)]

    # widest limit-point-free gap inside the query, then its middle third
    marks = sorted({query.lo, query.hi, *inside})
    a, b = max(zip(marks, marks[1:]), key=lambda ab: (ab[1] - ab[0], -ab[0]))
    third = (b - a) / 3
    middle = RationalInterval.closed(a + third, b - third)

    d_mid = _min_distance(middle, every)
    bound_mid = _denominator_bound(cutoff, d_mid)
    level_cap = max(cutoff - 1, 1)
    members = [s.value for s in enumerate_set(
        desc, EnumerationWindow(middle, bound_mid, level_cap))]

    marks = [middle.lo, *members, middle.hi]
    marks = sorted(set(marks))
    u, v = max(zip(marks, marks[1:]), key=lambda uv: (uv[1] - uv[0], -uv[0]))
    certified = RationalInterval.open(u, v)
    bound = _denominator_bound(cutoff, _min_distance(certified, every))
    return GapCertificate(desc, query, cutoff, tuple(inside), certified, bound)


def verify_certificate(desc: SlopeSetDescriptor, cert: GapCertificate) -> CertificateCheck:
    """Re-check every claim of ``cert`` from scratch with exact arithmetic."""

    def fail(reason):
        return CertificateCheck(False, reason)

    if desc.kind not in ("Mg", "Mx"):
        return fail(f"{desc} is not M(g) or Mx(x,k)")
    if cert.set_descriptor != desc:
        return fail(f"certificate is for {cert.set_descriptor}, not {desc}")
    query, cert_iv = cert.query_interval, cert.certified_interval
    if not query.is_bounded or not cert_iv.is_bounded:
        return fail("intervals must be bounded")
    if cert_iv.lo == cert_iv.hi:
        return fail("certified interval is a single point")
    if not cert_iv.is_subinterval_of(query):
        return fail("certified interval is not inside the query interval")
    d0 = query.distance_to(Fraction(0))
    if d0 == 0:
        return fail("query interval reaches 0")
    if cert.cutoff_N < 1:
        return fail("cutoff must be positive")
    # levels n >= N sit inside [-B/N, B/N]
    if Fraction(desc.level_one_bound, cert.cutoff_N) >= d0:
        return fail(f"cutoff {cert.cutoff_N} too small: levels >= N can reach the query")
    every = _all_limit_points(desc, cert.cutoff_N)
    expected = tuple(v for v in every if query.closure_contains(v))
    if tuple(sorted(cert.limit_points)) != expected:
        return fail("limit point list does not match m/n, n < N, inside the query")
    d = _min_distance(cert_iv, every)
    if d is not None and d == 0:
        return fail("certified interval touches a limit point")
    needed = _denominator_bound(cert.cutoff_N, d)
    if cert.verification_denominator_bound < needed:
        return fail(f"denominator bound {cert.verification_denominator_bound} below the "
                    f"required {needed}")
    window = EnumerationWindow(cert_iv, cert.verification_denominator_bound,
                               max(cert.cutoff_N - 1, 1))
    found = enumerate_set(desc, window)
    if found:
        return fail(f"member {found[0]} lies in the certified interval")
    return CertificateCheck(True, "all checks passed")


_FIELDS = ("set", "query_interval", "cutoff_N", "limit_points", "certified_interval",
           "verification_denominator_bound")


def format_certificate(cert: GapCertificate) -> str:
    """Canonical text form: one ``name: value`` line per field, exact fractions."""
    lines = [
        f"set: {format_descriptor(cert.set_descriptor)}",
        f"query_interval: {format_interval(cert.query_interval)}",
        f"cutoff_N: {cert.cutoff_N}",
        "limit_points: " + " ".join(format_fraction(v) for v in cert.limit_points),
        f"certified_interval: {format_interval(cert.certified_interval)}",
        f"verification_denominator_bound: {cert.verification_denominator_bound}",
    ]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def parse_certificate(text: str) -> GapCertificate:
    values = {}
    for raw in text.splitlines():
        if not raw.strip():
            continue
        key, sep, value = raw.partition(":")
        key = key.strip()
        if not sep or key not in _FIELDS or key in values:
            raise ParseError(f"unexpected certificate line {raw!r}")
        values[key] = value.strip()
    missing = [f for f in _FIELDS if f not in values]
    if missing:
        raise ParseError(f"certificate lacks {', '.join(missing)}")
    try:
        cutoff = int(values["cutoff_N"])
        bound = int(values["verification_denominator_bound"])
    except ValueError:
        raise ParseError("cutoff_N and the denominator bound must be integers") from None
    pts = tuple(parse_fraction(t) for t in values["limit_points"].split())
    return GapCertificate(
        parse_descriptor(values["set"]),
        parse_interval(values["query_interval"]),
        cutoff,
        pts,
        parse_interval(values["certified_interval"]),
        bound,
    )


@dataclass
class BoundaryFilterReport:
    x: int
    k: int
    band: RationalInterval
    window: EnumerationWindow
    inside: int
    outside: int
    outside_integral: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def boundary_filter_report(ctx: FillingContext, w: EnumerationWindow) -> BoundaryFilterReport:
    """Check that members of ``Mx(x, k)`` beyond ``x/k + 1`` in absolute value
    are all integers."""
    if ctx.x < 1:
        raise DomainError("the boundary filter needs x >= 1")
    edge = Fraction(ctx.x, ctx.k) + 1
    band = RationalInterval.closed(-edge, edge)
    desc = SlopeSetDescriptor.Mx(ctx.x, ctx.k)
    inside = outside = outside_integral = 0
    violations = []
    for s in enumerate_set(desc, w):
        if s in band:
            inside += 1
            continue
        outside += 1
        if abs(s.q) == 1:
            outside_integral += 1
        else:
            violations.append(s)
    return BoundaryFilterReport(ctx.x, ctx.k, band, w, inside, outside, outside_integral,
                                violations)
