"""Knot families with known intervals of foliation-detected slopes, and the
left-orderability verdicts obtained by combining those intervals with the
branched-surface Euler class test.

The user supplies family and genus; no knot recognition happens here.  The
meridian convention of the caller is taken as given.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DomainError, ParseError
from .euler import branched_surface_vanishing
from .sets import EnumerationWindow, SlopeSetDescriptor, enumerate_set
from .slopes import RationalInterval, Slope, format_interval, parse_interval


class Family(enum.Enum):
    ALTERNATING_NONPLANAR = "alt:nonplanar"
    ALTERNATING_POSITIVE_PLANAR = "alt:pos"
    ALTERNATING_NEGATIVE_PLANAR = "alt:neg"
    TWO_BRIDGE_HYPERBOLIC = "twobridge"
    FIBERED_HYPERBOLIC = "fibered"
    FIGURE_EIGHT = "fig8"
    GENERAL_S3 = "general"


class Degeneracy(enum.Enum):
    """Sign of the degeneracy slope of a hyperbolic fibered knot's monodromy."""

    NEGATIVE = "neg"
    POSITIVE = "pos"
    MERIDIONAL = "meridional"


@dataclass(frozen=True)
class KnotDescriptor:
    family: Family
    genus: int
    degeneracy: Optional[Degeneracy] = None
    interval: Optional[RationalInterval] = None

    def __post_init__(self):
        if self.genus < 1:
            raise DomainError("knot genus must be >= 1")
        if self.family is Family.FIGURE_EIGHT and self.genus != 1:
            raise DomainError("the figure-eight knot has genus 1")
        if (self.family is Family.FIBERED_HYPERBOLIC) != (self.degeneracy is not None):
            raise DomainError("a degeneracy sign is given exactly for fibered knots")
        if (self.family is Family.GENERAL_S3) != (self.interval is not None):
            raise DomainError("an explicit interval is given exactly for general knots")
        if self.interval is not None and Fraction(0) not in self.interval:
            raise DomainError("the detected interval of a general knot must contain 0")

    @classmethod
    def figure_eight(cls):
        return cls(Family.FIGURE_EIGHT, 1)

    def __str__(self) -> str:
        return format_knot(self)


_FULL = RationalInterval(None, None)
_FIXED = {
    Family.ALTERNATING_NONPLANAR: _FULL,
    Family.ALTERNATING_POSITIVE_PLANAR: RationalInterval.open(0, None),
    Family.ALTERNATING_NEGATIVE_PLANAR: RationalInterval.open(None, 0),
    Family.TWO_BRIDGE_HYPERBOLIC: _FULL,
    Family.FIGURE_EIGHT: _FULL,
}
_FIBERED = {
    Degeneracy.NEGATIVE: RationalInterval.open(-1, None),
    Degeneracy.POSITIVE: RationalInterval.open(None, 1),
    Degeneracy.MERIDIONAL: _FULL,
}


def foliation_interval(knot: KnotDescriptor) -> RationalInterval:
    """Open interval of finite slopes whose fillings carry the family's known
    co-orientable taut foliations (transverse to the core)."""
    if knot.family is Family.GENERAL_S3:
        return knot.interval
    if knot.family is Family.FIBERED_HYPERBOLIC:
        return _FIBERED[knot.degeneracy]
    return _FIXED[knot.family]


@dataclass(frozen=True)
class Verdict:
    """One-sided left-orderability verdict for a single filling.

    ``lo_detected`` is True only when both ingredients are present: the slope
    lies in the foliation-detected interval and the Euler class of the
    branched-surface foliation vanishes.  A False value means this method
    reaches no conclusion; it does *not* mean the filling has a
    non-left-orderable fundamental group.
    """

    slope: Slope
    foliation_detected: bool
    euler_zero: bool
    lo_detected: bool
    provenance: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.lo_detected and not (self.foliation_detected and self.euler_zero):
            raise DomainError("lo_detected requires foliation_detected and euler_zero")


def lo_verdict(knot: KnotDescriptor, s: Slope) -> Verdict:
    if s.is_meridian:
        raise DomainError("the meridian filling is the trivial one; no verdict")
    detected = s.value in foliation_interval(knot)
    # the longitude 0/1 has p = 0, so the congruence never holds there
    euler_zero = False if s.is_longitude else branched_surface_vanishing(knot.genus, s)
    notes = [f"foliation interval {format_interval(foliation_interval(knot))} "
             f"for family {knot.family.value}",
             f"branched-surface congruence (2g-1)|q| = 1 mod p with g = {knot.genus}"]
    lo = detected and euler_zero
    if lo:
        notes.append("zero Euler class taut foliation implies left-orderable")
    return Verdict(s, detected, euler_zero, lo, tuple(notes))


def lo_slopes(knot: KnotDescriptor, w: EnumerationWindow) -> list:
    """Slopes of the window with a positive verdict, ascending by value."""
    iv = foliation_interval(knot)
    euler_set = SlopeSetDescriptor.L(knot.genus)
    return [s for s in enumerate_set(euler_set, w) if s.value in iv]


_GENUS_RE = re.compile(r"^g=(\d+)$")


def _genus(token: str, text: str) -> int:
    m = _GENUS_RE.match(token)
    if not m:
        raise ParseError(f"expected g=<genus> in {text!r}")
    return int(m.group(1))


def parse_knot(text: str) -> KnotDescriptor:
    """Parse ``fig8``, ``alt:nonplanar:g=2``, ``alt:pos:g=1``, ``alt:neg:g=1``,
    ``twobridge:g=2``, ``fibered:neg:g=3`` or
    ``general:g=2:interval=(-1/2,1/2)``."""
    t = text.strip()
    try:
        if t == "fig8":
            return KnotDescriptor.figure_eight()
        head, _, rest = t.partition(":")
        if head == "alt":
            sub, _, g = rest.partition(":")
            fam = {"nonplanar": Family.ALTERNATING_NONPLANAR,
                   "pos": Family.ALTERNATING_POSITIVE_PLANAR,
                   "neg": Family.ALTERNATING_NEGATIVE_PLANAR}.get(sub)
            if fam is None:
                raise ParseError(f"unknown alternating subfamily {sub!r}")
            return KnotDescriptor(fam, _genus(g, text))
        if head == "twobridge":
            return KnotDescriptor(Family.TWO_BRIDGE_HYPERBOLIC, _genus(rest, text))
        if head == "fibered":
            sub, _, g = rest.partition(":")
            try:
                deg = Degeneracy(sub)
            except ValueError:
                raise ParseError(f"unknown degeneracy {sub!r}") from None
            return KnotDescriptor(Family.FIBERED_HYPERBOLIC, _genus(g, text), degeneracy=deg)
        if head == "general":
            g, _, iv = rest.partition(":")
            if not iv.startswith("interval="):
                raise ParseError(f"expected interval=<interval> in {text!r}")
            return KnotDescriptor(Family.GENERAL_S3, _genus(g, text),
                                  interval=parse_interval(iv[len("interval="):]))
    except DomainError as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"unknown knot descriptor {text!r}")


def format_knot(k: KnotDescriptor) -> str:
    if k.family is Family.FIGURE_EIGHT:
        return "fig8"
    if k.family is Family.FIBERED_HYPERBOLIC:
        return f"fibered:{k.degeneracy.value}:g={k.genus}"
    if k.family is Family.GENERAL_S3:
        return f"general:g={k.genus}:interval={format_interval(k.interval)}"
    return f"{k.family.value}:g={k.genus}"
