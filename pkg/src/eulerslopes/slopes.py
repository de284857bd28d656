"""Exact Dehn-filling slopes and rational intervals.

A slope ``p/q`` stands for the curve ``p*mu + q*lambda`` on the boundary
torus.  Slopes are stored in a canonical form with ``p >= 0``; the meridian
is ``1/0`` and the longitude is ``0/1``.  Nothing in this module touches
floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .errors import DomainError, ParseError

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Slope:
    """A reduced slope ``p/q`` with ``p >= 0``.

    Build instances with :func:`make_slope`; the constructor only checks that
    the pair is already canonical.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise DomainError("0/0 is not a slope")
        if p < 0 or math.gcd(p, q) != 1 or (p == 0 and q != 1):
            raise DomainError(f"({p}, {q}) is not in canonical form; use make_slope")

    @property
    def is_meridian(self) -> bool:
        return self.q == 0

    @property
    def is_longitude(self) -> bool:
        return self.p == 0

    @property
    def value(self) -> Fraction:
        """The slope as a rational number.  Undefined for the meridian."""
        if self.q == 0:
            raise DomainError("the meridian 1/0 has no rational value")
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return format_slope(self)


MERIDIAN = Slope(1, 0)
LONGITUDE = Slope(0, 1)


def make_slope(p: int, q: int) -> Slope:
    """Return the canonical slope for the pair ``(p, q)``.

    >>> make_slope(-5, -12)
    Slope(p=5, q=12)
    >>> make_slope(0, -7)
    Slope(p=0, q=1)
    """
    p, q = int(p), int(q)
    if p == 0 and q == 0:
        raise DomainError("0/0 is not a slope")
    if p == 0:
        return LONGITUDE
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if p < 0:
        p, q = -p, -q
    return Slope(p, q)


def slope_from_value(v: Rational) -> Slope:
    v = Fraction(v)
    return make_slope(v.numerator, v.denominator)


def change_meridian(s: Slope, n: int) -> Slope:
    """Express ``s`` in the basis ``mu' = mu - n*lambda``.

    The curve ``p*mu + q*lambda`` equals ``p*mu' + (q + n*p)*lambda``.
    """
    if s.is_longitude:
        return s
    return make_slope(s.p, s.q + n * s.p)


def compare(s1: Slope, s2: Slope) -> int:
    """Three-way comparison of the rational values of two slopes."""
    if s1.is_meridian or s2.is_meridian:
        raise DomainError("the meridian 1/0 is not ordered on the real line")
    # denominators may be negative; multiply through by q1*q2 and fix the sign
    lhs, rhs = s1.p * s2.q, s2.p * s1.q
    sign = 1 if s1.q * s2.q > 0 else -1
    diff = (lhs - rhs) * sign
    return (diff > 0) - (diff < 0)


def is_integral(s: Slope) -> bool:
    return abs(s.q) == 1 or s.is_longitude


def format_slope(s: Slope) -> str:
    """Emit ``s`` as ``num/den`` with the sign carried by the numerator."""
    if s.is_meridian:
        return "1/0"
    if s.q < 0:
        return f"-{s.p}/{-s.q}"
    return f"{s.p}/{s.q}"


_SLOPE_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def parse_slope(text: str) -> Slope:
    """Parse ``"p/q"`` or an integer shorthand such as ``"4"``."""
    m = _SLOPE_RE.match(text)
    if not m:
        raise ParseError(f"malformed slope {text!r}; expected p/q")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    if p == 0 and q == 0:
        raise ParseError("0/0 is not a slope")
    return make_slope(p, q)


def parse_fraction(text: str) -> Fraction:
    text = text.strip()
    if not re.match(r"^[+-]?\d+(/[+-]?\d+)?$", text):
        raise ParseError(f"malformed exact fraction {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None


def format_fraction(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class RationalInterval:
    """An interval with exact endpoints; ``None`` stands for an infinite end."""

    lo: Optional[Fraction]
    hi: Optional[Fraction]
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        if self.lo is not None:
            object.__setattr__(self, "lo", Fraction(self.lo))
        elif self.lo_closed:
            raise DomainError("an interval cannot be closed at -infinity")
        if self.hi is not None:
            object.__setattr__(self, "hi", Fraction(self.hi))
        elif self.hi_closed:
            raise DomainError("an interval cannot be closed at +infinity")
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi:
                raise DomainError(f"empty interval: {self.lo} > {self.hi}")
            if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
                raise DomainError("degenerate interval with an open end")

    @classmethod
    def open(cls, lo, hi) -> "RationalInterval":
        return cls(lo, hi, False, False)

    @classmethod
    def closed(cls, lo, hi) -> "RationalInterval":
        return cls(lo, hi, True, True)

    @property
    def is_bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    def __contains__(self, v) -> bool:
        if isinstance(v, Slope):
            if v.is_meridian:
                return False
            v = v.value
        if self.lo is not None and (v < self.lo or (v == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (v > self.hi or (v == self.hi and not self.hi_closed)):
            return False
        return True

    def closure_contains(self, v: Fraction) -> bool:
        return (self.lo is None or v >= self.lo) and (self.hi is None or v <= self.hi)

    def is_subinterval_of(self, other: "RationalInterval") -> bool:
        def lo_ok():
            if other.lo is None:
                return True
            if self.lo is None or self.lo < other.lo:
                return False
            return self.lo > other.lo or other.lo_closed or not self.lo_closed

        def hi_ok():
            if other.hi is None:
                return True
            if self.hi is None or self.hi > other.hi:
                return False
            return self.hi < other.hi or other.hi_closed or not self.hi_closed

        return lo_ok() and hi_ok()

    def distance_to(self, v: Fraction) -> Fraction:
        """Distance from ``v`` to the closure of the interval."""
        if self.lo is not None and v < self.lo:
            return self.lo - v
        if self.hi is not None and v > self.hi:
            return v - self.hi
        return Fraction(0)

    def __str__(self) -> str:
        return format_interval(self)


def format_interval(iv: RationalInterval) -> str:
    left = "[" if iv.lo_closed else "("
    right = "]" if iv.hi_closed else ")"
    lo = "-inf" if iv.lo is None else format_fraction(iv.lo)
    hi = "inf" if iv.hi is None else format_fraction(iv.hi)
    return f"{left}{lo},{hi}{right}"


def parse_interval(text: str) -> RationalInterval:
    """Parse ``"(a,b]"``-style intervals; a bare ``"a,b"`` is open.

    Endpoints are exact fractions or ``-inf``/``inf``.
    """
    t = text.strip()
    if not t:
        raise ParseError("empty interval")
    lo_closed = hi_closed = False
    if t[0] in "([":
        lo_closed = t[0] == "["
        if t[-1] not in ")]":
            raise ParseError(f"unbalanced interval {text!r}")
        hi_closed = t[-1] == "]"
        t = t[1:-1]
    parts = t.split(",")
    if len(parts) != 2:
        raise ParseError(f"malformed interval {text!r}; expected lo,hi")

    def end(s, inf_tokens):
        s = s.strip()
        if s in inf_tokens:
            return None
        return parse_fraction(s)

    lo = end(parts[0], ("-inf", "-oo"))
    hi = end(parts[1], ("inf", "+inf", "oo", "+oo"))
    try:
        return RationalInterval(lo, hi, lo_closed, hi_closed)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def fractions_in_interval(iv: RationalInterval, max_denominator: int) -> Iterator[tuple]:
    """Yield ``(num, den)`` for every reduced fraction in a bounded interval
    with ``1 <= den <= max_denominator``, grouped by denominator."""
    if not iv.is_bounded:
        raise DomainError("enumeration needs a bounded interval")
    if max_denominator < 1:
        raise DomainError("max_denominator must be positive")
    lo, hi = iv.lo, iv.hi
    gcd = math.gcd
    for den in range(1, max_denominator + 1):
        start = math.ceil(lo * den)
        stop = math.floor(hi * den)
        if start == lo * den and not iv.lo_closed:
            start += 1
        if stop == hi * den and not iv.hi_closed:
            stop -= 1
        for num in range(start, stop + 1):
            if gcd(num, den) == 1:
                yield num, den
