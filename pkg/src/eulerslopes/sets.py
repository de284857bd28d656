"""Closed-form membership and windowed enumeration of the slope sets.

The sets, written as sets of rationals:

* ``Z``                      -- the integers
* ``M(g, n)``                -- ``(1/n) * {m + 1/s : s != 0, m odd, |m| <= 2g-1}``
* ``M(g)``                   -- ``Z`` together with every ``M(g, n)``, ``n >= 1``
* ``Mx(x, k, n)``, ``Mx(x, k)`` -- the same with ``m`` any integer, ``|m| <= x/k``
* ``L1``                     -- ``{+-p/(1+np) : p >= 1, n >= 0}``
* ``L(g)``, ``g >= 2``       -- ``{p/q : (2g-1)|q| = 1 + np for some n >= 1}``

The meridian is excluded from every set; membership is only defined on Q.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import DomainError, ParseError
from .slopes import RationalInterval, Slope, fractions_in_interval, make_slope

KINDS = ("Z", "Mgn", "Mg", "Mxn", "Mx", "L1", "Lg")


@dataclass(frozen=True)
class SlopeSetDescriptor:
    """Symbolic name of one slope set.  Unused parameters stay ``None``."""

    kind: str
    g: Optional[int] = None
    n: Optional[int] = None
    x: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self):
        kind = self.kind
        if kind not in KINDS:
            raise DomainError(f"unknown slope set kind {kind!r}")
        needs = {
            "Z": (), "L1": (), "Lg": ("g",), "Mg": ("g",), "Mgn": ("g", "n"),
            "Mx": ("x", "k"), "Mxn": ("x", "k", "n"),
        }[kind]
        for name in ("g", "n", "x", "k"):
            value = getattr(self, name)
            if name in needs:
                if value is None or value < 1:
                    raise DomainError(f"{kind} needs {name} >= 1")
            elif value is not None:
                raise DomainError(f"{kind} takes no parameter {name}")
        if kind == "Lg" and self.g < 2:
            raise DomainError("L(g) needs g >= 2; use L1 for genus one")

    # constructors matching the mathematical notation
    @classmethod
    def integers(cls):
        return cls("Z")

    @classmethod
    def M(cls, g, n=None):
        return cls("Mg", g=g) if n is None else cls("Mgn", g=g, n=n)

    @classmethod
    def Mx(cls, x, k, n=None):
        return cls("Mx", x=x, k=k) if n is None else cls("Mxn", x=x, k=k, n=n)

    @classmethod
    def L(cls, g):
        return cls("L1") if g == 1 else cls("Lg", g=g)

    @property
    def has_levels(self) -> bool:
        return self.kind in ("Mg", "Mx")

    @property
    def centers(self) -> tuple:
        """The admissible ``m`` of the ``m + 1/s`` sequences (M-type sets only)."""
        if self.kind in ("Mg", "Mgn"):
            top = 2 * self.g - 1
            return tuple(range(-top, top + 1, 2))
        if self.kind in ("Mx", "Mxn"):
            top = self.x // self.k
            return tuple(range(-top, top + 1))
        raise DomainError(f"{self.kind} has no accumulation centers")

    @property
    def level_one_bound(self) -> int:
        """``max |m + 1/s|`` over the level-one set: ``max|m| + 1``."""
        return max(self.centers) + 1

    def at_level(self, n: int) -> "SlopeSetDescriptor":
        if self.kind == "Mg":
            return SlopeSetDescriptor("Mgn", g=self.g, n=n)
        if self.kind == "Mx":
            return SlopeSetDescriptor("Mxn", x=self.x, k=self.k, n=n)
        raise DomainError(f"{self.kind} is not a union over levels")

    def __str__(self) -> str:
        return format_descriptor(self)


def format_descriptor(d: SlopeSetDescriptor) -> str:
    if d.kind == "Z":
        return "Z"
    if d.kind == "L1":
        return "L:g=1"
    if d.kind == "Lg":
        return f"L:g={d.g}"
    if d.kind == "Mg":
        return f"M:g={d.g}"
    if d.kind == "Mgn":
        return f"M:g={d.g},n={d.n}"
    if d.kind == "Mx":
        return f"Mx:x={d.x},k={d.k}"
    return f"Mx:x={d.x},k={d.k},n={d.n}"


_DESC_RE = re.compile(r"^(Z|M|Mx|L)(?::(.*))?$")


def parse_descriptor(text: str) -> SlopeSetDescriptor:
    """Parse ``"Z"``, ``"M:g=2,n=1"``, ``"M:g=2"``, ``"Mx:x=4,k=2"``, ``"L:g=1"`` ..."""
    m = _DESC_RE.match(text.strip())
    if not m:
        raise ParseError(f"malformed set descriptor {text!r}")
    head, tail = m.group(1), m.group(2)
    params = {}
    if tail:
        for item in tail.split(","):
            key, sep, value = item.partition("=")
            key = key.strip()
            if not sep or key not in ("g", "n", "x", "k") or key in params:
                raise ParseError(f"bad parameter {item!r} in {text!r}")
            try:
                params[key] = int(value)
            except ValueError:
                raise ParseError(f"parameter {key} must be an integer in {text!r}") from None
    try:
        if head == "Z":
            if params:
                raise ParseError("Z takes no parameters")
            return SlopeSetDescriptor("Z")
        if head == "M":
            if set(params) - {"g", "n"} or "g" not in params:
                raise ParseError(f"M needs g (and optionally n): {text!r}")
            return SlopeSetDescriptor.M(params["g"], params.get("n"))
        if head == "Mx":
            if set(params) - {"x", "k", "n"} or not {"x", "k"} <= set(params):
                raise ParseError(f"Mx needs x and k (and optionally n): {text!r}")
            return SlopeSetDescriptor.Mx(params["x"], params["k"], params.get("n"))
        if set(params) != {"g"}:
            raise ParseError(f"L needs exactly g: {text!r}")
        return SlopeSetDescriptor.L(params["g"])
    except DomainError as exc:
        raise ParseError(str(exc)) from None


@lru_cache(maxsize=4096)
def _signed_divisors(n: int) -> tuple:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    divs = small + large[::-1]
    return tuple(divs) + tuple(-d for d in divs)


def _in_level(p: int, q: int, n: int, centers) -> bool:
    # n*p/q - m = (n*p - m*q)/q has numerator +-1 in lowest terms iff
    # n*p - m*q is a non-zero divisor of q
    for m in centers:
        t = n * p - m * q
        if t and q % t == 0:
            return True
    return False


def _in_some_level(p: int, q: int, centers, parity: Optional[int]) -> bool:
    # p/q lies in level n iff n*p = m*q + d for a centre m and a non-zero
    # divisor d of q; any such (m, d) with m*q + d > 0 and p | m*q + d works
    lo, hi = centers[0], centers[-1]
    qinv = pow(q, -1, p) if p > 1 else 0
    for d in _signed_divisors(q):
        r = (-d * qinv) % p  # the residue class forced on m
        m = hi - (hi - r) % p  # its largest representative <= hi
        while m >= lo:
            if (parity is None or m % 2 == parity) and m * q + d > 0:
                return True
            m -= p
    return False


def contains(desc: SlopeSetDescriptor, s: Slope, max_level: Optional[int] = None) -> bool:
    """Exact membership of ``s`` in the set named by ``desc``.

    ``max_level`` restricts the unions ``M(g)``/``Mx(x, k)`` to the integers
    together with levels ``1..max_level``; other sets ignore it.
    """
    if s.is_meridian:
        raise DomainError("the meridian is not a member of any slope set")
    p, q = s.p, s.q
    kind = desc.kind
    if kind == "Z":
        return p == 0 or abs(q) == 1
    if kind == "L1":
        return p >= 1 and (abs(q) - 1) % p == 0
    if kind == "Lg":
        t = (2 * desc.g - 1) * abs(q)
        return p >= 1 and t > 1 and (t - 1) % p == 0
    if kind in ("Mgn", "Mxn"):
        return _in_level(p, q, desc.n, desc.centers)
    # Mg / Mx
    if p == 0 or abs(q) == 1:
        return True
    if max_level is not None:
        centers = desc.centers
        return any(_in_level(p, q, n, centers) for n in range(1, max_level + 1))
    parity = 1 if kind == "Mg" else None
    return _in_some_level(p, q, desc.centers, parity)


def level(desc: SlopeSetDescriptor, s: Slope) -> Optional[int]:
    """Smallest ``n`` with ``s`` in level ``n`` of ``M(g)``/``Mx(x, k)``, or None."""
    if not desc.has_levels:
        raise DomainError(f"{desc} has no levels")
    if s.is_meridian:
        raise DomainError("the meridian has no level")
    p, q = s.p, s.q
    if p == 0:
        # 0 = m + 1/s only for m = -1/s = +-1
        return 1 if 1 in desc.centers else None
    # |n*p/q| <= max|m| + 1 bounds the scan
    top = (desc.level_one_bound * abs(q)) // p
    centers = desc.centers
    for n in range(1, top + 1):
        if _in_level(p, q, n, centers):
            return n
    return None


@dataclass(frozen=True)
class EnumerationWindow:
    interval: RationalInterval
    max_denominator: int
    max_level: Optional[int] = None

    def __post_init__(self):
        if self.max_denominator < 1:
            raise DomainError("max_denominator must be >= 1")
        if self.max_level is not None and self.max_level < 1:
            raise DomainError("max_level must be >= 1")
        if not self.interval.is_bounded:
            raise DomainError("enumeration windows must be bounded")


def enumerate_set(desc: SlopeSetDescriptor, w: EnumerationWindow) -> list:
    """Members of the set in ``w.interval`` with ``|q| <= w.max_denominator``,
    sorted ascending by value."""
    found = []
    for num, den in fractions_in_interval(w.interval, w.max_denominator):
        s = make_slope(num, den)
        if contains(desc, s, w.max_level):
            found.append((Fraction(num, den), s))
    found.sort(key=lambda item: item[0])
    return [s for _, s in found]


@dataclass
class InclusionReport:
    inner: SlopeSetDescriptor
    outer: SlopeSetDescriptor
    checked: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_inclusion(inner: SlopeSetDescriptor, outer: SlopeSetDescriptor,
                     w: EnumerationWindow) -> InclusionReport:
    members = enumerate_set(inner, w)
    bad = [s for s in members if not contains(outer, s)]
    return InclusionReport(inner, outer, len(members), bad)
