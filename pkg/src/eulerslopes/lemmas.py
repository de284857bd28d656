"""A fixed suite of finite checks on the slope sets, run by ``verify lemmas``.

Each check enumerates a window and compares two descriptions of the same
set.  The suite reports what it found; it does not stop at the first
failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .density import boundary_filter_report
from .euler import FillingContext
from .sets import EnumerationWindow, SlopeSetDescriptor, contains, enumerate_set, verify_inclusion
from .slopes import RationalInterval, format_slope, make_slope, slope_from_value

D = SlopeSetDescriptor


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    ok: bool
    detail: str


def _show(values, limit=8) -> str:
    values = sorted(values)
    text = ", ".join(format_slope(slope_from_value(v)) for v in values[:limit])
    return text + (", ..." if len(values) > limit else "")


def level_one_members(desc: SlopeSetDescriptor, max_s: int) -> set:
    """Values ``m + 1/s`` of the level-one set with ``1 <= |s| <= max_s``."""
    return {m + Fraction(1, s) for m in desc.centers
            for s in range(-max_s, max_s + 1) if s}


def check_inclusion(g: int, max_denominator: int = 50) -> LemmaCheck:
    w = EnumerationWindow(RationalInterval.closed(-2 * g, 2 * g), max_denominator)
    rep = verify_inclusion(D.L(g), D.M(g), w)
    return LemmaCheck(f"L{g} inside M{g} (|q| <= {max_denominator})", rep.ok,
                      f"{rep.checked} members checked, {len(rep.violations)} outside")


def check_integers_in_M(g: int = 2, bound: int = 10) -> LemmaCheck:
    w = EnumerationWindow(RationalInterval.closed(-bound, bound), 1)
    rep = verify_inclusion(D.integers(), D.M(g), w)
    return LemmaCheck(f"Z inside M{g} (|m| <= {bound})", rep.ok,
                      f"{rep.checked} integers checked, {len(rep.violations)} outside")


def _equality(name, l_desc, m1_desc, band, max_s) -> LemmaCheck:
    members = level_one_members(m1_desc, max_s)
    lhs = {v for v in members if contains(l_desc, slope_from_value(v))}
    rhs = {v for v in members if band(v)}
    if lhs == rhs:
        return LemmaCheck(name, True, f"{len(lhs)} slopes on both sides")
    extra, missing = lhs - rhs, rhs - lhs
    parts = []
    if extra:
        parts.append(f"in the intersection but outside the band: {_show(extra)}")
    if missing:
        parts.append(f"in the band but not in the intersection: {_show(missing)}")
    return LemmaCheck(name, False, "; ".join(parts))


def check_band_equality(g: int, max_s: int = 100) -> LemmaCheck:
    """``L(g)`` meets ``M(g, 1)`` exactly in the stated band, over ``|s| <= max_s``."""
    if g == 1:
        def band(v):
            return -1 < v < 1 and v != 0
        text = "(-1,0) u (0,1)"
    else:
        c = 2 * g - 1

        def band(v):
            return c - 1 <= abs(v) < c
        text = f"({1 - 2 * g},{2 - 2 * g}] u [{2 * g - 2},{2 * g - 1})"
    name = f"L{g} n M{g},1 equals M{g},1 n {text} (|s| <= {max_s})"
    return _equality(name, D.L(g), D.M(g, 1), band, max_s)


def largest_integer(g: int) -> tuple:
    """``(min, max)`` of the integers in ``L(g)``, found by scanning ``|m| <= 4g``."""
    found = [m for m in range(-4 * g, 4 * g + 1)
             if m and contains(D.L(g), make_slope(m, 1))]
    return min(found), max(found)


def check_largest_integer(g: int) -> LemmaCheck:
    lo, hi = largest_integer(g)
    ok = (lo, hi) == (-(2 * g - 2), 2 * g - 2)
    return LemmaCheck(f"integers of L{g} span [-{2 * g - 2},{2 * g - 2}]", ok,
                      f"found min {lo}, max {hi}")


def check_L_bounded(g: int, max_denominator: int = 500) -> LemmaCheck:
    """Every member of ``L(g)`` with ``|q| <= max_denominator`` has ``|value| < 2g - 1``.

    Numerators up to twice the claimed bound are scanned, so a violation in
    that range would be caught.
    """
    c = 2 * g - 1
    desc = D.L(g)
    worst = Fraction(0)
    bad = []
    for q in range(1, max_denominator + 1):
        for p in range(1, 2 * c * q + 1):
            if math.gcd(p, q) != 1 or not contains(desc, make_slope(p, q)):
                continue
            v = Fraction(p, q)
            worst = max(worst, v)
            if v >= c:
                bad.append(v)
    return LemmaCheck(f"members of L{g} satisfy |value| < {c} (|q| <= {max_denominator})",
                      not bad, f"largest |value| {worst}; {len(bad)} violations")


def check_scaling(g: int, levels=(2, 3, 4), max_denominator: int = 40) -> LemmaCheck:
    """``s`` is in ``M(g, n)`` exactly when ``n*s`` is in ``M(g, 1)``."""
    bad = []
    w = EnumerationWindow(RationalInterval.closed(-2 * g, 2 * g), max_denominator)
    one = D.M(g, 1)
    for n in levels:
        desc = D.M(g, n)
        members = {s.value for s in enumerate_set(desc, w)}
        for den in range(1, max_denominator + 1):
            for num in range(-2 * g * den, 2 * g * den + 1):
                if math.gcd(num, den) != 1:
                    continue
                v = Fraction(num, den)
                if (v in members) != contains(one, slope_from_value(n * v)):
                    bad.append(v)
    return LemmaCheck(f"M{g},n = (1/n) M{g},1 for n in {list(levels)}", not bad,
                      f"{len(bad)} mismatches")


def check_level_bounds(g: int, levels=(1, 2, 3, 4), max_denominator: int = 40) -> LemmaCheck:
    bad = []
    w = EnumerationWindow(RationalInterval.closed(-2 * g - 1, 2 * g + 1), max_denominator)
    for n in levels:
        edge = Fraction(2 * g, n)
        bad += [s for s in enumerate_set(D.M(g, n), w) if abs(s.value) > edge]
    return LemmaCheck(f"M{g},n lies in [-2g/n, 2g/n] for n in {list(levels)}", not bad,
                      f"{len(bad)} members outside")


def check_boundary_filter(x: int, k: int, max_denominator: int = 100) -> LemmaCheck:
    w = EnumerationWindow(RationalInterval.closed(-x - 2, x + 2), max_denominator)
    rep = boundary_filter_report(FillingContext(k=k, x=x), w)
    return LemmaCheck(f"Mx(x={x},k={k}) is integral outside {rep.band}", rep.ok,
                      f"{rep.outside} members outside the band, {rep.outside_integral} integral")


def lemma_suite() -> list:
    checks = [check_inclusion(g) for g in (1, 2, 3)]
    checks.append(check_integers_in_M())
    checks += [check_band_equality(g) for g in (1, 2, 3)]
    checks += [check_largest_integer(g) for g in (2, 3, 4)]
    checks.append(check_L_bounded(2))
    checks += [check_scaling(g) for g in (1, 2)]
    checks += [check_level_bounds(g) for g in (1, 2)]
    checks += [check_boundary_filter(x, k) for x, k in ((1, 1), (3, 1), (4, 2))]
    return checks


def format_lemma_report(checks: list) -> str:
    lines = [f"{'PASS' if c.ok else 'FAIL'}  {c.name}: {c.detail}" for c in checks]
    passed = sum(c.ok for c in checks)
    lines.append(f"{passed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"
