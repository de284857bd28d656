"""Brute-force membership oracles for the slope sets.

These search the defining parameters directly (``m, s, n`` for the M-type
sets, ``p', n`` for ``L1``, ``n`` for ``L(g)``) and share no code with the
closed forms in :mod:`eulerslopes.sets`.  They exist to cross-check those
closed forms.

Bounds used in the searches:

* ``(m*s + 1)/(n*s)`` has ``gcd(m*s + 1, s) = 1``, so its reduced denominator
  is at least ``|s|``; a member with denominator ``Q`` needs ``|s| <= Q``.
* The same reduced denominator is ``n*|s|/gcd(m*s + 1, n) >= n*|s|/|m*s + 1|``,
  so ``n <= Q*|m*s + 1|/|s|``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional

import numpy as np

from .errors import DomainError
from .sets import SlopeSetDescriptor
from .slopes import RationalInterval, Slope


def _centers(desc: SlopeSetDescriptor) -> list:
    if desc.kind in ("Mg", "Mgn"):
        return [m for m in range(-(2 * desc.g - 1), 2 * desc.g) if m % 2 == 1]
    return [m for m in range(-desc.x, desc.x + 1) if abs(m) * desc.k <= desc.x]


def oracle_contains(desc: SlopeSetDescriptor, s: Slope) -> bool:
    """Decide membership by exhaustive search over the defining parameters."""
    if s.q == 0:
        raise DomainError("the meridian is not a member of any slope set")
    v = Fraction(s.p, s.q)
    kind = desc.kind
    if kind == "Z":
        return _is_integer_by_search(v)
    if kind in ("Mg", "Mx") and _is_integer_by_search(v):
        return True
    if kind == "L1":
        if v == 0:
            return False
        target = abs(v)
        for pp in range(1, s.p + 1):
            for n in range(0, abs(s.q) + 1):
                if Fraction(pp, 1 + n * pp) == target:
                    return True
        return False
    if kind == "Lg":
        t = (2 * desc.g - 1) * abs(s.q)
        return any(t == 1 + n * s.p for n in range(1, t + 1))
    centers = _centers(desc)
    qmag = abs(s.q)
    if kind in ("Mgn", "Mxn"):
        levels = [desc.n]
    else:
        levels = None
    for m in centers:
        for ss in range(-qmag, qmag + 1):
            if ss == 0:
                continue
            num = m * ss + 1
            if levels is not None:
                if Fraction(num, desc.n * ss) == v:
                    return True
                continue
            # solve (m*s + 1)/(n*s) = v for n and require a positive integer
            if v == 0:
                if num == 0:
                    return True
                continue
            n = Fraction(num, ss) / v
            if n.denominator == 1 and n >= 1:
                return True
    return False


def _is_integer_by_search(v: Fraction) -> bool:
    lim = abs(v.numerator) + 1
    return any(Fraction(m) == v for m in range(-lim, lim + 1))


def oracle_members(desc: SlopeSetDescriptor, max_denominator: int,
                   max_numerator: Optional[int] = None,
                   interval: Optional[RationalInterval] = None) -> set:
    """All members as ``(p, q)`` pairs with ``|q| <= max_denominator``, plus
    ``p <= max_numerator`` and/or value in ``interval`` when given.

    Bulk generation from the defining parameters; the level-``n`` loops of the
    M-type unions run through numpy.
    """
    Q = max_denominator
    P = max_numerator

    def keep(num: int, den: int) -> Optional[tuple]:
        # num/den reduced with den > 0 -> canonical (p, q), or None if filtered
        if den > Q or (P is not None and abs(num) > P):
            return None
        if interval is not None and Fraction(num, den) not in interval:
            return None
        if num == 0:
            return (0, 1)
        return (abs(num), den if num > 0 else -den)

    out = set()
    kind = desc.kind

    if kind in ("Z", "Mg", "Mx"):
        if P is not None:
            lo_i, hi_i = -P, P
        elif interval is not None and interval.is_bounded:
            lo_i, hi_i = int(interval.lo) - 1, int(interval.hi) + 1
        else:
            raise DomainError("integer enumeration needs max_numerator or a bounded interval")
        for m in range(lo_i, hi_i + 1):
            r = keep(m, 1)
            if r:
                out.add(r)
        if kind == "Z":
            return out

    if kind == "L1":
        pmax = P if P is not None else _numerator_cap(interval, Q)
        for pp in range(1, pmax + 1):
            n = 0
            while 1 + n * pp <= Q:
                den = 1 + n * pp
                g = gcd(pp, den)
                for sign in (1, -1):
                    r = keep(sign * pp // g, den // g)
                    if r:
                        out.add(r)
                n += 1
        return out

    if kind == "Lg":
        c = 2 * desc.g - 1
        for qq in range(1, Q + 1):
            t = c * qq
            for n in range(1, t):
                if (t - 1) % n == 0:
                    p = (t - 1) // n
                    if gcd(p, qq) != 1:
                        continue
                    for sign in (1, -1):
                        r = keep(sign * p, qq)
                        if r:
                            out.add(r)
        return out

    centers = _centers(desc)
    for m in centers:
        for ss in range(-Q, Q + 1):
            if ss == 0:
                continue
            num = m * ss + 1
            if kind in ("Mgn", "Mxn"):
                g = gcd(num, desc.n * ss)
                den = desc.n * ss // g
                nn = num // g
                if den < 0:
                    nn, den = -nn, -den
                r = keep(nn, den)
                if r:
                    out.add(r)
                continue
            if num == 0:
                r = keep(0, 1)
                if r:
                    out.add(r)
                continue
            n_lo, n_hi = 1, Q * abs(num) // abs(ss)
            if interval is not None:
                n_lo, n_hi = _tighten(num, ss, interval, n_lo, n_hi)
            if n_hi < n_lo:
                continue
            ns = np.arange(n_lo, n_hi + 1, dtype=np.int64)
            g = np.gcd(ns, abs(num))
            dens = ns * abs(ss) // g
            nums = abs(num) // g
            ok = dens <= Q
            if P is not None:
                ok &= nums <= P
            sign = 1 if num * ss > 0 else -1
            for nn, den in zip(nums[ok].tolist(), dens[ok].tolist()):
                r = keep(sign * nn, den)
                if r:
                    out.add(r)
    return out


def _numerator_cap(interval, Q):
    if interval is None or not interval.is_bounded:
        raise DomainError("L1 enumeration needs max_numerator or a bounded interval")
    return int(max(abs(interval.lo), abs(interval.hi)) * Q) + 1


def _tighten(num, ss, interval, n_lo, n_hi):
    # value = (num/ss)/n; restrict n to those landing in the (closure of the)
    # interval when the interval stays on one side of 0
    c = Fraction(num, ss)
    lo, hi = interval.lo, interval.hi
    if lo is not None and lo > 0:
        if c <= 0:
            return 1, 0
        n_hi = min(n_hi, int(c / lo))
        if hi is not None:
            n_lo = max(n_lo, -int(-c // hi))
    elif hi is not None and hi < 0:
        if c >= 0:
            return 1, 0
        n_hi = min(n_hi, int(c / hi))
        if lo is not None:
            n_lo = max(n_lo, -int(-c // lo))
    return n_lo, n_hi
