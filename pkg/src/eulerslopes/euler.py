"""Congruence criteria for the vanishing of the Euler class on a Dehn filling.

Everything here is integer arithmetic on a handful of invariants:

* ``k``  -- order of the rational longitude in ``H_1(X)``
* ``x``  -- Thurston norm of a generator of ``H_2(X, dX)``
* ``a``  -- relative Euler class of the foliation on ``X`` evaluated on ``[F]``
* ``b``  -- relative Euler class of the meridian-disk foliation, always ``+-1``

The orientation convention is fixed: ``b`` is an explicit input and is never
flipped automatically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .errors import DomainError
from .slopes import Slope, is_integral


class Condition(enum.Enum):
    """Whether ``e(F) = 0`` in ``H^2(X)`` is known to hold."""

    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


class Vanishing(enum.Enum):
    ZERO = "zero"
    NONZERO = "nonzero"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class FillingContext:
    """Arithmetic data of a rational homology solid torus ``X``."""

    k: int = 1
    x: int = 1
    euler_condition_1: Condition = Condition.UNKNOWN
    integer_homology: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("longitude order k must be >= 1")
        if self.x < 0:
            raise DomainError("Thurston norm x must be >= 0")
        if not isinstance(self.euler_condition_1, Condition):
            object.__setattr__(self, "euler_condition_1", Condition(self.euler_condition_1))
        if self.integer_homology:
            # H^2(X) = 0 and the longitude is null-homologous
            if self.k != 1:
                raise DomainError("an integer homology solid torus has k = 1")
            if self.euler_condition_1 is Condition.FAILS:
                raise DomainError("e(F) = 0 cannot fail when H^2(X) = 0")
            object.__setattr__(self, "euler_condition_1", Condition.HOLDS)

    @classmethod
    def knot_exterior(cls, genus: int) -> "FillingContext":
        """Exterior of a genus ``genus`` knot in an integer homology sphere."""
        if genus < 1:
            raise DomainError("knot genus must be >= 1")
        return cls(k=1, x=2 * genus - 1, integer_homology=True)


@dataclass(frozen=True)
class RelEulerData:
    a: int
    b: int

    def __post_init__(self):
        if self.b not in (-1, 1):
            raise DomainError(f"b must be +1 or -1, got {self.b}")


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^rank + Z/d1 + ... + Z/dm``."""

    rank: int = 0
    torsion: tuple = field(default_factory=tuple)

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", torsion)
        if self.rank < 0:
            raise DomainError("rank must be non-negative")
        if any(d < 2 for d in torsion):
            raise DomainError("invariant factors must be >= 2")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise DomainError(f"invariant factors {list(torsion)} do not form a divisibility chain")


def _require_filling_slope(s: Slope) -> None:
    if s.is_longitude:
        raise DomainError("criterion undefined for the longitude")


def obstruction_residue(rel: RelEulerData, ctx: FillingContext, s: Slope) -> int:
    """``((a*q)/k - b) mod p``; zero exactly when the congruence condition holds."""
    _require_filling_slope(s)
    if rel.a % ctx.k:
        raise DomainError(
            f"relative class not divisible by longitude order (a={rel.a}, k={ctx.k})")
    return ((rel.a // ctx.k) * s.q - rel.b) % s.p


def vanishing_necessary(rel: RelEulerData, ctx: FillingContext, s: Slope) -> bool:
    """False certifies a non-zero Euler class; True only means "not obstructed"."""
    _require_filling_slope(s)
    if ctx.euler_condition_1 is Condition.FAILS:
        return False
    return obstruction_residue(rel, ctx, s) == 0


def vanishing_iff(rel: RelEulerData, ctx: FillingContext, s: Slope) -> Vanishing:
    """Decide the Euler class where the criterion is sharp.

    Passing the congruence settles the question only when ``k = 1`` and
    ``e(F) = 0`` in ``H^2(X)`` is known; otherwise it is reported as
    undetermined.
    """
    if not vanishing_necessary(rel, ctx, s):
        return Vanishing.NONZERO
    if ctx.k == 1 and ctx.euler_condition_1 is Condition.HOLDS:
        return Vanishing.ZERO
    return Vanishing.UNDETERMINED


def admissible_a(ctx: FillingContext) -> list:
    """Values of ``a`` allowed by Thurston's bound, parity, and divisibility by k."""
    x = ctx.x
    return [a for a in range(-x, x + 1, 2) if a % ctx.k == 0]


def slope_potentially_vanishing(ctx: FillingContext, s: Slope) -> bool:
    _require_filling_slope(s)
    p, q, k = s.p, s.q, ctx.k
    for a in admissible_a(ctx):
        r = ((a // k) * q) % p
        if r == 1 % p or r == -1 % p:
            return True
    return False


def meridian_obstruction(ctx: FillingContext, s: Slope) -> Optional[int]:
    """Find ``n`` whose meridian change moves ``s`` to a non-integral slope
    steeper than ``x/k + 1``, which rules out a vanishing Euler class.

    The new denominator ``r = q + n*p`` must satisfy ``|r| * (x + k) < p * k``
    and ``|r| >= 2``.  Among valid choices the smallest ``|n|`` wins, with
    ties going to the negative ``n``.
    """
    _require_filling_slope(s)
    if s.is_meridian:
        raise DomainError("meridian obstruction needs q != 0")
    p, q, k, x = s.p, s.q, ctx.k, ctx.x
    best = None
    # candidate r are the q + n*p with |r| < p*k/(x+k) <= p: at most two
    r0 = q % p
    for r in (r0, r0 - p):
        if abs(r) < 2 or abs(r) * (x + k) >= p * k:
            continue
        n = (r - q) // p
        if best is None or (abs(n), n) < (abs(best), best):
            best = n
    return best


def sufficient_integral(s: Slope, rel: RelEulerData) -> bool:
    """Sufficient condition for ``e = 0`` on an integral filling of an integer
    homology solid torus, with the foliation oriented so that ``b = 1``."""
    if s.is_meridian or not is_integral(s):
        raise DomainError(f"{s} is not an integral slope")
    if s.is_longitude:
        raise DomainError("criterion undefined for the longitude")
    return rel.a == (1 if s.q > 0 else -1)


def branched_surface_vanishing(g: int, s: Slope) -> bool:
    """``(2g-1)|q| = 1 (mod p)``: exact vanishing test for foliations carried
    by a branched surface containing a minimal genus Seifert surface."""
    if g < 1:
        raise DomainError("genus must be >= 1")
    if s.is_meridian or s.is_longitude:
        raise DomainError(f"criterion stated for finite slopes with p > 0, got {s}")
    return ((2 * g - 1) * abs(s.q) - 1) % s.p == 0


def branched_surface_rel_data(g: int, s: Slope) -> RelEulerData:
    """The ``(a, b)`` pair realised by a branched-surface foliation on a slope.

    ``a = -chi(F) = 2g - 1`` for ``q > 0`` and ``a = chi(F)`` for ``q < 0``;
    the foliation is oriented so that ``b = 1``.
    """
    if s.is_meridian or s.is_longitude:
        raise DomainError(f"sign of a is undefined for {s}")
    a = 2 * g - 1 if s.q > 0 else -(2 * g - 1)
    return RelEulerData(a, 1)


def z2_forces_zero(h2: AbelianGroup) -> bool:
    """True when doubling is the zero map on ``h2`` (so every tangent plane
    field has vanishing Euler class)."""
    return h2.rank == 0 and all(d == 2 for d in h2.torsion)


def thurston_zero_guard(ctx: FillingContext) -> bool:
    """True means no slope admits a zero-Euler-class transverse taut foliation."""
    return ctx.x == 0

