"""Exception hierarchy shared by the library and the CLI."""


class EulerSlopesError(ValueError):
    """Base class for all errors raised by :mod:`eulerslopes`."""


class ParseError(EulerSlopesError):
    """Malformed textual input (slopes, intervals, set or knot descriptors)."""


class DomainError(EulerSlopesError):
    """Well-formed input outside the domain of an operation.

    Examples are asking for the real-line order of the meridian, or evaluating
    a congruence criterion on the longitude.
    """
