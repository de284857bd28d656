"""Euler class criteria and slope-set arithmetic for Dehn fillings."""

from .errors import DomainError, EulerSlopesError, ParseError
from .slopes import (LONGITUDE, MERIDIAN, RationalInterval, Slope, change_meridian, compare,
                     format_interval, format_slope, make_slope, parse_interval, parse_slope)
from .euler import (AbelianGroup, Condition, FillingContext, RelEulerData, Vanishing,
                    admissible_a, branched_surface_rel_data, branched_surface_vanishing,
                    meridian_obstruction, obstruction_residue, slope_potentially_vanishing,
                    sufficient_integral, thurston_zero_guard, vanishing_iff,
                    vanishing_necessary, z2_forces_zero)
from .sets import (EnumerationWindow, SlopeSetDescriptor, contains, enumerate_set, level,
                   parse_descriptor, verify_inclusion)
from .density import (GapCertificate, boundary_filter_report, format_certificate,
                      gap_certificate, parse_certificate, verify_certificate)
from .knots import KnotDescriptor, Verdict, foliation_interval, lo_slopes, lo_verdict, parse_knot

__version__ = "0.1.0"
