#!/usr/bin/env python
##############################################################################
#
# orbimirror        Weighted projective spaces and their mirrors
#                   (c) 2026 The orbimirror developers.
#                   All rights reserved.
#
# File coded by:    orbimirror developers
#
# See AUTHORS.txt for a list of people who contributed.
# See LICENSE.txt for license information.
#
##############################################################################

"""Exact rational helpers.

All rational quantities in orbimirror are fractions.Fraction instances.
The canonical text form is "p/q" with q > 0 and gcd(p, q) = 1, or "p"
when q = 1.
"""

__all__ = ["F", "fractionalPart", "isIntegral", "rationalToString",
           "stringToRational", "productOf"]

from fractions import Fraction as F
from functools import reduce
import operator

from orbimirror.exceptions import InputError


def fractionalPart(x):
    """Return {x} = x - floor(x) as a Fraction in [0, 1)."""
    x = F(x)
    return x - (x.numerator // x.denominator)


def isIntegral(x):
    """True when the rational x is an integer."""
    return F(x).denominator == 1


def rationalToString(x):
    """Canonical "p/q" text of an exact rational.

    x   --  int or Fraction.  Floats are refused since they are never
            exact in this package.

    Returns a str.
    Raises TypeError for float input.
    """
    if isinstance(x, float):
        raise TypeError("refusing to format float %r" % x)
    x = F(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%i/%i" % (x.numerator, x.denominator)


def stringToRational(s):
    """Parse "p/q" or "p" into a Fraction.

    Raises InputError when s is not a rational literal.  Decimal
    literals such as "0.5" are rejected.
    """
    txt = s.strip()
    if not txt or '.' in txt or 'e' in txt.lower():
        raise InputError("invalid rational %r" % s)
    try:
        rv = F(txt)
    except (ValueError, ZeroDivisionError):
        raise InputError("invalid rational %r" % s)
    return rv


def productOf(values):
    """Exact product of an iterable of rationals, 1 when empty."""
    return reduce(operator.mul, values, F(1))

# End of file
