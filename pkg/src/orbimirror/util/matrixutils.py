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

"""Exact matrices as numpy arrays of Fraction objects.

numpy provides the container and the matrix product; entries stay
fractions.Fraction so no rounding ever happens.  sympy is used where an
exact determinant, inverse or characteristic polynomial is needed.
"""

__all__ = ["zeroMatrix", "diagonalMatrix", "identityMatrix", "toSympy",
           "fromSympy", "exactInverse", "matricesEqual", "firstDifference"]

import numpy
import sympy

from orbimirror.util.rationals import F


def zeroMatrix(m, n=None):
    """Return m x n object array filled with Fraction(0)."""
    n = m if n is None else n
    rv = numpy.empty((m, n), dtype=object)
    rv.fill(F(0))
    return rv


def diagonalMatrix(values):
    """Square object array with the given diagonal."""
    values = list(values)
    rv = zeroMatrix(len(values))
    for i, v in enumerate(values):
        rv[i, i] = F(v)
    return rv


def identityMatrix(m):
    return diagonalMatrix([1] * m)


def toSympy(a):
    """Convert an object array of Fractions to sympy.Matrix of Rationals."""
    m, n = a.shape
    return sympy.Matrix(m, n, lambda i, j:
                        sympy.Rational(a[i, j].numerator, a[i, j].denominator))


def fromSympy(ma):
    """Convert sympy.Matrix with rational entries to an object array."""
    rv = zeroMatrix(ma.rows, ma.cols)
    for i in range(ma.rows):
        for j in range(ma.cols):
            v = sympy.Rational(ma[i, j])
            rv[i, j] = F(int(v.p), int(v.q))
    return rv


def exactInverse(a):
    """Exact inverse of a square Fraction matrix.

    Raises ZeroDivisionError when a is singular.
    """
    ma = toSympy(a)
    if ma.det() == 0:
        raise ZeroDivisionError("singular matrix")
    return fromSympy(ma.inv())


def firstDifference(a, b):
    """Return the first (i, j) where a and b differ, None if equal."""
    if a.shape != b.shape:
        return ()
    for idx in numpy.ndindex(*a.shape):
        if a[idx] != b[idx]:
            return idx
    return None


def matricesEqual(a, b):
    return firstDifference(a, b) is None

# End of file
