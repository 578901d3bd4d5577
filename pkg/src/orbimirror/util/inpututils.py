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

"""Input utilities."""

__all__ = ["MAX_MU_ENV", "DEFAULT_MAX_MU", "maxMu", "parseWeights",
           "parseIntegerList"]

import os

from orbimirror.exceptions import InputError

MAX_MU_ENV = "ORBIMIRROR_MAX_MU"
DEFAULT_MAX_MU = 64


def maxMu(environ=None):
    """Upper limit on mu = sum(w) accepted by the command line.

    environ --  mapping to read the ORBIMIRROR_MAX_MU variable from,
                os.environ when None.

    Returns a positive int.
    Raises InputError if the variable is set to something other than a
    positive integer.
    """
    env = os.environ if environ is None else environ
    value = env.get(MAX_MU_ENV, "").strip()
    if not value:
        return DEFAULT_MAX_MU
    try:
        rv = int(value)
    except ValueError:
        rv = 0
    if rv < 1:
        emsg = "%s must be a positive integer, got %r" % (MAX_MU_ENV, value)
        raise InputError(emsg)
    return rv


def parseIntegerList(inpt):
    """Convert comma separated text to a tuple of integers.

    inpt    --  string such as "1,2,2" or a sequence of integers.

    Returns a tuple of int.
    Raises InputError for empty or non-integer items.
    """
    if isinstance(inpt, str):
        items = [t.strip() for t in inpt.split(',')]
    else:
        items = list(inpt)
    if not items or items == ['']:
        raise InputError("empty integer list")
    rv = []
    for t in items:
        if isinstance(t, bool):
            raise InputError("invalid integer %r" % (t,))
        try:
            v = int(t)
        except (TypeError, ValueError):
            raise InputError("invalid integer %r" % (t,))
        if isinstance(t, str) or v == t:
            rv.append(v)
        else:
            raise InputError("invalid integer %r" % (t,))
    return tuple(rv)


def parseWeights(inpt):
    """Parse a weight vector, every entry a positive integer.

    Returns a tuple of int.
    Raises InputError for an empty vector or a weight below 1.
    """
    w = parseIntegerList(inpt)
    bad = [x for x in w if x < 1]
    if bad:
        raise InputError("weights must be positive integers, got %r" % (w,))
    return w

# End of file
