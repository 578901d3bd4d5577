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

"""Helper routines for testing."""

import io
import os
import sys
from itertools import product

from scipy.special import comb

from orbimirror.spectral import asWeights

# Weight vectors ------------------------------------------------------------

# worked example with five sectors
W122333 = (1, 2, 2, 3, 3, 3)

# small vectors used across the suites
SMALL_WEIGHTS = [
    (1,), (2,), (3,), (1, 1), (1, 2), (1, 3), (2, 3), (2, 4), (1, 1, 1),
    (1, 1, 2), (1, 2, 3), (1, 2, 2), (2, 2, 3), (1, 1, 1, 1),
    (1, 1, 1, 3), (1, 2, 2, 3, 3, 3),
]


def weightVectors(nmax, wmax, mumax=None):
    """Sorted weight vectors with n <= nmax and entries <= wmax.

    mumax   --  optional upper bound on sum(w).
    """
    rv = []
    for n in range(nmax + 1):
        for w in product(range(1, wmax + 1), repeat=n + 1):
            if list(w) != sorted(w):
                continue
            if mumax is not None and sum(w) > mumax:
                continue
            rv.append(w)
    return rv


def coprimeVectors(mumax, nmax=3, wmax=6):
    """Weight vectors with gcd(mu, lcm w) = 1 and mu <= mumax."""
    return [w for w in weightVectors(nmax, wmax, mumax)
            if asWeights(w).coprime]

# Long sweeps --------------------------------------------------------------

# enabled by ORBIMIRROR_SLOW_TESTS=1, each suite takes up to a minute
run_slow = os.environ.get("ORBIMIRROR_SLOW_TESTS", "0") not in ("", "0")
_msg_noslow = "slow sweep, set ORBIMIRROR_SLOW_TESTS=1 to run"

# Oracles -------------------------------------------------------------------


def kontsevichNumbers(dmax):
    """Numbers N_d of rational plane curves of degree d through 3d-1 points.

    Returns a dict d -> N_d for 1 <= d <= dmax.
    """
    N = {1: 1}
    for d in range(2, dmax + 1):
        total = 0
        for d1 in range(1, d):
            d2 = d - d1
            a = d2 * comb(3 * d - 4, 3 * d1 - 2, exact=True)
            b = d1 * comb(3 * d - 4, 3 * d1 - 1, exact=True)
            total += N[d1] * N[d2] * d1 ** 2 * d2 * (a - b)
        N[d] = total
    return N


def capturestdout(f, *args, **kwargs):
    """Capture the standard output from a call of function f.

    Returns a pair (output, return value).
    """
    savestdout = sys.stdout
    fp = io.StringIO()
    try:
        sys.stdout = fp
        rv = f(*args, **kwargs)
    finally:
        sys.stdout = savestdout
    return fp.getvalue(), rv

# End of file
