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

"""Exact mirror-symmetry computations for weighted projective spaces.

orbimirror computes, with exact rational arithmetic, both sides of the
mirror correspondence for a weighted projective space P(w0,...,wn).  The
A side is the Chen-Ruan orbifold cohomology ring together with the
three-point Gromov-Witten values carrying one divisor insertion.  The B
side is the Jacobian algebra of the mirror Laurent polynomial with its
Brieskorn-lattice basis, residue metric and Newton grading.

The modules are layered:

spectral    --  weight combinatorics, spectrum and multi-index recursion
aside       --  orbifold cohomology and Gromov-Witten values
bside       --  Landau-Ginzburg mirror data
frobenius   --  initial conditions and correspondence checks
wdvv        --  reconstruction of the Frobenius potential
cli         --  command-line surface
"""

__all__ = ["__version__"]

# package version
from orbimirror.version import __version__

# End of file
