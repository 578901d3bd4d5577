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

"""
Exceptions used for orbimirror - specific errors.
"""

__all__ = ['OrbiMirrorError', 'InputError', 'DomainError',
           'OutOfRangeError', 'ConsistencyError', 'SpectrumMismatchError']


class OrbiMirrorError(Exception):
    """Generic error in orbimirror computations."""
    pass


class InputError(OrbiMirrorError):
    """Invalid weights, sector labels, indices or option values."""
    pass


class DomainError(OrbiMirrorError):
    """Arguments outside the domain where a formula is defined."""
    pass


class OutOfRangeError(OrbiMirrorError):
    """Potential coefficient requested beyond the computed length."""
    pass


class ConsistencyError(OrbiMirrorError):
    """Two derivations of the same quantity disagree.

    Attributes
    derivations --  tuple of the conflicting derivations, may be empty.
    """

    def __init__(self, message, derivations=()):
        OrbiMirrorError.__init__(self, message)
        self.derivations = tuple(derivations)
        return

# End class ConsistencyError


class SpectrumMismatchError(ConsistencyError):
    """Multi-index recursion disagrees with the sorted spectrum."""
    pass

# End of file
