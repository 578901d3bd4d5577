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
Utilities used throughout orbimirror: exact rationals, input parsing,
object-dtype matrices and table emitters.
"""

_DASHEDLINE = 78 * '-'

# End of file
