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

"""Package version read from the adjacent version.cfg.

setup.py refreshes version.cfg from git.  A missing file gives an empty
version string rather than an import failure.

versionInfo -- OrderedDict of version, commit, date and timestamp.
"""

__all__ = ['__date__', '__git_commit__', '__timestamp__', '__version__',
           'versionInfo', 'readVersionConfig']

import os.path
from collections import OrderedDict
from configparser import RawConfigParser

_CFGFILE = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                        'version.cfg')
_KEYS = ('version', 'commit', 'date', 'timestamp')


def readVersionConfig(filename=_CFGFILE):
    """Return an OrderedDict of the version keys in filename.

    Unknown keys are ignored, absent keys stay empty and the timestamp
    is converted to int.
    """
    info = OrderedDict((k, '') for k in _KEYS)
    cp = RawConfigParser()
    if cp.read(filename):
        defaults = cp.defaults()
        for k in _KEYS:
            info[k] = defaults.get(k, '').strip()
    info['timestamp'] = int(info['timestamp'] or 0)
    return info


versionInfo = readVersionConfig()

__version__ = versionInfo['version']
__date__ = versionInfo['date']
__git_commit__ = versionInfo['commit']
__timestamp__ = versionInfo['timestamp']

# End of file
