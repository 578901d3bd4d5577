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

"""Run the orbimirror unit tests.

python -m orbimirror.tests.run [-v] [PATTERN]

PATTERN selects tests by "module.TestClass.test_name", for example
"testwdvv" or "TestCup".
"""

import argparse
import sys


def main(argv=None):
    parser = argparse.ArgumentParser(prog="python -m orbimirror.tests.run")
    parser.add_argument("pattern", nargs="?", default="")
    parser.add_argument("-v", "--verbose", action="store_true")
    opts = parser.parse_args(argv)
    from orbimirror.tests import test
    result = test(opts.pattern, verbosity=2 if opts.verbose else 1)
    return int(not result.wasSuccessful())


if __name__ == '__main__':
    sys.exit(main())

# End of file
