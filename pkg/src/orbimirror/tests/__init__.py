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

"""Unit tests for orbimirror.

The hypothesis profile is taken from ORBIMIRROR_HYPOTHESIS_PROFILE,
"default" or "thorough".  Tests with an explicit settings decorator keep
their own example counts.
"""

import logging
import os
import re
import unittest

from hypothesis import settings

# create logger instance for the tests subpackage
logging.basicConfig()
logger = logging.getLogger(__name__)

settings.register_profile("default", deadline=None)
settings.register_profile("thorough", max_examples=1000, deadline=None)
HYPOTHESIS_PROFILE = os.environ.get("ORBIMIRROR_HYPOTHESIS_PROFILE",
                                    "default")
settings.load_profile(HYPOTHESIS_PROFILE)

TESTDIR = os.path.dirname(os.path.abspath(__file__))


def _testCases(suite):
    for t in suite:
        if isinstance(t, unittest.TestSuite):
            for tc in _testCases(t):
                yield tc
        else:
            yield t
    return


def testsuite(pattern=''):
    '''Create a unit tests suite for the orbimirror package.

    Parameters
    ----------
    pattern : str, optional
        Regular expression matched against "module.TestClass.test_name".
        Select all tests when empty.

    Returns
    -------
    suite : `unittest.TestSuite`
    '''
    loader = unittest.defaultTestLoader
    topdir = os.path.dirname(os.path.dirname(TESTDIR))
    suite_all = loader.discover(TESTDIR, pattern='test*.py',
                                top_level_dir=topdir)
    if not pattern:
        return suite_all
    rx = re.compile(pattern)
    suite = unittest.TestSuite()
    for tc in _testCases(suite_all):
        shortname = '.'.join(tc.id().split('.')[-3:])
        if rx.search(shortname):
            suite.addTest(tc)
    logger.debug("pattern %r selects %i tests", pattern,
                 suite.countTestCases())
    return suite


def test(pattern='', verbosity=1):
    '''Execute unit tests for the orbimirror package.

    Returns
    -------
    result : `unittest.TestResult`
    '''
    suite = testsuite(pattern)
    if not suite.countTestCases():
        logger.warning("no tests match %r", pattern)
    runner = unittest.TextTestRunner(verbosity=verbosity)
    return runner.run(suite)


# End of file
