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

"""Tests for the util subpackage and the check reports."""

import json
import os
import tempfile
import unittest
from collections import OrderedDict
from fractions import Fraction as F

from hypothesis import given, strategies as st

from orbimirror.exceptions import InputError
from orbimirror.checkresults import CheckReport
from orbimirror.util.emitters import emit, canonical
from orbimirror.util.inpututils import maxMu, parseWeights, DEFAULT_MAX_MU
from orbimirror.util.rationals import (rationalToString, stringToRational,
        fractionalPart)
from orbimirror.tests.utils import capturestdout
from orbimirror.version import readVersionConfig, __version__

# ----------------------------------------------------------------------------

class TestRationals(unittest.TestCase):

    def test_rationalToString(self):
        """check rationalToString()
        """
        self.assertEqual("1/108", rationalToString(F(1, 108)))
        self.assertEqual("-3/2", rationalToString(F(6, -4)))
        self.assertEqual("12", rationalToString(12))
        self.assertRaises(TypeError, rationalToString, 0.5)
        return


    def test_stringToRational(self):
        """check stringToRational()
        """
        self.assertEqual(F(2, 3), stringToRational(" 2/3 "))
        self.assertEqual(F(4), stringToRational("4"))
        self.assertRaises(InputError, stringToRational, "0.5")
        self.assertRaises(InputError, stringToRational, "1/0")
        self.assertRaises(InputError, stringToRational, "")
        return


    @given(st.fractions())
    def test_canonical_text(self, x):
        """check the text form is canonical
        """
        txt = rationalToString(x)
        self.assertEqual(x, stringToRational(txt))
        self.assertEqual(txt, rationalToString(stringToRational(txt)))
        return


    def test_fractionalPart(self):
        """check fractionalPart()
        """
        self.assertEqual(F(2, 3), fractionalPart(F(-1, 3)))
        self.assertEqual(0, fractionalPart(3))
        return

# End of class TestRationals

# ----------------------------------------------------------------------------

class TestInputUtils(unittest.TestCase):

    def test_parseWeights(self):
        """check parseWeights()
        """
        self.assertEqual((1, 2, 2), parseWeights("1, 2,2"))
        self.assertEqual((3,), parseWeights([3]))
        self.assertRaises(InputError, parseWeights, "1,,2")
        self.assertRaises(InputError, parseWeights, "1,-2")
        self.assertRaises(InputError, parseWeights, [1.5])
        self.assertRaises(InputError, parseWeights, "")
        return


    def test_maxMu(self):
        """check maxMu()
        """
        self.assertEqual(DEFAULT_MAX_MU, maxMu({}))
        self.assertEqual(10, maxMu({"ORBIMIRROR_MAX_MU": "10"}))
        self.assertRaises(InputError, maxMu, {"ORBIMIRROR_MAX_MU": "0"})
        self.assertRaises(InputError, maxMu, {"ORBIMIRROR_MAX_MU": "x"})
        return

# End of class TestInputUtils

# ----------------------------------------------------------------------------

class TestEmitters(unittest.TestCase):

    def setUp(self):
        self.rows = [OrderedDict([("index", 0), ("sigma", F(0))]),
                     OrderedDict([("index", 1), ("sigma", F(1))]),
                     OrderedDict([("index", 2), ("sigma", F(1, 2))])]
        return


    def test_json(self):
        """check the JSON document
        """
        txt = emit("basis", (1, 2), self.rows, "json")
        doc = json.loads(txt)
        self.assertEqual(["weights", "mu", "kind", "rows"], list(doc))
        self.assertEqual([1, 2], doc["weights"])
        self.assertEqual(3, doc["mu"])
        self.assertEqual(["0", "1", "1/2"], [r["sigma"] for r in doc["rows"]])
        # re-emitting is byte-identical
        again = json.dumps(json.loads(txt, object_pairs_hook=OrderedDict),
                           indent=2) + "\n"
        self.assertEqual(txt, again)
        return


    def test_empty(self):
        """check an empty table
        """
        doc = json.loads(emit("pairing", (1,), [], "json"))
        self.assertEqual([], doc["rows"])
        self.assertTrue("(empty)" in emit("pairing", (1,), [], "md"))
        self.assertEqual("", emit("pairing", (1,), [], "csv"))
        return


    def test_md_csv(self):
        """check the Markdown and CSV views
        """
        md = emit("basis", (1, 2), self.rows, "md")
        self.assertTrue("| index | sigma |" in md)
        self.assertTrue("| 2 | 1/2 |" in md)
        csvtxt = emit("basis", (1, 2), self.rows, "csv")
        self.assertEqual("index,sigma\n0,0\n1,1\n2,1/2\n", csvtxt)
        self.assertRaises(InputError, emit, "basis", (1, 2), self.rows, "xml")
        return


    def test_canonical(self):
        """check canonical() on nested cells
        """
        self.assertEqual(["1/3", 2, None, True],
                         canonical((F(1, 3), 2, None, True)))
        self.assertEqual({"a": "-1"}, canonical({"a": F(-1)}))
        return

# End of class TestEmitters

# ----------------------------------------------------------------------------

class TestCheckReport(unittest.TestCase):

    def test_report(self):
        """check CheckReport bookkeeping and output
        """
        report = CheckReport((1, 2), "demo")
        report.addInstances("first", [], 4)
        self.assertTrue(report.passed)
        report.addInstances("second", ["(0,1)", "(1,1)"], 4)
        self.assertFalse(report.passed)
        self.assertEqual("(0,1)", report.checks["second"].witness)
        out, _ = capturestdout(report.printResults)
        self.assertTrue("demo checks for w = (1,2)" in out)
        self.assertTrue("first failure: (0,1)" in out)
        self.assertTrue("overall: FAIL" in out)
        other = CheckReport((1, 2), "other")
        other.addCheck("third", True, 1)
        report.extend(other, "x:")
        self.assertEqual(["first", "second", "x:third"], list(report.checks))
        self.assertEqual(3, len(report.rows()))
        return

# End of class TestCheckReport

# ----------------------------------------------------------------------------

class TestVersion(unittest.TestCase):

    def test_readVersionConfig(self):
        """check readVersionConfig()
        """
        fd, path = tempfile.mkstemp(suffix='.cfg')
        os.close(fd)
        self.addCleanup(os.remove, path)
        with open(path, 'w') as fp:
            fp.write('[DEFAULT]\nversion = 1.2.3\ncommit = abc\n'
                     'timestamp = 42\nextra = x\n')
        info = readVersionConfig(path)
        self.assertEqual('1.2.3', info['version'])
        self.assertEqual('abc', info['commit'])
        self.assertEqual('', info['date'])
        self.assertEqual(42, info['timestamp'])
        self.assertFalse('extra' in info)
        return

    def test_missingConfig(self):
        """check readVersionConfig() for an absent file
        """
        info = readVersionConfig(os.path.join(tempfile.gettempdir(),
                                              'no-such-version.cfg'))
        self.assertEqual('', info['version'])
        self.assertEqual(0, info['timestamp'])
        self.assertTrue(isinstance(__version__, str))
        return

# End of class TestVersion


if __name__ == '__main__':
    unittest.main()

# End of file
