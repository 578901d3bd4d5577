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

"""Reports of identity checks.

Verification routines never raise on a failing identity.  They collect
named checks in a CheckReport, which records pass or fail and the first
witness of a failure.
"""

__all__ = ["CheckResult", "CheckReport", "CorrespondenceReport"]

from collections import OrderedDict

from orbimirror.util import _DASHEDLINE


class CheckResult(object):
    """Outcome of one named identity check.

    Attributes
    name    --  Short identifier of the checked identity.
    passed  --  True when the identity holds everywhere it was tested.
    count   --  Number of instances that were evaluated.
    witness --  Description of the first failing instance, None on pass.
    """

    def __init__(self, name, passed, count=0, witness=None):
        self.name = name
        self.passed = bool(passed)
        self.count = int(count)
        self.witness = witness
        return

    def __repr__(self):
        return "CheckResult(%r, %r, count=%r)" % (
            self.name, self.passed, self.count)

# End class CheckResult


class CheckReport(object):
    """Ordered collection of CheckResult objects for one weight vector.

    Attributes
    weights --  The weight tuple the checks were run for.
    kind    --  Name of the suite that produced the report.
    checks  --  OrderedDict of CheckResult keyed by name.
    notes   --  List of informational lines added to the output.
    """

    def __init__(self, weights, kind):
        self.weights = tuple(weights)
        self.kind = kind
        self.checks = OrderedDict()
        self.notes = []
        return

    @property
    def passed(self):
        """True when every contained check passed."""
        return all(c.passed for c in self.checks.values())

    def addCheck(self, name, passed, count=0, witness=None):
        """Record a check and return its CheckResult.

        A repeated name replaces the earlier result.
        """
        rv = CheckResult(name, passed, count, witness)
        self.checks[name] = rv
        return rv

    def addInstances(self, name, failures, count):
        """Record a check from a sequence of failing instances.

        name        --  check identifier
        failures    --  sequence of failure descriptions, empty on pass
        count       --  number of evaluated instances
        """
        witness = failures[0] if failures else None
        return self.addCheck(name, not failures, count, witness)

    def extend(self, other, prefix=''):
        """Append all checks of another report, prefixing their names."""
        for c in other.checks.values():
            self.addCheck(prefix + c.name, c.passed, c.count, c.witness)
        self.notes.extend(other.notes)
        return

    def rows(self):
        """Plain rows for tabular output, one per check."""
        rv = []
        for c in self.checks.values():
            row = OrderedDict()
            row["check"] = c.name
            row["passed"] = c.passed
            row["count"] = c.count
            row["witness"] = c.witness
            rv.append(row)
        return rv

    def formatResults(self, header="", footer=""):
        """Format the report and return it as a string.

        header  --  A header to add to the output (default "")
        footer  --  A footer to add to the output (default "")
        """
        lines = []
        if header:
            lines.append(header)
        w = ",".join(str(x) for x in self.weights)
        lines.append("%s checks for w = (%s)" % (self.kind, w))
        lines.append(_DASHEDLINE)
        width = max([len(n) for n in self.checks] + [10])
        formatstr = "%-" + str(width) + "s  %-4s  %i"
        for c in self.checks.values():
            status = "ok" if c.passed else "FAIL"
            lines.append(formatstr % (c.name, status, c.count))
            if not c.passed:
                lines.append("    first failure: %s" % (c.witness,))
        lines.append(_DASHEDLINE)
        lines.extend(self.notes)
        lines.append("overall: %s" % ("pass" if self.passed else "FAIL"))
        if footer:
            lines.append(footer)
        out = "\n".join(lines) + '\n'
        return out

    def printResults(self, header="", footer=""):
        print(self.formatResults(header, footer).rstrip())
        return

    def __str__(self):
        return self.formatResults()

# End class CheckReport


class CorrespondenceReport(CheckReport):
    """CheckReport of a mirror-correspondence comparison.

    Attributes
    conjecture_used --  True when a conjectural quantum value entered the
                        compared data.
    coprime         --  True when gcd(mu, lcm w) = 1.
    skipped         --  List of matrix slots (row, column) that were not
                        compared because one side leaves them undefined.
    """

    def __init__(self, weights, kind, coprime):
        CheckReport.__init__(self, weights, kind)
        self.conjecture_used = False
        self.coprime = bool(coprime)
        self.skipped = []
        return

# End class CorrespondenceReport

# End of file
