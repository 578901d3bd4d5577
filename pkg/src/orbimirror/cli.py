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

"""Command line interface of orbimirror.

Usage: orbimirror VERB --weights W [options]

Every verb builds a table of rows and renders it with
orbimirror.util.emitters.  Exit codes are 0 on success, 1 when a
verification fails and 2 on a usage or input error.
"""

__all__ = ["VERBS", "run", "main"]

import argparse
import io
import logging
import sys
from collections import OrderedDict
from itertools import product

from orbimirror import aside, bside, frobenius, spectral, wdvv
from orbimirror.exceptions import OrbiMirrorError, ConsistencyError
from orbimirror.checkresults import CheckReport
from orbimirror.util.emitters import FORMATS, emit
from orbimirror.util.inpututils import parseWeights, maxMu
from orbimirror.util.rationals import F, stringToRational

logger = logging.getLogger(__name__)

VERBS = ("info", "basis", "pairing", "cup-table", "triple", "obstruction",
         "gw", "bside", "frobenius", "correspond", "potential", "check")

CONJECTURAL = "conjectural"

# exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class _Table(object):
    """Rows of one command with the verdict of a verification."""

    def __init__(self, kind, rows, passed=True):
        self.kind = kind
        self.rows = rows
        self.passed = passed
        return

# End class _Table


def _labeler(opts):
    if opts.format == "md":
        return lambda c: c.prettyLabel()
    return lambda c: c.label()


def _row(*items):
    return OrderedDict(items)


def _reportTable(report):
    rows = report.rows()
    rows.extend(_row(("note", note)) for note in report.notes)
    return _Table(report.kind, rows, report.passed)

# ----------------------------------------------------------------------------
# verbs


def cmdInfo(w, opts):
    tbl = spectral.buildSpectrum(w)
    if opts.betti:
        rows = [_row(("degree", d), ("count", c))
                for d, c in aside.orbifoldBetti(w).items()]
        return _Table("betti", rows)
    rows = []
    for sc in tbl.sectors:
        rows.append(_row(("gamma", sc.gamma), ("I", list(sc.I)),
                         ("delta", sc.delta), ("age", sc.age),
                         ("kmin", tbl.kmin(sc.gamma)),
                         ("kmax", tbl.kmax(sc.gamma))))
    return _Table("sectors", rows)


def cmdBasis(w, opts):
    tbl = spectral.buildSpectrum(w)
    lbl = _labeler(opts)
    rows = []
    for c, om in zip(aside.basis(w), bside.omegaBasis(w)):
        rows.append(_row(("index", c.flat), ("class", lbl(c)),
                         ("gamma", c.gamma), ("d", c.d),
                         ("degree", c.degree), ("s", tbl.s(c.flat)),
                         ("sigma", tbl.sigma(c.flat)),
                         ("multi_index", list(om.multi_index)),
                         ("mirror", lbl(om))))
    return _Table("basis", rows)


def cmdPairing(w, opts):
    lbl = _labeler(opts)
    bs = aside.basis(w)
    rows = []
    for c1, c2 in product(bs, bs):
        v = aside.poincarePairing(w, c1, c2)
        if v != 0:
            rows.append(_row(("i", c1.flat), ("j", c2.flat),
                             ("left", lbl(c1)), ("right", lbl(c2)),
                             ("value", v)))
    return _Table("pairing", rows)


def _quantumTerms(w, coeffs, i, j, lbl):
    terms = wdvv.quantumProduct(coeffs, i, j)
    if not terms:
        return "0"
    parts = []
    for k, c in terms.items():
        sc = aside.ScaledClass(c, aside.classAt(w, k))
        parts.append(lbl(sc))
    return " + ".join(parts)


def cmdCupTable(w, opts):
    lbl = _labeler(opts)
    bs = aside.basis(w)
    rows = []
    if opts.quantum:
        initial = 'a' if opts.assume_conjecture else 'b'
        coeffs = wdvv.reconstruct(w, max_length=3, initial=initial)
        for c1, c2 in product(bs, bs):
            if c1.flat > c2.flat:
                continue
            rows.append(_row(("left", lbl(c1)), ("right", lbl(c2)),
                             ("product", _quantumTerms(w, coeffs, c1.flat,
                                                       c2.flat, lbl))))
        return _Table("quantum cup table", rows)
    for c1, c2 in product(bs, bs):
        if c1.flat > c2.flat:
            continue
        rows.append(_row(("left", lbl(c1)), ("right", lbl(c2)),
                         ("product", lbl(aside.cup(w, c1, c2)))))
    return _Table("cup table", rows)


def _gammas(opts, count):
    if not opts.gamma:
        return None
    if len(opts.gamma) != count:
        raise _UsageError("--gamma needs %i sector labels" % count)
    return [stringToRational(g) for g in opts.gamma]


def cmdTriple(w, opts):
    lbl = _labeler(opts)
    bs = aside.basis(w)
    gs = _gammas(opts, 3)
    rows = []
    for c0, c1, c2 in product(bs, bs, bs):
        if gs is None:
            if not c0.flat <= c1.flat <= c2.flat:
                continue
        elif [c0.gamma, c1.gamma, c2.gamma] != gs:
            continue
        v = aside.tripleTensor(w, c0, c1, c2)
        if v != 0:
            rows.append(_row(("i", c0.flat), ("j", c1.flat), ("k", c2.flat),
                             ("classes", [lbl(c0), lbl(c1), lbl(c2)]),
                             ("value", v)))
    return _Table("triple", rows)


def cmdObstruction(w, opts):
    tbl = spectral.buildSpectrum(w)
    gs = _gammas(opts, 3)
    if gs is not None:
        triples = [gs]
    else:
        labels = [sc.gamma for sc in tbl.sectors]
        triples = [list(t) for t in product(labels, labels, labels)
                   if t[0] <= t[1] <= t[2] and sum(t).denominator == 1]
    rows = []
    for g0, g1, g2 in triples:
        ob = aside.obstructionBundle(w, g0, g1, g2)
        rows.append(_row(("gammas", [g0, g1, g2]), ("J", list(ob.J)),
                         ("rank", ob.rank), ("bundle", ob.label())))
    return _Table("obstruction", rows)


def _indexPairs(w, opts):
    if opts.index:
        if len(opts.index) != 2:
            raise _UsageError("--index needs two flat indices")
        return [tuple(opts.index)]
    mu, n = w.mu, w.n
    return [(j, (n - 1 - j) % mu) for j in range(mu)]


def _marker(status, opts):
    if status == aside.QUANTUM_CONJECTURE and not opts.assume_conjecture:
        return CONJECTURAL
    return None


def cmdGW(w, opts):
    rows = []
    for j, k in _indexPairs(w, opts):
        deg = aside.gwDegree(w, j, k)
        gw = aside.gwThreePoint(w, j, k)
        rows.append(_row(("j", j), ("k", k), ("degree", deg.value),
                         ("effective", deg.effective), ("value", gw.value),
                         ("status", gw.status),
                         ("marker", _marker(gw.status, opts))))
    return _Table("gw", rows)


def cmdBSide(w, opts):
    if opts.index:
        rows = []
        for j, k in _indexPairs(w, opts):
            status = aside.gwThreePoint(w, j, k).status
            rows.append(_row(("j", j), ("k", k),
                             ("value", bside.bTripleTensor(w, j, k)),
                             ("closed_form", bside.bTripleClosedForm(w, j, k)),
                             ("marker", _marker(status, opts))))
        return _Table("bside triple", rows)
    lbl = _labeler(opts)
    a0, _ = bside.connectionMatrices(w)
    mu = w.mu
    rows = []
    for om in bside.omegaBasis(w):
        k = om.k
        j = (w.n - 1 - k) % mu
        status = aside.gwThreePoint(w, k, j).status
        rows.append(_row(("k", k), ("class", lbl(om)),
                         ("multi_index", list(om.multi_index)),
                         ("sigma", om.newton_degree),
                         ("rescale", om.rescale_factor.label()),
                         ("a0_row", (k + 1) % mu),
                         ("a0_value", a0[(k + 1) % mu, k]),
                         ("marker", _marker(status, opts))))
    return _Table("bside", rows)


def cmdFrobenius(w, opts):
    if opts.side == 'a':
        data = frobenius.initialConditionsA(w)
    else:
        data = bside.initialConditionsB(w)
    mu = data.mu
    rows = []
    for name in ("a0", "a_inf", "g"):
        m = getattr(data, name)
        for r, c in product(range(mu), range(mu)):
            if m[r, c] != 0:
                rows.append(_row(("matrix", name), ("row", r), ("col", c),
                                 ("value", F(m[r, c]))))
    rows.append(_row(("matrix", "e0"), ("row", data.e0)))
    rows.append(_row(("matrix", "constant"), ("value", F(data.constant))))
    return _Table("frobenius-%s" % opts.side, rows)


def cmdCorrespond(w, opts):
    if opts.quantum:
        report = frobenius.verifyQuantum(w)
    else:
        report = frobenius.verifyClassical(w)
    return _reportTable(report)


def cmdPotential(w, opts):
    initial = 'a' if opts.assume_conjecture else 'b'
    coeffs = wdvv.reconstruct(w, max_length=opts.max_length, initial=initial)
    rows = [_row(("alpha", list(alpha)), ("length", sum(alpha)),
                 ("value", v)) for alpha, v in coeffs.nonzero()]
    return _Table("potential", rows)


def cmdCheck(w, opts):
    report = CheckReport(w.w, "check")
    report.extend(spectral.verifySpectralIdentities(w), "spectral:")
    report.extend(aside.verifyRingAxioms(w), "aside:")
    report.extend(bside.verifyMirrorAlgebra(w), "bside:")
    report.extend(frobenius.verifyClassical(w), "classical:")
    report.extend(frobenius.verifyQuantum(w), "quantum:")
    report.extend(frobenius.checkDubrovinPreconditions(w), "dubrovin-b:")
    if w.coprime:
        da = frobenius.initialConditionsA(w)
        report.extend(frobenius.checkDubrovinPreconditions(w, da),
                      "dubrovin-a:")
    try:
        coeffs = wdvv.reconstruct(w, max_length=opts.max_length)
        report.extend(wdvv.verifyPotential(w, coeffs, residual_length=1),
                      "wdvv:")
    except ConsistencyError as e:
        report.addCheck("wdvv:reconstruct", False, 1, str(e))
    return _reportTable(report)


_COMMANDS = {
    "info": cmdInfo,
    "basis": cmdBasis,
    "pairing": cmdPairing,
    "cup-table": cmdCupTable,
    "triple": cmdTriple,
    "obstruction": cmdObstruction,
    "gw": cmdGW,
    "bside": cmdBSide,
    "frobenius": cmdFrobenius,
    "correspond": cmdCorrespond,
    "potential": cmdPotential,
    "check": cmdCheck,
}

# ----------------------------------------------------------------------------
# argument parsing


class _UsageError(OrbiMirrorError):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting."""

    def error(self, message):
        raise _UsageError(message)

# End class _Parser


def _positiveInt(txt):
    try:
        rv = int(txt)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid integer %r" % txt)
    if rv < 3:
        raise argparse.ArgumentTypeError("max-length must be >= 3")
    return rv


def buildParser():
    """Return the ArgumentParser of the orbimirror command."""
    parser = _Parser(prog="orbimirror",
                     description="Exact tables for weighted projective "
                     "spaces and their Landau-Ginzburg mirrors.")
    parser.add_argument("verb", choices=VERBS, help="table or check to run")
    parser.add_argument("--weights", required=True,
                        help="comma separated positive integers, e.g. 1,2,2")
    parser.add_argument("--format", choices=FORMATS, default="json",
                        help="output format (default json)")
    parser.add_argument("--max-length", type=_positiveInt, default=None,
                        help="largest coefficient length for potential "
                        "(default 8) and check (default 4)")
    parser.add_argument("--out", metavar="PATH", default=None,
                        help="write the output to PATH instead of stdout")
    parser.add_argument("--assume-conjecture", action="store_true",
                        help="treat conjectured quantum values as known")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--classical", dest="quantum", action="store_false",
                      help="classical correspondence (default)")
    mode.add_argument("--quantum", dest="quantum", action="store_true",
                      help="quantum correspondence or quantum cup table")
    parser.add_argument("--gamma", nargs="+", default=None,
                        help='sector labels as "p/q" (triple, obstruction)')
    parser.add_argument("--index", nargs="+", type=int, default=None,
                        help="flat indices (gw, bside)")
    parser.add_argument("--side", choices=("a", "b"), default="b",
                        help="initial conditions of the orbifold (a) or the "
                        "mirror (b) for frobenius")
    parser.add_argument("--betti", action="store_true",
                        help="info: orbifold Betti numbers per degree")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="log debug messages")
    parser.set_defaults(quantum=False)
    return parser


# options read by some verbs only, rejected elsewhere
_VERB_OPTIONS = OrderedDict([
    ("gamma", ("--gamma", ("triple", "obstruction"))),
    ("index", ("--index", ("gw", "bside"))),
    ("side", ("--side", ("frobenius",))),
    ("betti", ("--betti", ("info",))),
    ("quantum", ("--quantum", ("cup-table", "correspond"))),
])


def _checkVerbOptions(opts, parser):
    for dest, (flag, verbs) in _VERB_OPTIONS.items():
        if opts.verb in verbs:
            continue
        if getattr(opts, dest) != parser.get_default(dest):
            emsg = "%s is not used by %s, only by %s" % (
                flag, opts.verb, ", ".join(verbs))
            raise _UsageError(emsg)
    return


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    with io.open(path, "w", encoding="utf-8") as fp:
        fp.write(text)
    return


def run(argv=None):
    """Run the command line and return the exit code.

    argv    --  list of arguments without the program name,
                sys.argv[1:] when None.
    """
    parser = buildParser()
    args = sys.argv[1:] if argv is None else list(argv)
    try:
        opts = parser.parse_args(args)
    except _UsageError as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write("orbimirror: error: %s\n" % e)
        return EXIT_USAGE
    except SystemExit as e:
        return e.code or EXIT_OK
    logging.basicConfig()
    level = logging.DEBUG if opts.verbose else logging.WARNING
    logging.getLogger("orbimirror").setLevel(level)
    if opts.max_length is None:
        opts.max_length = 4 if opts.verb == "check" else \
            wdvv.DEFAULT_MAX_LENGTH
    try:
        _checkVerbOptions(opts, parser)
        w = spectral.asWeights(parseWeights(opts.weights))
        limit = maxMu()
        if w.mu > limit:
            emsg = "mu = %i exceeds the limit %i, raise ORBIMIRROR_MAX_MU" % (
                w.mu, limit)
            raise _UsageError(emsg)
        logger.debug("running %s for w=%r", opts.verb, w.w)
        table = _COMMANDS[opts.verb](w, opts)
    except ConsistencyError as e:
        sys.stderr.write("orbimirror: inconsistent: %s\n" % e)
        return EXIT_FAILED
    except OrbiMirrorError as e:
        sys.stderr.write("orbimirror: error: %s\n" % e)
        return EXIT_USAGE
    text = emit(table.kind, w.w, table.rows, opts.format)
    try:
        _write(text, opts.out)
    except OSError as e:
        sys.stderr.write("orbimirror: cannot write %s: %s\n" % (
            opts.out, e.strerror or e))
        return EXIT_USAGE
    return EXIT_OK if table.passed else EXIT_FAILED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

# End of file
