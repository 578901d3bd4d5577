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

"""Frobenius initial conditions and the mirror correspondence.

The classical correspondence sends eta^d_gamma to the graded class of
omega~_(kmin({1-gamma}) + d).  The quantum correspondence compares the
initial conditions (A0, A_inf, g, e0) built from the three-point values
of orbimirror.aside with those of the mirror in orbimirror.bside.
"""

__all__ = ["FrobeniusData", "xi", "initialConditionsA",
           "verifyClassical", "verifyQuantum", "checkDubrovinPreconditions",
           "CONDITIONAL_NOTE"]

import logging
from itertools import product

import numpy
import sympy

from orbimirror import aside, bside
from orbimirror.checkresults import CheckReport, CorrespondenceReport
from orbimirror.spectral import asWeights, buildSpectrum
from orbimirror.util.rationals import fractionalPart
from orbimirror.util.matrixutils import (toSympy, exactInverse,
        identityMatrix, firstDifference)

logger = logging.getLogger(__name__)

CONDITIONAL_NOTE = ("conditional on the conjectured quantum three-point "
                    "values")


class FrobeniusData(object):
    """Initial conditions of a Frobenius manifold.

    Attributes
    a0          --  mu x mu matrix of the Euler multiplication at the
                    origin, columns indexed by the flat basis.
    a_inf       --  mu x mu grading matrix.
    g           --  mu x mu metric.
    e0          --  flat index of the unit.
    constant    --  c with char(a0) = lambda^mu - c.
    statuses    --  dict mapping A0 slots (row, column) to the status of
                    the three-point value used there, empty for the B side.
    """

    def __init__(self, a0, a_inf, g, e0, constant, statuses=None):
        self.a0 = a0
        self.a_inf = a_inf
        self.g = g
        self.e0 = int(e0)
        self.constant = constant
        self.statuses = dict(statuses or {})
        return

    @property
    def mu(self):
        return self.a0.shape[0]

    def unitVector(self):
        """Column vector of e0 as an object array."""
        rv = numpy.zeros((self.mu, 1), dtype=object)
        rv[self.e0, 0] = 1
        return rv

    def cycleEntries(self):
        """List of ((row, column), value) for the non-zero A0 slots."""
        mu = self.mu
        return [(((j + 1) % mu, j), self.a0[(j + 1) % mu, j])
                for j in range(mu)]

# End class FrobeniusData


def xi(weights, c):
    """Classical correspondence of a basis class.

    c   --  CohClass eta^d_gamma.

    Returns the index kmin({1-gamma}) + d of the graded class omega~.
    """
    tbl = buildSpectrum(weights)
    return tbl.kmin(fractionalPart(1 - c.gamma)) + c.d


def initialConditionsA(weights):
    """Initial conditions from the orbifold side.

    A0 and A_inf come from aside.aMatrices, g is the orbifold Poincare
    pairing in the flat basis and e0 = eta^0_0.

    Returns a FrobeniusData with the status of every three-point value
    that entered A0.
    """
    w = asWeights(weights)
    mu, n = w.mu, w.n
    a0, ainf = aside.aMatrices(w)
    g = aside.pairingMatrix(w)
    statuses = {}
    for j in range(mu):
        k = (n - 1 - j) % mu
        statuses[(j + 1) % mu, j] = aside.gwThreePoint(w, j, k).status
    unit = xi(w, aside.cohClass(w, 0, 0))
    return FrobeniusData(a0, ainf, g, unit,
                         bside.criticalValueConstant(w), statuses)


def verifyClassical(weights):
    """Check that the correspondence is a graded Frobenius isomorphism.

    Checks, over all basis elements, pairs and triples, that the map is
    a bijection preserving degrees, the pairing, the 3-tensor and the
    cup product.

    Returns a CorrespondenceReport.
    """
    w = asWeights(weights)
    tbl = buildSpectrum(w)
    mu = w.mu
    report = CorrespondenceReport(w.w, "classical correspondence", w.coprime)
    bs = aside.basis(w)
    image = [xi(w, c) for c in bs]

    fails = [] if sorted(image) == list(range(mu)) else ["not a bijection"]
    if image[0] != 0:
        fails.append("unit maps to %i" % image[0])
    report.addInstances("bijection", fails, mu)

    fails = [c.label() for c, k in zip(bs, image)
             if c.half_degree != tbl.sigma(k)]
    report.addInstances("degree", fails, mu)

    fails = []
    for (c1, k1), (c2, k2) in product(zip(bs, image), repeat=2):
        if aside.poincarePairing(w, c1, c2) != bside.gradedPairing(w, k1, k2):
            fails.append("(%s,%s)" % (c1.label(), c2.label()))
    report.addInstances("pairing", fails, mu * mu)

    fails = []
    for (c1, k1), (c2, k2), (c3, k3) in product(zip(bs, image), repeat=3):
        t = aside.tripleTensor(w, c1, c2, c3)
        if t != bside.gradedTriple(w, k1, k2, k3):
            fails.append("(%s,%s,%s)" % (c1.label(), c2.label(), c3.label()))
    report.addInstances("triple", fails, mu ** 3)

    fails = []
    for (c1, k1), (c2, k2) in product(zip(bs, image), repeat=2):
        p = aside.cup(w, c1, c2)
        coeff, m = bside.gradedProduct(w, k1, k2, rescaled=True)
        if p.isZero:
            ok = m is None or coeff == 0
        else:
            ok = m == xi(w, p.cls) and coeff == p.coeff
        if not ok:
            fails.append("(%s,%s)" % (c1.label(), c2.label()))
    report.addInstances("cup", fails, mu * mu)
    logger.debug("classical correspondence for w=%r: %s",
                 w.w, report.passed)
    return report


def verifyQuantum(weights):
    """Compare the initial conditions of both sides entrywise.

    Without gcd(mu, lcm w) = 1 the orbifold side leaves the three-point
    values off the pattern 1 + j + k = n mod mu undefined; the A0 slots
    that depend on them are skipped and listed in the report.

    Returns a CorrespondenceReport.
    """
    w = asWeights(weights)
    mu = w.mu
    report = CorrespondenceReport(w.w, "quantum correspondence", w.coprime)
    da = initialConditionsA(w)
    db = bside.initialConditionsB(w)
    report.conjecture_used = any(s == aside.QUANTUM_CONJECTURE
                                 for s in da.statuses.values())

    fails = []
    count = 0
    for r, c in product(range(mu), range(mu)):
        oncycle = (r == (c + 1) % mu)
        if not oncycle and not w.coprime:
            report.skipped.append((r, c))
            continue
        count += 1
        if da.a0[r, c] != db.a0[r, c]:
            fails.append("A0[%i,%i]: %s != %s" % (r, c, da.a0[r, c],
                                                  db.a0[r, c]))
    report.addInstances("a0", fails, count)

    for name in ("a_inf", "g"):
        idx = firstDifference(getattr(da, name), getattr(db, name))
        witness = [] if idx is None else ["%s%r" % (name, idx)]
        report.addInstances(name, witness, mu * mu)
    fails = [] if da.e0 == db.e0 else ["e0: %i != %i" % (da.e0, db.e0)]
    report.addInstances("e0", fails, 1)

    if report.conjecture_used:
        report.notes.append(CONDITIONAL_NOTE)
    if not w.coprime:
        report.notes.append("gcd(mu, lcm w) != 1: %i off-cycle A0 slots "
                            "unsupported and skipped" % len(report.skipped))
    return report


def checkDubrovinPreconditions(weights, data=None):
    """Check the hypotheses of the initial-condition theorem.

    weights --  Weights or a sequence of positive integers.
    data    --  FrobeniusData to check, the mirror initial conditions
                when None.

    The checks are
    (i)   char(A0) = lambda^mu - c with c != 0;
    (ii)  A0 is self-adjoint for g, A0^T g = g A0;
    (iii) A_inf + g^-1 A_inf^T g = n id;
    (iv)  e0 is an eigenvector of A_inf with eigenvalue 0 and a cyclic
          vector of A0.

    Returns a CheckReport.
    """
    w = asWeights(weights)
    mu, n = w.mu, w.n
    if data is None:
        data = bside.initialConditionsB(w)
    report = CheckReport(w.w, "initial conditions")
    a0, ainf, g = data.a0, data.a_inf, data.g

    lam = sympy.Symbol('lambda')
    cp = toSympy(a0).charpoly(lam).as_expr()
    c = sympy.Rational(data.constant.numerator, data.constant.denominator)
    expected = lam ** mu - c
    fails = []
    if sympy.expand(cp - expected) != 0:
        fails.append("char(A0) = %s" % cp)
    if c == 0:
        fails.append("constant is zero")
    report.addInstances("characteristic-polynomial", fails, 1)

    idx = firstDifference(a0.T.dot(g), g.dot(a0))
    report.addInstances("a0-self-adjoint",
                        [] if idx is None else ["%r" % (idx,)], mu * mu)

    try:
        ginv = exactInverse(g)
        lhs = ainf + ginv.dot(ainf.T).dot(g)
        idx = firstDifference(lhs, n * identityMatrix(mu))
        fails = [] if idx is None else ["%r" % (idx,)]
    except ZeroDivisionError:
        fails = ["metric is singular"]
    report.addInstances("a-inf-adjoint", fails, mu * mu)

    e = data.unitVector()
    col = ainf.dot(e)
    fails = ["row %i" % i for i in range(mu) if col[i, 0] != 0]
    report.addInstances("unit-eigenvector", fails, mu)

    krylov = []
    v = e
    for _ in range(mu):
        krylov.append(v[:, 0])
        v = a0.dot(v)
    km = numpy.array(krylov, dtype=object).T
    rank = toSympy(km).rank()
    fails = [] if rank == mu else ["Krylov rank %i < %i" % (rank, mu)]
    report.addInstances("cyclic-unit", fails, 1)
    return report

# End of file
