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

"""Chen-Ruan orbifold cohomology of a weighted projective space.

The basis classes eta^d_gamma are indexed by a sector gamma in S_w and a
power 0 <= d < delta(gamma) of the hyperplane class of the twisted
sector.  The flat index of eta^d_gamma is kmin({1-gamma}) + d, and its
orbifold degree is 2 (d + a(gamma)).

The module provides the orbifold Poincare pairing, the obstruction
bundle of a sector triple, the orbifold 3-tensor and cup product, and
the three-point Gromov-Witten values with one divisor insertion that
determine the Euler multiplication A0 at the origin.
"""

__all__ = ["CohClass", "ScaledClass", "ZERO", "ObstructionBundle",
           "GWValue", "GWDegree", "basis", "cohClass", "classAt",
           "poincarePairing", "pairingMatrix", "obstructionBundle",
           "tripleTensor", "cup", "topIntegral", "gwDegree", "gwThreePoint",
           "aMatrices", "orbifoldBetti", "h2Generator", "verifyRingAxioms"]

import logging
from collections import OrderedDict
from itertools import product

from orbimirror.exceptions import InputError, DomainError, ConsistencyError
from orbimirror.checkresults import CheckReport
from orbimirror.spectral import asWeights, buildSpectrum
from orbimirror.bside import criticalValueConstant
from orbimirror.util.rationals import F, fractionalPart, productOf
from orbimirror.util.matrixutils import zeroMatrix, diagonalMatrix

logger = logging.getLogger(__name__)

# Status tags of gwThreePoint
CLASSICAL = "classical"
QUANTUM_THEOREM = "quantum-theorem"
QUANTUM_CONJECTURE = "quantum-conjecture"
ZERO_STATUS = "zero"
UNSUPPORTED = "unsupported"

_SUPERSCRIPTS = dict(zip(map(ord, "0123456789"), u"⁰¹²³⁴⁵⁶⁷⁸⁹"))


class CohClass(object):
    """Basis class eta^d_gamma of the orbifold cohomology.

    Attributes
    gamma       --  sector label, Fraction in [0, 1).
    d           --  power of the hyperplane class, 0 <= d < delta(gamma).
    flat        --  flat index kmin({1-gamma}) + d.
    half_degree --  d + a(gamma).
    """

    def __init__(self, gamma, d, flat, half_degree):
        self.gamma = F(gamma)
        self.d = int(d)
        self.flat = int(flat)
        self.half_degree = F(half_degree)
        return

    @property
    def degree(self):
        """Orbifold degree, twice the half degree."""
        return 2 * self.half_degree

    def label(self):
        """ASCII label "eta[d,gamma]"."""
        g = self.gamma
        gtxt = str(g.numerator) if g.denominator == 1 else str(g)
        return "eta[%i,%s]" % (self.d, gtxt)

    def prettyLabel(self):
        """Label with glyphs, "η²_{2/3}"."""
        g = self.gamma
        gtxt = str(g.numerator) if g.denominator == 1 else str(g)
        return u"η%s_{%s}" % (str(self.d).translate(_SUPERSCRIPTS), gtxt)

    def __eq__(self, other):
        return (isinstance(other, CohClass) and
                (self.gamma, self.d) == (other.gamma, other.d))

    def __hash__(self):
        return hash((self.gamma, self.d))

    def __repr__(self):
        return "CohClass(%s, d=%i, flat=%i)" % (self.gamma, self.d, self.flat)

# End class CohClass


class ScaledClass(object):
    """Rational multiple of a basis class, or the zero class.

    Attributes
    coeff   --  Fraction, 0 exactly when cls is None.
    cls     --  CohClass or None for the zero class.
    """

    def __init__(self, coeff, cls):
        coeff = F(coeff)
        if (coeff == 0) != (cls is None):
            raise ValueError("zero coefficient must go with the zero class")
        self.coeff = coeff
        self.cls = cls
        return

    @property
    def isZero(self):
        return self.cls is None

    def label(self):
        if self.isZero:
            return "0"
        c = self.coeff
        ctxt = str(c.numerator) if c.denominator == 1 else str(c)
        return "%s*%s" % (ctxt, self.cls.label())

    def prettyLabel(self):
        if self.isZero:
            return "0"
        c = self.coeff
        ctxt = str(c.numerator) if c.denominator == 1 else str(c)
        return u"%s·%s" % (ctxt, self.cls.prettyLabel())

    def __eq__(self, other):
        return (isinstance(other, ScaledClass) and
                (self.coeff, self.cls) == (other.coeff, other.cls))

    def __hash__(self):
        return hash((self.coeff, self.cls))

    def __repr__(self):
        return "ScaledClass(%s, %r)" % (self.coeff, self.cls)

# End class ScaledClass

ZERO = ScaledClass(0, None)


class ObstructionBundle(object):
    """Obstruction bundle of a sector triple as a sum of line bundles.

    Attributes
    J               --  sorted tuple of indices i with
                        {g0 wi} + {g1 wi} + {ginf wi} = 2.
    rank            --  len(J).
    summand_weights --  tuple (wj for j in J); the bundle is the sum of
                        O(wj) over the common twisted sector.
    """

    def __init__(self, J, summand_weights):
        self.J = tuple(J)
        self.rank = len(self.J)
        self.summand_weights = tuple(summand_weights)
        return

    def label(self):
        if not self.J:
            return "0"
        return "+".join("O(%i)" % x for x in self.summand_weights)

    def __repr__(self):
        return "ObstructionBundle(J=%r, rank=%i)" % (self.J, self.rank)

# End class ObstructionBundle


class GWValue(object):
    """Three-point value ((eta_1, eta_j, eta_k)) with its provenance.

    Attributes
    value   --  Fraction, or None when status is "unsupported".
    status  --  one of "classical", "quantum-theorem",
                "quantum-conjecture", "zero", "unsupported".
    """

    def __init__(self, value, status):
        self.value = None if value is None else F(value)
        self.status = status
        return

    @property
    def conjectural(self):
        return self.status == QUANTUM_CONJECTURE

    def __eq__(self, other):
        return (isinstance(other, GWValue) and
                (self.value, self.status) == (other.value, other.status))

    def __repr__(self):
        return "GWValue(%s, %r)" % (self.value, self.status)

# End class GWValue


class GWDegree(object):
    """Degree of the class A(j, k) measured by eta_1.

    Attributes
    value       --  Fraction (1+j+k-n)/mu - s(j) - s(k).
    effective   --  True when lcm(w) * value is a natural number.
    """

    def __init__(self, value, effective):
        self.value = F(value)
        self.effective = bool(effective)
        return

    def __repr__(self):
        return "GWDegree(%s, effective=%r)" % (self.value, self.effective)

# End class GWDegree

# ----------------------------------------------------------------------------
# basis and pairing


def _checkIndex(mu, j):
    if int(j) != j or not 0 <= j < mu:
        raise InputError("flat index %r outside 0..%i" % (j, mu - 1))
    return int(j)


def cohClass(weights, gamma, d=0):
    """Return the basis class eta^d_gamma.

    Raises InputError when gamma is not a sector of the weights or
    d is not in range(delta(gamma)).
    """
    tbl = buildSpectrum(weights)
    g = F(gamma)
    if not tbl.inSpectrum(g):
        raise InputError("%s is not a sector of w = %s" % (g, tbl.weights))
    sc = tbl.sector(g)
    if int(d) != d or not 0 <= d < sc.delta:
        emsg = "power d=%r outside 0..%i for sector %s" % (d, sc.delta - 1, g)
        raise InputError(emsg)
    flat = tbl.kmin(fractionalPart(1 - g)) + int(d)
    return CohClass(g, d, flat, int(d) + sc.age)


def classAt(weights, flat):
    """Return the basis class eta_flat with the given flat index."""
    tbl = buildSpectrum(weights)
    i = _checkIndex(tbl.mu, flat)
    si = tbl.s(i)
    d = i - tbl.kmin(si)
    g = fractionalPart(1 - si)
    return CohClass(g, d, i, d + tbl.sector(g).age)


def basis(weights):
    """Return the mu basis classes ordered by flat index."""
    tbl = buildSpectrum(weights)
    return tuple(classAt(tbl.weights, i) for i in range(tbl.mu))


def poincarePairing(weights, c1, c2):
    """Orbifold Poincare pairing of two basis classes.

    The pairing is 1/prod_{i in I(gamma1)} wi when
    gamma2 = {1 - gamma1} and d1 + d2 = delta(gamma1) - 1, else 0.
    """
    tbl = buildSpectrum(weights)
    if c2.gamma != fractionalPart(1 - c1.gamma):
        return F(0)
    sc = tbl.sector(c1.gamma)
    if c1.d + c2.d != sc.delta - 1:
        return F(0)
    w = tbl.weights
    return 1 / productOf(w[i] for i in sc.I)


def pairingMatrix(weights):
    """Pairing matrix of the basis in the flat order."""
    bs = basis(weights)
    mu = len(bs)
    rv = zeroMatrix(mu)
    for c1, c2 in product(bs, bs):
        rv[c1.flat, c2.flat] = poincarePairing(weights, c1, c2)
    return rv


def topIntegral(weights):
    """Orbifold integral of eta_0^n, equal to 1 / prod(w)."""
    w = asWeights(weights)
    return 1 / productOf(w)

# ----------------------------------------------------------------------------
# obstruction bundle, 3-tensor and cup product


def _obstructionIndices(w, g0, g1, ginf):
    rv = [i for i, wi in enumerate(w)
          if (fractionalPart(g0 * wi) + fractionalPart(g1 * wi) +
              fractionalPart(ginf * wi)) == 2]
    return rv


def _commonIndices(tbl, *gammas):
    sets = [set(tbl.sector(g).I) for g in gammas]
    return set.intersection(*sets)


def obstructionBundle(weights, g0, g1, ginf):
    """Obstruction bundle E(g0, g1, ginf) of a sector triple.

    g0, g1, ginf    --  rationals in [0, 1) with an integral sum.

    Returns an ObstructionBundle.
    Raises InputError for labels outside [0, 1), DomainError when the
    sum is not an integer.
    """
    tbl = buildSpectrum(weights)
    w = tbl.weights
    gs = [tbl.sector(g).gamma for g in (g0, g1, ginf)]
    total = sum(gs)
    if total.denominator != 1:
        emsg = "sector triple %s, %s, %s does not sum to an integer" % tuple(gs)
        raise DomainError(emsg)
    J = _obstructionIndices(w, *gs)
    common = _commonIndices(tbl, *gs)
    ages = sum(tbl.sector(g).age for g in gs)
    expected = (len(common) - 1) - w.n + ages
    if expected != len(J):
        emsg = "obstruction rank %i differs from dimension count %s" % (
            len(J), expected)
        raise ConsistencyError(emsg, (len(J), expected))
    return ObstructionBundle(J, [w[i] for i in J])


def tripleTensor(weights, c0, c1, c2):
    """Orbifold 3-tensor of three basis classes.

    Non-zero only when the sector labels sum to an integer and the half
    degrees sum to n.  The value is prod_J wi / prod_{I(g0,g1,g2)} wi.
    """
    tbl = buildSpectrum(weights)
    w = tbl.weights
    gs = (c0.gamma, c1.gamma, c2.gamma)
    if sum(gs).denominator != 1:
        return F(0)
    if c0.half_degree + c1.half_degree + c2.half_degree != w.n:
        return F(0)
    common = _commonIndices(tbl, *gs)
    if not common:
        return F(0)
    J = _obstructionIndices(w, *gs)
    return productOf(w[i] for i in J) / productOf(w[i] for i in common)


def cup(weights, c0, c1):
    """Orbifold cup product of two basis classes.

    The product is (prod_{i in K} wi) eta^d_gamma with
    gamma = {g0 + g1}, K = J(g0, g1, {1-gamma}) + (I(gamma) - I(g0) & I(g1))
    and d = h0 + h1 - a(gamma).  It vanishes when d >= delta(gamma).

    Returns a ScaledClass, ZERO for the zero class.
    """
    tbl = buildSpectrum(weights)
    w = tbl.weights
    g = fractionalPart(c0.gamma + c1.gamma)
    if not tbl.inSpectrum(g):
        return ZERO
    sc = tbl.sector(g)
    d = c0.half_degree + c1.half_degree - sc.age
    if d.denominator != 1 or d < 0:
        emsg = "cup product power %s is not a natural number" % d
        raise ConsistencyError(emsg, (c0, c1))
    if d >= sc.delta:
        return ZERO
    J = _obstructionIndices(w, c0.gamma, c1.gamma, fractionalPart(1 - g))
    K = set(J) | (set(sc.I) - _commonIndices(tbl, c0.gamma, c1.gamma))
    coeff = productOf(w[i] for i in K)
    return ScaledClass(coeff, cohClass(w, g, int(d)))

# ----------------------------------------------------------------------------
# Gromov-Witten values


def gwDegree(weights, j, k):
    """Degree of A(j, k) against eta_1 and the effectivity test.

    Returns a GWDegree.
    Raises InputError for indices outside 0..mu-1.
    """
    tbl = buildSpectrum(weights)
    w = tbl.weights
    j = _checkIndex(w.mu, j)
    k = _checkIndex(w.mu, k)
    value = F(1 + j + k - w.n, w.mu) - tbl.s(j) - tbl.s(k)
    scaled = w.lcm_w * value
    return GWDegree(value, scaled.denominator == 1 and scaled >= 0)


def _prodI(tbl, gamma):
    w = tbl.weights
    return productOf(w[i] for i in tbl.sector(gamma).I)


def gwThreePoint(weights, j, k):
    """Three-point value ((eta_1, eta_j, eta_k)) at the origin.

    The value is 0 unless 1 + j + k = n mod mu.  On the classical
    pattern sigma(1) + sigma(j) + sigma(k) = n it is the orbifold
    3-tensor 1/prod_{I(s(j))} wi.  Otherwise it is the conjectured
    1/(prod_{I(s(j))} wi * prod_{I(s(k))} wi), which for weights all
    equal to 1 is the known quantum product of projective space.

    Off the pattern 1 + j + k = n mod mu the vanishing needs
    gcd(mu, lcm w) = 1; without it the status is "unsupported" and the
    value is None.

    Returns a GWValue.
    """
    tbl = buildSpectrum(weights)
    w = tbl.weights
    mu, n = w.mu, w.n
    j = _checkIndex(mu, j)
    k = _checkIndex(mu, k)
    if (1 + j + k - n) % mu != 0:
        if w.coprime:
            return GWValue(0, ZERO_STATUS)
        return GWValue(None, UNSUPPORTED)
    one = 1 % mu
    if tbl.sigma(one) + tbl.sigma(j) + tbl.sigma(k) == n:
        return GWValue(1 / _prodI(tbl, tbl.s(j)), CLASSICAL)
    value = 1 / (_prodI(tbl, tbl.s(j)) * _prodI(tbl, tbl.s(k)))
    if all(x == 1 for x in w):
        return GWValue(value, QUANTUM_THEOREM)
    return GWValue(value, QUANTUM_CONJECTURE)


def aMatrices(weights):
    """Euler multiplication A0 at the origin and the grading A_inf.

    A0 has a single non-zero entry per column, at row (j+1) mod mu:
    mu * ((eta_1, eta_j, eta_k)) * prod_{I(s(k))} wi with
    k = (n-1-j) mod mu.  A_inf is diag(sigma).

    Returns a pair of mu x mu object arrays (A0, A_inf).
    """
    tbl = buildSpectrum(weights)
    w = tbl.weights
    mu, n = w.mu, w.n
    a0 = zeroMatrix(mu)
    for j in range(mu):
        k = (n - 1 - j) % mu
        gw = gwThreePoint(w, j, k)
        a0[(j + 1) % mu, j] = mu * gw.value * _prodI(tbl, tbl.s(k))
    ainf = diagonalMatrix(tbl.sigmas)
    return a0, ainf

# ----------------------------------------------------------------------------
# supplementary invariants


def orbifoldBetti(weights):
    """Number of basis classes per orbifold degree.

    Returns an OrderedDict mapping the degree (Fraction) to a count,
    in ascending degree.
    """
    counts = {}
    for c in basis(weights):
        counts[c.degree] = counts.get(c.degree, 0) + 1
    return OrderedDict(sorted(counts.items()))


def h2Generator(weights):
    """Generator D_w = lcm(w) eta_1 of the integral second cohomology.

    Raises DomainError for a zero-dimensional weighted space.
    """
    w = asWeights(weights)
    if w.n == 0:
        raise DomainError("P(w) of dimension 0 has no divisor class")
    return ScaledClass(w.lcm_w, classAt(w, 1))

# ----------------------------------------------------------------------------
# ring axioms


def verifyRingAxioms(weights):
    """Brute-force check of the Frobenius algebra axioms.

    Checks commutativity, associativity, the unit eta^0_0, the grading,
    the Frobenius property pairing(a.b, c) = triple(a, b, c) =
    pairing(a, b.c), the pairing symmetry and non-degeneracy, the
    obstruction rank formula over all integral sector triples, and
    A_inf + A_inf* = n id.

    Returns a CheckReport.
    """
    tbl = buildSpectrum(weights)
    w = tbl.weights
    bs = basis(w)
    mu, n = w.mu, w.n
    report = CheckReport(w.w, "orbifold ring")

    products = {}
    for a, b in product(bs, bs):
        products[a.flat, b.flat] = cup(w, a, b)

    def pairWith(sc, c):
        if sc.isZero:
            return F(0)
        return sc.coeff * poincarePairing(w, sc.cls, c)

    def scale(x, sc):
        if sc.isZero or x == 0:
            return {}
        return {sc.cls.flat: x * sc.coeff}

    unit = bs[0]
    fails = [(c.label()) for c in bs if cup(w, unit, c) != ScaledClass(1, c)]
    report.addInstances("unit", fails, mu)

    fails = ["(%i,%i)" % (i, j) for (i, j) in products
             if products[i, j] != products[j, i]]
    report.addInstances("commutativity", fails, len(products))

    fails = []
    for a, b in product(bs, bs):
        p = products[a.flat, b.flat]
        if p.isZero:
            continue
        if p.cls.half_degree != a.half_degree + b.half_degree:
            fails.append("(%i,%i)" % (a.flat, b.flat))
    report.addInstances("grading", fails, len(products))

    fails = []
    for a, b, c in product(bs, bs, bs):
        ab = products[a.flat, b.flat]
        bc = products[b.flat, c.flat]
        left = {}
        if not ab.isZero:
            left = scale(ab.coeff, products[ab.cls.flat, c.flat])
        right = {}
        if not bc.isZero:
            right = scale(bc.coeff, products[a.flat, bc.cls.flat])
        if left != right:
            fails.append("(%i,%i,%i)" % (a.flat, b.flat, c.flat))
    report.addInstances("associativity", fails, mu ** 3)

    fails = []
    for a, b, c in product(bs, bs, bs):
        t = tripleTensor(w, a, b, c)
        left = pairWith(products[a.flat, b.flat], c)
        right = pairWith(products[b.flat, c.flat], a)
        if not t == left == right:
            fails.append("(%i,%i,%i)" % (a.flat, b.flat, c.flat))
    report.addInstances("frobenius", fails, mu ** 3)

    g = pairingMatrix(w)
    fails = ["(%i,%i)" % (i, j) for i in range(mu) for j in range(mu)
             if g[i, j] != g[j, i]]
    rowsok = all(any(g[i, j] != 0 for j in range(mu)) for i in range(mu))
    nonzero = sum(1 for i in range(mu) for j in range(mu) if g[i, j] != 0)
    if not rowsok or nonzero != mu:
        fails.append("pairing is not a non-degenerate antidiagonal")
    report.addInstances("pairing", fails, mu * mu)

    fails = []
    count = 0
    gammas = [sc.gamma for sc in tbl.sectors]
    for g0, g1 in product(gammas, gammas):
        ginf = fractionalPart(-(g0 + g1))
        count += 1
        try:
            obstructionBundle(w, g0, g1, ginf)
        except ConsistencyError as e:
            fails.append(str(e))
    report.addInstances("obstruction-rank", fails, count)

    # adjoint of A_inf with respect to the antidiagonal pairing
    _, ainf = aMatrices(w)
    fails = []
    for i in range(mu):
        istar = (n - i) % mu
        if ainf[i, i] + ainf[istar, istar] != n:
            fails.append("i=%i" % i)
    report.addInstances("a-inf-adjoint", fails, mu)

    fails = []
    cycle = productOf(aMatrices(w)[0][(j + 1) % mu, j] for j in range(mu))
    expected = criticalValueConstant(w)
    if cycle != expected:
        fails.append("cycle product %s != %s" % (cycle, expected))
    report.addInstances("a0-cycle-product", fails, 1)
    logger.debug("ring axioms for w=%r: %s", w.w, report.passed)
    return report

# End of file
