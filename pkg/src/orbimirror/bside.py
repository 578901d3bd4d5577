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

"""Landau-Ginzburg mirror data of a weighted projective space.

The mirror Laurent polynomial has a Jacobian algebra of dimension mu with
the basis classes [omega_k] = [u^a(k) omega_0], k = 0..mu-1, where a(k)
is the multi-index sequence of orbimirror.spectral.  The product is

    [omega_i] * [omega_j] = w^(a(i) + a(j) - a(i+j)) [omega_(i+j mod mu)]

with the un-reduced multi-index a(i+j).  The rescaled basis is
omega~_k = r_k omega_k with r_k = w^a(kmin(s(k))) / w^a(k).  In that
basis the residue metric, the connection matrices and the Newton-graded
algebra take the closed forms implemented here.
"""

__all__ = ["WeightMonomial", "OmegaClass", "omegaBasis", "star",
           "rescaleFactor", "tildeStar", "connectionMatrices",
           "connectionClosedForm", "residuePairing", "residueMatrix",
           "bTripleTensor", "bTripleClosedForm", "bTripleMonomial",
           "fullTensor", "gradedProduct", "gradedPairing", "gradedTriple",
           "gradedTripleFromProduct", "criticalValueConstant",
           "initialConditionsB", "verifyMirrorAlgebra"]

import logging
from itertools import product

from orbimirror.checkresults import CheckReport
from orbimirror.exceptions import InputError
from orbimirror.spectral import buildSpectrum, asWeights
from orbimirror.util.rationals import F, fractionalPart, productOf
from orbimirror.util.matrixutils import zeroMatrix, diagonalMatrix

logger = logging.getLogger(__name__)


class WeightMonomial(object):
    """Monomial w^v = prod wi^vi in the weights.

    Attributes
    weights     --  tuple of weights.
    exponents   --  tuple of ints v, entries may be negative.
    """

    def __init__(self, weights, exponents):
        self.weights = tuple(weights)
        self.exponents = tuple(int(x) for x in exponents)
        if len(self.exponents) != len(self.weights):
            raise ValueError("exponent vector has the wrong length")
        return

    def value(self):
        """Exact value as a Fraction."""
        return productOf(F(wi) ** vi
                         for wi, vi in zip(self.weights, self.exponents))

    def __mul__(self, other):
        v = [x + y for x, y in zip(self.exponents, other.exponents)]
        return WeightMonomial(self.weights, v)

    def __truediv__(self, other):
        v = [x - y for x, y in zip(self.exponents, other.exponents)]
        return WeightMonomial(self.weights, v)

    def __eq__(self, other):
        return (isinstance(other, WeightMonomial) and
                self.weights == other.weights and
                self.exponents == other.exponents)

    def __hash__(self):
        return hash((self.weights, self.exponents))

    def label(self):
        return "w^(%s)" % ",".join(str(x) for x in self.exponents)

    def __repr__(self):
        return "WeightMonomial(%r, %r)" % (self.weights, self.exponents)

# End class WeightMonomial


class OmegaClass(object):
    """Basis class omega_k of the Brieskorn lattice.

    Attributes
    k               --  flat index.
    multi_index     --  a(k).
    newton_degree   --  sigma(k), the V-order of omega_k.
    rescale_factor  --  WeightMonomial r_k with omega~_k = r_k omega_k.
    """

    def __init__(self, k, multi_index, newton_degree, rescale_factor):
        self.k = int(k)
        self.multi_index = tuple(multi_index)
        self.newton_degree = F(newton_degree)
        self.rescale_factor = rescale_factor
        return

    def label(self):
        return "omega~[%i]" % self.k

    def prettyLabel(self):
        return u"ω̃_%i" % self.k

    def __repr__(self):
        return "OmegaClass(%i, a=%r, sigma=%s)" % (
            self.k, self.multi_index, self.newton_degree)

# End class OmegaClass


def _checkIndex(mu, j):
    if int(j) != j or not 0 <= j < mu:
        raise InputError("flat index %r outside 0..%i" % (j, mu - 1))
    return int(j)


def _monomial(tbl, exponents):
    return WeightMonomial(tbl.weights.w, exponents)


def _diff(u, v):
    return [x - y for x, y in zip(u, v)]


def rescaleFactor(weights, k):
    """WeightMonomial r_k = w^a(kmin(s(k))) / w^a(k)."""
    tbl = buildSpectrum(weights)
    k = _checkIndex(tbl.mu, k)
    return _monomial(tbl, _diff(tbl.a(tbl.kmin(tbl.s(k))), tbl.a(k)))


def omegaBasis(weights):
    """Return the mu classes omega_0, ..., omega_(mu-1)."""
    tbl = buildSpectrum(weights)
    return tuple(OmegaClass(k, tbl.a(k), tbl.sigma(k),
                            rescaleFactor(tbl.weights, k))
                 for k in range(tbl.mu))


def star(weights, i, j):
    """Jacobian product [omega_i] * [omega_j].

    Returns (WeightMonomial, index) with the coefficient
    w^(a(i) + a(j) - a(i+j)) and index (i+j) mod mu.
    """
    tbl = buildSpectrum(weights)
    mu = tbl.mu
    i = _checkIndex(mu, i)
    j = _checkIndex(mu, j)
    ai, aj, aij = tbl.a(i), tbl.a(j), tbl.a(i + j)
    v = [x + y - z for x, y, z in zip(ai, aj, aij)]
    return _monomial(tbl, v), (i + j) % mu


def tildeStar(weights, i, j):
    """Product [omega~_i] * [omega~_j] in the rescaled basis.

    Returns (Fraction, index).
    """
    mono, m = star(weights, i, j)
    r = (rescaleFactor(weights, i) * rescaleFactor(weights, j) /
         rescaleFactor(weights, m))
    return (mono * r).value(), m


def connectionMatrices(weights):
    """Connection matrices (A0, A_inf) in the basis omega~.

    A0 is the multiplication by mu omega~_1 and has the single non-zero
    entry of column k at row (k+1) mod mu.  A_inf is diag(sigma).
    """
    tbl = buildSpectrum(weights)
    mu = tbl.mu
    one = 1 % mu
    a0 = zeroMatrix(mu)
    for k in range(mu):
        c, m = tildeStar(tbl.weights, one, k)
        a0[m, k] = mu * c
    ainf = diagonalMatrix(tbl.sigmas)
    return a0, ainf


def connectionClosedForm(weights, k):
    """Closed form of the A0 entry at ((k+1) mod mu, k).

    mu w^a(kmin(s(k))) / w^a(kmin(s(k+1))), where the wrap-around entry
    k = mu-1 uses the un-reduced a(mu) = w.  Valid for n >= 1.
    """
    tbl = buildSpectrum(weights)
    mu = tbl.mu
    k = _checkIndex(mu, k)
    if k + 1 < mu:
        target = tbl.a(tbl.kmin(tbl.s(k + 1)))
    else:
        target = tbl.a(mu)
    mono = _monomial(tbl, _diff(tbl.a(tbl.kmin(tbl.s(k))), target))
    return mu * mono.value()


def _prodI(tbl, gamma):
    w = tbl.weights
    return productOf(w[i] for i in tbl.sector(gamma).I)


def residuePairing(weights, j, k):
    """Residue metric [g](omega~_j, omega~_k).

    1/prod_{I(s(j))} wi when j + k = n mod mu, else 0.
    """
    tbl = buildSpectrum(weights)
    mu, n = tbl.mu, tbl.n
    j = _checkIndex(mu, j)
    k = _checkIndex(mu, k)
    if (j + k - n) % mu != 0:
        return F(0)
    return 1 / _prodI(tbl, tbl.s(j))


def residueMatrix(weights):
    tbl = buildSpectrum(weights)
    mu = tbl.mu
    rv = zeroMatrix(mu)
    for j, k in product(range(mu), range(mu)):
        rv[j, k] = residuePairing(tbl.weights, j, k)
    return rv


def fullTensor(weights, i, j, k):
    """Origin 3-tensor [g]([omega~_i] * [omega~_j], [omega~_k])."""
    c, m = tildeStar(weights, i, j)
    return c * residuePairing(weights, m, k)


def bTripleTensor(weights, j, k):
    """B-side 3-tensor ((omega~_1, omega~_j, omega~_k)).

    Computed from the product and the residue metric.
    """
    tbl = buildSpectrum(weights)
    return fullTensor(tbl.weights, 1 % tbl.mu, j, k)


def bTripleClosedForm(weights, j, k):
    """Closed form of ((omega~_1, omega~_j, omega~_k)).

    0 unless 1 + j + k = n mod mu.  Then the value is
    1/prod_{I(s(j))} wi on the classical pattern
    sigma(1) + sigma(j) + sigma(k) = n, and
    1/(prod_{I(s(j))} wi * prod_{I(s(k))} wi) otherwise.
    """
    tbl = buildSpectrum(weights)
    mu, n = tbl.mu, tbl.n
    j = _checkIndex(mu, j)
    k = _checkIndex(mu, k)
    if (1 + j + k - n) % mu != 0:
        return F(0)
    if tbl.sigma(1 % mu) + tbl.sigma(j) + tbl.sigma(k) == n:
        return 1 / _prodI(tbl, tbl.s(j))
    return 1 / (_prodI(tbl, tbl.s(j)) * _prodI(tbl, tbl.s(k)))


def bTripleMonomial(weights, j, k):
    """Monomial form w^a(kmin(s(j))) / w^a(kmax({1-s(k)}) + 1).

    The indices are ordered so that j <= k.  Only meaningful when
    1 + j + k = n mod mu and n >= 1.

    Returns a WeightMonomial.
    """
    tbl = buildSpectrum(weights)
    j = _checkIndex(tbl.mu, j)
    k = _checkIndex(tbl.mu, k)
    j, k = min(j, k), max(j, k)
    top = tbl.a(tbl.kmin(tbl.s(j)))
    bottom = tbl.a(tbl.kmax(fractionalPart(1 - tbl.s(k))) + 1)
    return _monomial(tbl, _diff(top, bottom))

# ----------------------------------------------------------------------------
# Newton-graded algebra


def gradedProduct(weights, i, j, rescaled=False):
    """Product [[omega_i]] u [[omega_j]] of the Newton-graded algebra.

    The product keeps the star coefficient when
    sigma((i+j) mod mu) = sigma(i) + sigma(j), and vanishes otherwise.

    rescaled    --  give the coefficient in the omega~ basis when True,
                    in the omega basis otherwise.

    Returns (coeff, index), or (0, None) for the zero class.
    """
    tbl = buildSpectrum(weights)
    mu = tbl.mu
    i = _checkIndex(mu, i)
    j = _checkIndex(mu, j)
    m = (i + j) % mu
    if tbl.sigma(m) != tbl.sigma(i) + tbl.sigma(j):
        return F(0), None
    if rescaled:
        return tildeStar(tbl.weights, i, j)
    mono, m = star(tbl.weights, i, j)
    return mono.value(), m


def gradedPairing(weights, j, k):
    """Graded metric [[g]](omega~_j, omega~_k).

    Equal to 1/prod_{I(s(j))} wi on sigma-dual pairs, j + k = n mod mu.
    """
    return residuePairing(weights, j, k)


def gradedTriple(weights, i, j, k):
    """Closed form of the graded 3-tensor in the omega~ basis.

    With gamma_x = s(x), the value is
    prod_{J({1-g0},{1-g1},{1-g2})} wi / prod_{I(g0,g1,g2)} wi when the
    gammas sum to an integer and sigma(i) + sigma(j) + sigma(k) = n.
    """
    tbl = buildSpectrum(weights)
    w = tbl.weights
    mu = w.mu
    idx = [_checkIndex(mu, x) for x in (i, j, k)]
    gs = [tbl.s(x) for x in idx]
    if sum(gs).denominator != 1:
        return F(0)
    if sum(tbl.sigma(x) for x in idx) != w.n:
        return F(0)
    common = set.intersection(*[set(tbl.sector(g).I) for g in gs])
    if not common:
        return F(0)
    duals = [fractionalPart(1 - g) for g in gs]
    J = [t for t, wt in enumerate(w)
         if sum(fractionalPart(g * wt) for g in duals) == 2]
    return productOf(w[t] for t in J) / productOf(w[t] for t in common)


def gradedTripleFromProduct(weights, i, j, k):
    """[[g]]([[omega~_i]] u [[omega~_j]], [[omega~_k]])."""
    c, m = gradedProduct(weights, i, j, rescaled=True)
    if m is None:
        return F(0)
    return c * gradedPairing(weights, m, k)

# ----------------------------------------------------------------------------
# initial conditions


def criticalValueConstant(weights):
    """Constant c with char(A0) = lambda^mu - c.

    For n >= 1 this is c = mu^mu / prod wi^wi.  A zero-dimensional
    weight vector (w0) does not use that formula: there A0 is the cyclic
    matrix with entries mu and c = mu^mu, the product of those entries.
    """
    w = asWeights(weights)
    c = F(w.mu) ** w.mu
    if w.n >= 1:
        c /= productOf(F(x) ** x for x in w)
    return c


def initialConditionsB(weights):
    """Frobenius initial conditions (A0, A_inf, g, e0) of the mirror.

    Returns a FrobeniusData in the basis omega~ with e0 = 0 and the
    critical-value constant attached.
    """
    from orbimirror.frobenius import FrobeniusData
    w = asWeights(weights)
    a0, ainf = connectionMatrices(w)
    g = residueMatrix(w)
    rv = FrobeniusData(a0, ainf, g, 0, criticalValueConstant(w))
    return rv

# ----------------------------------------------------------------------------
# algebra axioms


def verifyMirrorAlgebra(weights):
    """Brute-force check of the Jacobian and Newton-graded algebras.

    Checks that the star product is commutative, associative and
    unital, that the 3-tensor is symmetric, that the product-based
    B-side 3-tensor equals its closed forms, that the graded product is
    the associated graded of the star product, and that the closed form
    of the graded 3-tensor equals the product-based value.

    Returns a CheckReport.
    """
    tbl = buildSpectrum(weights)
    w = tbl.weights
    mu, n = w.mu, w.n
    idx = range(mu)
    report = CheckReport(w.w, "mirror algebra")

    prods = dict(((i, j), star(w, i, j)) for i in idx for j in idx)

    fails = ["(%i,%i)" % (i, j) for i, j in prods
             if prods[i, j][1] != prods[j, i][1] or
             prods[i, j][0].value() != prods[j, i][0].value()]
    report.addInstances("star-commutativity", fails, len(prods))

    fails = ["j=%i" % j for j in idx
             if prods[0, j][1] != j or prods[0, j][0].value() != 1]
    report.addInstances("star-unit", fails, mu)

    fails = []
    for i, j, k in product(idx, idx, idx):
        c1, m1 = prods[i, j]
        c2, m2 = prods[m1, k]
        d1, l1 = prods[j, k]
        d2, l2 = prods[i, l1]
        if m2 != l2 or (c1 * c2).value() != (d1 * d2).value():
            fails.append("(%i,%i,%i)" % (i, j, k))
    report.addInstances("star-associativity", fails, mu ** 3)

    tens = dict(((i, j, k), fullTensor(w, i, j, k))
                for i in idx for j in idx for k in idx)
    fails = ["(%i,%i,%i)" % t for t in tens
             if not tens[t] == tens[t[1], t[2], t[0]] == tens[t[1], t[0], t[2]]]
    report.addInstances("tensor-symmetry", fails, len(tens))

    one = 1 % mu
    fails = ["(%i,%i)" % (j, k) for j in idx for k in idx
             if tens[one, j, k] != bTripleClosedForm(w, j, k)]
    if n >= 1:
        for j, k in product(idx, idx):
            if (1 + j + k - n) % mu != 0:
                continue
            if bTripleMonomial(w, j, k).value() != tens[one, j, k]:
                fails.append("monomial (%i,%i)" % (j, k))
    report.addInstances("triple-closed-form", fails, mu * mu)

    fails = []
    if n >= 1:
        a0, _ = connectionMatrices(w)
        fails = ["k=%i" % k for k in idx
                 if a0[(k + 1) % mu, k] != connectionClosedForm(w, k)]
    report.addInstances("connection-closed-form", fails, mu)

    fails = []
    for i, j in product(idx, idx):
        c, m = gradedProduct(w, i, j)
        if m is None:
            if tbl.sigma((i + j) % mu) > tbl.sigma(i) + tbl.sigma(j):
                fails.append("filtration (%i,%i)" % (i, j))
            continue
        if c != prods[i, j][0].value():
            fails.append("(%i,%i)" % (i, j))
    report.addInstances("graded-compatibility", fails, mu * mu)

    fails = ["(%i,%i,%i)" % (i, j, k)
             for i, j, k in product(idx, idx, idx)
             if gradedTriple(w, i, j, k) !=
             gradedTripleFromProduct(w, i, j, k)]
    report.addInstances("graded-triple", fails, mu ** 3)
    return report

# End of file
