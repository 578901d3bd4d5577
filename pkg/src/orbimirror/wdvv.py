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

"""Reconstruction of the Frobenius potential from initial data.

The potential is F = sum A(alpha) t^alpha / alpha! over exponent vectors
alpha in N^mu.  Coefficients of length |alpha| <= 2 are zero.  Length 3
is the origin 3-tensor, peeled from the values ((1, j, k)).  The Euler
field

    E = sum_k (1 - sigma(k)) t_k d/dt_k + mu d/dt_1

gives A(alpha + e_1) = d(alpha) A(alpha) / mu for |alpha| >= 3 with
d(alpha) = 3 - n + sum_k alpha_k (sigma(k) - 1), so only representatives
with alpha_1 = 0 are stored.  Longer coefficients are solved from the
WDVV equations (1, j, k, l), each linear in at most two unknowns of the
current length.
"""

__all__ = ["EulerField", "PotentialCoefficients", "eulerField",
           "eulerDegree", "eulerExtend", "reconstruct", "wdvvResidual",
           "quantumProduct", "verifyPotential", "exponentVectors",
           "DEFAULT_MAX_LENGTH"]

import logging
from collections import OrderedDict
from itertools import product

import sympy
from scipy.special import comb

from orbimirror import aside, bside
from orbimirror.checkresults import CheckReport
from orbimirror.exceptions import (InputError, OutOfRangeError,
        ConsistencyError)
from orbimirror.spectral import asWeights, buildSpectrum
from orbimirror.util.rationals import F

logger = logging.getLogger(__name__)

DEFAULT_MAX_LENGTH = 8


class EulerField(object):
    """Coefficients of the Euler field.

    Attributes
    linear      --  tuple of Fractions 1 - sigma(k), one per coordinate.
    constant    --  mu, the coefficient of d/dt at the divisor slot.
    slot        --  index of the divisor coordinate, 1 mod mu.
    """

    def __init__(self, linear, constant, slot):
        self.linear = tuple(linear)
        self.constant = constant
        self.slot = slot
        return

    def __repr__(self):
        return "EulerField(linear=%r, constant=%r, slot=%r)" % (
            self.linear, self.constant, self.slot)

# End class EulerField


def eulerField(weights):
    """Return the EulerField of the weight vector."""
    tbl = buildSpectrum(weights)
    mu = tbl.mu
    return EulerField([1 - s for s in tbl.sigmas], mu, 1 % mu)


def eulerDegree(weights, alpha):
    """d(alpha) = 3 - n + sum_k alpha_k (sigma(k) - 1)."""
    tbl = buildSpectrum(weights)
    return 3 - tbl.n + sum((ak * (sk - 1) for ak, sk in
                            zip(alpha, tbl.sigmas)), F(0))


def exponentVectors(mu, length, fixed=None):
    """Generate all alpha in N^mu with |alpha| = length.

    fixed   --  optional slot forced to 0.

    Vectors are produced in lexicographically decreasing order.
    """
    if mu == 0:
        if length == 0:
            yield ()
        return
    top = 0 if fixed == 0 else length
    for a0 in range(top, -1, -1):
        rest = None if fixed is None else fixed - 1
        for tail in exponentVectors(mu - 1, length - a0, rest):
            yield (a0,) + tail
    return


def _add(alpha, *idx):
    v = list(alpha)
    for i in idx:
        v[i] += 1
    return tuple(v)


class PotentialCoefficients(object):
    """Sparse Taylor coefficients A(alpha) of the potential.

    Attributes
    weights     --  the Weights instance.
    max_length  --  largest |alpha| that may be requested.
    coeffs      --  OrderedDict of stored coefficients, alpha -> Fraction,
                    for |alpha| >= 4 and alpha at the divisor slot 0.
    tensor      --  dict (i, j, k) -> Fraction of the origin 3-tensor.
    metric      --  dict (a, a*) -> g^(a a*) of the inverse metric.
    slot        --  divisor slot 1 mod mu.
    """

    def __init__(self, weights, max_length, tensor):
        self.weights = asWeights(weights)
        self.max_length = int(max_length)
        self.tensor = dict(tensor)
        self.coeffs = OrderedDict()
        tbl = buildSpectrum(self.weights)
        mu, n = tbl.mu, tbl.n
        self.slot = 1 % mu
        self.metric = {}
        for a in range(mu):
            astar = (n - a) % mu
            self.metric[a, astar] = 1 / self.tensor[0, astar, a]
        self._sigmas = tbl.sigmas
        return

    @property
    def mu(self):
        return self.weights.mu

    def degree(self, alpha):
        return (3 - self.weights.n +
                sum((ak * (sk - 1) for ak, sk in zip(alpha, self._sigmas)),
                    F(0)))

    def get(self, alpha):
        """Return A(alpha).

        Raises OutOfRangeError beyond max_length or for a coefficient
        that has not been solved yet.
        """
        alpha = tuple(alpha)
        length = sum(alpha)
        if length > self.max_length:
            emsg = "A%r has length %i > max_length %i" % (
                alpha, length, self.max_length)
            raise OutOfRangeError(emsg)
        if length <= 2:
            return F(0)
        if length == 3:
            return self.tensor[self._triple(alpha)]
        s = self.slot
        if alpha[s] > 0:
            prev = list(alpha)
            prev[s] -= 1
            prev = tuple(prev)
            return self.degree(prev) * self.get(prev) / self.mu
        try:
            return self.coeffs[alpha]
        except KeyError:
            raise OutOfRangeError("A%r has not been computed" % (alpha,))

    def __getitem__(self, alpha):
        return self.get(alpha)

    def _triple(self, alpha):
        idx = []
        for i, ai in enumerate(alpha):
            idx.extend([i] * ai)
        return tuple(idx)

    def nonzero(self, length=None):
        """Iterate over (alpha, value) of non-zero stored coefficients.

        length  --  restrict to one length, all stored lengths when None.
        Length 3 representatives with alpha at the divisor slot 0 are
        included.
        """
        mu = self.mu
        lengths = range(3, self.max_length + 1) if length is None else [length]
        for L in lengths:
            for alpha in exponentVectors(mu, L, self.slot):
                v = self.get(alpha)
                if v != 0:
                    yield alpha, v
        return

# End class PotentialCoefficients


def eulerExtend(weights, coeffs, alpha):
    """Return A(alpha + e_1) = d(alpha) A(alpha) / mu.

    coeffs  --  PotentialCoefficients holding A(alpha).

    Raises OutOfRangeError when |alpha| < 3 or A(alpha) is not known.
    """
    alpha = tuple(alpha)
    if sum(alpha) < 3:
        raise OutOfRangeError("Euler recursion needs |alpha| >= 3")
    w = asWeights(weights)
    return eulerDegree(w, alpha) * coeffs.get(alpha) / w.mu


def _multinomial(alpha, beta):
    rv = 1
    for a, b in zip(alpha, beta):
        rv *= comb(a, b, exact=True)
    return rv


def _splits(alpha):
    ranges = [range(a + 1) for a in alpha]
    for beta in product(*ranges):
        gamma = tuple(a - b for a, b in zip(alpha, beta))
        yield beta, gamma
    return


def _residualForm(coeffs, i, j, k, l, alpha, unknown):
    """Linear form of the WDVV equation (i, j, k, l) at alpha.

    unknown --  function of an exponent vector, True for coefficients
                that are treated as unknowns.

    Returns (terms, constant) where terms maps unknown vectors to their
    coefficients and constant collects the known part.
    """
    terms = {}
    constant = F(0)
    for (a, astar), ginv in coeffs.metric.items():
        for beta, gamma in _splits(alpha):
            m = _multinomial(alpha, beta) * ginv
            pairs = ((_add(beta, i, j, a), _add(gamma, astar, k, l), 1),
                     (_add(beta, j, k, a), _add(gamma, astar, i, l), -1))
            for left, right, sign in pairs:
                lu, ru = unknown(left), unknown(right)
                if lu and ru:
                    emsg = "WDVV term quadratic in unknowns at %r" % (alpha,)
                    raise ConsistencyError(emsg)
                if lu:
                    c = sign * m * coeffs.get(right)
                    if c:
                        terms[left] = terms.get(left, F(0)) + c
                elif ru:
                    c = sign * m * coeffs.get(left)
                    if c:
                        terms[right] = terms.get(right, F(0)) + c
                else:
                    lv = coeffs.get(left)
                    if lv:
                        constant += sign * m * lv * coeffs.get(right)
    terms = dict((u, c) for u, c in terms.items() if c != 0)
    return terms, constant


def wdvvResidual(weights, coeffs, i, j, k, l, alpha):
    """Coefficient of t^alpha/alpha! in the WDVV equation (i, j, k, l).

    Evaluates sum_a g^(a a*) [F_ija F_a*kl - F_jka F_a*il] and returns
    it as a Fraction, 0 for a valid potential.

    Raises OutOfRangeError when a referenced coefficient lies beyond
    coeffs.max_length.
    """
    mu = asWeights(weights).mu
    for x in (i, j, k, l):
        if int(x) != x or not 0 <= x < mu:
            raise InputError("index %r outside 0..%i" % (x, mu - 1))
    alpha = tuple(alpha)
    if len(alpha) != mu:
        raise InputError("exponent vector must have %i entries" % mu)
    _, rv = _residualForm(coeffs, i, j, k, l, alpha, lambda v: False)
    return rv

# ----------------------------------------------------------------------------
# length 3


def _peelTensor(w, seed):
    """Origin 3-tensor from T(1, j, k) by associativity.

    seed    --  function (j, k) -> T(1, j, k).

    Uses T(j+1, k, l) = T(j, k, l+1) c_l / c_j with
    c_j = T(1, j, (j+1)*) g^((j+1)*, j+1).
    """
    tbl = buildSpectrum(w)
    mu, n = tbl.mu, tbl.n
    one = 1 % mu
    idx = range(mu)
    metric = [bside.residuePairing(w, a, (n - a) % mu) for a in idx]
    c = []
    for j in idx:
        nxt = (j + 1) % mu
        nstar = (n - nxt) % mu
        cj = seed(j, nstar) / metric[nxt]
        if cj == 0:
            emsg = "zero pivot ((1, %i, %i)) for w = %r" % (j, nstar, w.w)
            raise ConsistencyError(emsg)
        c.append(cj)
    logger.debug("peeling pivots for w=%r: %r", w.w, c)
    layers = {one: dict(((k, l), F(seed(k, l))) for k in idx for l in idx)}
    j = one
    for _ in range(mu - 1):
        nxt = (j + 1) % mu
        layers[nxt] = dict(((k, l),
                            layers[j][k, (l + 1) % mu] * c[l] / c[j])
                           for k in idx for l in idx)
        j = nxt
    tensor = {}
    for a, b, d in product(idx, idx, idx):
        tensor[a, b, d] = layers[a][b, d]
    # the unit row must reproduce the metric
    for b, d in product(idx, idx):
        if tensor[0, b, d] != bside.residuePairing(w, b, d):
            emsg = "peeled T(0, %i, %i) differs from the metric" % (b, d)
            raise ConsistencyError(emsg, (tensor[0, b, d],
                                          bside.residuePairing(w, b, d)))
    for a, b, d in product(idx, idx, idx):
        if tensor[a, b, d] != tensor[b, a, d] or \
                tensor[a, b, d] != tensor[a, d, b]:
            emsg = "peeled tensor is not symmetric at (%i, %i, %i)" % (a, b, d)
            raise ConsistencyError(emsg, (tensor[a, b, d], tensor[b, a, d],
                                          tensor[a, d, b]))
    return tensor


def _seedFunction(w, initial):
    if initial == 'b':
        return lambda j, k: bside.bTripleTensor(w, j, k)
    if initial == 'a':
        if not w.coprime:
            emsg = "orbifold initial data need gcd(mu, lcm w) = 1"
            raise InputError(emsg)
        return lambda j, k: aside.gwThreePoint(w, j, k).value
    raise InputError("initial data must be 'a' or 'b', got %r" % (initial,))

# ----------------------------------------------------------------------------
# longer lengths


def _solveStage(coeffs, L):
    """Solve all length-L coefficients with alpha at the divisor slot 0."""
    mu = coeffs.mu
    s = coeffs.slot
    unknowns = set(exponentVectors(mu, L, s))
    solved = {}

    def isUnknown(v):
        return sum(v) == L and v[s] == 0 and v not in solved

    equations = []
    idx = range(mu)
    for alpha in exponentVectors(mu, L - 3, s):
        for j, k, l in product(idx, idx, idx):
            terms, constant = _residualForm(coeffs, s, j, k, l, alpha,
                                            lambda v: sum(v) == L and
                                            v[s] == 0)
            equations.append(((s, j, k, l, alpha), terms, constant))

    def reduce(eq):
        tag, terms, constant = eq
        rest = {}
        for u, c in terms.items():
            if u in solved:
                constant += c * solved[u]
            else:
                rest[u] = c
        return tag, rest, constant

    def audit(tag, constant, where):
        if constant != 0:
            emsg = ("over-determined WDVV equation %r at length %i has "
                    "residual %s" % (tag, L, constant))
            raise ConsistencyError(emsg, (where, constant))
        return

    # propagate single-unknown equations
    pending = equations
    progress = True
    while progress:
        progress = False
        remaining = []
        for eq in pending:
            tag, terms, constant = reduce(eq)
            if not terms:
                audit(tag, constant, "propagation")
            elif len(terms) == 1:
                (u, c), = terms.items()
                solved[u] = -constant / c
                progress = True
            else:
                remaining.append((tag, terms, constant))
        pending = remaining

    left = unknowns - set(solved)
    if left:
        logger.warning("length %i: %i coefficients need row reduction",
                       L, len(left))
        order = sorted(left)
        col = dict((u, i) for i, u in enumerate(order))
        rows = []
        for eq in pending:
            tag, terms, constant = reduce(eq)
            row = [0] * (len(order) + 1)
            for u, c in terms.items():
                row[col[u]] = sympy.Rational(c.numerator, c.denominator)
            row[-1] = -sympy.Rational(constant.numerator,
                                      constant.denominator)
            rows.append(row)
        if not rows:
            emsg = "length %i coefficients %r are undetermined" % (L, order)
            raise ConsistencyError(emsg)
        mat = sympy.Matrix(rows)
        rref, pivots = mat.rref()
        if len(order) in pivots:
            emsg = "inconsistent WDVV system at length %i" % L
            raise ConsistencyError(emsg)
        if len(pivots) < len(order):
            missing = [order[i] for i in range(len(order)) if i not in pivots]
            emsg = "length %i coefficients %r are undetermined" % (L, missing)
            raise ConsistencyError(emsg)
        for r, p in enumerate(pivots):
            v = sympy.Rational(rref[r, len(order)])
            solved[order[p]] = F(int(v.p), int(v.q))

    # every equation must now be satisfied
    for eq in pending:
        tag, terms, constant = reduce(eq)
        audit(tag, constant, "row reduction")
    for u in sorted(unknowns):
        coeffs.coeffs[u] = solved.get(u, F(0))
    logger.debug("length %i: %i coefficients, %i equations",
                 L, len(unknowns), len(equations))
    return


def reconstruct(weights, max_length=DEFAULT_MAX_LENGTH, initial='b'):
    """Reconstruct the potential coefficients up to max_length.

    weights     --  Weights or a sequence of positive integers.
    max_length  --  largest coefficient length, at least 3.
    initial     --  'b' seeds ((1, j, k)) from the mirror 3-tensor,
                    'a' from the orbifold three-point values.

    Returns PotentialCoefficients.
    Raises InputError for max_length < 3 and ConsistencyError when the
    over-determined system disagrees with itself.
    """
    w = asWeights(weights)
    if int(max_length) != max_length or max_length < 3:
        raise InputError("max_length must be an integer >= 3")
    seed = _seedFunction(w, initial)
    tensor = _peelTensor(w, seed)
    if initial == 'b':
        idx = range(w.mu)
        for t in product(idx, idx, idx):
            if tensor[t] != bside.fullTensor(w, *t):
                emsg = "peeled tensor differs from the mirror at %r" % (t,)
                raise ConsistencyError(emsg, (tensor[t],
                                              bside.fullTensor(w, *t)))
    coeffs = PotentialCoefficients(w, max_length, tensor)
    for L in range(4, int(max_length) + 1):
        _solveStage(coeffs, L)
    return coeffs


def verifyPotential(weights, coeffs, residual_length=None):
    """Audit reconstructed coefficients.

    weights         --  Weights or a sequence of positive integers.
    coeffs          --  PotentialCoefficients of the weights.
    residual_length --  largest |alpha| at which all WDVV equations
                        (i, j, k, l) are evaluated, max_length - 3 when
                        None.

    Checks that the 3-tensor is symmetric and pairs the unit into the
    metric, that A(alpha) vanishes for alpha_0 >= 1 and |alpha| >= 4,
    and that every WDVV residual is zero.

    Returns a CheckReport.
    """
    w = asWeights(weights)
    mu = w.mu
    idx = range(mu)
    report = CheckReport(w.w, "potential")
    tensor = coeffs.tensor

    fails = ["%r" % (t,) for t in product(idx, idx, idx)
             if not tensor[t] == tensor[t[1], t[0], t[2]] ==
             tensor[t[0], t[2], t[1]]]
    report.addInstances("tensor-symmetry", fails, mu ** 3)

    fails = ["(0,%i,%i)" % (j, k) for j, k in product(idx, idx)
             if tensor[0, j, k] != bside.residuePairing(w, j, k)]
    report.addInstances("tensor-unit", fails, mu * mu)

    fails = []
    count = 0
    for L in range(4, coeffs.max_length + 1):
        for alpha in exponentVectors(mu, L):
            if alpha[0] == 0:
                continue
            count += 1
            if coeffs.get(alpha) != 0:
                fails.append("A%r" % (alpha,))
    report.addInstances("unit-axiom", fails, count)

    top = coeffs.max_length - 3
    if residual_length is not None:
        top = min(top, int(residual_length))
    for L in range(top + 1):
        fails = []
        count = 0
        for alpha in exponentVectors(mu, L):
            for i, j, k, l in product(idx, idx, idx, idx):
                count += 1
                r = wdvvResidual(w, coeffs, i, j, k, l, alpha)
                if r != 0:
                    fails.append("(%i,%i,%i,%i) at %r: %s" % (
                        i, j, k, l, alpha, r))
        report.addInstances("wdvv-length-%i" % L, fails, count)
    return report


def quantumProduct(coeffs, i, j):
    """Origin quantum product e_i o e_j from the 3-tensor.

    Returns an OrderedDict index -> non-zero Fraction coefficient.
    """
    mu = coeffs.mu
    for x in (i, j):
        if int(x) != x or not 0 <= x < mu:
            raise InputError("index %r outside 0..%i" % (x, mu - 1))
    rv = OrderedDict()
    for (a, astar), ginv in sorted(coeffs.metric.items()):
        c = coeffs.tensor[i, j, a] * ginv
        if c != 0:
            rv[astar] = rv.get(astar, F(0)) + c
    return OrderedDict(sorted(rv.items()))

# End of file
