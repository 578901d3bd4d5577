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

"""Weight combinatorics of a weighted projective space.

For weights w = (w0, ..., wn) with mu = sum(w) this module computes

* the sorted multiset S_w of fractions l/wi, 0 <= l < wi, enumerated by
  flat indices 0..mu-1 through s(i), and the spectral numbers
  sigma(i) = i - mu s(i);
* per-sector data I(gamma), delta(gamma) and the age a(gamma);
* the positions kmax(gamma), kmin(gamma) of a sector in the flat order;
* the multi-index sequence a(k), i(k) whose fractions a(k)_i(k)/w_i(k)
  reproduce s.

Everything is exact.  All other orbimirror modules consume the
SpectrumTable returned by buildSpectrum.
"""

__all__ = ["Weights", "asWeights", "Sector", "sector", "MultiIndexSeq",
           "multiIndexSequence", "SpectrumTable", "buildSpectrum",
           "verifySpectralIdentities"]

import logging
from functools import lru_cache, reduce
from math import gcd

from orbimirror.exceptions import InputError, SpectrumMismatchError
from orbimirror.checkresults import CheckReport
from orbimirror.util.inpututils import parseWeights
from orbimirror.util.rationals import F, fractionalPart

logger = logging.getLogger(__name__)


def _lcm(a, b):
    return a * b // gcd(a, b)


class Weights(object):
    """Weight vector of P(w0, ..., wn).

    Attributes
    w       --  tuple of positive ints (w0, ..., wn).
    n       --  dimension, len(w) - 1.
    mu      --  sum of the weights.
    gcd_w   --  gcd of the weights.
    lcm_w   --  lcm of the weights, the p_w of the H2 generator.
    """

    def __init__(self, w):
        """Validate and store the weights.

        w   --  sequence of positive integers or text "1,2,2".

        Raises InputError for an empty vector or a non-positive weight.
        """
        self.w = parseWeights(w)
        self.n = len(self.w) - 1
        self.mu = sum(self.w)
        self.gcd_w = reduce(gcd, self.w)
        self.lcm_w = reduce(_lcm, self.w)
        return

    @property
    def coprime(self):
        """True when gcd(mu, lcm_w) = 1."""
        return gcd(self.mu, self.lcm_w) == 1

    def __iter__(self):
        return iter(self.w)

    def __len__(self):
        return len(self.w)

    def __getitem__(self, idx):
        return self.w[idx]

    def __eq__(self, other):
        return isinstance(other, Weights) and self.w == other.w

    def __hash__(self):
        return hash(self.w)

    def __repr__(self):
        return "Weights(%r)" % (self.w,)

    def __str__(self):
        return ",".join(str(x) for x in self.w)

# End class Weights


def asWeights(weights):
    """Return weights as a Weights instance, validating if needed."""
    if isinstance(weights, Weights):
        return weights
    return Weights(weights)


class Sector(object):
    """Twisted sector data of a fraction gamma in [0, 1).

    Attributes
    gamma   --  Fraction in [0, 1).
    I       --  sorted tuple of indices i with gamma*wi integral.
    delta   --  len(I).
    age     --  a(gamma) = sum of the fractional parts {gamma*wi}.
    """

    def __init__(self, gamma, I, age):
        self.gamma = F(gamma)
        self.I = tuple(sorted(I))
        self.delta = len(self.I)
        self.age = F(age)
        return

    def __eq__(self, other):
        return (isinstance(other, Sector) and
                (self.gamma, self.I, self.age) ==
                (other.gamma, other.I, other.age))

    def __hash__(self):
        return hash((self.gamma, self.I))

    def __repr__(self):
        return "Sector(%s, I=%r, delta=%i, age=%s)" % (
            self.gamma, self.I, self.delta, self.age)

# End class Sector


def _checkGamma(gamma):
    try:
        g = F(gamma)
    except (TypeError, ValueError):
        raise InputError("invalid sector label %r" % (gamma,))
    if not 0 <= g < 1:
        raise InputError("sector label must lie in [0, 1), got %s" % g)
    return g


def sector(weights, gamma):
    """Return the Sector of gamma for the given weights.

    weights --  Weights or a sequence of positive integers.
    gamma   --  rational in [0, 1).  For gamma not in S_w the result has
                delta = 0 and an empty I.

    Raises InputError when gamma lies outside [0, 1).
    """
    w = asWeights(weights)
    g = _checkGamma(gamma)
    products = [g * wi for wi in w]
    I = [i for i, p in enumerate(products) if p.denominator == 1]
    age = sum((fractionalPart(p) for p in products), F(0))
    return Sector(g, I, age)


class MultiIndexSeq(object):
    """Multi-index sequence a(k) in N^(n+1) with pivot indices i(k).

    Attributes
    a   --  tuple of int tuples, a[k] = a(k).
    i   --  tuple of ints, i[k] = i(k).
    """

    def __init__(self, a, i):
        self.a = tuple(tuple(v) for v in a)
        self.i = tuple(i)
        return

    def __len__(self):
        return len(self.a)

    def fraction(self, k, weights):
        """The fraction a(k)_i(k) / w_i(k)."""
        w = asWeights(weights)
        j = self.i[k]
        return F(self.a[k][j], w[j])

# End class MultiIndexSeq


def multiIndexSequence(weights, length):
    """Run the multi-index recursion for the given number of steps.

    a(0) = 0, i(0) = 0, a(k+1) = a(k) + e_i(k), and i(k+1) is the
    smallest index j at which a(k+1)_j / w_j is minimal.

    weights --  Weights or a sequence of positive integers.
    length  --  number of terms to produce, at least 1.

    Returns a MultiIndexSeq with a(0), ..., a(length-1).
    Raises InputError when length < 1.
    """
    w = asWeights(weights)
    if int(length) != length or length < 1:
        raise InputError("sequence length must be a positive integer")
    cur = [0] * len(w)
    avals = [tuple(cur)]
    ivals = [0]
    for k in range(1, length):
        cur[ivals[-1]] += 1
        ratios = [F(c, wi) for c, wi in zip(cur, w)]
        m = min(ratios)
        avals.append(tuple(cur))
        ivals.append(ratios.index(m))
    return MultiIndexSeq(avals, ivals)


class SpectrumTable(object):
    """Complete spectral data of a weight vector.

    Attributes
    weights     --  the Weights instance.
    sectors     --  tuple of Sector for S_w in ascending gamma.
    svalues     --  tuple s(0), ..., s(mu-1), non-decreasing.
    sigmas      --  tuple sigma(0), ..., sigma(mu-1).
    sequence    --  MultiIndexSeq of length 2*mu.

    Among flat indices sharing the same gamma the order is the one of
    the multi-index recursion.  The table is immutable and cached per
    weight vector by buildSpectrum.
    """

    def __init__(self, weights, svalues, sequence):
        self.weights = weights
        self.svalues = tuple(svalues)
        mu = weights.mu
        self.sigmas = tuple(i - mu * si for i, si in enumerate(self.svalues))
        self.sequence = sequence
        gammas = sorted(set(self.svalues))
        self.sectors = tuple(sector(weights, g) for g in gammas)
        self._sectors = dict((sc.gamma, sc) for sc in self.sectors)
        n = weights.n
        self._kmax = {}
        for sc in self.sectors:
            g = sc.gamma
            self._kmax[g] = n + sum((g * wi).numerator // (g * wi).denominator
                                    for wi in weights)
        return

    @property
    def mu(self):
        return self.weights.mu

    @property
    def n(self):
        return self.weights.n

    def s(self, i):
        return self.svalues[i]

    def sigma(self, i):
        return self.sigmas[i]

    def sector(self, gamma):
        """Sector of gamma, computed on the fly when gamma is not in S_w."""
        g = F(gamma)
        rv = self._sectors.get(g)
        if rv is None:
            rv = sector(self.weights, g)
        return rv

    def inSpectrum(self, gamma):
        return F(gamma) in self._sectors

    def kmax(self, gamma):
        """Largest flat index i with s(i) = gamma.

        Raises KeyError when gamma is not in S_w.
        """
        return self._kmax[F(gamma)]

    def kmin(self, gamma):
        """Smallest flat index i with s(i) = gamma."""
        g = F(gamma)
        return self._kmax[g] - self._sectors[g].delta + 1

    def a(self, k):
        """Multi-index a(k) for 0 <= k < 2*mu."""
        return self.sequence.a[k]

    def pivot(self, k):
        """Pivot index i(k) of the recursion."""
        return self.sequence.i[k]

# End class SpectrumTable


def _sortedMultiset(w):
    rv = sorted(F(l, wi) for wi in w for l in range(wi))
    return rv


@lru_cache(maxsize=128)
def _buildSpectrum(wtuple):
    w = Weights(wtuple)
    mu = w.mu
    svalues = _sortedMultiset(w)
    seq = multiIndexSequence(w, 2 * mu)
    for k in range(mu):
        sk = seq.fraction(k, w)
        if sk != svalues[k]:
            emsg = ("multi-index recursion gives s(%i) = %s but the sorted "
                    "spectrum has %s for w = %r") % (k, sk, svalues[k], w.w)
            raise SpectrumMismatchError(emsg)
    for m in range(mu):
        expected = tuple(wi + ai for wi, ai in zip(w, seq.a[m]))
        if seq.a[mu + m] != expected:
            emsg = ("multi-index recursion breaks a(mu+%i) = w + a(%i) "
                    "for w = %r") % (m, m, w.w)
            raise SpectrumMismatchError(emsg)
    rv = SpectrumTable(w, svalues, seq)
    logger.debug("built spectrum for w=%r: mu=%i, %i sectors",
                 w.w, mu, len(rv.sectors))
    return rv


def buildSpectrum(weights):
    """Build the SpectrumTable of a weight vector.

    weights --  Weights or a sequence of positive integers.

    Returns the cached SpectrumTable.
    Raises InputError for invalid weights and SpectrumMismatchError when
    the multi-index recursion disagrees with the sorted multiset S_w.
    """
    w = asWeights(weights)
    return _buildSpectrum(w.w)


def verifySpectralIdentities(weights):
    """Check the spectral identities for a weight vector.

    The checked identities are

    * a(gamma) + a({1-gamma}) = n + 1 - delta(gamma) and
      I(gamma) = I({1-gamma});
    * #{i : s(i) = gamma} = delta(gamma), and the deltas sum to mu;
    * s is non-decreasing on 0..mu-1;
    * kmin = kmax - delta + 1 and kmax(gamma) is the last position of
      gamma in the flat order;
    * kmax(gamma) + kmax({1-gamma}) = n + mu + delta(gamma) - 1 for
      gamma > 0;
    * sigma(kmax(gamma) - d) = n - (d + a(gamma)) for d < delta(gamma);
    * sigma(j) + sigma(k) = n whenever j + k = n mod mu;
    * |a(k)| = k and s(k) = a(k)_i(k) / w_i(k);
    * with d = gcd(w), s(q mu/d + r) = q/d + s(r) and
      sigma(q mu/d + r) = sigma(r), and a(q mu/d) = q w/d,
      a(q mu/d + r) = a(q mu/d) + a(r).

    Returns a CheckReport.
    """
    w = asWeights(weights)
    tbl = buildSpectrum(w)
    n, mu = w.n, w.mu
    report = CheckReport(w.w, "spectral")

    def dual(g):
        return fractionalPart(1 - g)

    fails = []
    for sc in tbl.sectors:
        other = tbl.sector(dual(sc.gamma))
        if sc.age + other.age != n + 1 - sc.delta:
            fails.append("gamma=%s" % sc.gamma)
    report.addInstances("age-duality", fails, len(tbl.sectors))

    fails = [("gamma=%s" % sc.gamma) for sc in tbl.sectors
             if tbl.sector(dual(sc.gamma)).I != sc.I]
    report.addInstances("sector-duality", fails, len(tbl.sectors))

    fails = [("gamma=%s" % sc.gamma) for sc in tbl.sectors
             if tbl.svalues.count(sc.gamma) != sc.delta]
    if sum(sc.delta for sc in tbl.sectors) != mu:
        fails.append("sum of delta != mu")
    report.addInstances("multiplicity", fails, len(tbl.sectors))

    fails = [("i=%i" % i) for i in range(mu - 1)
             if tbl.s(i) > tbl.s(i + 1)]
    report.addInstances("monotonic", fails, mu)

    fails = []
    for sc in tbl.sectors:
        g = sc.gamma
        last = mu - 1 - tbl.svalues[::-1].index(g)
        first = tbl.svalues.index(g)
        if tbl.kmax(g) != last or tbl.kmin(g) != first:
            fails.append("gamma=%s" % g)
    report.addInstances("position", fails, len(tbl.sectors))

    fails = []
    count = 0
    for sc in tbl.sectors:
        g = sc.gamma
        if g == 0:
            continue
        count += 1
        if tbl.kmax(g) + tbl.kmax(dual(g)) != n + mu + sc.delta - 1:
            fails.append("gamma=%s" % g)
    report.addInstances("position-duality", fails, count)

    fails = []
    count = 0
    for sc in tbl.sectors:
        for d in range(sc.delta):
            count += 1
            if tbl.sigma(tbl.kmax(sc.gamma) - d) != n - (d + sc.age):
                fails.append("gamma=%s, d=%i" % (sc.gamma, d))
    report.addInstances("spectrum", fails, count)

    fails = []
    for j in range(mu):
        k = (n - j) % mu
        if tbl.sigma(j) + tbl.sigma(k) != n:
            fails.append("j=%i, k=%i" % (j, k))
    report.addInstances("sigma-duality", fails, mu)

    seq = tbl.sequence
    fails = [("k=%i" % k) for k in range(len(seq)) if sum(seq.a[k]) != k]
    fails += [("s(%i)" % k) for k in range(mu)
              if seq.fraction(k, w) != tbl.s(k)]
    report.addInstances("multi-index", fails, len(seq))

    d = w.gcd_w
    block = mu // d
    fails = []
    count = 0
    for q in range(d):
        aq = tuple(q * wi // d for wi in w)
        if seq.a[q * block] != aq:
            fails.append("a(%i*mu/d)" % q)
        for r in range(block):
            count += 1
            k = q * block + r
            if tbl.s(k) != F(q, d) + tbl.s(r):
                fails.append("s(%i)" % k)
            if tbl.sigma(k) != tbl.sigma(r):
                fails.append("sigma(%i)" % k)
            ar = tuple(x + y for x, y in zip(aq, seq.a[r]))
            if seq.a[k] != ar:
                fails.append("a(%i)" % k)
    report.addInstances("gcd-splitting", fails, count)
    return report

# End of file
