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

"""Tests for the aside module."""

import unittest
from fractions import Fraction as F

from orbimirror import aside
from orbimirror.aside import (cohClass, classAt, basis, poincarePairing,
        pairingMatrix, topIntegral, obstructionBundle, tripleTensor, cup,
        gwDegree, gwThreePoint, aMatrices, orbifoldBetti, h2Generator,
        verifyRingAxioms, ScaledClass, ZERO)
from orbimirror.bside import criticalValueConstant
from orbimirror.spectral import buildSpectrum
from orbimirror.exceptions import InputError, DomainError
from orbimirror.util.rationals import productOf
from orbimirror.tests.utils import (W122333, SMALL_WEIGHTS, weightVectors,
        run_slow, _msg_noslow)

# Cup table of P(1,2,2,3,3,3), upper triangle in sector order.
# A cell "c:d,g" stands for c * eta^d_g.
CUP_TABLE_ORDER = ([(F(0), d) for d in range(6)] +
                   [(F(1, 3), d) for d in range(3)] +
                   [(F(1, 2), d) for d in range(2)] +
                   [(F(2, 3), d) for d in range(3)])

CUP_TABLE_122333 = [
    "1:0,0 1:1,0 1:2,0 1:3,0 1:4,0 1:5,0 1:0,1/3 1:1,1/3 1:2,1/3 "
    "1:0,1/2 1:1,1/2 1:0,2/3 1:1,2/3 1:2,2/3",
    "1:2,0 1:3,0 1:4,0 1:5,0 0 1:1,1/3 1:2,1/3 0 1:1,1/2 0 "
    "1:1,2/3 1:2,2/3 0",
    "1:4,0 1:5,0 0 0 1:2,1/3 0 0 0 0 1:2,2/3 0 0",
    "0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0",
    "4:2,2/3 0 0 0 0 4:3,0 4:4,0 4:5,0",
    "0 0 0 0 4:4,0 4:5,0 0",
    "0 0 0 4:5,0 0 0",
    "27:4,0 27:5,0 0 0 0",
    "0 0 0 0",
    "1:1,1/3 1:2,1/3 0",
    "0 0",
    "0",
]
CUP_TABLE_122333 = [row.split() for row in CUP_TABLE_122333]


def _expectedProduct(w, cell):
    if cell == "0":
        return ZERO
    coeff, rest = cell.split(":")
    d, g = rest.split(",")
    return ScaledClass(int(coeff), cohClass(w, F(g), int(d)))

# ----------------------------------------------------------------------------

class TestBasis(unittest.TestCase):

    def test_flat_index(self):
        """check flat indices of basis classes
        """
        w = W122333
        self.assertEqual(11, cohClass(w, F(1, 3)).flat)
        self.assertEqual(6, cohClass(w, F(2, 3)).flat)
        self.assertEqual(9, cohClass(w, F(1, 2)).flat)
        self.assertEqual(3, cohClass(w, 0, 3).flat)
        self.assertEqual(14, len(basis(w)))
        self.assertEqual(list(range(14)), [c.flat for c in basis(w)])
        return


    def test_classAt(self):
        """check classAt() inverts the flat index
        """
        w = W122333
        for c in basis(w):
            self.assertEqual(c, classAt(w, c.flat))
        self.assertEqual("eta[0,1/3]", classAt(w, 11).label())
        self.assertEqual("eta[2,2/3]", classAt(w, 8).label())
        self.assertEqual(F(5, 3), classAt(w, 11).half_degree)
        self.assertRaises(InputError, classAt, w, 14)
        return


    def test_invalid(self):
        """check cohClass() with invalid arguments
        """
        self.assertRaises(InputError, cohClass, W122333, F(1, 5))
        self.assertRaises(InputError, cohClass, W122333, F(1, 2), 2)
        self.assertRaises(InputError, cohClass, W122333, F(4, 3))
        return


    def test_betti(self):
        """check orbifoldBetti() is palindromic about n
        """
        for w in SMALL_WEIGHTS:
            betti = orbifoldBetti(w)
            n = len(w) - 1
            self.assertEqual(sum(w), sum(betti.values()))
            for d, c in betti.items():
                self.assertEqual(c, betti[2 * n - d])
        betti = orbifoldBetti((1, 1, 1))
        self.assertEqual([0, 2, 4], list(betti.keys()))
        return


    def test_h2Generator(self):
        """check h2Generator()
        """
        d = h2Generator((1, 2))
        self.assertEqual(2, d.coeff)
        self.assertEqual(1, d.cls.flat)
        self.assertEqual(6, h2Generator(W122333).coeff)
        self.assertRaises(DomainError, h2Generator, (3,))
        return

# End of class TestBasis

# ----------------------------------------------------------------------------

class TestPairing(unittest.TestCase):

    def test_worked_example(self):
        """check the pairing blocks of the worked example
        """
        w = W122333
        g = pairingMatrix(w)
        self.assertEqual(F(1, 108), g[0, 5])
        self.assertEqual(F(1, 108), g[2, 3])
        self.assertEqual(F(1, 27), g[11, 8])
        self.assertEqual(F(1, 27), g[7, 12])
        self.assertEqual(F(1, 4), g[9, 10])
        self.assertEqual(0, g[9, 9])
        self.assertEqual(F(1, 108), topIntegral(w))
        return


    def test_antidiagonal(self):
        """check the pairing is supported on i + j = n mod mu
        """
        for w in SMALL_WEIGHTS:
            mu, n = sum(w), len(w) - 1
            bs = basis(w)
            for c1 in bs:
                for c2 in bs:
                    v = poincarePairing(w, c1, c2)
                    ondiag = (c1.flat + c2.flat - n) % mu == 0
                    self.assertEqual(ondiag, v != 0)
        return

# End of class TestPairing

# ----------------------------------------------------------------------------

class TestProducts(unittest.TestCase):

    def test_obstructionBundle(self):
        """check obstruction bundles of the worked example
        """
        w = W122333
        ob = obstructionBundle(w, F(1, 3), F(1, 3), F(1, 3))
        self.assertEqual((1, 2), ob.J)
        self.assertEqual(2, ob.rank)
        self.assertEqual("O(2)+O(2)", ob.label())
        ob = obstructionBundle(w, F(2, 3), F(2, 3), F(2, 3))
        self.assertEqual("O(1)", ob.label())
        ob = obstructionBundle(w, 0, F(1, 3), F(2, 3))
        self.assertEqual(0, ob.rank)
        self.assertRaises(DomainError, obstructionBundle, w,
                          F(1, 3), F(1, 3), F(1, 2))
        self.assertRaises(InputError, obstructionBundle, w, 1, 0, 0)
        return


    def test_tripleTensor(self):
        """check the 3-tensor of the worked example
        """
        w = W122333
        c = cohClass(w, F(1, 3))
        self.assertEqual(F(4, 27), tripleTensor(w, c, c, c))
        c2 = cohClass(w, F(2, 3))
        self.assertEqual(F(1, 27),
                         tripleTensor(w, c2, c2, cohClass(w, F(2, 3), 1)))
        self.assertEqual(0, tripleTensor(w, c, c, c2))
        return


    def test_cup(self):
        """check cup products of the worked example
        """
        w = W122333
        c = cohClass(w, F(1, 3))
        p = cup(w, c, c)
        self.assertEqual(ScaledClass(4, cohClass(w, F(2, 3), 2)), p)
        self.assertEqual(u"4·η²_{2/3}", p.prettyLabel())
        self.assertEqual("4*eta[2,2/3]", p.label())
        c2 = cohClass(w, F(2, 3))
        p = cup(w, c2, c2)
        self.assertEqual(ScaledClass(1, cohClass(w, F(1, 3), 1)), p)
        return


    def test_cup_table(self):
        """check the whole cup table of P(1,2,2,3,3,3)
        """
        w = W122333
        order = [cohClass(w, g, d) for g, d in CUP_TABLE_ORDER]
        ncells = 0
        for r, row in enumerate(CUP_TABLE_122333):
            self.assertEqual(len(order) - r, len(row))
            for c, cell in enumerate(row, start=r):
                expected = _expectedProduct(w, cell)
                self.assertEqual(expected, cup(w, order[r], order[c]),
                                 "%s * %s" % (order[r].label(),
                                              order[c].label()))
                self.assertEqual(expected, cup(w, order[c], order[r]))
                ncells += 1
        self.assertEqual(105, ncells)
        # flat indices of the twisted squares
        sq = cup(w, classAt(w, 11), classAt(w, 11))
        self.assertEqual((4, 8), (sq.coeff, sq.cls.flat))
        sq = cup(w, classAt(w, 6), classAt(w, 6))
        self.assertEqual((1, 12), (sq.coeff, sq.cls.flat))
        return


    def test_divisor(self):
        """check eta^1_0 cup eta^d_gamma = eta^(d+1)_gamma
        """
        w = W122333
        h = cohClass(w, 0, 1)
        for c in basis(w):
            p = cup(w, h, c)
            sc = buildSpectrum(w).sector(c.gamma)
            if c.d + 1 < sc.delta:
                self.assertEqual(ScaledClass(1, cohClass(w, c.gamma, c.d + 1)),
                                 p)
            else:
                self.assertEqual(ZERO, p)
        return


    def test_verifyRingAxioms(self):
        """check verifyRingAxioms() on small weight vectors
        """
        for w in SMALL_WEIGHTS:
            report = verifyRingAxioms(w)
            self.assertTrue(report.passed, str(report))
        return

# End of class TestProducts

# ----------------------------------------------------------------------------

class TestGromovWitten(unittest.TestCase):

    def test_projective_plane(self):
        """check three-point values of P^2
        """
        w = (1, 1, 1)
        gw = gwThreePoint(w, 1, 0)
        self.assertEqual((1, aside.CLASSICAL), (gw.value, gw.status))
        gw = gwThreePoint(w, 2, 2)
        self.assertEqual((1, aside.QUANTUM_THEOREM), (gw.value, gw.status))
        gw = gwThreePoint(w, 1, 1)
        self.assertEqual((0, aside.ZERO_STATUS), (gw.value, gw.status))
        return


    def test_weighted_line(self):
        """check three-point values of P(1,2)
        """
        w = (1, 2)
        self.assertEqual(F(1, 2), gwThreePoint(w, 0, 0).value)
        gw = gwThreePoint(w, 1, 2)
        self.assertEqual(F(1, 4), gw.value)
        self.assertTrue(gw.conjectural)
        self.assertEqual(gw, gwThreePoint(w, 2, 1))
        deg = gwDegree(w, 1, 2)
        self.assertEqual(F(1, 2), deg.value)
        self.assertTrue(deg.effective)
        return


    def test_unsupported(self):
        """check off-pattern values without gcd(mu, lcm w) = 1
        """
        gw = gwThreePoint((2, 4), 0, 1)
        self.assertEqual(aside.UNSUPPORTED, gw.status)
        self.assertTrue(gw.value is None)
        self.assertEqual(0, gwThreePoint((1, 2), 0, 1).value)
        self.assertRaises(InputError, gwThreePoint, (1, 2), 0, 3)
        return


    def test_aMatrices(self):
        """check A0 and A_inf from the three-point values
        """
        a0, ainf = aMatrices((1, 2))
        self.assertEqual(3, a0[1, 0])
        self.assertEqual(F(3, 2), a0[2, 1])
        self.assertEqual(F(3, 2), a0[0, 2])
        self.assertEqual(F(1, 2), ainf[2, 2])
        for w in (W122333, (1, 2), (1, 1, 1), (2, 3)):
            a0, _ = aMatrices(w)
            mu = sum(w)
            cycle = productOf(a0[(j + 1) % mu, j] for j in range(mu))
            self.assertEqual(criticalValueConstant(w), cycle)
        self.assertEqual(F(27, 4), criticalValueConstant((1, 2)))
        return

# End of class TestGromovWitten

# ----------------------------------------------------------------------------

@unittest.skipUnless(run_slow, _msg_noslow)
class TestRingSweep(unittest.TestCase):

    def test_verifyRingAxioms(self):
        """check verifyRingAxioms() for n <= 3, weights <= 8, mu <= 20
        """
        vectors = weightVectors(3, 8, mumax=20) + [(2, 3, 4, 5, 6)]
        for w in vectors:
            report = verifyRingAxioms(w)
            self.assertTrue(report.passed, "%s: %s" % (w, report))
        return

# End of class TestRingSweep


if __name__ == '__main__':
    unittest.main()

# End of file
