# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
import random
import unittest

import numpy as np

from zxcss.pauli import (PauliError, PauliOperator, from_support, in_group,
                         parse_pauli)


class TestPauliOperator(unittest.TestCase):

    def test_text(self):
        "Testing the text form"
        self.assertEqual(str(from_support('X', [1, 4, 5], 7)), 'X:1,4,5')
        self.assertEqual(str(parse_pauli('-Z:2', 3)), '-Z:2')
        self.assertEqual(str(parse_pauli('X:1 Z:3', 3)), 'X:1 Z:3')
        self.assertEqual(str(PauliOperator.identity(4)), 'I')
        self.assertEqual(parse_pauli('Z:2,3,10,11', 15).support,
                         (2, 3, 10, 11))

    def test_malformed(self):
        self.assertRaises(PauliError, parse_pauli, 'Y:1', 2)
        self.assertRaises(PauliError, parse_pauli, '', 2)
        self.assertRaises(PauliError, parse_pauli, 'X:3', 2)
        self.assertRaises(PauliError, from_support, 'Y', [1], 2)
        self.assertRaises(PauliError, PauliOperator, (1,), (0, 0))

    def test_kind(self):
        self.assertEqual(parse_pauli('X:1,2', 2).kind, 'X')
        self.assertEqual(parse_pauli('Z:2', 2).kind, 'Z')
        self.assertEqual(PauliOperator.identity(2).kind, 'I')
        self.assertIsNone(parse_pauli('X:1 Z:1', 2).kind)

    def test_commutation(self):
        "Testing the symplectic product"
        x12 = parse_pauli('X:1,2', 2)
        self.assertFalse(x12.commutes(parse_pauli('Z:1', 2)))
        self.assertTrue(x12.commutes(parse_pauli('Z:1,2', 2)))
        self.assertRaises(PauliError, x12.commutes, parse_pauli('Z:1', 3))

    def test_multiply(self):
        "Testing products against the dense matrices"
        z = parse_pauli('Z:1', 1)
        x = parse_pauli('X:1', 1)
        product = z * x
        self.assertEqual(product.sign, -1)
        np.testing.assert_allclose(product.to_dense(),
                                   z.to_dense() @ x.to_dense())
        np.testing.assert_allclose((x * z).to_dense(),
                                   x.to_dense() @ z.to_dense())
        self.assertEqual((-x).sign, -1)

    def test_in_group(self):
        "Testing membership in a generated group"
        generators = [parse_pauli('X:1,2', 3), parse_pauli('X:2,3', 3)]
        combination = in_group(parse_pauli('X:1,3', 3), generators)
        self.assertEqual(list(combination), [1, 1])
        self.assertIsNone(in_group(parse_pauli('X:1', 3), generators))
        self.assertEqual(len(in_group(PauliOperator.identity(3), [])), 0)


class TestRandomPaulis(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(31)

    def random_pauli(self, n):
        return PauliOperator(
            tuple(self.rng.randint(0, 1) for _ in range(n)),
            tuple(self.rng.randint(0, 1) for _ in range(n)),
            self.rng.choice((1, -1)))

    def test_commutes_dense(self):
        "Testing commutation against dense matrices"
        for n in range(1, 6):
            for _ in range(15):
                a, b = self.random_pauli(n), self.random_pauli(n)
                dense_a, dense_b = a.to_dense(), b.to_dense()
                self.assertEqual(
                    a.commutes(b),
                    np.allclose(dense_a @ dense_b, dense_b @ dense_a),
                    '%s, %s' % (a, b))

    def test_multiply_dense(self):
        "Testing product signs and associativity against dense matrices"
        for n in range(1, 5):
            for _ in range(15):
                a, b, c = (self.random_pauli(n) for _ in range(3))
                np.testing.assert_allclose((a * b).to_dense(),
                                           a.to_dense() @ b.to_dense(),
                                           err_msg='%s, %s' % (a, b))
                self.assertEqual((a * b) * c, a * (b * c))
                np.testing.assert_allclose(
                    (a * b * c).to_dense(),
                    a.to_dense() @ b.to_dense() @ c.to_dense())
