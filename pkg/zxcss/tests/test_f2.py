# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
import itertools
import unittest

import numpy as np

from zxcss.catalog import STEANE_ROWS
from zxcss.f2 import (BinaryMatrix, in_row_space, kernel, rank, rref,
                      same_row_space, solve)


class TestBinaryMatrix(unittest.TestCase):

    def setUp(self):
        self.steane = BinaryMatrix.from_bitstrings(STEANE_ROWS)

    def test_bitstrings(self):
        "Testing the bit string constructors"
        self.assertEqual(self.steane.shape, (3, 7))
        self.assertEqual(self.steane.to_bitstrings(), list(STEANE_ROWS))
        self.assertEqual(self.steane.support(0), (0, 2, 4, 6))
        self.assertEqual(self.steane[2, 3], 1)
        self.assertEqual(self.steane[2, 0], 0)
        self.assertRaises(ValueError, BinaryMatrix.from_bitstrings,
                          ['101', '10'])
        self.assertRaises(ValueError, BinaryMatrix.from_bitstrings, ['102'])

    def test_supports(self):
        "Testing rows built from supports"
        matrix = BinaryMatrix.from_supports([[0, 2, 4, 6], [1, 2, 5, 6]], 7)
        self.assertEqual(matrix.to_bitstrings(), ['1010101', '0110011'])
        self.assertRaises(ValueError, BinaryMatrix.from_supports, [[7]], 7)

    def test_arithmetic(self):
        "Testing products and sums over GF(2)"
        product = self.steane @ self.steane.T
        self.assertTrue(product.is_zero())
        total = self.steane.select_rows([0]) + self.steane.select_rows([1])
        self.assertEqual(total.to_bitstrings(), ['1100110'])
        self.assertEqual(list(self.steane.weights()), [4, 4, 4])

    def test_stacking(self):
        stacked = self.steane.vstack(BinaryMatrix.identity(7))
        self.assertEqual(stacked.shape, (10, 7))
        self.assertEqual(self.steane.select_columns([3, 4, 5, 6])
                         .to_bitstrings(), ['0101', '0011', '1111'])

    def test_empty(self):
        "Testing matrices without rows"
        empty = BinaryMatrix.zeros(0, 5)
        self.assertEqual(empty.shape, (0, 5))
        self.assertEqual(rank(empty), 0)
        self.assertEqual(kernel(empty).shape, (5, 5))


class TestElimination(unittest.TestCase):

    def setUp(self):
        self.steane = BinaryMatrix.from_bitstrings(STEANE_ROWS)

    def test_rank(self):
        self.assertEqual(rank(self.steane), 3)
        doubled = self.steane.vstack(self.steane)
        self.assertEqual(rank(doubled), 3)

    def test_rref(self):
        "Testing the recorded row operations"
        reduced, transform, r = rref(self.steane)
        self.assertEqual(r, 3)
        self.assertEqual(transform @ self.steane, reduced)

    def test_kernel(self):
        "Testing the null space of the Steane rows"
        null = kernel(self.steane)
        self.assertEqual(null.shape, (4, 7))
        self.assertTrue((self.steane @ null.T).is_zero())
        self.assertEqual(rank(null), 4)

    def test_solve(self):
        "Testing x @ M = target"
        target = np.array([1, 1, 0, 0, 1, 1, 0])
        x = solve(self.steane, target)
        self.assertEqual(list(x), [1, 1, 0])
        self.assertIsNone(solve(self.steane, [1, 0, 0, 0, 0, 0, 0]))
        self.assertRaises(ValueError, solve, self.steane, [1, 0])

    def test_row_space(self):
        self.assertTrue(in_row_space(self.steane, [0, 0, 0, 1, 1, 1, 1]))
        self.assertFalse(in_row_space(self.steane, [1, 1, 1, 1, 1, 1, 1]))
        shuffled = BinaryMatrix.from_bitstrings(
            ['1100110', '0001111', '1010101'])
        self.assertTrue(same_row_space(self.steane, shuffled))
        self.assertFalse(same_row_space(
            self.steane, self.steane.select_rows([0, 1])))


def _span(matrix):
    "every GF(2) combination of the rows, by enumeration"
    rows = matrix.to_array().astype(np.int64)
    combinations = itertools.product((0, 1), repeat=matrix.rows)
    return {tuple(np.array(c, dtype=np.int64) @ rows % 2)
            for c in combinations}


class TestRandomMatrices(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(2024)

    def random_matrix(self, rows, cols):
        "a random matrix, low rank about half of the time"
        if self.rng.integers(2):
            inner = int(self.rng.integers(1, min(rows, cols) + 1))
            left = self.rng.integers(0, 2, size=(rows, inner))
            right = self.rng.integers(0, 2, size=(inner, cols))
            return BinaryMatrix(left @ right % 2, cols=cols)
        return BinaryMatrix(self.rng.integers(0, 2, size=(rows, cols)),
                            cols=cols)

    def test_rref_idempotent(self):
        "Testing that reduced matrices reduce to themselves"
        for _ in range(30):
            matrix = self.random_matrix(int(self.rng.integers(1, 11)),
                                        int(self.rng.integers(1, 16)))
            reduced, transform, r = rref(matrix)
            self.assertEqual(transform @ matrix, reduced)
            self.assertEqual(rank(transform), matrix.rows)
            again, _, r_again = rref(reduced)
            self.assertEqual(again, reduced)
            self.assertEqual(r_again, r)
            self.assertTrue(reduced.select_rows(range(r, matrix.rows))
                            .is_zero())

    def test_rank_enumerated(self):
        "Testing rank against the size of the enumerated row space"
        for _ in range(20):
            matrix = self.random_matrix(10, 15)
            size = len(_span(matrix))
            self.assertEqual(2 ** rank(matrix), size)
            self.assertEqual(rank(matrix) + kernel(matrix).rows, 15)

    def test_solve_enumerated(self):
        "Testing solve against every vector of small spaces"
        for _ in range(12):
            rows = int(self.rng.integers(1, 13))
            cols = int(self.rng.integers(1, 8))
            matrix = self.random_matrix(rows, cols)
            span = _span(matrix)
            for target in itertools.product((0, 1), repeat=cols):
                x = solve(matrix, target)
                self.assertEqual(x is not None, target in span)
                self.assertEqual(in_row_space(matrix, target),
                                 target in span)
                if x is not None:
                    product = x @ matrix.to_array().astype(np.int64) % 2
                    self.assertEqual(tuple(product), target)
