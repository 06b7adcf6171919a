# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
import random
import unittest
from unittest import mock

import numpy as np

from zxcss.catalog import get_code
from zxcss.code import CssCode
from zxcss.nf import zx_normal_form
from zxcss.pauli import parse_pauli
from zxcss.sem import (DenseMap, EvaluationBudgetExceeded, VerificationError,
                       apply_pauli, encoder_oracle, equal_up_to_scalar,
                       evaluate, is_isometry, stabilized_by)
from zxcss.zx import (identity, permutation, random_diagram, spider, state,
                      x_state, z_state)

PAULI_X = np.array([[0, 1], [1, 0]])
PAULI_Z = np.array([[1, 0], [0, -1]])


class TestSpiders(unittest.TestCase):

    def test_copy(self):
        "Testing the Z spider as a copy map"
        matrix = evaluate(spider('Z', 1, 2)).matrix
        np.testing.assert_allclose(matrix, [[1, 0], [0, 0], [0, 0], [0, 1]])

    def test_pi_spiders(self):
        "Testing pi spiders against the Pauli matrices"
        self.assertTrue(equal_up_to_scalar(evaluate(spider('X', 1, 1, 1)),
                                           PAULI_X))
        self.assertTrue(equal_up_to_scalar(evaluate(spider('Z', 1, 1, 1)),
                                           PAULI_Z))
        self.assertTrue(equal_up_to_scalar(evaluate(spider('X', 1, 1)),
                                           np.eye(2)))

    def test_states(self):
        "Testing the single-qubit states"
        for symbol, vector in (('0', [1, 0]), ('1', [0, 1]),
                               ('+', [1, 1]), ('-', [1, -1])):
            matrix = evaluate(state(symbol)).matrix
            self.assertTrue(equal_up_to_scalar(matrix, np.reshape(vector,
                                                                  (2, 1))),
                            symbol)

    def test_scalar(self):
        "Testing a closed diagram"
        closed = x_state().compose(spider('X', 1, 0))
        result = evaluate(closed)
        self.assertEqual(result.matrix.shape, (1, 1))
        self.assertNotEqual(result.matrix[0, 0], 0)


class TestContraction(unittest.TestCase):

    def test_compose(self):
        "Testing that composition multiplies matrices"
        first, second = spider('Z', 1, 2), spider('X', 2, 1)
        composed = evaluate(first.compose(second)).matrix
        product = evaluate(second).matrix @ evaluate(first).matrix
        self.assertTrue(equal_up_to_scalar(composed, product))

    def test_tensor(self):
        "Testing that tensoring takes Kronecker products"
        vector = evaluate(z_state().tensor(x_state())).matrix
        self.assertTrue(equal_up_to_scalar(
            vector, np.reshape([1, 0, 1, 0], (4, 1))))

    def test_adjoint(self):
        matrix = evaluate(spider('Z', 1, 2)).matrix
        self.assertTrue(equal_up_to_scalar(
            evaluate(spider('Z', 1, 2).adjoint()).matrix, matrix.conj().T))

    def test_permutation(self):
        "Testing a wire permutation"
        matrix = evaluate(permutation([2, 0, 1])).matrix
        self.assertEqual(int((np.abs(matrix) > 0).sum()), 8)
        # |100> goes to |010>
        self.assertNotEqual(matrix[2, 4], 0)

    def test_order(self):
        "Testing that the contraction order does not matter"
        diagram = zx_normal_form(get_code('steane'))
        greedy = evaluate(diagram).matrix
        reverse = evaluate(diagram, order=diagram.spiders()[::-1]).matrix
        np.testing.assert_allclose(greedy, reverse, atol=1e-12)
        self.assertRaises(ValueError, evaluate, diagram, order=[0])

    def test_random_order(self):
        "Testing contraction orders on random diagrams"
        rng = random.Random(17)
        checked = 0
        while checked < 25:
            diagram = random_diagram(rng, max_spiders=7)
            if len(diagram.graph.edges()) > 16:
                continue
            expected = evaluate(diagram).matrix
            for _ in range(3):
                order = diagram.spiders()
                rng.shuffle(order)
                np.testing.assert_allclose(
                    evaluate(diagram, order=order).matrix, expected,
                    atol=1e-9)
            checked += 1

    def test_budget(self):
        "Testing that wide diagrams are refused"
        self.assertRaises(EvaluationBudgetExceeded, evaluate, identity(14))

    def test_dense_map(self):
        result = evaluate(spider('Z', 1, 2))
        self.assertEqual((result.n_inputs, result.n_outputs), (1, 2))
        self.assertEqual((result.rows, result.cols), (4, 2))
        self.assertFalse(result.is_zero())
        self.assertRaises(ValueError, DenseMap, np.eye(2), 1, 2)


class TestComparisons(unittest.TestCase):

    def test_equal_up_to_scalar(self):
        a = np.array([[1, 2], [0, 1j]])
        self.assertTrue(equal_up_to_scalar(a, (2 - 1j) * a))
        self.assertFalse(equal_up_to_scalar(a, a + np.eye(2) * 0.1))
        self.assertTrue(equal_up_to_scalar(np.zeros((2, 2)),
                                           np.zeros((2, 2))))
        self.assertFalse(equal_up_to_scalar(np.zeros((2, 2)), a))
        self.assertFalse(equal_up_to_scalar(a, np.eye(3)))

    def test_isometry(self):
        self.assertTrue(is_isometry(2 * np.eye(2)))
        self.assertFalse(is_isometry(np.array([[1, 0], [0, 0]])))

    def test_oracle(self):
        "Testing the enumerated encoder of the Steane code"
        oracle = encoder_oracle(get_code('steane'))
        self.assertEqual(oracle.matrix.shape, (128, 2))
        self.assertEqual(int((np.abs(oracle.matrix[:, 0]) > 0).sum()), 8)
        self.assertTrue(is_isometry(oracle))
        # |0000000> belongs to the logical zero
        self.assertNotEqual(oracle.matrix[0, 0], 0)

    def test_oracle_stabilizers(self):
        "Testing that every qrm15 stabilizer fixes the enumerated encoder"
        code = get_code('qrm15')
        oracle = encoder_oracle(code)
        self.assertEqual(len(code.stabilizers()), 14)
        for stabilizer in code.stabilizers():
            self.assertTrue(stabilized_by(stabilizer, oracle), stabilizer)
        logical_x = code.logical('X', 1)
        self.assertFalse(stabilized_by(logical_x, oracle))
        self.assertFalse(stabilized_by(parse_pauli('Z:1', 15), oracle))

    def test_oracle_unfixed(self):
        "Testing that an image not fixed by a stabilizer is rejected"
        code = get_code('steane')
        extra = [parse_pauli('Z:1', 7)]
        with mock.patch.object(CssCode, 'stabilizers', return_value=extra):
            self.assertRaisesRegex(VerificationError, 'Z:1', encoder_oracle,
                                   code)

    def test_apply_pauli(self):
        "Testing Pauli action on vectors against dense matrices"
        rng = np.random.default_rng(7)
        vector = rng.normal(size=8) + 1j * rng.normal(size=8)
        for text in ('X:1', 'Z:2,3', 'X:1,3 Z:3', '-X:2'):
            operator = parse_pauli(text, 3)
            np.testing.assert_allclose(apply_pauli(operator, vector),
                                       operator.to_dense() @ vector,
                                       err_msg=text)
