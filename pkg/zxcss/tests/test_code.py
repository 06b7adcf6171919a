# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
import itertools
import random
import unittest
import warnings

import numpy as np

from zxcss.catalog import (F_ROWS, H_ROWS, STEANE_ROWS, CodeCatalog,
                           get_code)
from zxcss.code import (BudgetExceeded, CodeError, css_parameters, distance,
                        distances, new_css, new_subsystem,
                        stabilizers_supported_on, trivial_code)
from zxcss.f2 import (BinaryMatrix, in_row_space, kernel, rank,
                      same_row_space)


def rows(*strings):
    return BinaryMatrix.from_bitstrings(strings)


def _lightest_logical(stabilizers, checks, n):
    "weight of the lightest operator passing checks outside the stabilizers"
    for weight in range(1, n + 1):
        for support in itertools.combinations(range(n), weight):
            vector = np.zeros(n, dtype=np.uint8)
            vector[list(support)] = 1
            if (checks.to_array().astype(int) @ vector % 2).any():
                continue
            if not in_row_space(stabilizers, vector):
                return weight
    return None


class TestCssCode(unittest.TestCase):

    def test_steane(self):
        "Testing the parameters of the Steane code"
        code = get_code('steane')
        self.assertEqual((code.n, code.k, code.m_x, code.m_z), (7, 1, 3, 3))
        self.assertEqual(css_parameters(code), '[[7,1,3]]')
        self.assertEqual(str(code.logical('X', 1)), 'X:1,4,5')
        self.assertEqual(str(code.logical('Z', 1)), 'Z:1,4,5')
        self.assertRaises(IndexError, code.logical, 'X', 2)
        self.assertEqual(len(code.stabilizers()), 6)

    def test_derived_logicals(self):
        "Testing logical operators computed from the stabilizers"
        steane = rows(*STEANE_ROWS)
        code = new_css(7, steane, steane)
        self.assertEqual(code.k, 1)
        self.assertEqual((code.Lx @ code.Lz.T).to_bitstrings(), ['1'])
        self.assertTrue((code.H @ code.Lx.T).is_zero())
        self.assertTrue((code.G @ code.Lz.T).is_zero())

    def test_one_sided_logicals(self):
        "Testing a Z side derived from a given X side"
        steane = rows(*STEANE_ROWS)
        code = new_css(7, steane, steane, logicals=(rows('1111111'), None))
        self.assertEqual(code.Lx.to_bitstrings(), ['1111111'])
        self.assertEqual((code.Lx @ code.Lz.T).to_bitstrings(), ['1'])

    def test_invalid(self):
        "Testing the validation of generators"
        self.assertRaises(CodeError, new_css, 2, rows('10'), rows('10'))
        steane = rows(*STEANE_ROWS)
        self.assertRaises(CodeError, new_css, 7, steane, steane,
                          logicals=(rows('1000000'), rows('1001100')))
        self.assertRaises(CodeError, new_css, -1, [], [])

    def test_redundant_rows(self):
        "Testing that repeated generators are dropped with a warning"
        steane = rows(*STEANE_ROWS)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            code = new_css(7, steane.vstack(steane.select_rows([0])), steane)
        self.assertEqual(code.m_x, 3)
        self.assertTrue(caught)

    def test_trivial(self):
        code = trivial_code(3)
        self.assertEqual(css_parameters(code), '[[3,3,1]]')
        self.assertEqual(str(code.logical('Z', 2)), 'Z:2')

    def test_c422(self):
        code = get_code('c422')
        self.assertEqual(css_parameters(code), '[[4,2,2]]')
        self.assertEqual(str(code.logical('X', 1)), 'X:1,2')
        self.assertEqual(str(code.logical('Z', 1)), 'Z:1,3')

    def test_catalog(self):
        "Testing the parameters of every catalog code"
        expected = {
            'steane': (7, 1),
            'ext_steane': (15, 1),
            'qrm15': (15, 1),
            'sub15': (15, 1),
            'int15': (15, 4),
            'c422': (4, 2),
            'trivial': (1, 1),
            }
        self.assertEqual(sorted(expected), CodeCatalog.names())
        for name, (n, k) in expected.items():
            code = get_code(name)
            self.assertEqual((code.n, code.k), (n, k), name)
            self.assertEqual(code.name, name)
        self.assertRaises(KeyError, get_code, 'toric')

    def test_distances(self):
        "Testing exhaustive X and Z distances"
        self.assertEqual(distances(get_code('qrm15')), (7, 3))
        self.assertEqual(distance(get_code('ext_steane')), 3)
        self.assertEqual(css_parameters(get_code('qrm15')), '[[15,1,3]]')
        self.assertEqual(distances(new_css(2, rows('11'), rows('11'))),
                         (None, None))

    def test_distances_enumerated(self):
        "Testing distances against a search over all low-weight operators"
        rng = random.Random(3)
        codes = [get_code('steane'), get_code('c422'), trivial_code(3),
                 new_css(4, rows('1111'), BinaryMatrix.zeros(0, 4))]
        while len(codes) < 10:
            n = rng.randint(3, 7)
            x_rows = BinaryMatrix.from_supports(
                [rng.sample(range(n), rng.randint(1, n))
                 for _ in range(rng.randint(1, 2))], n)
            null = kernel(x_rows)
            chosen = [i for i in range(null.rows) if rng.random() < 0.4]
            z_rows = null.select_rows(chosen)
            if rank(x_rows) < x_rows.rows or rank(z_rows) < z_rows.rows:
                continue
            if rank(x_rows) + rank(z_rows) >= n:
                continue
            codes.append(new_css(n, x_rows, z_rows))
        for code in codes:
            expected = (_lightest_logical(code.G, code.H, code.n),
                        _lightest_logical(code.H, code.G, code.n))
            self.assertEqual(distances(code), expected,
                             css_parameters(code, False))

    def test_distance_budget(self):
        "Testing that large searches are refused"
        from zxcss import code as code_module
        budget = code_module.DISTANCE_BUDGET
        code_module.DISTANCE_BUDGET = 16
        try:
            self.assertRaises(BudgetExceeded, distance, get_code('qrm15'))
        finally:
            code_module.DISTANCE_BUDGET = budget

    def test_supported_on(self):
        "Testing stabilizers supported inside a qubit block"
        x_rows, z_rows = stabilizers_supported_on(get_code('ext_steane'),
                                                  range(1, 8))
        self.assertEqual((rank(x_rows), rank(z_rows)), (3, 3))
        x_rows, z_rows = stabilizers_supported_on(get_code('steane'),
                                                  [4, 5, 6, 7])
        self.assertEqual(x_rows.to_bitstrings(), ['0001111'])
        self.assertRaises(ValueError, stabilizers_supported_on,
                          get_code('steane'), [8])


class TestSubsystemCode(unittest.TestCase):

    def setUp(self):
        self.code = get_code('sub15')

    def test_parameters(self):
        "Testing the counts of the 15-qubit subsystem code"
        code = self.code
        self.assertEqual((code.n, code.k, code.r), (15, 1, 3))
        self.assertEqual((code.m_x, code.m_z), (4, 7))
        self.assertEqual(css_parameters(code, False), '[[15,1,3]]')
        self.assertEqual(distance(code), 3)

    def test_gauge_pairs(self):
        "Testing the canonical pairing of the gauge operators"
        code = self.code
        self.assertEqual((code.Gx @ code.Gz.T).to_bitstrings(),
                         ['100', '010', '001'])
        self.assertEqual(str(code.gauge_operator('X', 1)), 'X:1,3,5,7')
        self.assertEqual(str(code.gauge_operator('Z', 1)), 'Z:2,3,10,11')
        self.assertRaises(IndexError, code.gauge_operator, 'Z', 4)

    def test_fix(self):
        "Testing the two gauge fixings"
        fixed_x = self.code.fix('X')
        ext = get_code('ext_steane')
        self.assertTrue(same_row_space(fixed_x.G, ext.G))
        self.assertTrue(same_row_space(fixed_x.H, ext.H))
        fixed_z = self.code.fix('Z')
        qrm = get_code('qrm15')
        self.assertTrue(same_row_space(fixed_z.G, qrm.G))
        self.assertTrue(same_row_space(fixed_z.H, qrm.H))
        self.assertEqual(fixed_z.name, 'sub15/Z')
        self.assertRaises(ValueError, self.code.fix, 'Y')

    def test_as_stabilizer_code(self):
        "Testing gauge pairs read as logical qubits"
        code = self.code.as_stabilizer_code()
        self.assertEqual(code.k, 4)
        self.assertEqual(code.Lx.select_rows([1, 2, 3]), self.code.Gx)

    def test_invalid(self):
        "Testing gauge rows that break the commutation rules"
        F, H = rows(*F_ROWS), rows(*H_ROWS)
        self.assertRaises(CodeError, new_subsystem, 15, F, F.vstack(H),
                          H, rows('1' + '0' * 14))
