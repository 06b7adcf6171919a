# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
import os
import random
import unittest
from unittest import mock

from zxcss.catalog import get_code
from zxcss.code import css_parameters, distance
from zxcss.f2 import BinaryMatrix, same_row_space
from zxcss.nf import zx_normal_form
from zxcss.sem import VerificationError, equal_up_to_scalar, evaluate
from zxcss.xform import (QRM_CUBE_SUBSET, PauliX, PauliZ, XSpiderGadget,
                         ZSpiderGadget, check_implementation,
                         find_morph_subset, logical_layer_diagram, morph,
                         parse_layer, push_primitive, push_through,
                         transversal_pauli, verify_code, verify_rules,
                         worker_count)
from zxcss.zx import identity, replay


class TestLayers(unittest.TestCase):

    def test_parse(self):
        "Testing the text form of logical layers"
        self.assertEqual(parse_layer('X:1;Z:2;ZS:1,2/2;XS:3'), [
            PauliX(1), PauliZ(2), ZSpiderGadget((1, 2), 2),
            XSpiderGadget((3,), 1)])
        self.assertEqual(parse_layer(' ; '), [])
        for text in ('Y:1', 'X:1,2', 'X:1/1', 'ZS:'):
            self.assertRaises(ValueError, parse_layer, text)

    def test_logical_diagram(self):
        diagram = logical_layer_diagram(2, [PauliX(1), ZSpiderGadget((1, 2),
                                                                    2)])
        self.assertEqual((diagram.n_inputs, diagram.n_outputs), (2, 4))
        self.assertRaises(ValueError, logical_layer_diagram, 2, [PauliZ(3)])
        self.assertRaises(ValueError, logical_layer_diagram, 2,
                          [XSpiderGadget((1, 1))])


class TestPushThrough(unittest.TestCase):

    def test_transversal_pauli(self):
        "Testing the physical Pauli operators of catalog codes"
        self.assertEqual(str(transversal_pauli(get_code('steane'), 'X', 1)),
                         'X:1,4,5')
        self.assertEqual(str(transversal_pauli(get_code('c422'), 'X', 1)),
                         'X:1,2')
        self.assertEqual(str(transversal_pauli(get_code('trivial'), 'Z', 1)),
                         'Z:1')
        self.assertEqual(str(transversal_pauli(get_code('qrm15'), 'X', 1)),
                         'X:1,2,3,4,5,6,7')

    def test_paulis(self):
        "Testing every logical Pauli of the catalog codes"
        for name in ('steane', 'c422', 'qrm15', 'ext_steane', 'trivial'):
            code = get_code(name)
            for i in range(1, code.k + 1):
                for primitive in (PauliX(i), PauliZ(i)):
                    physical = push_through(code, [primitive])
                    self.assertEqual(len(physical.spiders()),
                                     transversal_pauli(
                                         code, 'X' if isinstance(
                                             primitive, PauliX) else 'Z',
                                         i).weight, name)

    def test_gadgets(self):
        "Testing phase-free spider gadgets"
        steane, c422 = get_code('steane'), get_code('c422')
        physical = push_through(steane, [ZSpiderGadget((1,))])
        self.assertEqual((physical.n_inputs, physical.n_outputs), (7, 8))
        push_through(c422, [XSpiderGadget((1, 2))])
        push_through(c422, [PauliZ(2), ZSpiderGadget((1, 2), 2), PauliX(1)])

    def test_rewrite_trace(self):
        "Testing that pushed primitives replay from the start diagram"
        cases = (('steane', PauliX(1), 'pi_copy'),
                 ('steane', PauliZ(1), 'pi_copy'),
                 ('c422', XSpiderGadget((1, 2)), 'bialgebra'),
                 ('steane', ZSpiderGadget((1,), 2), 'bialgebra'))
        for name, primitive, rule in cases:
            code = get_code(name)
            pushed = push_primitive(code, primitive)
            rules = [step.rule for step in pushed.rewritten.trace]
            self.assertIn(rule, rules, name)
            self.assertIn('fuse', rules, name)
            self.assertEqual(
                replay(pushed.start, pushed.rewritten.trace).digest(),
                pushed.rewritten.digest())
            self.assertTrue(equal_up_to_scalar(evaluate(pushed.start),
                                               evaluate(pushed.rewritten)))

    def test_layer_trace(self):
        "Testing that a pushed layer keeps the rewrites of its primitives"
        code = get_code('steane')
        physical = push_through(code, parse_layer('XS:1/1'))
        self.assertIn('bialgebra', [step.rule for step in physical.trace])
        layer = parse_layer('X:1;ZS:1/1')
        physical = push_through(code, layer)
        self.assertEqual(
            len(physical.trace),
            sum(len(push_primitive(code, p, extra).rewritten.trace)
                for p, extra in zip(layer, (0, 0))))

    def test_empty_layer(self):
        physical = push_through(get_code('steane'), [])
        self.assertEqual(physical.spiders(), [])
        self.assertEqual(physical.n_inputs, 7)

    def test_wrong_implementation(self):
        "Testing that a wrong physical layer is rejected"
        code = get_code('steane')
        wrong = push_through(get_code('trivial'), [PauliX(1)]).tensor(
            identity(6))
        self.assertFalse(check_implementation(code, [PauliX(1)], wrong))
        self.assertRaises(ValueError, push_through, code, [PauliX(2)])


class TestMorph(unittest.TestCase):

    def test_steane_two_qubit_child(self):
        "Testing the Steane morph into a [[4,2,2]] child"
        result = morph(get_code('steane'), {2, 3, 6, 7})
        self.assertTrue(result.verified)
        self.assertFalse(result.degenerate)
        self.assertEqual(result.cut_wires, 2)
        self.assertEqual(css_parameters(result.child), '[[4,2,2]]')
        self.assertEqual(css_parameters(result.morphed), '[[5,1,2]]')
        # qubits 1, 4, 5 and the two cut wires
        expected = BinaryMatrix.from_bitstrings(['10110', '01101'])
        self.assertTrue(same_row_space(result.morphed.G, expected))
        self.assertEqual(result.morphed.Lx.to_bitstrings(), ['11100'])
        self.assertEqual(result.child.G.to_bitstrings(), ['1111'])
        self.assertEqual(result.child_counts, (4, 2, 1))
        # row spiders 14 and 16 straddle the cut, 15 lies inside it
        self.assertEqual(result.new_qubit_map, {14: 4, 16: 5})

    def test_generator_count(self):
        "Testing that the morphed code keeps the remaining generators"
        for name, subset in (('steane', {2, 3, 6, 7}),
                             ('steane', {4, 5, 6, 7}),
                             ('qrm15', QRM_CUBE_SUBSET)):
            code = get_code(name)
            result = morph(code, subset)
            self.assertEqual(result.child.k, result.cut_wires)
            self.assertEqual(result.morphed.m_x + result.morphed.m_z,
                             code.m_x + code.m_z
                             - result.child.m_x - result.child.m_z, name)
        # the last result is the qrm15 cube
        self.assertEqual((result.child.m_x + result.child.m_z,
                          result.morphed.m_x + result.morphed.m_z), (5, 9))

    def test_generator_count_mismatch(self):
        "Testing that a wrong morphed generator count is rejected"
        code = get_code('steane')
        with mock.patch('zxcss.xform._generators', return_value=1):
            with self.assertRaisesRegex(VerificationError,
                                        'stabilizer generators'):
                morph(code, {2, 3, 6, 7})

    def test_dependent_cut(self):
        "Testing a subset whose cut rows are dependent"
        result = morph(get_code('steane'), {4, 5, 6, 7})
        self.assertTrue(result.verified)
        self.assertEqual(result.child_counts, (4, 3, 1))
        self.assertTrue(result.degenerate)
        # one logical qubit per cut wire, no Z-type stabilizer
        self.assertEqual(css_parameters(result.child), '[[4,3,1]]')
        self.assertEqual(result.child.G.to_bitstrings(), ['1111'])
        self.assertEqual(result.child.H.rows, 0)
        self.assertEqual(result.new_qubit_map, {14: 4, 15: 5, 17: 6})
        self.assertEqual(css_parameters(result.morphed), '[[6,1,1]]')

    def test_qrm_cube(self):
        "Testing the qrm15 morph onto the cube code"
        result = morph(get_code('qrm15'), QRM_CUBE_SUBSET)
        self.assertTrue(result.verified)
        self.assertEqual(css_parameters(result.child), '[[8,3,2]]')
        self.assertEqual(css_parameters(result.morphed), '[[10,1,2]]')
        self.assertEqual(result.cut_wires, 3)
        self.assertEqual(sorted(result.new_qubit_map.values()), [8, 9, 10])

    def test_xz_form(self):
        result = morph(get_code('steane'), {2, 3, 6, 7}, form='xz')
        self.assertTrue(result.verified)
        self.assertEqual((result.morphed.n, result.morphed.k), (5, 1))
        self.assertRaises(ValueError, morph, get_code('steane'), {1},
                          form='yz')

    def test_trace(self):
        "Testing that the recorded rewrites replay on the normal form"
        code = get_code('steane')
        result = morph(code, {2, 3, 6, 7})
        self.assertEqual([step.rule for step in result.trace],
                         ['unfuse', 'insert_identity'] * 2)
        replay(zx_normal_form(code), result.trace)

    def test_edge_subsets(self):
        "Testing the empty and the full subset"
        code = get_code('steane')
        empty = morph(code, set())
        self.assertEqual((empty.morphed.n, empty.child.n), (7, 0))
        self.assertTrue(empty.verified)
        full = morph(code, range(1, 8))
        self.assertEqual((full.morphed.n, full.child.n), (7, 7))
        self.assertTrue(full.verified)
        self.assertFalse(morph(code, set(), check=False).verified)
        self.assertRaises(ValueError, morph, code, {0, 3})

    def test_random_subsets(self):
        "Testing the recomposition on random subsets"
        rng = random.Random(5)
        code = get_code('steane')
        for _ in range(6):
            subset = rng.sample(range(1, 8), rng.randint(1, 6))
            result = morph(code, subset)
            self.assertTrue(result.verified, subset)
            self.assertEqual(result.morphed.n,
                             7 - len(subset) + result.cut_wires)
            self.assertEqual(result.morphed.k, 1)

    def test_random_qrm_subsets(self):
        "Testing qrm15 morphs along random subsets"
        rng = random.Random(11)
        code = get_code('qrm15')
        for _ in range(3):
            subset = rng.sample(range(1, 16), rng.randint(2, 13))
            result = morph(code, subset)
            self.assertTrue(result.verified, subset)
            self.assertEqual(result.morphed.n,
                             15 - len(subset) + result.cut_wires)
            self.assertEqual(result.morphed.k, 1)
            self.assertEqual(len(result.new_qubit_map), result.cut_wires)
            if result.child.k == result.cut_wires:
                self.assertEqual(
                    result.morphed.m_x + result.morphed.m_z,
                    14 - result.child.m_x - result.child.m_z, subset)

    def test_find_subset(self):
        "Testing the search for a morph with given child parameters"
        code = get_code('steane')
        subset = find_morph_subset(code, 4, 2, d1=2)
        self.assertIsNotNone(subset)
        result = morph(code, subset)
        self.assertFalse(result.degenerate)
        self.assertEqual((result.child.k, distance(result.child)), (2, 2))
        self.assertIsNone(find_morph_subset(code, 2, 5))


class TestReports(unittest.TestCase):

    def test_verify_code(self):
        "Testing the dense verification report of a code"
        report = verify_code(get_code('steane'))
        self.assertTrue(report.passed)
        names = [check.name for check in report.checks]
        self.assertIn('X1 pushes to X:1,4,5', names)
        self.assertIn('encoder is an isometry', names)
        self.assertIn('image fixed by all 6 stabilizer generators', names)

    def test_verify_subsystem(self):
        report = verify_code(get_code('sub15'))
        self.assertTrue(report.passed)
        self.assertEqual(len(report.checks), 3)

    def test_verify_rules(self):
        report = verify_rules(20, random.Random(2), rules=['fuse', 'hopf'])
        self.assertTrue(report.passed)
        self.assertEqual([check.detail for check in report.checks],
                         ['20/20 sound'] * 2)

    def test_worker_count(self):
        with mock.patch.dict(os.environ, {'ZXCSS_WORKERS': '3'}):
            self.assertEqual(worker_count(), 3)
        with mock.patch.dict(os.environ, {'ZXCSS_WORKERS': 'many'}):
            with self.assertWarns(UserWarning):
                self.assertEqual(worker_count(), 1)
