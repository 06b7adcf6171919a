# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
"""Dense semantics of ZX diagrams and of code encoders.

Diagrams are contracted one spider at a time into a growing blob whose
tensor is kept sparse: a dict from the bits on its open wires to the
amplitude.  Phase-free spiders only ever produce affine supports, so the
blob stays far smaller than ``2 ** len(frontier)``.

Basis index convention: wire 1 (qubit 1) is the most significant bit.
"""
from __future__ import annotations

import itertools
import logging
import math
from typing import Optional, Sequence

import numpy as np

from zxcss.code import BudgetExceeded, CssCode
from zxcss.pauli import PauliOperator
from zxcss.zx import ZxDiagram

__all__ = ['DEFAULT_TOL', 'MAX_WIRES', 'MAX_TERMS', 'ORACLE_MAX_QUBITS',
           'EvaluationBudgetExceeded', 'VerificationError', 'DenseMap',
           'evaluate', 'encoder_oracle', 'equal_up_to_scalar',
           'is_isometry', 'apply_pauli', 'stabilized_by']

logger = logging.getLogger(__name__)

#: relative tolerance of the dense comparisons
DEFAULT_TOL = 1e-9
#: most open wires a diagram may have to be evaluated
MAX_WIRES = 26
#: most non-zero amplitudes an intermediate blob may hold
MAX_TERMS = 2 ** 22
#: most physical qubits the encoder oracle enumerates
ORACLE_MAX_QUBITS = 20
_PRUNE = 1e-12


class EvaluationBudgetExceeded(BudgetExceeded):
    "Raised when a dense evaluation would not fit in its budget"


class VerificationError(AssertionError):
    "Raised when a dense check of a claimed identity fails"


class DenseMap:
    """A linear map from ``n_inputs`` to ``n_outputs`` qubits, as a
    ``(2**n_outputs, 2**n_inputs)`` complex matrix."""

    def __init__(self, matrix, n_inputs, n_outputs):
        self.matrix = np.asarray(matrix, dtype=complex)
        self.n_inputs = n_inputs
        self.n_outputs = n_outputs
        if self.matrix.shape != (2 ** n_outputs, 2 ** n_inputs):
            raise ValueError('matrix shape %s does not match %d -> %d wires'
                             % (self.matrix.shape, n_inputs, n_outputs))

    @property
    def rows(self):
        return self.matrix.shape[0]

    @property
    def cols(self):
        return self.matrix.shape[1]

    def __matmul__(self, other):
        return DenseMap(self.matrix @ other.matrix, other.n_inputs,
                        self.n_outputs)

    def is_zero(self, tol=DEFAULT_TOL):
        return not np.any(np.abs(self.matrix) > tol)

    def __repr__(self):
        return '<DenseMap %d -> %d>' % (self.n_inputs, self.n_outputs)


def _pieces(diagram):
    """Splits the diagram into spider tensors over integer wire labels.

    Returns the pieces keyed by spider and the label of every port.
    """
    legs = {v: [] for v in diagram.spiders()}
    ports = {}
    wires = []
    labels = itertools.count()
    for a, b in diagram.graph.edges():
        if a == b:
            # a self-loop traces out to the same spider
            continue
        label = next(labels)
        boundary_a, boundary_b = diagram.is_boundary(a), diagram.is_boundary(b)
        if boundary_a and boundary_b:
            other = next(labels)
            ports[a], ports[b] = label, other
            wires.append(('Z', 0, [label, other]))
            continue
        for node, is_boundary in ((a, boundary_a), (b, boundary_b)):
            if is_boundary:
                ports[node] = label
            else:
                legs[node].append(label)
    pieces = {v: (diagram.kind(v), diagram.phase(v), legs[v])
              for v in legs}
    return pieces, wires, ports


def _parity_table(size):
    table = {0: [], 1: []}
    for bits in itertools.product((0, 1), repeat=size):
        table[sum(bits) % 2].append(bits)
    return table


def _absorb(table, frontier, piece):
    kind, phase, legs = piece
    position = {label: i for i, label in enumerate(frontier)}
    shared = [position[label] for label in legs if label in position]
    fresh = [label for label in legs if label not in position]
    gone = set(shared)
    keep = [i for i in range(len(frontier)) if i not in gone]
    new_frontier = [frontier[i] for i in keep] + fresh
    if kind == 'Z':
        weights = (1.0, -1.0 if phase else 1.0)
    else:
        factor = 2.0 / math.sqrt(2.0) ** len(legs)
        parities = _parity_table(len(fresh))

    result = {}
    largest = 0.0
    for key, value in table.items():
        kept = tuple(key[i] for i in keep)
        bits = [key[i] for i in shared]
        if kind == 'Z':
            if bits and min(bits) != max(bits):
                continue
            for b in ((bits[0],) if bits else (0, 1)):
                amplitude = value * weights[b]
                new_key = kept + (b,) * len(fresh)
                result[new_key] = result.get(new_key, 0) + amplitude
                largest = max(largest, abs(amplitude))
        else:
            wanted = (phase - sum(bits)) % 2
            amplitude = value * factor
            for tail in parities[wanted]:
                new_key = kept + tail
                result[new_key] = result.get(new_key, 0) + amplitude
            largest = max(largest, abs(amplitude))
        if len(result) > MAX_TERMS:
            raise EvaluationBudgetExceeded(
                'contraction needs more than %d amplitudes' % MAX_TERMS)
    floor = largest * _PRUNE
    result = {key: value for key, value in result.items()
              if abs(value) > floor}
    return result, new_frontier


def _greedy_pick(remaining, frontier):
    labels = set(frontier)
    best, best_score = None, None
    for index, (_, (_, _, legs)) in enumerate(remaining):
        shared = sum(1 for label in legs if label in labels)
        score = (len(frontier) - 2 * shared + len(legs), -shared, index)
        if best_score is None or score < best_score:
            best, best_score = index, score
    return best


def evaluate(diagram: ZxDiagram,
             order: Optional[Sequence[int]] = None) -> DenseMap:
    """Contracts diagram into its ``(2**outputs, 2**inputs)`` matrix.

    Spiders are absorbed greedily, keeping the open-wire frontier small,
    unless ``order`` lists the spiders explicitly.  The result is exact up to
    floating point and the usual spider normalization: Z spiders are
    ``|0..0><0..0| + e^{ia}|1..1><1..1|`` and X spiders the same in the
    Hadamard basis.
    """
    diagram.validate()
    n_ports = diagram.n_inputs + diagram.n_outputs
    if n_ports > MAX_WIRES:
        raise EvaluationBudgetExceeded('%d open wires exceed the budget of %d'
                                       % (n_ports, MAX_WIRES))
    pieces, wires, ports = _pieces(diagram)
    if order is None:
        remaining = sorted(pieces.items())
    else:
        if sorted(order) != sorted(pieces):
            raise ValueError('order must list every spider exactly once')
        remaining = [(v, pieces[v]) for v in order]
    remaining += [(('wire', i), wire) for i, wire in enumerate(wires)]

    table, frontier = {(): 1.0 + 0j}, []
    while remaining:
        index = 0 if order is not None else _greedy_pick(remaining, frontier)
        _, piece = remaining.pop(index)
        table, frontier = _absorb(table, frontier, piece)
    logger.debug('contracted %d pieces into %d amplitudes',
                 len(pieces) + len(wires), len(table))

    out_pos = [frontier.index(ports[o]) for o in diagram.outputs]
    in_pos = [frontier.index(ports[i]) for i in diagram.inputs]
    matrix = np.zeros((2 ** len(out_pos), 2 ** len(in_pos)), dtype=complex)
    if table:
        keys = np.array(list(table.keys()), dtype=np.int64).reshape(
            len(table), len(frontier))
        values = np.array(list(table.values()), dtype=complex)
        rows = _indices(keys[:, out_pos])
        cols = _indices(keys[:, in_pos])
        np.add.at(matrix, (rows, cols), values)
    return DenseMap(matrix, diagram.n_inputs, diagram.n_outputs)


def _indices(bits):
    "row-wise binary numbers, first column most significant"
    width = bits.shape[1]
    if not width:
        return np.zeros(bits.shape[0], dtype=np.int64)
    weights = 1 << np.arange(width - 1, -1, -1, dtype=np.int64)
    return bits @ weights


def _as_array(value):
    if isinstance(value, DenseMap):
        return value.matrix
    return np.asarray(value, dtype=complex)


def equal_up_to_scalar(a, b, tol: float = DEFAULT_TOL) -> bool:
    """Whether ``a = c b`` for some non-zero c.

    c is read off the largest entry of b; two all-zero maps are equal.
    """
    a, b = _as_array(a), _as_array(b)
    if a.shape != b.shape:
        return False
    size_a, size_b = np.abs(a).max(initial=0), np.abs(b).max(initial=0)
    if size_b == 0 or size_a == 0:
        return size_a == size_b
    index = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    c = a[index] / b[index]
    if c == 0:
        return False
    return bool(np.abs(a - c * b).max() <= tol * max(size_a, size_b))


def is_isometry(a, tol: float = DEFAULT_TOL) -> bool:
    "whether a^dagger a is a positive multiple of the identity"
    a = _as_array(a)
    gram = a.conj().T @ a
    scale = float(np.real(np.trace(gram))) / gram.shape[0]
    if scale <= 0:
        return False
    return bool(np.abs(gram - scale * np.eye(gram.shape[0])).max()
                <= tol * scale)


def _coset_indices(rows, n):
    weights = 1 << np.arange(n - 1, -1, -1, dtype=np.int64)
    return rows.to_array().astype(np.int64) @ weights


def encoder_oracle(code: CssCode, tol: float = DEFAULT_TOL) -> DenseMap:
    """The encoder ``|a> -> sum_u |a Lx + u G>``, built by enumeration and
    normalized to an isometry.

    Every X and Z generator must fix the image; otherwise
    :class:`VerificationError` is raised.
    """
    n, k = code.n, code.k
    if n > ORACLE_MAX_QUBITS:
        raise EvaluationBudgetExceeded('oracle limited to %d qubits, code '
                                       'has %d' % (ORACLE_MAX_QUBITS, n))
    space = np.zeros(1, dtype=np.int64)
    for g in _coset_indices(code.G, n):
        space = np.concatenate([space, space ^ g])
    logicals = _coset_indices(code.Lx, n)
    matrix = np.zeros((2 ** n, 2 ** k), dtype=complex)
    amplitude = 1 / math.sqrt(len(space))
    for a in range(2 ** k):
        offset = 0
        for i in range(k):
            if a >> (k - 1 - i) & 1:
                offset ^= int(logicals[i])
        matrix[space ^ offset, a] = amplitude
    unfixed = [str(s) for s in code.stabilizers()
               if not stabilized_by(s, matrix, tol)]
    if unfixed:
        raise VerificationError('encoder image is not fixed by %s'
                                % ', '.join(unfixed))
    return DenseMap(matrix, k, n)


def stabilized_by(operator: PauliOperator, states,
                  tol: float = DEFAULT_TOL) -> bool:
    "whether operator leaves the state, or every column, unchanged"
    states = _as_array(states)
    scale = max(np.abs(states).max(initial=0), 1.0)
    return bool(np.abs(apply_pauli(operator, states) - states).max(initial=0)
                <= tol * scale)


def apply_pauli(operator: PauliOperator, vector):
    """Applies operator to a state vector, or to every column of a matrix,
    without building its 2^n x 2^n matrix."""
    vector = _as_array(vector)
    n = operator.n
    if vector.shape[0] != 2 ** n:
        raise ValueError('state has %d amplitudes, expected %d'
                         % (vector.shape[0], 2 ** n))
    index = np.arange(2 ** n, dtype=np.int64)
    flip, parity = 0, np.zeros(2 ** n, dtype=np.int64)
    for q in range(n):
        shift = n - 1 - q
        if operator.x[q]:
            flip |= 1 << shift
        if operator.z[q]:
            parity ^= (index >> shift) & 1
    signs = operator.sign * (1 - 2 * parity)
    if vector.ndim > 1:
        signs = signs.reshape(-1, *([1] * (vector.ndim - 1)))
    result = np.empty_like(vector)
    result[index ^ flip] = signs * vector
    return result
