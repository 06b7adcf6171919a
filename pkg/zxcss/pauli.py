# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
"Pauli operators in binary symplectic form."
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np

from zxcss.f2 import BinaryMatrix, solve

__all__ = ['PauliError', 'PauliOperator', 'from_support', 'parse_pauli',
           'in_group']

_TERM_RE = re.compile(r'^([XZ]):(\d+(?:,\d+)*)$')

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_I = np.eye(2, dtype=complex)


class PauliError(ValueError):
    "Raised on malformed or mismatched Pauli operators"


@dataclass(frozen=True)
class PauliOperator:
    """``sign * prod_i X_i^x[i] Z_i^z[i]``, the X factor written first on
    each qubit."""

    x: Tuple[int, ...]
    z: Tuple[int, ...]
    sign: int = 1

    def __post_init__(self):
        if len(self.x) != len(self.z):
            raise PauliError('x and z parts differ in length')
        if self.sign not in (1, -1):
            raise PauliError('sign must be +1 or -1')
        if any(b not in (0, 1) for b in self.x + self.z):
            raise PauliError('Pauli bits must be 0 or 1')

    @classmethod
    def identity(cls, n):
        return cls((0,) * n, (0,) * n)

    @property
    def n(self):
        return len(self.x)

    @property
    def support(self):
        "1-based qubits acted on non-trivially"
        return tuple(i + 1 for i in range(self.n) if self.x[i] or self.z[i])

    @property
    def weight(self):
        return len(self.support)

    @property
    def is_identity(self):
        return not any(self.x) and not any(self.z)

    @property
    def kind(self):
        "'X', 'Z', 'I' for pure operators, None for mixed ones"
        if self.is_identity:
            return 'I'
        if not any(self.z):
            return 'X'
        if not any(self.x):
            return 'Z'

    def _check(self, other):
        if self.n != other.n:
            raise PauliError('operators act on %d and %d qubits'
                             % (self.n, other.n))

    def commutes(self, other: PauliOperator) -> bool:
        self._check(other)
        overlap = sum(a & b for a, b in zip(self.x, other.z)) \
            + sum(a & b for a, b in zip(self.z, other.x))
        return overlap % 2 == 0

    def multiply(self, other: PauliOperator) -> PauliOperator:
        "self * other, with the sign tracked through Z X = -X Z"
        self._check(other)
        swaps = sum(a & b for a, b in zip(self.z, other.x))
        sign = self.sign * other.sign * (-1 if swaps % 2 else 1)
        return PauliOperator(
            tuple(a ^ b for a, b in zip(self.x, other.x)),
            tuple(a ^ b for a, b in zip(self.z, other.z)), sign)

    __mul__ = multiply

    def __neg__(self):
        return PauliOperator(self.x, self.z, -self.sign)

    def vector(self):
        "the symplectic vector (x | z)"
        return np.array(self.x + self.z, dtype=np.uint8)

    def to_dense(self):
        "the 2^n x 2^n matrix, qubit 1 being the most significant bit"
        matrix = np.ones((1, 1), dtype=complex)
        for a, b in zip(self.x, self.z):
            site = (_X if a else _I) @ (_Z if b else _I)
            matrix = np.kron(matrix, site)
        return self.sign * matrix

    def __str__(self):
        prefix = '-' if self.sign < 0 else ''
        if self.is_identity:
            return prefix + 'I'
        parts = []
        for letter, bits in (('X', self.x), ('Z', self.z)):
            qubits = [str(i + 1) for i, b in enumerate(bits) if b]
            if qubits:
                parts.append('%s:%s' % (letter, ','.join(qubits)))
        return prefix + ' '.join(parts)


def from_support(kind: str, support: Iterable[int], n: int) -> PauliOperator:
    "builds X_S or Z_S from 1-based qubit indices"
    bits = [0] * n
    for q in support:
        if not 1 <= q <= n:
            raise PauliError('qubit %d out of range 1..%d' % (q, n))
        bits[q - 1] = 1
    if kind == 'X':
        return PauliOperator(tuple(bits), (0,) * n)
    elif kind == 'Z':
        return PauliOperator((0,) * n, tuple(bits))
    raise PauliError('unknown Pauli kind %r' % kind)


def parse_pauli(text: str, n: int) -> PauliOperator:
    """Parses the text form, e.g. ``X:1,4,5``, ``-Z:2`` or ``X:1 Z:3``."""
    text = text.strip()
    sign = 1
    if text.startswith('-'):
        sign, text = -1, text[1:].strip()
    result = PauliOperator.identity(n)
    if text == 'I':
        return PauliOperator(result.x, result.z, sign)
    if not text:
        raise PauliError('empty Pauli text')
    for term in text.split():
        match = _TERM_RE.match(term)
        if match is None:
            raise PauliError('malformed Pauli term %r' % term)
        qubits = [int(q) for q in match.group(2).split(',')]
        result = result.multiply(from_support(match.group(1), qubits, n))
    return PauliOperator(result.x, result.z, sign * result.sign)


def in_group(operator: PauliOperator,
             generators: Iterable[PauliOperator]) -> Optional[np.ndarray]:
    """Returns the combination of generators equal to operator up to sign,
    or None when operator lies outside their span."""
    generators = list(generators)
    for g in generators:
        operator._check(g)
    if not generators:
        return np.zeros(0, dtype=np.uint8) if operator.is_identity else None
    matrix = BinaryMatrix([g.vector() for g in generators])
    return solve(matrix, operator.vector())
