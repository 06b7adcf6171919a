# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
"""Named codes.

Every code is built by a factory registered with :meth:`CodeCatalog.
add_factory`; third party modules can register their own in the same way.
"""
from __future__ import annotations

from zxcss.code import new_css, new_subsystem, trivial_code
from zxcss.f2 import BinaryMatrix

__all__ = ['CodeCatalog', 'get_code', 'STEANE_ROWS', 'QRM_LOGICAL_X',
           'QRM_LOGICAL_Z']

#: X (and Z) stabilizer generators of the Steane code
STEANE_ROWS = ('1010101', '0110011', '0001111')
_ZEROS = '0' * 7
F_ROWS = tuple(row + '0' + row for row in STEANE_ROWS) \
    + (_ZEROS + '1' + '1' * 7,)
H_ROWS = tuple(row + '0' + _ZEROS for row in STEANE_ROWS)
J_ROWS = ('101000001010000',
          '011000000110000',
          '001000100010001')
QRM_LOGICAL_X = '111111100000000'
QRM_LOGICAL_Z = '100110000000000'


def _rows(strings):
    return BinaryMatrix.from_bitstrings(strings)


class CodeCatalog:
    """Registry of code factories, looked up by name."""

    factories = {}
    descriptions = {}

    @classmethod
    def add_factory(cls, name, factory, description=''):
        """adds a code factory to the already known factories"""
        cls.factories[name] = factory
        cls.descriptions[name] = description

    @classmethod
    def names(cls):
        return sorted(cls.factories)

    @classmethod
    def get(cls, name):
        "builds the code registered under name"
        try:
            factory = cls.factories[name]
        except KeyError:
            raise KeyError('unknown code %r (known: %s)'
                           % (name, ', '.join(cls.names())))
        return factory()


def get_code(name):
    return CodeCatalog.get(name)


def steane():
    return new_css(7, _rows(STEANE_ROWS), _rows(STEANE_ROWS),
                   logicals=(_rows(['1001100']), _rows(['1001100'])),
                   name='steane')


def ext_steane():
    stabilizers = _rows(F_ROWS + H_ROWS)
    return new_css(15, stabilizers, stabilizers,
                   logicals=(_rows([QRM_LOGICAL_X]), _rows([QRM_LOGICAL_Z])),
                   name='ext_steane')


def qrm15():
    return new_css(15, _rows(F_ROWS), _rows(F_ROWS + H_ROWS + J_ROWS),
                   logicals=(_rows([QRM_LOGICAL_X]), _rows([QRM_LOGICAL_Z])),
                   name='qrm15')


def sub15():
    return new_subsystem(15, _rows(F_ROWS), _rows(F_ROWS + H_ROWS),
                         _rows(H_ROWS), _rows(J_ROWS),
                         logicals=(_rows([QRM_LOGICAL_X]),
                                   _rows([QRM_LOGICAL_Z])),
                         name='sub15')


def int15():
    return sub15().as_stabilizer_code(name='int15')


def c422():
    return new_css(4, _rows(['1111']), _rows(['1111']),
                   logicals=(_rows(['1100', '1010']),
                             _rows(['1010', '1100'])),
                   name='c422')


def trivial():
    return trivial_code(1, name='trivial')


CodeCatalog.add_factory('steane', steane, 'Steane [[7,1,3]]')
CodeCatalog.add_factory('ext_steane', ext_steane,
                        'Steane code extended by an 8-qubit ancilla block')
CodeCatalog.add_factory('qrm15', qrm15, 'quantum Reed-Muller [[15,1,3]]')
CodeCatalog.add_factory('sub15', sub15,
                        '15-qubit subsystem code with 3 gauge qubits')
CodeCatalog.add_factory('int15', int15,
                        'sub15 with its gauge qubits read as logical ones')
CodeCatalog.add_factory('c422', c422, '[[4,2,2]] error detecting code')
CodeCatalog.add_factory('trivial', trivial, 'one unencoded qubit')
