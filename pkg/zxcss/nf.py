# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
"""Normal forms of CSS encoders and their inverse.

In the ZX normal form every physical qubit is a phase-free X spider with
one output, and every X-type stabilizer or logical row is a phase-free Z
spider wired to the qubits of its support; logical rows also carry one
input.  The XZ normal form swaps the colors and uses the Z-type rows.
"""
from __future__ import annotations

import logging
import warnings

from zxcss.code import (CodeError, CssCode, SubsystemCssCode, new_css,
                        _extend_basis)
from zxcss.f2 import BinaryMatrix, kernel, rank
from zxcss.zx import DiagramError, ZxDiagram, identity, state

__all__ = ['zx_normal_form', 'xz_normal_form', 'subsystem_zx_normal_form',
           'subsystem_xz_normal_form', 'cap_gauge_wires',
           'normal_form_rows', 'code_from_normal_form']

logger = logging.getLogger(__name__)


def _build(n, free_rows, input_rows, qubit_kind):
    diagram = ZxDiagram()
    qubits = [diagram.add_spider(qubit_kind) for _ in range(n)]
    for node in qubits:
        diagram.add_output(node)
    hub_kind = 'Z' if qubit_kind == 'X' else 'X'
    for rows, with_input in ((free_rows, False), (input_rows, True)):
        for i in range(rows.rows):
            hub = diagram.add_spider(hub_kind)
            for j in rows.support(i):
                diagram.add_edge(hub, qubits[j])
            if with_input:
                diagram.add_input(hub)
    return diagram


def zx_normal_form(code: CssCode) -> ZxDiagram:
    "the encoder of code built from its X-type rows"
    return _build(code.n, code.G, code.Lx, 'X')


def xz_normal_form(code: CssCode) -> ZxDiagram:
    "the encoder of code built from its Z-type rows"
    return _build(code.n, code.H, code.Lz, 'Z')


def cap_gauge_wires(diagram: ZxDiagram, first: int,
                    states: str) -> ZxDiagram:
    """Plugs single-qubit states ('0', '1', '+', '-') into the inputs that
    follow the first ``first`` ones."""
    if diagram.n_inputs != first + len(states):
        raise DiagramError('%d inputs cannot take %d kept wires and %d '
                           'states' % (diagram.n_inputs, first, len(states)))
    prefix = identity(first)
    for symbol in states:
        prefix = prefix.tensor(state(symbol))
    return prefix.compose(diagram)


def _subsystem(code, gauge, free_rows, logical_rows, gauge_rows, kind):
    diagram = _build(code.n, free_rows, logical_rows.vstack(gauge_rows),
                     kind)
    if gauge == 'open':
        return diagram
    if len(gauge) != code.r:
        raise ValueError('expected %d gauge states, got %r' % (code.r, gauge))
    return cap_gauge_wires(diagram, code.k, gauge)


def subsystem_zx_normal_form(code: SubsystemCssCode,
                             gauge: str = 'open') -> ZxDiagram:
    """ZX normal form of a subsystem code.

    Gauge rows are input-carrying spiders placed after the logical ones.
    With ``gauge='open'`` their wires stay inputs; a string of states such
    as ``'+++'`` or ``'000'`` caps them instead.
    """
    return _subsystem(code, gauge, code.Sx, code.Lx, code.Gx, 'X')


def subsystem_xz_normal_form(code: SubsystemCssCode,
                             gauge: str = 'open') -> ZxDiagram:
    return _subsystem(code, gauge, code.Sz, code.Lz, code.Gz, 'Z')


def _read_shape(diagram):
    """Checks the normal-form shape and returns ``(qubit kind, free
    supports, input supports, n)``."""
    diagram.validate()
    inputs = {b: i for i, b in enumerate(diagram.inputs)}
    outputs = set(diagram.outputs)
    qubit_of = {}
    bare = {}
    for j, port in enumerate(diagram.outputs):
        neighbor = diagram.port_neighbor(port)
        if diagram.is_boundary(neighbor):
            if neighbor not in inputs:
                raise DiagramError('output %d is wired to another output'
                                   % (j + 1))
            bare[inputs[neighbor]] = j
        elif neighbor in qubit_of:
            raise DiagramError('spider %r drives two outputs' % neighbor)
        else:
            qubit_of[neighbor] = j
    kinds = {diagram.kind(v) for v in qubit_of}
    if len(kinds) > 1:
        raise DiagramError('output spiders mix both kinds')
    qubit_kind = kinds.pop() if kinds else 'X'
    hub_kind = 'Z' if qubit_kind == 'X' else 'X'

    free, fed = [], {}
    for v in diagram.spiders():
        if diagram.phase(v) or diagram.loops(v):
            raise DiagramError('spider %r carries a phase or a self-loop' % v)
        if v in qubit_of:
            for w in diagram.legs(v):
                if diagram.is_boundary(w):
                    if w not in outputs:
                        raise DiagramError('qubit spider %r has an input' % v)
                elif diagram.kind(w) != hub_kind:
                    raise DiagramError('qubit spiders %r and %r touch'
                                       % (v, w))
            continue
        if diagram.kind(v) != hub_kind:
            raise DiagramError('spider %r is neither a qubit nor a row' % v)
        support, port = [], None
        for w in diagram.legs(v):
            if diagram.is_boundary(w):
                if w in outputs or port is not None:
                    raise DiagramError('row spider %r has an output or two '
                                       'inputs' % v)
                port = inputs[w]
            elif w not in qubit_of:
                raise DiagramError('row spiders %r and %r touch' % (v, w))
            elif diagram.edge_count(v, w) > 1:
                raise DiagramError('parallel edges between %r and %r'
                                   % (v, w))
            else:
                support.append(qubit_of[w])
        if port is None:
            free.append(sorted(support))
        else:
            fed[port] = sorted(support)
    for port, qubit in bare.items():
        fed[port] = [qubit]
    if sorted(fed) != list(range(diagram.n_inputs)):
        raise DiagramError('every input must feed one row spider or wire')
    return qubit_kind, free, [fed[i] for i in range(diagram.n_inputs)], \
        diagram.n_outputs


def normal_form_rows(diagram: ZxDiagram):
    """``(qubit kind, input-free rows, input rows)`` of a ZX or XZ normal
    form, the rows as matrices over its outputs; input rows follow the
    input order."""
    qubit_kind, free, fed, n = _read_shape(diagram)
    return (qubit_kind,
            BinaryMatrix.from_supports([s for s in free if s], n),
            BinaryMatrix.from_supports(fed, n))


def _code(qubit_kind, n, stabilizers, other, logicals, name):
    try:
        if qubit_kind == 'X':
            return new_css(n, stabilizers, other,
                           logicals=None if logicals is None
                           else (logicals, None), name=name)
        return new_css(n, other, stabilizers,
                       logicals=None if logicals is None
                       else (None, logicals), name=name)
    except CodeError as error:
        raise DiagramError('diagram does not describe a code: %s' % error)


def _cut_code(qubit_kind, n, stabilizers, cuts, name):
    wanted = n - stabilizers.rows - cuts.rows
    if wanted < 0:
        logger.info('%d cut wire(s) exceed the %d free qubit(s); reading '
                    'the image code', cuts.rows, n - stabilizers.rows)
        return None
    kept, dropped = _extend_basis(stabilizers, cuts)
    other = kernel(stabilizers.vstack(cuts))
    other = other.select_rows(range(wanted))
    if dropped:
        logger.info('cut rows depend on the stabilizers; deriving logicals')
    return _code(qubit_kind, n, stabilizers, other,
                 None if dropped else kept, name)


def code_from_normal_form(diagram: ZxDiagram, strict: bool = True,
                          name=None, cut: bool = False) -> CssCode:
    """Reads a code back from a ZX or XZ normal form.

    Input-free row spiders give stabilizers and input-carrying ones give
    logical rows; the other type of stabilizers is the kernel of both.
    When the logical rows depend on the stabilizers the diagram is not an
    isometry: ``strict`` raises, otherwise the dependent inputs are dropped
    and the code of the image is returned.

    With ``cut`` the inputs are wires cut by a morph and each carries one
    logical qubit: the other type of stabilizers only fills the count up to
    ``n`` from that kernel, and dependent cut rows leave the logicals to be
    derived.  More cut wires than free qubits fall back to the image code.
    """
    qubit_kind, stabilizers, logicals = normal_form_rows(diagram)
    n = diagram.n_outputs
    if rank(stabilizers) < stabilizers.rows:
        stabilizers, _ = _extend_basis(BinaryMatrix.zeros(0, n),
                                       stabilizers)
        warnings.warn('normal form repeats a stabilizer row')
    if cut:
        code = _cut_code(qubit_kind, n, stabilizers, logicals, name)
        if code is not None:
            return code
        strict = False
    kept, dropped = _extend_basis(stabilizers, logicals)
    if dropped:
        if strict:
            raise DiagramError('%d input(s) depend on the other rows; the '
                               'diagram is not an isometry' % dropped)
        logger.info('dropping %d dependent input row(s)', dropped)
        logicals = kept
    other = kernel(stabilizers.vstack(logicals))
    return _code(qubit_kind, n, stabilizers, other, logicals, name)
