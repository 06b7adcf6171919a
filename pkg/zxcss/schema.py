# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
"""JSON formats for codes, diagrams and transformation results.

The models double as parsers: anything written by :func:`to_json` reads
back through the matching model.  Bit strings have one character per qubit,
qubit 1 left-most.  In diagrams an input or output is the id of the spider
it is plugged into, or a ``"w<j>"`` token shared by the two ends of a bare
wire.
"""
from __future__ import annotations

from collections import Counter
from typing import Dict, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, field_validator, model_validator

from zxcss.code import (CssCode, SubsystemCssCode, new_css, new_subsystem)
from zxcss.f2 import BinaryMatrix
from zxcss.sem import DenseMap
from zxcss.xform import (GaugeFixResult, MorphResult, SwitchStep,
                         VerificationReport)
from zxcss.zx import DiagramError, ZxDiagram

__all__ = ['CodeModel', 'SpiderModel', 'DiagramModel', 'MorphModel',
           'GaugeFixModel', 'SwitchStepModel', 'SwitchModel', 'CheckModel',
           'VerificationModel', 'code_to_model', 'code_from_model',
           'code_to_json', 'code_from_json', 'diagram_to_model',
           'diagram_from_model', 'diagram_to_json', 'diagram_from_json',
           'DenseMapModel', 'dense_map_to_model', 'dense_map_from_json',
           'to_model', 'to_json']

Port = Union[int, str]


def _bitstrings(rows):
    for row in rows:
        if set(row) - {'0', '1'}:
            raise ValueError('malformed bit string %r' % row)
    return rows


class CodeModel(BaseModel):
    name: Optional[str] = None
    n: int
    x_stabilizers: List[str] = []
    z_stabilizers: List[str] = []
    x_logicals: Optional[List[str]] = None
    z_logicals: Optional[List[str]] = None
    x_gauges: Optional[List[str]] = None
    z_gauges: Optional[List[str]] = None

    @field_validator('x_stabilizers', 'z_stabilizers', 'x_logicals',
                     'z_logicals', 'x_gauges', 'z_gauges')
    @classmethod
    def check_bits(cls, rows):
        return rows if rows is None else _bitstrings(rows)

    @model_validator(mode='after')
    def check_lengths(self):
        if self.n < 0:
            raise ValueError('n must not be negative')
        for field in ('x_stabilizers', 'z_stabilizers', 'x_logicals',
                      'z_logicals', 'x_gauges', 'z_gauges'):
            for row in getattr(self, field) or ():
                if len(row) != self.n:
                    raise ValueError('%s row %r does not have %d bits'
                                     % (field, row, self.n))
        if (self.x_gauges is None) != (self.z_gauges is None):
            raise ValueError('x_gauges and z_gauges come together')
        return self


def _rows(strings, n):
    return BinaryMatrix.from_bitstrings(strings, n)


def code_to_model(code) -> CodeModel:
    if isinstance(code, SubsystemCssCode):
        return CodeModel(name=code.name, n=code.n,
                         x_stabilizers=code.Sx.to_bitstrings(),
                         z_stabilizers=code.Sz.to_bitstrings(),
                         x_logicals=code.Lx.to_bitstrings(),
                         z_logicals=code.Lz.to_bitstrings(),
                         x_gauges=code.Gx.to_bitstrings(),
                         z_gauges=code.Gz.to_bitstrings())
    return CodeModel(name=code.name, n=code.n,
                     x_stabilizers=code.G.to_bitstrings(),
                     z_stabilizers=code.H.to_bitstrings(),
                     x_logicals=code.Lx.to_bitstrings(),
                     z_logicals=code.Lz.to_bitstrings())


def code_from_model(model: CodeModel):
    "builds the code, a subsystem code when gauges are given"
    n = model.n
    logicals = None
    if model.x_logicals is not None or model.z_logicals is not None:
        logicals = tuple(None if rows is None else _rows(rows, n)
                         for rows in (model.x_logicals, model.z_logicals))
    if model.x_gauges is not None:
        if logicals is not None and None in logicals:
            raise ValueError('subsystem codes need both logical sides')
        return new_subsystem(n, _rows(model.x_stabilizers, n),
                             _rows(model.z_stabilizers, n),
                             _rows(model.x_gauges, n),
                             _rows(model.z_gauges, n),
                             logicals=logicals, name=model.name)
    return new_css(n, _rows(model.x_stabilizers, n),
                   _rows(model.z_stabilizers, n), logicals=logicals,
                   name=model.name)


def code_to_json(code, indent=2) -> str:
    return code_to_model(code).model_dump_json(indent=indent,
                                               exclude_none=True)


def code_from_json(text):
    return code_from_model(CodeModel.model_validate_json(text))


class SpiderModel(BaseModel):
    id: int
    kind: Literal['Z', 'X']
    phase: Literal[0, 1] = 0


class DiagramModel(BaseModel):
    spiders: List[SpiderModel] = []
    edges: List[Tuple[int, int]] = []
    inputs: List[Port] = []
    outputs: List[Port] = []

    @model_validator(mode='after')
    def check_references(self):
        ids = [s.id for s in self.spiders]
        if len(set(ids)) != len(ids):
            raise ValueError('spider ids must be unique')
        known = set(ids)
        for a, b in self.edges:
            if a not in known or b not in known:
                raise ValueError('edge (%d, %d) names an unknown spider'
                                 % (a, b))
        tokens = Counter()
        for port in self.inputs + self.outputs:
            if isinstance(port, str):
                if not port.startswith('w'):
                    raise ValueError('bad wire token %r' % port)
                tokens[port] += 1
            elif port not in known:
                raise ValueError('port on unknown spider %d' % port)
        for token, count in tokens.items():
            if count != 2:
                raise ValueError('wire token %r must appear twice' % token)
        return self


def diagram_to_model(diagram: ZxDiagram) -> DiagramModel:
    spiders = [SpiderModel(id=v, kind=diagram.kind(v), phase=diagram.phase(v))
               for v in diagram.spiders()]
    edges = sorted(tuple(sorted((a, b))) for a, b in diagram.graph.edges()
                   if not diagram.is_boundary(a)
                   and not diagram.is_boundary(b))
    tokens = {}

    def port(boundary):
        neighbor = diagram.port_neighbor(boundary)
        if not diagram.is_boundary(neighbor):
            return neighbor
        if neighbor not in tokens:
            tokens[boundary] = 'w%d' % len(tokens)
            return tokens[boundary]
        return tokens[neighbor]

    return DiagramModel(spiders=spiders, edges=edges,
                        inputs=[port(b) for b in diagram.inputs],
                        outputs=[port(b) for b in diagram.outputs])


def diagram_from_model(model: DiagramModel) -> ZxDiagram:
    diagram = ZxDiagram()
    nodes = {}
    for spider in sorted(model.spiders, key=lambda s: s.id):
        nodes[spider.id] = diagram.add_spider(spider.kind, spider.phase)
    for a, b in model.edges:
        diagram.add_edge(nodes[a], nodes[b])
    open_wires = {}
    for ports, add in ((model.inputs, diagram.add_input),
                       (model.outputs, diagram.add_output)):
        for port in ports:
            if isinstance(port, int):
                add(nodes[port])
                continue
            boundary = add()
            if port in open_wires:
                diagram.graph.add_edge(open_wires.pop(port), boundary)
            else:
                open_wires[port] = boundary
    if open_wires:
        raise DiagramError('unpaired wire tokens %s' % sorted(open_wires))
    return diagram.validate()


def diagram_to_json(diagram, indent=2) -> str:
    return diagram_to_model(diagram).model_dump_json(indent=indent)


def diagram_from_json(text) -> ZxDiagram:
    return diagram_from_model(DiagramModel.model_validate_json(text))


class DenseMapModel(BaseModel):
    "a dense map as rows of real and imaginary parts"
    n_inputs: int
    n_outputs: int
    real: List[List[float]]
    imag: List[List[float]]

    @model_validator(mode='after')
    def check_shape(self):
        shape = (2 ** self.n_outputs, 2 ** self.n_inputs)
        for part in (self.real, self.imag):
            if len(part) != shape[0] or any(len(r) != shape[1]
                                            for r in part):
                raise ValueError('matrix parts must be %d x %d' % shape)
        return self


def dense_map_to_model(dense: DenseMap) -> DenseMapModel:
    return DenseMapModel(n_inputs=dense.n_inputs, n_outputs=dense.n_outputs,
                         real=dense.matrix.real.tolist(),
                         imag=dense.matrix.imag.tolist())


def dense_map_from_json(text) -> DenseMap:
    model = DenseMapModel.model_validate_json(text)
    matrix = np.array(model.real) + 1j * np.array(model.imag)
    return DenseMap(matrix.reshape(2 ** model.n_outputs, 2 ** model.n_inputs),
                    model.n_inputs, model.n_outputs)


class MorphModel(BaseModel):
    code: CodeModel
    subset: List[int]
    form: Literal['zx', 'xz']
    child: CodeModel
    morphed: CodeModel
    child_diagram: DiagramModel
    morphed_diagram: DiagramModel
    sigma: List[int]
    cut_wires: int
    new_qubit_map: Dict[int, int] = {}
    child_counts: Tuple[int, int, int]
    degenerate: bool
    trace: List[str] = []
    verified: bool


class GaugeFixModel(BaseModel):
    code: CodeModel
    basis: Literal['X', 'Z']
    outcomes: List[Literal[0, 1]]
    fixed_code: CodeModel
    recovery: str
    verified: bool
    nonzero_inputs: int = 0


class SwitchStepModel(BaseModel):
    measured: str
    outcome: Literal[0, 1]
    recovery: str
    code: CodeModel
    verified: bool


class SwitchModel(BaseModel):
    steps: List[SwitchStepModel] = []


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str = ''


class VerificationModel(BaseModel):
    subject: str
    passed: bool
    checks: List[CheckModel] = []


def to_model(obj) -> BaseModel:
    "the JSON model of a code, diagram or transformation result"
    if isinstance(obj, (CssCode, SubsystemCssCode)):
        return code_to_model(obj)
    elif isinstance(obj, ZxDiagram):
        return diagram_to_model(obj)
    elif isinstance(obj, DenseMap):
        return dense_map_to_model(obj)
    elif isinstance(obj, MorphResult):
        return MorphModel(
            code=code_to_model(obj.code), subset=sorted(obj.subset),
            form=obj.form, child=code_to_model(obj.child),
            morphed=code_to_model(obj.morphed),
            child_diagram=diagram_to_model(obj.child_diagram),
            morphed_diagram=diagram_to_model(obj.morphed_diagram),
            sigma=list(obj.sigma), cut_wires=obj.cut_wires,
            new_qubit_map=dict(obj.new_qubit_map),
            child_counts=obj.child_counts, degenerate=obj.degenerate,
            trace=[step.rule for step in obj.trace], verified=obj.verified)
    elif isinstance(obj, GaugeFixResult):
        return GaugeFixModel(
            code=code_to_model(obj.code), basis=obj.basis,
            outcomes=list(obj.outcomes),
            fixed_code=code_to_model(obj.fixed_code),
            recovery=str(obj.recovery), verified=obj.verified,
            nonzero_inputs=obj.nonzero_inputs)
    elif isinstance(obj, SwitchStep):
        return SwitchStepModel(
            measured=str(obj.measured), outcome=obj.outcome,
            recovery=str(obj.recovery), code=code_to_model(obj.code),
            verified=obj.verified)
    elif isinstance(obj, VerificationReport):
        return VerificationModel(
            subject=obj.subject, passed=obj.passed,
            checks=[CheckModel(name=c.name, passed=c.passed, detail=c.detail)
                    for c in obj.checks])
    elif isinstance(obj, (list, tuple)) and all(isinstance(s, SwitchStep)
                                                for s in obj):
        return SwitchModel(steps=[to_model(s) for s in obj])
    raise TypeError('no JSON model for %s' % type(obj).__name__)


def to_json(obj, indent=2) -> str:
    return to_model(obj).model_dump_json(indent=indent, exclude_none=True)
