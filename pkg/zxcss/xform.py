# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
"""Code transformations driven by normal forms.

Every transformation builds diagrams from normal forms, rewrites or splits
them, and (unless told otherwise) checks the claimed identity densely before
returning; a failed check raises :class:`VerificationError`.
"""
from __future__ import annotations

import itertools
import logging
import os
import re
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from zxcss.code import (CssCode, SubsystemCssCode, css_parameters,
                        distance, new_css, stabilizers_supported_on,
                        trivial_code)
from zxcss.f2 import BinaryMatrix, rank, same_row_space
from zxcss.nf import (cap_gauge_wires, code_from_normal_form,
                      normal_form_rows, subsystem_zx_normal_form,
                      xz_normal_form, zx_normal_form)
from zxcss.pauli import PauliOperator
from zxcss.sem import (DEFAULT_TOL, DenseMap, VerificationError,
                       encoder_oracle, equal_up_to_scalar, evaluate,
                       is_isometry, stabilized_by)
from zxcss.zx import (RULES, ZxDiagram, apply_rule, check_rule, identity,
                      pauli_diagram, pauli_projector_diagram, permutation,
                      spider)

__all__ = ['VerificationError', 'PauliX', 'PauliZ', 'XSpiderGadget',
           'ZSpiderGadget', 'parse_layer', 'logical_layer_diagram',
           'transversal_pauli', 'PushedPrimitive', 'push_primitive',
           'push_through', 'check_implementation',
           'MorphResult', 'morph', 'find_morph_subset', 'QRM_CUBE_SUBSET',
           'GaugeFixResult', 'recovery', 'gauge_fix', 'gauge_fix_grid',
           'SwitchStep', 'switch', 'EtaFactorization', 'eta_factorization',
           'Check', 'VerificationReport', 'verify_code', 'verify_rules',
           'worker_count']

logger = logging.getLogger(__name__)

#: 8-qubit subset of qrm15 whose morph yields the [[8,3,2]] cube code
QRM_CUBE_SUBSET = frozenset(range(8, 16))


def worker_count():
    "processes used for batches of dense checks, from ZXCSS_WORKERS"
    value = os.environ.get('ZXCSS_WORKERS', '1')
    try:
        count = int(value)
    except ValueError:
        warnings.warn('ignoring ZXCSS_WORKERS=%r' % value)
        return 1
    return max(count, 1)


def _same(a, b, tol):
    return equal_up_to_scalar(evaluate(a).matrix, evaluate(b).matrix, tol)


# logical layers

@dataclass(frozen=True)
class PauliX:
    wire: int


@dataclass(frozen=True)
class PauliZ:
    wire: int


@dataclass(frozen=True)
class XSpiderGadget:
    "a phase-free X spider through the given logical wires"
    wires: Tuple[int, ...]
    legs: int = 1


@dataclass(frozen=True)
class ZSpiderGadget:
    wires: Tuple[int, ...]
    legs: int = 1


_PRIMITIVE_RE = re.compile(r'^(X|Z|XS|ZS):(\d+(?:,\d+)*)(?:/(\d+))?$')


def parse_layer(text: str):
    """Parses ``X:1;Z:2;ZS:1,2/1``; a ``/e`` suffix gives a gadget e
    external legs."""
    layer = []
    for token in filter(None, (t.strip() for t in text.split(';'))):
        match = _PRIMITIVE_RE.match(token)
        if match is None:
            raise ValueError('malformed layer primitive %r' % token)
        name, wires, legs = match.groups()
        wires = tuple(int(w) for w in wires.split(','))
        if name in ('X', 'Z'):
            if len(wires) != 1 or legs is not None:
                raise ValueError('%r takes a single wire' % token)
            layer.append((PauliX if name == 'X' else PauliZ)(wires[0]))
        else:
            gadget = XSpiderGadget if name == 'XS' else ZSpiderGadget
            layer.append(gadget(wires, 1 if legs is None else int(legs)))
    return layer


def _check_wires(layer, k):
    for primitive in layer:
        wires = getattr(primitive, 'wires', None) or (primitive.wire,)
        for wire in wires:
            if not 1 <= wire <= k:
                raise ValueError('logical wire %d out of range 1..%d'
                                 % (wire, k))
        if len(set(wires)) != len(wires):
            raise ValueError('gadget repeats a wire')


def _pi_layer(width, extra, kind, qubits):
    diagram = ZxDiagram()
    for wire in range(1, width + extra + 1):
        if wire in qubits:
            node = diagram.add_spider(kind, 1)
            diagram.add_input(node)
            diagram.add_output(node)
        else:
            diagram.add_wire()
    return diagram


def _gadget_layer(width, extra, kind, wires, legs):
    """One phase-free spider of kind through the listed wires, with legs
    extra outputs after all the wires."""
    diagram = ZxDiagram()
    center = diagram.add_spider(kind)
    for wire in range(1, width + extra + 1):
        if wire in wires:
            diagram.add_input(center)
            diagram.add_output(center)
        else:
            diagram.add_wire()
    for _ in range(legs):
        diagram.add_output(center)
    return diagram


def _kind(primitive):
    return 'X' if isinstance(primitive, (PauliX, XSpiderGadget)) else 'Z'


def _layer_part(k, extra, primitive):
    kind = _kind(primitive)
    if isinstance(primitive, (PauliX, PauliZ)):
        return _pi_layer(k, extra, kind, {primitive.wire})
    return _gadget_layer(k, extra, kind, set(primitive.wires),
                         primitive.legs)


def logical_layer_diagram(k: int, layer) -> ZxDiagram:
    """The layer as a diagram on k logical wires; gadget legs are extra
    outputs after them, in order."""
    _check_wires(layer, k)
    diagram, extra = identity(k), 0
    for primitive in layer:
        diagram = diagram.compose(_layer_part(k, extra, primitive))
        extra += getattr(primitive, 'legs', 0)
    return diagram


def transversal_pauli(code: CssCode, kind: str, i: int) -> PauliOperator:
    "the physical operator implementing the logical X_i or Z_i"
    return code.logical(kind, i)


class _Rewriting:
    """A primitive followed by an encoder, rewritten step by step.

    ``encoder`` holds the spider of every qubit that still belongs to the
    encoder and ``layer`` the spiders already pushed above it.
    """

    def __init__(self, diagram, n):
        self.diagram = diagram
        self.n = n
        self.encoder = [diagram.port_neighbor(o) for o in diagram.outputs[:n]]
        self.layer = set()

    def apply(self, rule, site):
        "applies rule at site and returns the spiders it created"
        first = self.diagram._next
        self.diagram = apply_rule(self.diagram, rule, site)
        return set(range(first, self.diagram._next))

    def absorb(self, q, node):
        """Fuses node into the spider of qubit q and unfuses the qubit again,
        so that its encoder legs move to a new spider below it."""
        qubit = self.encoder[q]
        self.apply('fuse', (qubit, node))
        top = self.diagram.outputs[q]
        moved = tuple(w for w in self.diagram.legs(qubit)
                      if w not in self.layer and w != top)
        (below,) = self.apply('unfuse', (qubit, moved))
        self.layer.add(qubit)
        self.encoder[q] = below
        return qubit

    def _absorb_all(self, created):
        touched = {}
        for q in range(self.n):
            hits = [w for w in self.diagram.legs(self.encoder[q])
                    if w in created]
            if hits:
                touched[q] = self.absorb(q, hits[0])
        return touched

    def copy_pi(self, pi):
        "pi copy through the logical row spider, then into the qubits"
        (row,) = [w for w in self.diagram.legs(pi)
                  if not self.diagram.is_boundary(w)]
        self._absorb_all(self.apply('pi_copy', (pi, row)))

    def push_gadget(self, center, wires):
        """Splits the gadget into one spider per logical wire and pushes
        each through its row spider by strong complementarity.

        wires pairs the input boundary of every gadget wire with the qubit
        support of its logical row.
        """
        self.layer.add(center)
        chains = {}
        for boundary, support in wires:
            index = {node: q for q, node in enumerate(self.encoder)}
            (row,) = [w for w in self.diagram.legs(center)
                      if w not in self.layer
                      and not self.diagram.is_boundary(w)
                      and {index[x] for x in self.diagram.legs(w)
                           if x in index} == support]
            (split,) = self.apply('unfuse', (center, (boundary, row)))
            created = self.apply('bialgebra', (split, row))
            (link,) = [w for w in self.diagram.legs(center) if w in created]
            self.layer.add(link)
            for q, node in self._absorb_all(created).items():
                chains.setdefault(q, []).append(node)
        for top, *lower in chains.values():
            for node in lower:
                self.apply('fuse', (top, node))
                self.layer.discard(node)

    def peel(self):
        "the pushed spiders as a diagram of their own"
        d = self.diagram
        bare = [i for i in d.inputs if d.port_neighbor(i) in d.outputs]
        physical = ZxDiagram()
        physical.graph = d.graph.subgraph(
            self.layer | set(d.outputs) | set(bare)).copy()
        physical._next = d._next
        physical.outputs = list(d.outputs)
        for q, node in enumerate(self.encoder):
            (above,) = [w for w in d.legs(node)
                        if w in self.layer or w == d.outputs[q]]
            if d.is_boundary(above):
                start = physical.add_input()
                physical.graph.add_edge(start, above)
            else:
                physical.add_input(above)
        physical.inputs += bare
        return physical


@dataclass
class PushedPrimitive:
    """A layer primitive pushed through an encoder.

    ``start`` is the primitive followed by the encoder and ``rewritten`` the
    same map after the rewrites in its ``trace``, which replay from
    ``start``.  ``physical`` is the part of ``rewritten`` above the encoder.
    """
    primitive: object
    start: ZxDiagram
    rewritten: ZxDiagram
    physical: ZxDiagram


def push_primitive(code: CssCode, primitive,
                   extra: int = 0) -> PushedPrimitive:
    """Rewrites a primitive followed by the encoder of code into a physical
    diagram followed by the encoder.

    X-type primitives use the ZX normal form and Z-type ones the XZ normal
    form.  A Pauli is copied through its logical row spider by the pi copy
    rule; a gadget is unfused into one spider per logical wire and each is
    pushed through its row spider by strong complementarity.  The copies
    are fused into the qubit spiders, which are then unfused so that the
    part above the encoder stands alone.  ``extra`` bare wires, the legs of
    earlier gadgets, follow the qubits.
    """
    _check_wires([primitive], code.k)
    kind = _kind(primitive)
    legs = getattr(primitive, 'legs', 0)
    encoder = zx_normal_form(code) if kind == 'X' else xz_normal_form(code)
    part = _layer_part(code.k, extra, primitive)
    (center,) = part.spiders()
    start = part.compose(encoder.tensor(identity(extra + legs)))
    rewriting = _Rewriting(start, code.n)
    if isinstance(primitive, (PauliX, PauliZ)):
        rewriting.copy_pi(center)
    else:
        rows = code.Lx if kind == 'X' else code.Lz
        rewriting.push_gadget(center, [
            (start.inputs[w - 1], set(rows.support(w - 1)))
            for w in primitive.wires])
    logger.debug('pushed %r through %s in %d rewrite(s)', primitive,
                 code.name or 'code', len(rewriting.diagram.trace))
    return PushedPrimitive(primitive, start, rewriting.diagram,
                           rewriting.peel())


def push_through(code: CssCode, layer, check: bool = True,
                 tol: float = DEFAULT_TOL) -> ZxDiagram:
    """Physical diagram P with ``E L = P E`` for a layer of logical Pauli
    and phase-free spider primitives.

    Every primitive goes through :func:`push_primitive` and the physical
    parts are composed in layer order.  The ``trace`` of P lists the
    rewrites of all primitives, one after the other.
    """
    _check_wires(layer, code.k)
    physical, extra, trace = identity(code.n), 0, ()
    for primitive in layer:
        pushed = push_primitive(code, primitive, extra)
        physical = physical.compose(pushed.physical)
        trace += pushed.rewritten.trace
        extra += getattr(primitive, 'legs', 0)
    physical.trace = trace
    if check and not check_implementation(code, layer, physical, tol):
        raise VerificationError('pushed layer does not implement %r'
                                % (layer,))
    return physical


def check_implementation(code: CssCode, layer, physical: ZxDiagram,
                         tol: float = DEFAULT_TOL) -> bool:
    """Whether ``E L = P E`` and ``L = E^dagger P E`` hold up to scalar."""
    encoder = zx_normal_form(code)
    logical = logical_layer_diagram(code.k, layer)
    extra = logical.n_outputs - code.k
    forward = encoder.compose(physical)
    if not _same(logical.compose(encoder.tensor(identity(extra))),
                 forward, tol):
        return False
    back = forward.compose(encoder.adjoint().tensor(identity(extra)))
    return _same(back, logical, tol)


# morphing

@dataclass
class MorphResult:
    """Outcome of splitting an encoder along a qubit subset.

    ``cut_wires`` counts the wires joining the two halves and
    ``new_qubit_map`` sends every unfused row spider of the parent normal
    form to the 1-based qubit of the morphed code its cut wire became.
    ``child`` carries one logical qubit per cut wire; ``degenerate`` marks
    a child encoder that is not an isometry because its cut rows depend on
    its stabilizers.
    """
    code: CssCode
    subset: FrozenSet[int]
    form: str
    child: CssCode
    morphed: CssCode
    child_diagram: ZxDiagram
    morphed_diagram: ZxDiagram
    sigma: Tuple[int, ...]
    cut_wires: int
    new_qubit_map: Dict[int, int] = field(default_factory=dict)
    trace: tuple = ()
    degenerate: bool = False
    verified: bool = False

    @property
    def child_counts(self):
        "(qubits, cut wires, input-free row spiders) of the child diagram"
        d = self.child_diagram
        rows = [v for v in d.spiders()
                if not any(d.is_boundary(w) for w in d.legs(v))]
        return len(self.subset), self.cut_wires, len(rows)


def _subset(code, qubits):
    subset = frozenset(int(q) for q in qubits)
    if any(not 1 <= q <= code.n for q in subset):
        raise ValueError('subset must lie in 1..%d' % code.n)
    return subset


def _sigma(code, subset):
    "positions, in the outside-then-inside order, of the qubits 1..n"
    order = [q for q in range(1, code.n + 1) if q not in subset] \
        + sorted(subset)
    return tuple(order.index(q) for q in range(1, code.n + 1))


def _normal_form(code, form):
    if form == 'zx':
        return zx_normal_form(code)
    elif form == 'xz':
        return xz_normal_form(code)
    raise ValueError('form must be zx or xz, got %r' % (form,))


def _split(diagram, child_nodes, cuts, child_outputs, morphed_outputs):
    """Cuts the (x, w) edges listed in cuts; x stays outside and gains an
    output, w goes to the child and gains an input."""
    def part(nodes):
        piece = ZxDiagram()
        piece.graph = diagram.graph.subgraph(nodes).copy()
        piece._next = diagram._next
        return piece

    child = part(child_nodes)
    morphed = part(set(diagram.graph) - set(child_nodes))
    morphed.inputs = list(diagram.inputs)
    morphed.outputs = list(morphed_outputs)
    child.outputs = list(child_outputs)
    for x, w in cuts:
        morphed.add_output(x)
        child.add_input(w)
    return child, morphed


def morph(code: CssCode, qubits, form: str = 'zx', check: bool = True,
          tol: float = DEFAULT_TOL) -> MorphResult:
    """Splits the encoder of code along a qubit subset R.

    Every row spider touching R and something outside it (its input
    counts as outside) is unfused, an identity spider is put on the new
    edge and that edge is cut.  The outside part is the morphed code, the
    R part the child, and ``E = sigma (I (x) E_child) E_morphed``.
    """
    subset = _subset(code, qubits)
    if not subset or len(subset) == code.n:
        return _degenerate_morph(code, subset, form, check, tol)
    original = _normal_form(code, form)
    diagram = original
    qubit_of = {diagram.port_neighbor(o): j + 1
                for j, o in enumerate(diagram.outputs)}
    qubit_kind = diagram.kind(next(iter(qubit_of)))
    fed = {diagram.port_neighbor(i) for i in diagram.inputs}
    cuts, unfused, inside_rows = [], [], []
    for hub in [v for v in diagram.spiders() if v not in qubit_of]:
        legs = diagram.legs(hub)
        inside = [w for w in legs if qubit_of.get(w) in subset]
        outside = len(legs) - len(inside)
        if not inside:
            continue
        if not outside and hub not in fed:
            inside_rows.append(hub)
            continue
        half = diagram._next
        diagram = apply_rule(diagram, 'unfuse', (hub, tuple(inside)))
        node = diagram._next
        diagram = apply_rule(diagram, 'insert_identity',
                             (hub, half, qubit_kind))
        cuts.append((node, half))
        unfused.append(hub)
    trace = diagram.trace
    diagram = diagram.copy()
    for node, half in cuts:
        diagram.graph.remove_edge(node, half)
    logger.info('morphing %s along %s: %d cut wire(s)',
                code.name or 'code', sorted(subset), len(cuts))

    ports = dict(zip(range(1, code.n + 1), diagram.outputs))
    child_outputs = [ports[q] for q in sorted(subset)]
    morphed_outputs = [ports[q] for q in range(1, code.n + 1)
                       if q not in subset]
    child_nodes = set(child_outputs) | set(inside_rows) \
        | {v for v, q in qubit_of.items() if q in subset} \
        | {half for _, half in cuts}
    child_diagram, morphed_diagram = _split(
        diagram, child_nodes, cuts, child_outputs, morphed_outputs)
    child = code_from_normal_form(child_diagram, name='child', cut=True)
    morphed = code_from_normal_form(morphed_diagram, name='morphed')
    _, closed, cut_rows = normal_form_rows(child_diagram)
    kept = len(morphed_outputs)
    result = MorphResult(
        code, subset, form, child, morphed, child_diagram, morphed_diagram,
        _sigma(code, subset), len(cuts),
        {hub: kept + i for i, hub in enumerate(unfused, 1)}, trace,
        rank(closed.vstack(cut_rows)) < rank(closed) + cut_rows.rows)
    if check:
        _verify_morph(result, original, tol)
    return result


def _degenerate_morph(code, subset, form, check, tol):
    "R empty or full: an identity child beside a copy of the code"
    child = trivial_code(len(subset), name='child')
    morphed = new_css(code.n, code.G, code.H, logicals=(code.Lx, code.Lz),
                      name='morphed')
    original = _normal_form(code, form)
    result = MorphResult(code, subset, form, child, morphed,
                         _normal_form(child, form), original,
                         _sigma(code, subset), len(subset))
    if check:
        _verify_morph(result, original, tol)
    return result


def _generators(code):
    return code.m_x + code.m_z


def _verify_morph(result, original, tol):
    outside = result.code.n - len(result.subset)
    composite = result.morphed_diagram.compose(
        identity(outside).tensor(result.child_diagram)).compose(
        permutation(result.sigma))
    if not _same(composite, original, tol):
        raise VerificationError('morph along %s does not recompose the '
                                'encoder' % sorted(result.subset))
    code, child, morphed = result.code, result.child, result.morphed
    if morphed.n != code.n - child.n + result.cut_wires \
            or morphed.k != code.k:
        raise VerificationError('morphed code has parameters %s'
                                % css_parameters(morphed, False))
    # an over-cut child has fewer logical qubits than cut wires
    if child.k == result.cut_wires and \
            _generators(morphed) != _generators(code) - _generators(child):
        raise VerificationError(
            'morphed code has %d stabilizer generators, expected %d'
            % (_generators(morphed),
               _generators(code) - _generators(child)))
    result.verified = True


def _row_split(code, subset, form):
    """Matrix-level preview of a morph: child free rows, child cut rows and
    the number of morphed qubits."""
    if form == 'zx':
        free, fed = code.G, code.Lx
    else:
        free, fed = code.H, code.Lz
    inside = sorted(q - 1 for q in subset)
    child_free, child_cut = [], []
    for rows, with_input in ((free, False), (fed, True)):
        for i in range(rows.rows):
            support = set(rows.support(i))
            part = support.intersection(inside)
            if not part:
                continue
            if part == support and not with_input:
                child_free.append(part)
            else:
                child_cut.append(part)
    return child_free, child_cut


def find_morph_subset(code: CssCode, n1: int, k1: int,
                      d1: Optional[int] = None, form: str = 'zx',
                      d2: Optional[int] = None) -> Optional[FrozenSet[int]]:
    """First subset, in lexicographic order, whose morph has a non-degenerate
    child with n1 qubits and k1 logical qubits (and the requested
    distances)."""
    for combo in itertools.combinations(range(1, code.n + 1), n1):
        subset = frozenset(combo)
        child_free, child_cut = _row_split(code, subset, form)
        if len(child_cut) != k1:
            continue
        inside = sorted(q - 1 for q in subset)
        local = {q: i for i, q in enumerate(inside)}
        free = BinaryMatrix.from_supports(
            [[local[q] for q in s] for s in child_free], n1)
        cut = BinaryMatrix.from_supports(
            [[local[q] for q in s] for s in child_cut], n1)
        if rank(free.vstack(cut)) != free.rows + cut.rows:
            continue
        if d1 is not None or d2 is not None:
            result = morph(code, subset, form, check=False)
            if d1 is not None and distance(result.child) != d1:
                continue
            if d2 is not None and distance(result.morphed) != d2:
                continue
        logger.info('subset %s morphs %s as requested', sorted(subset),
                    code.name or 'code')
        return subset
    return None


# gauge fixing

def _bits(outcomes, r):
    bits = tuple(int(b) for b in outcomes)
    if len(bits) != r or any(b not in (0, 1) for b in bits):
        raise ValueError('expected %d outcome bits, got %r' % (r, outcomes))
    return bits


def _basis(basis):
    if basis not in ('X', 'Z'):
        raise ValueError('gauge basis must be X or Z, got %r' % (basis,))
    return basis


def recovery(code: SubsystemCssCode, basis: str, outcomes) -> PauliOperator:
    """Product of the partners, in the other basis, of the gauge operators
    measured with outcome 1."""
    other = 'Z' if _basis(basis) == 'X' else 'X'
    result = PauliOperator.identity(code.n)
    for i, bit in enumerate(_bits(outcomes, code.r), 1):
        if bit:
            result = result.multiply(code.gauge_operator(other, i))
    return result


@dataclass
class GaugeFixResult:
    code: SubsystemCssCode
    basis: str
    outcomes: Tuple[int, ...]
    fixed_code: CssCode
    recovery: PauliOperator
    verified: bool = False
    nonzero_inputs: int = 0


def _measurement(code, operators, outcomes):
    diagram = identity(code.n)
    for operator, bit in zip(operators, outcomes):
        diagram = diagram.compose(pauli_projector_diagram(operator, bit))
    return diagram


def gauge_fix(code: SubsystemCssCode, basis: str, outcomes,
              check: bool = True, tol: float = DEFAULT_TOL) -> GaugeFixResult:
    """Fixes every gauge operator of one basis after measuring it.

    The check feeds each computational gauge state into the encoder,
    projects on the measured outcomes and applies the recovery: every
    result is zero or the fixed encoder, and at least one is non-zero.
    """
    basis, bits = _basis(basis), _bits(outcomes, code.r)
    fixed = code.fix(basis)
    fix = recovery(code, basis, bits)
    result = GaugeFixResult(code, basis, bits, fixed, fix)
    if not check:
        return result
    operators = [code.gauge_operator(basis, i) for i in range(1, code.r + 1)]
    after = _measurement(code, operators, bits).compose(pauli_diagram(fix))
    target = evaluate(zx_normal_form(fixed)).matrix
    encoder = subsystem_zx_normal_form(code)
    for gauge in itertools.product('01', repeat=code.r):
        capped = cap_gauge_wires(encoder, code.k, ''.join(gauge))
        matrix = evaluate(capped.compose(after)).matrix
        if not matrix.any():
            continue
        if not equal_up_to_scalar(matrix, target, tol):
            raise VerificationError(
                'gauge state %s with outcomes %s does not reach the fixed '
                'encoder' % (''.join(gauge), bits))
        result.nonzero_inputs += 1
    if not result.nonzero_inputs:
        raise VerificationError('outcomes %s never occur' % (bits,))
    result.verified = True
    logger.info('gauge fixing %s in %s basis with %s: %d non-zero input(s)',
                code.name or 'code', basis, bits, result.nonzero_inputs)
    return result


def _grid_task(args):
    code, basis, bits, tol = args
    return gauge_fix(code, basis, bits, tol=tol)


def gauge_fix_grid(code: SubsystemCssCode,
                   tol: float = DEFAULT_TOL) -> List[GaugeFixResult]:
    "gauge_fix over both bases and every outcome string"
    tasks = [(code, basis, bits, tol) for basis in ('X', 'Z')
             for bits in itertools.product((0, 1), repeat=code.r)]
    workers = worker_count()
    if workers == 1:
        return [_grid_task(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_grid_task, tasks))


# switching

@dataclass
class SwitchStep:
    measured: PauliOperator
    outcome: int
    recovery: PauliOperator
    code: CssCode
    verified: bool = False


def _same_stabilizers(a, b):
    return a.n == b.n and same_row_space(a.G, b.G) \
        and same_row_space(a.H, b.H)


def switch(source: CssCode, direction: str, subsystem: SubsystemCssCode,
           outcomes=None, check: bool = True,
           tol: float = DEFAULT_TOL) -> List[SwitchStep]:
    """Moves from one gauge fixing of subsystem to the other.

    ``direction`` is the basis whose gauge operators get measured, one at a
    time; source must be the code fixed in the other basis.
    """
    direction = _basis(direction)
    other = 'Z' if direction == 'X' else 'X'
    if _same_stabilizers(source, subsystem.fix(direction)):
        return []
    if not _same_stabilizers(source, subsystem.fix(other)):
        raise ValueError('%s is not the %s-fixed code of %s'
                         % (source.name or 'source', other,
                            subsystem.name or 'the subsystem code'))
    bits = _bits(outcomes if outcomes is not None else [0] * subsystem.r,
                 subsystem.r)
    steps, current = [], source
    for i, bit in enumerate(bits, 1):
        measured = subsystem.gauge_operator(direction, i)
        partner = subsystem.gauge_operator(other, i)
        fix = partner if bit else PauliOperator.identity(subsystem.n)
        done = list(range(i))
        pending = list(range(i, subsystem.r))
        if direction == 'X':
            G = subsystem.Sx.vstack(subsystem.Gx.select_rows(done))
            H = subsystem.Sz.vstack(subsystem.Gz.select_rows(pending))
        else:
            G = subsystem.Sx.vstack(subsystem.Gx.select_rows(pending))
            H = subsystem.Sz.vstack(subsystem.Gz.select_rows(done))
        following = new_css(subsystem.n, G, H,
                            logicals=(subsystem.Lx, subsystem.Lz),
                            name='%s step %d' % (subsystem.name or 'switch',
                                                 i))
        step = SwitchStep(measured, bit, fix, following)
        if check:
            before = zx_normal_form(current).compose(
                pauli_projector_diagram(measured, bit)).compose(
                pauli_diagram(fix))
            matrix = evaluate(before).matrix
            if not matrix.any() or not equal_up_to_scalar(
                    matrix, evaluate(zx_normal_form(following)).matrix, tol):
                raise VerificationError('switch step %d does not reach the '
                                        'next code' % i)
            step.verified = True
        steps.append(step)
        current = following
    return steps


# the eta state

@dataclass
class EtaFactorization:
    block: Tuple[int, ...]
    ancilla: Tuple[int, ...]
    eta: DenseMap
    verified: bool = False


def _eta_diagram(small):
    "sum_b |b> (x) E|b> for a one-qubit code"
    return spider('Z', 0, 2).compose(
        identity(1).tensor(zx_normal_form(small)))


def eta_factorization(big: CssCode, small: CssCode,
                      tol: float = DEFAULT_TOL) -> EtaFactorization:
    """Finds qubits carrying a copy of small such that the encoder of big
    is that of small beside a fixed state on the remaining qubits.

    The state is ``|0>|0_L> + |1>|1_L>`` of small; the first qubits of big
    are tried first.
    """
    if small.k != 1 or big.k != 1 or big.n != 2 * small.n + 1:
        raise ValueError('needs one-qubit codes with n = 2 m + 1 qubits')
    eta = _eta_diagram(small)
    target = zx_normal_form(big)
    structural = tuple(range(1, small.n + 1))
    rest = (c for c in itertools.combinations(range(1, big.n + 1), small.n)
            if c != structural)
    for block in itertools.chain([structural], rest):
        x_rows, z_rows = stabilizers_supported_on(big, block)
        if rank(x_rows) < small.m_x or rank(z_rows) < small.m_z:
            continue
        subset = frozenset(block)
        ancilla = tuple(q for q in range(1, big.n + 1) if q not in subset)
        sigma = tuple((ancilla + block).index(q)
                      for q in range(1, big.n + 1))
        candidate = eta.tensor(zx_normal_form(small)).compose(
            permutation(sigma))
        if _same(candidate, target, tol):
            logger.info('eta factorization on block %s', block)
            return EtaFactorization(block, ancilla, evaluate(eta), True)
    raise VerificationError('no qubit block factors %s through %s'
                            % (big.name, small.name))


# verification reports

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ''


@dataclass
class VerificationReport:
    subject: str
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def add(self, name, passed, detail=''):
        self.checks.append(Check(name, bool(passed), detail))


def verify_code(code, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Dense checks of the normal forms, the encoder and the transversal
    Pauli operators of a code."""
    report = VerificationReport(code.name or 'code')
    if isinstance(code, SubsystemCssCode):
        stabilizer = code.as_stabilizer_code()
        oracle = encoder_oracle(stabilizer)
        report.add('subsystem ZX normal form matches oracle',
                   equal_up_to_scalar(
                       evaluate(subsystem_zx_normal_form(code)), oracle, tol))
        for basis, caps in (('X', '+'), ('Z', '0')):
            capped = subsystem_zx_normal_form(code, caps * code.r)
            report.add('gauge inputs %s give the %s-fixed code'
                       % (caps * code.r, basis),
                       _same(capped, zx_normal_form(code.fix(basis)), tol))
        return report
    oracle = encoder_oracle(code)
    for label, build in (('ZX', zx_normal_form), ('XZ', xz_normal_form)):
        report.add('%s normal form matches oracle' % label,
                   equal_up_to_scalar(evaluate(build(code)), oracle, tol))
    report.add('encoder is an isometry', is_isometry(oracle, tol))
    stabilizers = code.stabilizers()
    report.add('image fixed by all %d stabilizer generators'
               % len(stabilizers),
               all(stabilized_by(s, oracle, tol) for s in stabilizers))
    for i in range(1, code.k + 1):
        for primitive in (PauliX(i), PauliZ(i)):
            physical = push_through(code, [primitive], check=False)
            report.add('%s%d pushes to %s' % (
                'X' if isinstance(primitive, PauliX) else 'Z', i,
                transversal_pauli(code, 'X' if isinstance(primitive, PauliX)
                                  else 'Z', i)),
                check_implementation(code, [primitive], physical, tol))
    return report


def verify_rules(samples: int, rng, tol: float = DEFAULT_TOL,
                 rules: Optional[Sequence[str]] = None) -> VerificationReport:
    "soundness of every rewrite rule on random sites"
    report = VerificationReport('rewrite rules')
    for name in rules or sorted(RULES):
        failures = check_rule(name, samples, rng, tol)
        report.add(name, not failures,
                   '%d/%d sound' % (samples - len(failures), samples))
    return report
