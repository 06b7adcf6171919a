# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
"""Phase-free ZX diagrams and their rewrite rules.

A diagram is a :class:`networkx.MultiGraph`.  Spiders carry a ``kind`` ('Z'
or 'X') and a ``phase`` bit (0 or pi); open wires end on boundary vertices
of kind 'B', each of degree one and listed in exactly one of ``inputs`` and
``outputs``.  A bare wire is an edge joining two boundary vertices.

Every rule comes as a matcher, returning the sites where it applies, and a
rewriter working in place on a copy; :func:`apply_rule` ties the two
together and records a :class:`RewriteStep`.
"""
from __future__ import annotations

import json
import logging
from collections import namedtuple
from dataclasses import dataclass
from hashlib import md5
from typing import Any, Iterable, Optional, Sequence

import networkx as nx

from zxcss.pauli import PauliOperator

__all__ = ['DiagramError', 'RewriteError', 'RewriteStep', 'ZxDiagram',
           'RULES', 'add_rule', 'apply_rule', 'replay', 'identity',
           'spider', 'z_state', 'x_state', 'state', 'permutation',
           'pauli_diagram', 'pauli_projector_diagram', 'random_diagram',
           'random_match', 'check_rule']

logger = logging.getLogger(__name__)

SPIDER_KINDS = ('Z', 'X')
BOUNDARY = 'B'


class DiagramError(ValueError):
    "Raised on malformed diagrams or mismatched wiring"


class RewriteError(DiagramError):
    "Raised when a rule is applied where it does not match"


@dataclass(frozen=True)
class RewriteStep:
    rule: str
    site: Any
    before: str
    after: str


def _other(kind):
    return 'X' if kind == 'Z' else 'Z'


class ZxDiagram:
    """A ZX diagram with ordered input and output wires.

    The builder methods mutate; every other operation returns a new
    diagram.
    """

    def __init__(self):
        self.graph = nx.MultiGraph()
        self.inputs = []
        self.outputs = []
        self.scalar_exponent = 0
        self.trace = ()
        self._next = 0

    # building

    def _new_node(self, kind, phase=0):
        node = self._next
        self._next += 1
        self.graph.add_node(node, kind=kind, phase=phase % 2)
        return node

    def add_spider(self, kind, phase=0):
        if kind not in SPIDER_KINDS:
            raise DiagramError('unknown spider kind %r' % (kind,))
        return self._new_node(kind, phase)

    def add_edge(self, a, b):
        for node in (a, b):
            if node not in self.graph:
                raise DiagramError('no vertex %r' % (node,))
        self.graph.add_edge(a, b)

    def _add_port(self, node):
        boundary = self._new_node(BOUNDARY)
        if node is not None:
            self.add_edge(boundary, node)
        return boundary

    def add_input(self, node=None):
        "opens an input wire on node; None leaves it for add_wire"
        boundary = self._add_port(node)
        self.inputs.append(boundary)
        return boundary

    def add_output(self, node=None):
        boundary = self._add_port(node)
        self.outputs.append(boundary)
        return boundary

    def add_wire(self):
        "adds a bare wire from a new input to a new output"
        start, end = self.add_input(), self.add_output()
        self.graph.add_edge(start, end)
        return start, end

    def set_phase(self, node, phase):
        self.graph.nodes[node]['phase'] = phase % 2

    # inspection

    def kind(self, node):
        return self.graph.nodes[node]['kind']

    def phase(self, node):
        return self.graph.nodes[node]['phase']

    def is_boundary(self, node):
        return self.kind(node) == BOUNDARY

    def spiders(self):
        return sorted(v for v in self.graph if not self.is_boundary(v))

    def legs(self, node):
        "neighbors of node, once per edge, self-loops left out"
        return sorted(u for _, u in self.graph.edges(node) if u != node)

    def loops(self, node):
        return self.graph.number_of_edges(node, node)

    def degree(self, node):
        return self.graph.degree(node)

    def edge_count(self, a, b):
        return self.graph.number_of_edges(a, b)

    def port_neighbor(self, boundary):
        (neighbor,) = [u for _, u in self.graph.edges(boundary)]
        return neighbor

    @property
    def n_inputs(self):
        return len(self.inputs)

    @property
    def n_outputs(self):
        return len(self.outputs)

    def validate(self):
        ports = list(self.inputs) + list(self.outputs)
        if len(set(ports)) != len(ports):
            raise DiagramError('a boundary vertex is listed twice')
        for node, data in self.graph.nodes(data=True):
            kind = data.get('kind')
            if kind == BOUNDARY:
                if node not in ports:
                    raise DiagramError('dangling boundary vertex %r' % node)
                if self.graph.degree(node) != 1:
                    raise DiagramError('boundary vertex %r has degree %d'
                                       % (node, self.graph.degree(node)))
            elif kind not in SPIDER_KINDS:
                raise DiagramError('vertex %r has kind %r' % (node, kind))
            elif data.get('phase') not in (0, 1):
                raise DiagramError('vertex %r has phase %r'
                                   % (node, data.get('phase')))
        return self

    def copy(self):
        result = ZxDiagram()
        result.graph = self.graph.copy()
        result.inputs = list(self.inputs)
        result.outputs = list(self.outputs)
        result.scalar_exponent = self.scalar_exponent
        result.trace = self.trace
        result._next = self._next
        return result

    def canonical(self):
        "a JSON-able description independent of insertion order"
        nodes = [[v, self.kind(v), self.phase(v)]
                 for v in sorted(self.graph)]
        edges = sorted(sorted((a, b)) for a, b in self.graph.edges())
        return {'nodes': nodes, 'edges': edges,
                'inputs': list(self.inputs), 'outputs': list(self.outputs)}

    def digest(self):
        payload = json.dumps(self.canonical(), sort_keys=True)
        return md5(payload.encode('utf-8')).hexdigest()

    def __repr__(self):
        return '<ZxDiagram %d spiders, %d -> %d>' % (
            len(self.spiders()), self.n_inputs, self.n_outputs)

    # combining

    def _absorb(self, other):
        mapping = {}
        for node in sorted(other.graph):
            data = other.graph.nodes[node]
            mapping[node] = self._new_node(data['kind'], data['phase'])
        for a, b in other.graph.edges():
            self.graph.add_edge(mapping[a], mapping[b])
        self.scalar_exponent += other.scalar_exponent
        return mapping

    def compose(self, other: ZxDiagram) -> ZxDiagram:
        "plugs the outputs of self into the inputs of other"
        if self.n_outputs != other.n_inputs:
            raise DiagramError('cannot compose %d outputs with %d inputs'
                               % (self.n_outputs, other.n_inputs))
        result = self.copy()
        result.trace = ()
        mapping = result._absorb(other)
        for out, inp in zip(self.outputs, [mapping[i] for i in other.inputs]):
            left = result.port_neighbor(out)
            right = result.port_neighbor(inp)
            result.graph.remove_node(out)
            result.graph.remove_node(inp)
            result.graph.add_edge(left, right)
        result.outputs = [mapping[o] for o in other.outputs]
        return result

    def tensor(self, other: ZxDiagram) -> ZxDiagram:
        "places other beside self, its wires after those of self"
        result = self.copy()
        result.trace = ()
        mapping = result._absorb(other)
        result.inputs += [mapping[i] for i in other.inputs]
        result.outputs += [mapping[o] for o in other.outputs]
        return result

    def adjoint(self) -> ZxDiagram:
        "swaps inputs and outputs; phases are their own negation"
        result = self.copy()
        result.trace = ()
        result.inputs, result.outputs = result.outputs, result.inputs
        return result


# constructors

def identity(n: int) -> ZxDiagram:
    diagram = ZxDiagram()
    for _ in range(n):
        diagram.add_wire()
    return diagram


def spider(kind: str, n_inputs: int, n_outputs: int,
           phase: int = 0) -> ZxDiagram:
    diagram = ZxDiagram()
    node = diagram.add_spider(kind, phase)
    for _ in range(n_inputs):
        diagram.add_input(node)
    for _ in range(n_outputs):
        diagram.add_output(node)
    return diagram


def z_state(phase: int = 0) -> ZxDiagram:
    "one-legged Z spider: |+> for phase 0, |-> for pi"
    return spider('Z', 0, 1, phase)


def x_state(phase: int = 0) -> ZxDiagram:
    "one-legged X spider: |0> for phase 0, |1> for pi"
    return spider('X', 0, 1, phase)


def state(symbol: str) -> ZxDiagram:
    """Single-qubit states up to scalar: '0' and '1' are X spiders, '+' and
    '-' are Z spiders."""
    try:
        build, phase = {'0': (x_state, 0), '1': (x_state, 1),
                        '+': (z_state, 0), '-': (z_state, 1)}[symbol]
    except KeyError:
        raise DiagramError('unknown state %r' % (symbol,))
    return build(phase)


def permutation(sigma: Sequence[int]) -> ZxDiagram:
    """Wire permutation sending input ``sigma[j]`` to output j (0-based)."""
    if sorted(sigma) != list(range(len(sigma))):
        raise DiagramError('%r is not a permutation' % (list(sigma),))
    diagram = ZxDiagram()
    starts = [diagram.add_input() for _ in sigma]
    for source in sigma:
        end = diagram.add_output()
        diagram.graph.add_edge(starts[source], end)
    return diagram


def _wire_layer(n, kind, qubits):
    "n wires with a pi spider of the given kind on each listed 1-based qubit"
    diagram = ZxDiagram()
    for q in range(1, n + 1):
        if q in qubits:
            node = diagram.add_spider(kind, 1)
            diagram.add_input(node)
            diagram.add_output(node)
        else:
            diagram.add_wire()
    return diagram


def pauli_diagram(operator: PauliOperator) -> ZxDiagram:
    """The Pauli operator as pi spiders, global sign dropped."""
    xs = {q for q in range(1, operator.n + 1) if operator.x[q - 1]}
    zs = {q for q in range(1, operator.n + 1) if operator.z[q - 1]}
    # X^x Z^z applies the Z part first
    return _wire_layer(operator.n, 'Z', zs).compose(
        _wire_layer(operator.n, 'X', xs))


def pauli_projector_diagram(operator: PauliOperator,
                            outcome: int) -> ZxDiagram:
    """``(I + (-1)^outcome P) / 2`` for a pure X- or Z-type operator, up to a
    positive scalar."""
    kind = operator.kind
    if kind is None:
        raise DiagramError('projectors need a pure X- or Z-type operator')
    hub_phase = (outcome + (1 if operator.sign < 0 else 0)) % 2
    wire_kind = 'Z' if kind == 'Z' else 'X'
    diagram = ZxDiagram()
    hub = diagram.add_spider(_other(wire_kind), hub_phase)
    support = set(operator.support)
    for q in range(1, operator.n + 1):
        if q in support:
            node = diagram.add_spider(wire_kind)
            diagram.add_edge(node, hub)
            diagram.add_input(node)
            diagram.add_output(node)
        else:
            diagram.add_wire()
    return diagram


# rules

Rule = namedtuple('Rule', ['name', 'matcher', 'rewriter', 'description'])

RULES = {}


def add_rule(name, matcher, rewriter, description=''):
    """adds a rewrite rule to the already known rules"""
    RULES[name] = Rule(name, matcher, rewriter, description)


def _spider(d, node):
    if node not in d.graph or d.is_boundary(node):
        raise RewriteError('%r is not a spider' % (node,))
    return node


def _no_loops(d, *nodes):
    for node in nodes:
        if d.loops(node):
            raise RewriteError('spider %r carries a self-loop' % node)


def match_fuse(d):
    sites = set()
    for a, b in d.graph.edges():
        if a != b and not d.is_boundary(a) and not d.is_boundary(b) \
                and d.kind(a) == d.kind(b):
            sites.add((min(a, b), max(a, b)))
    return sorted(sites)


def fuse(d, site):
    "merges two connected spiders of one kind, adding their phases"
    u, v = (_spider(d, s) for s in site)
    if u == v or d.kind(u) != d.kind(v) or not d.edge_count(u, v):
        raise RewriteError('fuse needs two connected spiders of one kind')
    d.set_phase(u, d.phase(u) + d.phase(v))
    d.graph.remove_edge(u, v)
    for _, w in list(d.graph.edges(v)):
        # remaining u-v edges and loops on v become loops on u
        d.graph.add_edge(u, u if w in (u, v) else w)
    d.graph.remove_node(v)


def match_unfuse(d):
    sites = []
    for v in d.spiders():
        legs = d.legs(v)
        for cut in range(len(legs) + 1):
            sites.append((v, tuple(legs[:cut])))
    return sites


def unfuse(d, site):
    """splits a spider; the listed neighbors move to a new phase-free
    spider joined to the old one by a single edge"""
    v, moved = site
    _spider(d, v)
    if v in moved:
        raise RewriteError('self-loops cannot be moved by unfuse')
    for w in set(moved):
        if d.edge_count(v, w) < list(moved).count(w):
            raise RewriteError('spider %r has too few edges to %r' % (v, w))
    new = d.add_spider(d.kind(v))
    for w in moved:
        d.graph.remove_edge(v, w)
        d.graph.add_edge(new, w)
    d.graph.add_edge(v, new)
    return new


def match_remove_identity(d):
    return [v for v in d.spiders()
            if d.phase(v) == 0 and d.degree(v) == 2 and not d.loops(v)]


def remove_identity(d, site):
    "drops a phase-free spider with two legs"
    v = _spider(d, site)
    if d.phase(v) or d.degree(v) != 2 or d.loops(v):
        raise RewriteError('%r is not an identity spider' % (v,))
    a, b = d.legs(v)
    d.graph.remove_node(v)
    d.graph.add_edge(a, b)


def match_insert_identity(d):
    pairs = sorted({(min(a, b), max(a, b)) for a, b in d.graph.edges()})
    return [(a, b, kind) for a, b in pairs for kind in SPIDER_KINDS]


def insert_identity(d, site):
    "places a phase-free two-legged spider on an edge"
    a, b, kind = site
    if not d.edge_count(a, b):
        raise RewriteError('no edge between %r and %r' % (a, b))
    if kind not in SPIDER_KINDS:
        raise RewriteError('unknown spider kind %r' % (kind,))
    d.graph.remove_edge(a, b)
    node = d.add_spider(kind)
    d.graph.add_edge(a, node)
    d.graph.add_edge(node, b)
    return node


def _opposite_pair(d, u, v):
    _spider(d, u), _spider(d, v)
    if d.kind(u) == d.kind(v):
        raise RewriteError('%r and %r have the same kind' % (u, v))


def match_bialgebra(d):
    sites = []
    for u, v in match_fuse_opposite(d):
        if d.phase(u) == 0 and d.phase(v) == 0 \
                and d.edge_count(u, v) == 1 \
                and not d.loops(u) and not d.loops(v):
            sites.append((u, v))
    return sites


def match_fuse_opposite(d):
    sites = set()
    for a, b in d.graph.edges():
        if a != b and not d.is_boundary(a) and not d.is_boundary(b) \
                and d.kind(a) != d.kind(b):
            sites.add((min(a, b), max(a, b)))
    return sorted(sites)


def bialgebra(d, site):
    """strong complementarity: two phase-free spiders of opposite kind
    joined by one edge become a complete bipartite graph"""
    u, v = site
    _opposite_pair(d, u, v)
    if d.phase(u) or d.phase(v) or d.edge_count(u, v) != 1:
        raise RewriteError('bialgebra needs phase-free spiders joined by '
                           'a single edge')
    _no_loops(d, u, v)
    legs_u = [w for w in d.legs(u) if w != v]
    legs_v = [w for w in d.legs(v) if w != u]
    kind_u, kind_v = d.kind(u), d.kind(v)
    d.graph.remove_node(u)
    d.graph.remove_node(v)
    near_u = []
    for w in legs_u:
        node = d.add_spider(kind_v)
        d.graph.add_edge(node, w)
        near_u.append(node)
    for w in legs_v:
        node = d.add_spider(kind_u)
        d.graph.add_edge(node, w)
        for other in near_u:
            d.graph.add_edge(node, other)


def match_pi_copy(d):
    sites = []
    for p in d.spiders():
        if d.phase(p) != 1 or d.degree(p) != 2 or d.loops(p):
            continue
        for v in set(d.legs(p)):
            if not d.is_boundary(v) and d.kind(v) != d.kind(p) \
                    and d.edge_count(p, v) == 1 and not d.loops(v):
                sites.append((p, v))
    return sorted(sites)


def pi_copy(d, site):
    """pushes a two-legged pi spider through a spider of the other kind,
    leaving a copy on each of its remaining legs"""
    p, v = site
    _opposite_pair(d, p, v)
    if d.phase(p) != 1 or d.degree(p) != 2 or d.edge_count(p, v) != 1:
        raise RewriteError('%r is not a pi spider next to %r' % (p, v))
    _no_loops(d, p, v)
    (before,) = [w for w in d.legs(p) if w != v]
    legs = [w for w in d.legs(v) if w != p]
    kind = d.kind(p)
    d.graph.remove_node(p)
    d.set_phase(v, -d.phase(v))
    for w in legs:
        d.graph.remove_edge(v, w)
        node = d.add_spider(kind, 1)
        d.graph.add_edge(v, node)
        d.graph.add_edge(node, w)
    d.graph.add_edge(before, v)


def match_state_copy(d):
    sites = []
    for s in d.spiders():
        if d.degree(s) != 1 or d.loops(s):
            continue
        (v,) = d.legs(s)
        if not d.is_boundary(v) and d.kind(v) != d.kind(s) \
                and not d.loops(v):
            sites.append((s, v))
    return sites


def state_copy(d, site):
    """copies a one-legged Pauli state through a spider of the other kind"""
    s, v = site
    _opposite_pair(d, s, v)
    if d.degree(s) != 1 or d.edge_count(s, v) != 1:
        raise RewriteError('%r is not a state plugged into %r' % (s, v))
    _no_loops(d, v)
    legs = [w for w in d.legs(v) if w != s]
    kind, phase = d.kind(s), d.phase(s)
    d.graph.remove_node(s)
    d.graph.remove_node(v)
    for w in legs:
        node = d.add_spider(kind, phase)
        d.graph.add_edge(node, w)


def match_hopf(d):
    return [(u, v) for u, v in match_fuse_opposite(d)
            if d.edge_count(u, v) >= 2]


def hopf(d, site):
    "removes a pair of parallel edges between spiders of opposite kind"
    u, v = site
    _opposite_pair(d, u, v)
    if d.edge_count(u, v) < 2:
        raise RewriteError('hopf needs two parallel edges')
    d.graph.remove_edge(u, v)
    d.graph.remove_edge(u, v)


def match_remove_self_loop(d):
    return [v for v in d.spiders() if d.loops(v)]


def remove_self_loop(d, site):
    v = _spider(d, site)
    if not d.loops(v):
        raise RewriteError('spider %r has no self-loop' % (v,))
    d.graph.remove_edge(v, v)


add_rule('fuse', match_fuse, fuse, 'spider fusion')
add_rule('unfuse', match_unfuse, unfuse, 'spider unfusion')
add_rule('remove_identity', match_remove_identity, remove_identity,
         'identity removal')
add_rule('insert_identity', match_insert_identity, insert_identity,
         'identity insertion')
add_rule('bialgebra', match_bialgebra, bialgebra, 'strong complementarity')
add_rule('pi_copy', match_pi_copy, pi_copy, 'pi copy')
add_rule('state_copy', match_state_copy, state_copy, 'state copy')
add_rule('hopf', match_hopf, hopf, 'Hopf law')
add_rule('remove_self_loop', match_remove_self_loop, remove_self_loop,
         'self-loop removal')


def _freeze(site):
    if isinstance(site, (list, tuple)):
        return tuple(_freeze(s) for s in site)
    return site


def apply_rule(diagram: ZxDiagram, rule: str, site, checked: bool = False,
               tol: Optional[float] = None) -> ZxDiagram:
    """Returns a new diagram with rule applied at site.

    With ``checked`` both sides are evaluated densely and must agree up to
    a non-zero scalar.
    """
    try:
        definition = RULES[rule]
    except KeyError:
        raise RewriteError('unknown rule %r' % (rule,))
    site = _freeze(site)
    result = diagram.copy()
    definition.rewriter(result, site)
    step = RewriteStep(rule, site, diagram.digest(), result.digest())
    result.trace = diagram.trace + (step,)
    logger.debug('applied %s at %r', rule, site)
    if checked:
        from zxcss import sem
        tol = sem.DEFAULT_TOL if tol is None else tol
        if not sem.equal_up_to_scalar(sem.evaluate(result).matrix,
                                      sem.evaluate(diagram).matrix, tol):
            raise RewriteError('%s at %r changed the linear map'
                               % (rule, site))
    return result


def replay(initial: ZxDiagram, steps: Iterable[RewriteStep]) -> ZxDiagram:
    "re-applies a trace, checking every recorded digest"
    diagram = initial
    for number, step in enumerate(steps, 1):
        if diagram.digest() != step.before:
            raise RewriteError('step %d does not start from the recorded '
                               'diagram' % number)
        diagram = apply_rule(diagram, step.rule, step.site)
        if diagram.digest() != step.after:
            raise RewriteError('step %d does not reproduce the recorded '
                               'diagram' % number)
    return diagram


# random instances for soundness checks

def random_diagram(rng, max_spiders=6, max_ports=3) -> ZxDiagram:
    """A small random diagram with loops, parallel edges, states and
    two-legged spiders sprinkled in."""
    d = ZxDiagram()
    nodes = [d.add_spider(rng.choice(SPIDER_KINDS), rng.randint(0, 1))
             for _ in range(rng.randint(2, max_spiders))]
    for i in range(1, len(nodes)):
        d.graph.add_edge(nodes[i], rng.choice(nodes[:i]))
    for _ in range(rng.randint(0, len(nodes))):
        d.graph.add_edge(rng.choice(nodes), rng.choice(nodes))
    for _ in range(rng.randint(0, 2)):
        leaf = d.add_spider(rng.choice(SPIDER_KINDS), rng.randint(0, 1))
        d.graph.add_edge(leaf, rng.choice(nodes))
    for _ in range(rng.randint(0, 2)):
        a, b = rng.choice(nodes), rng.choice(nodes)
        middle = d.add_spider(rng.choice(SPIDER_KINDS), rng.randint(0, 1))
        d.graph.add_edge(a, middle)
        d.graph.add_edge(middle, b)
    for _ in range(rng.randint(0, max_ports)):
        d.add_input(rng.choice(nodes))
    for _ in range(rng.randint(0, max_ports)):
        d.add_output(rng.choice(nodes))
    return d


def random_match(rule: str, rng, attempts: int = 1000):
    "draws random diagrams until rule matches; returns (diagram, site)"
    matcher = RULES[rule].matcher
    for _ in range(attempts):
        diagram = random_diagram(rng)
        sites = matcher(diagram)
        if sites:
            return diagram, rng.choice(sites)
    raise RewriteError('no random site found for %s' % rule)


def check_rule(rule: str, samples: int, rng, tol: Optional[float] = None):
    """Applies rule at random sites with dense checking.

    Returns the list of ``(diagram, site)`` pairs that failed.
    """
    failures = []
    for _ in range(samples):
        diagram, site = random_match(rule, rng)
        try:
            apply_rule(diagram, rule, site, checked=True, tol=tol)
        except RewriteError:
            failures.append((diagram, site))
    logger.info('%s: %d/%d sites sound', rule, samples - len(failures),
                samples)
    return failures
