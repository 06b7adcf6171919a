# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
"""CSS and subsystem CSS codes.

Codes hold their generators as :class:`~zxcss.f2.BinaryMatrix` rows over the
``n`` physical qubits: ``G`` (X-type stabilizers), ``H`` (Z-type
stabilizers), ``Lx``/``Lz`` (logical representatives, paired so that
``Lx @ Lz.T`` is the identity).  Qubits are numbered from 1 in everything
user facing.
"""
from __future__ import annotations

import logging
import warnings
from typing import Iterable, Optional, Tuple

import numpy as np

from zxcss.f2 import BinaryMatrix, kernel, rank, rref
from zxcss.pauli import from_support

__all__ = ['CodeError', 'BudgetExceeded', 'CssCode', 'SubsystemCssCode',
           'new_css', 'new_subsystem', 'compute_logicals', 'distance',
           'distances', 'stabilizers_supported_on', 'css_parameters',
           'trivial_code', 'DISTANCE_BUDGET']

logger = logging.getLogger(__name__)

#: upper bound on the codewords enumerated by :func:`distances`
DISTANCE_BUDGET = 2 ** 26
_CHUNK = 1 << 15


class CodeError(ValueError):
    "Raised when generators do not describe a valid code"


class BudgetExceeded(RuntimeError):
    "Raised when an exhaustive computation would exceed its budget"


def _matrix(data, n):
    if isinstance(data, BinaryMatrix):
        if data.cols != n:
            raise CodeError('expected %d columns, got %d' % (n, data.cols))
        return data
    return BinaryMatrix(data if len(data) else np.zeros((0, n)), cols=n)


def _extend_basis(base, candidates):
    """Returns the rows of candidates that grow the span of base, in order,
    and the number of rows skipped."""
    chosen = []
    current = base
    current_rank = rank(base)
    for i in range(candidates.rows):
        trial = current.vstack(candidates.select_rows([i]))
        trial_rank = rank(trial)
        if trial_rank > current_rank:
            chosen.append(i)
            current, current_rank = trial, trial_rank
    return candidates.select_rows(chosen), candidates.rows - len(chosen)


def _independent(matrix, label):
    empty = BinaryMatrix.zeros(0, matrix.cols)
    rows, dropped = _extend_basis(empty, matrix)
    if dropped:
        warnings.warn('dropping %d redundant %s row(s)' % (dropped, label))
    return rows


def _pair(Lx, Lz, what='logical'):
    """Rewrites Lz so that ``Lx @ Lz.T`` is the identity."""
    if Lx.rows != Lz.rows:
        raise CodeError('cannot pair %d X with %d Z %s rows'
                        % (Lx.rows, Lz.rows, what))
    pairing = Lx @ Lz.T
    if pairing == BinaryMatrix.identity(Lx.rows):
        return Lz
    reduced, transform, r = rref(pairing)
    if r < pairing.rows:
        raise CodeError('%s operators cannot be paired' % what)
    # reduced is the identity, so transform is the inverse of pairing
    return transform.T @ Lz


def compute_logicals(G: BinaryMatrix, H: BinaryMatrix):
    """Canonical logical representatives of the CSS code (G, H).

    X logicals complete the row space of G inside ``ker H``, Z logicals
    complete the row space of H inside ``ker G``; the Z side is then
    re-paired against the X side.
    """
    Lx, _ = _extend_basis(G, kernel(H))
    Lz, _ = _extend_basis(H, kernel(G))
    if Lx.rows != Lz.rows:
        raise CodeError('logical counts disagree (%d X, %d Z)'
                        % (Lx.rows, Lz.rows))
    return Lx, _pair(Lx, Lz)


def _check_logicals(Lx, Lz, stab_x, stab_z, k, label='logical'):
    if Lx.rows != k or Lz.rows != k:
        raise CodeError('expected %d %s pair(s), got %d X and %d Z'
                        % (k, label, Lx.rows, Lz.rows))
    if not (stab_z @ Lx.T).is_zero():
        raise CodeError('X %s rows do not commute with Z generators' % label)
    if not (stab_x @ Lz.T).is_zero():
        raise CodeError('Z %s rows do not commute with X generators' % label)
    if rank(stab_x.vstack(Lx)) != rank(stab_x) + k:
        raise CodeError('X %s rows are not independent of the X generators'
                        % label)
    if rank(stab_z.vstack(Lz)) != rank(stab_z) + k:
        raise CodeError('Z %s rows are not independent of the Z generators'
                        % label)
    if not (Lx @ Lz.T) == BinaryMatrix.identity(k):
        warnings.warn('re-pairing the supplied Z %s rows' % label)
        Lz = _pair(Lx, Lz, label)
    return Lz


class CssCode:
    """A CSS stabilizer code.

    Build instances with :func:`new_css`, which validates and canonicalizes
    the generators.
    """

    def __init__(self, n, G, H, Lx, Lz, name=None):
        self.n = n
        self.G = G
        self.H = H
        self.Lx = Lx
        self.Lz = Lz
        self.name = name

    @property
    def k(self):
        return self.Lx.rows

    @property
    def m_x(self):
        return self.G.rows

    @property
    def m_z(self):
        return self.H.rows

    def logical(self, kind, i):
        "the 1-based i-th logical X or Z operator"
        rows = self.Lx if kind == 'X' else self.Lz
        if not 1 <= i <= self.k:
            raise IndexError('logical index %d out of range 1..%d'
                             % (i, self.k))
        return from_support(kind, [q + 1 for q in rows.support(i - 1)],
                            self.n)

    def stabilizers(self):
        "the generators as Pauli operators, X type first"
        result = []
        for kind, rows in (('X', self.G), ('Z', self.H)):
            for i in range(rows.rows):
                result.append(from_support(
                    kind, [q + 1 for q in rows.support(i)], self.n))
        return result

    def __repr__(self):
        return '<CssCode %s %s>' % (self.name or '', css_parameters(self,
                                                                  False))


class SubsystemCssCode:
    """A CSS subsystem code.

    ``Sx``/``Sz`` generate the stabilizer group, ``Gx``/``Gz`` are the gauge
    pairs (``Gx @ Gz.T`` is the identity) and ``Lx``/``Lz`` are bare logical
    representatives commuting with every gauge operator.
    """

    def __init__(self, n, Sx, Sz, Gx, Gz, Lx, Lz, name=None):
        self.n = n
        self.Sx = Sx
        self.Sz = Sz
        self.Gx = Gx
        self.Gz = Gz
        self.Lx = Lx
        self.Lz = Lz
        self.name = name

    @property
    def k(self):
        return self.Lx.rows

    @property
    def r(self):
        return self.Gx.rows

    @property
    def m_x(self):
        return self.Sx.rows

    @property
    def m_z(self):
        return self.Sz.rows

    def gauge_operator(self, kind, i):
        "the 1-based i-th gauge operator of the given type"
        rows = self.Gx if kind == 'X' else self.Gz
        if not 1 <= i <= self.r:
            raise IndexError('gauge index %d out of range 1..%d'
                             % (i, self.r))
        return from_support(kind, [q + 1 for q in rows.support(i - 1)],
                            self.n)

    def fix(self, basis):
        """The stabilizer code obtained by promoting the gauge operators of
        the given basis to stabilizers."""
        suffix = '%s/%s' % (self.name, basis) if self.name else None
        if basis == 'X':
            return new_css(self.n, self.Sx.vstack(self.Gx), self.Sz,
                           logicals=(self.Lx, self.Lz), name=suffix)
        elif basis == 'Z':
            return new_css(self.n, self.Sx, self.Sz.vstack(self.Gz),
                           logicals=(self.Lx, self.Lz), name=suffix)
        raise ValueError('gauge basis must be X or Z, got %r' % (basis,))

    def as_stabilizer_code(self, name=None):
        """Treats every gauge pair as an extra logical qubit; gauge pairs
        come after the bare logicals."""
        return new_css(self.n, self.Sx, self.Sz,
                       logicals=(self.Lx.vstack(self.Gx),
                                 self.Lz.vstack(self.Gz)),
                       name=name)

    def __repr__(self):
        return '<SubsystemCssCode %s %s>' % (self.name or '',
                                             css_parameters(self, False))


def new_css(n: int, G, H, logicals: Optional[Tuple] = None,
            name: Optional[str] = None) -> CssCode:
    """Validates generators and returns a :class:`CssCode`.

    ``logicals`` is ``(Lx, Lz)``; either side may be None to have it derived
    from the other, and omitting both computes canonical representatives.
    """
    if n < 0:
        raise CodeError('negative qubit count')
    G = _independent(_matrix(G, n), 'X-stabilizer')
    H = _independent(_matrix(H, n), 'Z-stabilizer')
    if not (G @ H.T).is_zero():
        raise CodeError('X and Z stabilizers do not commute')
    k = n - G.rows - H.rows
    if k < 0:
        raise CodeError('more independent generators than qubits')
    if logicals is None:
        Lx, Lz = compute_logicals(G, H)
    else:
        Lx, Lz = logicals
        if Lx is None and Lz is None:
            raise CodeError('logicals need at least one side')
        if Lx is None:
            Lz = _matrix(Lz, n)
            Lx, _ = _extend_basis(G, kernel(H))
            Lx = _pair(Lz, Lx)
        elif Lz is None:
            Lx = _matrix(Lx, n)
            Lz, _ = _extend_basis(H, kernel(G))
            Lz = _pair(Lx, Lz)
        else:
            Lx, Lz = _matrix(Lx, n), _matrix(Lz, n)
        Lz = _check_logicals(Lx, Lz, G, H, k)
    if Lx.rows != k:
        raise CodeError('expected %d logical qubits, found %d'
                        % (k, Lx.rows))
    logger.debug('built code %s with n=%d k=%d', name, n, k)
    return CssCode(n, G, H, Lx, Lz, name=name)


def trivial_code(n: int, name: Optional[str] = None) -> CssCode:
    "the identity encoding of n qubits"
    identity = BinaryMatrix.identity(n)
    return new_css(n, BinaryMatrix.zeros(0, n), BinaryMatrix.zeros(0, n),
                   logicals=(identity, identity), name=name)


def new_subsystem(n: int, Sx, Sz, Gx, Gz,
                  logicals: Optional[Tuple] = None,
                  name: Optional[str] = None) -> SubsystemCssCode:
    """Validates a CSS subsystem code.

    The Z gauge rows are recombined so that ``Gx @ Gz.T`` is the identity;
    bare logicals are computed unless supplied.
    """
    Sx = _independent(_matrix(Sx, n), 'X-stabilizer')
    Sz = _independent(_matrix(Sz, n), 'Z-stabilizer')
    Gx, Gz = _matrix(Gx, n), _matrix(Gz, n)
    if not (Sx @ Sz.T).is_zero():
        raise CodeError('X and Z stabilizers do not commute')
    if not (Sx @ Gz.T).is_zero() or not (Gx @ Sz.T).is_zero():
        raise CodeError('gauge operators do not commute with stabilizers')
    Gx, dropped_x = _extend_basis(Sx, Gx)
    Gz, dropped_z = _extend_basis(Sz, Gz)
    if dropped_x or dropped_z:
        warnings.warn('dropping %d redundant gauge row(s)'
                      % (dropped_x + dropped_z))
    if Gx.rows != Gz.rows:
        raise CodeError('gauge rows do not come in pairs (%d X, %d Z)'
                        % (Gx.rows, Gz.rows))
    Gz = _pair(Gx, Gz, 'gauge')
    stab_x, stab_z = Sx.vstack(Gx), Sz.vstack(Gz)
    k = n - Sx.rows - Sz.rows - Gx.rows
    if k < 0:
        raise CodeError('more independent generators than qubits')
    if logicals is None:
        Lx, _ = _extend_basis(stab_x, kernel(stab_z))
        Lz, _ = _extend_basis(stab_z, kernel(stab_x))
        Lz = _pair(Lx, Lz)
    else:
        Lx, Lz = (_matrix(m, n) for m in logicals)
        Lz = _check_logicals(Lx, Lz, stab_x, stab_z, k, 'bare logical')
    if Lx.rows != k:
        raise CodeError('expected %d logical qubits, found %d'
                        % (k, Lx.rows))
    logger.debug('built subsystem code %s with n=%d k=%d r=%d',
                 name, n, k, Gx.rows)
    return SubsystemCssCode(n, Sx, Sz, Gx, Gz, Lx, Lz, name=name)


def _min_weight(stabilizers, logicals):
    """Smallest weight of ``a Lx + u G`` over all ``a != 0``."""
    m, k = stabilizers.rows, logicals.rows
    rows = stabilizers.vstack(logicals).to_array().astype(np.int64)
    shifts = np.arange(m + k, dtype=np.int64)
    best = None
    # bit j of a coefficient selects row j; logical rows sit above bit m
    for start in range(1 << m, 1 << (m + k), _CHUNK):
        stop = min(start + _CHUNK, 1 << (m + k))
        coefficients = (np.arange(start, stop, dtype=np.int64)[:, None]
                        >> shifts) & 1
        weights = ((coefficients @ rows) % 2).sum(axis=1)
        low = int(weights.min())
        if best is None or low < best:
            best = low
    return best


def distances(code) -> Tuple[Optional[int], Optional[int]]:
    """Exhaustive X and Z distances.

    For subsystem codes these are dressed distances: gauge operators count
    as trivial.
    """
    if isinstance(code, SubsystemCssCode):
        stab_x = code.Sx.vstack(code.Gx)
        stab_z = code.Sz.vstack(code.Gz)
    else:
        stab_x, stab_z = code.G, code.H
    if code.k == 0:
        return None, None
    cost = 2 ** (stab_x.rows + code.k) + 2 ** (stab_z.rows + code.k)
    if cost > DISTANCE_BUDGET:
        raise BudgetExceeded('distance search needs %d codewords, budget '
                             'is %d' % (cost, DISTANCE_BUDGET))
    logger.info('enumerating %d codewords for the distance of %s',
                cost, code.name or 'code')
    return _min_weight(stab_x, code.Lx), _min_weight(stab_z, code.Lz)


def distance(code) -> Optional[int]:
    d_x, d_z = distances(code)
    if d_x is None:
        return None
    return min(d_x, d_z)


def css_parameters(code, with_distance=True) -> str:
    "formats [[n,k,d]], or [[n,k,r,d]] for subsystem codes"
    fields = [code.n, code.k]
    if isinstance(code, SubsystemCssCode):
        fields.append(code.r)
    if with_distance:
        d = distance(code)
        if d is not None:
            fields.append(d)
    return '[[%s]]' % ','.join(str(f) for f in fields)


def stabilizers_supported_on(code: CssCode, qubits: Iterable[int]):
    """Generators of the X- and Z-type stabilizers whose support lies inside
    the 1-based qubit set."""
    inside = {q - 1 for q in qubits}
    if any(not 0 <= q < code.n for q in inside):
        raise ValueError('qubit subset out of range 1..%d' % code.n)
    outside = [q for q in range(code.n) if q not in inside]
    result = []
    for rows in (code.G, code.H):
        if not outside:
            result.append(rows)
            continue
        combos = kernel(rows.select_columns(outside).T)
        result.append(combos @ rows if combos.rows
                      else BinaryMatrix.zeros(0, code.n))
    return tuple(result)

