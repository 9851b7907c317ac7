"""Orthogonal projections of probability tables.

Every projection here has two implementations. The primary one composes the
vector-space operations of :mod:`simplicial_tables.core` (perturbation,
powering, transposition). The ``*_cells`` variants evaluate the explicit
per-cell formulas from geometric means and are kept as an independent check;
the test suite asserts that both agree.

Rectangular tables are accepted by the row/column/independent/interaction
projections. Everything built on transposition needs a square table and
raises :class:`~simplicial_tables.errors.NotSquare` otherwise.
"""
from dataclasses import dataclass

import numpy as np

from .core import (as_table, closure, col_geomeans, ominus, perturb, power,
                   require_square, row_geomeans, transpose)


def _frozen(arr):
    arr = np.array(arr, dtype=float)
    arr.flags.writeable = False
    return arr


def row_projection(P):
    """Table whose row ``i`` is constant at the geometric mean of row ``i``."""
    P = as_table(P)
    g = row_geomeans(P)
    return closure(np.repeat(g[:, None], P.shape[1], axis=1))


def col_projection(P):
    """Table whose column ``j`` is constant at the geometric mean of column ``j``."""
    P = as_table(P)
    g = col_geomeans(P)
    return closure(np.repeat(g[None, :], P.shape[0], axis=0))


def independent_part(P):
    """Closest independence table, ``row(P) (+) col(P)``."""
    return perturb(row_projection(P), col_projection(P))


def interaction_part(P):
    """Remainder ``P (-) independent_part(P)``; its geometric margins are uniform."""
    P = as_table(P)
    return ominus(P, independent_part(P))


def symmetric_part(P):
    """Closest symmetric table, ``0.5 * (P (+) T(P))``."""
    P = require_square(P)
    return power(0.5, perturb(P, transpose(P)))


def skew_part(P):
    """Skew-symmetric remainder with cells proportional to ``sqrt(p_ij / p_ji)``."""
    P = require_square(P)
    return power(0.5, ominus(P, transpose(P)))


def qs_projection(P):
    """Closest quasi-symmetric table in Aitchison distance.

    Keeps the independent part and symmetrises the interaction part,
    ``ind (+) 0.5 * (int (+) T(int))``. Geometric margins are unchanged.
    """
    P = require_square(P)
    inter = interaction_part(P)
    return perturb(independent_part(P),
                   power(0.5, perturb(inter, transpose(inter))))


def skint_part(P):
    """Skew-symmetric interaction part, ``P (-) qs_projection(P)``."""
    P = require_square(P)
    return ominus(P, qs_projection(P))


def gmh_projection(P):
    """Closest table with equal row and column geometric margins.

    Symmetrises the independent part and keeps the interaction part,
    ``0.5 * (ind (+) T(ind)) (+) int``.
    """
    P = require_square(P)
    ind = independent_part(P)
    return perturb(power(0.5, perturb(ind, transpose(ind))),
                   interaction_part(P))


def skind_part(P):
    """Skew-symmetric independent part, ``P (-) gmh_projection(P)``."""
    P = require_square(P)
    return ominus(P, gmh_projection(P))


@dataclass(frozen=True)
class DecompositionBundle:
    """The four mutually orthogonal parts of a square table.

    ``syind (+) skind (+) syint (+) skint`` reproduces ``source``. The
    composite parts are formed on access.
    """

    source: np.ndarray
    syind: np.ndarray
    skind: np.ndarray
    syint: np.ndarray
    skint: np.ndarray

    @property
    def ind(self):
        return perturb(self.syind, self.skind)

    @property
    def int(self):
        return perturb(self.syint, self.skint)

    @property
    def sym(self):
        return perturb(self.syind, self.syint)

    @property
    def skew(self):
        return perturb(self.skind, self.skint)

    @property
    def qs(self):
        return perturb(self.ind, self.syint)

    @property
    def gmh(self):
        return perturb(self.syind, self.int)

    def reconstruct(self):
        return perturb(perturb(self.syind, self.skind),
                       perturb(self.syint, self.skint))

    def parts(self):
        """All ten derived tables keyed by name."""
        return {
            "ind": self.ind, "int": self.int,
            "sym": self.sym, "skew": self.skew,
            "syind": self.syind, "skind": self.skind,
            "syint": self.syint, "skint": self.skint,
            "QS": self.qs, "GMH": self.gmh,
        }


def four_part(P):
    """Split a square table into its syind, skind, syint and skint parts."""
    P = require_square(P)
    ind = independent_part(P)
    inter = interaction_part(P)
    return DecompositionBundle(
        source=_frozen(P),
        syind=_frozen(symmetric_part(ind)),
        skind=_frozen(skew_part(ind)),
        syint=_frozen(symmetric_part(inter)),
        skint=_frozen(skew_part(inter)),
    )


def local_odds_ratios(P):
    r"""Local odds ratios of adjacent 2x2 subtables.

    Returns an ``(I-1, J-1)`` array with entries
    :math:`p_{ij} p_{i+1,j+1} / (p_{i,j+1} p_{i+1,j})`.
    """
    L = np.log(as_table(P))
    return np.exp(L[:-1, :-1] + L[1:, 1:] - L[:-1, 1:] - L[1:, :-1])


def is_quasi_symmetric(P, tol=1e-9):
    """True iff every log local odds ratio equals its transposed partner within `tol`."""
    P = require_square(P)
    log_theta = np.log(local_odds_ratios(P))
    if log_theta.size == 0:
        return True
    return bool(np.max(np.abs(log_theta - log_theta.T)) <= tol)


# Explicit cell formulas. Proportionality constants are resolved by closure.

def _log_geomeans(P):
    L = np.log(P)
    return L, L.mean(axis=1), L.mean(axis=0)


def independent_cells(P):
    P = as_table(P)
    L, r, c = _log_geomeans(P)
    return closure(np.exp(r[:, None] + c[None, :]))


def interaction_cells(P):
    P = as_table(P)
    L, r, c = _log_geomeans(P)
    return closure(np.exp(L - r[:, None] - c[None, :]))


def symmetric_cells(P):
    P = require_square(P)
    return closure(np.sqrt(P * P.T))


def skew_cells(P):
    P = require_square(P)
    return closure(np.sqrt(P / P.T))


def _margin_ratio(P):
    # log of g(row_i) g(col_j) / (g(row_j) g(col_i))
    L, r, c = _log_geomeans(P)
    return L, r[:, None] + c[None, :] - r[None, :] - c[:, None]


def qs_cells(P):
    P = require_square(P)
    L, m = _margin_ratio(P)
    return closure(np.exp(0.5 * (L + L.T + m)))


def skint_cells(P):
    P = require_square(P)
    L, m = _margin_ratio(P)
    return closure(np.exp(0.5 * (L - L.T - m)))


def gmh_cells(P):
    P = require_square(P)
    L, m = _margin_ratio(P)
    return closure(np.exp(L - 0.5 * m))


def skind_cells(P):
    P = require_square(P)
    L, m = _margin_ratio(P)
    return closure(np.exp(0.5 * m))
