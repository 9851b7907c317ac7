"""Scalar departure measures and signed cell-contribution arrays.

The skewness of a square table splits into two orthogonal pieces::

    skewness = quasi_skewness + heterogeneity

where the quasi-skewness is the squared Aitchison norm of the skew-symmetric
interaction part and the heterogeneity that of the skew-symmetric independent
part. :func:`measure_report` computes all of them from a single decomposition.
"""
from dataclasses import dataclass

import numpy as np

from .core import aitchison_norm_sq, as_table, clr, require_square
from .decomposition import (four_part, interaction_part, skew_part, skind_part,
                            skint_part)

DEGENERATE_TOL = 1e-14
IDENTITY_TOL = 1e-10

KINDS = ("skewness", "quasi_skewness", "heterogeneity")


def simplicial_deviance(P):
    """Squared Aitchison norm of the interaction part (rectangular tables allowed)."""
    return aitchison_norm_sq(interaction_part(as_table(P)))


def simplicial_skewness(P):
    return aitchison_norm_sq(skew_part(P))


def simplicial_quasi_skewness(P):
    return aitchison_norm_sq(skint_part(P))


def geometric_marginal_heterogeneity(P):
    return aitchison_norm_sq(skind_part(P))


@dataclass(frozen=True)
class MeasureReport:
    """Norms and departure measures of one square table.

    Squared norms carry the ``_sq`` suffix; ``E2``, ``Q2`` and ``M2`` are
    squared norms as well.
    """

    norm_source: float
    norm_source_sq: float
    norm_sym: float
    norm_sym_sq: float
    deviance: float
    E2: float
    Q2: float
    M2: float

    def as_dict(self):
        return {
            "norm_source": self.norm_source,
            "norm_source_sq": self.norm_source_sq,
            "norm_sym": self.norm_sym,
            "norm_sym_sq": self.norm_sym_sq,
            "deviance": self.deviance,
            "E2": self.E2,
            "Q2": self.Q2,
            "M2": self.M2,
        }


def measure_report(P, bundle=None):
    """Compute every scalar measure of a square table.

    Parameters
    ----------
    P : array_like
        Square probability table.
    bundle : DecompositionBundle, optional
        Precomputed four-part decomposition of ``P``.

    Returns
    -------
    MeasureReport
    """
    P = require_square(P)
    if bundle is None:
        bundle = four_part(P)
    src_sq = aitchison_norm_sq(P)
    sym_sq = aitchison_norm_sq(bundle.sym)
    E2 = aitchison_norm_sq(bundle.skew)
    Q2 = aitchison_norm_sq(bundle.skint)
    M2 = aitchison_norm_sq(bundle.skind)
    assert abs(E2 - Q2 - M2) <= IDENTITY_TOL * max(1.0, E2), (E2, Q2, M2)
    return MeasureReport(
        norm_source=float(np.sqrt(src_sq)),
        norm_source_sq=src_sq,
        norm_sym=float(np.sqrt(sym_sq)),
        norm_sym_sq=sym_sq,
        deviance=aitchison_norm_sq(bundle.int),
        E2=E2, Q2=Q2, M2=M2,
    )


@dataclass(frozen=True)
class ContributionArray:
    """Signed per-cell fractions of a skewness-type measure.

    ``values[i, j]`` is ``sign(c) * c**2 / measure`` with ``c`` the clr
    coordinate of the cell in the corresponding skew table. When the measure
    is below ``DEGENERATE_TOL`` the array is all zero and ``degenerate`` is
    set.
    """

    kind: str
    values: np.ndarray
    measure: float
    degenerate: bool

    @property
    def percent(self):
        return 100.0 * self.values


_SKEW_TABLE = {
    "skewness": lambda b: b.skew,
    "quasi_skewness": lambda b: b.skint,
    "heterogeneity": lambda b: b.skind,
}


def contribution_array(P, kind, bundle=None):
    """Cell contributions to skewness, quasi-skewness or heterogeneity.

    Parameters
    ----------
    P : array_like
        Square probability table.
    kind : {'skewness', 'quasi_skewness', 'heterogeneity'}
    bundle : DecompositionBundle, optional
        Precomputed decomposition of ``P``.
    """
    if kind not in _SKEW_TABLE:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    P = require_square(P)
    if bundle is None:
        bundle = four_part(P)
    c = clr(_SKEW_TABLE[kind](bundle))
    # IEEE subtraction is exactly antisymmetric, so values[i,j] == -values[j,i]
    c = 0.5 * (c - c.T)
    measure = float(np.sum(c ** 2))
    if measure < DEGENERATE_TOL:
        values = np.zeros_like(c)
        degenerate = True
    else:
        values = np.sign(c) * c ** 2 / measure
        degenerate = False
    values.flags.writeable = False
    return ContributionArray(kind=kind, values=values, measure=measure,
                             degenerate=degenerate)
