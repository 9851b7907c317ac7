r"""Aitchison geometry on the simplex of probability tables.

A probability table is a strictly positive array whose entries sum to one.
Under perturbation (:func:`perturb`) and powering (:func:`power`) the set of
such tables is a real vector space, and the centred log-ratio transform
(:func:`clr`) maps it isometrically onto the zero-sum hyperplane.

All functions take and return plain :class:`numpy.ndarray` objects and never
mutate their inputs. The generic operations accept arrays of any shape; the
helpers :func:`as_table` and :func:`require_square` enforce the two-way table
contracts used by the decomposition routines.

Examples
--------
>>> import numpy as np
>>> from simplicial_tables.core import closure, perturb, clr
>>> closure([1, 1, 2])
array([0.25, 0.25, 0.5 ])
>>> perturb([0.5, 0.5], [0.8, 0.2])
array([0.8, 0.2])
"""
import numpy as np

from .errors import DimMismatch, LambdaOutOfRange, NonPositiveEntry, NotSquare

SUM_TOL = 1e-12
CLR_SUM_TOL = 1e-9


def _positive(raw):
    arr = np.asarray(raw, dtype=float)
    if arr.size == 0:
        raise NonPositiveEntry("table is empty")
    if not np.all(np.isfinite(arr)):
        raise NonPositiveEntry("table contains NaN or infinite entries")
    if np.any(arr <= 0):
        raise NonPositiveEntry(
            "table contains zero or negative entries; apply a smoothing "
            "policy (e.g. a pseudocount) before closure")
    return arr


def closure(raw):
    """Scale a strictly positive array so that its entries sum to one.

    Parameters
    ----------
    raw : array_like
        Strictly positive, finite values of any shape.

    Returns
    -------
    numpy.ndarray
        ``raw / raw.sum()``.

    Raises
    ------
    NonPositiveEntry
        If any entry is zero, negative, NaN or infinite.
    """
    arr = _positive(raw)
    return arr / arr.sum()


def as_table(P):
    """Validate a two-way probability table and return its closure.

    The table must be two-dimensional with at least two rows and two columns.
    """
    arr = np.asarray(P, dtype=float)
    if arr.ndim != 2:
        raise DimMismatch(f"expected a two-way table, got shape {arr.shape}")
    if arr.shape[0] < 2 or arr.shape[1] < 2:
        raise DimMismatch(
            f"tables need at least 2 rows and 2 columns, got {arr.shape}")
    out = closure(arr)
    assert abs(out.sum() - 1.0) <= SUM_TOL
    return out


def require_square(P):
    """`as_table` plus the check that rows and columns have equal count."""
    out = as_table(P)
    if out.shape[0] != out.shape[1]:
        raise NotSquare(f"operation requires a square table, got {out.shape}")
    return out


def _same_shape(P, Q):
    P = np.asarray(P, dtype=float)
    Q = np.asarray(Q, dtype=float)
    if P.shape != Q.shape:
        raise DimMismatch(f"shape mismatch: {P.shape} vs {Q.shape}")
    return P, Q


def uniform(shape):
    """The neutral element: every entry equal to ``1 / size``."""
    out = np.ones(shape, dtype=float)
    return out / out.size


def perturb(P, Q):
    """Aitchison addition, ``closure(P * Q)``."""
    P, Q = _same_shape(P, Q)
    # log space keeps products of many small cells away from underflow
    return clr_inverse(clr(P) + clr(Q))


def power(alpha, P):
    """Aitchison scalar multiplication, ``closure(P ** alpha)``."""
    alpha = float(alpha)
    if not np.isfinite(alpha):
        raise ValueError("alpha must be finite")
    return clr_inverse(alpha * clr(P))


def ominus(P, Q):
    """Perturbation difference, ``perturb(P, power(-1, Q))``."""
    P, Q = _same_shape(P, Q)
    return clr_inverse(clr(P) - clr(Q))


def transpose(P):
    """Matrix transpose of a square table."""
    P = np.asarray(P, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise NotSquare(f"transpose requires a square table, got {P.shape}")
    return P.T.copy()


def geometric_mean(P):
    """Geometric mean of all entries, computed as ``exp(mean(log P))``."""
    return float(np.exp(np.mean(np.log(_positive(P)))))


def row_geomeans(P):
    """Geometric mean of each row of a two-way table."""
    return np.exp(np.mean(np.log(_positive(P)), axis=1))


def col_geomeans(P):
    """Geometric mean of each column of a two-way table."""
    return np.exp(np.mean(np.log(_positive(P)), axis=0))


def geometric_margins(P):
    """Closed row and column geometric means.

    Returns
    -------
    rows, cols : numpy.ndarray
        ``closure(row_geomeans(P))`` and ``closure(col_geomeans(P))``.
    """
    return closure(row_geomeans(P)), closure(col_geomeans(P))


def clr(P):
    r"""Centred log-ratio transform, :math:`\log(p_{ij} / g(P))`.

    The result has the shape of ``P`` and sums to zero.
    """
    logs = np.log(_positive(P))
    return logs - logs.mean()


def clr_inverse(C):
    """Map a clr array back to the simplex.

    Input that does not sum to zero is centred first; closure would absorb
    the constant anyway, so this is the only consistent completion.
    """
    C = np.asarray(C, dtype=float)
    if not np.all(np.isfinite(C)):
        raise NonPositiveEntry("clr values must be finite")
    C = C - C.mean()
    # shift by the max before exponentiating to avoid overflow
    E = np.exp(C - C.max())
    return E / E.sum()


def is_clr(C, tol=CLR_SUM_TOL):
    """True if ``C`` sums to zero within ``tol`` scaled by its size."""
    C = np.asarray(C, dtype=float)
    return bool(abs(C.sum()) <= tol * max(1, C.size))


def aitchison_inner(P, Q):
    """Euclidean inner product of the clr images."""
    P, Q = _same_shape(P, Q)
    return float(np.sum(clr(P) * clr(Q)))


def aitchison_norm(P):
    return float(np.sqrt(np.sum(clr(P) ** 2)))


def aitchison_norm_sq(P):
    return float(np.sum(clr(P) ** 2))


def aitchison_distance(P, Q):
    P, Q = _same_shape(P, Q)
    return float(np.sqrt(np.sum((clr(P) - clr(Q)) ** 2)))


def e_geodesic(P, Q, lam):
    """Point ``(1 - lam) * P (+) lam * Q`` on the straight clr line.

    Parameters
    ----------
    P, Q : array_like
        Tables of equal shape.
    lam : float
        Position along the path, in ``[0, 1]``.
    """
    P, Q = _same_shape(P, Q)
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise LambdaOutOfRange(f"lambda must lie in [0, 1], got {lam}")
    return clr_inverse((1.0 - lam) * clr(P) + lam * clr(Q))
