"""Brute-force checks for the closed-form projections.

Nothing in this module calls the projection formulas of
:mod:`simplicial_tables.decomposition` to build its answers. Subspaces are
spanned by small integer generator tables in clr space, orthonormalised by
Gram-Schmidt, and their rank is measured rather than assumed. Projecting onto
such a basis gives a second route to every projection.
"""
from dataclasses import dataclass

import numpy as np

from . import decomposition as dec
from .core import aitchison_distance, clr, clr_inverse, require_square
from .errors import InvalidParams, UnknownKind

RANK_TOL = 1e-9

SUBSPACE_KINDS = ("ind", "int", "sym", "skew", "syind", "skind",
                  "syint", "skint", "QS", "GMH")


def expected_dimension(kind, I):
    """Dimension of a subspace of the ``I x I`` simplex."""
    dims = {
        "ind": 2 * I - 2,
        "int": (I - 1) ** 2,
        "sym": (I - 1) * (I + 2) // 2,
        "skew": I * (I - 1) // 2,
        "syind": I - 1,
        "skind": I - 1,
        "syint": I * (I - 1) // 2,
        "skint": (I - 1) * (I - 2) // 2,
        "QS": (I - 1) * (I + 4) // 2,
        "GMH": I * (I - 1),
    }
    if kind not in dims:
        raise UnknownKind(f"unknown subspace kind {kind!r}")
    return dims[kind]


def make_rng(seed):
    """Seeded generator; negative seeds are folded into the unsigned 64-bit range."""
    return np.random.default_rng(int(seed) % 2 ** 64)


def random_table(I, J, seed):
    """Closure of ``exp(Z)`` with ``Z`` an ``I x J`` standard normal draw."""
    if I < 2 or J < 2:
        raise ValueError("tables need at least 2 rows and 2 columns")
    return clr_inverse(make_rng(seed).standard_normal((I, J)))


@dataclass(frozen=True)
class QsGeneratorParams:
    """Parameters of ``p_ij ~ alpha_i * beta_j * psi_ij`` with symmetric ``psi``."""

    alpha: np.ndarray
    beta: np.ndarray
    psi: np.ndarray

    def __post_init__(self):
        alpha = np.asarray(self.alpha, dtype=float)
        beta = np.asarray(self.beta, dtype=float)
        psi = np.asarray(self.psi, dtype=float)
        I = alpha.shape[0] if alpha.ndim == 1 else -1
        if alpha.ndim != 1 or beta.shape != (I,) or psi.shape != (I, I):
            raise InvalidParams("alpha, beta must have length I and psi shape (I, I)")
        for name, arr in (("alpha", alpha), ("beta", beta), ("psi", psi)):
            if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
                raise InvalidParams(f"{name} must be finite and strictly positive")
        if not np.array_equal(psi, psi.T):
            raise InvalidParams("psi must be exactly symmetric")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "psi", psi)


def random_qs_params(I, seed, symmetric_margins=False):
    """Draw log-normal generator parameters; ``psi`` is symmetrised exactly."""
    rng = make_rng(seed)
    alpha = np.exp(rng.standard_normal(I))
    beta = alpha.copy() if symmetric_margins else np.exp(rng.standard_normal(I))
    z = rng.standard_normal((I, I))
    psi = np.exp(np.triu(z) + np.triu(z, 1).T)
    return QsGeneratorParams(alpha, beta, psi)


def qs_generate(params):
    """Quasi-symmetric table built from ``alpha_i * beta_j * psi_ij``."""
    if not isinstance(params, QsGeneratorParams):
        raise InvalidParams("expected QsGeneratorParams")
    logs = (np.log(params.alpha)[:, None] + np.log(params.beta)[None, :]
            + np.log(params.psi))
    return clr_inverse(logs)


# -- generators ------------------------------------------------------------

def _unit(I, i, j):
    E = np.zeros((I, I))
    E[i, j] = 1.0
    return E


def _row(I, k):
    E = np.zeros((I, I))
    E[k, :] = 1.0
    return E


def _local(I, i, j):
    # +1 on the diagonal of the 2x2 block at (i, j), -1 off it
    E = np.zeros((I, I))
    E[i, j] = E[i + 1, j + 1] = 1.0
    E[i, j + 1] = E[i + 1, j] = -1.0
    return E


def _generators(kind, I):
    rows = [_row(I, k) for k in range(I)]
    cols = [r.T for r in rows]
    local = {(i, j): _local(I, i, j) for i in range(I - 1) for j in range(I - 1)}
    if kind == "ind":
        gens = rows + cols
    elif kind == "int":
        gens = list(local.values())
    elif kind == "sym":
        gens = [_unit(I, i, j) + _unit(I, j, i)
                for i in range(I) for j in range(i, I)]
    elif kind == "skew":
        gens = [_unit(I, i, j) - _unit(I, j, i)
                for i in range(I) for j in range(i + 1, I)]
    elif kind == "syind":
        gens = [rows[k] + cols[k] for k in range(I)]
    elif kind == "skind":
        gens = [rows[k] - cols[k] for k in range(I)]
    elif kind == "syint":
        gens = [local[i, j] + local[j, i]
                for i in range(I - 1) for j in range(i, I - 1)]
    elif kind == "skint":
        gens = [local[i, j] - local[j, i]
                for i in range(I - 1) for j in range(i + 1, I - 1)]
    elif kind == "QS":
        gens = _generators("ind", I) + _generators("syint", I)
    elif kind == "GMH":
        gens = _generators("syind", I) + _generators("int", I)
    else:
        raise UnknownKind(f"unknown subspace kind {kind!r}")
    # move every generator into the zero-sum clr plane
    return [g - g.mean() for g in gens]


def gram_schmidt(vectors, tol=RANK_TOL):
    """Modified Gram-Schmidt with one re-orthogonalisation pass.

    Vectors whose residual norm falls below `tol` are dropped, so the length
    of the result is the numerical rank of the input.
    """
    basis = []
    for v in vectors:
        w = np.array(v, dtype=float).ravel()
        for _ in range(2):
            for q in basis:
                w = w - np.dot(q, w) * q
        n = np.linalg.norm(w)
        if n > tol:
            basis.append(w / n)
    return basis


def subspace_basis(kind, I):
    """Orthonormal clr-space basis of a subspace of the ``I x I`` simplex.

    Returns
    -------
    list of numpy.ndarray
        ``I x I`` zero-sum arrays; the list length is the measured dimension.
    """
    if kind not in SUBSPACE_KINDS:
        raise UnknownKind(f"unknown subspace kind {kind!r}")
    return [q.reshape(I, I) for q in gram_schmidt(_generators(kind, I))]


def basis_projection(P, kind, basis=None):
    """Project ``P`` onto a subspace by summing basis coefficients in clr space."""
    P = require_square(P)
    if basis is None:
        basis = subspace_basis(kind, P.shape[0])
    C = clr(P)
    if not basis:
        return clr_inverse(np.zeros_like(C))
    B = np.array([q.ravel() for q in basis])
    return clr_inverse((B.T @ (B @ C.ravel())).reshape(C.shape))


CLOSED_FORM = {
    "ind": dec.independent_part,
    "int": dec.interaction_part,
    "sym": dec.symmetric_part,
    "skew": dec.skew_part,
    "syind": lambda P: dec.four_part(P).syind,
    "skind": dec.skind_part,
    "syint": lambda P: dec.four_part(P).syint,
    "skint": dec.skint_part,
    "QS": dec.qs_projection,
    "GMH": dec.gmh_projection,
}


def random_member(kind, I, rng, scale=1.0, basis=None):
    """Random table of a subspace: normal coefficients on its orthonormal basis."""
    if basis is None:
        basis = subspace_basis(kind, I)
    C = np.zeros((I, I))
    for q in basis:
        C += scale * rng.standard_normal() * q
    return clr_inverse(C)


def minimality_probe(P, kind, trials, seed, projection=None):
    """Check that no random subspace member is closer to ``P`` than its projection.

    Parameters
    ----------
    P : array_like
        Square probability table.
    kind : str
        One of :data:`SUBSPACE_KINDS`.
    trials : int
        Number of random members to test.
    seed : int
        Root seed for the candidate draws.
    projection : callable, optional
        Projection under test; defaults to the closed form for `kind`.

    Returns
    -------
    bool
    """
    if kind not in SUBSPACE_KINDS:
        raise UnknownKind(f"unknown subspace kind {kind!r}")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    P = require_square(P)
    proj = (projection or CLOSED_FORM[kind])(P)
    best = aitchison_distance(P, proj)
    I = P.shape[0]
    basis = subspace_basis(kind, I)
    rng = make_rng(seed)
    # candidates scattered around the projection and around the origin
    centre = clr(proj)
    scale = max(1.0, float(np.linalg.norm(clr(P))))
    for t in range(trials):
        Q = random_member(kind, I, rng, scale=scale if t % 2 else 0.1, basis=basis)
        if t % 2 == 0:
            Q = clr_inverse(centre + clr(Q))
        if best > aitchison_distance(P, Q) + 1e-12:
            return False
    return True

