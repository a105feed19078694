"""Reference-element data for nodal flux reconstruction on [0, 1].

Provides quadrature nodes and weights (Gauss-Legendre or
Gauss-Lobatto-Legendre), Lagrange interpolation and differentiation, and
the correction-function derivative vectors used by the FR update. All
quantities live on the reference interval [0, 1]; weights sum to one.

The correction functions themselves are never constructed: the schemes
only need their derivatives at the solution points, which are available
in closed form from the boundary values of the Lagrange basis,

    g_R'(xi_j) = +ell_j(1) / w_j,     g_L'(xi_j) = -ell_j(0) / w_j,

together with the endpoint values g_L(0) = g_R(1) = 1, g_L(1) = g_R(0) = 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConfigError, DataError

MAX_DEGREE = 10
_NEWTON_TOL = 1e-15


class NodeKind(Enum):
    GAUSS_LEGENDRE = "gl"
    GAUSS_LOBATTO_LEGENDRE = "gll"


class CorrectionKind(Enum):
    RADAU = "radau"
    G2 = "g2"


# Default pairing: Radau correction with interior (GL) points, g2 with
# endpoint-including (GLL) points. Other combinations are untested and
# rejected unless forced.
_DEFAULT_PAIRING = {
    CorrectionKind.RADAU: NodeKind.GAUSS_LEGENDRE,
    CorrectionKind.G2: NodeKind.GAUSS_LOBATTO_LEGENDRE,
}


@dataclass(frozen=True)
class Basis:
    """Immutable degree-N element data; safe to share across kernels."""

    degree: int
    kind: NodeKind
    nodes: np.ndarray            # solution points in [0, 1], increasing
    weights: np.ndarray          # quadrature weights, positive, sum to 1
    diff_matrix: np.ndarray      # D[i, j] = ell_j'(xi_i)
    left_interp: np.ndarray      # ell_j(0)
    right_interp: np.ndarray     # ell_j(1)
    corr_deriv_left: np.ndarray  # g_L'(xi_j) = -ell_j(0) / w_j
    corr_deriv_right: np.ndarray  # g_R'(xi_j) = +ell_j(1) / w_j

    @property
    def n_points(self) -> int:
        return self.degree + 1


def _legendre_pair(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate (P_n, P_{n-1}) on [-1, 1] by the three-term recurrence."""
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev, np.zeros_like(x)
    p = x.copy()
    for k in range(2, n + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    return p, p_prev


def _legendre_deriv(n: int, x: np.ndarray) -> np.ndarray:
    """P_n'(x) for x strictly inside (-1, 1)."""
    p, p_prev = _legendre_pair(n, x)
    return n * (x * p - p_prev) / (x * x - 1.0)


def _gauss_legendre_std(n_points: int) -> tuple[np.ndarray, np.ndarray]:
    """n-point Gauss-Legendre rule on [-1, 1] by Newton iteration."""
    n = n_points
    # Chebyshev-based initial guesses, descending in x.
    k = np.arange(n)
    x = np.cos(np.pi * (k + 0.75) / (n + 0.5))
    for _ in range(100):
        p, p_prev = _legendre_pair(n, x)
        dp = n * (x * p - p_prev) / (x * x - 1.0)
        dx = p / dp
        x -= dx
        if np.max(np.abs(dx)) < _NEWTON_TOL:
            break
    # Symmetrize to remove asymmetric roundoff.
    x = 0.5 * (x - x[::-1])
    dp = _legendre_deriv(n, x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    w = 0.5 * (w + w[::-1])
    order = np.argsort(x)
    return x[order], w[order]


def _gauss_lobatto_std(n_points: int) -> tuple[np.ndarray, np.ndarray]:
    """n-point Gauss-Lobatto-Legendre rule on [-1, 1], n >= 2."""
    n = n_points
    deg = n - 1  # interior nodes are the extrema of P_deg
    x = np.empty(n)
    x[0], x[-1] = -1.0, 1.0
    if n > 2:
        # Chebyshev-Lobatto interior guesses, then Newton on P_deg'.
        xi = np.cos(np.pi * np.arange(1, deg) / deg)
        for _ in range(100):
            dp = _legendre_deriv(deg, xi)
            p, _ = _legendre_pair(deg, xi)
            # (1 - x^2) P'' = 2 x P' - deg (deg + 1) P
            ddp = (2.0 * xi * dp - deg * (deg + 1) * p) / (1.0 - xi * xi)
            dxi = dp / ddp
            xi -= dxi
            if np.max(np.abs(dxi)) < _NEWTON_TOL:
                break
        xi = 0.5 * (xi - xi[::-1])
        x[1:-1] = xi
    x = np.sort(x)
    p, _ = _legendre_pair(deg, x)
    w = 2.0 / (deg * (deg + 1) * p * p)
    w = 0.5 * (w + w[::-1])
    return x, w


def legendre_nodes(kind: NodeKind, degree: int) -> tuple[np.ndarray, np.ndarray]:
    """Solution points and quadrature weights on [0, 1] for a degree-N element.

    GL rules integrate polynomials up to degree 2N+1 exactly, GLL up to
    2N-1. GLL needs both endpoints and therefore degree >= 1.
    """
    if degree < 0 or degree > MAX_DEGREE:
        raise ConfigError(f"degree must be in 0..{MAX_DEGREE}, got {degree}")
    if kind is NodeKind.GAUSS_LEGENDRE:
        x, w = _gauss_legendre_std(degree + 1)
    elif kind is NodeKind.GAUSS_LOBATTO_LEGENDRE:
        if degree < 1:
            raise ConfigError("GLL points need degree >= 1 (both endpoints)")
        x, w = _gauss_lobatto_std(degree + 1)
    else:
        raise ConfigError(f"unknown node kind {kind!r}")
    return 0.5 * (x + 1.0), 0.5 * w


def barycentric_weights(nodes: np.ndarray) -> np.ndarray:
    nodes = np.asarray(nodes, dtype=float)
    diff = nodes[:, None] - nodes[None, :]
    np.fill_diagonal(diff, 1.0)
    return 1.0 / np.prod(diff, axis=1)


def lagrange_values(nodes: np.ndarray, x) -> np.ndarray:
    """Values of all Lagrange basis polynomials at points x.

    Returns an array of shape x.shape + (len(nodes),). Exact node hits
    return the corresponding unit vector.
    """
    nodes = np.asarray(nodes, dtype=float)
    x = np.asarray(x, dtype=float)
    lam = barycentric_weights(nodes)
    dist = x[..., None] - nodes
    hit = dist == 0.0
    # Guard the division; rows with exact hits are overwritten below.
    safe = np.where(hit, 1.0, dist)
    terms = lam / safe
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = terms / np.sum(terms, axis=-1, keepdims=True)
    any_hit = np.any(hit, axis=-1, keepdims=True)
    return np.where(any_hit, hit.astype(float), vals)


def differentiation_matrix(nodes: np.ndarray) -> np.ndarray:
    """Nodal differentiation matrix D[i, j] = ell_j'(xi_i).

    Exact (to roundoff) for polynomials of degree <= N sampled at the
    nodes. Row sums vanish by construction.
    """
    nodes = np.asarray(nodes, dtype=float)
    if nodes.ndim != 1 or nodes.size == 0:
        raise DataError("nodes must be a non-empty 1-D array")
    if np.unique(nodes).size != nodes.size:
        raise DataError("nodes must be distinct")
    n = nodes.size
    lam = barycentric_weights(nodes)
    d = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i != j:
                d[i, j] = (lam[j] / lam[i]) / (nodes[i] - nodes[j])
    # Diagonal from the zero-row-sum property of differentiation.
    np.fill_diagonal(d, -np.sum(d, axis=1))
    return d


def build_basis(
    kind: NodeKind,
    degree: int,
    correction: CorrectionKind,
    force_pairing: bool = False,
) -> Basis:
    """Assemble the full element data for one (points, degree, correction) triple.

    The correction-derivative vectors come from the boundary-interpolation
    identities, not from explicit degree-(N+1) correction polynomials.
    Radau pairs with GL points and g2 with GLL; other pairings raise
    unless ``force_pairing`` is set.
    """
    expected = _DEFAULT_PAIRING[correction]
    if kind is not expected and not force_pairing:
        raise ConfigError(
            f"correction {correction.value!r} expects {expected.value!r} points, "
            f"got {kind.value!r} (pass force_pairing=True to override)"
        )
    nodes, weights = legendre_nodes(kind, degree)
    diff = differentiation_matrix(nodes)
    left = lagrange_values(nodes, 0.0)
    right = lagrange_values(nodes, 1.0)
    corr_left = -left / weights
    corr_right = right / weights
    for arr in (nodes, weights, diff, left, right, corr_left, corr_right):
        arr.flags.writeable = False
    return Basis(
        degree=degree,
        kind=kind,
        nodes=nodes,
        weights=weights,
        diff_matrix=diff,
        left_interp=left,
        right_interp=right,
        corr_deriv_left=corr_left,
        corr_deriv_right=corr_right,
    )
