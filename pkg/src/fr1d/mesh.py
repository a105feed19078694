"""Uniform 1-D grid, nodal solution storage, IC sampling and error norms."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import Basis, NodeKind, legendre_nodes, lagrange_values
from .errors import ConfigError, DataError

# Extra points beyond the solution-point count used when integrating
# non-polynomial quantities such as (u_h - u_exact)^2.
_OVERINT_EXTRA = 4


@dataclass(frozen=True)
class Grid:
    """Uniform partition of [x_min, x_max] into n_elem elements."""

    x_min: float
    x_max: float
    n_elem: int
    dx: float
    faces: np.ndarray  # n_elem + 1 face positions, strictly increasing

    @property
    def length(self) -> float:
        return self.x_max - self.x_min


def make_grid(x_min: float, x_max: float, n_elem: int) -> Grid:
    if not x_min < x_max:
        raise ConfigError(f"empty domain [{x_min}, {x_max}]")
    if n_elem < 1:
        raise ConfigError(f"n_elem must be >= 1, got {n_elem}")
    faces = np.linspace(x_min, x_max, n_elem + 1)
    faces.flags.writeable = False
    return Grid(x_min=float(x_min), x_max=float(x_max), n_elem=int(n_elem),
                dx=(x_max - x_min) / n_elem, faces=faces)


def node_coords(grid: Grid, basis: Basis) -> np.ndarray:
    """Physical positions of the solution points, shape (n_elem, N+1)."""
    return grid.faces[:-1, None] + basis.nodes[None, :] * grid.dx


@dataclass
class SolutionField:
    """Nodal coefficients of the piecewise-polynomial solution at time t.

    ``u`` has shape (n_elem, N+1); row e holds the values at the solution
    points of element e. One time-stepper owns a field at a time.
    """

    u: np.ndarray
    basis: Basis
    grid: Grid
    t: float = 0.0

    def copy(self) -> "SolutionField":
        return SolutionField(u=self.u.copy(), basis=self.basis,
                             grid=self.grid, t=self.t)

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.u)))


def sample_initial_condition(grid: Grid, basis: Basis, ic) -> SolutionField:
    """Collocate ic at the solution points (no projection)."""
    x = node_coords(grid, basis)
    u = np.asarray(ic(x), dtype=float)
    if u.shape != x.shape:
        u = np.broadcast_to(u, x.shape).astype(float)
    if not np.all(np.isfinite(u)):
        raise DataError("initial condition returned non-finite values")
    return SolutionField(u=u.copy(), basis=basis, grid=grid, t=0.0)


def _overintegration_rule(basis: Basis):
    """(N+4)-point GL rule on [0, 1] plus the node-to-quadrature map."""
    n_quad = basis.n_points + _OVERINT_EXTRA
    qx, qw = legendre_nodes(NodeKind.GAUSS_LEGENDRE, n_quad - 1)
    interp = lagrange_values(basis.nodes, qx)  # (n_quad, N+1)
    return qx, qw, interp


def error_norms(field: SolutionField, exact, t: float | None = None):
    """L2 and Linf distance between the field and an exact solution.

    Both norms are evaluated on a per-element over-integration rule; the
    L2 integrand (u_h - u_exact)^2 is not polynomial, so the solution
    points alone would under-resolve it.
    """
    if not field.is_finite():
        raise DataError("field contains non-finite values")
    if t is None:
        t = field.t
    qx, qw, interp = _overintegration_rule(field.basis)
    xq = field.grid.faces[:-1, None] + qx[None, :] * field.grid.dx
    uq = field.u @ interp.T
    diff = uq - exact(xq, t)
    # A diverging-but-finite field may overflow when squared; an inf norm
    # is the honest report for it.
    with np.errstate(over="ignore"):
        l2 = float(np.sqrt(field.grid.dx * np.sum((diff * diff) @ qw)))
    linf = float(np.max(np.abs(diff)))
    return l2, linf


def total_mass(field: SolutionField) -> float:
    """Exact integral of the piecewise polynomial over the domain."""
    return float(field.grid.dx * np.sum(field.u @ field.basis.weights))
