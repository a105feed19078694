"""Single-stage Taylor-expansion scheme for linear advection.

Instead of an implicit space-time predictor, the time-averaged solution
over a step is built explicitly: a truncated Taylor series in time whose
temporal derivatives are exchanged for spatial ones through the PDE,

    U = sum_{k=0..N} (-a dt)^k / (k+1)! * d^k u / dx^k,

with every spatial derivative taken as a local polynomial derivative.
The update then has the usual FR form with the discontinuous
time-averaged flux a*U and an interface flux carrying one of two
dissipation variants: D2 penalizes the jump in the time-averaged trace,
D1 the jump in the current-solution trace.
"""
from __future__ import annotations

from enum import Enum
from math import factorial

import numpy as np

from .basis import Basis
from .errors import BlowUpError, NumericalError
from .mesh import SolutionField
from .physics import PERIODIC, LinearAdvection, ProblemSpec


class DissipationKind(Enum):
    D1 = "d1"
    D2 = "d2"


def _require_linear(problem_or_flux):
    flux = getattr(problem_or_flux, "flux", problem_or_flux)
    if not isinstance(flux, LinearAdvection):
        raise NumericalError("the Taylor time expansion is implemented for "
                             "linear advection only")
    return flux


def time_averaged_solution(basis: Basis, a: float, u_elem: np.ndarray,
                           dt: float, dx: float) -> np.ndarray:
    """Nodal values of the approximate time-averaged solution.

    Applies the scaled differentiation matrix iteratively; derivatives of
    order above the polynomial degree vanish, so the sum is exact for the
    local polynomial.
    """
    u_elem = np.asarray(u_elem, dtype=float)
    avg = u_elem.copy()
    term = u_elem
    for k in range(1, basis.degree + 1):
        term = (term @ basis.diff_matrix.T) / dx
        avg += ((-a * dt) ** k / factorial(k + 1)) * term
    return avg


def lw_numflux(kind: DissipationKind, a: float, avg_left, avg_right,
               sol_left, sol_right):
    """Interface flux from time-averaged traces with selectable dissipation.

    The central part always uses the time-averaged traces; the jump
    penalty uses either the time-averaged traces (D2) or the current
    solution traces (D1). Only D2 reduces to the pure upwind flux in the
    time-averaged quantity.
    """
    central = 0.5 * a * (avg_left + avg_right)
    if kind is DissipationKind.D2:
        return central - 0.5 * abs(a) * (avg_right - avg_left)
    return central - 0.5 * abs(a) * (sol_right - sol_left)


def _face_traces(values_left, values_right, ghost_left, ghost_right, periodic):
    """Per-face (left, right) trace arrays of shape (E+1,)."""
    if periodic:
        left = np.concatenate([values_right[-1:], values_right])
        right = np.concatenate([values_left, values_left[:1]])
    else:
        left = np.concatenate([[ghost_left], values_right])
        right = np.concatenate([values_left, [ghost_right]])
    return left, right


def lwfr_step(state: SolutionField, problem: ProblemSpec, dt: float,
              kind: DissipationKind = DissipationKind.D2) -> SolutionField:
    """Advance the solution by one Taylor-expansion step."""
    flux = _require_linear(problem)
    a = flux.a
    basis, grid = state.basis, state.grid
    u = state.u

    with np.errstate(over="ignore", invalid="ignore"):
        return _lwfr_step_inner(state, problem, dt, kind, a, basis, grid, u)


def _lwfr_step_inner(state, problem, dt, kind, a, basis, grid, u):
    avg = time_averaged_solution(basis, a, u, dt, grid.dx)
    avg_left = avg @ basis.left_interp
    avg_right = avg @ basis.right_interp
    sol_left = u @ basis.left_interp
    sol_right = u @ basis.right_interp

    periodic = problem.bc == PERIODIC
    if periodic:
        ghosts = (0.0, 0.0, 0.0, 0.0)
    else:
        ghosts = _dirichlet_ghosts(basis, problem, state.t, dt,
                                   avg_left, avg_right, sol_left, sol_right)
    g_avg_l, g_avg_r, g_sol_l, g_sol_r = ghosts
    face_avg_l, face_avg_r = _face_traces(avg_left, avg_right,
                                          g_avg_l, g_avg_r, periodic)
    face_sol_l, face_sol_r = _face_traces(sol_left, sol_right,
                                          g_sol_l, g_sol_r, periodic)
    face_flux = lw_numflux(kind, a, face_avg_l, face_avg_r,
                           face_sol_l, face_sol_r)

    jump_right = face_flux[1:] - a * avg_right
    jump_left = face_flux[:-1] - a * avg_left
    du = (a * (avg @ basis.diff_matrix.T)
          + jump_right[:, None] * basis.corr_deriv_right[None, :]
          + jump_left[:, None] * basis.corr_deriv_left[None, :])
    u_new = u - (dt / grid.dx) * du
    if not np.all(np.isfinite(u_new)):
        raise BlowUpError("solution became non-finite", time=state.t)
    return SolutionField(u=u_new, basis=basis, grid=grid, t=state.t + dt)


def _dirichlet_ghosts(basis: Basis, problem: ProblemSpec, t: float, dt: float,
                      avg_left, avg_right, sol_left, sol_right):
    """Ghost traces at the domain boundary.

    The inflow ghost for the time-averaged trace is the temporal
    quadrature average of the boundary data over the step, matching the
    time-averaged role of that trace in the interface flux; the
    current-solution ghost uses the data at the step start. Outflow
    ghosts copy the interior traces.
    """
    times = t + basis.nodes * dt
    g_avg = float(np.asarray(problem.inflow_data(times)) @ basis.weights)
    g_sol = float(problem.inflow_data(t))
    if problem.flux.a > 0:
        # Inflow at the left face, outflow at the right.
        return g_avg, avg_right[-1], g_sol, sol_right[-1]
    return avg_left[0], g_avg, sol_left[0], g_sol
