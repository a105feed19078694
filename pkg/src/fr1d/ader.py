"""Single-stage scheme with an element-local space-time predictor.

Each step solves, inside every element, a small implicit system for the
coefficients of a space-time polynomial that evolves the current element
data over one time step without neighbor coupling. The corrector then
advances the solution in flux-reconstruction form using time-averaged
fluxes and time-integrated interface fluxes of the predictor traces.

Predictor coefficients are stored as arrays of shape (..., N+1, N+1)
with the space index first and the time index second; the same solution
points serve as temporal quadrature nodes.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import Basis
from .errors import BlowUpError, NumericalError
from .mesh import SolutionField
from .physics import (PERIODIC, FluxSpec, LinearAdvection, ProblemSpec,
                      upwind_numflux)

_PICARD_GROWTH_LIMIT = 1e6


def temporal_matrix(basis: Basis) -> np.ndarray:
    """Discrete time-evolution operator of the predictor equation.

    T[k, q] collects the temporal-derivative quadrature and the
    end-of-step boundary term; the spatial part enters separately.
    """
    w = basis.weights
    d = basis.diff_matrix
    r = basis.right_interp
    return -(d.T * w[None, :]) + np.outer(r, r)


def _assemble_system(basis: Basis, a: float, dt: float, dx: float) -> np.ndarray:
    """Dense matrix of the collocated predictor equation for linear flux.

    Unknowns are vectorized in C order over (space, time); the system is
    (N+1)^2 square.
    """
    p = basis.n_points
    t_mat = temporal_matrix(basis)
    eye = np.eye(p)
    w_diag = np.diag(basis.weights)
    return np.kron(eye, t_mat) + (a * dt / dx) * np.kron(basis.diff_matrix, w_diag)


def _predictor_rhs(basis: Basis, u_elem: np.ndarray) -> np.ndarray:
    # RHS[j, k] = u_j * ell_k(0): the initial data enters through the
    # start-of-step temporal boundary term.
    return u_elem[..., :, None] * basis.left_interp[None, :]


def solve_predictor_direct(basis: Basis, flux: FluxSpec, u_elem: np.ndarray,
                           dt: float, dx: float) -> np.ndarray:
    """Solve the element-local predictor system by dense LU (linear flux only).

    ``u_elem`` may be a single element (N+1,) or a batch (..., N+1); the
    system matrix is shared by every element of the batch.
    """
    if not isinstance(flux, LinearAdvection):
        raise NumericalError("direct predictor solve requires linear flux")
    u_elem = np.asarray(u_elem, dtype=float)
    p = basis.n_points
    a_mat = _assemble_system(basis, flux.a, dt, dx)
    rhs = _predictor_rhs(basis, u_elem).reshape(*u_elem.shape[:-1], p * p)
    try:
        coeffs = np.linalg.solve(a_mat, rhs.reshape(-1, p * p).T).T
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"singular predictor system: {exc}") from exc
    return coeffs.reshape(*u_elem.shape[:-1], p, p)


def solve_predictor_picard(basis: Basis, flux: FluxSpec, u_elem: np.ndarray,
                           dt: float, dx: float,
                           n_iter: int | None = None) -> np.ndarray:
    """Fixed-point iteration on the time-integrated predictor equation.

    Works for any flux. For linear flux the iteration map is affine with
    a nilpotent linear part, so N+1 sweeps reproduce the direct solve to
    roundoff; N+1 is the default iteration count.
    """
    u_elem = np.asarray(u_elem, dtype=float)
    if n_iter is None:
        n_iter = basis.degree + 1
    if n_iter < 1:
        raise NumericalError(f"n_iter must be >= 1, got {n_iter}")
    w = basis.weights
    t_inv_t = np.linalg.inv(temporal_matrix(basis)).T
    rhs = _predictor_rhs(basis, u_elem)
    coeffs = np.repeat(u_elem[..., :, None], basis.n_points, axis=-1)
    limit = _PICARD_GROWTH_LIMIT * max(1.0, float(np.max(np.abs(u_elem))))
    for _ in range(n_iter):
        fvals = flux.flux(coeffs)
        coeffs = (rhs - (dt / dx) * (basis.diff_matrix @ fvals) * w[None, :]) @ t_inv_t
        if np.max(np.abs(coeffs)) > limit:
            raise NumericalError(
                "predictor iteration diverged (time step too large?)")
    return coeffs


def predictor_time_average(basis: Basis, coeffs: np.ndarray) -> np.ndarray:
    """Temporal quadrature average of the predictor at the solution points."""
    return coeffs @ basis.weights


@dataclass
class AderFluxData:
    """Time-averaged flux quantities entering the corrector.

    ``face_flux`` holds the time-integrated interface flux divided by dt,
    one value per face; after correction the flux polynomial takes exactly
    this value on both sides of every face.
    """

    avg_flux: np.ndarray       # (E, N+1) time-averaged flux at solution points
    ubar_left: np.ndarray      # (E,) time-averaged predictor trace at xi=0
    ubar_right: np.ndarray     # (E,) ... at xi=1
    fbar_left: np.ndarray      # (E,) time-averaged flux trace at xi=0
    fbar_right: np.ndarray     # (E,) ... at xi=1
    face_flux: np.ndarray      # (E+1,) time-integrated numerical flux / dt


def _face_states(trace_left, trace_right, problem: ProblemSpec, t: float,
                 dt: float, tau_nodes: np.ndarray):
    """Left/right predictor traces at every face, shape (E+1, n_time).

    ``trace_left``/``trace_right`` are the per-element traces at xi=0 and
    xi=1 per temporal node. Ghost traces come from the boundary condition:
    periodic wrap, or inflow data evaluated at the temporal nodes with
    outflow extrapolation.
    """
    if problem.bc == PERIODIC:
        left = np.concatenate([trace_right[-1:], trace_right], axis=0)
        right = np.concatenate([trace_left, trace_left[:1]], axis=0)
        return left, right
    times = t + tau_nodes * dt
    ghost = np.broadcast_to(problem.inflow_data(times), tau_nodes.shape)
    if problem.flux.a > 0:
        left = np.concatenate([ghost[None, :], trace_right], axis=0)
        right = np.concatenate([trace_left, trace_right[-1:]], axis=0)
    else:
        left = np.concatenate([trace_left[:1], trace_right], axis=0)
        right = np.concatenate([trace_left, ghost[None, :]], axis=0)
    return left, right


def compute_flux_data(basis: Basis, problem: ProblemSpec, coeffs: np.ndarray,
                      t: float, dt: float) -> AderFluxData:
    """Evaluate every time integral of the corrector by temporal quadrature."""
    w = basis.weights
    fvals = problem.flux.flux(coeffs)                    # (E, P, P)
    avg_flux = fvals @ w
    trace_u_left = np.einsum("j,ejk->ek", basis.left_interp, coeffs)
    trace_u_right = np.einsum("j,ejk->ek", basis.right_interp, coeffs)
    trace_f_left = np.einsum("j,ejk->ek", basis.left_interp, fvals)
    trace_f_right = np.einsum("j,ejk->ek", basis.right_interp, fvals)

    left, right = _face_states(trace_u_left, trace_u_right, problem, t, dt,
                               basis.nodes)
    face_flux = upwind_numflux(problem.flux, left, right) @ w

    if isinstance(problem.flux, LinearAdvection):
        # For linear flux, integrating the interface flux in time must agree
        # with applying it to the time-averaged traces; a mismatch indicates
        # an assembly bug rather than a numerical issue.
        averaged = upwind_numflux(problem.flux, left @ w, right @ w)
        # Roundoff of either route scales with the trace magnitude, not
        # with the (possibly cancelling) flux value.
        scale = max(1.0, abs(problem.flux.a) * float(np.max(np.abs(left))),
                    abs(problem.flux.a) * float(np.max(np.abs(right))))
        if np.max(np.abs(averaged - face_flux)) > 1e-13 * scale:
            raise NumericalError(
                "time integration and averaging of the interface flux disagree")

    return AderFluxData(
        avg_flux=avg_flux,
        ubar_left=trace_u_left @ w,
        ubar_right=trace_u_right @ w,
        fbar_left=trace_f_left @ w,
        fbar_right=trace_f_right @ w,
        face_flux=face_flux,
    )


def ader_step(state: SolutionField, problem: ProblemSpec, dt: float,
              n_iter: int | None = None) -> SolutionField:
    """Advance the solution by one predictor-corrector step.

    The update differentiates the corrected time-averaged flux at the
    solution points: the local polynomial part via the differentiation
    matrix, the interface jumps via the correction-derivative vectors.
    """
    basis, grid = state.basis, state.grid
    # Deliberate over-the-limit runs overflow before the explicit
    # finiteness check below; silence the intermediate warnings.
    with np.errstate(over="ignore", invalid="ignore"):
        if isinstance(problem.flux, LinearAdvection):
            coeffs = solve_predictor_direct(basis, problem.flux, state.u, dt,
                                            grid.dx)
        else:
            coeffs = solve_predictor_picard(basis, problem.flux, state.u, dt,
                                            grid.dx, n_iter=n_iter)
        data = compute_flux_data(basis, problem, coeffs, state.t, dt)
        jump_right = data.face_flux[1:] - data.fbar_right
        jump_left = data.face_flux[:-1] - data.fbar_left
        du = (data.avg_flux @ basis.diff_matrix.T
              + jump_right[:, None] * basis.corr_deriv_right[None, :]
              + jump_left[:, None] * basis.corr_deriv_left[None, :])
        u_new = state.u - (dt / grid.dx) * du
    if not np.all(np.isfinite(u_new)):
        raise BlowUpError("solution became non-finite", time=state.t)
    return SolutionField(u=u_new, basis=basis, grid=grid, t=state.t + dt)
