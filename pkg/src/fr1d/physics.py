"""Fluxes, interface numerical flux, named initial conditions, exact solutions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .errors import ConfigError, EvaluationError

PERIODIC = "periodic"
DIRICHLET = "dirichlet"

_NEWTON_MAX_ITER = 50
_NEWTON_TOL = 1e-13


@dataclass(frozen=True)
class LinearAdvection:
    """f(u) = a u with constant speed a."""

    a: float

    def flux(self, u):
        return self.a * u

    def max_speed(self, u) -> float:
        return abs(self.a)


@dataclass(frozen=True)
class Burgers:
    """f(u) = u^2 / 2."""

    def flux(self, u):
        return 0.5 * u * u

    def max_speed(self, u) -> float:
        return float(np.max(np.abs(u)))


FluxSpec = Union[LinearAdvection, Burgers]


def upwind_numflux(flux: FluxSpec, u_left, u_right):
    """Interface flux from left/right trace values.

    Linear advection uses the exact upwind flux; Burgers uses the Rusanov
    (local Lax-Friedrichs) flux, which reduces to upwind for linear flux
    when the dissipation speed equals |a|.
    """
    if isinstance(flux, LinearAdvection):
        a = flux.a
        return 0.5 * a * (u_left + u_right) - 0.5 * abs(a) * (u_right - u_left)
    lam = np.maximum(np.abs(u_left), np.abs(u_right))
    return (0.5 * (flux.flux(u_left) + flux.flux(u_right))
            - 0.5 * lam * (u_right - u_left))


@dataclass(frozen=True)
class ProblemSpec:
    """A scalar conservation-law problem on [x_min, x_max]."""

    flux: FluxSpec
    ic: Callable
    bc: str = PERIODIC
    ic_deriv: Optional[Callable] = None
    x_min: float = -1.0
    x_max: float = 1.0
    boundary_data: Optional[Callable] = None  # g(t) at the inflow face

    def __post_init__(self):
        if self.bc not in (PERIODIC, DIRICHLET):
            raise ConfigError(f"unknown boundary condition {self.bc!r}")
        if self.bc == DIRICHLET:
            if not isinstance(self.flux, LinearAdvection) or self.flux.a == 0.0:
                raise ConfigError(
                    "Dirichlet inflow needs linear advection with a != 0")

    @property
    def inflow_face(self) -> float:
        # Only meaningful for Dirichlet problems.
        return self.x_min if self.flux.a > 0 else self.x_max

    def inflow_data(self, t):
        """Boundary values g(t) at the inflow face."""
        if self.boundary_data is not None:
            return self.boundary_data(t)
        return self.ic(self.inflow_face - self.flux.a * np.asarray(t))


def exact_solution(problem: ProblemSpec, x, t):
    """Exact solution at (x, t).

    Linear advection translates the initial condition (with periodic
    wrapping when applicable). Burgers solves u = ic(x - u t) along
    characteristics by Newton iteration; only valid before shock
    formation.
    """
    x = np.asarray(x, dtype=float)
    if isinstance(problem.flux, LinearAdvection):
        shift = problem.flux.a * t
        if shift == 0.0:
            return problem.ic(x)
        x0 = x - shift
        if problem.bc == PERIODIC:
            length = problem.x_max - problem.x_min
            x0 = problem.x_min + np.mod(x0 - problem.x_min, length)
        return problem.ic(x0)
    return _burgers_characteristics(problem, x, t)


def _burgers_characteristics(problem: ProblemSpec, x, t):
    if t == 0.0:
        return problem.ic(x)
    u = np.asarray(problem.ic(x), dtype=float).copy()
    for _ in range(_NEWTON_MAX_ITER):
        foot = x - u * t
        residual = u - problem.ic(foot)
        if np.max(np.abs(residual)) < _NEWTON_TOL:
            return u
        if problem.ic_deriv is not None:
            slope = problem.ic_deriv(foot)
        else:
            h = 1e-7
            slope = (problem.ic(foot + h) - problem.ic(foot - h)) / (2 * h)
        u = u - residual / (1.0 + t * slope)
    raise EvaluationError(
        f"characteristics iteration did not converge at t={t} "
        "(too close to shock formation?)")


def _wavepacket(x):
    return np.exp(-10.0 * x * x) * np.sin(10.0 * np.pi * x)


def _wavepacket_deriv(x):
    e = np.exp(-10.0 * x * x)
    return e * (10.0 * np.pi * np.cos(10.0 * np.pi * x)
                - 20.0 * x * np.sin(10.0 * np.pi * x))


def _sine(x):
    return np.sin(2.0 * np.pi * x)


def _sine_deriv(x):
    return 2.0 * np.pi * np.cos(2.0 * np.pi * x)


def _gauss(x):
    return np.exp(-50.0 * x * x)


def _gauss_deriv(x):
    return -100.0 * x * np.exp(-50.0 * x * x)


_NAMED_ICS = {
    "wavepacket": (_wavepacket, _wavepacket_deriv),
    "sine": (_sine, _sine_deriv),
    "gauss": (_gauss, _gauss_deriv),
}


def named_initial_condition(name: str):
    """Look up an initial condition by CLI name; supports 'const:<c>'."""
    if name in _NAMED_ICS:
        return _NAMED_ICS[name]
    if name.startswith("const:"):
        try:
            c = float(name.split(":", 1)[1])
        except ValueError:
            raise ConfigError(f"bad constant initial condition {name!r}") from None
        return (lambda x: np.full_like(np.asarray(x, dtype=float), c),
                lambda x: np.zeros_like(np.asarray(x, dtype=float)))
    raise ConfigError(
        f"unknown initial condition {name!r}; "
        f"choose from {sorted(_NAMED_ICS)} or 'const:<c>'")


def make_problem(ic_name: str, flux: FluxSpec, bc: str = PERIODIC,
                 x_min: float = -1.0, x_max: float = 1.0) -> ProblemSpec:
    ic, ic_deriv = named_initial_condition(ic_name)
    return ProblemSpec(flux=flux, ic=ic, ic_deriv=ic_deriv, bc=bc,
                       x_min=x_min, x_max=x_max)
