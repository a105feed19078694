"""Time-stepping loops, lockstep scheme comparison, EOC and stability scans."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import ader, lwfr
from .basis import Basis, CorrectionKind, NodeKind, build_basis
from .errors import BlowUpError, ConfigError
from .lwfr import DissipationKind
from .mesh import (Grid, SolutionField, error_norms, make_grid,
                   sample_initial_condition, total_mass)
from .physics import (Burgers, LinearAdvection, ProblemSpec, exact_solution,
                      make_problem)

# Fields of the final solution are declared unstable by the scan when the
# error norm exceeds this; slow instabilities need not reach overflow
# within the scan horizon.
_SCAN_ERROR_LIMIT = 1e3


class Scheme(Enum):
    ADER = "ader"
    LW_D1 = "lw-d1"
    LW_D2 = "lw-d2"


@dataclass(frozen=True)
class RunConfig:
    """One simulation setup.

    ``cfl_safety`` is meant to stay in (0, 1]; larger values are accepted
    so that over-the-limit behavior (blow-up) can be exercised on purpose.
    """

    degree: int
    n_elem: int
    points: NodeKind = NodeKind.GAUSS_LEGENDRE
    correction: CorrectionKind = CorrectionKind.RADAU
    scheme: Scheme = Scheme.ADER
    ic: str = "wavepacket"
    flux: str = "linear"
    speed: float = 5.0
    bc: str = "periodic"
    cfl_safety: float = 0.9
    t_final: float = 0.4
    record_interval: int = 10
    x_min: float = -1.0
    x_max: float = 1.0

    def __post_init__(self):
        if self.cfl_safety <= 0:
            raise ConfigError(f"cfl_safety must be positive, got {self.cfl_safety}")
        if self.t_final <= 0:
            raise ConfigError(f"t_final must be positive, got {self.t_final}")
        if self.record_interval < 1:
            raise ConfigError("record_interval must be >= 1")
        if self.flux not in ("linear", "burgers"):
            raise ConfigError(f"unknown flux {self.flux!r}")
        if self.flux == "burgers" and self.scheme is not Scheme.ADER:
            raise ConfigError("the Taylor-expansion schemes are linear-only; "
                              "use the predictor-corrector scheme for burgers")


@dataclass
class ErrorSeries:
    """(time, L2, Linf) error samples along a run; first sample at t=0."""

    times: list = field(default_factory=list)
    l2: list = field(default_factory=list)
    linf: list = field(default_factory=list)

    def append(self, t: float, l2: float, linf: float):
        self.times.append(t)
        self.l2.append(l2)
        self.linf.append(linf)

    def __len__(self):
        return len(self.times)


@dataclass
class DiffSeries:
    """Max-norm gap between two lockstep schemes after every step."""

    times: list = field(default_factory=list)
    linf_diff: list = field(default_factory=list)

    def append(self, t: float, diff: float):
        self.times.append(t)
        self.linf_diff.append(diff)

    def max_diff(self) -> float:
        return max(self.linf_diff) if self.linf_diff else 0.0

    def __len__(self):
        return len(self.times)


def build_problem(config: RunConfig) -> ProblemSpec:
    flux = (LinearAdvection(config.speed) if config.flux == "linear"
            else Burgers())
    return make_problem(config.ic, flux, bc=config.bc,
                        x_min=config.x_min, x_max=config.x_max)


def setup(config: RunConfig):
    """Basis, grid, problem and sampled initial field for a config."""
    basis = build_basis(config.points, config.degree, config.correction)
    grid = make_grid(config.x_min, config.x_max, config.n_elem)
    problem = build_problem(config)
    state = sample_initial_condition(grid, basis, problem.ic)
    return basis, grid, problem, state


def compute_dt(config: RunConfig, grid: Grid, wavespeed: float) -> float:
    """Nominal step size: cfl_safety * dx / (wavespeed * (2N + 1)).

    A zero wave speed means nothing moves; the whole run is a single step.
    The caller truncates the final step to land on t_final exactly.
    """
    if wavespeed < 0:
        raise ConfigError(f"wavespeed must be >= 0, got {wavespeed}")
    if wavespeed == 0.0:
        return config.t_final
    return config.cfl_safety * grid.dx / (wavespeed * (2 * config.degree + 1))


def _advance(state: SolutionField, problem: ProblemSpec, dt: float,
             scheme: Scheme) -> SolutionField:
    if scheme is Scheme.ADER:
        return ader.ader_step(state, problem, dt)
    kind = DissipationKind.D1 if scheme is Scheme.LW_D1 else DissipationKind.D2
    return lwfr.lwfr_step(state, problem, dt, kind=kind)


def _time_steps(config: RunConfig, grid: Grid, problem: ProblemSpec,
                state: SolutionField):
    """Yield (step_index, dt, is_last); recomputes dt for nonlinear flux."""
    t = 0.0
    n = 0
    eps = 1e-12 * config.t_final
    while t < config.t_final - eps:
        wavespeed = problem.flux.max_speed(state.u)
        dt = compute_dt(config, grid, wavespeed)
        last = t + dt >= config.t_final - eps
        if last:
            dt = config.t_final - t
        yield n, dt, last
        t = state.t
        n += 1


def run_simulation(config: RunConfig) -> ErrorSeries:
    """Evolve from t=0 to t_final recording error norms along the way.

    Norms are recorded at t=0, every ``record_interval`` steps, and at the
    final time. On blow-up the partial series is attached to the raised
    error together with the last stable time.
    """
    basis, grid, problem, state = setup(config)
    exact = lambda x, t: exact_solution(problem, x, t)
    series = ErrorSeries()
    series.append(0.0, *error_norms(state, exact, 0.0))
    for n, dt, last in _time_steps(config, grid, problem, state):
        try:
            new_state = _advance(state, problem, dt, config.scheme)
        except BlowUpError as exc:
            raise BlowUpError(str(exc), time=state.t, series=series) from None
        state.u, state.t = new_state.u, new_state.t
        if last or (n + 1) % config.record_interval == 0:
            series.append(state.t, *error_norms(state, exact))
    return series


def _check_comparable(config_a: RunConfig, config_b: RunConfig):
    if dataclasses.replace(config_a, scheme=config_b.scheme) != config_b:
        raise ConfigError("compared configs must be identical up to the scheme")
    if config_a.flux != "linear":
        raise ConfigError("scheme comparison is defined for linear flux only")


def compare_schemes(config_a: RunConfig, config_b: RunConfig) -> DiffSeries:
    """Run two schemes in lockstep and record their nodal gap every step."""
    diff, _, _ = compare_schemes_detailed(config_a, config_b,
                                          record_errors=False)
    return diff


def compare_schemes_detailed(config_a: RunConfig, config_b: RunConfig,
                             record_errors: bool = True):
    """Lockstep comparison that also collects per-scheme error series.

    Both schemes see exactly the same step sequence. Returns
    (DiffSeries, ErrorSeries_a, ErrorSeries_b); the error series are None
    when ``record_errors`` is false.
    """
    _check_comparable(config_a, config_b)
    basis, grid, problem, state_a = setup(config_a)
    state_b = state_a.copy()
    exact = lambda x, t: exact_solution(problem, x, t)

    diff = DiffSeries()
    errors_a = ErrorSeries() if record_errors else None
    errors_b = ErrorSeries() if record_errors else None
    if record_errors:
        errors_a.append(0.0, *error_norms(state_a, exact, 0.0))
        errors_b.append(0.0, *error_norms(state_b, exact, 0.0))

    for n, dt, last in _time_steps(config_a, grid, problem, state_a):
        try:
            new_a = _advance(state_a, problem, dt, config_a.scheme)
            new_b = _advance(state_b, problem, dt, config_b.scheme)
        except BlowUpError as exc:
            raise BlowUpError(str(exc), time=state_a.t, series=diff) from None
        state_a.u, state_a.t = new_a.u, new_a.t
        state_b.u, state_b.t = new_b.u, new_b.t
        diff.append(state_a.t, float(np.max(np.abs(state_a.u - state_b.u))))
        if record_errors and (last or (n + 1) % config_a.record_interval == 0):
            errors_a.append(state_a.t, *error_norms(state_a, exact))
            errors_b.append(state_b.t, *error_norms(state_b, exact))
    return diff, errors_a, errors_b


@dataclass
class EocRow:
    n_elem: int
    l2_error: float
    order: float | None  # None on the coarsest level


def eoc_study(base_config: RunConfig, levels) -> list[EocRow]:
    """Refinement study; observed order between consecutive levels.

    ``levels`` is an increasing sequence of element counts (at least 3).
    """
    levels = list(levels)
    if len(levels) < 3:
        raise ConfigError("EOC study needs at least 3 refinement levels")
    if any(b <= a for a, b in zip(levels, levels[1:])):
        raise ConfigError("refinement levels must be increasing")
    rows: list[EocRow] = []
    prev_error = None
    prev_n = None
    for n_elem in levels:
        config = dataclasses.replace(base_config, n_elem=n_elem)
        series = run_simulation(config)
        err = series.l2[-1]
        order = None
        if prev_error is not None and err > 0:
            order = float(np.log(prev_error / err) / np.log(n_elem / prev_n))
        rows.append(EocRow(n_elem=n_elem, l2_error=err, order=order))
        prev_error, prev_n = err, n_elem
    return rows


def stability_scan(template: RunConfig, cfl_grid, schemes=None) -> dict:
    """Empirical largest stable cfl_safety per scheme.

    Runs the template at every cfl value in the (increasing) grid and
    reports the largest one that neither blows up nor shows error growth
    past a fixed cap over the scan horizon. Returns scheme -> cfl (or
    None when even the smallest grid value is unstable).
    """
    cfl_grid = list(cfl_grid)
    if any(b <= a for a, b in zip(cfl_grid, cfl_grid[1:])):
        raise ConfigError("cfl grid must be increasing")
    if schemes is None:
        schemes = [Scheme.ADER, Scheme.LW_D1, Scheme.LW_D2]
    thresholds = {}
    for scheme in schemes:
        largest = None
        for cfl in cfl_grid:
            config = dataclasses.replace(template, scheme=scheme,
                                         cfl_safety=cfl)
            try:
                series = run_simulation(config)
            except BlowUpError:
                break
            if series.linf[-1] > _SCAN_ERROR_LIMIT:
                break
            largest = cfl
        thresholds[scheme] = largest
    return thresholds
