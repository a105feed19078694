"""Single-stage high-order flux reconstruction schemes on 1-D grids.

Two time discretizations of the same spatial method: an element-local
implicit space-time predictor with an FR corrector, and an explicit
Taylor expansion of the time average. For linear advection the two agree
to machine precision when the Taylor variant uses the D2 interface
dissipation; a lockstep harness demonstrates this numerically.
"""
from .ader import (ader_step, predictor_time_average, solve_predictor_direct,
                   solve_predictor_picard)
from .basis import (Basis, CorrectionKind, NodeKind, build_basis,
                    differentiation_matrix, lagrange_values, legendre_nodes)
from .driver import (DiffSeries, ErrorSeries, RunConfig, Scheme,
                     compare_schemes, compare_schemes_detailed, compute_dt,
                     eoc_study, run_simulation, stability_scan)
from .errors import (BlowUpError, ConfigError, DataError, EvaluationError,
                     NumericalError)
from .lwfr import DissipationKind, lw_numflux, lwfr_step, time_averaged_solution
from .mesh import (Grid, SolutionField, error_norms, make_grid, node_coords,
                   sample_initial_condition, total_mass)
from .physics import (Burgers, LinearAdvection, ProblemSpec, exact_solution,
                      make_problem, named_initial_condition, upwind_numflux)

__all__ = [
    "ader_step", "predictor_time_average", "solve_predictor_direct",
    "solve_predictor_picard",
    "Basis", "CorrectionKind", "NodeKind", "build_basis",
    "differentiation_matrix", "lagrange_values", "legendre_nodes",
    "DiffSeries", "ErrorSeries", "RunConfig", "Scheme", "compare_schemes",
    "compare_schemes_detailed", "compute_dt", "eoc_study", "run_simulation",
    "stability_scan",
    "BlowUpError", "ConfigError", "DataError", "EvaluationError",
    "NumericalError",
    "DissipationKind", "lw_numflux", "lwfr_step", "time_averaged_solution",
    "Grid", "SolutionField", "error_norms", "make_grid", "node_coords",
    "sample_initial_condition", "total_mass",
    "Burgers", "LinearAdvection", "ProblemSpec", "exact_solution",
    "make_problem", "named_initial_condition", "upwind_numflux",
]

__version__ = "0.1.0"
