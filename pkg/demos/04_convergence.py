# Refinement studies: both single-stage schemes converge at the design
# order N+1 for smooth linear advection, and the predictor-corrector
# scheme does the same for Burgers before shock formation (the exact
# solution comes from following characteristics).
import dataclasses

from fr1d import RunConfig, Scheme, eoc_study

LEVELS = [10, 20, 40, 80]


def show(title, rows):
    print(title)
    print(f"  {'n_elem':>6} {'L2 error':>12} {'order':>6}")
    for row in rows:
        order = "-" if row.order is None else f"{row.order:.3f}"
        print(f"  {row.n_elem:>6} {row.l2_error:>12.4e} {order:>6}")


for degree in (1, 2, 3):
    base = RunConfig(degree=degree, n_elem=10, ic="sine", speed=1.0,
                     cfl_safety=0.4, t_final=1.0, record_interval=10**9)
    for scheme in (Scheme.ADER, Scheme.LW_D2):
        rows = eoc_study(dataclasses.replace(base, scheme=scheme), LEVELS)
        show(f"linear advection, N={degree}, {scheme.value}", rows)

for degree in (1, 2, 3):
    base = RunConfig(degree=degree, n_elem=10, ic="sine", flux="burgers",
                     speed=0.0, cfl_safety=0.1, t_final=0.04,
                     record_interval=10**9)
    rows = eoc_study(base, LEVELS)
    show(f"burgers (pre-shock), N={degree}, ader", rows)
