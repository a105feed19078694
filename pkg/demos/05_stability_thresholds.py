# Scan the time-step safety factor upward until each scheme blows up.
# The predictor-corrector scheme and the Taylor scheme with D2 dissipation
# share one threshold (they are the same linear operator); the D1 variant
# gives up earlier. Takes a minute or so: every grid point is a full run.
from fr1d import RunConfig, Scheme, stability_scan

GRID = [round(0.40 + 0.05 * k, 2) for k in range(13)]  # 0.40 .. 1.00

for degree in (1, 2):
    template = RunConfig(degree=degree, n_elem=50, ic="wavepacket",
                         speed=1.0, cfl_safety=0.5, t_final=15.0,
                         record_interval=10**9)
    thresholds = stability_scan(template, GRID)
    print(f"degree {degree}:")
    for scheme, cfl in thresholds.items():
        print(f"  {scheme.value:6s} largest stable cfl_safety = {cfl}")
