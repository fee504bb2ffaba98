"""Ten travelers, k of them pinned to the congested edge: sweep k.

Runs the three reference k-sweeps at n = 10 (classical, phase strategy,
miracle strategy), prints the equilibrium totals side by side, and
writes each series as CSV ready for docs/plot_sweep.gp.

The classical game bottoms out at k = 3 with total 7.5; entangling the
two free players lowers the floor to 7.176... (phase strategy, k = 4,
mixed equilibrium) and 7.15 (miracle strategy, k = 4 and 5, pure
equilibrium).
"""

import math
from pathlib import Path

from pigouq import sweep_k

N = 10
K_RANGE = range(1, 8)
GAMMA = math.pi / 2

runs = {
    "classical": sweep_k("classical", ("P1", "P2"), N, K_RANGE),
    "phase": sweep_k("quantum", ("P1", "P2", "Q"), N, K_RANGE, gamma=GAMMA),
    "miracle": sweep_k("quantum", ("P1", "P2", "M"), N, K_RANGE, gamma=GAMMA),
}

print(f"equilibrium totals, n = {N}, k = 1..7")
print(f"{'k':>3} {'classical':>12} {'phase (Q)':>12} {'miracle (M)':>12}")
for i, k in enumerate(K_RANGE):
    row = [runs[name].reports[i].cost_ne for name in ("classical", "phase", "miracle")]
    print(f"{k:>3} " + " ".join(f"{float(c):>12.6f}" for c in row))

print()
print(f"{'':>3} {'pos/poa':>12} {'pos/poa':>12} {'pos/poa':>12}")
for i, k in enumerate(K_RANGE):
    row = [runs[name].reports[i].pos for name in ("classical", "phase", "miracle")]
    print(f"{k:>3} " + " ".join(f"{float(c):>12.6f}" for c in row))

print()
for name, series in runs.items():
    argmin = [k for k, r in zip(series.values, series.reports) if r.cost_ne == min(x.cost_ne for x in series.reports)]
    print(f"{name:>10}: minimum {float(min(x.cost_ne for x in series.reports)):.6f} at k = {argmin}")

out_dir = Path.cwd()
for name, series in runs.items():
    path = out_dir / f"sweep_k_{name}.csv"
    path.write_text(series.to_csv(), encoding="utf-8")
    print(f"wrote {path}")
