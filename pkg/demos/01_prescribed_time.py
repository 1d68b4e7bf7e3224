"""Hit a user-chosen settling deadline regardless of where the players start.

Runs the bundled five-player energy allocation game on a fixed ring with
the static-gain seeking law.  The law multiplies the usual consensus plus
gradient field by a time-varying factor that blows up like 1/(T - t), so
the relative error is driven below one percent at exactly t = T = 1.2 s
and stays there.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ptnash.harness import run
from ptnash.scenario import load_scenario, resolve_scenario

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

scenario = load_scenario(resolve_scenario("energy_static"))
T = scenario.seeker.prescribed_time
print(f"scenario {scenario.name}: {scenario.game.player_count} players, "
      f"deadline T = {T} s, consensus gain kappa = {scenario.seeker.kappa}")

result = run(scenario, out_dir=out / "prescribed_time")
record = result.record
x_star = result.oracle.x_star
print(f"equilibrium x* = {x_star.round(4)}")

idx_T = record.sample_index_at(T)
print(f"relative error at the deadline: {record.rel_errors[idx_T]:.2e}")
print(f"relative error one second later: "
      f"{record.rel_errors[record.sample_index_at(T + 1.0)]:.2e}")
print(f"settling time to 1e-2: {record.convergence_time(1e-2):.3f} s")

# Each player's own-action estimate is the diagonal of its estimate row.
own = np.stack([record.states[:, i, i] for i in range(5)], axis=1)

fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(7, 7), sharex=True)
for i in range(5):
    ax1.plot(record.times, own[:, i], label=f"player {i + 1}")
    ax1.axhline(x_star[i], color="gray", lw=0.5, ls=":")
ax1.axvline(T, color="red", lw=1, ls="--", label="deadline T")
ax1.set_ylabel("own action estimate")
ax1.legend(loc="lower right", fontsize=8)
ax1.set_title("Actions reach the equilibrium by the deadline")

ax2.semilogy(record.times, np.maximum(record.rel_errors, 1e-16))
ax2.axvline(T, color="red", lw=1, ls="--")
ax2.axhline(1e-2, color="gray", lw=0.5, ls=":")
ax2.set_xlabel("time [s]")
ax2.set_ylabel("relative error")
fig.tight_layout()
fig.savefig(out / "01_prescribed_time.png", dpi=120)
print(f"wrote {out / '01_prescribed_time.png'} and "
      f"{out / 'prescribed_time'}/trajectory.csv, summary.json")
