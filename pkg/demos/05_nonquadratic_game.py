"""A game with exponential and polynomial couplings, and a trap in it.

The bundled nonquadratic five-player game has a triangular structure:
back-substituting its stationarity conditions gives the closed-form
equilibrium (-2 ln 2 - 2, 2 ln 2, 0, -1/2, 5/2).  The game also ships a
widely reproduced reference point, (-4.6589, 4.1589, 0, -2, 2.5), which
is NOT a stationary point of these costs; the pseudo-gradient does not
vanish there.  The oracle and the run report both call this out, and
the trajectories below settle on the oracle value, not the reference.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ptnash.harness import run
from ptnash.oracle import solve_ne
from ptnash.scenario import load_scenario, resolve_scenario

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

scenario = load_scenario(resolve_scenario("nonquadratic_switching"))
game = scenario.game

oracle = solve_ne(game, tol=1e-12)
reference = game.reference_equilibrium
print(f"oracle equilibrium      {oracle.x_star.round(4)}")
print(f"bundled reference point {reference.round(4)}")
print(f"pseudo-gradient norm at the oracle value:     "
      f"{np.linalg.norm(game.pseudo_gradient(oracle.x_star)):.1e}")
print(f"pseudo-gradient norm at the reference point:  "
      f"{np.linalg.norm(game.pseudo_gradient(reference)):.3f}  "
      "(not an equilibrium)")

result = run(scenario, out_dir=out / "nonquadratic")
record = result.record
print(f"\n{result.summary['reference_comparison']['note']}")
settle = record.convergence_time(1e-2)
print(f"settling time to 1e-2 around the oracle value: {settle:.2f} s "
      "(past the 1.2 s deadline; see the switching demo for why)")

own = np.stack([record.states[:, i, i] for i in range(5)], axis=1)
fig, ax = plt.subplots(figsize=(7, 4.5))
for i in range(5):
    line, = ax.plot(record.times, own[:, i], label=f"player {i + 1}")
    ax.axhline(oracle.x_star[i], color=line.get_color(), lw=0.6, ls=":")
ax.axhline(reference[3], color="gray", lw=1.0, ls="--",
           label="reference x4 = -2 (never reached)")
ax.set_xlabel("time [s]")
ax.set_ylabel("own action estimate")
ax.set_title("Actions settle on the oracle equilibrium (dotted lines)")
ax.legend(fontsize=8, loc="center right")
fig.tight_layout()
fig.savefig(out / "05_nonquadratic_game.png", dpi=120)
print(f"wrote {out / '05_nonquadratic_game.png'}")
