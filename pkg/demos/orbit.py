"""Closed-form sphere orbit against RK4, with the integrals along the way."""

import numpy as np

from intertwining.classical import OrbitParams, hj_orbit, orbit_phase_point, rk4_orbit, trajectory_rows

p = OrbitParams(E=20.0, alpha1=20 / 3, beta1=0.1)
rows = np.array(trajectory_rows(p, 400))
print("period", p.period)
for name, col in zip(("H", "Q1", "Q2", "Q3"), rows[:, 3:].T):
    print(f"{name}: mean {col.mean():.9f}  spread {np.ptp(col):.1e}")

n = 2000
tr = rk4_orbit("sphere", (p.m0, p.m1, p.m2), orbit_phase_point(p, 0.0), p.period / n, n)
f1, f2 = hj_orbit("sphere", p, tr[:, 0])
print(f"max |closed form - RK4| = {max(np.abs(f1 - tr[:, 1]).max(), np.abs(f2 - tr[:, 2]).max()):.1e}")
