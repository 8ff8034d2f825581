"""Count states in so(6) octahedra and su(3) faces, and list an su(2,1) plane."""

from intertwining.spectra import IurDescriptor, energy, lattice, total_states

for q in range(5):
    iur = IurDescriptor.so6(q)
    pts = lattice("sphere", iur)
    print(f"so(6) q={q}: {len(pts):3d} points, {total_states(pts):3d} states, E = {energy('sphere', iur)}")

for m, n in [(1, 0), (1, 1), (2, 1)]:
    print(f"su(3) ({m},{n}): {total_states(lattice('sphere', IurDescriptor.su3(m, n)))} states")

for p in lattice("hyperboloid", IurDescriptor.su21((1, 0, -4), c_max=2)):
    print("su(2,1)", tuple(str(v) for v in p.ell), "mult", p.mult)
