"""Build the two-fold degenerate hyperboloid level at (0,0,-5) by two raising routes."""

from intertwining.spectra import degenerate_pair, eigen_residual, gram_determinant, ground_state

phi = ground_state("hyperboloid", (1, 0, -4))
print("ground state", phi.ell, "energy", phi.energy)
a, b = degenerate_pair()
for s in (a, b):
    print(" ".join(s.word), "->", s.ell, "energy", s.energy, f"residual {eigen_residual(s):.1e}")
print(f"Gram determinant {gram_determinant([a, b]):.4f}")
