import json
import math
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from intertwining.diffop import apply
from intertwining.expr import evaluate
from intertwining.ladders import ladder_op
from intertwining.quadrature import DivergentIntegral
from intertwining.spectra import (IurDescriptor, InvalidState, apply_letters, bound_levels, degenerate_pair,
                                  eigen_residual, energy, excited_1d, gram_determinant, ground_state, lattice,
                                  lattice_csv, lattice_json, normalize, raise_state, raw_norm_squared,
                                  spectrum_csv, su21_multiplicity, total_states, with_normalization)
from intertwining.systems import Ell

F = Fraction


def shell_points(q):
    """Integer points with |x|+|y|+|z| = q, by brute force."""
    r = range(-q, q + 1)
    return [(x, y, z) for x, y, z in product(r, r, r) if abs(x) + abs(y) + abs(z) == q]


def so6_states(q):
    return sum((k + 1) * len(shell_points(q - 2 * k)) for k in range(q // 2 + 1))


def test_hyperboloid_ground_state_is_annihilated():
    g = ground_state("hyperboloid", (0, 0, -3))
    pts = g.sample_spec().points(g.variables)
    scale = np.max(np.abs(g.values(pts)))
    for fam in "ABC":
        out = evaluate(apply(ladder_op("hyperboloid", fam, "-", g.ell), g.expr), pts)
        assert np.max(np.abs(out)) < 1e-10 * max(scale, 1.0)
    assert g.energy == F(-3, 4)


def test_rejects_non_normalizable_ground_state():
    with pytest.raises(InvalidState, match="l0 \\+ l2 < -5/2"):
        ground_state("hyperboloid", (0, 0, -2))
    with pytest.raises(InvalidState):
        ground_state("sphere", (F(1, 2), 0, 0))


def test_sphere_ground_state_closed_form():
    s = ground_state("sphere", (0, 0, 0))
    pts = {"theta": np.array([0.3, 0.9]), "phi": np.array([0.4, 1.2])}
    want = np.sqrt(np.cos(pts["theta"]) * np.sin(pts["theta"]) * np.sin(pts["phi"])) * np.cos(pts["phi"])
    assert np.allclose(s.values(pts), want, rtol=1e-14)
    assert s.energy == F(15, 4)


def test_excited_1d_examples():
    assert excited_1d(1, 0, 0).expr is not None
    e = excited_1d(0, 0, 1)
    assert e.energy == 9 and eigen_residual(e) < 1e-9
    assert excited_1d(1, 1, 0).energy == 9
    with pytest.raises(InvalidState):
        excited_1d(-1, 0, 0)


@given(st.fractions(F(-1, 2), 3, max_denominator=4), st.fractions(F(-1, 2), 3, max_denominator=4),
       st.integers(0, 3))
def test_excited_1d_eigen_residual(l0, l1, n):
    assert eigen_residual(excited_1d(l0, l1, n)) < 1e-8


def test_raising_records_word_and_energy():
    f = raise_state(excited_1d(1, 0, 0))
    assert f.word == ("A+",) and f.ell == Ell(0, -1, 0)
    assert eigen_residual(f) < 1e-9


@pytest.mark.parametrize("l0,l1", [(1, 0), (1, 1), (2, 1), (2, 0)])
def test_su2_tower_terminates(l0, l1):
    s, steps = excited_1d(l0, l1, 0), 0
    while (s := raise_state(s)) is not None:
        assert eigen_residual(s) < 1e-8
        steps += 1
        assert steps < 10
    assert steps == l0 + l1


def test_degenerate_pair_is_independent():
    a, b = degenerate_pair()
    assert a.ell == b.ell == Ell(0, 0, -5)
    assert a.word == ("C+", "A+") and b.word == ("A+", "C+")
    assert a.energy == b.energy == F(-3, 4)
    assert eigen_residual(a) < 1e-8 and eigen_residual(b) < 1e-8
    assert gram_determinant([a, b]) > 1e-6
    assert gram_determinant([a, a]) < 1e-8


def test_two_letter_words_match_multiplicity():
    phi = ground_state("hyperboloid", (1, 0, -4))
    words = [w for w in ("C+ A+", "A+ C+") if apply_letters(phi, w) is not None]
    mult = {p.ell: p.mult for p in lattice("hyperboloid", IurDescriptor.su21((1, 0, -4)))}
    assert len(words) == mult[Ell(0, 0, -5)] == 2


def test_energy_examples():
    assert energy("hyperboloid", (0, 0, -3)) == F(-3, 4)
    assert energy("hyperboloid", (1, 0, -4)) == F(-3, 4)
    assert energy("sphere", IurDescriptor.so6(1)) == F(35, 4)
    # (q + 3/2)(q + 5/2) at q = 3; 63/4 belongs to q = 2
    assert energy("sphere", IurDescriptor.so6(3)) == F(99, 4)
    assert energy("sphere", IurDescriptor.so6(2)) == F(63, 4)
    assert energy("sphere", IurDescriptor.su3(2, 1)) == F(99, 4)


@pytest.mark.parametrize("ell", [(0, 0, 3), (3, 0, 0), (2, 0, 1), (1, 0, 2)])
def test_q3_energy_by_residual(ell):
    from dataclasses import replace
    g = ground_state("sphere", ell)
    assert g.energy == F(99, 4) and eigen_residual(g) < 1e-10
    assert eigen_residual(replace(g, energy=F(63, 4))) > 1


@pytest.mark.parametrize("q", range(5))
def test_so6_counts_against_brute_force(q):
    pts = lattice("sphere", IurDescriptor.so6(q))
    assert total_states(pts) == so6_states(q)
    if q:
        assert len(shell_points(q)) == 4 * q * q + 2
        assert sum(p.mult == 1 for p in pts) == 4 * q * q + 2


def test_so6_reference_counts():
    assert [total_states(lattice("sphere", IurDescriptor.so6(q))) for q in (1, 2, 3)] == [6, 20, 50]
    q3 = lattice("sphere", IurDescriptor.so6(3))
    assert sum(p.mult == 1 for p in q3) == 38 and sum(p.mult == 2 for p in q3) == 6


@pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (1, 1), (2, 1), (3, 0)])
def test_su3_counts_weyl(m, n):
    pts = lattice("sphere", IurDescriptor.su3(m, n))
    assert total_states(pts) == (m + 1) * (n + 1) * (m + n + 2) // 2


def test_su2_lattice_dimension():
    assert len(lattice("sphere", IurDescriptor.su2(1, 0))) == 2


def test_su21_plane_and_multiplicity():
    iur = IurDescriptor.su21((1, 0, -4), c_max=2)
    pts = lattice("hyperboloid", iur)
    assert {p.ell.l0 + p.ell.l2 for p in pts} == {F(-3)} or all(
        energy("hyperboloid", (p.ell.l0, 0, p.ell.l2)) for p in pts)
    assert all(p.mult >= 1 for p in pts)
    assert su21_multiplicity(1, 1, 1) == 2 and su21_multiplicity(0, 1, 1) == 1


def test_so42_shells():
    pts = lattice("hyperboloid", IurDescriptor.so42(-3, extent=1, shells=2))
    apexes = sorted((p for p in pts if p.ell.l0 == p.ell.l1 == 0), key=lambda p: -p.ell.l2)
    assert [(p.ell.l2, p.mult) for p in apexes] == [(-3, 1), (-5, 2)]


def test_lattice_rejections():
    with pytest.raises(ValueError):
        lattice("hyperboloid", IurDescriptor.so6(1))
    with pytest.raises(ValueError):
        lattice("sphere", IurDescriptor.so6(F(1, 2)))
    with pytest.raises(ValueError):
        IurDescriptor("so5", (0, 0, 0))


def test_lattice_exports():
    doc = json.loads(lattice_json("sphere", IurDescriptor.so6(1)))
    assert set(doc) == {"system", "iur", "points", "energy_num", "energy_den"}
    assert (doc["energy_num"], doc["energy_den"]) == (35, 4)
    assert len(doc["points"]) == 6 and set(doc["points"][0]) == {"l0", "l1", "l2", "mult"}
    csv = lattice_csv(lattice("sphere", IurDescriptor.so6(1)))
    assert csv.splitlines()[0] == "l0,l1,l2,mult" and len(csv.splitlines()) == 7


def test_bound_levels():
    recs = bound_levels("hyperboloid", (0, 0, -9))
    assert [r.energy for r in recs] == [F(-195, 4), F(-99, 4), F(-35, 4), F(-3, 4)]
    assert [r.degeneracy for r in recs] == [1, 2, 3, 4]
    assert bound_levels("hyperboloid", (0, 0, -2)) == []
    assert len(bound_levels("sphere", (0, 0, 0), max_levels=3)) == 3
    rows = spectrum_csv(recs).splitlines()
    assert rows[0] == "system,l0,l1,l2,level,energy,degeneracy" and rows[1].endswith("-195/4,1")


def test_normalize_analytic():
    # integral of cos^2 sin^2 over (0, pi/2) is pi/16
    n, res = normalize(excited_1d(F(1, 2), F(1, 2), 0))
    assert abs(n - 4 / math.sqrt(math.pi)) < 1e-10 and res < 1e-10


def test_normalize_idempotent():
    s = with_normalization(excited_1d(F(1, 2), F(1, 2), 0))
    n, _ = normalize(s)
    assert abs(n - 1) < 1e-10


def test_hyperboloid_norm_finite_and_divergence():
    n, res = normalize(ground_state("hyperboloid", (0, 0, -3)))
    assert math.isfinite(n) and res < 1e-8
    from intertwining.expr import Sym, cos, cosh, mul, power, sin, sinh
    th, xi = Sym("theta"), Sym("xi")
    bad = mul(power(cos(th), F(1, 2)), power(sin(th), F(1, 2)), power(cosh(xi), F(-3, 2)), sinh(xi))
    with pytest.raises(DivergentIntegral):
        raw_norm_squared(bad, "hyperboloid")
