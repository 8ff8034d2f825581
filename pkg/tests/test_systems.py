import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from intertwining.diffop import DiffOp, apply, bracket, equal_numeric, residual
from intertwining.expr import Sym, cos, evaluate, mul, power, sin
from intertwining.systems import (CHARTS, Ell, System, chart, chart_equivalence, chart_metadata, generators,
                                  quantum_hamiltonian, radial_hamiltonian, separated_hamiltonian)

HALF = Fraction(1, 2)


def test_hyperboloid_j2_is_theta_derivative():
    j2 = generators("hyperboloid")[2]
    assert j2.terms == DiffOp.partial(("theta", "xi"), "theta").terms


@pytest.mark.parametrize("name", ["theta_xi", "psi_chi", "phi_beta"])
def test_so21_table_in_every_chart(name):
    j0, j1, j2 = generators("hyperboloid", name)
    spec = chart("hyperboloid", name).sample_spec()
    assert residual(bracket(j0, j1), j2.scale(-1), spec) < 1e-10
    assert residual(bracket(j2, j0), j1, spec) < 1e-10
    assert residual(bracket(j1, j2), j0, spec) < 1e-10


@pytest.mark.parametrize("name", ["theta_phi", "xi_psi", "eta_beta"])
def test_so3_table_in_every_chart(name):
    j0, j1, j2 = generators("sphere", name)
    spec = chart("sphere", name).sample_spec()
    assert residual(bracket(j0, j1), j2, spec) < 1e-10
    assert residual(bracket(j1, j2), j0, spec) < 1e-10
    assert residual(bracket(j2, j0), j1, spec) < 1e-10


def test_chart_system_mismatch():
    with pytest.raises(ValueError):
        chart("sphere", "theta_xi")


@pytest.mark.parametrize("system", ["hyperboloid", "sphere"])
def test_half_parameters_leave_kinetic_operator(system):
    h = quantum_hamiltonian(system, (HALF, HALF, HALF))
    # no multiplicative term left
    assert (0, 0) not in h.terms


def test_hyperboloid_hamiltonian_hand_expansion():
    ell = (1, 0, -3)
    h = quantum_hamiltonian("hyperboloid", ell)
    t, x = 0.6, 0.8
    f = mul(power(sin(Sym("theta")), Fraction(3, 2)), power(cos(Sym("xi")), 2))
    got = float(evaluate(apply(h, f), {"theta": t, "xi": x}))
    # f = sin^{3/2} t cos^2 x, derivatives by hand
    s, c = math.sin(t), math.cos(t)
    f0 = s ** 1.5 * math.cos(x) ** 2
    f_t = 1.5 * s ** 0.5 * c * math.cos(x) ** 2
    f_tt = (0.75 * s ** -0.5 * c * c - 1.5 * s ** 1.5) * math.cos(x) ** 2
    f_x = -s ** 1.5 * math.sin(2 * x)
    f_xx = -2 * s ** 1.5 * math.cos(2 * x)
    l0, l1, l2 = ell
    want = (-f_xx - f_x / math.tanh(x) - (l2 ** 2 - 0.25) / math.cosh(x) ** 2 * f0
            + (-f_tt + (l1 ** 2 - 0.25) / s ** 2 * f0 + (l0 ** 2 - 0.25) / c ** 2 * f0) / math.sinh(x) ** 2)
    del f_t
    assert got == pytest.approx(want, rel=1e-12)


@pytest.mark.parametrize("system,other", [("hyperboloid", "psi_chi"), ("hyperboloid", "phi_beta"),
                                          ("sphere", "xi_psi"), ("sphere", "eta_beta")])
def test_hamiltonian_chart_equivalence(system, other):
    ell = (Fraction(1, 3), Fraction(2, 5), Fraction(-3, 7))
    a, b = chart(system), chart(system, other)
    rep = chart_equivalence(quantum_hamiltonian(system, ell), a, quantum_hamiltonian(system, ell, other), b)
    assert rep.passed, rep.max_residual


def test_separated_examples():
    h = separated_hamiltonian("hyperboloid", "A", (HALF, HALF, 0))
    assert h.terms == {(2,): h.terms[(2,)]} and len(h.terms) == 1
    f0 = mul(power(cos(Sym("theta")), Fraction(3, 2)), power(sin(Sym("theta")), Fraction(5, 2)))
    hf = separated_hamiltonian("hyperboloid", "A", (1, 2, 0))
    pts = {"theta": np.linspace(0.1, 1.4, 25)}
    assert np.max(np.abs(evaluate(apply(hf, f0), pts) - 16 * evaluate(f0, pts))) < 1e-10
    assert (separated_hamiltonian("sphere", "A", (1, 2, 5)).terms
            == separated_hamiltonian("hyperboloid", "A", (1, 2, -5)).terms)


def test_separation_identity_hyperboloid():
    # (H - E) f g = (1/sinh^2 xi) g (H^theta - alpha) f + f (H^xi_alpha - E) g for product probes
    ell = (Fraction(1, 3), Fraction(2, 5), Fraction(-3, 7))
    alpha, e = Fraction(7, 3), Fraction(-5, 2)
    f = mul(power(cos(Sym("theta")), Fraction(3, 2)), power(sin(Sym("theta")), Fraction(1, 2)))
    g = power(Sym("xi"), 3)
    spec = chart("hyperboloid").sample_spec()
    pts = spec.points(("theta", "xi"))
    h = quantum_hamiltonian("hyperboloid", ell)
    lhs = evaluate(apply(h, mul(f, g)), pts) - float(e) * evaluate(mul(f, g), pts)
    ht = separated_hamiltonian("hyperboloid", "A", ell)
    th_part = evaluate(apply(ht, f), {"theta": pts["theta"]}) - float(alpha) * evaluate(f, pts)
    radial = radial_hamiltonian("hyperboloid", ell, alpha)
    xi_part = evaluate(apply(radial, g), pts) - float(e) * evaluate(g, pts)
    rhs = evaluate(g, pts) * th_part / np.sinh(pts["xi"]) ** 2 + evaluate(f, pts) * xi_part
    assert np.max(np.abs(lhs - rhs)) < 1e-9 * (1 + np.max(np.abs(lhs)))


@given(st.sampled_from(["hyperboloid", "sphere"]), st.integers(0, 2),
       st.fractions(-3, 3, max_denominator=4), st.fractions(-3, 3, max_denominator=4),
       st.fractions(-3, 3, max_denominator=4))
def test_reflection_symmetry(system, axis, a, b, c):
    ell = Ell(a, b, c)
    spec = chart(system).sample_spec(n_samples=20)
    assert equal_numeric(quantum_hamiltonian(system, ell), quantum_hamiltonian(system, ell.reflect(axis)),
                         spec).passed


def test_chart_metadata_is_json():
    doc = json.loads(json.dumps(chart_metadata()))
    assert {d["name"] for d in doc} == set(CHARTS)
    for d in doc:
        for lo, hi in d["domain"]:
            assert hi > lo


def test_system_parse():
    assert System.parse("sphere") is System.SPHERE
    with pytest.raises(ValueError):
        System.parse("torus")
