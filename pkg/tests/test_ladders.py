from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from intertwining.diffop import DiffOp, SampleSpec, apply, equal_numeric, residual
from intertwining.expr import Sym, cos, coth, evaluate, sec, sin, tan, cot, tanh
from intertwining.ladders import (BASE_FAMILIES, FAMILIES, H, HatPoly, Letter, X1, X2, apply_poly,
                                  apply_poly_theta, bracket_groups, casimir_poly, commutator, conjugate_letter,
                                  delta, diagonal_eigenvalue, effective_ell, ladder_op, lambda_const,
                                  quadratic_algebra_relations, realize_poly, reflect, reflect_conjugate, shift,
                                  so6_symmetrized, word)
from intertwining.spectra import excited_1d, ground_state, raise_state
from intertwining.systems import Ell, System, chart, quantum_hamiltonian, separated_hamiltonian

HALF = Fraction(1, 2)
TH, XI = Sym("theta"), Sym("xi")
SEP = SampleSpec(domain=((0.05, 1.5),))
rationals = st.fractions(-3, 3, max_denominator=4)
triples = st.builds(Ell, rationals, rationals, rationals)


def test_a_minus_closed_form():
    op = ladder_op("hyperboloid", "A", "-", (HALF, HALF, 0), form="separated")
    want = DiffOp(("theta",), {(1,): -1, (0,): -tan(TH) + cot(TH)})
    assert equal_numeric(op, want, SEP).passed


@pytest.mark.parametrize("sign", [1, -1])
def test_hyperboloid_b_in_primary_chart(sign):
    l0, l1, l2 = Fraction(1, 3), Fraction(2, 5), Fraction(-3, 7)
    op = ladder_op("hyperboloid", "B", "+" if sign > 0 else "-", (l0, l1, l2))
    want = DiffOp(("theta", "xi"), {
        (0, 1): sign * cos(TH),
        (1, 0): -sign * sin(TH) * coth(XI),
        (0, 0): (l2 + HALF) * tanh(XI) * cos(TH) + (l0 + HALF) * coth(XI) * sec(TH)})
    assert equal_numeric(op, want, chart("hyperboloid").sample_spec()).passed


@pytest.mark.parametrize("sign", [1, -1])
def test_tilde_a_closed_form(sign):
    l0, l1 = Fraction(1, 3), Fraction(2, 5)
    op = ladder_op("hyperboloid", "A~", "+" if sign > 0 else "-", (l0, l1, 0), form="separated")
    want = DiffOp(("theta",), {(1,): sign, (0,): -(-l0 + HALF) * tan(TH) + (l1 + HALF) * cot(TH)})
    assert equal_numeric(op, want, SEP).passed


def test_lambda_examples():
    assert lambda_const("hyperboloid", "A", (0, 0, 0)) == 1
    assert lambda_const("hyperboloid", "B", (0, 0, -3)) == -4
    assert lambda_const("hyperboloid", "A~", (1, 0, 0)) == 0


def test_shift_examples():
    ell = Ell(2, 0, -5)
    assert shift("hyperboloid", "A", "+", shift("hyperboloid", "A", "-", ell)) == ell
    assert shift("hyperboloid", "C", "-", (Fraction(7, 3), 1, -4)) == Ell(Fraction(7, 3), 0, -3)
    assert shift("hyperboloid", "A~", "-", (1, 0, 5)) == Ell(0, 1, 5)


def test_diagonal_examples():
    assert diagonal_eigenvalue("A", (2, 1, 0)) == Fraction(-3, 2)
    assert diagonal_eigenvalue("Cp", (0, 0, -3)) == -3


@given(st.sampled_from(list(System)), triples)
def test_diagonal_linear_relation(system, ell):
    a, b, c = (diagonal_eigenvalue(k, ell, system) for k in "ABC")
    assert a - b + c == 0


@given(triples, st.integers(0, 2))
def test_reflection_involution(ell, axis):
    assert reflect(reflect(ell, axis), axis) == ell


def test_reflection_tables():
    assert reflect_conjugate("hyperboloid", 2, "C", "+") == (-1, "C~", "-")
    assert reflect_conjugate("hyperboloid", 2, "C", "-") == (-1, "C~", "+")
    assert [reflect_conjugate("sphere", 1, f, r) for f in "ABC" for r in "+-"] == [
        (1, "A~", "+"), (1, "A~", "-"), (1, "B", "+"), (1, "B", "-"), (1, "C~", "+"), (1, "C~", "-")]


@given(st.sampled_from(list(System)), st.integers(0, 2), st.sampled_from(FAMILIES), st.sampled_from("+-0"))
def test_conjugation_is_involution(system, axis, fam, role):
    sg, f2, r2 = reflect_conjugate(system, axis, fam, role)
    sg2, f3, r3 = reflect_conjugate(system, axis, f2, r2)
    assert (sg * sg2, f3, r3) == (1, fam, role)


@given(st.sampled_from(list(System)), st.sampled_from(FAMILIES), triples)
def test_shift_pairs_are_inverse(system, fam, ell):
    assert shift(system, fam, "-", shift(system, fam, "+", ell)) == ell


# identities on random parameters ------------------------------------------------------

@given(st.sampled_from(list(System)), st.sampled_from(FAMILIES), st.sampled_from("+-"), triples)
def test_intertwining(system, fam, sign, ell):
    up = ell + delta(system, fam)
    spec = chart(system).sample_spec(n_samples=20)
    h0, h1 = quantum_hamiltonian(system, ell), quantum_hamiltonian(system, up)
    k = ladder_op(system, fam, sign, ell)
    lhs, rhs = (k @ h0, h1 @ k) if sign == "-" else (k @ h1, h0 @ k)
    assert residual(lhs, rhs, spec) < 1e-9


@given(st.sampled_from(list(System)), st.sampled_from(FAMILIES), triples)
def test_factorization_and_refactorization(system, fam, ell):
    base = fam.rstrip("~")
    kinds = ("hyp",) if system is System.HYPERBOLOID and base != "A" else ("trig",)
    spec = SampleSpec(domain=((0.05, 1.5),), kinds=kinds, n_samples=20)
    h = separated_hamiltonian(system, base, effective_ell(system, fam, ell))
    kp, km = (ladder_op(system, fam, s, ell, form="separated") for s in "+-")
    assert residual(kp @ km + DiffOp.identity(h.variables).scale(lambda_const(system, fam, ell)), h, spec) < 1e-9
    src = ell - delta(system, fam)
    kp2, km2 = (ladder_op(system, fam, s, src, form="separated") for s in "+-")
    lam = lambda_const(system, fam, src)
    assert residual(km2 @ kp2 + DiffOp.identity(h.variables).scale(lam), h, spec) < 1e-9


# hat algebra -------------------------------------------------------------------------

def test_hat_poly_arithmetic():
    p = H("A+ A-") - H("A- A+")
    assert commutator(H("A+"), H("A-")).terms == p.terms
    assert (H("A") * 0).terms == {}
    assert word("C+ A+") == (Letter("C", "+"), Letter("A", "+"))
    with pytest.raises(ValueError):
        Letter.parse("Q+")


def test_su2_bracket_on_states():
    # [A+, A-] f = 2 A f = -(l0 + l1) f
    st_ = ground_state("hyperboloid", (1, 0, -4))
    got, _ = apply_poly("hyperboloid", commutator(H("A+"), H("A-")), st_.expr, st_.ell)
    pts = st_.sample_spec().points(st_.variables)
    assert np.max(np.abs(evaluate(got, pts) + 1.0 * evaluate(st_.expr, pts))) < 1e-12


def test_theta_casimir_matches_hamiltonian():
    for l0, l1, n in [(1, 0, 0), (Fraction(3, 2), Fraction(1, 2), 1), (2, 1, 2)]:
        s = excited_1d(l0, l1, n)
        pts = s.sample_spec().points(s.variables)
        c = evaluate(apply_poly_theta(casimir_poly("su2"), s.expr, s.ell), pts)
        h = evaluate(apply(s.hamiltonian(), s.expr), pts)
        f = evaluate(s.expr, pts)
        assert np.max(np.abs(h - 4 * (c + f / 4))) < 1e-10 * np.max(np.abs(h))


def test_so6_symmetrized_on_sphere_states():
    g = ground_state("sphere", (1, 0, 1))
    for s in [g] + [r for r in (raise_state(g, f) for f in FAMILIES) if r is not None]:
        pts = s.sample_spec().points(s.variables)
        sv = evaluate(apply_poly("sphere", so6_symmetrized(), s.expr, s.ell)[0], pts)
        f = evaluate(s.expr, pts)
        assert np.max(np.abs(sv + 15 / 4 * f - float(s.energy) * f)) < 1e-9 * np.max(np.abs(sv))


def test_quadratic_relation_variants():
    stated = quadratic_algebra_relations("stated")
    exact = quadratic_algebra_relations("exact")
    assert [r[0] for r in stated] == [r[0] for r in exact]
    assert len(stated) == 10 and len(bracket_groups(stated)) == 8
    differing = [a[0] for a, b in zip(stated, exact) if (a[2] - b[2]).terms]
    assert differing == ["[X2,Y1]", "[X2,Y2]", "[X3,Y1]", "[X3,Y2]"]
    with pytest.raises(ValueError):
        quadratic_algebra_relations("other")


def test_integral_words_preserve_index():
    ell = Ell(1, 0, 2)
    for p in (X1, X2, H("A+ C+ B-"), H("B+ C- A-")):
        _, tgt = realize_poly("sphere", p, ell)
        assert tgt == ell


def test_conjugate_letter_signs():
    p = conjugate_letter("hyperboloid", 2, Letter("C", "+"))
    assert p.terms == {(Letter("C~", "-"),): -1}
    assert isinstance(p, HatPoly)


def test_base_families():
    assert BASE_FAMILIES == ("A", "B", "C")
