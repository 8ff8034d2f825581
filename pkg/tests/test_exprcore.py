import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from intertwining.expr import (FUNCTIONS, Add, Const, DomainError, Func, Mul, Pow, Sym, UnboundSymbolError,
                               add, cos, coth, diff, evaluate, from_prefix, jacobi_poly, mul, power, sin,
                               sinh, cosh, tan, to_prefix)

TH, XI, PHI, X = Sym("theta"), Sym("xi"), Sym("phi"), Sym("x")


def admissible(e) -> bool:
    if isinstance(e, Const):
        return isinstance(e.value, Fraction)
    if isinstance(e, Sym):
        return True
    if isinstance(e, Func):
        return e.name in FUNCTIONS and admissible(e.arg)
    if isinstance(e, (Add, Mul)):
        return all(admissible(c) for c in e.children)
    if isinstance(e, Pow):
        return isinstance(e.exponent, Fraction) and admissible(e.base)
    return False


def test_eval_trivial_values():
    assert evaluate(sin(TH), {"theta": math.pi / 2}) == pytest.approx(1.0, abs=1e-15)
    assert evaluate(coth(XI), {"xi": math.log(2)}) == pytest.approx(5 / 3, rel=1e-14)
    e = add(mul(power(cos(PHI), 2), tan(PHI)), -mul(sin(PHI), cos(PHI)))
    assert abs(evaluate(e, {"phi": 0.7})) < 1e-15


def test_unbound_symbol_raises():
    with pytest.raises(UnboundSymbolError):
        evaluate(mul(Sym("l0"), sin(TH)), {"theta": 0.3})


def test_pole_raises_instead_of_nan():
    with pytest.raises(DomainError):
        evaluate(coth(XI), {"xi": 0.0})
    with pytest.raises(DomainError):
        evaluate(power(sin(TH), Fraction(-1)), {"theta": 0.0})


def test_constants_stay_exact():
    e = mul(Fraction(1, 3), power(sin(TH), Fraction(3, 2)))
    assert admissible(e)
    assert admissible(diff(e, "theta"))


def test_derivative_examples():
    assert evaluate(diff(tan(TH), "theta"), {"theta": 0.0}) == pytest.approx(1.0)
    ident = add(diff(coth(XI), "xi"), power(coth(XI), 2), -1)
    xs = np.linspace(0.2, 3.0, 17)
    assert np.max(np.abs(evaluate(ident, {"xi": xs}))) < 1e-12


def test_derivative_against_central_difference():
    e = mul(power(cos(TH), Fraction(3, 2)), power(sin(TH), Fraction(1, 2)))
    d = diff(e, "theta")
    rng = np.random.default_rng(7)
    pts = rng.uniform(0.1, 1.4, 40)
    h = 1e-5
    fd = (evaluate(e, {"theta": pts + h}) - evaluate(e, {"theta": pts - h})) / (2 * h)
    assert np.max(np.abs(evaluate(d, {"theta": pts}) - fd)) < 1e-7


def series_jacobi(n, a, b, x):
    # explicit sum with binomials, written independently of the recurrence
    def binom(top, k):
        out = 1.0
        for i in range(k):
            out *= (top - i) / (i + 1)
        return out
    return sum(binom(n + a, n - s) * binom(n + b, s) * ((x - 1) / 2) ** s * ((x + 1) / 2) ** (n - s)
               for s in range(n + 1))


def test_jacobi_examples():
    assert jacobi_poly(0, Fraction(1, 3), 2) == Const(1)
    p = jacobi_poly(1, 0, 0)
    for x in (-0.7, 0.0, 0.4):
        assert evaluate(p, {"x": x}) == pytest.approx(x, abs=1e-15)
    assert abs(evaluate(jacobi_poly(2, 1, 0), {"x": 0.3}) - series_jacobi(2, 1, 0, 0.3)) < 1e-12


@pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (1, 1)])
def test_jacobi_orthogonality(a, b):
    xs, ws = np.polynomial.legendre.leggauss(40)
    p1 = evaluate(jacobi_poly(1, a, b), {"x": xs})
    p2 = evaluate(jacobi_poly(2, a, b), {"x": xs})
    assert abs(np.sum(ws * p1 * p2 * (1 - xs) ** a * (1 + xs) ** b)) < 1e-8


@given(st.integers(0, 6), st.fractions(-Fraction(1, 2), 4, max_denominator=4),
       st.fractions(-Fraction(1, 2), 4, max_denominator=4), st.floats(-0.95, 0.95))
def test_jacobi_recurrence_matches_series(n, a, b, x):
    got = evaluate(jacobi_poly(n, a, b), {"x": x})
    want = series_jacobi(n, float(a), float(b), x)
    assert abs(got - want) < 1e-9 * max(1.0, abs(want))


# random expression corpus ------------------------------------------------------------

_UNARY = [sin, cos, sinh, cosh]


@st.composite
def exprs(draw, depth=3):
    if depth == 0 or draw(st.booleans()):
        leaf = draw(st.sampled_from(["var", "const"]))
        if leaf == "const":
            return Const(draw(st.fractions(-3, 3, max_denominator=5)))
        return TH
    kind = draw(st.sampled_from(["f", "add", "mul", "pow"]))
    if kind == "f":
        return draw(st.sampled_from(_UNARY))(draw(exprs(depth - 1)))
    if kind == "add":
        return add(draw(exprs(depth - 1)), draw(exprs(depth - 1)))
    if kind == "mul":
        return mul(draw(exprs(depth - 1)), draw(exprs(depth - 1)))
    # positive bases keep fractional powers real
    base = add(2, power(draw(exprs(depth - 1)), 2))
    return power(base, draw(st.fractions(-2, 2, max_denominator=3)))


@given(exprs())
def test_differentiation_is_closed(e):
    assert admissible(diff(e, "theta"))


@given(exprs(), st.floats(0.2, 1.3))
def test_symbolic_derivative_matches_finite_difference(e, t):
    h = 1e-5
    fd = (evaluate(e, {"theta": t + h}) - evaluate(e, {"theta": t - h})) / (2 * h)
    d = evaluate(diff(e, "theta"), {"theta": t})
    assert abs(d - fd) <= 1e-6 * max(1.0, abs(d))


@given(exprs())
def test_prefix_round_trip(e):
    assert from_prefix(to_prefix(e)) is e
