"""Linear differential operators with expression coefficients.

A ``DiffOp`` over variables ``(v1, v2)`` is a finite sum of terms
``c_(a,b) * d^a/dv1^a d^b/dv2^b``.  Composition uses the Leibniz rule, so
products of ladder operators stay exact.  Identities between operators are
checked by applying both sides to probe functions at seeded random points.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .expr import (
    ONE, ZERO, EvaluationError, Expr, add, as_expr, cos, cosh, diff,
    evaluate, jacobi_poly, mul, power, sin, sinh, substitute, tanh, Sym,
)

MAX_ORDER = 4
DEFAULT_SEED = 20090415
DEFAULT_TOL = 1e-9


class OrderOverflow(ValueError):
    """A composition would produce an operator above the supported order."""


class SamplingError(ValueError):
    """Evaluation failed at a sample point (pole, branch cut, empty domain)."""


Index = tuple[int, ...]


def _coeff(value) -> Expr:
    if isinstance(value, float):
        raise TypeError("operator coefficients must be exact; use Fraction")
    return as_expr(value)


class DiffOp:
    """Immutable linear differential operator of order at most ``MAX_ORDER``."""

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Index, object] | Iterable = ()):
        self.variables = tuple(variables)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Index, Expr] = {}
        n = len(self.variables)
        for idx, c in items:
            idx = tuple(int(i) for i in idx)
            if len(idx) != n or min(idx, default=0) < 0:
                raise ValueError(f"bad multi-index {idx} for variables {self.variables}")
            if sum(idx) > MAX_ORDER:
                raise OrderOverflow(f"order {sum(idx)} exceeds {MAX_ORDER}")
            acc[idx] = add(acc.get(idx, ZERO), _coeff(c))
        self._terms = {k: v for k, v in sorted(acc.items()) if v is not ZERO}

    # constructors -------------------------------------------------------------
    @classmethod
    def zero(cls, variables) -> "DiffOp":
        return cls(variables)

    @classmethod
    def identity(cls, variables) -> "DiffOp":
        return cls.multiply(variables, ONE)

    @classmethod
    def multiply(cls, variables, expr) -> "DiffOp":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): expr})

    @classmethod
    def partial(cls, variables, var: str, order: int = 1) -> "DiffOp":
        variables = tuple(variables)
        idx = tuple(order if v == var else 0 for v in variables)
        if var not in variables:
            raise ValueError(f"{var!r} not among {variables}")
        return cls(variables, {idx: ONE})

    # inspection -------------------------------------------------------------
    @property
    def terms(self) -> dict[Index, Expr]:
        return dict(self._terms)

    @property
    def order(self) -> int:
        return max((sum(k) for k in self._terms), default=0)

    def coeff(self, idx: Index) -> Expr:
        return self._terms.get(tuple(idx), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self._terms.items())
        return f"DiffOp({self.variables}, {{{body}}})"

    # algebra -------------------------------------------------------------------
    def _check(self, other: "DiffOp"):
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch {self.variables} vs {other.variables}")

    def __add__(self, other):
        if not isinstance(other, DiffOp):
            other = DiffOp.multiply(self.variables, other)
        self._check(other)
        return DiffOp(self.variables, list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return DiffOp(self.variables, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, DiffOp):
            other = DiffOp.multiply(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "DiffOp":
        c = _coeff(c)
        return DiffOp(self.variables, {k: mul(c, v) for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, DiffOp):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalar * op multiplies coefficients on the left
        return self.scale(other)

    def __matmul__(self, other):
        return compose(self, other)

    def __call__(self, f: Expr) -> Expr:
        return apply(self, f)

    def substitute(self, mapping) -> "DiffOp":
        return DiffOp(self.variables, {k: substitute(v, mapping) for k, v in self._terms.items()})


def _partials(f: Expr, variables: tuple[str, ...], idx: Index) -> Expr:
    out = f
    for v, k in zip(variables, idx):
        if k:
            out = diff(out, v, k)
    return out


def apply(op: DiffOp, f) -> Expr:
    """Act with ``op`` on an expression."""
    f = as_expr(f)
    return add(*(mul(c, _partials(f, op.variables, k)) for k, c in op._terms.items()))


def compose(d1: DiffOp, d2: DiffOp) -> DiffOp:
    """Operator product ``d1 o d2`` via the Leibniz rule."""
    d1._check(d2)
    if d1.order + d2.order > MAX_ORDER:
        raise OrderOverflow(f"composition of orders {d1.order}+{d2.order} exceeds {MAX_ORDER}")
    vs = d1.variables
    out: list[tuple[Index, Expr]] = []
    for a, c1 in d1._terms.items():
        for b, c2 in d2._terms.items():
            for g in np.ndindex(*(ai + 1 for ai in a)):
                w = 1
                for ai, gi in zip(a, g):
                    w *= math.comb(ai, gi)
                dc2 = _partials(c2, vs, g)
                if dc2 is ZERO:
                    continue
                idx = tuple(ai - gi + bi for ai, gi, bi in zip(a, g, b))
                out.append((idx, mul(Fraction(w), c1, dc2)))
    return DiffOp(vs, out)


def bracket(d1: DiffOp, d2: DiffOp, kind: str = "commutator") -> DiffOp:
    if kind == "commutator":
        if d1.variables == d2.variables and d1._terms == d2._terms:
            return DiffOp.zero(d1.variables)
        return compose(d1, d2) - compose(d2, d1)
    if kind == "anticommutator":
        return compose(d1, d2) + compose(d2, d1)
    raise ValueError(f"unknown bracket kind {kind!r}")


# numeric comparison ---------------------------------------------------------------

TRIG, HYP = "trig", "hyp"


def default_probes(variables: Sequence[str], kinds: Sequence[str]) -> list[Expr]:
    """Five probe functions: fractional powers, a Jacobi factor, a coupled one."""

    def s(v, k):
        return sin(Sym(v)) if k == TRIG else sinh(Sym(v))

    def c(v, k):
        return cos(Sym(v)) if k == TRIG else cosh(Sym(v))

    exps = [(Fraction(1, 2), Fraction(3, 2)), (Fraction(3, 2), Fraction(5, 2)),
            (Fraction(5, 2), Fraction(-1, 2))]
    probes = []
    for i, (p, q) in enumerate(exps):
        f = ONE
        for j, (v, k) in enumerate(zip(variables, kinds)):
            pp, qq = (p, q) if j % 2 == 0 else (q + 1, p)
            f = mul(f, power(s(v, k), pp), power(c(v, k), qq + i))
        probes.append(f)
    v0, k0 = variables[0], kinds[0]
    arg = cos(2 * Sym(v0)) if k0 == TRIG else tanh(Sym(v0))
    jac = jacobi_poly(2, Fraction(1, 2), Fraction(-1, 2), arg)
    probes.append(mul(jac, *(power(s(v, k), Fraction(3, 2)) for v, k in zip(variables, kinds))))
    coupled = ONE
    for v, k in zip(variables, kinds):
        coupled = mul(coupled, s(v, k))
    probes.append(mul(power(add(ONE, coupled), Fraction(5, 2)),
                      *(power(c(v, k), -1 if k == HYP else 1) for v, k in zip(variables, kinds))))
    return probes


@dataclass(frozen=True)
class SampleSpec:
    """Where and how operator identities are sampled."""

    domain: tuple[tuple[float, float], ...]
    kinds: tuple[str, ...] = ()
    n_samples: int = 40
    seed: int = DEFAULT_SEED
    tol: float = DEFAULT_TOL
    bindings: Mapping[str, object] = field(default_factory=dict)

    def points(self, variables: Sequence[str]) -> dict[str, np.ndarray]:
        if len(self.domain) != len(variables):
            raise SamplingError("domain and variable count differ")
        for lo, hi in self.domain:
            if not hi > lo:
                raise SamplingError(f"empty sampling interval ({lo}, {hi})")
        rng = np.random.default_rng(self.seed)
        pts = {v: rng.uniform(lo, hi, self.n_samples) for v, (lo, hi) in zip(variables, self.domain)}
        pts.update(self.bindings)
        return pts


@dataclass
class NumericReport:
    lhs: str
    rhs: str
    seed: int
    samples: int
    max_residual: float
    passed: bool
    tol: float = DEFAULT_TOL

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "seed": self.seed, "samples": self.samples,
                "max_residual": self.max_residual, "pass": self.passed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _eval(e: Expr, pts) -> np.ndarray:
    try:
        return np.broadcast_to(np.asarray(evaluate(e, pts), dtype=float),
                               np.shape(next(iter(pts.values()))))
    except EvaluationError as exc:
        raise SamplingError(str(exc)) from exc


def residual(d1: DiffOp, d2: DiffOp, spec: SampleSpec, probes=None) -> float:
    """max |(D1 - D2) f| / (1 + max |D1 f|) over probes and sample points."""
    d1._check(d2)
    kinds = spec.kinds or (TRIG,) * len(d1.variables)
    probes = default_probes(d1.variables, kinds) if probes is None else list(probes)
    pts = spec.points(d1.variables)
    worst = 0.0
    for f in probes:
        a = _eval(apply(d1, f), pts)
        b = _eval(apply(d2, f), pts)
        worst = max(worst, float(np.max(np.abs(a - b)) / (1.0 + np.max(np.abs(a)))))
    return worst


def equal_numeric(d1: DiffOp, d2: DiffOp, spec: SampleSpec, probes=None,
                  lhs: str = "lhs", rhs: str = "rhs") -> NumericReport:
    r = residual(d1, d2, spec, probes)
    return NumericReport(lhs, rhs, spec.seed, spec.n_samples, r, r < spec.tol, spec.tol)
