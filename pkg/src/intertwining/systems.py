"""The two superintegrable systems and their coordinate charts.

Sphere S2 (compact, s0^2+s1^2+s2^2 = 1) and hyperboloid H2 (non-compact,
s2^2-s0^2-s1^2 = 1), each with generic potential
sum_i (l_i^2 - 1/4)/s_i^2 (with the s2 term negated on H2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from .diffop import HYP, TRIG, DiffOp, SampleSpec, SamplingError, NumericReport, _eval, apply
from .expr import (
    ONE, Expr, Sym, add, cos, cosh, coth, evaluate, mul, power, sin, sinh, tan, tanh,
)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
MARGIN = 0.05
HYP_CAP = 3.0


class System(str, Enum):
    SPHERE = "sphere"
    HYPERBOLOID = "hyperboloid"

    @classmethod
    def parse(cls, value) -> "System":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown system {value!r}; expected 'sphere' or 'hyperboloid'") from None


def _frac(v) -> Fraction:
    if isinstance(v, float):
        f = Fraction(v).limit_denominator(1000)
        if abs(float(f) - v) > 1e-12:
            raise ValueError(f"parameter {v} is not a simple rational")
        return f
    return Fraction(v)


@dataclass(frozen=True)
class Ell:
    """Parameter triple (l0, l1, l2) with exact rational entries."""

    l0: Fraction
    l1: Fraction
    l2: Fraction

    def __init__(self, l0, l1=0, l2=0):
        object.__setattr__(self, "l0", _frac(l0))
        object.__setattr__(self, "l1", _frac(l1))
        object.__setattr__(self, "l2", _frac(l2))

    @classmethod
    def of(cls, value) -> "Ell":
        if isinstance(value, Ell):
            return value
        if isinstance(value, str):
            parts = [p.strip() for p in value.replace("(", "").replace(")", "").split(",")]
            if len(parts) != 3:
                raise ValueError(f"expected three comma-separated values, got {value!r}")
            return cls(*(Fraction(p) for p in parts))
        a, b, c = value
        return cls(a, b, c)

    def __iter__(self) -> Iterator[Fraction]:
        return iter((self.l0, self.l1, self.l2))

    def __getitem__(self, i):
        return (self.l0, self.l1, self.l2)[i]

    def __add__(self, other):
        o = Ell.of(other)
        return Ell(self.l0 + o.l0, self.l1 + o.l1, self.l2 + o.l2)

    def __sub__(self, other):
        o = Ell.of(other)
        return Ell(self.l0 - o.l0, self.l1 - o.l1, self.l2 - o.l2)

    def __neg__(self):
        return Ell(-self.l0, -self.l1, -self.l2)

    def reflect(self, axis: int) -> "Ell":
        v = list(self)
        v[axis] = -v[axis]
        return Ell(*v)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.l0, self.l1, self.l2)

    def __str__(self):
        return "(" + ",".join(_fmt(v) for v in self) + ")"


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class Chart:
    name: str
    system: System
    variables: tuple[str, ...]
    kinds: tuple[str, ...]
    domain: tuple[tuple[float, float], ...]
    ambient: tuple[Expr, Expr, Expr]
    inverse: Callable[[np.ndarray, np.ndarray, np.ndarray], tuple[np.ndarray, ...]]

    def sample_spec(self, **kw) -> SampleSpec:
        return SampleSpec(domain=self.domain, kinds=self.kinds, **kw)

    def contains(self, coords) -> np.ndarray:
        ok = np.ones(np.shape(coords[0]), dtype=bool)
        for c, (lo, hi) in zip(coords, self.domain):
            ok &= (c > lo) & (c < hi)
        return ok

    def metadata(self) -> dict:
        return {"name": self.name, "system": self.system.value, "variables": list(self.variables),
                "domain": [list(d) for d in self.domain]}


_TH, _XI, _PHI, _PSI, _CHI, _BETA, _ETA = (Sym(n) for n in ("theta", "xi", "phi", "psi", "chi", "beta", "eta"))
_ANG = (MARGIN, math.pi / 2 - MARGIN)
_RAD = (MARGIN, HYP_CAP)

HYP_THETA_XI = Chart(
    "theta_xi", System.HYPERBOLOID, ("theta", "xi"), (TRIG, HYP), (_ANG, _RAD),
    (sinh(_XI) * cos(_TH), sinh(_XI) * sin(_TH), cosh(_XI)),
    lambda s0, s1, s2: (np.arctan2(s1, s0), np.arccosh(s2)),
)
HYP_PSI_CHI = Chart(
    "psi_chi", System.HYPERBOLOID, ("psi", "chi"), (HYP, HYP), (_RAD, _RAD),
    (cosh(_PSI) * sinh(_CHI), sinh(_PSI), cosh(_PSI) * cosh(_CHI)),
    lambda s0, s1, s2: (np.arcsinh(s1), np.arctanh(s0 / s2)),
)
HYP_PHI_BETA = Chart(
    "phi_beta", System.HYPERBOLOID, ("phi", "beta"), (HYP, HYP), (_RAD, _RAD),
    (sinh(_PHI), cosh(_PHI) * sinh(_BETA), cosh(_PHI) * cosh(_BETA)),
    lambda s0, s1, s2: (np.arcsinh(s0), np.arctanh(s1 / s2)),
)
SPH_THETA_PHI = Chart(
    "theta_phi", System.SPHERE, ("theta", "phi"), (TRIG, TRIG), (_ANG, _ANG),
    (cos(_PHI) * cos(_TH), cos(_PHI) * sin(_TH), sin(_PHI)),
    lambda s0, s1, s2: (np.arctan2(s1, s0), np.arcsin(s2)),
)
# cyclic relabellings of the (theta, phi) chart centred on the other axes
SPH_XI_PSI = Chart(
    "xi_psi", System.SPHERE, ("xi", "psi"), (TRIG, TRIG), (_ANG, _ANG),
    (cos(_PSI) * sin(_XI), sin(_PSI), cos(_PSI) * cos(_XI)),
    lambda s0, s1, s2: (np.arctan2(s0, s2), np.arcsin(s1)),
)
SPH_ETA_BETA = Chart(
    "eta_beta", System.SPHERE, ("eta", "beta"), (TRIG, TRIG), (_ANG, _ANG),
    (sin(_BETA), cos(_BETA) * cos(_ETA), cos(_BETA) * sin(_ETA)),
    lambda s0, s1, s2: (np.arctan2(s2, s1), np.arcsin(s0)),
)

CHARTS = {c.name: c for c in (HYP_THETA_XI, HYP_PSI_CHI, HYP_PHI_BETA, SPH_THETA_PHI, SPH_XI_PSI, SPH_ETA_BETA)}
PRIMARY = {System.HYPERBOLOID: HYP_THETA_XI, System.SPHERE: SPH_THETA_PHI}


def chart(system, name: str | None = None) -> Chart:
    system = System.parse(system)
    if name is None:
        return PRIMARY[system]
    c = CHARTS.get(name)
    if c is None or c.system is not system:
        raise ValueError(f"no chart {name!r} on the {system.value}")
    return c


def chart_metadata() -> list[dict]:
    return [c.metadata() for c in CHARTS.values()]


# generators -------------------------------------------------------------------

def _op(ch: Chart, first=None, second=None) -> DiffOp:
    v1, v2 = ch.variables
    terms = {}
    if first is not None:
        terms[(1, 0)] = first
    if second is not None:
        terms[(0, 1)] = second
    return DiffOp(ch.variables, terms)


def generators(system, chart_name: str | None = None) -> tuple[DiffOp, DiffOp, DiffOp]:
    """(J0, J1, J2) as first-order operators in the given chart."""
    ch = chart(system, chart_name)
    n = ch.name
    if n == "theta_xi":
        t, x = _TH, _XI
        return (_op(ch, cos(t) * coth(x), sin(t)),
                _op(ch, -sin(t) * coth(x), cos(t)),
                _op(ch, ONE))
    if n == "psi_chi":
        p, c = _PSI, _CHI
        return (_op(ch, cosh(c), -tanh(p) * sinh(c)),
                _op(ch, None, ONE),
                _op(ch, sinh(c), -tanh(p) * cosh(c)))
    if n == "phi_beta":
        p, b = _PHI, _BETA
        return (_op(ch, None, ONE),
                _op(ch, cosh(b), -tanh(p) * sinh(b)),
                _op(ch, -sinh(b), tanh(p) * cosh(b)))
    # sphere charts share one pattern up to a cyclic relabelling of the axes
    u, w = (Sym(v) for v in ch.variables)
    rot_a = _op(ch, tan(w) * cos(u), -sin(u))
    rot_b = _op(ch, tan(w) * sin(u), cos(u))
    rot_c = _op(ch, -ONE)
    if n == "theta_phi":
        return (rot_a, rot_b, rot_c)
    if n == "xi_psi":
        return (rot_b, rot_c, rot_a)
    if n == "eta_beta":
        return (rot_c, rot_a, rot_b)
    raise AssertionError(n)


def ambient_fields(system) -> tuple[tuple[int, ...], ...]:
    """Action of J_i on (s0, s1, s2) as signed index maps: J_i s_k = sign * s_j."""
    system = System.parse(system)
    if system is System.SPHERE:
        return (((0, 0), (1, 2), (-1, 1)), ((-1, 2), (0, 0), (1, 0)), ((1, 1), (-1, 0), (0, 0)))
    return (((0, 0), (1, 2), (1, 1)), ((1, 2), (0, 0), (1, 0)), ((-1, 1), (1, 0), (0, 0)))


# Hamiltonians ------------------------------------------------------------------

def _pot(l, f: Expr) -> Expr:
    l = _frac(l)
    return mul(l * l - QUARTER, power(f, -2))


def quantum_hamiltonian(system, ell, chart_name: str | None = None) -> DiffOp:
    """H_ell written out in separated form for the requested chart."""
    ch = chart(system, chart_name)
    l0, l1, l2 = Ell.of(ell)
    vs = ch.variables
    n = ch.name
    if n == "theta_xi":
        t, x = _TH, _XI
        ang = add(_pot(l1, sin(t)), _pot(l0, cos(t)))
        return DiffOp(vs, {(0, 2): -1, (0, 1): -coth(x),
                           (2, 0): -power(sinh(x), -2),
                           (0, 0): add(-_pot(l2, cosh(x)), mul(power(sinh(x), -2), ang))})
    if n in ("psi_chi", "phi_beta"):
        r, a = (Sym(v) for v in vs)
        la, lb = (l1, l0) if n == "psi_chi" else (l0, l1)
        inner = add(_pot(lb, sinh(a)), -_pot(l2, cosh(a)))
        return DiffOp(vs, {(2, 0): -1, (1, 0): -tanh(r),
                           (0, 2): -power(cosh(r), -2),
                           (0, 0): add(_pot(la, sinh(r)), mul(power(cosh(r), -2), inner))})
    # sphere: (u, w) with u the azimuth and w the latitude
    u, w = (Sym(v) for v in vs)
    pole, c_ax, s_ax = {"theta_phi": (l2, l0, l1), "xi_psi": (l1, l2, l0), "eta_beta": (l0, l1, l2)}[n]
    inner = add(_pot(c_ax, cos(u)), _pot(s_ax, sin(u)))
    return DiffOp(vs, {(0, 2): -1, (0, 1): tan(w),
                       (2, 0): -power(cos(w), -2),
                       (0, 0): add(_pot(pole, sin(w)), mul(power(cos(w), -2), inner))})


def hamiltonian_from_generators(system, ell, chart_name: str | None = None) -> DiffOp:
    """Independent route: H = -sum(+-J_i^2) + potential in ambient form."""
    ch = chart(system, chart_name)
    l0, l1, l2 = Ell.of(ell)
    j0, j1, j2 = generators(ch.system, ch.name)
    s0, s1, s2 = ch.ambient
    if ch.system is System.SPHERE:
        kin = -(j0 @ j0) - (j1 @ j1) - (j2 @ j2)
        pot = add(_pot(l0, s0), _pot(l1, s1), _pot(l2, s2))
    else:
        kin = -(j0 @ j0) - (j1 @ j1) + (j2 @ j2)
        pot = add(_pot(l0, s0), _pot(l1, s1), -_pot(l2, s2))
    return kin + DiffOp.multiply(ch.variables, pot)


# one-variable pieces --------------------------------------------------------------

SEPARATED_VARIABLE = {
    (System.HYPERBOLOID, "A"): "theta", (System.HYPERBOLOID, "B"): "chi", (System.HYPERBOLOID, "C"): "beta",
    (System.SPHERE, "A"): "theta", (System.SPHERE, "B"): "xi", (System.SPHERE, "C"): "eta",
}


def separated_hamiltonian(system, family: str, ell) -> DiffOp:
    """One-variable operator factorised by the ladder family ``A``, ``B`` or ``C``.

    Hyperboloid: H_theta, H_chi, H_beta.  Sphere: H_theta, H_xi, H_eta.
    """
    system = System.parse(system)
    family = family.rstrip("~")
    l0, l1, l2 = Ell.of(ell)
    var = SEPARATED_VARIABLE[(system, family)]
    v = Sym(var)
    if family == "A":
        pot = add(_pot(l0, cos(v)), _pot(l1, sin(v)))
    elif system is System.HYPERBOLOID:
        la = l0 if family == "B" else l1
        pot = add(_pot(la, sinh(v)), -_pot(l2, cosh(v)))
    elif family == "B":
        pot = add(_pot(l2, cos(v)), _pot(l0, sin(v)))
    else:
        pot = add(_pot(l1, cos(v)), _pot(l2, sin(v)))
    return DiffOp((var,), {(2,): -1, (0,): pot})


def radial_hamiltonian(system, ell, alpha) -> DiffOp:
    """Operator left after separating off the azimuthal eigenvalue ``alpha``.

    Lives on the primary chart's variable pair, acting only on the radial one.
    """
    system = System.parse(system)
    ch = PRIMARY[system]
    l2 = Ell.of(ell).l2
    alpha = _frac(alpha)
    if system is System.HYPERBOLOID:
        x = _XI
        return DiffOp(ch.variables, {(0, 2): -1, (0, 1): -coth(x),
                                     (0, 0): add(-_pot(l2, cosh(x)), mul(alpha, power(sinh(x), -2)))})
    w = _PHI
    return DiffOp(ch.variables, {(0, 2): -1, (0, 1): tan(w),
                                 (0, 0): add(_pot(l2, sin(w)), mul(alpha, power(cos(w), -2)))})


# cross-chart comparison ------------------------------------------------------------

def ambient_probes(system) -> list[Callable[[Expr, Expr, Expr], Expr]]:
    """Probe functions of (s0, s1, s2) that are smooth on the sampled region."""
    h, q = HALF, Fraction(3, 2)
    return [
        lambda s0, s1, s2: mul(power(s0, h), power(s1, q), power(s2, -1)),
        lambda s0, s1, s2: mul(power(s0, q), power(s1, Fraction(5, 2)), power(s2, 3)),
        lambda s0, s1, s2: mul(power(add(ONE, mul(s0, s1)), Fraction(5, 2)), power(s2, h)),
        lambda s0, s1, s2: mul(power(s0, Fraction(7, 2)), power(s1, h), power(s2, -2)),
    ]


def chart_equivalence(op_a: DiffOp, chart_a: Chart, op_b: DiffOp, chart_b: Chart,
                      n_samples: int = 40, seed: int = 20090415, tol: float = 1e-9,
                      label: str = "") -> NumericReport:
    """Compare the same operator written in two overlapping charts."""
    if chart_a.system is not chart_b.system:
        raise ValueError("charts belong to different systems")
    rng = np.random.default_rng(seed)
    pts_a: dict[str, np.ndarray] = {}
    pts_b: dict[str, np.ndarray] = {}
    got = 0
    ca_list, cb_list = [], []
    for _ in range(200):
        cand = [rng.uniform(lo, hi, 400) for lo, hi in chart_a.domain]
        env = dict(zip(chart_a.variables, cand))
        s = [np.asarray(evaluate(e, env), dtype=float) for e in chart_a.ambient]
        cb = chart_b.inverse(*s)
        keep = chart_b.contains(cb)
        ca_list.append([c[keep] for c in cand])
        cb_list.append([c[keep] for c in cb])
        got += int(keep.sum())
        if got >= n_samples:
            break
    if got < n_samples:
        raise SamplingError(f"charts {chart_a.name} and {chart_b.name} barely overlap")
    for i, v in enumerate(chart_a.variables):
        pts_a[v] = np.concatenate([c[i] for c in ca_list])[:n_samples]
    for i, v in enumerate(chart_b.variables):
        pts_b[v] = np.concatenate([c[i] for c in cb_list])[:n_samples]
    worst = 0.0
    for probe in ambient_probes(chart_a.system):
        fa = probe(*chart_a.ambient)
        fb = probe(*chart_b.ambient)
        a = _eval(apply(op_a, fa), pts_a)
        b = _eval(apply(op_b, fb), pts_b)
        worst = max(worst, float(np.max(np.abs(a - b)) / (1.0 + np.max(np.abs(a)))))
    return NumericReport(label or f"{chart_a.name}", chart_b.name, seed, n_samples, worst, worst < tol, tol)
