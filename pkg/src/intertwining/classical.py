"""Classical Hamiltonians on the sphere and hyperboloid, their quadratic
integrals, Poisson brackets, closed-form orbits and an RK4 cross-check.

Chart coordinates: sphere (phi1, phi2) with s0 = cos phi2 cos phi1,
s1 = cos phi2 sin phi1, s2 = sin phi2; hyperboloid (theta, xi) with
s0 = sinh xi cos theta, s1 = sinh xi sin theta, s2 = cosh xi.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .systems import System

FD_STEP = 1e-5


class SingularPoint(ValueError):
    """Evaluation too close to a singular coordinate line."""


class OrbitError(ValueError):
    """Orbit parameters violate a required inequality."""


@dataclass(frozen=True)
class PhasePoint:
    q1: float
    q2: float
    p1: float
    p2: float

    def array(self) -> np.ndarray:
        return np.array([self.q1, self.q2, self.p1, self.p2], dtype=float)

    @classmethod
    def of(cls, x) -> "PhasePoint":
        return cls(*(float(v) for v in x))


PhaseFunction = Callable[[np.ndarray], float]

_EPS = 1e-8


def _guard(*vals):
    for v in vals:
        if np.any(np.abs(v) < _EPS):
            raise SingularPoint("point lies on a singular line of the potential")


def _x(x) -> np.ndarray:
    return x.array() if isinstance(x, PhasePoint) else np.asarray(x, dtype=float)


# Hamiltonians and integrals ----------------------------------------------------------

def h_classical(system, m: Sequence[float]) -> PhaseFunction:
    system = System.parse(system)
    m0, m1, m2 = (float(v) for v in m)

    if system is System.SPHERE:
        def h(x):
            f1, f2, p1, p2 = _x(x)
            c1, s1, c2, s2 = math.cos(f1), math.sin(f1), math.cos(f2), math.sin(f2)
            _guard(c1, s1, c2, s2)
            return (0.5 * (p2 ** 2 + p1 ** 2 / c2 ** 2) + (m0 ** 2 / c1 ** 2 + m1 ** 2 / s1 ** 2) / c2 ** 2
                    + m2 ** 2 / s2 ** 2)
        return h

    def h(x):
        th, xi, pt, px = _x(x)
        ct, st, sh, ch = math.cos(th), math.sin(th), math.sinh(xi), math.cosh(xi)
        _guard(ct, st, sh)
        return (0.5 * (px ** 2 + pt ** 2 / sh ** 2) + (m0 ** 2 / ct ** 2 + m1 ** 2 / st ** 2) / sh ** 2
                - m2 ** 2 / ch ** 2)
    return h


def potential(system, m: Sequence[float]) -> Callable[[float, float], float]:
    h = h_classical(system, m)
    return lambda a, b: h((a, b, 0.0, 0.0))


def invariants_classical(system, m: Sequence[float]) -> tuple[PhaseFunction, PhaseFunction, PhaseFunction]:
    """(Q1, Q2, Q3) in chart coordinates."""
    system = System.parse(system)
    m0, m1, m2 = (float(v) for v in m)

    def q1(x):
        a, _, pa, _ = _x(x)
        c, s = math.cos(a), math.sin(a)
        _guard(c, s)
        return 0.5 * pa ** 2 + m0 ** 2 / c ** 2 + m1 ** 2 / s ** 2

    if system is System.SPHERE:
        def q2(x):
            f1, f2, p1, p2 = _x(x)
            c1, s1, t2 = math.cos(f1), math.sin(f1), math.tan(f2)
            _guard(c1, t2)
            return (t2 ** 2 * (0.5 * p1 ** 2 * s1 ** 2 + m0 ** 2 / c1 ** 2)
                    + c1 ** 2 * (0.5 * p2 ** 2 + m2 ** 2 / t2 ** 2)
                    + 0.5 * p1 * p2 * math.sin(2 * f1) * t2)

        def q3(x):
            f1, f2, p1, p2 = _x(x)
            c1, s1, t2 = math.cos(f1), math.sin(f1), math.tan(f2)
            _guard(s1, t2)
            return (t2 ** 2 * (0.5 * p1 ** 2 * c1 ** 2 + m1 ** 2 / s1 ** 2)
                    + s1 ** 2 * (0.5 * p2 ** 2 + m2 ** 2 / t2 ** 2)
                    - 0.5 * p1 * p2 * math.sin(2 * f1) * t2)
        return q1, q2, q3

    def q2(x):
        th, xi, pt, px = _x(x)
        ct, st, cth = math.cos(th), math.sin(th), 1.0 / math.tanh(xi)
        _guard(ct)
        return (cth ** 2 * (0.5 * pt ** 2 * st ** 2 + m0 ** 2 / ct ** 2)
                + ct ** 2 * (0.5 * px ** 2 + m2 ** 2 / cth ** 2)
                - 0.5 * pt * px * math.sin(2 * th) * cth)

    def q3(x):
        th, xi, pt, px = _x(x)
        ct, st, cth = math.cos(th), math.sin(th), 1.0 / math.tanh(xi)
        _guard(st)
        return (cth ** 2 * (0.5 * pt ** 2 * ct ** 2 + m1 ** 2 / st ** 2)
                + st ** 2 * (0.5 * px ** 2 + m2 ** 2 / cth ** 2)
                + 0.5 * pt * px * math.sin(2 * th) * cth)
    return q1, q2, q3


def invariant_sum(system, m) -> PhaseFunction:
    """Q1+Q2+Q3 on the sphere, -Q1+Q2+Q3 on the hyperboloid."""
    system = System.parse(system)
    q1, q2, q3 = invariants_classical(system, m)
    s = 1.0 if system is System.SPHERE else -1.0
    return lambda x: s * q1(x) + q2(x) + q3(x)


def sum_offset(system, m) -> float:
    """Closed-form value of (invariant sum) - H: -m2^2 on the sphere, +m2^2 on the hyperboloid."""
    m2 = float(m[2])
    return -m2 ** 2 if System.parse(system) is System.SPHERE else m2 ** 2


# Poisson bracket ------------------------------------------------------------------

def _grad(f: PhaseFunction, x: np.ndarray, h: float) -> np.ndarray:
    g = np.empty(4)
    for i in range(4):
        e = np.zeros(4)
        e[i] = h
        g[i] = (f(x + e) - f(x - e)) / (2 * h)
    return g


def gradient(f: PhaseFunction, x, h: float = FD_STEP) -> np.ndarray:
    """Central differences with one Richardson step."""
    x = _x(x)
    return (4 * _grad(f, x, h / 2) - _grad(f, x, h)) / 3


def poisson(f: PhaseFunction, g: PhaseFunction, x, h: float = FD_STEP) -> float:
    """Canonical bracket {f, g} = df/dq dg/dp - df/dp dg/dq."""
    if f is g:
        return 0.0
    a, b = gradient(f, x, h), gradient(g, x, h)
    return float(a[0] * b[2] + a[1] * b[3] - a[2] * b[0] - a[3] * b[1])


def random_phase_points(system, n: int, seed: int = 20090415, momentum: float = 2.0,
                        margin: float = 0.3) -> list[PhasePoint]:
    """Points inside the regular cell, ``margin`` away from the singular lines.

    Finite-difference round-off grows like the inverse fourth power of the
    distance to a singular line, so the margin keeps bracket checks meaningful.
    """
    system = System.parse(system)
    rng = np.random.default_rng(seed)
    ang = (margin, math.pi / 2 - margin)
    second = ang if system is System.SPHERE else (margin, 2.5)
    pts = []
    for _ in range(n):
        pts.append(PhasePoint(rng.uniform(*ang), rng.uniform(*second),
                              rng.uniform(-momentum, momentum), rng.uniform(-momentum, momentum)))
    return pts


# stationary points --------------------------------------------------------------------

def potential_minimum(m) -> tuple[tuple[float, float], float]:
    """Sphere: position and value (m0+m1+m2)^2 of the potential minimum in the first cell."""
    m0, m1, m2 = (abs(float(v)) for v in m)
    if min(m0, m1, m2) <= 0:
        raise ValueError("the interior minimum needs all m_i nonzero")
    pos = (math.atan(math.sqrt(m1 / m0)), math.atan(math.sqrt(m2 / (m0 + m1))))
    return pos, (m0 + m1 + m2) ** 2


def hyperboloid_stationary_point(m) -> tuple[float, float]:
    """Critical point of the hyperboloid potential: tanh^2 xi = (m0+m1)/m2 (needs m2 > m0+m1)."""
    m0, m1, m2 = (float(v) for v in m)
    if not (m0 > 0 and m1 > 0 and m2 > m0 + m1):
        raise ValueError("a critical point exists only for m0, m1 > 0 and m2 > m0 + m1")
    return math.atan(math.sqrt(m1 / m0)), math.atanh(math.sqrt((m0 + m1) / m2))


# closed-form orbits -------------------------------------------------------------------

@dataclass(frozen=True)
class OrbitParams:
    E: float
    alpha1: float
    m0: float = 1.0
    m1: float = 1.0
    m2: float = 1.0
    beta1: float = 0.0

    @property
    def b1(self) -> float:
        return self.alpha1 + self.m0 ** 2 - self.m1 ** 2

    @property
    def b2(self) -> float:
        return self.E + self.alpha1 - self.m2 ** 2

    @property
    def disc1(self) -> float:
        return self.b1 ** 2 - 4 * self.alpha1 * self.m0 ** 2

    @property
    def disc2(self) -> float:
        return self.b2 ** 2 - 4 * self.alpha1 * self.E

    @property
    def period(self) -> float:
        """Period of cos^2 phi2 (and of the whole orbit)."""
        return math.pi / math.sqrt(2 * self.E)

    def violations(self) -> list[str]:
        out = []
        vmin = (abs(self.m0) + abs(self.m1) + abs(self.m2)) ** 2
        if not self.E >= vmin:
            out.append(f"E >= (m0+m1+m2)^2 = {vmin:g} (got E = {self.E:g})")
        if not self.alpha1 > 0:
            out.append(f"alpha1 > 0 (got {self.alpha1:g})")
        if out:
            return out
        if self.disc2 < -1e-12:
            out.append(f"b2^2 - 4 alpha1 E >= 0 (got {self.disc2:g})")
        if self.disc1 < -1e-12:
            out.append(f"b1^2 - 4 alpha1 m0^2 >= 0 (got {self.disc1:g})")
        return out

    def validate(self) -> "OrbitParams":
        bad = self.violations()
        if bad:
            raise OrbitError("; ".join(bad))
        return self


def _u(p: OrbitParams, t):
    """cos^2 phi2 at time t."""
    d2 = math.sqrt(max(p.disc2, 0.0))
    return (p.b2 + d2 * np.cos(2 * math.sqrt(2 * p.E) * t)) / (2 * p.E)


def _omega_tau(p: OrbitParams, t):
    """2 sqrt(2 alpha1) * tau(t), where dtau/dt = 1 / cos^2 phi2, tau(0) = 0.

    The arctan branch is continued across the poles of tan, so the result is
    continuous and increases by 2 pi per period.
    """
    d2 = math.sqrt(max(p.disc2, 0.0))
    a, b = p.b2 / (2 * p.E), d2 / (2 * p.E)
    r = math.sqrt((a - b) / (a + b))
    x = math.sqrt(2 * p.E) * np.asarray(t, dtype=float)
    n = np.round(x / math.pi)
    return 2 * (np.arctan(r * np.tan(x - n * math.pi)) + n * math.pi)


def hj_orbit(system, params: OrbitParams, t):
    """(phi1, phi2) of the separated Hamilton-Jacobi solution at time(s) t."""
    if System.parse(system) is not System.SPHERE:
        raise NotImplementedError("closed-form orbits are provided for the sphere")
    p = params.validate()
    u = _u(p, t)
    d1 = math.sqrt(max(p.disc1, 0.0))
    w = (p.b1 + d1 * np.cos(_omega_tau(p, t) + 2 * math.sqrt(2 * p.alpha1) * p.beta1)) / (2 * p.alpha1)
    phi1 = np.arccos(np.sqrt(np.clip(w, 0.0, 1.0)))
    phi2 = np.arccos(np.sqrt(np.clip(u, 0.0, 1.0)))
    return phi1, phi2


def orbit_phase_point(params: OrbitParams, t: float, h: float = 1e-6) -> PhasePoint:
    """Phase point on the closed-form orbit; momenta from central differences."""
    a1, a2 = hj_orbit(System.SPHERE, params, np.array([t - h, t + h]))
    f1, f2 = hj_orbit(System.SPHERE, params, t)
    d1 = (a1[1] - a1[0]) / (2 * h)
    d2 = (a2[1] - a2[0]) / (2 * h)
    return PhasePoint(float(f1), float(f2), float(d1 * math.cos(f2) ** 2), float(d2))


# numerical integration ---------------------------------------------------------------

def hamilton_rhs(h: PhaseFunction, fd_step: float = 1e-6) -> Callable[[np.ndarray], np.ndarray]:
    def rhs(x):
        g = gradient(h, x, fd_step)
        return np.array([g[2], g[3], -g[0], -g[1]])
    return rhs


def rk4_orbit(system, m, x0, dt: float, steps: int) -> np.ndarray:
    """Fixed-step RK4 of Hamilton's equations; rows (t, q1, q2, p1, p2)."""
    h = h_classical(system, m)
    f = hamilton_rhs(h)
    x = _x(x0).copy()
    out = np.empty((steps + 1, 5))
    out[0] = (0.0, *x)
    for k in range(steps):
        k1 = f(x)
        k2 = f(x + 0.5 * dt * k1)
        k3 = f(x + 0.5 * dt * k2)
        k4 = f(x + dt * k3)
        x = x + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        if not np.all(np.isfinite(x)):
            raise SingularPoint(f"trajectory left the regular cell at step {k + 1}")
        out[k + 1] = ((k + 1) * dt, *x)
    return out


# export -----------------------------------------------------------------------------

TRAJECTORY_COLUMNS = ("t", "phi1", "phi2", "H", "Q1", "Q2", "Q3")


def trajectory_rows(params: OrbitParams, steps: int, t_end: float | None = None) -> list[tuple]:
    """Closed-form orbit sampled at ``steps`` times over one period (or ``t_end``)."""
    params.validate()
    m = (params.m0, params.m1, params.m2)
    h = h_classical(System.SPHERE, m)
    qs = invariants_classical(System.SPHERE, m)
    t_end = params.period if t_end is None else t_end
    rows = []
    for k in range(steps):
        t = t_end * k / max(steps - 1, 1)
        x = orbit_phase_point(params, t)
        rows.append((t, x.q1, x.q2, h(x), *(q(x) for q in qs)))
    return rows


def trajectory_csv(params: OrbitParams, steps: int, t_end: float | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TRAJECTORY_COLUMNS)
    for row in trajectory_rows(params, steps, t_end):
        w.writerow([f"{v:.12g}" for v in row])
    return buf.getvalue()


__all__ = [
    "PhasePoint", "OrbitParams", "SingularPoint", "OrbitError", "h_classical", "potential",
    "invariants_classical", "invariant_sum", "sum_offset", "gradient", "poisson", "random_phase_points",
    "potential_minimum", "hyperboloid_stationary_point", "hj_orbit", "orbit_phase_point", "hamilton_rhs",
    "rk4_orbit", "trajectory_rows", "trajectory_csv", "TRAJECTORY_COLUMNS",
]
