"""Closed-form eigenstates, energies, representation lattices and norms."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional

import numpy as np

from .diffop import DiffOp, SampleSpec, _partials, apply
from .expr import Expr, Sym, as_expr, cos, cosh, evaluate, jacobi_poly, mul, power, sin, sinh, substitute
from .ladders import Letter, delta, ladder_op, letter_action
from .quadrature import DivergentIntegral, adaptive, adaptive2d, semi_infinite2d
from .systems import HALF, Ell, System, chart, quantum_hamiltonian, separated_hamiltonian

_TH, _XI, _PHI = Sym("theta"), Sym("xi"), Sym("phi")
ZERO_TOL = 1e-9  # relative to the largest term of K psi


class InvalidState(ValueError):
    """A closed form was requested outside its validity region."""


@dataclass(frozen=True)
class StateForm:
    expr: Expr
    ell: Ell
    system: Optional[System]          # None for one-variable theta states
    variables: tuple[str, ...]
    energy: Optional[Fraction]
    quantum_numbers: dict = field(default_factory=dict)
    validity: tuple[str, ...] = ()
    word: tuple[str, ...] = ()
    normalization: Optional[float] = None

    @property
    def is_1d(self) -> bool:
        return self.system is None

    def hamiltonian(self) -> DiffOp:
        if self.is_1d:
            return separated_hamiltonian(System.HYPERBOLOID, "A", self.ell)
        return quantum_hamiltonian(self.system, self.ell)

    def sample_spec(self, **kw) -> SampleSpec:
        if self.is_1d:
            return SampleSpec(domain=((0.05, math.pi / 2 - 0.05),), **kw)
        return chart(self.system).sample_spec(**kw)

    def values(self, pts=None) -> np.ndarray:
        pts = self.sample_spec().points(self.variables) if pts is None else pts
        return np.asarray(evaluate(self.expr, pts), dtype=float)


def _require(cond: bool, text: str):
    if not cond:
        raise InvalidState(f"validity violated: {text}")


def ground_state(system, ell) -> StateForm:
    """State annihilated by the lowering operators of the hierarchy at ell."""
    system = System.parse(system)
    ell = Ell.of(ell)
    l0, l1, l2 = ell
    if system is System.HYPERBOLOID:
        _require(l1 == 0, "l1 = 0")
        _require(l0 >= -HALF, "l0 >= -1/2")
        _require(l0 + l2 < Fraction(-5, 2), "l0 + l2 < -5/2")
        expr = mul(power(cos(_TH), l0 + HALF), power(sin(_TH), HALF),
                   power(cosh(_XI), l2 + HALF), power(sinh(_XI), l0 + 1))
        s = l0 + l2
        return StateForm(expr, ell, system, ("theta", "xi"), -(s + Fraction(3, 2)) * (s + Fraction(5, 2)),
                         {"level": s}, ("l1 = 0", "l0 >= -1/2", "l0 + l2 < -5/2"))
    _require(l1 == 0, "l1 = 0")
    _require(l0.denominator == 1 and l0 >= 0, "l0 = m a non-negative integer")
    _require(l2.denominator == 1 and l2 >= 0, "l2 = n a non-negative integer")
    expr = mul(power(cos(_TH), l0 + HALF), power(sin(_TH), HALF),
               power(cos(_PHI), l0 + 1), power(sin(_PHI), l2 + HALF))
    q = l0 + l2
    return StateForm(expr, ell, system, ("theta", "phi"), (q + Fraction(3, 2)) * (q + Fraction(5, 2)),
                     {"m": int(l0), "n": int(l2)}, ("l1 = 0", "l0, l2 non-negative integers"))


def so6_ground_state(n: int) -> StateForm:
    """Top state of an so(6) level: l0 = l1 = 0, l2 = n."""
    return ground_state(System.SPHERE, Ell(0, 0, n))


def excited_1d(l0, l1, n: int) -> StateForm:
    """sin^{l1+1/2} cos^{l0+1/2} P_n^{(l1,l0)}(cos 2 theta), eigenvalue (l0+l1+1+2n)^2."""
    l0, l1 = Fraction(l0), Fraction(l1)
    if n < 0:
        raise InvalidState("n must be non-negative")
    _require(l0 >= -HALF and l1 >= -HALF, "l0, l1 >= -1/2")
    jac = substitute(jacobi_poly(n, l1, l0), {"x": cos(2 * _TH)})
    expr = mul(power(sin(_TH), l1 + HALF), power(cos(_TH), l0 + HALF), jac)
    return StateForm(expr, Ell(l0, l1, 0), None, ("theta",), (l0 + l1 + 1 + 2 * n) ** 2,
                     {"n": n}, ("l0 >= -1/2", "l1 >= -1/2"))


def energy_1d(l0, l1, n: int) -> Fraction:
    return (Fraction(l0) + Fraction(l1) + 1 + 2 * n) ** 2


def _vanishes(op: DiffOp, state: "StateForm", out: Expr) -> bool:
    """True when op(state) is zero up to cancellation among its terms."""
    pts = state.sample_spec().points(state.variables)
    scale = 0.0
    for idx, c in op.terms.items():
        part = mul(c, _partials(state.expr, op.variables, idx))
        scale += float(np.max(np.abs(evaluate(part, pts))))
    res = float(np.max(np.abs(evaluate(out, pts))))
    return res <= ZERO_TOL * scale


def raise_state(state: StateForm, family: str = "A") -> Optional[StateForm]:
    """Apply the hat raising operator of ``family``; None signals a zero result."""
    letter = Letter(family, "+")
    if state.is_1d:
        if family != "A":
            raise ValueError("one-variable states only carry the A ladder")
        tgt = state.ell - delta(System.HYPERBOLOID, "A")
        op = ladder_op(System.HYPERBOLOID, "A", "+", tgt, form="separated").scale(HALF)
    else:
        op, tgt = letter_action(state.system, letter, state.ell)
    out = apply(op, state.expr)
    if _vanishes(op, state, out):
        return None
    qn = dict(state.quantum_numbers)
    if state.is_1d:
        qn["n"] = qn.get("n", 0) + 1
    return replace(state, expr=out, ell=tgt, word=(str(letter),) + state.word, normalization=None,
                   quantum_numbers=qn)


def apply_letters(state: StateForm, text: str) -> Optional[StateForm]:
    """Raise repeatedly; ``text`` is read as an operator product (rightmost first)."""
    out = state
    for tok in reversed(text.split()):
        fam = tok.rstrip("+")
        out = raise_state(out, fam)
        if out is None:
            return None
    return out


def eigen_residual(state: StateForm, n_samples: int = 40, seed: int | None = None) -> float:
    """max |(H - E) psi| / max |psi| on the sample grid."""
    if state.energy is None:
        raise ValueError("state carries no energy")
    kw = {"n_samples": n_samples}
    if seed is not None:
        kw["seed"] = seed
    pts = state.sample_spec(**kw).points(state.variables)
    psi = np.asarray(evaluate(state.expr, pts), dtype=float)
    hpsi = np.asarray(evaluate(apply(state.hamiltonian(), state.expr), pts), dtype=float)
    return float(np.max(np.abs(hpsi - float(state.energy) * psi)) / np.max(np.abs(psi)))


# energies ----------------------------------------------------------------------

def level_energy(system, s) -> Fraction:
    """Energy of the level labelled by s (l0+l2 of the ground state, or q)."""
    system = System.parse(system)
    s = Fraction(s)
    e = (s + Fraction(3, 2)) * (s + Fraction(5, 2))
    return -e if system is System.HYPERBOLOID else e


# lattices ------------------------------------------------------------------------

ALGEBRAS = ("su2", "su11", "su21", "so42", "su3", "so6")


@dataclass(frozen=True)
class LatticePoint:
    ell: Ell
    mult: int = 1

    def to_dict(self) -> dict:
        return {"l0": _num(self.ell.l0), "l1": _num(self.ell.l1), "l2": _num(self.ell.l2), "mult": self.mult}


def _num(v: Fraction):
    return int(v) if v.denominator == 1 else str(v)


@dataclass(frozen=True)
class IurDescriptor:
    algebra: str
    base: Ell
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.algebra not in ALGEBRAS:
            raise ValueError(f"unknown algebra {self.algebra!r}")
        object.__setattr__(self, "base", Ell.of(self.base))

    @classmethod
    def su21(cls, base, c_max: int = 2) -> "IurDescriptor":
        return cls("su21", Ell.of(base), {"c_max": c_max})

    @classmethod
    def so42(cls, apex_l2, extent: int = 2, shells: int = 3) -> "IurDescriptor":
        return cls("so42", Ell(0, 0, apex_l2), {"extent": extent, "shells": shells})

    @classmethod
    def so6(cls, q: int) -> "IurDescriptor":
        return cls("so6", Ell(0, 0, q), {"q": q})

    @classmethod
    def su3(cls, m: int, n: int) -> "IurDescriptor":
        return cls("su3", Ell(m, 0, n), {"m": m, "n": n})

    @classmethod
    def su2(cls, l0, l1) -> "IurDescriptor":
        return cls("su2", Ell(l0, l1, 0), {})

    @classmethod
    def su11(cls, family: str, base, count: int = 5) -> "IurDescriptor":
        return cls("su11", Ell.of(base), {"family": family, "count": count})

    def to_dict(self) -> dict:
        return {"algebra": self.algebra, "base": [_num(v) for v in self.base],
                "labels": {k: v for k, v in self.labels.items()}}


def _nonneg_int(v, what):
    v = Fraction(v)
    if v.denominator != 1 or v < 0:
        raise ValueError(f"{what} must be a non-negative integer, got {v}")
    return int(v)


def _octahedron(q: int) -> list[LatticePoint]:
    pts = []
    for k in range(q // 2 + 1):
        r = q - 2 * k
        for a, b in product(range(-r, r + 1), repeat=2):
            c = r - abs(a) - abs(b)
            if c < 0:
                continue
            for cz in ((c, -c) if c else (0,)):
                pts.append(LatticePoint(Ell(a, b, cz), k + 1))
    return pts


def su21_multiplicity(l0_base: int, a: int, c: int) -> int:
    """Independent states after a raising steps of A and c of C.

    Basis (B^+)^k (C^+)^(c-k) (A^+)^(a-k) Phi0 with the A-power bounded by the
    finite su(2) tower of the base.
    """
    lo, hi = max(0, a - l0_base), min(a, c)
    return max(0, hi - lo + 1)


def lattice(system, iur: IurDescriptor) -> list[LatticePoint]:
    system = System.parse(system)
    alg, base, lab = iur.algebra, iur.base, iur.labels
    if alg in ("su21", "so42") and system is not System.HYPERBOLOID:
        raise ValueError(f"{alg} lattices belong to the hyperboloid")
    if alg in ("su3", "so6") and system is not System.SPHERE:
        raise ValueError(f"{alg} lattices belong to the sphere")
    if alg == "so6":
        return _octahedron(_nonneg_int(lab.get("q", base.l2), "q"))
    if alg == "su3":
        m, n = _nonneg_int(lab["m"], "m"), _nonneg_int(lab["n"], "n")
        return [p for p in _octahedron(m + n) if p.ell.l0 - p.ell.l1 - p.ell.l2 == m - n]
    if alg == "su2":
        two_j = base.l0 + base.l1
        tj = _nonneg_int(two_j, "l0 + l1 (twice the su(2) spin)")
        return [LatticePoint(base - Ell(k, k, 0)) for k in range(tj + 1)]
    if alg == "su11":
        fam = lab.get("family", "B")
        count = _nonneg_int(lab.get("count", 5), "count")
        from .ladders import diagonal_eigenvalue
        j = diagonal_eigenvalue(fam, base, system)
        if not j > HALF:
            raise ValueError(f"lowest weight {j} must exceed 1/2")
        d = delta(system, fam)
        return [LatticePoint(base - Ell(k * d.l0, k * d.l1, k * d.l2)) for k in range(count)]
    if alg == "su21":
        L0 = _nonneg_int(base.l0, "base l0")
        if base.l1 != 0:
            raise ValueError("su(2,1) base must have l1 = 0")
        if not base.l0 + base.l2 < Fraction(-5, 2):
            raise ValueError("su(2,1) base must satisfy l0 + l2 < -5/2")
        c_max = _nonneg_int(lab.get("c_max", 2), "c_max")
        pts = []
        for c in range(c_max + 1):
            for a in range(L0 + c + 1):
                pts.append(LatticePoint(Ell(base.l0 - a, c - a, base.l2 - c), su21_multiplicity(L0, a, c)))
        return pts
    if alg == "so42":
        if base.l0 != 0 or base.l1 != 0:
            raise ValueError("so(4,2) apex must be (0, 0, l2)")
        L = base.l2
        if L.denominator != 1 or not L < Fraction(-5, 2):
            raise ValueError("so(4,2) apex l2 must be an integer below -5/2")
        extent = _nonneg_int(lab.get("extent", 2), "extent")
        shells = _nonneg_int(lab.get("shells", 3), "shells")
        pts = []
        for n in range(shells):
            for a, b in product(range(-extent, extent + 1), repeat=2):
                if abs(a) + abs(b) > extent:
                    continue
                pts.append(LatticePoint(Ell(a, b, L - 2 * n - abs(a) - abs(b)), n + 1))
        return pts
    raise AssertionError(alg)


def iur_energy(system, iur: IurDescriptor) -> Fraction:
    system = System.parse(system)
    b = iur.base
    if iur.algebra in ("su21", "so42"):
        return level_energy(system, b.l0 + b.l2)
    if iur.algebra == "so6":
        return level_energy(system, iur.labels.get("q", b.l2))
    if iur.algebra == "su3":
        return level_energy(system, iur.labels["m"] + iur.labels["n"])
    if iur.algebra == "su2":
        return energy_1d(b.l0, b.l1, 0)
    raise ValueError(f"no single energy for {iur.algebra}")


def energy(system, descriptor) -> Fraction:
    """Exact energy of a ground state (Ell), an IUR, or a level label."""
    if isinstance(descriptor, IurDescriptor):
        return iur_energy(system, descriptor)
    if isinstance(descriptor, (int, Fraction)):
        return level_energy(system, descriptor)
    ell = Ell.of(descriptor)
    return level_energy(system, ell.l0 + ell.l2)


def total_states(points: Iterable[LatticePoint]) -> int:
    return sum(p.mult for p in points)


def lattice_json(system, iur: IurDescriptor) -> str:
    system = System.parse(system)
    pts = lattice(system, iur)
    doc = {"system": system.value, "iur": iur.to_dict(), "points": [p.to_dict() for p in pts]}
    try:
        e = iur_energy(system, iur)
        doc["energy_num"], doc["energy_den"] = e.numerator, e.denominator
    except ValueError:
        pass
    return json.dumps(doc, indent=2)


def lattice_csv(points: Iterable[LatticePoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["l0", "l1", "l2", "mult"])
    for p in points:
        d = p.to_dict()
        w.writerow([d["l0"], d["l1"], d["l2"], d["mult"]])
    return buf.getvalue()


# spectra of a fixed Hamiltonian ---------------------------------------------------

@dataclass(frozen=True)
class SpectrumRecord:
    system: System
    ell: Ell
    level: int
    energy: Fraction
    degeneracy: int
    words: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"system": self.system.value, "ell": [_num(v) for v in self.ell], "level": self.level,
                "energy_num": self.energy.numerator, "energy_den": self.energy.denominator,
                "degeneracy": self.degeneracy, "words": list(self.words)}


def bound_levels(system, ell, max_levels: int = 8) -> list[SpectrumRecord]:
    """Levels of H_ell from the lattice picture.

    Hyperboloid: s = |l0| + |l1| - |l2| + 2N with s < -5/2 (finite list).
    Sphere: s = |l0| + |l1| + |l2| + 2N, first ``max_levels`` levels.
    Level N is (N+1)-fold degenerate.
    """
    system = System.parse(system)
    ell = Ell.of(ell)
    a0, a1, a2 = (abs(v) for v in ell)
    out = []
    for n in range(max_levels):
        if system is System.HYPERBOLOID:
            s = a0 + a1 - a2 + 2 * n
            if not s < Fraction(-5, 2):
                break
        else:
            s = a0 + a1 + a2 + 2 * n
        out.append(SpectrumRecord(system, ell, n, level_energy(system, s), n + 1))
    return out


def spectrum_csv(records: Iterable[SpectrumRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["system", "l0", "l1", "l2", "level", "energy", "degeneracy"])
    for r in records:
        w.writerow([r.system.value, *(_num(v) for v in r.ell), r.level, str(r.energy), r.degeneracy])
    return buf.getvalue()


# quadrature ------------------------------------------------------------------------

def _integrand(state: StateForm, other: Optional[StateForm] = None):
    e1 = state.expr
    e2 = state.expr if other is None else other.expr
    vs = state.variables
    if other is not None and other.variables != vs:
        raise ValueError("states live in different variables")

    k = (state.normalization or 1.0) * ((state if other is None else other).normalization or 1.0)

    if state.is_1d:
        return lambda t: k * evaluate(e1, {"theta": t}) * evaluate(e2, {"theta": t})
    if state.system is System.HYPERBOLOID:
        return lambda t, x: (k * evaluate(e1, {"theta": t, "xi": x}) * evaluate(e2, {"theta": t, "xi": x})
                             * np.sinh(x))
    return lambda t, p: (k * evaluate(e1, {"theta": t, "phi": p}) * evaluate(e2, {"theta": t, "phi": p})
                         * np.cos(p))


def inner_product(a: StateForm, b: StateForm, rtol: float = 1e-10) -> float:
    """Integral of a*b with the invariant measure over the regular cell."""
    if a.system != b.system:
        raise ValueError("states of different systems")
    f = _integrand(a, b)
    half_pi = math.pi / 2
    if a.is_1d:
        return float(adaptive(f, 0.0, half_pi, rtol=rtol))
    if a.system is System.HYPERBOLOID:
        return semi_infinite2d(f, (0.0, half_pi), rtol=rtol)
    return adaptive2d(f, (0.0, half_pi), (0.0, half_pi), rtol=rtol)


def norm_squared(state: StateForm, rtol: float = 1e-10) -> float:
    return inner_product(state, state, rtol)


def normalize(state: StateForm, rtol: float = 1e-10) -> tuple[float, float]:
    """(N, residual) with ||N * state|| = 1.

    A stored normalization is honoured, so a normalized state returns N = 1.
    The residual is |1 - ||N * state||^2| from a second, tighter integration.
    """
    level = state.quantum_numbers.get("level")
    if state.system is System.HYPERBOLOID and level is not None and not level < Fraction(-5, 2):
        raise InvalidState("validity violated: l0 + l2 < -5/2")
    n2 = norm_squared(state, rtol)
    if not n2 > 0:
        raise DivergentIntegral("state has zero or negative norm")
    c = 1.0 / math.sqrt(n2)
    scaled = replace(state, normalization=c * (state.normalization or 1.0))
    return c, abs(norm_squared(scaled, rtol * 1e-2) - 1.0)


def with_normalization(state: StateForm) -> StateForm:
    c, _ = normalize(state)
    return replace(state, normalization=c * (state.normalization or 1.0))


def raw_norm_squared(expr: Expr, system, rtol: float = 1e-10) -> float:
    """Norm of an arbitrary expression, bypassing validity checks."""
    system = System.parse(system)
    st = StateForm(as_expr(expr), Ell(0, 0, 0), system, chart(system).variables, None)
    return norm_squared(st, rtol)


def gram_matrix(states: list[StateForm], rtol: float = 1e-10) -> np.ndarray:
    n = len(states)
    g = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            g[i, j] = g[j, i] = inner_product(states[i], states[j], rtol)
    return g


def gram_determinant(states: list[StateForm], rtol: float = 1e-10) -> float:
    """Determinant of the scale-normalised Gram matrix (1 for orthogonal, 0 for dependent)."""
    g = gram_matrix(states, rtol)
    d = np.sqrt(np.diag(g))
    return float(np.linalg.det(g / np.outer(d, d)))


def degenerate_pair(base=(1, 0, -4)) -> tuple[StateForm, StateForm]:
    """C^+A^+ Phi0 and A^+C^+ Phi0: two routes to the same lattice point."""
    phi = ground_state(System.HYPERBOLOID, base)
    s1 = apply_letters(phi, "C+ A+")
    s2 = apply_letters(phi, "A+ C+")
    if s1 is None or s2 is None:
        raise InvalidState("a raising route vanished")
    return s1, s2


__all__ = [
    "StateForm", "InvalidState", "ground_state", "so6_ground_state", "excited_1d", "energy_1d",
    "raise_state", "apply_letters", "eigen_residual", "level_energy", "energy", "iur_energy",
    "LatticePoint", "IurDescriptor", "lattice", "su21_multiplicity", "total_states", "lattice_json",
    "lattice_csv", "SpectrumRecord", "bound_levels", "spectrum_csv", "inner_product", "norm_squared",
    "normalize", "with_normalization", "gram_matrix", "gram_determinant", "degenerate_pair",
    "raw_norm_squared", "ALGEBRAS",
]
