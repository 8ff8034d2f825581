"""Verification suites: every identity becomes a report entry with a residual.

Operator identities are checked as shifted-operator equalities sampled with
probe functions; state identities (Casimirs, quadratic algebra, energies) are
checked on closed-form eigenstates.  All sampling is seeded, so a report is
reproducible from its seed.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .diffop import DEFAULT_SEED, DiffOp, SampleSpec, apply, residual
from .expr import Expr, evaluate
from .ladders import (FAMILIES, SO6_SHIFT, SU2_A, SU11_B, SU11_C, TABLES, HatPoly, LadderError,
                      Letter, apply_poly, apply_poly_theta, bracket_groups, casimir_poly,
                      commutator, conjugate_letter, conjugate_poly, delta, diagonal_eigenvalue,
                      effective_ell, ladder_op, lambda_const, letter_action,
                      quadratic_algebra_relations, realize_poly, so6_symmetrized, table_letters)
from .spectra import (InvalidState, IurDescriptor, StateForm, eigen_residual, excited_1d,
                      ground_state, lattice, raise_state, total_states)
from .systems import Ell, System, chart, quantum_hamiltonian, separated_hamiltonian

SCHEMA = "intertwining.report/1"
TOL_OP = 1e-9        # first and second order operator identities
TOL_CUBIC = 1e-7     # identities involving words of length three
TOL_STATE = 1e-8     # eigen-residuals and Casimir forms on states
TOL_JACOBI = 1e-8
TOL_ANNIHILATE = 1e-10
TOL_CONSTANT = 1e-9
JACOBI_TRIPLES = 20

ALGEBRAS = ("su2_A", "su2_tildeA", "su11_B", "su11_C", "su21", "su3", "so6_derived")
_SEPARATED_DOMAIN = ((0.05, 1.5),)


def default_seed() -> int:
    """Seed from INTERTWINING_SEED, else the library default."""
    raw = os.environ.get("INTERTWINING_SEED")
    return int(raw) if raw else DEFAULT_SEED


@dataclass
class Entry:
    identity: str           # stable id used by the coverage lock
    label: str              # human-readable statement
    source: str             # family of identities the entry belongs to
    max_residual: float
    tol: float
    params: str = ""
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.max_residual)) and self.max_residual < self.tol

    def to_dict(self) -> dict:
        return {"identity": self.identity, "label": self.label, "source": self.source,
                "params": self.params, "max_residual": self.max_residual, "tol": self.tol,
                "pass": self.passed, "detail": self.detail}


@dataclass
class Report:
    suite: str
    system: str
    params: list[str]
    seed: int
    entries: list[Entry] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[Entry]:
        return [e for e in self.entries if not e.passed]

    def find(self, identity: str, params: str | None = None) -> list[Entry]:
        return [e for e in self.entries if e.identity == identity and (params is None or e.params == params)]

    def extend(self, other: "Report") -> None:
        self.entries.extend(other.entries)
        self.wall_time += other.wall_time

    def to_dict(self) -> dict:
        return {"schema": SCHEMA, "suite": self.suite, "system": self.system, "params": self.params,
                "seed": self.seed, "pass": self.passed, "wall_time": self.wall_time,
                "entries": [e.to_dict() for e in self.entries]}

    def to_json(self, timing: bool = True) -> str:
        d = self.to_dict()
        if not timing:
            d.pop("wall_time")
        return json.dumps(d, indent=2, default=str)


class _Timer:
    def __init__(self, report: Report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.wall_time = time.perf_counter() - self.t0
        return False


def _new(suite, system, ell, seed) -> Report:
    params = [str(Ell.of(ell))] if ell is not None else []
    return Report(suite, System.parse(system).value, params, default_seed() if seed is None else seed)


def _spec(system, seed) -> SampleSpec:
    return chart(system).sample_spec(seed=seed)


def _separated_spec(system, family, seed) -> SampleSpec:
    hyp = System.parse(system) is System.HYPERBOLOID and family.rstrip("~") != "A"
    return SampleSpec(domain=_SEPARATED_DOMAIN, kinds=("hyp",) if hyp else ("trig",), seed=seed)


# operator identities ---------------------------------------------------------------

def check_factorization(system, ell, families: Sequence[str] = FAMILIES, seed: int | None = None) -> Report:
    """K+K- + lambda = H_sep and the shifted K-K+ + lambda' = H_sep, per family."""
    system = System.parse(system)
    ell = Ell.of(ell)
    rep = _new("factorization", system, ell, seed)
    with _Timer(rep):
        for fam in families:
            base = fam.rstrip("~")
            spec = _separated_spec(system, fam, rep.seed)
            h_sep = separated_hamiltonian(system, base, effective_ell(system, fam, ell))
            var = h_sep.variables
            lam = lambda_const(system, fam, ell)
            kp = ladder_op(system, fam, "+", ell, form="separated")
            km = ladder_op(system, fam, "-", ell, form="separated")
            r = residual(kp @ km + DiffOp.identity(var).scale(lam), h_sep, spec)
            rep.entries.append(Entry(f"factorization {fam}", f"{fam}+ {fam}- + lambda = H_sep",
                                     "factorization", r, TOL_OP, str(ell), {"lambda": str(lam)}))
            src = ell - delta(system, fam)
            lam2 = lambda_const(system, fam, src)
            r2 = residual(ladder_op(system, fam, "-", src, form="separated")
                          @ ladder_op(system, fam, "+", src, form="separated")
                          + DiffOp.identity(var).scale(lam2), h_sep, spec)
            rep.entries.append(Entry(f"refactorization {fam}", f"{fam}- {fam}+ + lambda at ell - delta = H_sep",
                                     "factorization", r2, TOL_OP, str(ell), {"lambda": str(lam2)}))
    return rep


def check_intertwining(system, ell, families: Sequence[str] = FAMILIES, seed: int | None = None) -> Report:
    """K- H_ell = H_{ell+delta} K- and K+ H_{ell+delta} = H_ell K+."""
    system = System.parse(system)
    ell = Ell.of(ell)
    rep = _new("intertwining", system, ell, seed)
    with _Timer(rep):
        spec = _spec(system, rep.seed)
        h0 = quantum_hamiltonian(system, ell)
        for fam in families:
            up = ell + delta(system, fam)
            h1 = quantum_hamiltonian(system, up)
            km = ladder_op(system, fam, "-", ell)
            kp = ladder_op(system, fam, "+", ell)
            rep.entries.append(Entry(f"intertwining {fam}-", f"{fam}- H_ell = H_ell' {fam}-", "intertwining",
                                     residual(km @ h0, h1 @ km, spec), TOL_OP, str(ell)))
            rep.entries.append(Entry(f"intertwining {fam}+", f"{fam}+ H_ell' = H_ell {fam}+", "intertwining",
                                     residual(kp @ h1, h0 @ kp, spec), TOL_OP, str(ell)))
    return rep


# bracket tables --------------------------------------------------------------------

def _realized_residual(system, lhs: HatPoly, rhs: HatPoly, ell, spec) -> float:
    vs = chart(system).variables
    left, tl = realize_poly(system, lhs, ell)
    if rhs.terms:
        right, tr = realize_poly(system, rhs, ell)
        if tl is not None and tr != tl:
            return float("inf")
    else:
        right = DiffOp.zero(vs)
    return residual(left, right, spec)


def _bracket(table, x: Letter, y: Letter) -> HatPoly:
    if x == y:
        return HatPoly()
    if (x, y) in table:
        return table[(x, y)]
    if (y, x) in table:
        return -table[(y, x)]
    if x.role == "0" and y.role == "0":
        return HatPoly()
    raise KeyError(f"[{x}, {y}]")


def _jacobiator(table, x, y, z) -> HatPoly:
    out = HatPoly()
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        for w, coef in _bracket(table, b, c).terms.items():
            if len(w) != 1:
                raise LadderError("table entries must be linear")
            out = out + _bracket(table, a, w[0]) * coef
    return out


def _letter_table(system, axis: int, table) -> dict:
    """Conjugated table re-keyed by plain letters (signs moved to the right side)."""
    out = {}
    for (x, y), rhs in table.items():
        cx, cy = conjugate_letter(system, axis, x), conjugate_letter(system, axis, y)
        (wx, sx), = cx.terms.items()
        (wy, sy), = cy.terms.items()
        out[(wx[0], wy[0])] = conjugate_poly(system, axis, rhs) * (sx * sy)
    return out


def _merge(tables: Iterable[dict]) -> tuple[dict, int]:
    """Union of bracket tables; returns the union and the count of conflicting pairs."""
    merged: dict = {}
    conflicts = 0
    for t in tables:
        for (x, y), rhs in t.items():
            if (x, y) in merged:
                conflicts += (merged[(x, y)] - rhs).terms != {}
            elif (y, x) in merged:
                conflicts += (merged[(y, x)] + rhs).terms != {}
            else:
                merged[(x, y)] = rhs
    return merged, conflicts


def _jacobi_entries(system, table, ell, spec, seed, ident, count=JACOBI_TRIPLES) -> list[Entry]:
    letters = table_letters(table)
    rng = np.random.default_rng(seed)
    worst, used, symbolic = 0.0, 0, 0
    for _ in range(50 * count):
        if used == count:
            break
        x, y, z = (letters[i] for i in rng.choice(len(letters), 3, replace=False))
        try:
            jac = _jacobiator(table, x, y, z)
        except KeyError:
            continue
        used += 1
        if not jac.terms:
            symbolic += 1
            continue
        worst = max(worst, _realized_residual(system, jac, HatPoly(), ell, spec))
    if used < count:
        worst = float("inf")
    return [Entry(ident, f"Jacobi identity on {count} random triples", "Jacobi identity", worst, TOL_JACOBI,
                  str(Ell.of(ell)), {"triples": used, "symbolically_zero": symbolic})]


def _table_entries(system, table, ell, spec, source) -> list[Entry]:
    out = []
    for (x, y), rhs in table.items():
        lhs = commutator(HatPoly.of(x) if isinstance(x, HatPoly) else [x],
                         HatPoly.of(y) if isinstance(y, HatPoly) else [y])
        r = _realized_residual(system, lhs, rhs, ell, spec)
        out.append(Entry(f"{source} [{x},{y}]", f"[{x}, {y}] = {rhs!r}", source, r, TOL_OP, str(Ell.of(ell))))
    return out


def _hyperboloid_closure() -> list[dict]:
    return [TABLES["su21"][1], SU2_A, SU11_B, SU11_C]


def check_algebra(algebra: str, system=None, ell=(1, 0, -4), seed: int | None = None) -> Report:
    """Check every bracket of a table on shifted operators, plus Jacobi where it closes.

    ``so6_derived`` conjugates the su(2,1) (hyperboloid) or su(3) (sphere)
    table by the three reflections; the derived brackets are checked
    numerically, for mutual consistency and for the Jacobi identity.
    """
    if algebra not in ALGEBRAS:
        raise ValueError(f"unknown algebra {algebra!r}")
    if algebra != "so6_derived":
        home, table = TABLES[algebra]
        system = home if system is None else System.parse(system)
        if system is not home:
            raise ValueError(f"{algebra} is realized on the {home.value}")
    else:
        system = System.SPHERE if system is None else System.parse(system)
    ell = Ell.of(ell)
    rep = _new(f"algebra {algebra}", system, ell, seed)
    with _Timer(rep):
        spec = _spec(system, rep.seed)
        if algebra != "so6_derived":
            rep.entries += _table_entries(system, table, ell, spec, algebra)
            closure = {"su21": _hyperboloid_closure(), "su3": [table]}.get(algebra, [table])
            merged, _ = _merge(closure)
            rep.entries += _jacobi_entries(system, merged, ell, spec, rep.seed, f"{algebra} Jacobi")
            return rep
        base = TABLES["su21" if system is System.HYPERBOLOID else "su3"][1]
        parts = _hyperboloid_closure() if system is System.HYPERBOLOID else [base]
        derived = [_letter_table(system, axis, base) for axis in range(3)]
        for axis, t in enumerate(derived):
            rep.entries += _table_entries(system, t, ell, spec, f"so6_derived I{axis}")
        merged, conflicts = _merge(parts + derived)
        rep.entries.append(Entry("so6_derived consistency", "conjugated tables agree on shared pairs",
                                 "derived brackets", float(conflicts), 0.5, str(ell),
                                 {"pairs": len(merged)}))
        rep.entries += _jacobi_entries(system, merged, ell, spec, rep.seed, "so6_derived Jacobi")
    return rep


# state identities ------------------------------------------------------------------

def _points(state: StateForm, seed: int, n: int = 40):
    return state.sample_spec(seed=seed, n_samples=n).points(state.variables)


def _vals(e: Expr, pts, n: int) -> np.ndarray:
    return np.broadcast_to(np.asarray(evaluate(e, pts), dtype=float), (n,))


def _rel(diff: np.ndarray, *scales: np.ndarray) -> float:
    s = max(float(np.max(np.abs(x))) for x in scales)
    return float(np.max(np.abs(diff))) / s if s > 0 else float(np.max(np.abs(diff)))


def _poly_on(state: StateForm, p: HatPoly) -> Expr:
    if state.is_1d:
        return apply_poly_theta(p, state.expr, state.ell)
    return apply_poly(state.system, p, state.expr, state.ell)[0]


def _raised(state: StateForm, families: Iterable[str]) -> list[StateForm]:
    return [r for r in (raise_state(state, f) for f in families) if r is not None]


def _casimir_entries(states, poly, h_of, ident, label, seed, n=40) -> list[Entry]:
    """H psi = h_of(state, C psi, psi) on each state; also the spread of the C-eigenvalue."""
    worst, values = 0.0, []
    for st in states:
        pts = _points(st, seed, n)
        psi = _vals(st.expr, pts, n)
        cpsi = _vals(_poly_on(st, poly), pts, n)
        hpsi = _vals(apply(st.hamiltonian(), st.expr), pts, n)
        rhs = h_of(st, cpsi, psi)
        worst = max(worst, _rel(hpsi - rhs, hpsi, psi))
        k = int(np.argmax(np.abs(psi)))
        values.append(float(cpsi[k] / psi[k]))
    spread = max(values) - min(values) if values else 0.0
    return [Entry(ident, label, "Casimir form of H", worst, TOL_STATE, detail={"states": len(states)}),
            Entry(f"{ident} constant", "Casimir eigenvalue constant across the representation",
                  "Casimir eigenvalue", spread, TOL_CONSTANT, detail={"value": values[0] if values else None})]


def _su2_entries(ell, seed) -> list[Entry]:
    states = [excited_1d(ell.l0, ell.l1, 0)]
    while len(states) < 3:
        nxt = raise_state(states[-1], "A")
        if nxt is None:
            break
        states.append(nxt)
    c = casimir_poly("su2")
    return _casimir_entries(states, c, lambda st, cpsi, psi: 4 * (cpsi + psi / 4),
                            "casimir su2", "H_theta = 4 (C + 1/4)", seed)


def check_casimir(system, ell, seed: int | None = None) -> Report:
    """Casimir forms of H on the ground state at ell and its raised states."""
    system = System.parse(system)
    ell = Ell.of(ell)
    rep = _new("casimir", system, ell, seed)
    with _Timer(rep):
        g = ground_state(system, ell)
        su_states = [g] + _raised(g, "ABC")
        if system is System.HYPERBOLOID:
            def h_of(st, cpsi, psi):
                cp = diagonal_eigenvalue("Cp", st.ell, system)
                return -4 * cpsi + float(cp ** 2 / 3 - Fraction(15, 4)) * psi
            entries = _casimir_entries(su_states, casimir_poly("su21"), h_of, "casimir su21",
                                       "H = -4 C + Cp^2 / 3 - 15/4", rep.seed)
        else:
            def h_of(st, cpsi, psi):
                d = diagonal_eigenvalue("D", st.ell, system)
                return 4 * cpsi + float(Fraction(15, 4) - d ** 2 / 3) * psi
            entries = _casimir_entries(su_states, casimir_poly("su3"), h_of, "casimir su3",
                                       "H = 4 C - D^2 / 3 + 15/4", rep.seed)
            so6_states = [g] + _raised(g, FAMILIES)
            entries += _casimir_entries(so6_states, so6_symmetrized(),
                                        lambda st, spsi, psi: spsi + float(SO6_SHIFT) * psi,
                                        "casimir so6", "H = S + 15/4 with S the symmetrized form",
                                        rep.seed)[:1]
        su1 = ell if system is System.HYPERBOLOID else Ell(ell.l0, ell.l1, 0)
        entries += _su2_entries(su1, rep.seed)
        for e in entries:
            e.params = str(ell)
        rep.entries += entries
    return rep


def _lowering_families(system) -> tuple[str, ...]:
    return ("A", "B", "C") if System.parse(system) is System.HYPERBOLOID else ("A", "A~", "C")


def check_states(system, ell, seed: int | None = None) -> Report:
    """Ground-state annihilation and eigen-residuals of ground and raised states."""
    system = System.parse(system)
    ell = Ell.of(ell)
    rep = _new("states", system, ell, seed)
    with _Timer(rep):
        g = ground_state(system, ell)
        n = 40
        pts = _points(g, rep.seed, n)
        psi = _vals(g.expr, pts, n)
        worst = 0.0
        for fam in _lowering_families(system):
            op, _ = letter_action(system, Letter(fam, "-"), ell)
            worst = max(worst, _rel(_vals(apply(op, g.expr), pts, n), psi))
        rep.entries.append(Entry("ground annihilation", "lowering operators annihilate the ground state",
                                 "ground states", worst, TOL_ANNIHILATE, str(ell),
                                 {"families": list(_lowering_families(system))}))
        rep.entries.append(Entry("ground eigen", f"H psi0 = E psi0 with E = {g.energy}", "energies",
                                 eigen_residual(g, seed=rep.seed), TOL_STATE, str(ell),
                                 {"energy": str(g.energy)}))
        fams = "ABC" if system is System.HYPERBOLOID else FAMILIES
        raised = _raised(g, fams)
        raised += [r for r in (raise_state(s, f) for s in raised[:2] for f in "AC") if r is not None]
        worst = max((eigen_residual(s, seed=rep.seed) for s in raised), default=0.0)
        rep.entries.append(Entry("raised eigen", "raised states keep the energy", "energies", worst,
                                 TOL_STATE, str(ell), {"states": len(raised)}))
    return rep


def level_states(q: int) -> list[StateForm]:
    """Ground states of one sphere level and their single raises."""
    out = []
    for m in range(q + 1):
        g = ground_state(System.SPHERE, Ell(m, 0, q - m))
        out += [g] + _raised(g, FAMILIES)
    return out


def check_quadratic_algebra(system=System.SPHERE, ell=(0, 0, 1), variant: str = "stated",
                            seed: int | None = None) -> Report:
    """Brackets of the integrals X_i, Y_j on the states of the level through ell.

    Diagonal letters are resolved at the index where they act, so a word is
    read right to left exactly as it acts on a state.
    """
    system = System.parse(system)
    if system is not System.SPHERE:
        raise ValueError("the quadratic algebra is defined on the sphere")
    ell = Ell.of(ell)
    g = ground_state(system, ell)
    q = int(g.quantum_numbers["m"] + g.quantum_numbers["n"])
    rep = _new(f"quadratic algebra ({variant})", system, ell, seed)
    with _Timer(rep):
        states = level_states(q)
        n = 24
        cache = [(st, _points(st, rep.seed, n)) for st in states]
        for group in bracket_groups(quadratic_algebra_relations(variant)):
            worst = 0.0
            for st, pts in cache:
                psi = _vals(st.expr, pts, n)
                for _, lhs, rhs in group:
                    a = _vals(_poly_on(st, lhs), pts, n)
                    b = _vals(_poly_on(st, rhs), pts, n)
                    worst = max(worst, _rel(a - b, psi))
            label = " ; ".join(lab for lab, _, _ in group)
            rep.entries.append(Entry(f"quadratic {label}", f"{label} closes ({variant})",
                                     f"quadratic algebra ({variant})", worst, TOL_CUBIC, str(ell),
                                     {"level": q, "states": len(states)}))
        worst = 0.0
        for x in ("X1", "X2", "X3", "Y1", "Y2"):
            p = {"X1": HatPoly.of("A+ A-"), "X2": HatPoly.of("B+ B-"), "X3": HatPoly.of("C+ C-"),
                 "Y1": HatPoly.of("A+ C+ B-"), "Y2": HatPoly.of("B+ C- A-")}[x]
            for st, pts in cache:
                img = _poly_on(st, p)
                v = _vals(img, pts, n)
                e = float(st.energy)
                h = _vals(apply(st.hamiltonian(), img), pts, n)
                # images may vanish; scale by the size of the terms compared
                worst = max(worst, _rel(h - e * v, e * v, e * _vals(st.expr, pts, n)))
        rep.entries.append(Entry("quadratic energy preservation", "[X_i, H] = [Y_j, H] = 0 on level states",
                                 "integrals of motion", worst, TOL_CUBIC, str(ell), {"level": q}))
    return rep


# lattice counts -------------------------------------------------------------------

def so6_level_count(q: int) -> int:
    """Dimension of the so(6) symmetric traceless tensors of rank q."""
    return (q + 1) * (q + 2) ** 2 * (q + 3) // 12


def su3_dimension(m: int, n: int) -> int:
    return (m + 1) * (n + 1) * (m + n + 2) // 2


def _rank(vectors: list[np.ndarray], rtol: float = 1e-8) -> int:
    if not vectors:
        return 0
    s = np.linalg.svd(np.stack(vectors), compute_uv=False)
    return int(np.sum(s > rtol * s[0])) if s[0] > 0 else 0


def check_lattice(system, ell, seed: int | None = None) -> Report:
    """Lattice enumeration against independent counts.

    Sphere: the so(6) level and su(3) representation through ell against the
    dimension formulas.  Hyperboloid: the su(2,1) multiplicity two steps above
    the base against the rank of the raised states that reach it.
    """
    system = System.parse(system)
    ell = Ell.of(ell)
    rep = _new("lattice", system, ell, seed)
    with _Timer(rep):
        g = ground_state(system, ell)
        if system is System.SPHERE:
            m, n = g.quantum_numbers["m"], g.quantum_numbers["n"]
            q = m + n
            got = total_states(lattice(system, IurDescriptor.so6(q)))
            want = so6_level_count(q)
            rep.entries.append(Entry("so6 level count", f"so(6) level q={q} holds {want} states", "lattice counts",
                                     float(abs(got - want)), 0.5, str(ell), {"q": q, "count": got}))
            got = total_states(lattice(system, IurDescriptor.su3(m, n)))
            want = su3_dimension(m, n)
            rep.entries.append(Entry("su3 count", f"su(3) ({m},{n}) holds {want} states", "lattice counts",
                                     float(abs(got - want)), 0.5, str(ell), {"count": got}))
        else:
            target = ell - delta(system, "B")
            pts = lattice(system, IurDescriptor.su21(ell, 2))
            mult = next((p.mult for p in pts if p.ell == target), 0)
            cands = []
            for text in ("C+ A+", "A+ C+", "B+"):
                s = g
                for fam in reversed(text.split()):
                    s = raise_state(s, fam.rstrip("+")) if s is not None else None
                if s is not None and s.ell == target:
                    cands.append(s)
            n = 40
            vecs = [_vals(s.expr, _points(g, rep.seed, n), n) for s in cands]
            vecs = [v / np.max(np.abs(v)) for v in vecs]
            rank = _rank(vecs)
            rep.entries.append(Entry("su21 multiplicity", f"multiplicity at {target} equals independent states",
                                     "lattice counts", float(abs(mult - rank)), 0.5, str(ell),
                                     {"multiplicity": mult, "rank": rank}))
    return rep


# full suite and coverage ----------------------------------------------------------

def _valid_ground(system, ell) -> bool:
    try:
        ground_state(system, ell)
    except InvalidState:
        return False
    return True


def identity_catalog(system, ell) -> list[str]:
    """Identity ids the full suite must produce, once each, at ell."""
    system = System.parse(system)
    ids = [f"factorization {f}" for f in FAMILIES] + [f"refactorization {f}" for f in FAMILIES]
    ids += [f"intertwining {f}{s}" for f in FAMILIES for s in "-+"]
    algebras = (["su2_A", "su2_tildeA", "su11_B", "su11_C", "su21"] if system is System.HYPERBOLOID
                else ["su3"])
    for name in algebras:
        _, table = TABLES[name]
        ids += [f"{name} [{x},{y}]" for x, y in table] + [f"{name} Jacobi"]
    base = TABLES["su21" if system is System.HYPERBOLOID else "su3"][1]
    for axis in range(3):
        ids += [f"so6_derived I{axis} [{x},{y}]" for x, y in _letter_table(system, axis, base)]
    ids += ["so6_derived consistency", "so6_derived Jacobi"]
    if _valid_ground(system, ell):
        if system is System.HYPERBOLOID:
            ids += ["casimir su21", "casimir su21 constant"]
        else:
            ids += ["casimir su3", "casimir su3 constant", "casimir so6"]
        ids += ["casimir su2", "casimir su2 constant"]
        ids += ["ground annihilation", "ground eigen", "raised eigen"]
        ids += ["so6 level count", "su3 count"] if system is System.SPHERE else ["su21 multiplicity"]
    return ids


def quadratic_catalog() -> list[str]:
    groups = bracket_groups(quadratic_algebra_relations("exact"))
    return [f"quadratic {' ; '.join(lab for lab, _, _ in g)}" for g in groups] + ["quadratic energy preservation"]


def coverage(report: Report, system, sweep: Sequence) -> list[str]:
    """Problems with the report against the catalog: missing or duplicated ids."""
    problems = []
    for ell in sweep:
        p = str(Ell.of(ell))
        for ident in identity_catalog(system, ell):
            k = len(report.find(ident, p))
            if k != 1:
                problems.append(f"{ident} at {p}: {k} entries")
    return problems


def run_full_suite(system, sweep: Sequence, seed: int | None = None,
                   quadratic_variant: str = "exact") -> Report:
    """Every suite at every ell of the sweep, plus the sphere quadratic algebra once.

    The coverage lock is appended as its own entry: it fails when an
    identity of the catalog is missing or reported twice.
    """
    system = System.parse(system)
    sweep = [Ell.of(e) for e in sweep]
    rep = Report("full", system.value, [str(e) for e in sweep], default_seed() if seed is None else seed)
    if not sweep:
        return rep
    t0 = time.perf_counter()
    algebras = (["su2_A", "su2_tildeA", "su11_B", "su11_C", "su21"] if system is System.HYPERBOLOID
                else ["su3"])
    for ell in sweep:
        rep.extend(check_factorization(system, ell, seed=rep.seed))
        rep.extend(check_intertwining(system, ell, seed=rep.seed))
        for name in algebras:
            rep.extend(check_algebra(name, system, ell, seed=rep.seed))
        rep.extend(check_algebra("so6_derived", system, ell, seed=rep.seed))
        if _valid_ground(system, ell):
            rep.extend(check_casimir(system, ell, seed=rep.seed))
            rep.extend(check_states(system, ell, seed=rep.seed))
            rep.extend(check_lattice(system, ell, seed=rep.seed))
    expected_quadratic = []
    if system is System.SPHERE:
        q_ell = next((e for e in sweep if _valid_ground(system, e)), None)
        if q_ell is not None:
            rep.extend(check_quadratic_algebra(system, Ell(0, 0, 1), quadratic_variant, seed=rep.seed))
            expected_quadratic = quadratic_catalog()
    problems = coverage(rep, system, sweep)
    problems += [f"{i}: missing" for i in expected_quadratic if len(rep.find(i)) != 1]
    rep.entries.append(Entry("coverage", "every catalogued identity reported exactly once", "coverage lock",
                             float(len(problems)), 0.5, detail={"problems": problems[:20]}))
    rep.wall_time = time.perf_counter() - t0
    return rep


__all__ = [
    "ALGEBRAS", "Entry", "Report", "SCHEMA", "TOL_CUBIC", "TOL_JACOBI", "TOL_OP", "TOL_STATE",
    "check_algebra", "check_casimir", "check_factorization", "check_intertwining", "check_lattice",
    "check_quadratic_algebra", "check_states", "coverage", "default_seed", "identity_catalog",
    "level_states", "quadratic_catalog", "run_full_suite", "so6_level_count", "su3_dimension",
]
