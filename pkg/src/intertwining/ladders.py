"""Intertwining (ladder) operators, their constants, shifts and hat algebra.

Every ladder family K in {A, B, C} is written in coordinate-free form

    K^{+-}_ell = +-sigma J_k + W_K(ell; s0, s1, s2)

where J_k is a rotation/boost generator and W_K is a superpotential built
from ratios of ambient coordinates.  Substituting a chart's ambient map
gives the operator in that chart.  Tilde families are the same operators at
a reflected parameter triple.

Hat (free-index) operators act on a state indexed by ell:

    K^-  : f_ell -> (1/2) K^-_ell f_ell              lands at ell + delta_K
    K^+  : f_ell -> (1/2) K^+_{ell - delta_K} f_ell  lands at ell - delta_K
    K    : f_ell -> kappa_K(ell) f_ell               (diagonal weight)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .diffop import DiffOp, apply
from .expr import Expr, add, as_expr, free_symbols, mul, power
from .systems import HALF, Ell, System, chart, generators

FAMILIES = ("A", "B", "C", "A~", "B~", "C~")
BASE_FAMILIES = ("A", "B", "C")
DIAGONALS = FAMILIES + ("L0", "L1", "L2", "D", "Cp")

# which generator carries the derivative part, and its sign in K^+
_J_INDEX = {"A": 2, "B": 1, "C": 0}
_SIGMA = {System.HYPERBOLOID: 1, System.SPHERE: -1}

# reflection that defines each tilde family
TILDE_AXIS = {
    System.HYPERBOLOID: {"A": 0, "B": 0, "C": 1},
    System.SPHERE: {"A": 1, "B": 2, "C": 1},
}

DELTA = {"A": Ell(1, 1, 0), "B": Ell(1, 0, 1), "C": Ell(0, -1, 1)}

SEPARATED_CHART = {
    (System.HYPERBOLOID, "A"): ("theta_xi", "theta"),
    (System.HYPERBOLOID, "B"): ("psi_chi", "chi"),
    (System.HYPERBOLOID, "C"): ("phi_beta", "beta"),
    (System.SPHERE, "A"): ("theta_phi", "theta"),
    (System.SPHERE, "B"): ("xi_psi", "xi"),
    (System.SPHERE, "C"): ("eta_beta", "eta"),
}


class LadderError(ValueError):
    pass


def _split(family: str) -> tuple[str, bool]:
    if family not in FAMILIES:
        raise LadderError(f"unknown ladder family {family!r}")
    return family.rstrip("~"), family.endswith("~")


def effective_ell(system, family: str, ell) -> Ell:
    """Parameter triple at which the base operator is evaluated."""
    system = System.parse(system)
    base, tilde = _split(family)
    ell = Ell.of(ell)
    return ell.reflect(TILDE_AXIS[system][base]) if tilde else ell


def delta(system, family: str) -> Ell:
    """Shift of ell produced by the lowering member K^-."""
    system = System.parse(system)
    base, tilde = _split(family)
    d = DELTA[base]
    return d.reflect(TILDE_AXIS[system][base]) if tilde else d


def _ratio(a: Expr, b: Expr) -> Expr:
    return mul(a, power(b, -1))


def superpotential(system, family: str, ell, s: Sequence[Expr]) -> Expr:
    system = System.parse(system)
    base, _ = _split(family)
    l0, l1, l2 = effective_ell(system, family, ell)
    s0, s1, s2 = s
    if base == "A":
        return add(mul(-(l0 + HALF), _ratio(s1, s0)), mul(l1 + HALF, _ratio(s0, s1)))
    if system is System.HYPERBOLOID:
        if base == "B":
            return add(mul(l2 + HALF, _ratio(s0, s2)), mul(l0 + HALF, _ratio(s2, s0)))
        return add(mul(l2 + HALF, _ratio(s1, s2)), mul(-l1 + HALF, _ratio(s2, s1)))
    if base == "B":
        return add(mul(-(l2 + HALF), _ratio(s0, s2)), mul(l0 + HALF, _ratio(s2, s0)))
    return add(mul(l1 - HALF, _ratio(s2, s1)), mul(l2 + HALF, _ratio(s1, s2)))


def _sign(sign) -> int:
    if sign in ("+", 1, "+1"):
        return 1
    if sign in ("-", -1, "-1"):
        return -1
    raise LadderError(f"bad sign {sign!r}")


def ladder_op(system, family: str, sign, ell, chart_name: str | None = None,
              form: str = "chart") -> DiffOp:
    """Concrete operator K^{sign}_ell.

    ``form='chart'`` gives the two-variable operator in ``chart_name`` (the
    primary chart by default); ``form='separated'`` gives the one-variable
    operator in the family's own separating coordinate.
    """
    system = System.parse(system)
    base, _ = _split(family)
    sg = _sign(sign)
    if form == "separated":
        chart_name, var = SEPARATED_CHART[(system, base)]
    elif form != "chart":
        raise LadderError(f"unknown form {form!r}")
    ch = chart(system, chart_name)
    j = generators(system, ch.name)[_J_INDEX[base]]
    w = superpotential(system, family, ell, ch.ambient)
    op = j.scale(sg * _SIGMA[system]) + DiffOp.multiply(ch.variables, w)
    if form == "chart":
        return op
    k = ch.variables.index(var)
    terms = {}
    for idx, c in op.terms.items():
        if any(i for n, i in enumerate(idx) if n != k) or (free_symbols(c) - {var}):
            raise AssertionError(f"{family} does not separate in {var}")
        terms[(idx[k],)] = c
    return DiffOp((var,), terms)


def lambda_const(system, family: str, ell) -> Fraction:
    """Factorisation constant: K^+_ell K^-_ell + lambda_ell = H_sep(ell)."""
    system = System.parse(system)
    base, _ = _split(family)
    l0, l1, l2 = effective_ell(system, family, ell)
    if base == "A":
        return (l0 + l1 + 1) ** 2
    if base == "B":
        v = (l0 + l2 + 1) ** 2
    else:
        v = (1 - l1 + l2) ** 2
    return -v if system is System.HYPERBOLOID else v


def shift(system, family: str, sign, ell) -> Ell:
    """Index of the state produced by the hat operator K^{sign} acting at ell."""
    d = delta(system, family)
    return Ell.of(ell) + d if _sign(sign) < 0 else Ell.of(ell) - d


def diagonal_eigenvalue(name: str, ell, system=System.HYPERBOLOID) -> Fraction:
    system = System.parse(system)
    ell = Ell.of(ell)
    if name in FAMILIES:
        base, _ = _split(name)
        l0, l1, l2 = effective_ell(system, name, ell)
        if base == "A":
            return -(l0 + l1) / 2
        if base == "B":
            return -(l0 + l2) / 2
        return -(l2 - l1) / 2
    l0, l1, l2 = ell
    if name in ("L0", "L1", "L2"):
        return ell[int(name[1])]
    if name == "D":
        return l0 - l1 - l2 if system is System.SPHERE else l0 - l1
    if name == "Cp":
        return l1 + l2 - l0
    raise LadderError(f"unknown diagonal operator {name!r}")


def reflect(ell, axis: int) -> Ell:
    if axis not in (0, 1, 2):
        raise LadderError(f"bad reflection axis {axis!r}")
    return Ell.of(ell).reflect(axis)


def reflect_conjugate(system, axis: int, family: str, role: str) -> tuple[int, str, str]:
    """I_axis K I_axis expressed as sign * K'.

    ``role`` is '+', '-' or '0' (diagonal).  Returns (sign, family', role').
    Derived from the superpotential parameters: a reflection touching neither
    parameter of K leaves it alone; touching exactly the one that defines the
    tilde partner maps K to that partner; any other single flip, or a flip of
    both parameters, gives minus the partner (or of K) with swapped role.
    """
    system = System.parse(system)
    base, tilde = _split(family)
    params = {"A": {0, 1}, "B": {0, 2}, "C": {1, 2}}[base]
    t_axis = TILDE_AXIS[system][base]
    flips = {axis} & params
    if tilde:
        flips ^= {t_axis}
    if not flips:
        return 1, base, role
    if flips == {t_axis}:
        return 1, base + "~", role
    swapped = {"+": "-", "-": "+", "0": "0"}[role]
    if flips == params:
        return -1, base, swapped
    return -1, base + "~", swapped


# hat letters, words and polynomials -----------------------------------------------

@dataclass(frozen=True)
class Letter:
    family: str
    role: str  # '+', '-', '0'

    @classmethod
    def parse(cls, text: str) -> "Letter":
        text = text.strip()
        m = re.fullmatch(r"([ABC]~?|L[012]|D|Cp)([+-]?)", text)
        if not m:
            raise LadderError(f"cannot parse letter {text!r}")
        fam, sg = m.groups()
        if sg and fam not in FAMILIES:
            raise LadderError(f"{fam} has no ladder members")
        return cls(fam, sg or "0")

    def __str__(self):
        return self.family + ("" if self.role == "0" else self.role)


Word = tuple[Letter, ...]


def word(text: Union[str, Iterable]) -> Word:
    if isinstance(text, str):
        return tuple(Letter.parse(t) for t in text.split())
    return tuple(t if isinstance(t, Letter) else Letter.parse(t) for t in text)


class HatPoly:
    """Rational linear combination of hat words (empty word = identity)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Fraction] | None = None):
        acc: dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                acc[w] = acc.get(w, Fraction(0)) + c
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def of(cls, value) -> "HatPoly":
        if isinstance(value, HatPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return cls({(): Fraction(value)})
        return cls({word(value): Fraction(1)})

    def __add__(self, other):
        other = HatPoly.of(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, Fraction(0)) + c
        return HatPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return HatPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-HatPoly.of(other))

    def __rsub__(self, other):
        return HatPoly.of(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HatPoly({w: c * other for w, c in self.terms.items()})
        other = HatPoly.of(other)
        t: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                t[w1 + w2] = t.get(w1 + w2, Fraction(0)) + c1 * c2
        return HatPoly(t)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return HatPoly.of(other) * self

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{' '.join(map(str, w))}]" for w, c in self.terms.items())


def H(text) -> HatPoly:
    """Shorthand: ``H('A+ B-')`` is the word A^+ B^- as a polynomial."""
    return HatPoly.of(text)


def commutator(x, y) -> HatPoly:
    x, y = HatPoly.of(x), HatPoly.of(y)
    return x * y - y * x


def anticommutator(x, y) -> HatPoly:
    x, y = HatPoly.of(x), HatPoly.of(y)
    return x * y + y * x


def letter_action(system, letter: Letter, ell) -> tuple[Union[DiffOp, Fraction], Ell]:
    """Concrete action of one hat letter on a state indexed by ell."""
    system = System.parse(system)
    ell = Ell.of(ell)
    if letter.role == "0":
        return diagonal_eigenvalue(letter.family, ell, system), ell
    if letter.role == "-":
        op = ladder_op(system, letter.family, "-", ell)
        return op.scale(HALF), shift(system, letter.family, "-", ell)
    src = ell - delta(system, letter.family)
    op = ladder_op(system, letter.family, "+", src)
    return op.scale(HALF), src


def word_target(system, w: Word, ell) -> Ell:
    ell = Ell.of(ell)
    for letter in reversed(w):
        if letter.role == "0":
            continue
        ell = shift(system, letter.family, letter.role, ell)
    return ell


def apply_word(system, w: Word, f: Expr, ell) -> tuple[Expr, Ell]:
    """Act with a word (rightmost letter first) on a state f indexed by ell."""
    ell = Ell.of(ell)
    f = as_expr(f)
    for letter in reversed(w):
        act, ell = letter_action(system, letter, ell)
        f = mul(act, f) if isinstance(act, Fraction) else apply(act, f)
    return f, ell


def poly_target(system, p: HatPoly, ell) -> Ell | None:
    targets = {word_target(system, w, ell) for w in p.terms}
    if len(targets) > 1:
        raise LadderError(f"words of {p!r} land on different indices {sorted(map(str, targets))}")
    return targets.pop() if targets else None


def apply_poly(system, p, f: Expr, ell) -> tuple[Expr, Ell | None]:
    p = HatPoly.of(p)
    tgt = poly_target(system, p, ell)
    parts = []
    for w, c in p.terms.items():
        g, _ = apply_word(system, w, f, ell)
        parts.append(mul(c, g))
    return add(*parts), tgt


def theta_letter_action(letter: Letter, ell) -> tuple[Union[DiffOp, Fraction], Ell]:
    """Action of an A-type hat letter on one-variable theta states."""
    ell = Ell.of(ell)
    system = System.HYPERBOLOID
    if letter.family not in ("A", "A~"):
        raise LadderError("one-variable states carry only A and A~ letters")
    if letter.role == "0":
        return diagonal_eigenvalue(letter.family, ell, system), ell
    if letter.role == "-":
        op = ladder_op(system, letter.family, "-", ell, form="separated")
        return op.scale(HALF), shift(system, letter.family, "-", ell)
    src = ell - delta(system, letter.family)
    return ladder_op(system, letter.family, "+", src, form="separated").scale(HALF), src


def apply_poly_theta(p, f: Expr, ell) -> Expr:
    p = HatPoly.of(p)
    parts = []
    for w, c in p.terms.items():
        g, cur = as_expr(f), Ell.of(ell)
        for letter in reversed(w):
            act, cur = theta_letter_action(letter, cur)
            g = mul(act, g) if isinstance(act, Fraction) else apply(act, g)
        parts.append(mul(c, g))
    return add(*parts)


def realize_word(system, w: Word, ell) -> tuple[DiffOp, Ell]:
    system = System.parse(system)
    ell = Ell.of(ell)
    vs = chart(system).variables
    op = DiffOp.identity(vs)
    for letter in reversed(w):
        act, ell = letter_action(system, letter, ell)
        op = op.scale(act) if isinstance(act, Fraction) else act @ op
    return op, ell


def realize_poly(system, p, ell) -> tuple[DiffOp, Ell | None]:
    """Concrete operator of a hat polynomial acting on states at ell."""
    system = System.parse(system)
    p = HatPoly.of(p)
    tgt = poly_target(system, p, ell)
    out = DiffOp.zero(chart(system).variables)
    for w, c in p.terms.items():
        op, _ = realize_word(system, w, ell)
        out = out + op.scale(c)
    return out, tgt


# bracket tables -------------------------------------------------------------------

def _table(rows: str) -> dict[tuple[Letter, Letter], HatPoly]:
    """Parse lines of the form ``X Y : c1 W1 ; c2 W2`` (empty rhs means 0)."""
    out = {}
    for line in rows.strip().splitlines():
        lhs, rhs = line.split(":")
        x, y = (Letter.parse(t) for t in lhs.split())
        p = HatPoly()
        for part in filter(None, (s.strip() for s in rhs.split(";"))):
            c, w = part.split(maxsplit=1)
            p = p + HatPoly.of(w) * Fraction(c)
        out[(x, y)] = p
    return out


SU2_A = _table("""
A A+ : 1 A+
A A- : -1 A-
A+ A- : 2 A
""")

SU2_A_TILDE = _table("""
A~ A~+ : 1 A~+
A~ A~- : -1 A~-
A~+ A~- : 2 A~
""")

SU11_B = _table("""
B+ B- : -2 B
B B+ : 1 B+
B B- : -1 B-
""")

SU11_C = _table("""
C- C+ : 2 C
C C+ : 1 C+
C C- : -1 C-
""")

_CROSSED_SU21 = """
A+ B+ :
A+ B- : -1 C-
A+ B : -1/2 A+
A+ C+ : 1 B+
A+ C- :
A+ C : 1/2 A+
A- B+ : 1 C+
A- B- :
A- B : 1/2 A-
A- C+ :
A- C- : -1 B-
A- C : -1/2 A-
A B+ : 1/2 B+
A B- : -1/2 B-
A B :
A C+ : -1/2 C+
A C- : 1/2 C-
A C :
B+ C+ :
B+ C- : -1 A+
B+ C : -1/2 B+
B- C+ : 1 A-
B- C- :
B- C : 1/2 B-
B C+ : 1/2 C+
B C- : -1/2 C-
B C :
"""

SU21 = _table(_CROSSED_SU21)

SU3 = _table("""
A+ A- : 2 A
A A+ : 1 A+
A A- : -1 A-
B+ B- : 2 B
B B+ : 1 B+
B B- : -1 B-
C C+ : 1 C+
C C- : -1 C-
C+ C- : 2 C
A+ B+ :
A+ B- : 1 C-
A+ B : -1/2 A+
A+ C+ : -1 B+
A+ C- :
A+ C : 1/2 A+
A- B+ : -1 C+
A- B- :
A- B : 1/2 A-
A- C+ :
A- C- : 1 B-
A- C : -1/2 A-
A B+ : 1/2 B+
A B- : -1/2 B-
A B :
A C+ : -1/2 C+
A C- : 1/2 C-
A C :
B+ C+ :
B+ C- : -1 A+
B+ C : -1/2 B+
B- C+ : 1 A-
B- C- :
B- C : 1/2 B-
B C+ : 1/2 C+
B C- : -1/2 C-
B C :
""")

TABLES = {
    "su2_A": (System.HYPERBOLOID, SU2_A),
    "su2_tildeA": (System.HYPERBOLOID, SU2_A_TILDE),
    "su11_B": (System.HYPERBOLOID, SU11_B),
    "su11_C": (System.HYPERBOLOID, SU11_C),
    "su21": (System.HYPERBOLOID, SU21),
    "su3": (System.SPHERE, SU3),
}


def conjugate_letter(system, axis: int, letter: Letter) -> HatPoly:
    if letter.family not in FAMILIES:
        return HatPoly.of([letter])
    sg, fam, role = reflect_conjugate(system, axis, letter.family, letter.role)
    return HatPoly.of([Letter(fam, role)]) * sg


def conjugate_poly(system, axis: int, p: HatPoly) -> HatPoly:
    out = HatPoly()
    for w, c in p.terms.items():
        term = HatPoly.of(c)
        for letter in w:
            term = term * conjugate_letter(system, axis, letter)
        out = out + term
    return out


def conjugated_table(system, axis: int, table) -> dict[tuple[HatPoly, HatPoly], HatPoly]:
    """Image of a bracket table under I_axis (derived brackets of the larger algebra)."""
    return {(conjugate_letter(system, axis, x), conjugate_letter(system, axis, y)):
            conjugate_poly(system, axis, rhs) for (x, y), rhs in table.items()}


def table_bracket(table, x: Letter, y: Letter) -> HatPoly:
    """[x, y] read from a table using antisymmetry."""
    if x == y:
        return HatPoly()
    if (x, y) in table:
        return table[(x, y)]
    if (y, x) in table:
        return -table[(y, x)]
    raise KeyError(f"[{x}, {y}] not in table")


def table_jacobiator(table, x: Letter, y: Letter, z: Letter) -> HatPoly:
    """Sum over cyclic permutations of [x, T(y, z)], expanded with the table."""
    out = HatPoly()
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        inner = table_bracket(table, b, c)
        for w, coef in inner.terms.items():
            if len(w) != 1:
                raise LadderError("table entries must be linear")
            out = out + table_bracket(table, a, w[0]) * coef
    return out


def table_letters(table) -> list[Letter]:
    seen: list[Letter] = []
    for x, y in table:
        for letter in (x, y):
            if letter not in seen:
                seen.append(letter)
    return seen


# Casimirs and integrals --------------------------------------------------------------

def casimir_poly(algebra: str) -> HatPoly:
    two_thirds = Fraction(2, 3)
    if algebra == "su2":
        return H("A+ A-") + H("A A") - H("A")
    if algebra == "su21":
        return (H("A+ A-") - H("B+ B-") - H("C+ C-")
                + (H("A A") + H("B B") + H("C C")) * two_thirds - H("A") - H("B") - H("C"))
    if algebra == "su3":
        out = H("A+ A-") + H("B+ B-") + H("C+ C-")
        for k in "ABC":
            out = out + (H(f"{k} {k}") - H(k) * Fraction(3, 2)) * two_thirds
        return out
    raise LadderError(f"no Casimir for {algebra!r}")


SO6_SHIFT = Fraction(15, 4)


def so6_symmetrized() -> HatPoly:
    """Anticommutator sum of all six ladder pairs plus sum L_i^2.

    On sphere states H equals this operator plus ``SO6_SHIFT``.
    """
    out = HatPoly()
    for fam in FAMILIES:
        out = out + anticommutator(H(f"{fam}+"), H(f"{fam}-"))
    for i in range(3):
        out = out + H(f"L{i} L{i}")
    return out


X1, X2, X3 = H("A+ A-"), H("B+ B-"), H("C+ C-")
Y1, Y2 = H("A+ C+ B-"), H("B+ C- A-")


def quadratic_algebra_relations(variant: str = "stated") -> list[tuple[str, HatPoly, HatPoly]]:
    """Brackets of the sphere's integrals X_i, Y_j as (label, lhs, rhs).

    ``variant='stated'`` is the commonly quoted closure; ``'exact'`` replaces
    the four [X2|X3, Y] relations by forms that hold identically in the
    enveloping algebra of the su(3) table (the quoted ones fail on states
    carrying a B excitation).
    """
    A, B, C = H("A"), H("B"), H("C")
    one = HatPoly.of(1)
    common = [
        ("[X1,X2]", commutator(X1, X2), -Y1 + Y2),
        ("[X1,X3]", commutator(X1, X3), Y1 - Y2),
        ("[X2,X3]", commutator(X2, X3), -Y1 + Y2),
        ("[X1,Y1]", commutator(X1, Y1), X1 * X2 - X1 * X3 - (A - one) * Y1 * 2),
        ("[X1,Y2]", commutator(X1, Y2), -(X2 * X1) + X3 * X1 + (A - one) * Y2 * 2),
    ]
    last = ("[Y1,Y2]", commutator(Y1, Y2),
            (-(C * X1 * X2) + B * X1 * X3 + A * X2 * X3 + (B + C) * Y1 - A * Y2 + A * C * X2 * 2) * 2)
    if variant == "stated":
        middle = [
            ("[X2,Y1]", commutator(X2, Y1), X1 * X2 - X2 * X3 - (one + B * 2) * Y1 + Y2 - C * X2 * 2),
            ("[X2,Y2]", commutator(X2, Y2), -(X2 * X1) + X3 * X2 + (one + B * 2) * Y2 - Y1 + C * X2 * 2),
            ("[X3,Y1]", commutator(X3, Y1), -(X1 * X3) - X2 * X3 + C * Y1 * 2 - C * X2 * 2 + Y2),
            ("[X3,Y2]", commutator(X3, Y2), X3 * X1 + X3 * X2 - C * Y2 * 2 + C * X2 * 2 - Y1),
        ]
    elif variant == "exact":
        middle = [
            ("[X2,Y1]", commutator(X2, Y1), X1 * X2 - X2 * X3 - (one - B * 2) * Y1 + Y2 + C * X2 * 2),
            ("[X2,Y2]", commutator(X2, Y2), -(X2 * X1) + X3 * X2 + (one - B * 2) * Y2 - Y1 - C * X2 * 2),
            ("[X3,Y1]", commutator(X3, Y1), -(X1 * X3) + X2 * X3 + Y1 - Y2 - C * (X2 + Y1) * 2),
            ("[X3,Y2]", commutator(X3, Y2), X1 * X3 - X2 * X3 - Y1 + Y2 + C * (X2 + Y2) * 2),
        ]
    else:
        raise LadderError(f"unknown variant {variant!r}")
    return common + middle + [last]


def bracket_groups(relations) -> list[list[tuple[str, HatPoly, HatPoly]]]:
    """Group the three X-X relations (one chained statement) so the list has eight entries."""
    return [relations[:3]] + [[r] for r in relations[3:]]


def separated_chart_variable(system, family: str) -> str:
    base, _ = _split(family)
    return SEPARATED_CHART[(System.parse(system), base)][1]


