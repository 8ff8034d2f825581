"""Immutable expression trees with exact rational constants.

Nodes are hash-consed: structurally equal expressions are the same object,
so identity comparison is structural comparison and derivatives can be
memoised on the node itself.  Evaluation is vectorised over numpy arrays.
"""

from __future__ import annotations

import math
import weakref
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

import numpy as np

PARAMETERS = ("l0", "l1", "l2", "m0", "m1", "m2", "alpha", "E")
VARIABLES = ("theta", "xi", "phi", "psi", "chi", "beta", "eta", "x")
FUNCTIONS = (
    "sin", "cos", "tan", "cot", "sec", "csc",
    "sinh", "cosh", "tanh", "coth",
)

Number = Union[int, Fraction]
Bindings = Mapping[str, object]


class EvaluationError(ValueError):
    """Raised when an expression cannot be evaluated at the given points."""


class UnboundSymbolError(EvaluationError):
    pass


class DomainError(EvaluationError):
    """Pole or branch-cut hit during evaluation."""


class ParseError(ValueError):
    pass


_INTERN: "weakref.WeakValueDictionary[tuple, Expr]" = weakref.WeakValueDictionary()


def _intern(cls, key):
    node = _INTERN.get(key)
    if node is None:
        node = object.__new__(cls)
        node._key = key
        node._dcache = {}
        _INTERN[key] = node
    return node


class Expr:
    __slots__ = ("_key", "_dcache", "__weakref__")

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else add(self, o)

    def __radd__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else add(o, self)

    def __sub__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else add(self, neg(o))

    def __rsub__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else add(o, neg(self))

    def __mul__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else mul(self, o)

    def __rmul__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else mul(o, self)

    def __truediv__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else mul(self, power(o, -1))

    def __rtruediv__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else mul(o, power(self, -1))

    def __neg__(self):
        return neg(self)

    def __pow__(self, exponent):
        return power(self, exponent)

    def __repr__(self):
        return to_prefix(self)

    def __reduce__(self):
        return (from_prefix, (to_prefix(self),))

    # structure ------------------------------------------------------------
    @property
    def children(self) -> tuple["Expr", ...]:
        return ()

    def is_const(self) -> bool:
        return False


class Const(Expr):
    __slots__ = ()

    def __new__(cls, value: Number):
        value = Fraction(value)
        return _intern(cls, ("c", value))

    @property
    def value(self) -> Fraction:
        return self._key[1]

    def is_const(self) -> bool:
        return True


class Sym(Expr):
    __slots__ = ()

    def __new__(cls, name: str):
        if name not in PARAMETERS and name not in VARIABLES:
            raise ValueError(f"unknown symbol {name!r}")
        return _intern(cls, ("s", name))

    @property
    def name(self) -> str:
        return self._key[1]


class Func(Expr):
    __slots__ = ()

    def __new__(cls, name: str, arg: Expr):
        if name not in FUNCTIONS:
            raise ValueError(f"unknown function {name!r}")
        return _intern(cls, ("f", name, arg))

    @property
    def name(self) -> str:
        return self._key[1]

    @property
    def arg(self) -> Expr:
        return self._key[2]

    @property
    def children(self):
        return (self._key[2],)


class Add(Expr):
    __slots__ = ()

    def __new__(cls, terms: tuple[Expr, ...]):
        return _intern(cls, ("+", terms))

    @property
    def children(self):
        return self._key[1]


class Mul(Expr):
    __slots__ = ()

    def __new__(cls, factors: tuple[Expr, ...]):
        return _intern(cls, ("*", factors))

    @property
    def children(self):
        return self._key[1]


class Pow(Expr):
    __slots__ = ()

    def __new__(cls, base: Expr, exponent: Fraction):
        return _intern(cls, ("^", base, Fraction(exponent)))

    @property
    def base(self) -> Expr:
        return self._key[1]

    @property
    def exponent(self) -> Fraction:
        return self._key[2]

    @property
    def children(self):
        return (self._key[1],)


ZERO = Const(0)
ONE = Const(1)


def as_expr(value) -> Expr:
    if isinstance(value, Expr):
        return value
    if isinstance(value, (int, Fraction)):
        return Const(value)
    if isinstance(value, str):
        return Sym(value)
    raise TypeError(f"cannot convert {type(value).__name__} to Expr; use Fraction for constants")


def _coerce(value):
    if isinstance(value, Expr):
        return value
    if isinstance(value, (int, Fraction)):
        return Const(value)
    return None


# smart constructors -------------------------------------------------------

def _split_coeff(term: Expr) -> tuple[Fraction, Expr]:
    if isinstance(term, Const):
        return term.value, ONE
    if isinstance(term, Mul):
        fs = term.children
        if isinstance(fs[0], Const):
            rest = fs[1:]
            return fs[0].value, rest[0] if len(rest) == 1 else Mul(rest)
    return Fraction(1), term


def add(*terms) -> Expr:
    flat: list[Expr] = []
    stack = [as_expr(t) for t in reversed(terms)]
    while stack:
        t = stack.pop()
        if isinstance(t, Add):
            stack.extend(reversed(t.children))
        else:
            flat.append(t)
    const = Fraction(0)
    coeffs: dict[Expr, Fraction] = {}
    for t in flat:
        c, rest = _split_coeff(t)
        if rest is ONE:
            const += c
        else:
            coeffs[rest] = coeffs.get(rest, Fraction(0)) + c
    out = [_scale(rest, c) for rest, c in coeffs.items() if c != 0]
    if const != 0:
        out.insert(0, Const(const))
    if not out:
        return ZERO
    if len(out) == 1:
        return out[0]
    return Add(tuple(out))


def _scale(e: Expr, c: Fraction) -> Expr:
    if c == 1:
        return e
    if isinstance(e, Mul):
        return Mul((Const(c),) + e.children)
    return Mul((Const(c), e))


def mul(*factors) -> Expr:
    flat: list[Expr] = []
    stack = [as_expr(f) for f in reversed(factors)]
    while stack:
        f = stack.pop()
        if isinstance(f, Mul):
            stack.extend(reversed(f.children))
        else:
            flat.append(f)
    const = Fraction(1)
    powers: dict[Expr, Fraction] = {}
    for f in flat:
        if isinstance(f, Const):
            const *= f.value
            continue
        if isinstance(f, Pow):
            base, e = f.base, f.exponent
        else:
            base, e = f, Fraction(1)
        powers[base] = powers.get(base, Fraction(0)) + e
    if const == 0:
        return ZERO
    out = []
    for base, e in powers.items():
        p = power(base, e)
        if isinstance(p, Const):
            const *= p.value
        elif p is not ONE:
            out.append(p)
    if not out:
        return Const(const)
    if const != 1:
        out.insert(0, Const(const))
    if len(out) == 1:
        return out[0]
    return Mul(tuple(out))


def neg(e: Expr) -> Expr:
    return mul(Const(-1), e)


def power(base, exponent) -> Expr:
    base = as_expr(base)
    exponent = Fraction(exponent)
    if exponent == 0:
        return ONE
    if exponent == 1:
        return base
    if isinstance(base, Const):
        v = base.value
        if exponent.denominator == 1:
            if v == 0 and exponent < 0:
                raise DomainError("zero raised to a negative power")
            return Const(v ** int(exponent))
        if v == 1:
            return ONE
        if v == 0 and exponent > 0:
            return ZERO
        return Pow(base, exponent)
    if isinstance(base, Pow) and exponent.denominator == 1:
        return power(base.base, base.exponent * exponent)
    if isinstance(base, Mul) and exponent.denominator == 1:
        return mul(*(power(f, exponent) for f in base.children))
    return Pow(base, exponent)


_FOLD_AT_ZERO = {"sin": 0, "tan": 0, "sinh": 0, "tanh": 0, "cos": 1, "cosh": 1, "sec": 1}


def func(name: str, arg) -> Expr:
    arg = as_expr(arg)
    if arg is ZERO and name in _FOLD_AT_ZERO:
        return Const(_FOLD_AT_ZERO[name])
    return Func(name, arg)


def _make(name):
    def f(arg):
        return func(name, arg)
    f.__name__ = name
    return f


sin, cos, tan, cot, sec, csc = (_make(n) for n in FUNCTIONS[:6])
sinh, cosh, tanh, coth = (_make(n) for n in FUNCTIONS[6:])


def sym(name: str) -> Sym:
    return Sym(name)


def const(value) -> Const:
    return Const(Fraction(value))


# differentiation ------------------------------------------------------------

def _dfunc(name: str, a: Expr) -> Expr:
    if name == "sin":
        return cos(a)
    if name == "cos":
        return neg(sin(a))
    if name == "tan":
        return power(sec(a), 2)
    if name == "cot":
        return neg(power(csc(a), 2))
    if name == "sec":
        return mul(sec(a), tan(a))
    if name == "csc":
        return neg(mul(csc(a), cot(a)))
    if name == "sinh":
        return cosh(a)
    if name == "cosh":
        return sinh(a)
    if name == "tanh":
        return power(cosh(a), -2)
    if name == "coth":
        return add(ONE, neg(power(coth(a), 2)))
    raise AssertionError(name)


def diff(e: Expr, var: str, order: int = 1) -> Expr:
    """Partial derivative of ``e`` with respect to the named symbol."""
    for _ in range(order):
        e = _diff1(e, var)
    return e


def _diff1(e: Expr, var: str) -> Expr:
    cached = e._dcache.get(var)
    if cached is not None:
        return cached
    if isinstance(e, Const):
        out = ZERO
    elif isinstance(e, Sym):
        out = ONE if e.name == var else ZERO
    elif isinstance(e, Add):
        out = add(*(_diff1(t, var) for t in e.children))
    elif isinstance(e, Mul):
        fs = e.children
        parts = []
        for i, f in enumerate(fs):
            df = _diff1(f, var)
            if df is ZERO:
                continue
            parts.append(mul(*fs[:i], df, *fs[i + 1:]))
        out = add(*parts)
    elif isinstance(e, Pow):
        db = _diff1(e.base, var)
        if db is ZERO:
            out = ZERO
        else:
            out = mul(Const(e.exponent), power(e.base, e.exponent - 1), db)
    elif isinstance(e, Func):
        da = _diff1(e.arg, var)
        out = ZERO if da is ZERO else mul(_dfunc(e.name, e.arg), da)
    else:
        raise TypeError(type(e))
    e._dcache[var] = out
    return out


# traversal helpers ----------------------------------------------------------

def free_symbols(e: Expr) -> frozenset[str]:
    seen: set[int] = set()
    names: set[str] = set()
    stack = [e]
    while stack:
        n = stack.pop()
        if id(n) in seen:
            continue
        seen.add(id(n))
        if isinstance(n, Sym):
            names.add(n.name)
        stack.extend(n.children)
    return frozenset(names)


def node_count(e: Expr) -> int:
    """Number of distinct nodes in the expression DAG."""
    seen: set[int] = set()
    stack = [e]
    while stack:
        n = stack.pop()
        if id(n) in seen:
            continue
        seen.add(id(n))
        stack.extend(n.children)
    return len(seen)


def substitute(e: Expr, mapping: Mapping[str, object]) -> Expr:
    """Replace symbols by expressions (or rational constants)."""
    repl = {k: as_expr(v) for k, v in mapping.items()}
    memo: dict[int, Expr] = {}

    def go(n: Expr) -> Expr:
        r = memo.get(id(n))
        if r is not None:
            return r
        if isinstance(n, Sym):
            r = repl.get(n.name, n)
        elif isinstance(n, Const):
            r = n
        elif isinstance(n, Add):
            r = add(*(go(t) for t in n.children))
        elif isinstance(n, Mul):
            r = mul(*(go(t) for t in n.children))
        elif isinstance(n, Pow):
            r = power(go(n.base), n.exponent)
        elif isinstance(n, Func):
            r = func(n.name, go(n.arg))
        else:
            raise TypeError(type(n))
        memo[id(n)] = r
        return r

    return go(e)


# evaluation -------------------------------------------------------------------

def _guard_nonzero(v, what):
    if np.any(v == 0):
        raise DomainError(f"pole of {what}")


def _eval_func(name, a):
    if name == "sin":
        return np.sin(a)
    if name == "cos":
        return np.cos(a)
    if name == "sinh":
        return np.sinh(a)
    if name == "cosh":
        return np.cosh(a)
    if name == "tanh":
        return np.tanh(a)
    if name in ("tan", "sec"):
        c = np.cos(a)
        _guard_nonzero(c, name)
        return np.sin(a) / c if name == "tan" else 1.0 / c
    if name in ("cot", "csc"):
        s = np.sin(a)
        _guard_nonzero(s, name)
        return np.cos(a) / s if name == "cot" else 1.0 / s
    if name == "coth":
        _guard_nonzero(a, name)
        return 1.0 / np.tanh(a)
    raise AssertionError(name)


def evaluate(e: Expr, bindings: Bindings):
    """Evaluate ``e`` with every free symbol taken from ``bindings``.

    Values may be scalars or broadcastable numpy arrays.  Poles, negative
    bases under fractional powers and non-finite results raise.
    """
    memo: dict[int, object] = {}
    values = {}
    for k, v in bindings.items():
        values[k] = float(v) if isinstance(v, (int, Fraction)) else np.asarray(v, dtype=float)

    def go(n: Expr):
        r = memo.get(id(n))
        if r is not None:
            return r
        if isinstance(n, Const):
            r = float(n.value)
        elif isinstance(n, Sym):
            if n.name not in values:
                raise UnboundSymbolError(f"symbol {n.name!r} is not bound")
            r = values[n.name]
        elif isinstance(n, Add):
            r = go(n.children[0])
            for t in n.children[1:]:
                r = r + go(t)
        elif isinstance(n, Mul):
            r = go(n.children[0])
            for t in n.children[1:]:
                r = r * go(t)
        elif isinstance(n, Pow):
            b = go(n.base)
            p = n.exponent
            if p.denominator != 1 and np.any(np.asarray(b) < 0):
                raise DomainError(f"negative base under fractional power {p}")
            if p < 0:
                _guard_nonzero(b, "negative power")
            if p.denominator == 1:
                r = b ** int(p) if p > 0 else 1.0 / (b ** int(-p))
            elif p.denominator == 2:
                s = np.sqrt(b)
                k = p.numerator
                r = s ** k if k > 0 else 1.0 / (s ** -k)
            else:
                r = np.power(b, float(p))
        elif isinstance(n, Func):
            r = _eval_func(n.name, go(n.arg))
        else:
            raise TypeError(type(n))
        memo[id(n)] = r
        return r

    with np.errstate(all="ignore"):
        out = go(e)
    if not np.all(np.isfinite(out)):
        raise DomainError("non-finite value during evaluation")
    return out


def lambdify(e: Expr, names: Iterable[str]) -> Callable:
    names = tuple(names)

    def f(*args):
        return evaluate(e, dict(zip(names, args)))

    return f


# serialisation ------------------------------------------------------------------

def _fmt_frac(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def to_prefix(e: Expr) -> str:
    """Deterministic parenthesised prefix form, e.g. ``(* 1/2 (sin theta))``."""
    memo: dict[int, str] = {}

    def go(n):
        r = memo.get(id(n))
        if r is not None:
            return r
        if isinstance(n, Const):
            r = _fmt_frac(n.value)
        elif isinstance(n, Sym):
            r = n.name
        elif isinstance(n, Func):
            r = f"({n.name} {go(n.arg)})"
        elif isinstance(n, Add):
            r = "(+ " + " ".join(go(t) for t in n.children) + ")"
        elif isinstance(n, Mul):
            r = "(* " + " ".join(go(t) for t in n.children) + ")"
        elif isinstance(n, Pow):
            r = f"(^ {go(n.base)} {_fmt_frac(n.exponent)})"
        memo[id(n)] = r
        return r

    return go(e)


def _tokens(text: str):
    return text.replace("(", " ( ").replace(")", " ) ").split()


def from_prefix(text: str) -> Expr:
    toks = _tokens(text)
    pos = 0

    def atom(tok):
        try:
            return Const(Fraction(tok))
        except ValueError:
            try:
                return Sym(tok)
            except ValueError as exc:
                raise ParseError(str(exc)) from None

    def go():
        nonlocal pos
        if pos >= len(toks):
            raise ParseError("unexpected end of input")
        tok = toks[pos]
        pos += 1
        if tok == ")":
            raise ParseError("unexpected ')'")
        if tok != "(":
            return atom(tok)
        head = toks[pos]
        pos += 1
        args = []
        while pos < len(toks) and toks[pos] != ")":
            if head == "^" and len(args) == 1:
                args.append(Fraction(toks[pos]))
                pos += 1
            else:
                args.append(go())
        if pos >= len(toks):
            raise ParseError("missing ')'")
        pos += 1
        if head == "+":
            return add(*args)
        if head == "*":
            return mul(*args)
        if head == "^":
            return power(args[0], args[1])
        if head in FUNCTIONS:
            if len(args) != 1:
                raise ParseError(f"{head} takes one argument")
            return func(head, args[0])
        raise ParseError(f"unknown head {head!r}")

    out = go()
    if pos != len(toks):
        raise ParseError("trailing tokens")
    return out


# Jacobi polynomials -----------------------------------------------------------------

def jacobi_series(n: int, a, b, x: Expr) -> Expr:
    """Explicit finite sum for P_n^(a,b)(x); used as an independent route."""
    a, b = _param(a), _param(b)
    terms = []
    u = (x - 1) * Fraction(1, 2)
    v = (x + 1) * Fraction(1, 2)
    for s in range(n + 1):
        c = _binom_expr(a + n, n - s) * _binom_expr(b + n, s)
        terms.append(c * power(u, s) * power(v, n - s))
    return add(*terms)


def _param(p):
    return Const(p) if isinstance(p, (int, Fraction)) else as_expr(p)


def _binom_expr(top: Expr, k: int) -> Expr:
    out: Expr = ONE
    for i in range(k):
        out = out * (top - i) * Fraction(1, i + 1)
    return out


def jacobi_poly(n: int, a, b, x: Expr | None = None) -> Expr:
    """P_n^(a,b)(x) from the three-term recurrence.

    ``a`` and ``b`` may be rationals or expressions.  When a recurrence
    denominator vanishes for rational parameters the explicit sum is used.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    x = Sym("x") if x is None else as_expr(x)
    a, b = _param(a), _param(b)
    if n == 0:
        return ONE
    p0: Expr = ONE
    p1 = (a + 1) + (a + b + 2) * (x - 1) * Fraction(1, 2)
    for k in range(2, n + 1):
        c = 2 * k + a + b
        den = 2 * k * (k + a + b) * (c - 2)
        if isinstance(den, Const) and den.value == 0:
            return jacobi_series(n, a, b, x)
        t1 = (c - 1) * (c * (c - 2) * x + a * a - b * b)
        t2 = 2 * (k + a - 1) * (k + b - 1) * c
        p0, p1 = p1, (t1 * p1 - t2 * p0) / den
    return p1


def is_zero_numeric(e: Expr, bindings: Bindings, tol: float = 1e-12) -> bool:
    return bool(np.max(np.abs(evaluate(e, bindings))) < tol)


PI = math.pi
