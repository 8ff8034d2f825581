"""Command-line front end: verify, spectrum, lattice, orbit, plot.

Exit codes: 0 success, 1 a verification entry failed, 2 bad arguments or
labels, 3 orbit parameters violate a required inequality.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence
from xml.sax.saxutils import escape

import numpy as np

from .classical import TRAJECTORY_COLUMNS, OrbitError, OrbitParams, hj_orbit, trajectory_csv
from .spectra import IurDescriptor, bound_levels, lattice, lattice_csv, lattice_json, spectrum_csv
from .systems import Ell, System
from .verify import default_seed, run_full_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ORBIT = 0, 1, 2, 3

# oblique projection of (l0, l1, l2): l2 recedes at 30 degrees, foreshortened by half
OBLIQUE_ANGLE = math.radians(30.0)
OBLIQUE_DEPTH = 0.5


class UsageError(ValueError):
    pass


def rational(text: str) -> Fraction:
    """Exact rational from 'p/q', an integer or a decimal string."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def triple(text: str) -> Ell:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected l0,l1,l2, got {text!r}")
    return Ell(*(rational(p) for p in parts))


def _keyed(text: str, key: str) -> str:
    """Accept 'key=value' or a bare value."""
    if "=" in text:
        k, v = text.split("=", 1)
        if k.strip() != key:
            raise argparse.ArgumentTypeError(f"expected {key}=..., got {text!r}")
        return v
    return text


def _int(text: str, what: str) -> int:
    v = rational(text)
    if v.denominator != 1:
        raise argparse.ArgumentTypeError(f"{what} must be an integer, got {text!r}")
    return int(v)


def parse_sweep(text: str, system: System) -> list[Ell]:
    """'q=1..3' (sphere levels through (0,0,q)) or triples separated by ';'."""
    text = text.strip()
    if not text:
        return []
    if text.startswith("q="):
        body = text[2:]
        if ".." in body:
            lo, hi = body.split("..", 1)
            qs = range(_int(lo, "q"), _int(hi, "q") + 1)
        else:
            qs = [_int(q, "q") for q in body.split(",")]
        if system is not System.SPHERE:
            raise argparse.ArgumentTypeError("q sweeps label sphere levels")
        return [Ell(0, 0, q) for q in qs]
    return [triple(t) for t in text.split(";") if t.strip()]


def _emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# SVG ---------------------------------------------------------------------------

def project(ell) -> tuple[float, float]:
    l0, l1, l2 = (float(v) for v in ell)
    return (l0 + OBLIQUE_DEPTH * math.cos(OBLIQUE_ANGLE) * l2,
            l1 + OBLIQUE_DEPTH * math.sin(OBLIQUE_ANGLE) * l2)


def _frame(xs, ys, size=480, pad=40):
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    scale = (size - 2 * pad) / span

    def to_screen(x, y):
        return pad + (x - lo_x) * scale, size - pad - (y - lo_y) * scale
    return to_screen, scale


def lattice_svg(system: System, iur: IurDescriptor, size: int = 480) -> str:
    """One circle per lattice point; radius grows with multiplicity, which is also written as a label.

    For octahedra the two su(3) faces (l0 - l1 - l2 = +-q) are drawn in a
    second colour.
    """
    pts = lattice(system, iur)
    xy = [project(p.ell) for p in pts]
    to_screen, _ = _frame([x for x, _ in xy] or [0.0], [y for _, y in xy] or [0.0], size)
    q = iur.labels.get("q") if iur.algebra == "so6" else None
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
             f'viewBox="0 0 {size} {size}">',
             f'<title>{escape(system.value)} {escape(iur.algebra)} lattice, base {escape(str(iur.base))}</title>',
             '<g class="states">']
    for p, (x, y) in zip(pts, xy):
        sx, sy = to_screen(x, y)
        face = q is not None and abs(p.ell.l0 - p.ell.l1 - p.ell.l2) == q and q > 0
        fill = "#c0392b" if face else "#1f4e79"
        lines.append(f'<circle class="state" cx="{sx:.2f}" cy="{sy:.2f}" r="{3 + 2 * p.mult}" '
                     f'fill="{fill}" data-ell="{escape(str(p.ell))}" data-mult="{p.mult}"/>')
        if p.mult > 1:
            lines.append(f'<text x="{sx + 6 + 2 * p.mult:.2f}" y="{sy - 4:.2f}" font-size="10">{p.mult}</text>')
    lines += ["</g>", "</svg>"]
    return "\n".join(lines)


def orbit_svg(params: OrbitParams, steps: int, size: int = 480) -> str:
    """The closed-form orbit as a polyline in the (phi1, phi2) square."""
    n = max(steps, 2)
    ts = [params.period * k / (n - 1) for k in range(n)]
    f1, f2 = hj_orbit(System.SPHERE, params, np.array(ts))
    to_screen, _ = _frame([0.0, math.pi / 2], [0.0, math.pi / 2], size)
    coords = " ".join("{:.2f},{:.2f}".format(*to_screen(a, b)) for a, b in zip(f1, f2))
    return "\n".join([
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<title>orbit E={params.E:g} alpha1={params.alpha1:g}</title>",
        f'<polyline class="orbit" fill="none" stroke="#1f4e79" points="{coords}"/>',
        "</svg>"])


# subcommands ---------------------------------------------------------------------

def _iur(args) -> IurDescriptor:
    chosen = [k for k in ("so6", "su3", "su21", "so42", "su2") if getattr(args, k) is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --so6, --su3, --su21, --so42, --su2")
    k = chosen[0]
    v = getattr(args, k)
    if k == "so6":
        return IurDescriptor.so6(_int(_keyed(v, "q"), "q"))
    if k == "su3":
        m, n = _keyed(v, "mn").split(",")
        return IurDescriptor.su3(_int(m, "m"), _int(n, "n"))
    if k == "su21":
        return IurDescriptor.su21(triple(_keyed(v, "base")), args.cmax)
    if k == "so42":
        return IurDescriptor.so42(rational(_keyed(v, "apex")), shells=args.shells)
    l0, l1 = _keyed(v, "l").split(",")
    return IurDescriptor.su2(rational(l0), rational(l1))


def _default_system(args) -> System:
    if args.system:
        return System.parse(args.system)
    if getattr(args, "su21", None) is not None or getattr(args, "so42", None) is not None:
        return System.HYPERBOLOID
    return System.SPHERE


def cmd_verify(args) -> int:
    system = System.parse(args.system)
    sweep = list(args.l or [])
    if args.sweep is not None:
        sweep += parse_sweep(args.sweep, system)
    rep = run_full_suite(system, sweep, seed=args.seed)
    _emit(rep.to_json(timing=False), args.out)
    print(f"{len(rep.entries)} entries, {len(rep.failures())} failed, {rep.wall_time:.1f}s", file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_spectrum(args) -> int:
    system = System.parse(args.system)
    if args.l is None:
        raise UsageError("spectrum needs --l")
    recs = bound_levels(system, args.l, args.levels)
    if args.format == "csv":
        _emit(spectrum_csv(recs), args.out)
    elif args.format == "json":
        _emit(json.dumps([r.to_dict() for r in recs], indent=2), args.out)
    else:
        raise UsageError("spectrum supports json and csv")
    return EXIT_OK


def cmd_lattice(args, force_svg: bool = False) -> int:
    system = _default_system(args)
    iur = _iur(args)
    fmt = "svg" if force_svg else args.format
    if fmt == "json":
        _emit(lattice_json(system, iur), args.out)
    elif fmt == "csv":
        _emit(lattice_csv(lattice(system, iur)), args.out)
    else:
        _emit(lattice_svg(system, iur), args.out)
    return EXIT_OK


def _orbit_params(args) -> OrbitParams:
    if args.E is None:
        raise UsageError("orbit needs --E")
    m = [float(rational(v)) for v in args.m.split(",")]
    if len(m) != 3:
        raise UsageError("--m takes m0,m1,m2")
    alpha1 = float(rational(args.alpha1)) if args.alpha1 is not None else float(args.E) / 3
    return OrbitParams(float(args.E), alpha1, *m, beta1=float(rational(args.beta1)))


def cmd_orbit(args) -> int:
    p = _orbit_params(args)
    bad = p.violations()
    if bad:
        print("orbit parameters violate: " + "; ".join(bad), file=sys.stderr)
        return EXIT_ORBIT
    if args.format not in ("csv", "svg"):
        raise UsageError("orbit supports csv and svg")
    _emit(trajectory_csv(p, args.steps) if args.format == "csv" else orbit_svg(p, args.steps), args.out)
    return EXIT_OK


def cmd_plot(args) -> int:
    if args.E is not None:
        args.format = "svg"
        return cmd_orbit(args)
    return cmd_lattice(args, force_svg=True)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="intertwining", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats, default):
        p.add_argument("--system", choices=[s.value for s in System])
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", help="output path (stdout when omitted)")
        p.add_argument("--seed", type=int, default=default_seed(),
                       help="sampling seed (default from INTERTWINING_SEED)")

    def iur_flags(p):
        p.add_argument("--so6", help="so(6) level, q=N")
        p.add_argument("--su3", help="su(3) representation, m,n")
        p.add_argument("--su21", help="su(2,1) representation, base=l0,l1,l2")
        p.add_argument("--cmax", type=int, default=2, help="C-ladder depth of an su(2,1) plane")
        p.add_argument("--so42", help="so(4,2) pyramids, apex=l2")
        p.add_argument("--shells", type=int, default=3, help="number of nested pyramids")
        p.add_argument("--su2", help="su(2) tower, l0,l1")

    def orbit_flags(p):
        p.add_argument("--E", type=rational)
        p.add_argument("--alpha1")
        p.add_argument("--beta1", default="0")
        p.add_argument("--m", default="1,1,1")
        p.add_argument("--steps", type=int, default=200)

    p = sub.add_parser("verify", help="run the verification suites")
    common(p, ["json"], "json")
    p.add_argument("--l", type=triple, action="append", help="parameter triple l0,l1,l2 (repeatable)")
    p.add_argument("--sweep", help="q=1..3 or semicolon-separated triples")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", help="bound levels of one Hamiltonian")
    common(p, ["json", "csv"], "csv")
    p.add_argument("--l", type=triple)
    p.add_argument("--levels", type=int, default=8)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("lattice", help="representation lattice with multiplicities")
    common(p, ["json", "csv", "svg"], "json")
    iur_flags(p)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("orbit", help="closed-form classical orbit on the sphere")
    common(p, ["csv", "svg"], "csv")
    orbit_flags(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("plot", help="SVG of a lattice, or of an orbit when --E is given")
    common(p, ["svg"], "svg")
    iur_flags(p)
    orbit_flags(p)
    p.set_defaults(func=cmd_plot)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, argparse.ArgumentTypeError, ValueError) as exc:
        if isinstance(exc, OrbitError):
            print(str(exc), file=sys.stderr)
            return EXIT_ORBIT
        print(f"{ap.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


__all__ = ["main", "build_parser", "rational", "triple", "parse_sweep", "lattice_svg", "orbit_svg", "project",
           "OBLIQUE_ANGLE", "OBLIQUE_DEPTH", "TRAJECTORY_COLUMNS"]


if __name__ == "__main__":
    sys.exit(main())
