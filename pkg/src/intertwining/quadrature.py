"""Vectorised adaptive Gauss-Legendre quadrature on intervals and rectangles.

Each panel is integrated with 10- and 21-point rules; the difference is the
panel error estimate.  Integrands receive whole arrays of nodes so that an
expression tree is evaluated once per refinement sweep.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

import numpy as np


class QuadratureError(RuntimeError):
    pass


class DivergentIntegral(QuadratureError):
    pass


@lru_cache(maxsize=None)
def _rule(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _panel_nodes(edges: np.ndarray, n: int):
    x, w = _rule(n)
    a, b = edges[:-1, None], edges[1:, None]
    half = 0.5 * (b - a)
    return (a + half * (x + 1.0)), half * w  # (panels, n)


def adaptive(f: Callable[[np.ndarray], np.ndarray], a: float, b: float,
             rtol: float = 1e-10, atol: float = 1e-14, panels: int = 8,
             max_panels: int = 4096) -> np.ndarray:
    """Integrate f over [a, b].

    ``f`` maps a 1-D node array of length k to an array of shape (..., k);
    the result has the leading shape.  Panels are refined where any batch
    member has not converged.
    """
    edges = np.linspace(a, b, panels + 1)
    while True:
        xs_lo, ws_lo = _panel_nodes(edges, 10)
        xs_hi, ws_hi = _panel_nodes(edges, 21)
        npan = len(edges) - 1
        nodes = np.concatenate([xs_lo.ravel(), xs_hi.ravel()])
        vals = np.asarray(f(nodes), dtype=float)
        lead = vals.shape[:-1]
        v_lo = vals[..., : xs_lo.size].reshape(lead + (npan, 10))
        v_hi = vals[..., xs_lo.size:].reshape(lead + (npan, 21))
        q_lo = (v_lo * ws_lo).sum(-1)
        q_hi = (v_hi * ws_hi).sum(-1)
        err = np.abs(q_hi - q_lo)
        total = q_hi.sum(-1)
        scale = np.abs(q_hi).sum(-1)
        ok = err.sum(-1) <= np.maximum(atol, rtol * scale)
        if np.all(ok):
            return total
        if npan >= max_panels:
            raise QuadratureError(f"no convergence with {npan} panels")
        per_panel = err.reshape(-1, npan).max(0) if lead else err
        budget = np.maximum(atol, rtol * scale).min() / npan
        split = per_panel > budget
        if not split.any():
            split[np.argmax(per_panel)] = True
        mids = 0.5 * (edges[:-1] + edges[1:])
        edges = np.sort(np.concatenate([edges, mids[split]]))


def adaptive2d(f: Callable[[np.ndarray, np.ndarray], np.ndarray],
               xr: tuple[float, float], yr: tuple[float, float],
               rtol: float = 1e-10, atol: float = 1e-14) -> float:
    """Integrate f(x, y) over a rectangle; f must broadcast its arguments."""

    def inner(ys):
        return adaptive(lambda xs: f(xs[None, :], ys[:, None]), xr[0], xr[1], rtol=rtol * 0.1, atol=atol)

    return float(adaptive(inner, yr[0], yr[1], rtol=rtol, atol=atol))


def semi_infinite2d(f, xr, y0: float = 0.0, cutoffs=(10.0, 20.0, 40.0),
                    rtol: float = 1e-10, growth_tol: float = 1e-8) -> float:
    """Integrate over xr x [y0, inf) by truncation, checking the tail decays.

    The y-range is split at the cutoffs; a tail slab that is not negligible
    relative to the bulk signals divergence.
    """
    pieces = []
    lo = y0
    for c in cutoffs:
        pieces.append(adaptive2d(f, xr, (lo, c), rtol=rtol))
        lo = c
    bulk = sum(pieces[:-1])
    tail = pieces[-1]
    if not np.isfinite(bulk) or abs(tail) > growth_tol * max(abs(bulk), 1e-300):
        raise DivergentIntegral(f"tail beyond y={cutoffs[-2]} is {tail:.3e} against bulk {bulk:.3e}")
    return bulk + tail
