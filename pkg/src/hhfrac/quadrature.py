"""Adaptive composite Gauss-Legendre quadrature.

Panels are bisected globally, worst estimated error first, until the summed
error estimate falls under ``max(abs_tol, rel_tol * |integral|)``.  Endpoint
algebraic singularities ``(t - lo)**e`` with ``e < 0`` are handled by
:func:`integrate_algebraic`, which applies a power substitution first so the
panel rule only ever sees bounded integrands.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .errors import DomainError, QuadratureError

_ORDER = 20
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(_ORDER)


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances shared by every numeric integral.

    ``max_refinements`` caps the number of panel bisections of one call.
    """

    abs_tol: float = 1e-13
    rel_tol: float = 1e-12
    max_refinements: int = 2000

    def __post_init__(self) -> None:
        if not 0.0 < self.abs_tol < 1.0 or not 0.0 < self.rel_tol < 1.0:
            raise DomainError(
                f"quadrature tolerances must lie in (0, 1): "
                f"abs_tol={self.abs_tol}, rel_tol={self.rel_tol}"
            )
        if int(self.max_refinements) != self.max_refinements or self.max_refinements < 1:
            raise DomainError(f"max_refinements must be a positive integer: {self.max_refinements}")

    def tolerance(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


DEFAULT_CONFIG = QuadratureConfig()


def evaluate(f: Callable, x: np.ndarray) -> np.ndarray:
    """Evaluate ``f`` on an array, falling back to a pointwise loop.

    Catalog functions are numpy-vectorized; user-supplied scalar callables
    (``math.log``, branches on ``x > 0``) are not, and constants may return a
    bare float.
    """
    x = np.asarray(x, dtype=float)
    try:
        y = np.asarray(f(x), dtype=float)
    except (TypeError, ValueError):
        y = None
    if y is None or (y.shape != x.shape and y.ndim != 0):
        y = np.array([float(f(xi)) for xi in x.ravel()], dtype=float).reshape(x.shape)
    return np.broadcast_to(y, x.shape).astype(float, copy=False)


def _panel(f: Callable, lo: float, hi: float) -> float:
    half = 0.5 * (hi - lo)
    x = (lo + half) + half * _NODES
    return half * float(np.dot(_WEIGHTS, evaluate(f, x)))


def integrate(
    f: Callable,
    lo: float,
    hi: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    breakpoints: Iterable[float] = (),
) -> float:
    """Integrate ``f`` over ``[lo, hi]``.

    ``breakpoints`` strictly inside the interval are always panel edges; use
    them for kinks such as the sign change of ``|1 - 2t|``.
    """
    if not hi > lo:
        raise DomainError(f"integration interval must satisfy lo < hi: [{lo}, {hi}]")
    edges = [lo, *sorted(p for p in breakpoints if lo < p < hi), hi]

    # heap entries: (-error, seq, lo, hi, left_value, right_value)
    heap: list[tuple[float, int, float, float, float, float]] = []
    seq = 0

    def push(a: float, b: float, whole: float) -> None:
        nonlocal seq
        m = 0.5 * (a + b)
        left, right = _panel(f, a, m), _panel(f, m, b)
        heapq.heappush(heap, (-abs(whole - (left + right)), seq, a, b, left, right))
        seq += 1

    for a, b in zip(edges[:-1], edges[1:]):
        push(a, b, _panel(f, a, b))

    for _ in range(cfg.max_refinements + 1):
        total = math.fsum(e[4] + e[5] for e in heap)
        err = math.fsum(-e[0] for e in heap)
        if not math.isfinite(total):
            raise QuadratureError("integrand produced a non-finite value")
        if err <= cfg.tolerance(total):
            return total
        _, _, a, b, left, right = heapq.heappop(heap)
        m = 0.5 * (a + b)
        if not a < m < b:
            raise QuadratureError(f"panel [{a}, {b}] cannot be bisected further")
        push(a, m, left)
        push(m, b, right)
    raise QuadratureError(
        f"no convergence after {cfg.max_refinements} refinements "
        f"(error estimate {err:.3e}, integral {total:.6e})"
    )


def integrate_algebraic(
    g: Callable,
    lo: float,
    hi: float,
    left_exp: float = 0.0,
    right_exp: float = 0.0,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Integrate ``(t - lo)**left_exp * (hi - t)**right_exp * g(t)`` over ``[lo, hi]``.

    Exponents must exceed -1.  A negative exponent is removed on its half of
    the interval by ``t - lo = h * u**(1/(e+1))`` (mirrored on the right),
    which turns the weight into the constant ``h**(e+1)/(e+1)``.
    """
    if left_exp <= -1.0 or right_exp <= -1.0:
        raise DomainError(f"endpoint exponents must exceed -1: ({left_exp}, {right_exp})")
    if not hi > lo:
        raise DomainError(f"integration interval must satisfy lo < hi: [{lo}, {hi}]")
    mid = 0.5 * (lo + hi)
    h = mid - lo

    def weight(t):
        return np.power(t - lo, left_exp) * np.power(hi - t, right_exp)

    if left_exp < 0.0:
        gamma_l = 1.0 / (left_exp + 1.0)

        def left_part(u):
            t = lo + h * np.power(u, gamma_l)
            return np.power(hi - t, right_exp) * evaluate(g, t)

        left = h ** (left_exp + 1.0) * gamma_l * integrate(left_part, 0.0, 1.0, cfg)
    else:
        left = integrate(lambda t: weight(t) * evaluate(g, t), lo, mid, cfg)

    if right_exp < 0.0:
        gamma_r = 1.0 / (right_exp + 1.0)

        def right_part(u):
            t = hi - h * np.power(u, gamma_r)
            return np.power(t - lo, left_exp) * evaluate(g, t)

        right = h ** (right_exp + 1.0) * gamma_r * integrate(right_part, 0.0, 1.0, cfg)
    else:
        right = integrate(lambda t: weight(t) * evaluate(g, t), mid, hi, cfg)
    return left + right
