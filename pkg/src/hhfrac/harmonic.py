"""Harmonic convexity checks and the built-in catalog of test functions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .errors import HHFracError
from .fracint import IntervalLike, ScalarFunction, as_interval
from .quadrature import evaluate

DEFAULT_SAMPLES = 50
DEFAULT_T_SAMPLES = 21
DEFAULT_TOL = 1e-10

# intervals and exponents the catalog flags are confirmed on at load time
WORKING_INTERVALS = ((1.0, 2.0), (1.0, 5.0), (2.0, 3.0), (0.5, 4.0))
CHECKED_EXPONENTS = (1.0, 1.5, 2.0, 3.0)


class CatalogValidationError(HHFracError):
    """A declared catalog flag or derivative failed its numeric check."""


@dataclass(frozen=True)
class ConvexityResult:
    """Verdict of a sampled convexity check.

    ``worst_violation`` is ``lhs - rhs`` at the worst sample (negative means
    slack); ``witness`` holds that sample's ``(x, y, t)``.
    """

    holds: bool
    worst_violation: float
    witness: tuple[float, float, float]

    def __bool__(self) -> bool:
        return self.holds


def _scaled_tol(tol: float, rhs: np.ndarray) -> np.ndarray:
    # absolute tol near zero, relative for large values so rounding is not a violation
    return tol * np.maximum(1.0, np.abs(rhs))


def is_harmonically_convex(
    f: ScalarFunction,
    iv: IntervalLike,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
    t_samples: int = DEFAULT_T_SAMPLES,
) -> ConvexityResult:
    """Check ``f(xy/(tx+(1-t)y)) <= t f(y) + (1-t) f(x)`` on a uniform grid.

    ``x`` and ``y`` run over ``samples`` points of ``[a, b]`` and ``t`` over
    ``t_samples`` points of ``[0, 1]``.
    """
    iv = as_interval(iv)
    if samples < 3 or t_samples < 3:
        raise ValueError("convexity grids need at least 3 samples per axis")
    xs = np.linspace(iv.a, iv.b, samples)
    ts = np.linspace(0.0, 1.0, t_samples)
    x, y, t = np.meshgrid(xs, xs, ts, indexing="ij")
    x, y, t = x.ravel(), y.ravel(), t.ravel()
    fx = evaluate(f, xs)
    fx_x = np.repeat(fx, samples * t_samples)
    fx_y = np.tile(np.repeat(fx, t_samples), samples)
    h = x * y / (t * x + (1.0 - t) * y)
    lhs = evaluate(f, h)
    rhs = t * fx_y + (1.0 - t) * fx_x
    excess = lhs - rhs
    k = int(np.argmax(excess - _scaled_tol(tol, rhs)))
    holds = bool(np.all(excess <= _scaled_tol(tol, rhs)))
    return ConvexityResult(holds, float(excess[k]), (float(x[k]), float(y[k]), float(t[k])))


def reciprocal_convexity_check(
    f: ScalarFunction,
    iv: IntervalLike,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
) -> bool:
    """Midpoint-convexity test of ``u -> f(1/u)`` on ``[1/b, 1/a]``.

    Harmonic convexity of ``f`` on a positive interval is ordinary convexity
    of this reciprocal composition, so the check is independent of the
    grid in :func:`is_harmonically_convex`.
    """
    iv = as_interval(iv)
    if samples < 3:
        raise ValueError("convexity grids need at least 3 samples per axis")
    us = np.linspace(1.0 / iv.b, 1.0 / iv.a, samples)
    phi = evaluate(f, 1.0 / us)
    u, v = np.meshgrid(us, us, indexing="ij")
    mid = evaluate(f, 2.0 / (u + v).ravel())
    rhs = 0.5 * (phi[:, None] + phi[None, :]).ravel()
    return bool(np.all(mid - rhs <= _scaled_tol(tol, rhs)))


def power_subadditivity_holds(lo: float, hi: float, alpha: float) -> bool:
    """``|lo**alpha - hi**alpha| <= (hi - lo)**alpha`` for ``0 < alpha <= 1``, ``0 <= lo < hi``."""
    return abs(lo**alpha - hi**alpha) <= (hi - lo) ** alpha * (1.0 + 1e-15)


def _all_exponents(q: float) -> bool:
    return q >= 1.0


@dataclass(frozen=True)
class TestFunction:
    """A catalog entry with its derivative and declared convexity flags."""

    __test__ = False  # not a pytest class

    id: str
    f: ScalarFunction
    f_prime: Optional[ScalarFunction]
    harmonically_convex: bool
    abs_deriv_pow_convex: Callable[[float], bool] = field(default=_all_exponents)
    description: str = ""

    def __call__(self, x):
        return self.f(x)

    def abs_deriv_pow(self, q: float) -> ScalarFunction:
        """``x -> |f'(x)|**q``."""
        if self.f_prime is None:
            raise HHFracError(f"{self.id}: no derivative available")
        fp = self.f_prime
        return lambda x: np.abs(evaluate(fp, x)) ** q


def _const_one(x):
    return np.ones_like(np.asarray(x, dtype=float))


def _validate(tf: TestFunction) -> None:
    if tf.f_prime is not None:
        for a, b in WORKING_INTERVALS:
            xs = np.linspace(a, b, 9)[1:-1]
            h = 1e-5 * xs
            fd = (evaluate(tf.f, xs + h) - evaluate(tf.f, xs - h)) / (2.0 * h)
            exact = evaluate(tf.f_prime, xs)
            if np.any(np.abs(fd - exact) > 1e-6 * np.maximum(1.0, np.abs(exact))):
                raise CatalogValidationError(f"{tf.id}: f_prime does not match finite differences on ({a}, {b})")
    for iv in WORKING_INTERVALS:
        checks = [("f", tf.f, tf.harmonically_convex)]
        if tf.f_prime is not None:
            checks += [(f"|f'|^{q}", tf.abs_deriv_pow(q), tf.abs_deriv_pow_convex(q)) for q in CHECKED_EXPONENTS]
        for label, g, declared in checks:
            grid = bool(is_harmonically_convex(g, iv))
            recip = reciprocal_convexity_check(g, iv)
            if grid != recip:
                raise CatalogValidationError(f"{tf.id}: {label} convexity checks disagree on {iv}")
            if declared and not grid:
                raise CatalogValidationError(f"{tf.id}: {label} declared harmonically convex but fails on {iv}")


@lru_cache(maxsize=1)
def catalog() -> tuple[TestFunction, ...]:
    """The built-in test functions, validated once per process."""
    entries = (
        TestFunction("id_x", lambda x: np.asarray(x, dtype=float), _const_one, True, description="x"),
        TestFunction("sq", lambda x: np.square(x), lambda x: 2.0 * np.asarray(x, dtype=float), True, description="x^2"),
        TestFunction("log", np.log, lambda x: 1.0 / np.asarray(x, dtype=float), True, description="ln x"),
        TestFunction(
            "recip_affine",
            lambda x: 2.0 - 1.0 / np.asarray(x, dtype=float),
            lambda x: 1.0 / np.square(x),
            True,
            description="2 - 1/x",
        ),
        TestFunction("exp", np.exp, np.exp, True, description="e^x"),
    )
    for tf in entries:
        _validate(tf)
    return entries


def get_function(function_id: str) -> TestFunction:
    for tf in catalog():
        if tf.id == function_id:
            return tf
    known = ", ".join(tf.id for tf in catalog())
    raise KeyError(f"unknown catalog function {function_id!r} (known: {known})")
