"""Riemann-Liouville integrals and the fractional harmonic Hermite-Hadamard terms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .errors import DomainError, NumericalConsistencyError
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, evaluate, integrate, integrate_algebraic
from .specfun import gamma_fn

ScalarFunction = Callable[[float], float]

# intervals narrower than this (relative to a) are rejected, not limited
DEGENERATE_WIDTH = 1e-12


@dataclass(frozen=True)
class HarmonicInterval:
    """Interval ``[a, b]`` with ``0 < a < b``."""

    a: float
    b: float

    def __post_init__(self) -> None:
        a, b = self.a, self.b
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainError(f"interval endpoints must be finite: ({a}, {b})")
        if not a < b:
            raise DomainError(f"interval requires a < b, got a={a}, b={b}")
        if not a > 0.0:
            raise DomainError(f"interval requires a > 0, got a={a}")
        if b - a < DEGENERATE_WIDTH * a:
            raise DomainError(f"degenerate interval ({a}, {b}): b - a below {DEGENERATE_WIDTH}*a")

    @property
    def z(self) -> float:
        """Hypergeometric argument ``1 - a/b`` of the closed-form constants."""
        return 1.0 - self.a / self.b

    def harmonic_point(self, t):
        """``ab / (t a + (1 - t) b)``: runs from ``a`` at t=0 to ``b`` at t=1."""
        return self.a * self.b / (t * self.a + (1.0 - t) * self.b)

    def harmonic_point_reversed(self, t):
        """``ab / (t b + (1 - t) a)``: runs from ``b`` at t=0 to ``a`` at t=1."""
        return self.a * self.b / (t * self.b + (1.0 - t) * self.a)


IntervalLike = Union[HarmonicInterval, tuple]


def as_interval(iv: IntervalLike) -> HarmonicInterval:
    if isinstance(iv, HarmonicInterval):
        return iv
    a, b = iv
    return HarmonicInterval(float(a), float(b))


def check_alpha(alpha: float) -> float:
    """Validate a fractional order ``alpha > 0``."""
    if not (isinstance(alpha, (int, float)) and math.isfinite(alpha) and alpha > 0.0):
        raise DomainError(f"fractional order must satisfy alpha > 0, got {alpha!r}")
    return float(alpha)


# alias used in signatures that take a fractional order
FractionalOrder = float


def rl_left(
    f: ScalarFunction,
    lower: float,
    alpha: float,
    x: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Left-sided Riemann-Liouville integral ``J_{lower+}^alpha f(x)``.

    ``(1/Gamma(alpha)) * int_lower^x (x - t)**(alpha - 1) f(t) dt``.  For
    ``alpha < 1`` the kernel singularity at ``t = x`` is removed by a power
    substitution before quadrature.
    """
    alpha = check_alpha(alpha)
    if not x > lower:
        raise DomainError(f"rl_left requires x > lower, got x={x}, lower={lower}")
    h = x - lower
    # on s in [0, 1] the integral is O(|f|), so abs_tol does not swamp narrow intervals
    val = integrate_algebraic(lambda s: evaluate(f, lower + h * np.asarray(s)), 0.0, 1.0, 0.0, alpha - 1.0, cfg)
    return h**alpha * val / gamma_fn(alpha)


def rl_right(
    f: ScalarFunction,
    upper: float,
    alpha: float,
    x: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Right-sided Riemann-Liouville integral ``J_{upper-}^alpha f(x)``, kernel ``(t - x)**(alpha-1)``."""
    alpha = check_alpha(alpha)
    if not x < upper:
        raise DomainError(f"rl_right requires x < upper, got x={x}, upper={upper}")
    h = upper - x
    val = integrate_algebraic(lambda s: evaluate(f, x + h * np.asarray(s)), 0.0, 1.0, alpha - 1.0, 0.0, cfg)
    return h**alpha * val / gamma_fn(alpha)


def _middle_t_form(f: ScalarFunction, iv: HarmonicInterval, alpha: float, cfg: QuadratureConfig) -> float:
    # (alpha/2) int_0^1 t^(alpha-1) [f(ab/(tb+(1-t)a)) + f(ab/(ta+(1-t)b))] dt
    def g(t):
        t = np.asarray(t, dtype=float)
        return evaluate(f, iv.harmonic_point_reversed(t)) + evaluate(f, iv.harmonic_point(t))

    return 0.5 * alpha * integrate_algebraic(g, 0.0, 1.0, alpha - 1.0, 0.0, cfg)


def _middle_rl_form(f: ScalarFunction, iv: HarmonicInterval, alpha: float, cfg: QuadratureConfig) -> float:
    a, b = iv.a, iv.b

    def fg(x):
        return evaluate(f, 1.0 / np.asarray(x, dtype=float))

    right = rl_right(fg, 1.0 / a, alpha, 1.0 / b, cfg)
    left = rl_left(fg, 1.0 / b, alpha, 1.0 / a, cfg)
    return 0.5 * gamma_fn(alpha + 1.0) * (a * b / (b - a)) ** alpha * (right + left)


def hh_middle_fractional(
    f: ScalarFunction,
    iv: IntervalLike,
    alpha: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Middle term of the fractional harmonic Hermite-Hadamard chain.

    ``(Gamma(alpha+1)/2) (ab/(b-a))**alpha [J_{1/a-}(f o g)(1/b) + J_{1/b+}(f o g)(1/a)]``
    with ``g(x) = 1/x``.  It is computed on the unit interval in ``t`` and
    again from the two Riemann-Liouville integrals; the routes must agree to
    ``10 * cfg.tolerance``.
    """
    iv = as_interval(iv)
    alpha = check_alpha(alpha)
    t_form = _middle_t_form(f, iv, alpha, cfg)
    rl_form = _middle_rl_form(f, iv, alpha, cfg)
    if abs(t_form - rl_form) > 10.0 * cfg.tolerance(max(abs(t_form), abs(rl_form))):
        raise NumericalConsistencyError(
            f"fractional middle term: t-form {t_form!r} vs Riemann-Liouville form {rl_form!r}"
        )
    return t_form


def hh_middle_classical(f: ScalarFunction, iv: IntervalLike, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """``ab/(b-a) * int_a^b f(x)/x**2 dx``, the order-one middle term, by direct quadrature."""
    iv = as_interval(iv)
    a, b = iv.a, iv.b
    val = integrate(lambda x: evaluate(f, x) / (x * x), a, b, cfg)
    return a * b / (b - a) * val


def _endpoint_mean(f: ScalarFunction, iv: HarmonicInterval) -> float:
    return 0.5 * (float(f(iv.a)) + float(f(iv.b)))


def if_remainder(
    f: ScalarFunction,
    iv: IntervalLike,
    alpha: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Gap between the endpoint mean and the fractional middle term."""
    iv = as_interval(iv)
    return _endpoint_mean(f, iv) - hh_middle_fractional(f, iv, alpha, cfg)


def if_remainder_kernel(
    fprime: ScalarFunction,
    iv: IntervalLike,
    alpha: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """The same remainder written as a kernel integral against ``f'``.

    ``(ab(b-a)/2) int_0^1 [t**alpha - (1-t)**alpha] / A_t**2 f'(ab/A_t) dt``
    with ``A_t = t a + (1 - t) b``; the panel edge at ``t = 1/2`` is fixed.
    """
    iv = as_interval(iv)
    alpha = check_alpha(alpha)
    a, b = iv.a, iv.b

    def kernel(t):
        at = t * a + (1.0 - t) * b
        return (t**alpha - (1.0 - t) ** alpha) / (at * at) * evaluate(fprime, a * b / at)

    return 0.5 * a * b * (b - a) * integrate(kernel, 0.0, 1.0, cfg, breakpoints=(0.5,))


def classical_remainder(f: ScalarFunction, iv: IntervalLike, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Order-one remainder from the classical middle term."""
    iv = as_interval(iv)
    return _endpoint_mean(f, iv) - hh_middle_classical(f, iv, cfg)


def classical_remainder_kernel(
    fprime: ScalarFunction, iv: IntervalLike, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> float:
    """Order-one kernel identity in the ``t b + (1 - t) a`` parameterisation.

    ``(ab(b-a)/2) int_0^1 (1 - 2t) / B_t**2 f'(ab/B_t) dt``, ``B_t = t b + (1 - t) a``.
    """
    iv = as_interval(iv)
    a, b = iv.a, iv.b

    def kernel(t):
        bt = t * b + (1.0 - t) * a
        return (1.0 - 2.0 * t) / (bt * bt) * evaluate(fprime, a * b / bt)

    return 0.5 * a * b * (b - a) * integrate(kernel, 0.0, 1.0, cfg, breakpoints=(0.5,))
