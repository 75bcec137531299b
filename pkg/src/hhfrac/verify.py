"""Sweep engine: every applicable inequality over a grid, as margin records."""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, Union

from .errors import NumericalError
from .fracint import (
    HarmonicInterval,
    as_interval,
    classical_remainder,
    classical_remainder_kernel,
    hh_middle_classical,
    if_remainder,
    if_remainder_kernel,
)
from .harmonic import TestFunction, catalog, get_function
from .quadrature import QuadratureConfig
from . import theorems as th

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-hypothesis"
NUMERICAL_ERROR = "numerical-error"
DISCREPANCY = "discrepancy"
# informational comparison, never a pass/fail verdict
OBSERVATION = "observation"
STATUSES = (PASS, FAIL, SKIPPED, NUMERICAL_ERROR, DISCREPANCY, OBSERVATION)

DEFAULT_TOL = 1e-8
# one order tighter than the margin tolerance would do; oracles want more
SWEEP_QUADRATURE = QuadratureConfig(abs_tol=1e-13, rel_tol=1e-12, max_refinements=2000)

IDENTITY_ABS = 1e-8
IDENTITY_REL = 1e-6
REDUCTION_REL = 1e-9
# floor for reductions whose exact value is zero (reciprocal-affine f)
REDUCTION_ABS = 1e-12


@dataclass(frozen=True)
class MarginReport:
    """One verification record.

    For inequalities ``margin = rhs - lhs`` and the record passes when
    ``margin >= -tol``.  For identities ``margin`` is the allowance left
    after the observed difference, and the record passes when it is
    non-negative.  ``observation`` records compare two bounds without a
    verdict; ``margin`` is then ``rhs - lhs``.
    """

    theorem_id: str
    function_id: Optional[str]
    a: Optional[float]
    b: Optional[float]
    alpha: Optional[float]
    p: Optional[float]
    q: Optional[float]
    lhs: float
    rhs: float
    margin: float
    status: str
    notes: str = ""

    def sort_key(self):
        def opt(v):
            return (0, 0.0) if v is None else (1, v)

        return (
            self.theorem_id,
            opt(self.a),
            opt(self.b),
            opt(self.alpha),
            opt(self.p),
            opt(self.q),
            self.function_id or "",
        )


@dataclass(frozen=True)
class _Where:
    theorem_id: str
    function_id: Optional[str] = None
    a: Optional[float] = None
    b: Optional[float] = None
    alpha: Optional[float] = None
    p: Optional[float] = None
    q: Optional[float] = None

    def report(self, lhs, rhs, margin, status, notes="") -> MarginReport:
        return MarginReport(
            self.theorem_id, self.function_id, self.a, self.b, self.alpha, self.p, self.q,
            lhs, rhs, margin, status, notes,
        )


def _inequality(w: _Where, lhs: float, rhs: float, tol: float, notes: str = "") -> MarginReport:
    margin = rhs - lhs
    return w.report(lhs, rhs, margin, PASS if margin >= -tol else FAIL, notes)


def _equality(w: _Where, lhs: float, rhs: float, allowed: float, notes: str = "") -> MarginReport:
    margin = allowed - abs(lhs - rhs)
    return w.report(lhs, rhs, margin, PASS if margin >= 0.0 else FAIL, notes)


def _skipped(w: _Where, why: str) -> MarginReport:
    nan = math.nan
    return w.report(nan, nan, nan, SKIPPED, why)


def _error(w: _Where, exc: Exception) -> MarginReport:
    nan = math.nan
    return w.report(nan, nan, nan, NUMERICAL_ERROR, f"{type(exc).__name__}: {exc}")


def _guarded(w: _Where, build: Callable[[], MarginReport]) -> MarginReport:
    try:
        return build()
    except NumericalError as exc:
        return _error(w, exc)


FunctionRef = Union[str, TestFunction]


@dataclass(frozen=True)
class SweepGrid:
    """Parameter grid; ``alphas`` above 1 are filtered for the alpha <= 1 bound."""

    intervals: Sequence[HarmonicInterval]
    alphas: Sequence[float]
    qs: Sequence[float]
    pqs: Sequence[th.ExponentPair]
    functions: Sequence[FunctionRef]
    quadrature: QuadratureConfig = SWEEP_QUADRATURE
    tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        for name in ("intervals", "alphas", "qs", "pqs", "functions"):
            if not getattr(self, name):
                raise ValueError(f"sweep grid needs a non-empty {name} list")
        object.__setattr__(self, "intervals", tuple(as_interval(iv) for iv in self.intervals))
        object.__setattr__(self, "alphas", tuple(th.check_alpha(al) for al in self.alphas))
        object.__setattr__(self, "qs", tuple(th.check_power_mean_q(q) for q in self.qs))
        object.__setattr__(self, "pqs", tuple(th.as_pair(pq) for pq in self.pqs))
        object.__setattr__(self, "functions", tuple(self.functions))
        if not self.tol >= 0.0:
            raise ValueError(f"tol must be non-negative, got {self.tol}")

    def resolved_functions(self) -> tuple[TestFunction, ...]:
        return tuple(get_function(f) if isinstance(f, str) else f for f in self.functions)


DEFAULT_INTERVALS = ((1.0, 2.0), (1.0, 5.0), (2.0, 3.0), (0.5, 4.0))
DEFAULT_ALPHAS = (0.25, 0.5, 0.75, 1.0, 1.5, 2.0)
DEFAULT_QS = (1.0, 1.5, 2.0, 3.0)
DEFAULT_PQS = ((2.0, 2.0),)


def default_grid(tol: float = DEFAULT_TOL, functions: Optional[Iterable[FunctionRef]] = None) -> SweepGrid:
    return SweepGrid(
        intervals=DEFAULT_INTERVALS,
        alphas=DEFAULT_ALPHAS,
        qs=DEFAULT_QS,
        pqs=DEFAULT_PQS,
        functions=tuple(functions) if functions is not None else tuple(tf.id for tf in catalog()),
        tol=tol,
    )


@dataclass(frozen=True)
class SweepResult:
    reports: tuple[MarginReport, ...]
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.counts.get(FAIL, 0) == 0 and self.counts.get(NUMERICAL_ERROR, 0) == 0


def _finish(reports: Iterable[MarginReport]) -> SweepResult:
    ordered = tuple(sorted(reports, key=MarginReport.sort_key))
    counts = Counter(r.status for r in ordered)
    return SweepResult(ordered, {s: counts.get(s, 0) for s in STATUSES})


def _deriv_hypothesis(tf: TestFunction, q: float) -> Optional[str]:
    if tf.f_prime is None:
        return "no derivative available"
    if not tf.abs_deriv_pow_convex(q):
        return f"|f'|^{q:g} not flagged harmonically convex"
    return None


def _classical_task(tf: TestFunction, iv: HarmonicInterval, grid: SweepGrid) -> list[MarginReport]:
    """Order-one results: middle-term reduction and the lambda/mu bounds."""
    cfg, tol = grid.quadrature, grid.tol
    fid, a, b = tf.id, iv.a, iv.b
    out = []

    w = _Where("thm11_reduction", fid, a, b, 1.0)

    def reduction():
        frac = th.hh_middle_fractional(tf.f, iv, 1.0, cfg)
        classic = hh_middle_classical(tf.f, iv, cfg)
        return _equality(w, frac, classic, max(REDUCTION_ABS, REDUCTION_REL * max(abs(frac), abs(classic))))

    out.append(_guarded(w, reduction))

    remainder: list[float] = []

    def rem() -> float:
        if not remainder:
            remainder.append(abs(classical_remainder(tf.f, iv, cfg)))
        return remainder[0]

    for q in grid.qs:
        w = _Where("thm13", fid, a, b, None, None, q)
        why = _deriv_hypothesis(tf, q)
        out.append(_skipped(w, why) if why else _guarded(w, lambda: _inequality(w, rem(), th.bound_thm13(tf, iv, q, cfg), tol)))
    for pq in grid.pqs:
        w = _Where("thm14", fid, a, b, None, pq.p, pq.q)
        why = _deriv_hypothesis(tf, pq.q)
        out.append(_skipped(w, why) if why else _guarded(w, lambda: _inequality(w, rem(), th.bound_thm14(tf, iv, pq, cfg), tol)))
    return out


def _fractional_task(tf: TestFunction, iv: HarmonicInterval, alpha: float, grid: SweepGrid) -> list[MarginReport]:
    cfg, tol = grid.quadrature, grid.tol
    fid, a, b = tf.id, iv.a, iv.b
    out = []

    wl, wr = _Where("hh_left", fid, a, b, alpha), _Where("hh_right", fid, a, b, alpha)
    if not tf.harmonically_convex:
        out += [_skipped(wl, "f not flagged harmonically convex"), _skipped(wr, "f not flagged harmonically convex")]
    else:
        try:
            chain = th.hh_chain(tf, iv, alpha, cfg)
            out.append(_inequality(wl, chain.left, chain.middle, tol))
            out.append(_inequality(wr, chain.middle, chain.right, tol))
        except NumericalError as exc:
            out += [_error(wl, exc), _error(wr, exc)]

    remainder: list[float] = []

    def rem() -> float:
        if not remainder:
            remainder.append(if_remainder(tf.f, iv, alpha, cfg))
        return remainder[0]

    if tf.f_prime is not None:
        w = _Where("identity", fid, a, b, alpha)

        def identity():
            direct, kernel = rem(), if_remainder_kernel(tf.f_prime, iv, alpha, cfg)
            return _equality(w, direct, kernel, max(IDENTITY_ABS, IDENTITY_REL * abs(direct)))

        out.append(_guarded(w, identity))

    def bound_report(w: _Where, why: Optional[str], bound: Callable[[], float]) -> MarginReport:
        if why:
            return _skipped(w, why)
        return _guarded(w, lambda: _inequality(w, abs(rem()), bound(), tol))

    for q in grid.qs:
        why = _deriv_hypothesis(tf, q)
        out.append(bound_report(_Where("thm22", fid, a, b, alpha, None, q), why,
                                lambda q=q: th.bound_thm22(tf, iv, alpha, q, cfg)))
        why23 = why or (None if alpha <= 1.0 else f"alpha={alpha:g} outside 0 < alpha <= 1")
        out.append(bound_report(_Where("thm23", fid, a, b, alpha, None, q), why23,
                                lambda q=q: th.bound_thm23(tf, iv, alpha, q, cfg)))
        if not why23:
            w = _Where("obs_thm23_vs_thm22", fid, a, b, alpha, None, q)

            def compare(w=w, q=q):
                b23, b22 = th.bound_thm23(tf, iv, alpha, q, cfg), th.bound_thm22(tf, iv, alpha, q, cfg)
                return w.report(b23, b22, b22 - b23, OBSERVATION, "thm23 <= thm22" if b23 <= b22 else "thm23 > thm22")

            out.append(_guarded(w, compare))
    for pq in grid.pqs:
        why = _deriv_hypothesis(tf, pq.q)
        for tid, fn in (("thm24", th.bound_thm24), ("thm25", th.bound_thm25), ("thm26", th.bound_thm26)):
            out.append(bound_report(_Where(tid, fid, a, b, alpha, pq.p, pq.q), why,
                                    lambda fn=fn, pq=pq: fn(tf, iv, alpha, pq, cfg)))
    return out


def run_sweep(grid: SweepGrid, workers: int = 1) -> SweepResult:
    """Evaluate every (theorem, parameter tuple, function) of ``grid``.

    Tuples are independent; with ``workers > 1`` they run on a thread pool.
    Output is sorted by theorem id, then parameters, so it does not depend
    on evaluation order.
    """
    functions = grid.resolved_functions()
    jobs: list[Callable[[], list[MarginReport]]] = []
    for tf in functions:
        for iv in grid.intervals:
            jobs.append(lambda tf=tf, iv=iv: _classical_task(tf, iv, grid))
            for alpha in grid.alphas:
                jobs.append(lambda tf=tf, iv=iv, alpha=alpha: _fractional_task(tf, iv, alpha, grid))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(lambda job: job(), jobs))
    else:
        batches = [job() for job in jobs]
    return _finish(r for batch in batches for r in batch)


def reduction_suite(cfg: QuadratureConfig = SWEEP_QUADRATURE, grid: Optional[SweepGrid] = None) -> SweepResult:
    """Order-one collapse of the fractional results, checked to 1e-9 relative.

    * the fractional kernel identity against the ``t b + (1-t) a`` kernel;
    * the alpha <= 1 power-mean bound against the lambda bound;
    * the weighted Hoelder bound against the mu bound.
    """
    grid = grid or default_grid()
    out: list[MarginReport] = []

    def rel(x, y):
        return max(REDUCTION_ABS, REDUCTION_REL * max(abs(x), abs(y)))

    for tf in grid.resolved_functions():
        if tf.f_prime is None:
            continue
        for iv in grid.intervals:
            a, b = iv.a, iv.b
            w = _Where("reduction_identity", tf.id, a, b, 1.0)

            def kernels(w=w, iv=iv):
                x = if_remainder_kernel(tf.f_prime, iv, 1.0, cfg)
                y = classical_remainder_kernel(tf.f_prime, iv, cfg)
                return _equality(w, x, y, rel(x, y))

            out.append(_guarded(w, kernels))
            for q in grid.qs:
                w = _Where("reduction_thm23", tf.id, a, b, 1.0, None, q)

                def r23(w=w, iv=iv, q=q):
                    x, y = th.bound_thm23(tf, iv, 1.0, q, cfg), th.bound_thm13(tf, iv, q, cfg)
                    return _equality(w, x, y, rel(x, y))

                out.append(_guarded(w, r23))
            for pq in grid.pqs:
                w = _Where("reduction_thm26", tf.id, a, b, 1.0, pq.p, pq.q)

                def r26(w=w, iv=iv, pq=pq):
                    x, y = th.bound_thm26(tf, iv, 1.0, pq, cfg), th.bound_thm14(tf, iv, pq, cfg)
                    return _equality(w, x, y, rel(x, y))

                out.append(_guarded(w, r26))
    return _finish(out)


def _constant_params(name: str, grid: SweepGrid):
    d = th.CONSTANTS[name]
    needs = d.needs
    ivs = grid.intervals if "iv" in needs else (None,)
    alphas = tuple(al for al in grid.alphas if al <= d.alpha_max) if "alpha" in needs else (None,)
    holder_qs = sorted({q for q in grid.qs if q > 1.0} | {pq.q for pq in grid.pqs})
    qs = tuple(holder_qs) if "q" in needs else (None,)
    ps = tuple(sorted({pq.p for pq in grid.pqs})) if "p" in needs else (None,)
    for iv in ivs:
        for al in alphas:
            for p in ps:
                for q in qs:
                    yield iv, al, p, q


_ORDERINGS = (("k1_exact", "C1_lemma15"), ("k2_exact", "C2_lemma15"), ("k3_exact", "C3_lemma15"))


def oracle_suite(cfg: QuadratureConfig = SWEEP_QUADRATURE, grid: Optional[SweepGrid] = None) -> SweepResult:
    """Closed form against defining integral for every constant on the grid.

    A mismatch is recorded as ``discrepancy`` rather than ``fail``: the
    oracle value is the one the bounds use.  The exact kernel integrals
    ``k*_exact`` are checked to lie below their ``*_lemma15`` bounds.
    """
    grid = grid or default_grid()
    out: list[MarginReport] = []
    for name in th.CONSTANTS:
        if th.CONSTANTS[name].closed is None:
            continue
        for iv, al, p, q in _constant_params(name, grid):
            w = _Where(f"const_{name}", None, iv and iv.a, iv and iv.b, al, p, q)

            def check(w=w, name=name, iv=iv, al=al, p=p, q=q):
                c = th.evaluate_constant(name, iv, al, p, q, cfg)
                allowed = max(th.AGREE_ABS, th.AGREE_REL * abs(c.value))
                rep = _equality(w, c.value, c.oracle_value, allowed, c.note)
                if rep.status == FAIL:
                    rep = w.report(rep.lhs, rep.rhs, rep.margin, DISCREPANCY, c.note)
                return rep

            out.append(_guarded(w, check))
    for exact, bound in _ORDERINGS:
        for iv, al, _, _ in _constant_params(bound, grid):
            w = _Where(f"order_{exact}", None, iv.a, iv.b, al)

            def order(w=w, exact=exact, bound=bound, iv=iv, al=al):
                k = th.constant_oracle(exact, iv, al, cfg=cfg)
                c = th.evaluate_constant(bound, iv, al, cfg=cfg)
                notes = f"printed {bound} also bounds it" if c.value >= k - grid.tol else (
                    f"printed {bound} = {c.value:.12g} falls below the exact integral"
                )
                return _inequality(w, k, c.authoritative, grid.tol, notes)

            out.append(_guarded(w, order))
    return _finish(out)


def full_verification(grid: Optional[SweepGrid] = None, workers: int = 1) -> SweepResult:
    """Sweep, reductions and constant oracles merged into one sorted result."""
    grid = grid or default_grid()
    parts = (
        run_sweep(grid, workers),
        reduction_suite(grid.quadrature, grid),
        oracle_suite(grid.quadrature, grid),
    )
    return _finish(r for part in parts for r in part.reports)
