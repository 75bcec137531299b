"""Command-line interface.

Exit codes: 0 all checks pass, 1 an inequality or identity failed, 2 usage
error, 3 numerical error (quadrature non-convergence or route disagreement).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import specfun
from . import theorems as th
from .errors import DomainError, NumericalError
from .fracint import as_interval
from .harmonic import catalog, get_function, is_harmonically_convex, reciprocal_convexity_check
from .serialize import WRITERS
from .verify import (
    DEFAULT_ALPHAS,
    DEFAULT_INTERVALS,
    DEFAULT_PQS,
    DEFAULT_QS,
    DEFAULT_TOL,
    FAIL,
    NUMERICAL_ERROR,
    SWEEP_QUADRATURE,
    SweepGrid,
    SweepResult,
    full_verification,
    run_sweep,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2, 3

# flag dest -> builtin default; a JSON config file may supply any of them
_DEFAULTS = {
    "a": None,
    "b": None,
    "alpha": None,
    "p": None,
    "q": None,
    "functions": None,
    "tol": DEFAULT_TOL,
    "out": None,
    "format": "csv",
    "workers": 1,
    "default_grid": False,
    "deterministic": False,
    "name": None,
}


class UsageError(Exception):
    pass


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--a", type=float, help="left endpoint, 0 < a < b")
    sp.add_argument("--b", type=float, help="right endpoint")
    sp.add_argument("--alpha", type=float, nargs="+", help="fractional orders (alpha > 0)")
    sp.add_argument("--p", type=float, nargs="+", help="Hoelder exponents p > 1 (q is its conjugate)")
    sp.add_argument("--q", type=float, nargs="+", help="exponents q >= 1 (power mean); q > 1 also forms Hoelder pairs")
    sp.add_argument("--functions", nargs="+", help="catalog function ids (default: all)")
    sp.add_argument("--tol", type=float, help=f"margin tolerance (default {DEFAULT_TOL:g})")
    sp.add_argument("--out", help="write output here instead of stdout")
    sp.add_argument("--format", choices=sorted(WRITERS), help="output format (default csv)")
    sp.add_argument("--config", help="JSON file with flag values; flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hhfrac",
        description="Fractional Hermite-Hadamard inequalities for harmonically convex functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="run the full verification sweep")
    _add_common(sp)
    sp.add_argument("--default-grid", action="store_true", help="use the built-in acceptance grid")
    sp.add_argument("--workers", type=int, help="evaluate grid tuples on this many threads")
    sp.add_argument("--deterministic", action="store_true", help="force single-threaded evaluation")

    sp = sub.add_parser("identity", help="remainder vs kernel-integral identity")
    _add_common(sp)
    sp = sub.add_parser("middle", help="Hermite-Hadamard chain left <= middle <= right")
    _add_common(sp)
    sp = sub.add_parser("bounds", help="every applicable remainder bound")
    _add_common(sp)

    sp = sub.add_parser("constants", help="closed-form constants against their oracles")
    _add_common(sp)
    sp.add_argument("--name", nargs="+", help=f"constant names (default: all applicable); known: {', '.join(th.CONSTANTS)}")

    sp = sub.add_parser("convexity", help="harmonic convexity of f and |f'|^q")
    _add_common(sp)

    sp = sub.add_parser("specfun", help="evaluate a special function")
    sp.add_argument("function", choices=("gamma", "beta", "hyp2f1", "logmean"))
    sp.add_argument("args", type=float, nargs="+", help="gamma x | beta x y | hyp2f1 a b c z | logmean a b p")
    return parser


def _settings(ns: argparse.Namespace) -> dict:
    cfg = {}
    if getattr(ns, "config", None):
        try:
            cfg = json.loads(Path(ns.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {ns.config}: {exc}") from exc
        if not isinstance(cfg, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = set(cfg) - set(_DEFAULTS)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    out = {}
    for key, default in _DEFAULTS.items():
        flag = getattr(ns, key, None)
        if flag not in (None, False):
            out[key] = flag
        elif key in cfg:
            out[key] = cfg[key]
        else:
            out[key] = default
    for key in ("alpha", "p", "q", "functions", "name"):
        if out[key] is not None and not isinstance(out[key], (list, tuple)):
            out[key] = [out[key]]
    return out


def _intervals(s: dict):
    if (s["a"] is None) != (s["b"] is None):
        raise UsageError("--a and --b must be given together")
    if s["a"] is None:
        return [as_interval(iv) for iv in DEFAULT_INTERVALS]
    return [as_interval((s["a"], s["b"]))]


def _grid(s: dict) -> SweepGrid:
    qs = s["q"] or list(DEFAULT_QS)
    if s["p"]:
        if any(not p > 1.0 for p in s["p"]):
            raise UsageError("--p values must exceed 1")
        pqs = [th.ExponentPair(p, p / (p - 1.0)) for p in s["p"]]
    elif s["q"]:
        pqs = [th.ExponentPair.from_q(q) for q in qs if q > 1.0]
    else:
        pqs = list(DEFAULT_PQS)
    if not pqs:
        raise UsageError("Hoelder bounds need at least one q > 1 or an explicit --p")
    functions = s["functions"] or [tf.id for tf in catalog()]
    for fid in functions:
        get_function(fid)
    return SweepGrid(
        intervals=_intervals(s),
        alphas=s["alpha"] or list(DEFAULT_ALPHAS),
        qs=qs,
        pqs=pqs,
        functions=functions,
        quadrature=SWEEP_QUADRATURE,
        tol=float(s["tol"]),
    )


def _emit(text: str, s: dict) -> None:
    if s["out"]:
        Path(s["out"]).write_text(text)
    else:
        sys.stdout.write(text)


def _finish(result: SweepResult, s: dict, keep=None) -> int:
    reports = [r for r in result.reports if keep is None or keep(r)]
    _emit(WRITERS[s["format"]](reports), s)
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    print(", ".join(f"{k}={v}" for k, v in sorted(counts.items())) or "no records", file=sys.stderr)
    if counts.get(FAIL):
        return EXIT_FAIL
    if counts.get(NUMERICAL_ERROR):
        return EXIT_NUMERICAL
    return EXIT_OK


def _cmd_verify(s: dict) -> int:
    grid = _grid(s)
    workers = 1 if s["deterministic"] else int(s["workers"])
    return _finish(full_verification(grid, workers), s)


def _cmd_sweep_subset(s: dict, prefixes: tuple[str, ...]) -> int:
    grid = _grid(s)
    return _finish(run_sweep(grid), s, keep=lambda r: r.theorem_id.startswith(prefixes))


def _cmd_constants(s: dict) -> int:
    from .verify import oracle_suite

    names = s["name"] or list(th.CONSTANTS)
    for n in names:
        if n not in th.CONSTANTS:
            raise UsageError(f"unknown constant {n!r}; known: {', '.join(th.CONSTANTS)}")
    explicit = s["a"] is not None or s["alpha"] or s["q"] or s["p"]
    if not explicit:
        grid = _grid(s)
    else:
        qs = s["q"] or [2.0]
        grid = SweepGrid(
            intervals=_intervals(s),
            alphas=s["alpha"] or [1.0],
            qs=qs,
            pqs=[th.ExponentPair(p, p / (p - 1.0)) for p in s["p"]] if s["p"]
            else [th.ExponentPair.from_q(q) for q in qs if q > 1.0] or [th.ExponentPair(2.0, 2.0)],
            functions=["id_x"],
            tol=float(s["tol"]),
        )
    wanted = {f"const_{n}" for n in names} | {f"order_{n}" for n in names}
    result = oracle_suite(grid.quadrature, grid)
    return _finish(result, s, keep=lambda r: r.theorem_id in wanted)


def _cmd_convexity(s: dict) -> int:
    functions = [get_function(f) for f in (s["functions"] or [tf.id for tf in catalog()])]
    qs = s["q"] or list(DEFAULT_QS)
    rows = []
    for iv in _intervals(s):
        for tf in functions:
            targets = [("f", tf.f, tf.harmonically_convex)]
            if tf.f_prime is not None:
                targets += [(f"|f'|^{q:g}", tf.abs_deriv_pow(q), tf.abs_deriv_pow_convex(q)) for q in qs]
            for label, g, declared in targets:
                grid_check = is_harmonically_convex(g, iv)
                rows.append({
                    "function_id": tf.id, "target": label, "a": iv.a, "b": iv.b,
                    "declared": declared, "grid": grid_check.holds,
                    "reciprocal": reciprocal_convexity_check(g, iv),
                    "worst_violation": float(f"{grid_check.worst_violation:.12g}"),
                })
    if s["format"] == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        keys = list(rows[0]) if rows else []
        sep = "," if s["format"] == "csv" else "  "
        text = "\n".join([sep.join(keys)] + [sep.join(str(r[k]) for k in keys) for r in rows]) + "\n"
    _emit(text, s)
    bad = [r for r in rows if r["grid"] != r["reciprocal"] or (r["declared"] and not r["grid"])]
    return EXIT_FAIL if bad else EXIT_OK


def _cmd_specfun(ns: argparse.Namespace) -> int:
    args = ns.args
    arity = {"gamma": 1, "beta": 2, "hyp2f1": 4, "logmean": 3}[ns.function]
    if len(args) != arity:
        raise UsageError(f"{ns.function} takes {arity} arguments, got {len(args)}")
    if ns.function == "gamma":
        print(f"{specfun.gamma_fn(args[0]):.15g}")
    elif ns.function == "beta":
        print(f"{specfun.beta_fn(*args):.15g}")
    elif ns.function == "hyp2f1":
        p = specfun.Hyp2F1Params(*args)
        print(f"{specfun.hyp2f1(p):.15g}")
        print(f"series={specfun.hyp2f1_series(p):.15g} integral={specfun.hyp2f1_integral(p):.15g}", file=sys.stderr)
    else:
        print(f"{specfun.log_mean_power(*args):.15g}")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "specfun":
            return _cmd_specfun(ns)
        s = _settings(ns)
        if ns.command == "verify":
            return _cmd_verify(s)
        if ns.command == "identity":
            return _cmd_sweep_subset(s, ("identity",))
        if ns.command == "middle":
            return _cmd_sweep_subset(s, ("hh_", "thm11_reduction"))
        if ns.command == "bounds":
            return _cmd_sweep_subset(s, ("thm13", "thm14", "thm2"))
        if ns.command == "constants":
            return _cmd_constants(s)
        if ns.command == "convexity":
            return _cmd_convexity(s)
    except (UsageError, DomainError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"hhfrac {ns.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"hhfrac {ns.command}: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    parser.error(f"unknown command {ns.command}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
