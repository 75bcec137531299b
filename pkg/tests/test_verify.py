import math

import numpy as np
import pytest

import hhfrac.verify as vf
from hhfrac.errors import QuadratureError
from hhfrac.harmonic import TestFunction
from hhfrac.theorems import ExponentPair


def small_grid(**kw):
    base = dict(intervals=[(1, 2)], alphas=[0.5, 1.5], qs=[1.0, 2.0], pqs=[ExponentPair(2, 2)], functions=["sq"])
    base.update(kw)
    return vf.SweepGrid(**base)


def test_sweep_small_grid_passes():
    res = vf.run_sweep(small_grid())
    assert res.ok
    ids = {r.theorem_id for r in res.reports}
    assert ids == {"hh_left", "hh_right", "identity", "thm11_reduction", "thm13", "thm14",
                   "thm22", "thm23", "thm24", "thm25", "thm26", "obs_thm23_vs_thm22"}
    assert sum(res.counts.values()) == len(res.reports)


def test_alpha_above_one_skips_thm23():
    res = vf.run_sweep(small_grid())
    thm23 = [r for r in res.reports if r.theorem_id == "thm23"]
    assert {r.status for r in thm23 if r.alpha == 1.5} == {vf.SKIPPED}
    assert {r.status for r in thm23 if r.alpha == 0.5} == {vf.PASS}
    assert all("alpha" in r.notes for r in thm23 if r.alpha == 1.5)


def test_every_tuple_reported():
    g = small_grid(functions=["sq", "log"], intervals=[(1, 2), (2, 3)])
    res = vf.run_sweep(g)
    small_alphas = sum(al <= 1 for al in g.alphas)
    per_fn_iv = 1 + len(g.qs) + len(g.pqs) + len(g.alphas) * (3 + 2 * len(g.qs) + 3 * len(g.pqs)) + small_alphas * len(g.qs)
    assert len(res.reports) == per_fn_iv * 2 * 2


def test_deterministic_order_and_threads():
    g = small_grid(functions=["sq", "exp"])
    one = vf.run_sweep(g, workers=1).reports
    many = vf.run_sweep(g, workers=4).reports
    assert one == many
    assert list(one) == sorted(one, key=vf.MarginReport.sort_key)


def test_custom_function_without_flag_is_skipped():
    # sqrt is harmonically convex but |f'|^q is not declared so
    tf = TestFunction("custom", np.sqrt, lambda x: 0.5 / np.sqrt(x), True, abs_deriv_pow_convex=lambda q: False)
    res = vf.run_sweep(small_grid(functions=[tf]))
    bounds = [r for r in res.reports if r.theorem_id.startswith(("thm13", "thm14", "thm2"))]
    assert bounds and all(r.status == vf.SKIPPED for r in bounds)
    assert all(r.status == vf.PASS for r in res.reports if r.theorem_id in ("hh_left", "hh_right", "identity"))


def test_non_convex_f_skips_chain():
    tf = TestFunction("concave", lambda x: -np.square(x), lambda x: -2 * np.asarray(x), False,
                      abs_deriv_pow_convex=lambda q: False)
    res = vf.run_sweep(small_grid(functions=[tf]))
    chain = [r for r in res.reports if r.theorem_id.startswith("hh_")]
    assert {r.status for r in chain} == {vf.SKIPPED}


def test_numerical_error_recorded(monkeypatch):
    def boom(*a, **k):
        raise QuadratureError("forced")

    monkeypatch.setattr(vf.th, "bound_thm24", boom)
    res = vf.run_sweep(small_grid(alphas=[0.5]))
    bad = [r for r in res.reports if r.status == vf.NUMERICAL_ERROR]
    assert bad and {r.theorem_id for r in bad} == {"thm24"}
    assert all(math.isnan(r.margin) and "forced" in r.notes for r in bad)
    assert not res.ok


def test_violated_inequality_is_fail():
    w = vf._Where("x")
    assert vf._inequality(w, 1.0, 0.5, 1e-8).status == vf.FAIL
    assert vf._inequality(w, 1.0, 1.0 - 1e-9, 1e-8).status == vf.PASS
    assert vf._equality(w, 1.0, 1.0 + 2e-8, 1e-8).status == vf.FAIL


def test_grid_validation():
    with pytest.raises(ValueError):
        small_grid(alphas=[])
    with pytest.raises(ValueError):
        small_grid(alphas=[-1.0])
    with pytest.raises(ValueError):
        small_grid(tol=-1.0)


def test_reduction_suite_small():
    res = vf.reduction_suite(grid=small_grid(functions=["exp", "recip_affine"]))
    assert res.ok and res.counts[vf.PASS] == len(res.reports) > 0


def test_oracle_suite_flags_only_c3():
    res = vf.oracle_suite(grid=small_grid())
    flagged = {r.theorem_id for r in res.reports if r.status == vf.DISCREPANCY}
    assert flagged == {"const_C3_powermean", "const_C3_lemma15"}
    assert res.counts[vf.FAIL] == 0


def test_observation_never_fails():
    res = vf.run_sweep(small_grid(alphas=[0.25, 1.0]))
    obs = [r for r in res.reports if r.theorem_id == "obs_thm23_vs_thm22"]
    assert obs and {r.status for r in obs} == {vf.OBSERVATION}
    assert all(r.notes in ("thm23 <= thm22", "thm23 > thm22") for r in obs)
