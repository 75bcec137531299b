import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import hhfrac.theorems as th
from hhfrac.fracint import if_remainder, if_remainder_kernel
from hhfrac.harmonic import catalog, power_subadditivity_holds
from hhfrac.specfun import Hyp2F1Params, beta_fn, gamma_fn, hyp2f1_integral, hyp2f1_series

FUNCS = catalog()
fast = settings(max_examples=40, deadline=None)


@st.composite
def intervals(draw):
    a = draw(st.floats(0.2, 5.0))
    width = draw(st.floats(0.05, 5.0))
    return (a, a + width)


alphas = st.floats(0.1, 3.0)
functions = st.sampled_from(FUNCS)


@settings(max_examples=300, deadline=None)
@given(st.floats(0.5, 40.0))
def test_gamma_recurrence(x):
    assert gamma_fn(x + 1) == pytest.approx(x * gamma_fn(x), rel=1e-12)


@settings(max_examples=300, deadline=None)
@given(st.floats(0.05, 60.0), st.floats(0.05, 60.0))
def test_beta_symmetry(x, y):
    assert beta_fn(x, y) == pytest.approx(beta_fn(y, x), rel=1e-12)


@fast
@given(st.floats(0.1, 6.0), st.floats(0.1, 4.0), st.floats(0.05, 3.0), st.floats(0.0, 0.9))
def test_hyp2f1_routes_agree(a, b, dc, z):
    p = Hyp2F1Params(a, b, b + dc, z)
    assert hyp2f1_series(p) == pytest.approx(hyp2f1_integral(p), rel=1e-10)


@settings(max_examples=500, deadline=None)
@given(st.floats(1e-3, 1.0), st.floats(0.0, 10.0), st.floats(0.0, 10.0))
def test_power_subadditivity(alpha, x, y):
    lo, hi = min(x, y), max(x, y)
    if hi > lo:
        assert power_subadditivity_holds(lo, hi, alpha)


@fast
@given(functions, intervals(), alphas)
def test_chain(tf, iv, alpha):
    c = th.hh_chain(tf, iv, alpha)
    scale = max(1.0, abs(c.right))
    assert c.left <= c.middle + 1e-10 * scale
    assert c.middle <= c.right + 1e-10 * scale


@fast
@given(functions, intervals(), alphas)
def test_identity(tf, iv, alpha):
    direct = if_remainder(tf.f, iv, alpha)
    kernel = if_remainder_kernel(tf.f_prime, iv, alpha)
    assert abs(direct - kernel) <= max(1e-8, 1e-6 * abs(direct))


@fast
@given(functions, intervals(), alphas, st.floats(1.0, 4.0), st.floats(1.1, 4.0))
def test_fractional_bounds_hold(tf, iv, alpha, q, p):
    r = abs(if_remainder(tf.f, iv, alpha))
    pq = th.ExponentPair(p, p / (p - 1))
    tol = 1e-8 * max(1.0, r)
    assert r <= th.bound_thm22(tf, iv, alpha, q) + tol
    if alpha <= 1:
        assert r <= th.bound_thm23(tf, iv, alpha, q) + tol
    for bound in (th.bound_thm24, th.bound_thm25, th.bound_thm26):
        assert r <= bound(tf, iv, alpha, pq) + tol


@fast
@given(intervals(), st.floats(1.1, 4.0))
def test_lambda_split(iv, q):
    l1, l2, l3 = th.lambda_constants(iv)
    assert l1 == pytest.approx(l2 + l3, rel=1e-10)
    m1, m2 = th.mu_constants(iv, q)
    assert m1 > 0 and m2 > 0 and math.isfinite(m1 + m2)
