"""Regenerate ``oracle_values.json`` with mpmath at 30 digits.

Every value here comes from mpmath quadrature or mpmath special functions,
never from hhfrac, so the frozen file is an independent reference.

    python3 tests/make_oracles.py
"""

import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 30
HALF = mp.mpf(1) / 2

FUNCS = {
    "id_x": (lambda x: x, lambda x: 1),
    "sq": (lambda x: x**2, lambda x: 2 * x),
    "log": (lambda x: mp.log(x), lambda x: 1 / x),
    "recip_affine": (lambda x: 2 - 1 / x, lambda x: 1 / x**2),
    "exp": (lambda x: mp.exp(x), lambda x: mp.exp(x)),
}


def q01(g):
    return mp.quad(g, [0, HALF, 1])


def A(a, b, t):
    return t * a + (1 - t) * b


def B(a, b, t):
    return t * b + (1 - t) * a


def constants(a, b, al, p, q):
    a, b, al, p, q = map(mp.mpf, (a, b, al, p, q))
    w = lambda t: (1 - t) ** al + t**al
    out = {
        "lambda1": q01(lambda t: abs(1 - 2 * t) / B(a, b, t) ** 2),
        "lambda2": q01(lambda t: abs(1 - 2 * t) * t / B(a, b, t) ** 2),
        "lambda3": q01(lambda t: abs(1 - 2 * t) * (1 - t) / B(a, b, t) ** 2),
        "mu1": q01(lambda t: t * B(a, b, t) ** (-2 * q)),
        "mu2": q01(lambda t: (1 - t) * B(a, b, t) ** (-2 * q)),
        "C1_powermean": q01(lambda t: w(t) / A(a, b, t) ** 2),
        "C2_powermean": q01(lambda t: w(t) * t / A(a, b, t) ** 2),
        "C3_powermean": q01(lambda t: w(t) * (1 - t) / A(a, b, t) ** 2),
        "K4": q01(lambda t: (1 - t) ** (al * p) * A(a, b, t) ** (-2 * p)),
        "K5": q01(lambda t: t ** (al * p) * A(a, b, t) ** (-2 * p)),
        "K6": q01(lambda t: A(a, b, t) ** (-2 * p)),
        "K7": q01(lambda t: abs(1 - 2 * t) ** (al * q) * t),
        "K8": q01(lambda t: abs(1 - 2 * t) ** (al * q) * (1 - t)),
        "K9": q01(lambda t: abs(1 - 2 * t) ** (al * p)),
        "K10": q01(lambda t: t * A(a, b, t) ** (-2 * q)),
        "K11": q01(lambda t: (1 - t) * A(a, b, t) ** (-2 * q)),
    }
    if al <= 1:
        for name, v in (("C1_lemma15", lambda t: 1), ("C2_lemma15", lambda t: t), ("C3_lemma15", lambda t: 1 - t)):
            full = q01(lambda t: (t**al - (1 - t) ** al) * v(t) / A(a, b, t) ** 2)
            half = mp.quad(lambda t: 2 * (1 - 2 * t) ** al * v(t) / A(a, b, t) ** 2, [0, HALF])
            out[name] = full + half
    return out


def middle(f, a, b, al):
    a, b, al = map(mp.mpf, (a, b, al))
    # u = t**alpha absorbs the t**(alpha-1) weight; tanh-sinh alone loses ~1e-9 on it
    def g(u):
        t = u ** (1 / al)
        return f(a * b / A(a, b, t)) + f(a * b / B(a, b, t))

    return mp.quad(g, [0, HALF, 1]) / 2


def main():
    const_cases = [(1, 2, 0.5, 2, 2), (1, 5, 0.25, 2, 2), (2, 3, 1.5, 3, 1.5), (0.5, 4, 1, 1.5, 3), (1, 2, 2, 2, 2)]
    data = {"constants": [], "middle": [], "hyp2f1": [], "gamma": [], "logmean": []}
    for a, b, al, p, q in const_cases:
        vals = constants(a, b, al, p, q)
        data["constants"].append(
            {"a": a, "b": b, "alpha": al, "p": p, "q": q, "values": {k: float(v) for k, v in vals.items()}}
        )
    for fid, (f, _) in FUNCS.items():
        for a, b in ((1, 2), (0.5, 4)):
            for al in (0.25, 1, 2):
                data["middle"].append({"function_id": fid, "a": a, "b": b, "alpha": al, "value": float(middle(f, a, b, al))})
    for a, b, c, z in ((2, 1, 2.5, 0.5), (2, 1.5, 2.5, 0.8), (4, 1, 3, 0.75), (3, 2.5, 4.5, 0.875), (1, 1, 2, 0.5)):
        data["hyp2f1"].append({"a": a, "b": b, "c": c, "z": z, "value": float(mp.hyp2f1(a, b, c, z))})
    for x in (0.01, 0.1, 0.5, 1.5, 7.25, 33.3, 49.9):
        data["gamma"].append({"x": x, "value": float(mp.gamma(x))})
    for a, b, p in ((1, 2, 2), (1, 5, 1.5), (2, 3, 3), (0.5, 4, 1.25)):
        r = 2 * p - 2
        a_, b_ = mp.mpf(a), mp.mpf(b)
        val = ((b_ ** (r + 1) - a_ ** (r + 1)) / ((r + 1) * (b_ - a_))) ** (1 / r)
        data["logmean"].append({"a": a, "b": b, "p": p, "value": float(val)})
    path = Path(__file__).with_name("oracle_values.json")
    path.write_text(json.dumps(data, indent=1) + "\n")


if __name__ == "__main__":
    main()
