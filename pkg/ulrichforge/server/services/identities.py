"""
UlrichForge - Symbolic Identities
Polynomial identities in (r, e, b, k) behind the closed forms, checked with sympy
separately on each parity of r (r = 2s or r = 2s + 1).
"""
from typing import Dict

import sympy as sp

s, e, b, k = sp.symbols("s e b k", integer=True)


def _forms(odd: bool) -> dict:
    if odd:
        r = 2 * s + 1
        gamma = ((b - 2 * e + 1) * r - b + 3) / 2
        delta = (r - 1) * b / 2 - e * r
        tau = sp.Rational(3, 2) * (r + 1)
        h = (r - 3) / 2
        c1 = (3 * (r + 1) + h, (r + 1) * b - 3 + h * (b - e - 2))
        printed = (3 + h, b - 3 + h * (b - e - 2))
    else:
        r = 2 * s
        gamma = (b - 2 * e + 1) * r / 2
        delta = (b - 2 * e) * r / 2
        tau = sp.Rational(3, 2) * r
        c1 = (3 * r + r / 2, r * b + r / 2 * (b - e - 2))
        printed = (r / 2, r / 2 * (b - e - 2))
    return {"r": r, "gamma": gamma, "delta": delta, "tau": tau, "c1": c1, "printed": printed}


def _dot(x, y):
    return -e * x[0] * y[0] + x[0] * y[1] + x[1] * y[0]


def _zero(expr) -> bool:
    return sp.expand(expr) == 0


def _check(odd: bool) -> Dict[str, bool]:
    f = _forms(odd)
    r, g, d, t = f["r"], f["gamma"], f["delta"], f["tau"]
    c1e = (3, b)
    pull = (f["c1"][0] - 3 * r, f["c1"][1] - r * b)

    rank = d + t - g
    h2_square = g * (3 * b - 3 * e) - d * (3 * b - 3 * e - 3) - t * (2 * b - 3 * e)
    hom_ab = 2 * g * d + (e + 2) * g * t
    oracle = hom_ab - g ** 2 - d ** 2 - t ** 2 - e * d * t + 1
    target = (r ** 2 - 1) / 4 * (6 * b - 9 * e - 4) if odd else r ** 2 / 4 * (6 * b - 9 * e - 4) + 1
    slope_num = r * (6 * b - 9 * e - k) + _dot(c1e, pull)

    return {
        "rank": _zero(rank - r),
        "h2_map_square": _zero(h2_square),
        "c1_correspondence": _zero(pull[0] - f["printed"][0]) and _zero(pull[1] - f["printed"][1]),
        "dimension": _zero(oracle - target),
        "slope": _zero(slope_num - r * (8 * b - k - 12 * e - 3)),
    }


def verify_identities() -> Dict[str, Dict[str, bool]]:
    return {"even": _check(False), "odd": _check(True)}


def printed_dimension_excess() -> sp.Expr:
    """Printed odd-r general-e dimension minus its e = 0 form, evaluated at e = 0."""
    r = 2 * s + 1
    general = ((r - 3) ** 2 / 4 + 2) * (6 * b - 9 * e - 4) + sp.Rational(9, 2) * (r - 3) * (2 * b - 3 * e)
    e0 = (r ** 2 - 1) / 4 * (6 * b - 4)
    return sp.factor(sp.expand(general.subs(e, 0) - e0))
