"""Exact generating-function polynomials, identity checks and p-adic approximants."""

import json
from fractions import Fraction

from . import _core
from ._core import BudgetExceeded, DslError, stirling1 as _stirling1, stirling2 as _stirling2

__all__ = [
    "BudgetExceeded",
    "DslError",
    "evaluate",
    "family_polys",
    "family_oracle_polys",
    "mixed_polys",
    "padic_trace",
    "stirling1",
    "stirling2",
    "verify",
]


def _poly(coeffs):
    return [Fraction(c) for c in coeffs]


def family_polys(family, order=1, n_max=8):
    """Polynomials n = 0..n_max as lists of Fractions, ascending in x."""
    return [_poly(row) for row in _core.family_polys(family, order, n_max)]


def family_oracle_polys(family, order=1, n_max=8):
    return [_poly(row) for row in _core.family_oracle_polys(family, order, n_max)]


def mixed_polys(kind, r, s, n_max=8):
    return [_poly(row) for row in _core.mixed_polys(kind, r, s, n_max)]


def stirling1(n, k):
    return int(_stirling1(n, k))


def stirling2(n, k):
    return int(_stirling2(n, k))


def verify(identity, n_max=12, lo=1, hi=3, variant="corrected"):
    """List of report dicts; verdict is "pass" or "fail"."""
    return json.loads(_core.verify(identity, n_max, lo, hi, variant, "json"))


def padic_trace(kind, n, target, p=3, n_lo=1, n_hi=4, fold=1, x0=0):
    return json.loads(_core.padic_trace(kind, n, str(target), p, n_lo, n_hi, fold, x0))


def evaluate(expr, T=8):
    """Coefficients of t^0..t^T, each a list of Fractions ascending in x."""
    return [_poly(c) for c in _core.evaluate(expr, T)]
