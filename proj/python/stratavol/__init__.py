"""Exact volume computations for minimal strata of Abelian differentials.

Exact values are returned as ``fractions.Fraction``; volumes as
``(coefficient, pi_exponent)`` pairs meaning ``coefficient * pi**pi_exponent``.
"""

from fractions import Fraction

from . import _core

__all__ = [
    "a_gn",
    "vol_n",
    "total_volume",
    "c_series",
    "p_value",
    "counting_function",
    "count_positive_trees",
    "census",
    "verify_cylinder_formula",
    "verify",
    "run_cli",
]


def a_gn(g, n):
    return Fraction(_core.a_gn(g, n))


def vol_n(g, n):
    coeff, pi_exp = _core.vol_n(g, n)
    return Fraction(coeff), pi_exp


def total_volume(g):
    coeff, pi_exp = _core.total_volume(g)
    return Fraction(coeff), pi_exp


def c_series(order, route="table"):
    """Coefficients of C(t, u): entry [i][j] is the coefficient of t^i u^j."""
    return [[Fraction(x) for x in row] for row in _core.c_series(order, route)]


def p_value(parts):
    return int(_core.p_value(list(parts)))


def counting_function(g, black, white):
    return Fraction(_core.counting_function(g, list(black), list(white)))


def count_positive_trees(black, white):
    return _core.count_positive_trees(list(black), list(white))


def census(g, max_squares):
    """Maps (N, n) to (count, weighted_count)."""
    return {(N, n): (count, Fraction(w)) for N, n, count, w in _core.census(g, max_squares)}


def verify_cylinder_formula(g, max_squares):
    return _core.verify_cylinder_formula(g, max_squares)


def verify(suite, seed=0):
    """List of (suite, check, passed, detail) tuples."""
    return _core.verify(suite, seed)


def run_cli(args):
    """Runs the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
