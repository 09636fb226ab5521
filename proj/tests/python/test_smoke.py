import json
from fractions import Fraction

import pytest

import stratavol


def divisor_sum(m):
    return sum(d for d in range(1, m + 1) if m % d == 0)


def test_first_volume_row():
    assert stratavol.a_gn(1, 1) == Fraction(1, 24)
    assert stratavol.vol_n(1, 1) == (Fraction(1, 3), 2)
    assert stratavol.total_volume(2) == (Fraction(1, 120), 4)


def test_contributions_sum_to_total():
    for g in range(1, 6):
        parts = [stratavol.vol_n(g, n) for n in range(1, g + 1)]
        assert {e for _, e in parts} == {2 * g}
        assert sum(c for c, _ in parts) == stratavol.total_volume(g)[0]


def test_invalid_arguments_raise():
    with pytest.raises(ValueError):
        stratavol.a_gn(2, 3)
    with pytest.raises(ValueError):
        stratavol.p_value([1])


def test_series_routes_agree():
    table = stratavol.c_series(10)
    assert table == stratavol.c_series(10, "lagrange")
    assert table[0] == [Fraction(1)]
    assert table[2] == [Fraction(0), Fraction(1, 24)]


def test_p_numbers():
    assert stratavol.p_value([2, 2, 2, 2]) == 335
    assert stratavol.p_value([2, 4]) == stratavol.p_value([4, 2]) == 18


def test_counting_functions():
    assert stratavol.counting_function(1, [4], [4]) == 1
    assert stratavol.counting_function(1, [4], [3]) == 0
    assert stratavol.count_positive_trees([5, 1], [4, 2]) == 2


def test_torus_census_matches_divisor_sums():
    census = stratavol.census(1, 6)
    for N in range(1, 7):
        count, weighted = census[(N, 1)]
        assert count == divisor_sum(N)
        assert weighted == Fraction(divisor_sum(N), N)
    assert stratavol.verify_cylinder_formula(2, 5)


def test_verify_suite():
    checks = stratavol.verify("bivariate")
    assert checks and all(passed for _, _, passed, _ in checks)


def test_cli_round_trip():
    code, out, err = stratavol.run_cli(["pnumbers", "--weight", "4", "--format", "json"])
    assert code == 0 and err == ""
    assert json.loads(out) == [
        {"parts": [2], "value": "1"},
        {"parts": [4], "value": "2"},
        {"parts": [2, 2], "value": "1"},
    ]
    code, _, err = stratavol.run_cli(["volumes", "--nope"])
    assert code != 0 and "nope" in err
