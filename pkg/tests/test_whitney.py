import json
from pathlib import Path

import pytest

from pqwhitney.basics import binomial, bracket
from pqwhitney.laurent import ONE, P, Q, ZERO, LaurentPoly
from pqwhitney.whitney import (
    Form,
    WhitneyParams,
    classical_whitney,
    gf_series,
    triangle,
    vertical_rhs,
    w2_first,
    w2_second,
    w2_third,
)

from paper_table import GRID, table1

GOLDEN = Path(__file__).parent / "golden"

SWEEP = [WhitneyParams(m, r, t) for m in (1, 2, 3) for r in (0, 1, 3) for t in (0, 1, 3)]


def pp(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(e, 0)


def first_form_direct(params: WhitneyParams, n_max: int) -> list[list[LaurentPoly]]:
    """W[n+1,k] = q^{m(k-1)+r} W[n,k-1] + [mk+r] p^{mt-km} W[n,k], from W[0,0] = 1."""
    m, r, t = params.m, params.r, params.t
    rows = [[ONE]]
    for n in range(n_max):
        prev = rows[-1] + [ZERO]
        row = []
        for k in range(n + 2):
            left = prev[k - 1] * LaurentPoly.monomial(0, m * (k - 1) + r) if k else ZERO
            row.append(left + bracket(m * k + r) * pp(m * t - k * m) * prev[k])
        rows.append(row)
    return rows


def integer_whitney(m: int, r: int, n_max: int) -> list[list[int]]:
    rows = [[1]]
    for _ in range(n_max):
        prev = rows[-1] + [0]
        rows.append([(prev[k - 1] if k else 0) + (k * m + r) * prev[k] for k in range(len(prev))])
    return rows


def test_params_validation():
    with pytest.raises(ValueError):
        WhitneyParams(0, 1, 1)
    with pytest.raises(ValueError):
        WhitneyParams(1, -1, 1)
    with pytest.raises(TypeError):
        WhitneyParams(1, 0.5, 1)
    WhitneyParams(1, 0, -4)


def test_w2_second_examples():
    for params in SWEEP:
        m, r, t = params.m, params.r, params.t
        assert w2_second(params, 0, 0) == ONE
        assert w2_second(params, 2, 1) == bracket(r) * pp(m * t) + bracket(m + r) * pp(m * (t - 1))
    assert w2_second(WhitneyParams(1, 2, 1), 1, 0) == P**2 + P * Q


def test_out_of_range_entries_are_zero():
    params = WhitneyParams(2, 1, 1)
    assert w2_second(params, 3, 4) == ZERO
    assert w2_second(params, 3, -1) == ZERO


def test_w2_first_examples():
    for params in SWEEP:
        assert w2_first(params, 0, 0) == ONE
        assert w2_first(params, 1, 1) == LaurentPoly.monomial(0, params.r)
    assert w2_first(WhitneyParams(1, 0, 0), 2, 1) == LaurentPoly.monomial(-1, 0)


def test_w2_third_examples():
    assert w2_third(WhitneyParams(1, 2, 1), 0, 0) == ONE
    assert w2_third(WhitneyParams(1, 2, 1), 3, 3) == LaurentPoly.monomial(0, 6)
    params = WhitneyParams(2, 0, 3)
    for n in range(6):
        for k in range(n + 1):
            assert w2_third(params, n, k) == w2_second(params, n, k)


@pytest.mark.parametrize("params", SWEEP[::4])
def test_first_form_obeys_its_own_recurrence(params):
    direct = first_form_direct(params, 10)
    for n in range(11):
        for k in range(n + 1):
            assert w2_first(params, n, k) == direct[n][k]


def test_form_shifts():
    params = WhitneyParams(3, 2, 1)
    for n in range(7):
        for k in range(n + 1):
            star = w2_second(params, n, k)
            assert w2_first(params, n, k) == star.mono_mul(0, k * 2 + 3 * binomial(k, 2))
            assert w2_third(params, n, k) == star.mono_mul(0, 2 * k)


def test_table1_transcription_is_frozen():
    golden = json.loads((GOLDEN / "table1_literal.json").read_text())
    for m, r, t in GRID:
        rows = table1(m, r, t)
        assert [[e.canonical() for e in row] for row in rows] == golden[f"{m},{r},{t}"]


@pytest.mark.parametrize("m,r,t", GRID)
def test_table1_entries_reproduced_except_3_2(m, r, t):
    params = WhitneyParams(m, r, t)
    printed = table1(m, r, t)
    for n in range(4):
        for k in range(n + 1):
            if (n, k) != (3, 2):
                assert w2_second(params, n, k) == printed[n][k], (n, k)


@pytest.mark.parametrize("m,r,t", GRID)
def test_table1_entry_3_2_follows_the_recurrence(m, r, t):
    # printed: [r]p^{mt} + 2[m+r]p^{m(t-1)}; the recurrence gives the line below
    params = WhitneyParams(m, r, t)
    expected = bracket(r) * pp(m * t) + bracket(m + r) * pp(m * (t - 1)) + bracket(2 * m + r) * pp(m * (t - 2))
    assert w2_second(params, 3, 2) == expected
    assert w2_second(params, 3, 2) != table1(m, r, t)[3][2]
    assert expected.eval_int(1, 1) == integer_whitney(m, r, 3)[3][2] == 3 * m + 3 * r


def test_triangle_examples():
    params = WhitneyParams(1, 1, 1)
    assert triangle(params, 0).rows == ((ONE,),)
    tri = triangle(params, 5, Form.FIRST)
    assert tri.n_max == 5
    for n in range(6):
        assert tri[n, n] == LaurentPoly.monomial(0, n * 1 + binomial(n, 2))
        for k in range(n + 1):
            assert tri[n, k] == w2_first(params, n, k)
    assert tri[2, 4] == ZERO
    with pytest.raises(IndexError):
        tri[6, 0]
    with pytest.raises(ValueError):
        triangle(params, -1)


def test_triangle_independent_of_build_order():
    from pqwhitney.whitney import clear_cache

    params = WhitneyParams(2, 3, 1)
    big = triangle(params, 9)
    clear_cache()
    small = triangle(params, 4)
    assert big.rows[:5] == small.rows


def test_diagonal_and_column_zero():
    for params in SWEEP:
        m, r, t = params.m, params.r, params.t
        base = bracket(r) * pp(m * t)
        for n in range(13):
            assert w2_second(params, n, n) == ONE
            assert w2_second(params, n, 0) == base**n


def test_vertical_examples():
    for params in SWEEP:
        m, r, t = params.m, params.r, params.t
        assert vertical_rhs(params, 0, 0) == ONE == w2_second(params, 1, 1)
        br, bmr = bracket(r), bracket(m + r)
        expected = br**2 * pp(2 * m * t) + br * bmr * pp(m * (2 * t - 1)) + bmr**2 * pp(2 * m * (t - 1))
        assert vertical_rhs(params, 2, 0) == expected
    params = WhitneyParams(2, 1, 2)
    assert vertical_rhs(params, 3, 1) == w2_second(params, 4, 2)
    with pytest.raises(ValueError):
        vertical_rhs(params, 1, 2)


@pytest.mark.parametrize("params", SWEEP, ids=str)
def test_vertical_recurrence_sweep(params):
    for n in range(13):
        for k in range(n + 1):
            assert vertical_rhs(params, n, k) == w2_second(params, n + 1, k + 1)


def test_gf_examples():
    for params in SWEEP:
        m, r, t = params.m, params.r, params.t
        c0 = bracket(r) * pp(m * t)
        assert gf_series(params, 0, 2) == [ONE, c0, c0**2]
        assert gf_series(params, 1, 1) == [ONE, c0 + bracket(m + r) * pp(m * (t - 1))]
    params = WhitneyParams(2, 1, 1)
    assert gf_series(params, 3, 6) == triangle(params, 9).column(3)


@pytest.mark.parametrize("params", SWEEP, ids=str)
def test_gf_matches_recurrence_sweep(params):
    for k in range(13):
        series = gf_series(params, k, 12 - k)
        for n in range(k, 13):
            assert series[n - k] == w2_second(params, n, k)


def test_gf_order_zero():
    assert gf_series(WhitneyParams(1, 1, 1), 4, 0) == [ONE]


@pytest.mark.parametrize("params", SWEEP, ids=str)
def test_classical_limit(params):
    expected = integer_whitney(params.m, params.r, 15)
    tri = triangle(params, 15)
    for n in range(16):
        for k in range(n + 1):
            assert tri[n, k].eval_int(1, 1) == expected[n][k]


def test_classical_helper_known_values():
    # m=1, r=0: Stirling numbers of the second kind
    assert classical_whitney(1, 0, 5)[5] == [0, 1, 15, 25, 10, 1]
    # m=1, r=1: shifted Stirling numbers S(n+1, k+1)
    assert classical_whitney(1, 1, 4)[4] == [1, 15, 25, 10, 1]
    assert classical_whitney(3, 2, 12) == integer_whitney(3, 2, 12)


def test_triangle_json_and_text():
    tri = triangle(WhitneyParams(1, 1, 1), 2)
    assert tri.to_json() == {
        "params": {"m": 1, "r": 1, "t": 1},
        "form": "second",
        "n_max": 2,
        "rows": [["1*p^0*q^0"], ["1*p^1*q^0", "1*p^0*q^0"],
                 ["1*p^2*q^0", "2*p^1*q^0 + 1*p^0*q^1", "1*p^0*q^0"]],
    }
    assert tri.to_text().splitlines()[-1] == "2 | p^2 | 2*p + q | 1"
