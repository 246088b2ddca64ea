import json
from fractions import Fraction

import pytest

import boxdioph


def test_solve_statuses():
    r = boxdioph.solve([[5, 2, 3]], [4])
    assert r["status"] == "nonnegative"
    assert r["x"] == [0, 2, 0]
    assert r["basis_cols"] == [1]

    r = boxdioph.solve([[5, 2, 3]], [1])
    assert r["status"] == "integer_only"
    assert r["x"] == [-1, 3, 0]

    r = boxdioph.solve([[2, 4]], [3])
    assert r["status"] == "infeasible"
    assert r["x"] is None


def test_big_integers_round_trip():
    big = 10**40 + 7
    r = boxdioph.solve([[1, 1]], [big])
    assert r["status"] == "nonnegative"
    assert sum(r["x"]) == big
    assert boxdioph.verify([[1, 1]], [big], r["x"])


def test_exact_arith():
    H, U = boxdioph.hnf([[2, 3]])
    assert H == [[1, 0]]
    assert U == [[-1, 3], [1, -2]]
    assert boxdioph.det([[2, 1], [1, 2]]) == 3
    assert boxdioph.gcd_max_minors([[2, 0, 1], [0, 2, 1]]) == 2


def test_special_basis_and_box_shape():
    # lattice spanned by (2,1) and (0,3): smallest multiple of e1 is (6,0)
    assert boxdioph.special_basis([[2, 1], [0, 3]]) == [[6, 0], [2, 1]]
    assert boxdioph.box_shape([6, 10, 15]) == [3, 2]


def test_frobenius():
    assert boxdioph.f_chain([6, 10, 15]) == [6, 2, 1]
    assert boxdioph.brauer_G([6, 10, 15]) == 29
    assert boxdioph.frobenius_number([3, 5]) == 7
    with pytest.raises(boxdioph.BoxdiophError):
        boxdioph.brauer_G([6, 10])


def test_cone_reports_are_exact():
    r = boxdioph.deep_cone_condition([[3, 0], [0, 3]], [[1], [1]], 3, [3, 3])
    assert r["holds"]
    assert r["t_squared"] == 8
    assert r["per_facet"][0]["rhs_squared"] == Fraction(8, 9)
    s = boxdioph.shifted_cone_condition_m2([[2, 0], [0, 2]], [[1], [1]], [7, 7])
    assert s["t_squared"] == Fraction(9, 2)
    assert s["holds"]
    assert boxdioph.shifted_cone_condition_m2([[1, 0], [0, 1]], [[-1], [1]], [3, 3]) is None


def test_solve_json_matches_cli_format():
    text = json.dumps({"m": 1, "n": 3, "A": ["5", "2", "3"], "b": ["4"]})
    out = json.loads(boxdioph.solve_json(text))
    assert out["status"] == "nonnegative"
    assert out["x"] == ["0", "2", "0"]


def test_errors():
    with pytest.raises(boxdioph.BoxdiophError):
        boxdioph.solve([[1, 2, 3], [2, 4, 6]], [1, 2])
    with pytest.raises(ValueError):
        boxdioph.solve_json("{")
    with pytest.raises(TypeError):
        boxdioph.det([[1.5]])
