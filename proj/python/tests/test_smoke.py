import pytest

import flagschur as fs


def rows(m):
    return m["rows"]


def test_theta_counts():
    assert len(fs.theta(2, 1)) == 4
    assert len(fs.theta(2, 2)) == 10


def test_generator_square_matches_cli_shape():
    t12 = fs.generator(0, 1, 2, 2)
    prod = fs.multiply(t12, t12)
    assert prod["basis"] == "bracket"
    assert [rows(t["matrix"]) for t in prod["terms"]] == [[[0, 2], [0, 0]]]


def test_identity_and_round_trip():
    x = {"n": 2, "d": 2, "basis": "e", "terms": [{"matrix": {"n": 2, "rows": [[1, 1], [0, 0]]}, "coeff": {"0": "1"}}]}
    assert fs.convert(x, "bracket")["terms"][0]["coeff"] == {"1": "1"}
    assert fs.convert(fs.convert(x, "bracket"), "e") == x


def test_relations():
    assert fs.schur_rtt_ok(3, 2)
    assert fs.limit_rtt_ok(3)


def test_oracle_and_lemmas():
    assert fs.convolve_oracle([[1, 1], [0, 0]], [[1, 0], [1, 0]], [[2, 0], [0, 0]], 3) == 4
    checked, mismatches = fs.oracle_sweep(2, 2, 2)
    assert checked > 0 and mismatches == 0
    rep = fs.counting_lemmas(2, 3, 1)
    assert rep["ok"] and rep["first_count"] == 4 and rep["second_count"] == 2


def test_stabilize_single_factor():
    out = fs.stabilize([[[0, 1], [0, -1]]])
    assert out["product"] == [{"Z": {"n": 2, "rows": [[0, 1], [0, -1]]}, "G": [{"0": "1"}]}]
    assert out["integral"]


def test_limit_product_first_case():
    n = 4
    x = fs.limit_generator(0, 3, n)
    y = fs.limit_generator(1, 2, n)
    assert fs.limit_multiply(x, y) == fs.limit_multiply(y, x)
    assert fs.limit_generator(1, 0, n)["symbols"] == []


def test_triangular():
    out = fs.triangular([[1, 1, 0], [0, 1, 1], [1, 0, 0]])
    assert out["leading_ok"]
    assert len(out["factors"]) == 6


def test_errors_map_to_python():
    with pytest.raises(fs.ParseError):
        fs.multiply({"n": 2}, {"n": 2})
    with pytest.raises(fs.FlagSchurError):
        fs.stabilize([[[0, -1], [0, 0]]])
