import json
import os
import subprocess
from fractions import Fraction

import pytest

import obstruct


def test_number_theory():
    assert obstruct.factor(226) == [(2, 1), (113, 1)]
    assert obstruct.legendre(2, 7) == 1
    assert obstruct.is_square_mod(-6, 35) == (True, 22)
    assert obstruct.is_square_mod(6, 11) == (False, None)
    assert obstruct.chi8m(11, 3) == -1
    assert not obstruct.in_S(6)
    assert obstruct.in_S(15)


def test_rationals_are_fractions():
    assert obstruct.density("Sk:1", 25) == Fraction(3, 5)
    assert obstruct.product_bound("Sk", 2) == Fraction(33, 65)
    assert obstruct.em_slope(2, 2, 0, 0) == Fraction(-37, 2)
    assert obstruct.linking_self(2, 3, 2, 5) == (Fraction(49, 59), Fraction(53, 59))


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        obstruct.legendre(2, 9)
    with pytest.raises(ValueError):
        obstruct.h1_order(2, 1, 2, 3)
    with pytest.raises(ValueError):
        obstruct.em_slope(2, 2, 1, 1)


def test_lattice():
    gd = obstruct.builtin_goeritz("L35-white")
    assert abs(obstruct.determinant(gd)) == 226
    sigma = [1, 2, 2, 4, 4, 8, 11]
    assert obstruct.is_changemaker(sigma)
    assert sigma in obstruct.enumerate_changemakers(7, 226)
    vectors = obstruct.embed_in_complement(gd, sigma)
    assert vectors is not None
    for i, v in enumerate(vectors):
        assert sum(x * s for x, s in zip(v, sigma)) == 0
        for j, w in enumerate(vectors):
            assert -sum(x * y for x, y in zip(v, w)) == gd[i][j]
    assert obstruct.embed_in_complement([[-1]], [0, 1]) == [[1, 0]]
    assert obstruct.genus_from_changemaker(sigma) == 97


def test_goeritz():
    assert obstruct.goeritz_matrix(2, [(0, 1), (0, 1)]) == [[-2]]
    assert abs(obstruct.determinant(obstruct.family_2odd_2odd(1, 1))) == 35


def test_reports():
    v = obstruct.splice_verdict(3, 4, -3, 4)
    assert v["overall"] == "NotAnySurgery"
    census = obstruct.census_2odd(341, jobs=2)
    assert census["witness_pairs"] == [[1, 1], [1, 2], [1, 3], [2, 3], [3, 3]]
    em = obstruct.em_report(5, 2, 0, 2)
    assert em["witness"]["phi_over_pi"] == "2/3"
    cable = obstruct.cable_slopes("C(13,2);T(2,3)")
    assert [s["slope"] for s in cable["slopes"]] == ["25", "26"]


@pytest.mark.skipif("OBSTRUCT_CLI" not in os.environ, reason="command-line binary not located")
def test_cli_matches_module():
    out = subprocess.run(
        [os.environ["OBSTRUCT_CLI"], "splice", "--a", "2", "--b", "3", "--c", "2", "--d", "-3"],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    assert json.loads(out)["result"] == obstruct.splice_verdict(2, 3, 2, -3)
