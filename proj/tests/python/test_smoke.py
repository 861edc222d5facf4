import json
from fractions import Fraction
from pathlib import Path

import pytest

import realhurwitz as rh

GROUPS = Path(__file__).resolve().parents[2] / "data" / "groups"


def test_projective_line():
    assert rh.real_number(0, 3, [[3]], connected=True) == Fraction(1, 3)
    assert rh.real_number(0, 4, [[2, 2]], connected=True) == Fraction(-1, 4)
    assert rh.real_number(0, 2, [[2], [2]]) == 0
    assert rh.complex_number(0, 2, [[2]] * 4) == Fraction(1, 2)


def test_paths_agree():
    for via in ("formula", "operator", "oracle"):
        assert rh.real_number(2, 3, [[2, 1]], via=via, handles=1 if via != "formula" else 0) == rh.real_number(
            2, 3, [[2, 1]]
        )


def test_tables():
    shapes, rows = rh.character_table(3)
    assert shapes == [(3,), (2, 1), (1, 1, 1)]
    assert rows[1] == [-1, 0, 2]
    assert rh.sfs(4)[(2, 2)] == -1
    assert rh.completed_cycle(4) == {(4,): 1, (2, 1): 2, (2,): Fraction(5, 4)}


def test_doublets_and_signs():
    assert rh.doublet_number(0, 2, [[2], [2]], marking=[0]) == Fraction(-1, 2)
    assert rh.doublet_contribution(0, 4, [[2, 2]]) == Fraction(-1, 4)
    assert rh.local_sign("(1 2 3)", "", 3) == (1, True)
    assert rh.local_sign("(1 2 3 4)", "(1 3)(2 4)", 4) == (-1, False)
    assert rh.completed_number(1, 3, [], [1]) == Fraction(71, 24)


def test_group_file():
    value = rh.real_group_number(str(GROUPS / "s4.json"), 0, ["(123)"])
    assert value == rh.real_number(0, 4, [[3, 1]])
    assert rh.real_group_number(str(GROUPS / "q8.json"), 0) == Fraction(1, 4)


def test_errors():
    with pytest.raises(rh.ValidationError):
        rh.real_number(0, 3, [[4]])
    with pytest.raises(ValueError):
        rh.real_number(0, 3, [[2, 0]])
    with pytest.raises(rh.BudgetExceeded):
        rh.real_number(2, 7, [[7]], via="oracle", budget=1000)
    with pytest.raises(rh.ResourceError):
        rh.character_table(40)


def test_cli_json():
    code, out, err = rh.run_cli(["real", "--genus", "0", "--degree", "3", "--profiles", "3", "--json"])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["value"] == "1/3"
    assert doc["query"]["command"] == "real"


def test_verify():
    assert all(line.startswith("PASS") for line in rh.verify("sfs", 4))
