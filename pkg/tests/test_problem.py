import json
from pathlib import Path

import pytest

from hyperchoquet.errors import SchemaError
from hyperchoquet.problem import SCHEMA, load_problem, parse_hyper, parse_problem

ROOT = Path(__file__).resolve().parent.parent


def test_docs_copy_of_schema_matches_package():
    assert json.loads((ROOT / "docs" / "problem.schema.json").read_text()) == SCHEMA


@pytest.mark.parametrize("path", sorted((ROOT / "problems").glob("*.json")), ids=lambda p: p.stem)
def test_sample_problems_parse(path):
    problem = load_problem(path)
    assert problem.family.universe.full in problem.family


def test_written_order_is_kept():
    problem = parse_problem({"n": 2, "family": [[1, 2], [], [2]], "mu": [1, 0, 0.5]})
    assert problem.mu(0b11) == 1 and problem.mu(0b10) == 0.5
    assert problem.written(problem.mu.values) == [1, 0, 0.5]
    assert problem.subfamily(problem.family.full_hyper) == [[1, 2], [], [2]]


def test_named_measures_and_operators():
    doc = {
        "n": 2,
        "family": "powerset",
        "mu": {"kind": "possibility", "pi": [0.5, 1]},
        "fca": {"kind": "mixed", "assign": [{"set": [], "op": "sup"}], "default": {"kind": "choquet", "inner": {"kind": "counting"}}},
        "f": [1, 2],
        "ybar": 2,
        "queries": {"alpha": [0.5], "hyper": [[[], [1]]]},
    }
    problem = parse_problem(doc)
    assert problem.mu(0b01) == 0.5
    assert problem.T().values.tolist() == [2.0, 2.0, 1.0, 0.0]
    assert problem.alphas == (0.5,) and problem.hypers == (0b011,)


@pytest.mark.parametrize(
    "doc",
    [
        {"n": 2, "family": [[], [1]], "mu": [0, 1]},
        {"n": 2, "family": [[], [1], [1], [1, 2]], "mu": [0, 1, 1, 1]},
        {"n": 2, "family": [[], [3], [1, 2]], "mu": [0, 1, 1]},
        {"n": 2, "family": "powerset", "mu": [0, 1]},
        {"n": 2, "family": "powerset", "mu": {"kind": "possibility"}},
        {"n": 2, "family": "powerset", "mu": {"kind": "counting"}, "f": [1]},
        {"n": 2, "family": "powerset", "mu": {"kind": "counting"}, "fca": {"kind": "raw", "T": [0]}},
        {"n": 0, "family": "powerset", "mu": {"kind": "counting"}},
        {"n": 2, "family": "powerset", "mu": {"kind": "counting"}, "extra": 1},
    ],
)
def test_schema_rejects(doc):
    with pytest.raises(SchemaError):
        parse_problem(doc)


def test_parse_hyper_rejects_non_members():
    problem = parse_problem({"n": 2, "family": [[], [1, 2]], "mu": [0, 1]})
    with pytest.raises(SchemaError):
        parse_hyper(problem.family, [[1]])
    with pytest.raises(SchemaError):
        parse_hyper(problem.family, [1])
