import os
from pathlib import Path

import pytest

import mocs

FIXTURES = Path(os.environ.get("MOCS_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def load(name):
    return mocs.Problem.load(str(FIXTURES / f"{name}.json"))


def test_problem_handle():
    p = load("example1")
    assert p.variables == ["x1", "x2", "x3", "x4"]
    assert p.subsystems == ["s1", "s2", "s3"]
    assert mocs.Problem.from_json(p.to_json()).dimension == 4
    assert len(mocs.grid(p)) == 16


def test_superior_sets():
    p = load("objective_scope")
    assert mocs.superior_set(p, [0]) == [[0.0, 0.0], [0.0, 0.5], [0.0, 1.0]]
    assert mocs.superior_set(p, [0, 1]) == [[0.0, 0.0]]
    assert len(mocs.superior_set(p, [0, 1], kind="weak")) == 5
    assert mocs.efficient_set(p) == [[0.0, 0.0]]
    assert mocs.superior_set(p, [0, 1], threads=4) == mocs.superior_set(p, [0, 1])


def test_standard_form():
    sf = mocs.standard_form(load("example1"))
    assert sf["columns"] == ["x1#s1", "x1#s2", "x1#s3", "x2", "x3", "x4#s1", "x4#s3"]
    assert sf["incidence_matrix"][2] == [0, 0, 0, 0, 0, 1, -1]


def test_ideal_and_hierarchy():
    b = mocs.ideal_bounds(load("illustrative"))
    assert b["y_ssI"] == [-4, 0.5, -3, -3.5]
    assert b["y_sI"] == [-4, 0.5, -2, -3.5]
    r = mocs.hierarchical(load("eps_adaptive"), "eps-adaptive")
    assert r["eps_star"] == 1.0
    assert mocs.hierarchical(load("eps_adaptive"), "incremental")["points"] == []


def test_structure_and_compromise():
    assert not mocs.independence(load("decomposition_two"))["independent"]
    s = mocs.scalarize(load("separable"), [[1, 1], [1]])
    assert s["x"] == [0.5, 2.0, 1.5]
    refs = [[0.5, 0], [0.5, 0], [1.5, 0], [1.8, 0.2], [2, 0.5], [2, 0.5]]
    assert mocs.median_bounds(refs) == ([1.5, 0.0], [1.8, 0.2])
    c = mocs.l1_compromise(refs)
    assert c["objective"] == pytest.approx(4.5)
    assert sum(c["lambdas"]) == pytest.approx(1.0)


def test_errors():
    with pytest.raises(mocs.ValidationError):
        load("orphan_variable")
    with pytest.raises(mocs.ParseError):
        mocs.Problem.from_json("{")
    with pytest.raises(mocs.InvalidArgument):
        mocs.superior_set(load("objective_scope"), [0], kind="sideways")
    assert issubclass(mocs.CapExceeded, mocs.Error)
