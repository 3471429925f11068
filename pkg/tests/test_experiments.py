import pytest

from pathcover.experiments import (
    battery_instances,
    chain_law,
    cycle_small,
    pseudo_path_formula,
    pseudo_path_law,
    run,
    segment_lengths,
    theorem_e2e,
)
from pathcover.families import zigzag_pseudo_path
from pathcover.solvers import pc_exact, pp_exact

from .conftest import brute_pc, brute_pp


def test_segment_lengths():
    assert segment_lengths(6, [3]) == [2, 3]
    assert segment_lengths(5, [2, 3, 4]) == [1, 1, 1, 1]


@pytest.mark.parametrize("order, branch", [
    (4, [2, 3]), (5, [2, 3, 4]), (6, [2, 4]), (7, [3, 4, 5]), (7, [2, 3, 5, 6]), (6, []),
])
def test_pseudo_path_formula_against_brute_force(order, branch):
    d = zigzag_pseudo_path(order, branch)
    assert pseudo_path_formula(order, branch) == brute_pc(d) == brute_pp(d)


def test_pseudo_path_formula_on_every_small_branch_set():
    import itertools
    for order in range(2, 12):
        for r in range(order - 1):
            for branch in itertools.combinations(range(2, order), r):
                d = zigzag_pseudo_path(order, branch)
                assert pc_exact(d)[0] == pp_exact(d)[0] == pseudo_path_formula(order, branch)


def test_law_holds_with_spread_branch_vertices():
    report = pseudo_path_law(trials=70, seed=1, spread=True)
    assert report["passed"]


def test_law_counterexample():
    # v1 -> v2 <- v3 -> v4 has r = 2 but is covered by v1v2 and v3v4
    d = zigzag_pseudo_path(4, [2, 3])
    assert pc_exact(d)[0] == pp_exact(d)[0] == 2


def test_chain_law_report():
    rep = chain_law(trials=30, seed=5)
    assert rep["passed"] and rep["count"] == 30 and all("seed" in t for t in rep["trials"])


def test_theorem_e2e_small():
    rep = theorem_e2e(trials=20, seed=3)
    assert rep["passed"] and rep["enough"]


def test_battery_instances_shape():
    cases = battery_instances()
    names = {c["name"] for c in cases}
    assert {f"type{t}" for t in range(1, 8)} <= names
    assert {f"type{t}+bad" for t in range(1, 8)} <= names
    assert all(len(c["Q"]) == 30 for c in cases)


def test_cycle_small_report():
    assert cycle_small(3, 4)["passed"]


def test_run_rejects_unknown_kind():
    with pytest.raises(ValueError):
        run("nope")
