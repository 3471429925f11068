import itertools

import pytest

from pathcover.cycles import (
    canonical_form,
    check_cycle_theorem,
    degree_bound,
    diameter,
    enumerate_hereditary,
    exhaustive_small_verification,
    moore_bound,
    order_bound,
)
from pathcover.errors import InvalidParameter, TooLarge
from pathcover.families import relabel
from pathcover.graph import Digraph, Graph, directed_cycle, directed_path


def tournament(n):
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_three_cycle_report():
    rep = check_cycle_theorem(directed_cycle(3), 3)
    assert rep.premise_ok and rep.bounds_hold
    assert rep.order == 3 and rep.order_bound == 5 and rep.cp_value == 1
    assert rep.degree_bound == 5 and rep.ramsey_source == "exhaustive"


def test_power_bound_recorded_not_asserted():
    rep = check_cycle_theorem(directed_cycle(3), 3)
    assert rep.power_bound == 2 and rep.power_bound_holds is False
    assert rep.bounds_hold


def test_premise_failures():
    rep = check_cycle_theorem(tournament(4), 3)
    assert not rep.premise_ok and rep.premise_witness["pattern"] == "TransTournament_3"
    rep = check_cycle_theorem(directed_path(6), 3)
    assert not rep.premise_ok and rep.premise_witness["pattern"] == "Path_3"
    rep = check_cycle_theorem(Digraph(2), 3)
    assert not rep.premise_ok and rep.premise_witness == {"reason": "not weakly connected"}


def test_order_bound_values():
    assert order_bound(2) == 1  # 0^0
    assert order_bound(3) == 5
    assert degree_bound(4)[0] == 83
    assert order_bound(4) == 83 ** 2


def test_diameter_and_moore():
    assert diameter(Graph(1)) == 0
    assert diameter(Graph(2)) is None
    assert diameter(directed_path(5).underlying) == 4
    assert moore_bound(3, 2) == 10  # Petersen
    assert moore_bound(2, 1) == 3


def test_canonical_form_is_invariant():
    d = Digraph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    forms = {canonical_form(relabel(d, list(p))) for p in itertools.permutations(range(4))}
    assert len(forms) == 1


def test_small_n3_survivors():
    res = exhaustive_small_verification(3, 6)
    assert res["ok"] and res["ramsey_source"] == "exhaustive"
    assert all(s["order"] <= 5 and s["cp"] <= 5 for s in res["survivors"])
    arcs = [tuple(map(tuple, s["arcs"])) for s in res["survivors"]]
    assert arcs == [(), ((0, 1),), ((0, 1), (1, 2), (2, 0))]


def test_small_n3_order3_has_cycle():
    res = exhaustive_small_verification(3, 3)
    cyc = [s for s in res["survivors"] if s["order"] == 3]
    assert len(cyc) == 1 and cyc[0]["cp"] == 1


def test_small_n2_survivors():
    res = exhaustive_small_verification(2, 4)
    assert {s["order"] for s in res["survivors"]} <= {1, 2}
    assert [s["order"] for s in res["survivors"]] == [1]


def test_enumeration_counts_n3():
    # disjoint unions of K1, arcs and 3-cycles: partitions of k into parts of size <= 3
    levels = enumerate_hereditary(3, 6)
    assert [len(levels[k]) for k in range(1, 7)] == [1, 2, 3, 4, 5, 7]


def test_limits():
    with pytest.raises(TooLarge):
        exhaustive_small_verification(3, 9)
    with pytest.raises(InvalidParameter):
        check_cycle_theorem(directed_cycle(3), 1)
