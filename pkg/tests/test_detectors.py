import itertools

import pytest
from hypothesis import given, settings

from pathcover.detectors import (
    Condition,
    Status,
    battery,
    check_all,
    check_condition,
    find_induced_digraph,
    find_induced_graph,
    iter_induced_pseudo_paths,
    max_pseudo_path_r,
    replay_digraph,
    replay_graph,
)
from pathcover.errors import EmptyGraph, InvalidParameter
from pathcover.families import Family, FamilySpec, generate, random_oriented, zigzag_pseudo_path
from pathcover.graph import Digraph, Graph, directed_cycle, directed_path, is_induced_path, r_value

from .conftest import brute_contains_induced, digraphs, plant, small_patterns


def tournament(n):
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n):
    return Graph(n, [(k, k + 1) for k in range(n - 1)])


def test_graph_search_examples():
    k3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert find_induced_graph(k3, path_graph(3)) is None
    w = find_induced_graph(path_graph(4), path_graph(3))
    assert w is not None and replay_graph(path_graph(4), path_graph(3), w.host_vertices)
    f1, f2 = generate(FamilySpec(Family.F1, 3)), generate(FamilySpec(Family.F2, 3))
    assert find_induced_graph(f2, f1) is None


def test_digraph_search_examples():
    d1 = generate(FamilySpec(Family.D1, 3))
    w = find_induced_digraph(d1, d1)
    assert w is not None and replay_digraph(d1, d1, w.host_vertices)
    assert find_induced_digraph(tournament(5), directed_cycle(3)) is None
    assert find_induced_digraph(generate(FamilySpec(Family.D1, 2)), generate(FamilySpec(Family.D2, 2))) is None


def test_empty_pattern_rejected():
    with pytest.raises(InvalidParameter):
        find_induced_graph(path_graph(3), Graph(0))


def test_condition_examples():
    rep = check_condition(directed_path(10), Condition.D3, 3)
    assert rep.status is Status.SATISFIED and rep.max_r == 0

    zig = zigzag_pseudo_path(6, [2, 3, 4, 5])
    rep = check_condition(zig, "d3", 3)
    assert rep.status is Status.VIOLATED and rep.witness.detail == 4
    seq = rep.witness.host_vertices
    assert is_induced_path(zig.underlying, seq) and r_value(zig, seq) == 4

    d1 = generate(FamilySpec(Family.D1, 3))
    rep = check_condition(d1, Condition.D2, 3)
    assert rep.status is Status.VIOLATED
    assert sorted(rep.witness.host_vertices) == list(range(d1.order))


def test_condition_needs_n_at_least_two():
    with pytest.raises(InvalidParameter):
        check_condition(directed_path(3), Condition.D1, 1)


def test_d3_inconclusive_beyond_order_cap():
    rep = check_condition(directed_path(12), Condition.D3, 3, max_order=10)
    assert rep.status is Status.INCONCLUSIVE


def test_d3_budget_inconclusive():
    rep = check_condition(random_oriented(12, 0.3, 5), Condition.D3, 9, budget=3)
    assert rep.status is Status.INCONCLUSIVE


def test_dprime1_battery_is_larger():
    assert set(battery(Condition.D1, 3)) < set(battery(Condition.DPRIME1, 3))


def test_check_all_returns_first_failure():
    d = generate(FamilySpec(Family.D2, 3))
    assert check_all(d, [Condition.D3, Condition.D2], 3).condition is Condition.D2
    assert check_all(directed_path(4), [Condition.D1, Condition.D2, Condition.D3], 3) is None


def test_max_pseudo_path_examples():
    r, w = max_pseudo_path_r(directed_path(5))
    assert r == 0 and list(w.vertices) == [0, 1, 2, 3, 4]
    r, w = max_pseudo_path_r(zigzag_pseudo_path(5, [2, 3, 4]))
    assert r == 3 and list(w.vertices) == [0, 1, 2, 3, 4]
    r, w = max_pseudo_path_r(tournament(4))
    assert r == 0 and len(w.vertices) == 2
    with pytest.raises(EmptyGraph):
        max_pseudo_path_r(Digraph(0))


def _brute_pseudo_paths(d):
    out = set()
    for k in range(1, d.order + 1):
        for seq in itertools.permutations(range(d.order), k):
            if seq[0] <= seq[-1] and is_induced_path(d.underlying, seq):
                out.add((seq, r_value(d, seq)))
    return out


@settings(max_examples=60, deadline=None)
@given(digraphs(max_order=6))
def test_pseudo_path_enumeration_matches_brute_force(d):
    got = [(tuple(s), r) for s, r in iter_induced_pseudo_paths(d)]
    assert len(got) == len(set(got))
    assert set(got) == _brute_pseudo_paths(d)


PATTERNS = small_patterns(5)


@pytest.mark.parametrize("seed", range(0, 200, 20))
def test_detector_agrees_with_subset_oracle(seed):
    for k in range(20):
        s = seed + k
        host = random_oriented(1 + s % 7, (0.25, 0.5, 0.75)[s % 3], s)
        for spec, pattern in PATTERNS:
            if spec.family.directed:
                w = find_induced_digraph(host, pattern, spec)
                assert (w is not None) == brute_contains_induced(host, pattern, True), (s, spec)
                assert w is None or replay_digraph(host, pattern, w.host_vertices)
            else:
                g = host.underlying
                w = find_induced_graph(g, pattern, spec)
                assert (w is not None) == brute_contains_induced(g, pattern, False), (s, spec)
                assert w is None or replay_graph(g, pattern, w.host_vertices)


@pytest.mark.parametrize("fam", list(Family))
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_plant_and_find(fam, n):
    pattern = generate(FamilySpec(fam, n))
    for seed in range(3):
        host, _ = plant(pattern, extra=seed, seed=100 * n + seed, directed=fam.directed)
        find = find_induced_digraph if fam.directed else find_induced_graph
        check = replay_digraph if fam.directed else replay_graph
        w = find(host, pattern)
        assert w is not None and check(host, pattern, w.host_vertices)
