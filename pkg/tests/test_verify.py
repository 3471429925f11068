import json
import random

import pytest

from pathcover.cover import theorem_cover
from pathcover.experiments import decorated_path
from pathcover.graph import Digraph, directed_path, to_edge_list
from pathcover.solvers import cp_exact, pc_exact, pp_exact
from pathcover.verify import SchemaError, first_violation, parse_certificate, verify_objects, verify_texts

X_SHAPE = Digraph(5, [(0, 2), (2, 1), (3, 2), (2, 4)])


def cert(paths, mode="cover"):
    return json.dumps({"kind": "path", "mode": mode, "paths": paths})


def test_whole_path_accepted():
    assert verify_texts(to_edge_list(directed_path(4)), cert([[0, 1, 2, 3]])) is None


def test_missing_vertex():
    assert verify_texts(to_edge_list(directed_path(4)), cert([[0, 1, 2]])) == "vertex 3 uncovered"


def test_overlap_in_partition():
    msg = verify_texts(to_edge_list(X_SHAPE), cert([[0, 2, 1], [3, 2, 4]], "partition"))
    assert msg == "vertex 2 in two paths"
    assert verify_texts(to_edge_list(X_SHAPE), cert([[0, 2, 1], [3, 2, 4]], "cover")) is None


def test_missing_arc_and_repeats():
    g = to_edge_list(directed_path(3))
    assert "missing" in verify_texts(g, cert([[1, 0], [2]]))
    assert "repeats" in verify_texts(g, cert([[0, 1, 0], [2]]))
    assert "out of range" in verify_texts(g, cert([[0, 1, 2, 7]]))
    assert "empty" in verify_texts(g, cert([[], [0, 1, 2]]))


def test_claimed_bound_checked():
    g = to_edge_list(Digraph(3))
    doc = json.dumps({"kind": "path", "mode": "cover", "paths": [[0], [1], [2]], "bound": {"total": 2}})
    assert "exceed" in verify_texts(g, doc)


def test_cycle_units():
    g = to_edge_list(Digraph(5, [(0, 1), (1, 2), (2, 0), (3, 4)]))
    ok = json.dumps({"kind": "cycle", "mode": "partition", "units": [[0, 1, 2], [3, 4]]})
    assert verify_texts(g, ok) is None
    bad = json.dumps({"kind": "cycle", "mode": "partition", "units": [[0, 2, 1], [3, 4]]})
    assert "missing" in verify_texts(g, bad)
    pair = json.dumps({"kind": "cycle", "mode": "partition", "units": [[0, 1, 2], [3], [4], [3, 0]]})
    assert verify_texts(g, pair) is not None


@pytest.mark.parametrize("doc", [
    "not json",
    "[1, 2]",
    json.dumps({"kind": "tree", "mode": "cover", "paths": []}),
    json.dumps({"kind": "path", "mode": "both", "paths": []}),
    json.dumps({"kind": "path", "mode": "cover", "paths": [["a"]]}),
    json.dumps({"kind": "path", "mode": "cover", "paths": [[True]]}),
])
def test_schema_errors(doc):
    with pytest.raises(SchemaError):
        parse_certificate(doc)


@pytest.mark.parametrize("text", ["", "3; 0 x", "3; 0", "2; 0 1; 1 0", "2; 0 0", "2; 0 2"])
def test_graph_schema_errors(text):
    with pytest.raises(SchemaError):
        verify_texts(text, cert([[0]]))


def test_validator_imports_nothing_from_producers():
    import pathcover.verify as v
    src = open(v.__file__).read()
    assert "from ." not in src and "import pathcover" not in src


def test_accepts_every_solver_certificate():
    rng = random.Random(4)
    for _ in range(40):
        d = Digraph(7, [(u, v) if rng.random() < 0.5 else (v, u)
                        for u in range(7) for v in range(u + 1, 7) if rng.random() < 0.4])
        for fn in (pc_exact, pp_exact, cp_exact):
            assert verify_objects(d.order, d.arcs, fn(d)[1].to_json()) is None


def test_accepts_theorem_certificates():
    seen = 0
    for seed in range(100):
        d = decorated_path(10, seed)
        try:
            c = theorem_cover(d, 3)
        except Exception:
            continue
        seen += 1
        assert first_violation(d.order, d.arcs, json.loads(json.dumps(c.to_json()))) is None
    assert seen > 10


def test_accepts_wrapped_solver_output():
    cert = {"stat": "pp", "value": 1, "certificate": {"kind": "path", "mode": "partition", "paths": [[0, 1]]}}
    assert verify_texts("2\n0 1\n", json.dumps(cert)) is None
