"""Generators for the named forbidden (di)graphs and for random oriented graphs.

Vertex order for the two-tailed families is ``y_n .. y_1, x_1 (, x_2), z_1 .. z_n``
so that witnesses print left to right in the usual drawing. ``K*_n`` uses
``x_1 .. x_n, y_1 .. y_n``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidParameter
from .graph import Digraph, Graph

PRNG_NAME = "python-random-MT19937/random()@1"


class Family(enum.Enum):
    KSTAR = "Kstar"
    STAR = "Star"
    PATH = "Path"
    COMPLETE = "Complete"
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    D1 = "D1"
    D2 = "D2"
    D3 = "D3"
    TRANS_TOURNAMENT = "TransTournament"
    ZIGZAG = "ZigzagPseudoPath"

    @property
    def directed(self) -> bool:
        return self in _DIRECTED


_DIRECTED = {Family.D1, Family.D2, Family.D3, Family.TRANS_TOURNAMENT, Family.ZIGZAG}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        if self.n < 1:
            raise InvalidParameter(f"{self.family.value} needs n >= 1, got {self.n}")

    def __str__(self) -> str:
        return f"{self.family.value}_{self.n}"


def _tailed_layout(n: int, with_x2: bool) -> tuple[dict[str, int], list[str]]:
    names = [f"y{k}" for k in range(n, 0, -1)] + ["x1"] + (["x2"] if with_x2 else [])
    names += [f"z{k}" for k in range(1, n + 1)]
    return {name: idx for idx, name in enumerate(names)}, names


def _tails(ix: dict[str, int], n: int) -> list[tuple[int, int]]:
    edges = []
    for k in range(1, n):
        edges.append((ix[f"y{k}"], ix[f"y{k + 1}"]))
        edges.append((ix[f"z{k}"], ix[f"z{k + 1}"]))
    return edges


def vertex_labels(spec: FamilySpec) -> list[str]:
    """Human-readable names of the generated vertices, indexed by vertex id."""
    f, n = spec.family, spec.n
    if f is Family.KSTAR:
        return [f"x{k}" for k in range(1, n + 1)] + [f"y{k}" for k in range(1, n + 1)]
    if f is Family.STAR:
        return ["c"] + [f"l{k}" for k in range(1, n + 1)]
    if f in (Family.F1, Family.F2, Family.F3, Family.F4):
        return _tailed_layout(n, True)[1]
    if f in (Family.D1, Family.D2, Family.D3):
        return _tailed_layout(n, False)[1]
    if f is Family.ZIGZAG:
        return [f"v{k}" for k in range(1, n + 3)]
    return [f"v{k}" for k in range(1, n + 1)]


def generate(spec: FamilySpec) -> Graph | Digraph:
    f, n = spec.family, spec.n
    if f is Family.KSTAR:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges += [(i, n + i) for i in range(n)]
        return Graph(2 * n, edges)
    if f is Family.STAR:
        return Graph(n + 1, [(0, k) for k in range(1, n + 1)])
    if f is Family.PATH:
        return Graph(n, [(k, k + 1) for k in range(n - 1)])
    if f is Family.COMPLETE:
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if f in (Family.F1, Family.F2, Family.F3, Family.F4):
        ix, names = _tailed_layout(n, True)
        x1, x2, y1, z1 = ix["x1"], ix["x2"], ix["y1"], ix["z1"]
        if f in (Family.F1, Family.F2):
            edges = [(x1, x2), (x1, y1), (x1, z1)]
        else:
            edges = [(x1, y1), (x1, z1), (x2, y1), (x2, z1)]
        if f in (Family.F2, Family.F4):
            edges.append((y1, z1))
        return Graph(len(names), edges + _tails(ix, n))
    if f in (Family.D1, Family.D2, Family.D3):
        ix, names = _tailed_layout(n, False)
        x1, y1, z1 = ix["x1"], ix["y1"], ix["z1"]
        hub = {
            Family.D1: [(x1, y1), (z1, x1), (y1, z1)],
            Family.D2: [(x1, y1), (x1, z1), (y1, z1)],
            Family.D3: [(y1, x1), (z1, x1), (y1, z1)],
        }[f]
        arcs = list(hub)
        for k in range(1, n):
            arcs.append((ix[f"y{k + 1}"], ix[f"y{k}"]))
            arcs.append((ix[f"z{k}"], ix[f"z{k + 1}"]))
        return Digraph(len(names), arcs)
    if f is Family.TRANS_TOURNAMENT:
        return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if f is Family.ZIGZAG:
        # alternating orientation: every interior vertex is a branch vertex
        return zigzag_pseudo_path(n + 2, range(2, n + 2))
    raise InvalidParameter(f"unknown family {f}")


def zigzag_pseudo_path(order: int, branch_positions: Iterable[int]) -> Digraph:
    """Pseudo-path ``v_1 .. v_order`` whose branch vertices sit at the given 1-based positions.

    The first edge points forward (``v_1 -> v_2``); the orientation flips at
    every listed interior position, so ``r`` equals the number of positions.
    """
    if order < 1:
        raise InvalidParameter("order must be positive")
    branch = set(branch_positions)
    for p in branch:
        if not 2 <= p <= order - 1:
            raise InvalidParameter(f"branch position {p} is not interior to a path of order {order}")
    arcs = []
    forward = True
    for k in range(order - 1):
        # edge between positions k+1 and k+2 (1-based)
        if k > 0 and (k + 1) in branch:
            forward = not forward
        arcs.append((k, k + 1) if forward else (k + 1, k))
    return Digraph(order, arcs)


def random_oriented(order: int, arc_prob: float, seed: int) -> Digraph:
    """Each unordered pair becomes an arc with probability ``arc_prob``, direction uniform.

    Only ``random.Random(seed).random()`` is consumed, in lexicographic pair
    order, so the output is reproducible across Python versions.
    """
    if not 0.0 <= arc_prob <= 1.0:
        raise InvalidParameter(f"arc_prob must lie in [0, 1], got {arc_prob}")
    rng = random.Random(seed)
    arcs = []
    for u in range(order):
        for v in range(u + 1, order):
            if rng.random() < arc_prob:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(order, arcs)


def relabel(d: Digraph, perm: list[int]) -> Digraph:
    """Apply the vertex permutation ``v -> perm[v]``."""
    return Digraph(d.order, [(perm[u], perm[v]) for u, v in d.arcs])


def relabel_graph(g: Graph, perm: list[int]) -> Graph:
    return Graph(g.order, [(perm[u], perm[v]) for u, v in g.edges])
