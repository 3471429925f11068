"""Immutable oriented graphs, their underlying graphs, and basic predicates.

Vertices are dense integers ``0..order-1``. Adjacency is cached as Python
``int`` bitmasks, which the search routines elsewhere rely on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    EmptyGraph,
    NotAPseudoPath,
    ParseError,
    SelfLoop,
    TwoCycle,
    VertexOutOfRange,
)


def bits(mask: int) -> Iterable[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    order: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        norm = set()
        for u, v in edges:
            if u == v:
                raise SelfLoop(u)
            for w in (u, v):
                if not 0 <= w < order:
                    raise VertexOutOfRange(w, order)
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def nbrs(self) -> tuple[int, ...]:
        adj = [0] * self.order
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.nbrs[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.nbrs[v].bit_count()

    @property
    def size(self) -> int:
        return len(self.edges)

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``vertices``; new id ``k`` is ``mapping[k]``."""
        mapping = sorted(set(vertices))
        for v in mapping:
            if not 0 <= v < self.order:
                raise VertexOutOfRange(v, self.order)
        index = {v: k for k, v in enumerate(mapping)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(mapping), edges), mapping

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class Digraph:
    """A simple oriented graph: no loops, at most one arc per vertex pair.

    ``labels`` optionally records the original vertex labels of a relabelled
    input file; it does not take part in equality.
    """

    order: int
    arcs: frozenset[tuple[int, int]]
    labels: tuple[int | None, ...] | None = field(default=None, compare=False)

    def __init__(self, order: int, arcs: Iterable[tuple[int, int]] = (), labels=None):
        if order < 0:
            raise VertexOutOfRange(order, 0)
        seen: set[tuple[int, int]] = set()
        for u, v in arcs:
            u, v = int(u), int(v)
            if u == v:
                raise SelfLoop(u)
            for w in (u, v):
                if not 0 <= w < order:
                    raise VertexOutOfRange(w, order)
            if (v, u) in seen:
                raise TwoCycle(min(u, v), max(u, v))
            seen.add((u, v))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "arcs", frozenset(seen))
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)

    @cached_property
    def out_nbrs(self) -> tuple[int, ...]:
        out = [0] * self.order
        for u, v in self.arcs:
            out[u] |= 1 << v
        return tuple(out)

    @cached_property
    def in_nbrs(self) -> tuple[int, ...]:
        inn = [0] * self.order
        for u, v in self.arcs:
            inn[v] |= 1 << u
        return tuple(inn)

    @cached_property
    def nbrs(self) -> tuple[int, ...]:
        return tuple(o | i for o, i in zip(self.out_nbrs, self.in_nbrs))

    @cached_property
    def underlying(self) -> Graph:
        return Graph(self.order, self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_nbrs[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.nbrs[u] >> v & 1)

    def out_degree(self, v: int) -> int:
        return self.out_nbrs[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_nbrs[v].bit_count()

    @property
    def size(self) -> int:
        return len(self.arcs)

    def __repr__(self) -> str:
        return f"Digraph(order={self.order}, arcs={sorted(self.arcs)})"


def underlying(d: Digraph) -> Graph:
    return d.underlying


def induced_subdigraph(d: Digraph, vertices: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Induced subdigraph on ``vertices`` (relabelled in increasing order) and the id mapping."""
    mapping = sorted(set(vertices))
    for v in mapping:
        if not 0 <= v < d.order:
            raise VertexOutOfRange(v, d.order)
    index = {v: k for k, v in enumerate(mapping)}
    arcs = [(index[u], index[v]) for u, v in d.arcs if u in index and v in index]
    return Digraph(len(mapping), arcs), mapping


def is_connected(g: Graph, within: int | None = None) -> bool:
    """Connectivity of ``g`` restricted to the vertex mask ``within`` (default: all)."""
    if within is None:
        within = (1 << g.order) - 1
    if within == 0:
        return True
    start = within & -within
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.nbrs[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen == within


def is_weakly_connected(d: Digraph) -> bool:
    if d.order == 0:
        raise EmptyGraph("connectivity of the empty digraph is undefined")
    return is_connected(d.underlying)


def components(g: Graph) -> list[list[int]]:
    left = (1 << g.order) - 1
    out = []
    while left:
        start = left & -left
        seen = frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.nbrs[v]
            nxt &= left & ~seen
            seen |= nxt
            frontier = nxt
        out.append(list(bits(seen)))
        left &= ~seen
    return out


def is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` lists distinct vertices whose induced subgraph is the path in that order."""
    if len(set(seq)) != len(seq):
        return False
    pos = {v: k for k, v in enumerate(seq)}
    for k, v in enumerate(seq):
        if not 0 <= v < g.order:
            return False
        expect = set()
        if k > 0:
            expect.add(seq[k - 1])
        if k + 1 < len(seq):
            expect.add(seq[k + 1])
        actual = {w for w in bits(g.nbrs[v]) if w in pos}
        if actual != expect:
            return False
    return True


def r_value(d: Digraph, seq: Sequence[int]) -> int:
    """Number of vertices with in- or out-degree 2 in the pseudo-path ``d[seq]``."""
    if not seq or not is_induced_path(d.underlying, seq):
        raise NotAPseudoPath(f"{list(seq)} does not induce a path in the underlying graph")
    r = 0
    for k in range(1, len(seq) - 1):
        a, b, c = seq[k - 1], seq[k], seq[k + 1]
        if d.has_arc(a, b) != d.has_arc(b, c):
            r += 1
    return r


def is_directed_path(d: Digraph, seq: Sequence[int]) -> bool:
    if not seq or len(set(seq)) != len(seq):
        return False
    return all(d.has_arc(a, b) for a, b in zip(seq, seq[1:]))


_TOKEN = re.compile(r"[^\s;]+")


def from_edge_list(text: str, *, relabel: bool = False) -> Digraph:
    """Parse the arc-list format: ``order`` then ``u v`` pairs.

    Tokens are separated by whitespace or ``;``; lines whose first
    non-blank character is ``#`` are ignored. With ``relabel`` the pair
    labels may be arbitrary non-negative integers; they are mapped to dense
    ids in increasing label order and the mapping is kept in ``labels``.
    """
    tokens: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        for tok in _TOKEN.findall(line):
            try:
                value = int(tok)
            except ValueError:
                raise ParseError(lineno, f"not an integer: {tok!r}") from None
            if value < 0:
                raise ParseError(lineno, f"negative value: {value}")
            tokens.append((value, lineno))
    if not tokens:
        raise ParseError(1, "missing vertex count")
    order = tokens[0][0]
    rest = tokens[1:]
    if len(rest) % 2:
        raise ParseError(rest[-1][1], "dangling vertex without a partner")
    pairs = [(rest[k][0], rest[k + 1][0]) for k in range(0, len(rest), 2)]
    if not relabel:
        return Digraph(order, pairs)
    distinct = sorted({w for p in pairs for w in p})
    if len(distinct) > order:
        raise VertexOutOfRange(distinct[order], order)
    index = {lab: k for k, lab in enumerate(distinct)}
    labels = list(distinct) + [None] * (order - len(distinct))
    return Digraph(order, [(index[u], index[v]) for u, v in pairs], labels=labels)


def to_edge_list(d: Digraph) -> str:
    lines = [str(d.order)] + [f"{u} {v}" for u, v in sorted(d.arcs)]
    return "\n".join(lines) + "\n"


def graph_to_edge_list(g: Graph) -> str:
    lines = [str(g.order)] + [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def directed_path(order: int) -> Digraph:
    return Digraph(order, [(k, k + 1) for k in range(order - 1)])


def directed_cycle(order: int) -> Digraph:
    return Digraph(order, [(k, (k + 1) % order) for k in range(order)])
