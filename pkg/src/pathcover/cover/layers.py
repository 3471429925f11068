"""Longest induced path and the layer decomposition around it."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DecompositionContradiction, EmptyGraph, TooLarge
from ..graph import Graph, bits, is_induced_path, to_mask

LONGEST_PATH_CAP = 64


def longest_induced_path(g: Graph, cap: int | None = LONGEST_PATH_CAP) -> list[int]:
    """An induced path of maximum order.

    Among maximisers the lexicographically least sequence is returned, each
    path being read from its lesser endpoint.
    """
    if g.order == 0:
        raise EmptyGraph("no induced path in the empty graph")
    if cap is not None and g.order > cap:
        raise TooLarge(g.order, cap)
    nb = g.nbrs
    best: list[int] = [0]
    path: list[int] = []

    def grow(blocked: int):
        last = path[-1]
        if path[0] <= last and (len(path) > len(best) or len(path) == len(best) and path < best):
            best[:] = path
        cand = nb[last] & ~blocked
        if not cand:
            return
        # every extension stays inside the unblocked part of the graph
        free = ((1 << g.order) - 1) & ~blocked
        if len(path) + free.bit_count() < len(best):
            return
        new_blocked = blocked | nb[last] | 1 << last
        for w in bits(cand):
            path.append(w)
            grow(new_blocked)
            path.pop()

    for s in range(g.order):
        path.append(s)
        grow(1 << s)
        path.pop()
    return best


@dataclass(frozen=True)
class LayerDecomposition:
    path: tuple[int, ...]
    n0: int
    X0: frozenset[int]
    Y: frozenset[int]
    X: tuple[frozenset[int], ...]

    def parts(self) -> list[frozenset[int]]:
        return [frozenset(self.path), self.Y, *self.X]

    def to_json(self) -> dict:
        return {
            "path": list(self.path),
            "n0": self.n0,
            "X0": sorted(self.X0),
            "Y": sorted(self.Y),
            "X": [sorted(x) for x in self.X],
        }


def _nbhd(g: Graph, mask: int) -> int:
    """Vertices outside ``mask`` adjacent to some vertex of it."""
    out = 0
    for v in bits(mask):
        out |= g.nbrs[v]
    return out & ~mask


def layer_decomposition(g: Graph, path, n0: int) -> LayerDecomposition:
    """Split V into the path, the second-neighbourhood set Y and the layers X_1 .. X_{2n0-1}.

    Raises DecompositionContradiction when the sets fail to be a disjoint
    cover of V with every layer beyond index 2n0-1 empty; on a connected
    graph satisfying the forbidden-subgraph condition this means ``path``
    was not a longest induced path.
    """
    path = list(path)
    if not is_induced_path(g, path):
        raise DecompositionContradiction(f"{path} is not an induced path")
    m = len(path)
    pmask = to_mask(path)
    x0 = to_mask(path[:n0] + path[max(n0, m - n0):])
    inner = pmask & ~x0
    nx0 = _nbhd(g, x0)
    y = _nbhd(g, inner) & ~(x0 | nx0)
    layers = []
    prev = x0
    used = pmask | y
    while True:
        layer = _nbhd(g, prev) & ~used
        if not layer:
            break
        layers.append(layer)
        used |= layer
        prev = layer
    if len(layers) > 2 * n0 - 1:
        raise DecompositionContradiction(
            f"layer X_{len(layers)} is non-empty but layers stop at X_{2 * n0 - 1}")
    if used != (1 << g.order) - 1:
        missing = list(bits(((1 << g.order) - 1) & ~used))
        raise DecompositionContradiction(f"vertices {missing} lie in no layer")
    layers += [0] * (2 * n0 - 1 - len(layers))
    return LayerDecomposition(
        path=tuple(path), n0=n0, X0=frozenset(bits(x0)), Y=frozenset(bits(y)),
        X=tuple(frozenset(bits(x)) for x in layers),
    )
