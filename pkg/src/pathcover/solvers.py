"""Exact oracles: independence number, path cover/partition, cycle cover/partition.

Everything works on vertex bitmasks. Directed paths are enumerated by a
sparse forward dynamic programme over (vertex set, end vertex) states, so
path-like digraphs well above 20 vertices stay cheap while dense ones hit
the cap long before memory does.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Sequence

from .errors import PathCoverError, TooLarge
from .graph import Digraph, Graph, bits, induced_subdigraph, to_mask

DEFAULT_CAP = 20
_TOP_LEVEL = ("n", "constants", "provenance")


class Mode(enum.Enum):
    COVER = "cover"
    PARTITION = "partition"


@dataclass
class PathCoverCertificate:
    mode: Mode
    paths: list[list[int]]
    claimed_bound: Any = None
    meta: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.paths)

    def to_json(self) -> dict:
        out = {"kind": "path", "mode": self.mode.value, "paths": [list(p) for p in self.paths]}
        if self.claimed_bound is not None:
            out["bound"] = self.claimed_bound
        meta = dict(self.meta)
        for key in _TOP_LEVEL:
            if key in meta:
                out[key] = meta.pop(key)
        if meta:
            out["meta"] = meta
        return out


@dataclass
class CycleCoverCertificate:
    mode: Mode
    units: list[list[int]]
    meta: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.units)

    def to_json(self) -> dict:
        out = {"kind": "cycle", "mode": self.mode.value, "units": [list(u) for u in self.units]}
        if self.meta:
            out["meta"] = self.meta
        return out


def _check_cap(d, cap: int | None):
    cap = DEFAULT_CAP if cap is None else cap
    if d.order > cap:
        raise TooLarge(d.order, cap)


# ---------------------------------------------------------------------------
# independence number


def max_independent_set(nbrs: Sequence[int], within: int) -> int:
    """Mask of a maximum independent set of the graph restricted to ``within``."""
    best = [0, 0]

    def rec(cand: int, chosen: int, size: int):
        if size + cand.bit_count() <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        # vertices of degree <= 1 inside cand can always be taken
        pick, pick_deg = -1, -1
        for v in bits(cand):
            deg = (nbrs[v] & cand).bit_count()
            if deg <= 1:
                rec(cand & ~nbrs[v] & ~(1 << v), chosen | 1 << v, size + 1)
                return
            if deg > pick_deg:
                pick, pick_deg = v, deg
        b = 1 << pick
        rec(cand & ~nbrs[pick] & ~b, chosen | b, size + 1)
        rec(cand & ~b, chosen, size)

    rec(within, 0, 0)
    return best[1]


def alpha(g: Graph) -> tuple[int, list[int]]:
    m = max_independent_set(g.nbrs, (1 << g.order) - 1)
    return m.bit_count(), list(bits(m))


# ---------------------------------------------------------------------------
# directed path states


@lru_cache(maxsize=32)
def _path_states(d: Digraph) -> dict[int, int]:
    """Map each traceable vertex set to the mask of vertices a spanning path of it can end at."""
    out = d.out_nbrs
    layer = {1 << v: 1 << v for v in range(d.order)}
    states = dict(layer)
    while layer:
        nxt: dict[int, int] = {}
        for mask, ends in layer.items():
            for v in bits(ends):
                for w in bits(out[v] & ~mask):
                    nm = mask | 1 << w
                    nxt[nm] = nxt.get(nm, 0) | 1 << w
        states.update(nxt)
        layer = nxt
    return states


def _trace(d: Digraph, states: dict[int, int], mask: int, end: int) -> list[int]:
    """Recover a directed path with vertex set ``mask`` ending at ``end``."""
    seq = [end]
    while mask != 1 << end:
        rest = mask & ~(1 << end)
        prev = states[rest] & d.in_nbrs[end]
        end = (prev & -prev).bit_length() - 1
        seq.append(end)
        mask = rest
    seq.reverse()
    return seq


def realize_path(d: Digraph, mask: int) -> list[int]:
    states = _path_states(d)
    ends = states[mask]
    return _trace(d, states, mask, (ends & -ends).bit_length() - 1)


def traceable_masks(d: Digraph, cap: int | None = None) -> list[int]:
    _check_cap(d, cap)
    return sorted(_path_states(d), key=lambda m: (m.bit_count(), m))


def traceable_sets(d: Digraph, cap: int | None = None) -> list[frozenset[int]]:
    """All vertex sets visited exactly by some directed path of ``d``."""
    return [frozenset(bits(m)) for m in traceable_masks(d, cap)]


def hamiltonian_directed_path(d: Digraph, cap: int | None = None) -> list[int] | None:
    _check_cap(d, cap)
    if d.order == 0:
        return []
    full = (1 << d.order) - 1
    states = _path_states(d)
    if full not in states:
        return None
    ends = states[full]
    return _trace(d, states, full, (ends & -ends).bit_length() - 1)


def _maximal(masks: list[int]) -> list[int]:
    ordered = sorted(masks, key=lambda m: -m.bit_count())
    keep: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return keep


def _min_set_cover(full: int, units: list[int]) -> list[int]:
    """Fewest units whose union is ``full`` (units may overlap)."""
    by_vertex: dict[int, list[int]] = {}
    for u in units:
        for v in bits(u):
            by_vertex.setdefault(v, []).append(u)
    memo: dict[int, tuple[int, int | None]] = {0: (0, None)}

    def f(s: int) -> int:
        if s in memo:
            return memo[s][0]
        low = (s & -s).bit_length() - 1
        best, arg = None, None
        for u in by_vertex[low]:
            val = f(s & ~u)
            if best is None or val < best:
                best, arg = val, u
                if best == 0:
                    break
        memo[s] = (best + 1, arg)
        return best + 1

    f(full)
    chosen, s = [], full
    while s:
        u = memo[s][1]
        chosen.append(u)
        s &= ~u
    return chosen


def _min_partition(full: int, units: list[int]) -> list[int]:
    """Fewest pairwise disjoint units whose union is ``full``."""
    unit_set = set(units)
    by_low: dict[int, list[int]] = {}
    for u in units:
        by_low.setdefault(u & -u, []).append(u)
    for lst in by_low.values():
        lst.sort(key=lambda m: -m.bit_count())
    memo: dict[int, tuple[int, int | None]] = {0: (0, None)}

    def f(s: int) -> int:
        if s in memo:
            return memo[s][0]
        if s in unit_set:
            memo[s] = (1, s)
            return 1
        best, arg = None, None
        for u in by_low.get(s & -s, ()):
            if u & ~s:
                continue
            val = f(s & ~u)
            if best is None or val < best:
                best, arg = val, u
                if best == 1:
                    break
        memo[s] = (best + 1, arg)
        return best + 1

    f(full)
    chosen, s = [], full
    while s:
        u = memo[s][1]
        chosen.append(u)
        s &= ~u
    return chosen


def pc_exact(d: Digraph, cap: int | None = None) -> tuple[int, PathCoverCertificate]:
    """Minimum path cover; paths may share vertices."""
    _check_cap(d, cap)
    if d.order == 0:
        return 0, PathCoverCertificate(Mode.COVER, [], meta={"solver": "pc_exact"})
    full = (1 << d.order) - 1
    states = _path_states(d)
    # any cover can be upgraded to one made of inclusion-maximal traceable sets
    units = [full] if full in states else _maximal(list(states))
    chosen = _min_set_cover(full, units)
    paths = [realize_path(d, m) for m in chosen]
    return len(paths), PathCoverCertificate(Mode.COVER, paths, meta={"solver": "pc_exact"})


def pp_exact(d: Digraph, cap: int | None = None) -> tuple[int, PathCoverCertificate]:
    """Minimum path partition by canonical peeling of the lowest remaining vertex."""
    _check_cap(d, cap)
    if d.order == 0:
        return 0, PathCoverCertificate(Mode.PARTITION, [], meta={"solver": "pp_exact"})
    full = (1 << d.order) - 1
    chosen = _min_partition(full, list(_path_states(d)))
    paths = [realize_path(d, m) for m in chosen]
    return len(paths), PathCoverCertificate(Mode.PARTITION, paths, meta={"solver": "pp_exact"})


def pp_exact_on(d: Digraph, vertices, cap: int | None = None) -> list[list[int]]:
    """Minimum path partition of ``d[vertices]`` expressed in host vertex ids."""
    sub, mapping = induced_subdigraph(d, vertices)
    _, cert = pp_exact(sub, cap)
    return [[mapping[v] for v in p] for p in cert.paths]


# ---------------------------------------------------------------------------
# Gallai-Milgram


class _Stalled(Exception):
    def __init__(self, independent: int):
        self.independent = independent


def _reduce(d: Digraph, alive: int, paths: list[list[int]]) -> list[list[int]]:
    """One path fewer with terminal set strictly inside the old one.

    Follows the inductive argument: either two terminals are joined by an
    arc and a short re-routing removes a path, or the terminal set is
    independent and ``_Stalled`` carries it as a certificate.
    """
    terms = [p[-1] for p in paths]
    tmask = to_mask(terms)
    owner = {t: k for k, t in enumerate(terms)}
    arc = None
    for a in terms:
        hit = d.out_nbrs[a] & tmask
        if hit:
            arc = (a, (hit & -hit).bit_length() - 1)
            break
    if arc is None:
        raise _Stalled(tmask)
    vj, vi = arc  # vj -> vi, both terminals
    i, j = owner[vi], owner[vj]
    if len(paths[i]) == 1:
        new = [p for k, p in enumerate(paths) if k != i]
        new[new.index(paths[j])] = paths[j] + [vi]
        return new
    v = paths[i][-2]
    sub_paths = [list(p) for p in paths]
    sub_paths[i] = sub_paths[i][:-1]
    reduced = _reduce(d, alive & ~(1 << vi), sub_paths)
    ends = {p[-1]: k for k, p in enumerate(reduced)}
    if v in ends:
        reduced[ends[v]] = reduced[ends[v]] + [vi]
    else:
        reduced[ends[vj]] = reduced[ends[vj]] + [vi]
    return reduced


def gallai_milgram_partition(d: Digraph, vertices=None) -> PathCoverCertificate:
    """Path partition of ``d[vertices]`` with at most alpha(underlying) paths.

    Starts from singletons, links terminal-to-start arcs greedily, then
    applies the terminal-exchange reduction until it stalls. A stall comes
    with an independent set as large as the current partition, which is
    checked before returning.
    """
    vs = list(range(d.order)) if vertices is None else sorted(set(vertices))
    alive = to_mask(vs)
    paths = [[v] for v in vs]
    # cheap linking pass: join path ends to path starts
    changed = True
    while changed and len(paths) > 1:
        changed = False
        starts = {p[0]: k for k, p in enumerate(paths)}
        for k, p in enumerate(paths):
            nxt = d.out_nbrs[p[-1]]
            for s in bits(nxt):
                if s in starts and starts[s] != k:
                    other = paths[starts[s]]
                    paths[k] = p + other
                    paths.pop(starts[s])
                    changed = True
                    break
            if changed:
                break
    witness = 0
    while True:
        try:
            if not paths:
                break
            paths = _reduce(d, alive, paths)
        except _Stalled as st:
            witness = st.independent
            break
    if any(d.nbrs[v] & witness for v in bits(witness)) or witness.bit_count() != len(paths):
        raise PathCoverError("Gallai-Milgram reduction stalled without an independent terminal set")
    return PathCoverCertificate(
        Mode.PARTITION, paths,
        meta={"solver": "gallai_milgram", "independent_terminals": list(bits(witness))},
    )


def tournament_path(d: Digraph, vertices) -> list[int]:
    """Hamiltonian directed path of a tournament ``d[vertices]`` by insertion."""
    path: list[int] = []
    for v in sorted(set(vertices)):
        for u in path:
            if not d.adjacent(u, v):
                raise PathCoverError(f"{u} and {v} are not adjacent; not a tournament")
        if not path or d.has_arc(v, path[0]):
            path.insert(0, v)
            continue
        if d.has_arc(path[-1], v):
            path.append(v)
            continue
        for k in range(len(path) - 1):
            if d.has_arc(path[k], v) and d.has_arc(v, path[k + 1]):
                path.insert(k + 1, v)
                break
    return path


# ---------------------------------------------------------------------------
# cycle cover / partition


@lru_cache(maxsize=32)
def _cycle_units(d: Digraph) -> dict[int, list[int]]:
    """Unit vertex sets (directed cycles, arcs, singletons) with a realising sequence."""
    units: dict[int, list[int]] = {1 << v: [v] for v in range(d.order)}
    for u, v in d.arcs:
        units.setdefault(1 << u | 1 << v, [u, v])
    out = d.out_nbrs
    for s in range(d.order):
        higher = ~((1 << (s + 1)) - 1)
        # forward DP of paths starting at s through vertices > s
        layer = {1 << s: 1 << s}
        parent: dict[tuple[int, int], int] = {}
        while layer:
            nxt: dict[int, int] = {}
            for mask, ends in layer.items():
                for v in bits(ends):
                    for w in bits(out[v] & ~mask & higher):
                        nm = mask | 1 << w
                        if not nxt.get(nm, 0) >> w & 1:
                            parent[(nm, w)] = v
                        nxt[nm] = nxt.get(nm, 0) | 1 << w
            for mask, ends in nxt.items():
                if mask.bit_count() < 3 or mask in units and len(units[mask]) >= 3:
                    continue
                closing = ends & d.in_nbrs[s]
                if closing:
                    end = (closing & -closing).bit_length() - 1
                    seq, m, cur = [end], mask, end
                    while cur != s:
                        prev = parent[(m, cur)]
                        m &= ~(1 << cur)
                        cur = prev
                        seq.append(cur)
                    seq.reverse()
                    units[mask] = seq
            layer = nxt
    return units


def cc_exact(d: Digraph, cap: int | None = None) -> tuple[int, CycleCoverCertificate]:
    _check_cap(d, cap)
    if d.order == 0:
        return 0, CycleCoverCertificate(Mode.COVER, [])
    units = _cycle_units(d)
    chosen = _min_set_cover((1 << d.order) - 1, _maximal(list(units)))
    return len(chosen), CycleCoverCertificate(Mode.COVER, [units[m] for m in chosen], meta={"solver": "cc_exact"})


def cp_exact(d: Digraph, cap: int | None = None) -> tuple[int, CycleCoverCertificate]:
    _check_cap(d, cap)
    if d.order == 0:
        return 0, CycleCoverCertificate(Mode.PARTITION, [])
    units = _cycle_units(d)
    chosen = _min_partition((1 << d.order) - 1, list(units))
    return len(chosen), CycleCoverCertificate(Mode.PARTITION, [units[m] for m in chosen],
                                              meta={"solver": "cp_exact"})
