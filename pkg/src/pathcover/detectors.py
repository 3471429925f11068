"""Induced sub(di)graph search and the forbidden-structure condition checks.

All searches are exact backtracking over bitmasks. Pattern vertices are
placed in pattern-id order and host candidates are tried in increasing id,
so the witness returned is the lexicographically least image sequence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import EmptyGraph, InvalidParameter
from .families import Family, FamilySpec, generate
from .graph import Digraph, Graph, bits

PSEUDO_PATH = "pseudo-path"


@dataclass(frozen=True)
class Witness:
    pattern: FamilySpec | str
    host_vertices: tuple[int, ...]
    detail: int | None = None

    def to_json(self) -> dict:
        return {
            "pattern": str(self.pattern),
            "host_vertices": list(self.host_vertices),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class PseudoPathWitness:
    vertices: tuple[int, ...]
    r: int


class Condition(enum.Enum):
    D1 = "d1"
    DPRIME1 = "dprime1"
    D2 = "d2"
    D3 = "d3"
    CYCLE_PREMISE = "cycle-premise"


class Status(enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ConditionReport:
    condition: Condition
    n: int
    status: Status
    witness: Witness | None = None
    max_r: int | None = None

    @property
    def satisfied(self) -> bool:
        return self.status is Status.SATISFIED

    def to_json(self) -> dict:
        return {
            "condition": self.condition.value,
            "n": self.n,
            "status": self.status.value,
            "witness": self.witness.to_json() if self.witness else None,
            "max_r": self.max_r,
        }


# ---------------------------------------------------------------------------
# induced pattern search


def _search(host_order: int, base: list[int], constraint) -> tuple[int, ...] | None:
    """Backtracking core; ``base[p]`` masks host vertices allowed for pattern vertex ``p``
    and ``constraint(p, q, img_q)`` narrows them given an already placed ``q``."""
    pattern_order = len(base)
    if pattern_order == 0:
        return ()
    if pattern_order > host_order:
        return None
    image = [0] * pattern_order

    def extend(p: int, used: int) -> bool:
        if p == pattern_order:
            return True
        cand = base[p] & ~used
        for q in range(p):
            cand &= constraint(p, q, image[q])
            if not cand:
                return False
        for v in bits(cand):
            image[p] = v
            if extend(p + 1, used | 1 << v):
                return True
        return False

    return tuple(image) if extend(0, 0) else None


def find_induced_graph_mapping(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    pn, hn = pattern.nbrs, host.nbrs
    full = (1 << host.order) - 1
    hdeg = [host.degree(v) for v in range(host.order)]
    base = []
    for p in range(pattern.order):
        need = pattern.degree(p)
        base.append(sum(1 << v for v in range(host.order) if hdeg[v] >= need))

    def constraint(p, q, iq):
        return hn[iq] if pn[p] >> q & 1 else full & ~hn[iq]

    return _search(host.order, base, constraint)


def find_induced_digraph_mapping(host: Digraph, pattern: Digraph) -> tuple[int, ...] | None:
    ho, hi, hn = host.out_nbrs, host.in_nbrs, host.nbrs
    po, pi = pattern.out_nbrs, pattern.in_nbrs
    full = (1 << host.order) - 1
    hdeg = [(host.out_degree(v), host.in_degree(v)) for v in range(host.order)]
    base = []
    for p in range(pattern.order):
        need_out, need_in = pattern.out_degree(p), pattern.in_degree(p)
        base.append(sum(1 << v for v in range(host.order)
                        if hdeg[v][0] >= need_out and hdeg[v][1] >= need_in))

    def constraint(p, q, iq):
        if po[q] >> p & 1:
            return ho[iq]
        if pi[q] >> p & 1:
            return hi[iq]
        return full & ~hn[iq]

    return _search(host.order, base, constraint)


def find_induced_graph(host: Graph, pattern: Graph, label: FamilySpec | str = "pattern") -> Witness | None:
    if pattern.order < 1:
        raise InvalidParameter("pattern must have at least one vertex")
    m = find_induced_graph_mapping(host, pattern)
    return None if m is None else Witness(label, m)


def find_induced_digraph(host: Digraph, pattern: Digraph, label: FamilySpec | str = "pattern") -> Witness | None:
    if pattern.order < 1:
        raise InvalidParameter("pattern must have at least one vertex")
    m = find_induced_digraph_mapping(host, pattern)
    return None if m is None else Witness(label, m)


def replay_graph(host: Graph, pattern: Graph, image: Sequence[int]) -> bool:
    """Independent check that ``image`` embeds ``pattern`` as an induced subgraph."""
    if len(image) != pattern.order or len(set(image)) != len(image):
        return False
    for a in range(pattern.order):
        for b in range(a + 1, pattern.order):
            if pattern.adjacent(a, b) != host.adjacent(image[a], image[b]):
                return False
    return True


def replay_digraph(host: Digraph, pattern: Digraph, image: Sequence[int]) -> bool:
    if len(image) != pattern.order or len(set(image)) != len(image):
        return False
    for a in range(pattern.order):
        for b in range(pattern.order):
            if a != b and pattern.has_arc(a, b) != host.has_arc(image[a], image[b]):
                return False
    return True


# ---------------------------------------------------------------------------
# induced pseudo-paths


def iter_induced_pseudo_paths(d: Digraph) -> Iterator[tuple[list[int], int]]:
    """Yield ``(sequence, r)`` for every induced pseudo-path, each once.

    Paths are grown at the tail from every start vertex; a path is reported
    from its lesser endpoint only. Yield order is deterministic.
    """
    out, nb = d.out_nbrs, d.nbrs
    path: list[int] = []

    def grow(blocked: int, last_dir: int, r: int):
        last = path[-1]
        if path[0] <= last:
            yield list(path), r
        cand = nb[last] & ~blocked
        new_blocked = blocked | nb[last] | (1 << last)
        for w in bits(cand):
            direction = 1 if out[last] >> w & 1 else -1
            step = 1 if last_dir and direction != last_dir else 0
            path.append(w)
            yield from grow(new_blocked, direction, r + step)
            path.pop()

    for s in range(d.order):
        path.append(s)
        yield from grow(1 << s, 0, 0)
        path.pop()


def max_pseudo_path_r(d: Digraph) -> tuple[int, PseudoPathWitness]:
    """Exact maximum of r over induced pseudo-paths.

    Ties are broken towards longer paths, then the lexicographically least
    sequence.
    """
    if d.order < 1:
        raise EmptyGraph("no pseudo-paths in the empty digraph")
    best_key = None
    best_seq: list[int] = []
    for seq, r in iter_induced_pseudo_paths(d):
        key = (r, len(seq))
        if best_key is None or key > best_key or (key == best_key and seq < best_seq):
            best_key, best_seq = key, seq
    return best_key[0], PseudoPathWitness(tuple(best_seq), best_key[0])


# ---------------------------------------------------------------------------
# condition batteries


def _undirected_battery(cond: Condition, n: int) -> list[FamilySpec]:
    specs = [FamilySpec(Family.KSTAR, n), FamilySpec(Family.STAR, n),
             FamilySpec(Family.F1, n), FamilySpec(Family.F2, n)]
    if cond is Condition.DPRIME1:
        specs += [FamilySpec(Family.F3, n), FamilySpec(Family.F4, n)]
    return specs


def battery(cond: Condition, n: int) -> list[FamilySpec]:
    """The patterns checked by a forbidden-subgraph condition, in search order."""
    if cond in (Condition.D1, Condition.DPRIME1):
        return _undirected_battery(cond, n)
    if cond is Condition.D2:
        return [FamilySpec(Family.D1, n), FamilySpec(Family.D2, n), FamilySpec(Family.D3, n)]
    if cond is Condition.CYCLE_PREMISE:
        return [FamilySpec(Family.TRANS_TOURNAMENT, n), FamilySpec(Family.STAR, n), FamilySpec(Family.PATH, n)]
    return []


def find_pseudo_path_above(d: Digraph, bound: int, budget: int | None = None) -> tuple[Witness | None, int, bool]:
    """First induced pseudo-path with r > ``bound``.

    Returns ``(witness, max_r_seen, exhausted)``; ``exhausted`` is False when
    the budget on enumerated paths ran out before the search finished.
    """
    best = 0
    for count, (seq, r) in enumerate(iter_induced_pseudo_paths(d), start=1):
        best = max(best, r)
        if r > bound:
            return Witness(PSEUDO_PATH, tuple(seq), r), best, True
        if budget is not None and count >= budget:
            return None, best, False
    return None, best, True


def check_condition(d: Digraph, cond: Condition | str, n: int, *, max_order: int = 40,
                    budget: int | None = 2_000_000) -> ConditionReport:
    """Run one condition on ``d``; the first violation found is returned as witness.

    For the pseudo-path condition, digraphs above ``max_order`` vertices or
    searches exceeding ``budget`` enumerated paths report INCONCLUSIVE.
    """
    cond = Condition(cond)
    if n < 2:
        raise InvalidParameter("conditions are defined for n >= 2")
    if cond is Condition.D3:
        if d.order > max_order:
            return ConditionReport(cond, n, Status.INCONCLUSIVE)
        if d.order == 0:
            return ConditionReport(cond, n, Status.SATISFIED, max_r=0)
        w, best, exhausted = find_pseudo_path_above(d, n, budget)
        if w is not None:
            return ConditionReport(cond, n, Status.VIOLATED, w, max_r=w.detail)
        return ConditionReport(cond, n, Status.SATISFIED if exhausted else Status.INCONCLUSIVE, max_r=best)
    for spec in battery(cond, n):
        pattern = generate(spec)
        if spec.family.directed:
            w = find_induced_digraph(d, pattern, spec)
        else:
            w = find_induced_graph(d.underlying, pattern, spec)
        if w is not None:
            return ConditionReport(cond, n, Status.VIOLATED, w)
    return ConditionReport(cond, n, Status.SATISFIED)


def check_all(d: Digraph, conds: Sequence[Condition], n: int, **kw) -> ConditionReport | None:
    """First non-satisfied report among ``conds``, or None when all pass."""
    for c in conds:
        rep = check_condition(d, c, n, **kw)
        if not rep.satisfied:
            return rep
    return None
