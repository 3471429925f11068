"""Whole-graph certified path cover/partition for digraphs meeting the forbidden-structure conditions."""

from __future__ import annotations

from .. import __version__
from ..constants import big_add, big_json, big_le, constants
from ..detectors import Condition, Status, check_condition
from ..errors import (
    ConditionViolated,
    ConstructionFailure,
    DecompositionContradiction,
    EmptyGraph,
    InvalidParameter,
    PreconditionViolated,
    TooLarge,
)
from ..graph import Digraph, bits, is_directed_path, is_weakly_connected, to_mask
from ..solvers import Mode, PathCoverCertificate, gallai_milgram_partition, max_independent_set, tournament_path
from .layers import LONGEST_PATH_CAP, layer_decomposition, longest_induced_path
from .segment import cover_path_attachments, partition_path_attachments

TIE_BREAK = "longest induced path, lexicographically least from its lesser endpoint"


def required_conditions(mode: Mode) -> list[Condition]:
    first = Condition.D1 if mode is Mode.COVER else Condition.DPRIME1
    return [first, Condition.D2, Condition.D3]


def branch_indices(d: Digraph, seq) -> list[int]:
    """1-based interior positions where the orientation along ``seq`` reverses."""
    out = []
    for k in range(1, len(seq) - 1):
        if d.has_arc(seq[k - 1], seq[k]) != d.has_arc(seq[k], seq[k + 1]):
            out.append(k + 1)
    return out


def _directed(d: Digraph, seq: list[int]) -> list[int]:
    return seq if len(seq) < 2 or d.has_arc(seq[0], seq[1]) else seq[::-1]


def _term(name: str, value, formula: str, basis: str) -> dict:
    return {"name": name, "value": big_json(value), "formula": formula, "basis": basis}


def theorem_cover(d: Digraph, n: int, mode: Mode | str = Mode.COVER, *, cap: int = LONGEST_PATH_CAP,
                  check: bool = True, d3_budget: int | None = 2_000_000) -> PathCoverCertificate:
    """Certified path cover (or partition) whose size is bounded in terms of n only.

    With ``check`` the three conditions are verified first and the first
    failure is raised as ConditionViolated; an inconclusive pseudo-path
    search raises PreconditionViolated.
    """
    mode = Mode(mode)
    if n < 2:
        raise InvalidParameter("n must be at least 2")
    if d.order == 0:
        raise EmptyGraph("nothing to cover")
    if d.order > cap:
        raise TooLarge(d.order, cap)
    if check:
        for cond in required_conditions(mode):
            rep = check_condition(d, cond, n, max_order=cap, budget=d3_budget)
            if rep.status is Status.VIOLATED:
                raise ConditionViolated(rep)
            if rep.status is Status.INCONCLUSIVE:
                raise PreconditionViolated(f"condition {cond.value} could not be decided")
    if not is_weakly_connected(d):
        raise PreconditionViolated("digraph is not weakly connected")
    table = constants(n)
    provenance = {"tool": "pathcover", "version": __version__, "tie_break": TIE_BREAK}

    if n == 2:
        # K_{1,2}-free and connected: the underlying graph is complete
        if d.underlying.size != d.order * (d.order - 1) // 2:
            raise PreconditionViolated("for n = 2 the underlying graph must be complete")
        path = tournament_path(d, range(d.order))
        bound = {"total": 1, "core": 1,
                 "terms": [_term("tournament", 1, "1", "complete underlying graph")]}
        return _finish(d, mode, [path], bound, n, table, provenance, {"shortcut": "tournament"})

    g = d.underlying
    P = longest_induced_path(g, cap)
    dec = layer_decomposition(g, P, table.n0)
    m = len(P)
    info: dict = {"m": m, "layers": dec.to_json()}
    if m <= 2 * table.n0:
        core_paths = gallai_milgram_partition(d, P).paths
        info["short_path"] = True
    else:
        core_paths = _core(d, P, dec, n, mode, table, info)

    layer_paths = []
    for k, layer in enumerate(dec.X, start=1):
        if not layer:
            continue
        a = max_independent_set(g.nbrs, to_mask(layer)).bit_count()
        if not big_le(a, table.alpha_seq[k]):
            raise DecompositionContradiction(f"alpha(X_{k}) = {a} exceeds alpha_{k}")
        layer_paths += gallai_milgram_partition(d, layer).paths

    seg = table.segment_pc_bound if mode is Mode.COVER else table.segment_pp_bound
    core = table.core_pc_bound if mode is Mode.COVER else table.core_pp_bound
    total = big_add(table.layer_bound, core, "layers + core")
    bound = {
        "total": big_json(total),
        "core": core,
        "terms": [
            _term("layers", table.layer_bound, "sum_{i=1}^{2n0-1} alpha_i", "Gallai-Milgram on each layer"),
            _term("ysharp", table.ysharp_bound, "n(2n-1)(n-1)", "neighbourhoods of branch windows"),
            _term("segments", (n + 1) * seg,
                  "(n+1)((n-2)n(n+5)/2+6(n-2))" if mode is Mode.COVER else "(n+1)(n(n+5)/2+1)",
                  "at most n+1 directed segments with their attachments"),
        ],
    }
    return _finish(d, mode, core_paths + layer_paths, bound, n, table, provenance, info)


def _core(d: Digraph, P, dec, n: int, mode: Mode, table, info: dict) -> list[list[int]]:
    """Paths covering V(P) ∪ Y."""
    g = d.underlying
    m, n0 = len(P), table.n0
    branch = branch_indices(d, P)
    if len(branch) > n:
        raise ConstructionFailure("segments", f"{len(branch)} branch vertices on the longest path", signal="pseudo-path",
                                  witness=list(P))
    cuts = [1, *branch, m]
    J0 = set(range(1, n0 + 1)) | set(range(m - n0 + 1, m + 1))
    J1 = {j for b in branch for j in range(b - n + 1, b + n) if 1 <= j <= m}
    Y = dec.Y
    near = 0
    for j in J1:
        near |= g.nbrs[P[j - 1]]
    ysharp = sorted(y for y in Y if near >> y & 1)
    rest = set(Y) - set(ysharp)
    blocked = J0 | J1
    Z: list[set[int]] = []
    for h in range(len(cuts) - 1):
        free = 0
        for j in range(cuts[h], cuts[h + 1] + 1):
            if j not in blocked:
                free |= g.nbrs[P[j - 1]]
        Z.append({y for y in rest if free >> y & 1})
    seen: set[int] = set()
    for z in Z:
        if seen & z:
            raise DecompositionContradiction(f"vertex {min(seen & z)} attaches to two segments")
        seen |= z
    if seen != rest:
        raise DecompositionContradiction(f"vertices {sorted(rest - seen)} attach to no segment")

    paths = gallai_milgram_partition(d, ysharp).paths if ysharp else []
    if len(paths) > table.ysharp_bound:
        raise ConstructionFailure("ysharp", f"{len(paths)} paths exceed {table.ysharp_bound}", signal="K1n")
    seg_sizes = []
    for h in range(len(cuts) - 1):
        raw = list(P[cuts[h] - 1:cuts[h + 1]])
        Qh = _directed(d, raw)
        if mode is Mode.COVER:
            cert = cover_path_attachments(d, Qh, Z[h], n)
        else:
            drop = None
            if h > 0:
                drop = "first" if Qh[0] == P[cuts[h] - 1] else "last"
            cert = partition_path_attachments(d, Qh, Z[h], n, drop_end=drop)
        seg_sizes.append(len(cert.paths))
        paths += cert.paths
    info.update({"branch": branch, "J1": sorted(J1), "ysharp": ysharp,
                 "Z": [sorted(z) for z in Z], "segment_sizes": seg_sizes})
    return paths


def _finish(d: Digraph, mode: Mode, paths, bound: dict, n: int, table, provenance, info) -> PathCoverCertificate:
    paths = [list(p) for p in paths if p]
    covered = 0
    for p in paths:
        if not is_directed_path(d, p):
            raise ConstructionFailure("assembly", f"{p} is not a directed path")
        m = to_mask(p)
        if mode is Mode.PARTITION and covered & m:
            raise ConstructionFailure("assembly", f"vertex {next(bits(covered & m))} in two paths")
        covered |= m
    if covered != (1 << d.order) - 1:
        raise ConstructionFailure("assembly", f"vertex {next(bits(~covered & ((1 << d.order) - 1)))} uncovered")
    meta = {"n": n, "constants": table.to_json(), "provenance": provenance, "construction": info}
    return PathCoverCertificate(mode, paths, bound, meta=meta)
