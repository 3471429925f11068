"""Covering and partitioning an induced directed path together with its interior attachments.

``Q = v_1 .. v_l`` is a directed path in the host and every attachment has
all of its path neighbours among ``v_{n+1} .. v_{l-n}``. Attachments whose
first neighbour index belongs to a bad set are handled separately; the rest
are threaded into copies of Q, six offset families per slot in cover mode
and a single long path in partition mode.
"""

from __future__ import annotations

from typing import Sequence

from ..constants import bad_index_bound, segment_pc_bound, segment_pp_bound
from ..errors import CliqueCheckFailed, ConstructionFailure, InvalidParameter, PreconditionViolated
from ..graph import Digraph, is_directed_path
from ..solvers import (
    DEFAULT_CAP,
    Mode,
    PathCoverCertificate,
    gallai_milgram_partition,
    pp_exact_on,
    tournament_path,
)
from .attachments import AttachmentProfile, _window, profile_all, select_bad_indices


def _check_path(d: Digraph, Q: Sequence[int]) -> None:
    if not is_directed_path(d, Q):
        raise PreconditionViolated(f"{list(Q)} is not a directed path")
    for a in range(len(Q)):
        for b in range(a + 2, len(Q)):
            if d.adjacent(Q[a], Q[b]):
                raise PreconditionViolated(f"path has a chord {Q[a]}-{Q[b]}")


def _require_spans(profiles: dict[int, AttachmentProfile]) -> None:
    for p in profiles.values():
        if not 1 <= p.span <= 3:
            diag = p.diagnostic or {}
            raise ConstructionFailure("index span", f"vertex {p.y} spans {p.i}..{p.j}", vertex=p.y,
                                      signal=diag.get("signal"), witness=diag.get("vertices"))


def offsets(l: int, n: int) -> dict[str, int]:
    """Right ends of the six threading families for a path of order l."""
    odd = l % 2 == 1
    xi0 = l - n if odd else l - n - 1
    xi1 = l - n - 1 if odd else l - n
    rem = (l - 2 * n) % 3
    xp0 = (l - n - 2, l - n, l - n - 1)[rem]
    xp1 = (l - n - 1, l - n - 2, l - n)[rem]
    xp2 = (l - n, l - n - 1, l - n - 2)[rem]
    return {"xi0": xi0, "xi1": xi1, "xi'0": xp0, "xi'1": xp1, "xi'2": xp2}


def families(l: int, n: int) -> list[tuple[int, int, int]]:
    """(first window start, window length k, right end) of the six threading families."""
    off = offsets(l, n)
    return [
        (n + 1, 1, l - n),
        (n + 1, 2, off["xi0"]),
        (n + 2, 2, off["xi1"]),
        (n + 1, 3, off["xi'0"]),
        (n + 2, 3, off["xi'1"]),
        (n + 3, 3, off["xi'2"]),
    ]


def _independent_gm(d: Digraph, group, limit: int, step: str, anchor: tuple[int, int]) -> list[list[int]]:
    """Gallai-Milgram partition of a group that must have independence number <= limit."""
    cert = gallai_milgram_partition(d, group)
    if len(cert.paths) > limit:
        indep = cert.meta["independent_terminals"][: limit + 1]
        raise ConstructionFailure(step, f"group {sorted(group)} has {len(cert.paths)} independent vertices",
                                  vertex=indep[0], signal="K1n", witness=[anchor[0], anchor[1], *indep])
    return cert.paths


def cover_path_attachments(d: Digraph, Q: Sequence[int], Yp, n: int, cap: int = DEFAULT_CAP) -> PathCoverCertificate:
    """Path cover of D[V(Q) ∪ Yp] with at most ``segment_pc_bound(n)`` paths."""
    if n < 3:
        raise InvalidParameter("the threading construction needs n >= 3")
    Q = list(Q)
    _check_path(d, Q)
    Yp = sorted(set(Yp))
    bound = segment_pc_bound(n)
    if not Yp:
        return PathCoverCertificate(Mode.COVER, [Q], bound, meta={"construction": "attachments-cover"})
    l = len(Q)
    profiles = profile_all(d, Q, Yp, n)
    _require_spans(profiles)
    plan = select_bad_indices(d, Q, profiles, n)
    if len(plan.I) > bad_index_bound(n):
        raise ConstructionFailure("bad-index selection", f"|I|={len(plan.I)} exceeds {bad_index_bound(n)}",
                                  signal="pseudo-path")
    bad_idx = set(plan.I)

    # attachments starting at a bad index: one Gallai-Milgram partition per start
    tilde_paths: list[list[int]] = []
    for i in plan.I:
        group = [y for y in Yp if profiles[y].i == i]
        tilde_paths += _independent_gm(d, group, n - 2, "bad-start group", (Q[i - 2], Q[i - 1]))

    # remaining strata Y'_{i,k} and their internal covers
    strata: dict[tuple[int, int], list[list[int]]] = {}
    for y in Yp:
        p = profiles[y]
        if p.i not in bad_idx:
            strata.setdefault((p.i, p.span), []).append(y)
    inner: dict[tuple[int, int], list[list[int]]] = {}
    for key, group in strata.items():
        i, k = key
        if len(group) <= cap:
            paths = pp_exact_on(d, group, cap)
        else:
            paths = gallai_milgram_partition(d, group).paths
        if len(paths) > n - 2:
            raise ConstructionFailure("stratum cover", f"stratum {key} needs {len(paths)} paths > {n - 2}",
                                      vertex=group[0], signal="K1n")
        for path in paths:
            if not d.has_arc(Q[i - 1], path[0]) or not d.has_arc(path[-1], Q[i + k - 1]):
                raise ConstructionFailure("threading", f"stratum {key} path {path} cannot be spliced",
                                          vertex=path[0], signal="bad-singleton")
        inner[key] = paths

    out: list[list[int]] = []
    bare: list[int] = []
    for s in range(n - 2):
        for a, (start, k, xi) in enumerate(families(l, n), start=1):
            windows = list(range(start, xi - k + 1, k))
            if not windows:
                if s == 0:
                    bare.append(a)
                out.append(Q)
                continue
            if windows[-1] + k != xi:
                raise ConstructionFailure("threading", f"family {a} windows do not end at {xi}")
            seq = _window(Q, 1, start)
            for i in windows:
                paths = inner.get((i, k), [])
                if s < len(paths):
                    seq += paths[s]
                else:
                    seq += _window(Q, i + 1, i + k - 1)
                seq.append(Q[i + k - 1])
            seq += _window(Q, xi + 1, l)
            out.append(seq)

    result = _dedupe(out + tilde_paths)
    for path in result:
        if not is_directed_path(d, path):
            raise ConstructionFailure("threading", f"{path} is not a directed path")
    covered = set().union(*map(set, result))
    missing = (set(Q) | set(Yp)) - covered
    if missing:
        raise ConstructionFailure("threading", f"vertices {sorted(missing)} left uncovered", vertex=min(missing))
    if len(result) > bound:
        raise ConstructionFailure("bound", f"{len(result)} paths exceed {bound}")
    meta = {
        "construction": "attachments-cover",
        "I": plan.I, "h": plan.h,
        "strata": {f"{i},{k}": len(v) for (i, k), v in sorted(inner.items())},
        "offsets": offsets(l, n), "bare_families": bare,
    }
    return PathCoverCertificate(Mode.COVER, result, bound, meta=meta)


def _dedupe(paths: list[list[int]]) -> list[list[int]]:
    seen, out = set(), []
    for p in paths:
        t = tuple(p)
        if t not in seen:
            seen.add(t)
            out.append(list(p))
    return out


# contrapositive signal for a non-adjacent pair in one insertion group, by sorted type pair
CLIQUE_SIGNAL = {
    **dict.fromkeys([(1, 3), (1, 6), (2, 5), (3, 6)], "F1"),
    (1, 5): "F2",
    **dict.fromkeys([(2, 3), (2, 6), (4, 5), (5, 6)], "D2"),
    **dict.fromkeys([(3, 4), (3, 7), (5, 7)], "D3"),
    **dict.fromkeys([(4, 6), (6, 7)], "bad-pair"),
}


def _clique_witness(Q, n: int, y: AttachmentProfile, y2: AttachmentProfile, signal: str) -> list[int] | None:
    """Vertex set on which the signalled pattern is induced (``y`` has the smaller type)."""
    w = lambda lo, hi: _window(Q, lo, hi)  # noqa: E731
    if signal == "F1":
        return w(y2.i - n + 2, y2.i) + [y2.y, Q[y.j - 1], y.y] + w(y.j + 1, y.j + n)
    if signal == "F2":
        return w(y2.i - n + 1, y2.i + 1) + [y.y, y2.y] + w(y2.j, y2.j + n - 2)
    if signal == "D2":
        return w(y2.i - n + 3, y2.i) + [y2.y, Q[y.j - 2], y.y] + w(y.j, y.j + n - 1)
    if signal == "D3":
        return w(y.i - n + 1, y.i) + [y.y, Q[y.i], y2.y] + w(y2.j, y2.j + n - 3)
    return None


def _same_start_witness(Q, n: int, a: AttachmentProfile, b: AttachmentProfile) -> tuple[str, list[int]]:
    """Pattern forced by two non-adjacent attachments with the same first index."""
    if a.j < b.j:
        a, b = b, a
    i = a.i
    if a.j == b.j == i + 1:
        return "F4", _window(Q, i - n + 1, i) + [a.y, b.y] + _window(Q, i + 1, i + n)
    if a.j == b.j:
        return "F3", _window(Q, i - n + 1, i) + [a.y, b.y] + _window(Q, a.j, a.j + n - 1)
    return "F1", _window(Q, i - n, i) + [b.y, a.y] + _window(Q, a.j, a.j + n - 2)


def _clique_path(d: Digraph, Q, n: int, group: list[AttachmentProfile], label: str) -> list[int]:
    for x in range(len(group)):
        for z in range(x + 1, len(group)):
            a, b = group[x], group[z]
            if d.adjacent(a.y, b.y):
                continue
            if a.i == b.i:
                signal, witness = _same_start_witness(Q, n, a, b)
                raise CliqueCheckFailed(label, (a.y, b.y), (a.type, b.type), signal=signal, witness=witness)
            if a.type is not None and b.type is not None:
                lo, hi = sorted((a, b), key=lambda p: p.type)
                signal = CLIQUE_SIGNAL.get((lo.type, hi.type))
                raise CliqueCheckFailed(label, (a.y, b.y), (lo.type, hi.type), signal=signal,
                                        witness=_clique_witness(Q, n, lo, hi, signal) if signal else None)
            raise CliqueCheckFailed(label, (a.y, b.y), (a.type, b.type))
    return tournament_path(d, [p.y for p in group])


def partition_path_attachments(d: Digraph, Q: Sequence[int], Yp, n: int,
                               drop_end: str | None = None) -> PathCoverCertificate:
    """Path partition of D[V(Q) ∪ Yp], optionally without v_1 (``first``) or v_l (``last``).

    Uses at most ``segment_pp_bound(n)`` paths: one per bad start index and
    a single path threading Q through every other attachment.
    """
    if drop_end not in (None, "first", "last"):
        raise InvalidParameter(f"drop_end must be 'first', 'last' or None, got {drop_end!r}")
    if n < 3:
        raise InvalidParameter("the threading construction needs n >= 3")
    Q = list(Q)
    _check_path(d, Q)
    Yp = sorted(set(Yp))
    bound = segment_pp_bound(n)

    def trim(seq: list[int]) -> list[int]:
        if drop_end == "first":
            return seq[1:]
        if drop_end == "last":
            return seq[:-1]
        return seq

    if not Yp:
        paths = [trim(Q)] if trim(Q) else []
        return PathCoverCertificate(Mode.PARTITION, paths, bound,
                                    meta={"construction": "attachments-partition", "drop_end": drop_end})
    profiles = profile_all(d, Q, Yp, n)
    _require_spans(profiles)
    for p in profiles.values():
        if not p.contiguous:
            raise ConstructionFailure("contiguity", f"vertex {p.y} skips a path vertex", vertex=p.y,
                                      signal="F3", witness=p.diagnostic["vertices"])
    plan = select_bad_indices(d, Q, profiles, n)
    if len(plan.I) > bad_index_bound(n):
        raise ConstructionFailure("bad-index selection", f"|I|={len(plan.I)} exceeds {bad_index_bound(n)}",
                                  signal="pseudo-path")
    bad_idx = set(plan.I)

    tilde_paths = []
    for i in plan.I:
        group = [profiles[y] for y in Yp if profiles[y].i == i]
        tilde_paths.append(_clique_path(d, Q, n, group, f"start group {i}"))

    groups: dict[int, list[AttachmentProfile]] = {}
    for y in Yp:
        p = profiles[y]
        if p.i in bad_idx:
            continue
        if p.beta is None:
            raise ConstructionFailure("typing", f"vertex {y} outside every bad set has no insertion index",
                                      vertex=y, signal="bad-singleton")
        groups.setdefault(p.beta, []).append(p)
    star = []
    for k, v in enumerate(Q, start=1):
        star.append(v)
        if k in groups:
            star += _clique_path(d, Q, n, groups[k], f"insertion group {k}")
    star = trim(star)
    result = [star] + tilde_paths
    for path in result:
        if not is_directed_path(d, path):
            raise ConstructionFailure("threading", f"{path} is not a directed path")
    if len(result) > bound:
        raise ConstructionFailure("bound", f"{len(result)} paths exceed {bound}")
    meta = {
        "construction": "attachments-partition", "drop_end": drop_end,
        "I": plan.I, "h": plan.h,
        "types": {str(y): profiles[y].type for y in Yp},
        "groups": {str(k): [p.y for p in g] for k, g in sorted(groups.items())},
    }
    return PathCoverCertificate(Mode.PARTITION, result, bound, meta=meta)
