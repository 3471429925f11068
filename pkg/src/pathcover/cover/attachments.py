"""Profiles of vertices attached to the interior of an induced directed path.

Indices are 1-based positions on ``Q = v_1 .. v_l``. A profile records the
first and last neighbour positions, whether the attachment is bad on its
own, its type and the insertion index used by the partition construction.
When the index span is outside 1..3 the profile carries a diagnostic: a
host vertex set on which the undirected tail patterns are guaranteed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..errors import ClaimViolated, ConstructionFailure, PreconditionViolated
from ..graph import Digraph, is_induced_path, r_value

# attachment type -> offset of beta from i_y
BETA_OFFSET = {1: 0, 2: 0, 3: 1, 4: 0, 5: 1, 6: 2, 7: 0}


@dataclass
class AttachmentProfile:
    y: int
    i: int
    j: int
    contiguous: bool
    bad_singleton: bool = False
    type: int | None = None
    beta: int | None = None
    bad_partner: int | None = None
    diagnostic: dict | None = None

    @property
    def span(self) -> int:
        return self.j - self.i

    def to_json(self) -> dict:
        return {k: v for k, v in self.__dict__.items()}


@dataclass
class BadPlan:
    bad_sets: list[tuple[int, ...]]
    I: list[int]
    h: list[int]
    chosen: list[tuple[int, ...]] = field(default_factory=list)


def _window(Q: Sequence[int], lo: int, hi: int) -> list[int]:
    """Host vertices at positions lo..hi (inclusive, 1-based, clipped)."""
    lo, hi = max(lo, 1), min(hi, len(Q))
    return list(Q[lo - 1:hi])


def _span_witness(d: Digraph, Q, y: int, n: int, i: int, j: int) -> dict:
    """Vertex set inducing F1_n or F2_n when the neighbour span of y is 0 or at least 4."""
    adj = lambda k: d.adjacent(y, Q[k - 1])  # noqa: E731
    if i == j:
        return {"signal": "F1", "vertices": _window(Q, i - n, i) + [y] + _window(Q, i + 1, i + n)}
    if j - i >= 3 and not adj(i + 1):
        return {"signal": "F1", "vertices": _window(Q, i - n, i + 1) + [y] + _window(Q, j, j + n - 2)}
    if j - i >= 3 and not adj(j - 1):
        return {"signal": "F1", "vertices": _window(Q, i - n + 2, i) + [y] + _window(Q, j - 1, j + n)}
    if adj(i + 2):
        return {"signal": "F1", "vertices": _window(Q, i - n + 1, i) + [y, Q[i + 1]] + _window(Q, j, j + n - 1)}
    return {"signal": "F2", "vertices": _window(Q, i - n + 1, i + 2) + [y] + _window(Q, j, j + n - 2)}


def profile_attachment(d: Digraph, Q: Sequence[int], y: int, n: int) -> AttachmentProfile:
    l = len(Q)
    pos = [k for k in range(1, l + 1) if d.adjacent(y, Q[k - 1])]
    if not pos:
        raise PreconditionViolated(f"vertex {y} has no neighbour on the path")
    if pos[0] < n + 1 or pos[-1] > l - n:
        raise PreconditionViolated(
            f"vertex {y} attaches at positions {pos}, outside {n + 1}..{l - n}")
    i, j = pos[0], pos[-1]
    prof = AttachmentProfile(y, i, j, contiguous=pos == list(range(i, j + 1)))
    span = j - i
    if not 1 <= span <= 3:
        prof.diagnostic = _span_witness(d, Q, y, n, i, j)
        return prof
    if not prof.contiguous:
        if span == 3:
            prof.diagnostic = _span_witness(d, Q, y, n, i, j)
        else:
            # span 2 with a gap in the middle: the two-hub pattern
            prof.diagnostic = {"signal": "F3",
                               "vertices": _window(Q, i - n + 1, i) + [y] + _window(Q, i + 1, i + n + 1)}
    vi, vj = Q[i - 1], Q[j - 1]
    prof.bad_singleton = d.has_arc(y, vi) or d.has_arc(vj, y)
    if prof.bad_singleton or not prof.contiguous:
        return prof
    out = lambda k: d.has_arc(y, Q[k - 1])  # noqa: E731
    if span == 1:
        t = 1
    elif span == 2:
        t = 2 if out(i + 1) else 3
    else:
        t = {(True, True): 4, (False, True): 5, (False, False): 6, (True, False): 7}[(out(i + 1), out(i + 2))]
    prof.type = t
    prof.beta = min(k for k in range(i, j) if d.has_arc(Q[k - 1], y) and d.has_arc(y, Q[k]))
    if prof.beta != i + BETA_OFFSET[t]:
        raise ConstructionFailure("typing", f"insertion index of {y} disagrees with its type {t}", vertex=y)
    return prof


def profile_all(d: Digraph, Q: Sequence[int], Yp, n: int) -> dict[int, AttachmentProfile]:
    return {y: profile_attachment(d, Q, y, n) for y in sorted(Yp)}


def bad_pairs(d: Digraph, Q: Sequence[int], profiles: dict[int, AttachmentProfile]) -> list[tuple[int, int]]:
    """Pairs (y, y') forming a two-element bad set, with i_{y'} = i_y + 2."""
    by_start: dict[int, list[AttachmentProfile]] = {}
    for p in profiles.values():
        if p.span == 3:
            by_start.setdefault(p.i, []).append(p)
    out = []
    for i, first in sorted(by_start.items()):
        for a in first:
            for b in by_start.get(i + 2, ()):
                if d.adjacent(a.y, b.y):
                    continue
                arcs = [(Q[i - 1], a.y), (a.y, Q[i + 2]), (b.y, Q[i + 2]), (b.y, Q[i + 4])]
                if all(d.has_arc(u, v) for u, v in arcs):
                    out.append((a.y, b.y))
    return out


def _bad_piece(d: Digraph, Q, profiles, B: tuple[int, ...]) -> tuple[int, int, list[int]]:
    """(first index, last index, replacement) of the r = 2 pseudo-path through the bad set B."""
    if len(B) == 1:
        p = profiles[B[0]]
        return p.i - 1, p.j + 1, [Q[p.i - 2], Q[p.i - 1], p.y, Q[p.j - 1], Q[p.j]]
    a, b = profiles[B[0]], profiles[B[1]]
    i = a.i
    return i - 1, i + 6, [Q[i - 2], Q[i - 1], a.y, Q[i + 2], b.y, Q[i + 4], Q[i + 5]]


def select_bad_indices(d: Digraph, Q: Sequence[int], profiles: dict[int, AttachmentProfile], n: int) -> BadPlan:
    """Collect the bad sets, their index set I and the greedy spread-out subsequence h.

    When h has at least (n+1)/2 entries the bad sets along it assemble into
    an induced pseudo-path with r >= n+1, which is raised as ClaimViolated.
    """
    sets: list[tuple[int, ...]] = []
    for p in profiles.values():
        if p.bad_singleton:
            if p.span == 1:
                # a triangle on y, v_i, v_{i+1} with both tails: the orientation picks the pattern
                vi, vj = Q[p.i - 1], Q[p.j - 1]
                out_i, in_j = d.has_arc(p.y, vi), d.has_arc(vj, p.y)
                signal = "D1" if out_i and in_j else "D2" if out_i else "D3"
                raise ConstructionFailure(
                    "bad singleton", f"vertex {p.y} spans one arc and is bad", vertex=p.y, signal=signal,
                    witness=_window(Q, p.i - n + 1, p.i) + [p.y] + _window(Q, p.j, p.j + n - 1))
            sets.append((p.y,))
    for a, b in bad_pairs(d, Q, profiles):
        profiles[a].bad_partner = b
        profiles[b].bad_partner = a
        sets.append((a, b))
    start = lambda B: min(profiles[y].i for y in B)  # noqa: E731
    sets.sort(key=lambda B: (start(B), len(B), B))
    I = sorted({start(B) for B in sets})
    h: list[int] = []
    for i in I:
        if not h or i >= h[-1] + n + 5:
            h.append(i)
    chosen = [next(B for B in sets if start(B) == hp) for hp in h]
    plan = BadPlan(sets, I, h, chosen)
    if 2 * len(h) >= n + 1:
        witness = _claim_witness(d, Q, profiles, chosen)
        r = None
        if witness is not None and is_induced_path(d.underlying, witness):
            r = r_value(d, witness)
        if r is None or r <= n:
            raise ConstructionFailure(
                "bad-index selection", f"{len(h)} spread-out bad sets but no long pseudo-path through them",
                signal="F1/F2")
        raise ClaimViolated(f"{len(h)} spread-out bad sets give a pseudo-path with r={r}", witness, r)
    return plan


def _claim_witness(d, Q, profiles, chosen) -> list[int] | None:
    seq: list[int] = []
    cursor = 1
    for B in chosen:
        lo, hi, piece = _bad_piece(d, Q, profiles, B)
        if lo < cursor:
            return None
        seq += _window(Q, cursor, lo - 1) + piece
        cursor = hi + 1
    return seq + _window(Q, cursor, len(Q))
