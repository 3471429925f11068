"""Ramsey upper bounds and the explicit constants of the bounded-cover construction.

Ramsey entries are exact only when an exhaustive search over all graphs of
the relevant order has confirmed them; every other entry is the binomial
bound ``C(s+t-2, s-1)``. All bound formulas are monotone in the Ramsey
values, so substituting an upper bound keeps each inequality valid.

Integers that grow past :data:`MAX_EXACT_BITS` are carried as
:class:`Symbolic` values holding a base-10 logarithm and the formula that
produced them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Union

from .errors import InvalidParameter

EXHAUSTIVE = "exhaustive"
BINOMIAL = "binomial-bound"
MAX_EXHAUSTIVE_ORDER = 6
MAX_EXACT_BITS = 12_000


@dataclass(frozen=True)
class Symbolic:
    """A positive quantity too large to materialise, known through ``log10``."""

    log10: float
    formula: str

    def to_json(self) -> dict:
        return {"log10": self.log10, "formula": self.formula}

    def __str__(self) -> str:
        return f"~10^{self.log10:.1f}"


Big = Union[int, Symbolic]


def log10_of(x: Big) -> float:
    if isinstance(x, Symbolic):
        return x.log10
    if x <= 0:
        return float("-inf")
    # math.log10 accepts arbitrarily large ints
    return math.log10(x)


def big_add(a: Big, b: Big, formula: str = "sum") -> Big:
    if isinstance(a, int) and isinstance(b, int):
        return _shrink(a + b, formula)
    la, lb = sorted((log10_of(a), log10_of(b)))
    return Symbolic(lb + math.log10(1 + 10 ** (la - lb)), formula)


def big_le(a: Big, b: Big) -> bool:
    """``a <= b`` for possibly symbolic values (symbolic sides compare by logarithm)."""
    if isinstance(a, int) and isinstance(b, int):
        return a <= b
    return log10_of(a) <= log10_of(b)


def big_json(x: Big):
    return x.to_json() if isinstance(x, Symbolic) else x


def _shrink(x: int, formula: str) -> Big:
    return Symbolic(math.log10(x), formula) if x.bit_length() > MAX_EXACT_BITS else x


# ---------------------------------------------------------------------------
# Ramsey numbers


@lru_cache(maxsize=None)
def _graphs_of_order(order: int) -> tuple[tuple[int, ...], ...]:
    """Adjacency bitmask tuples of every labelled graph on ``order`` vertices."""
    pairs = list(combinations(range(order), 2))
    out = []
    for code in range(1 << len(pairs)):
        adj = [0] * order
        for k, (u, v) in enumerate(pairs):
            if code >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        out.append(tuple(adj))
    return tuple(out)


def _has_homogeneous(adj: tuple[int, ...], size: int, clique: bool) -> bool:
    order = len(adj)
    if size <= 1:
        return order >= size
    for sub in combinations(range(order), size):
        ok = True
        for a, b in combinations(sub, 2):
            if bool(adj[a] >> b & 1) != clique:
                ok = False
                break
        if ok:
            return True
    return False


def _forces(order: int, s: int, t: int) -> bool:
    """Every graph on ``order`` vertices has a clique of size s or an independent set of size t."""
    return all(_has_homogeneous(adj, s, True) or _has_homogeneous(adj, t, False)
               for adj in _graphs_of_order(order))


@lru_cache(maxsize=None)
def ramsey_exhaustive(s: int, t: int, max_order: int = MAX_EXHAUSTIVE_ORDER) -> int | None:
    """Exact R(s, t) by checking every graph of each order up to ``max_order``.

    Returns None when R(s, t) exceeds ``max_order``. The result is the least
    order N at which no counterexample exists, so order N-1 carries an
    explicit counterexample.
    """
    if s < 1 or t < 1:
        raise InvalidParameter("Ramsey arguments must be positive")
    if max_order > 7:
        raise InvalidParameter("exhaustive Ramsey search is limited to order 7")
    for order in range(1, max_order + 1):
        if _forces(order, s, t):
            return order
    return None


def ramsey_counterexample(s: int, t: int, order: int) -> tuple[int, ...] | None:
    """A graph on ``order`` vertices with no s-clique and no independent t-set, if any."""
    for adj in _graphs_of_order(order):
        if not _has_homogeneous(adj, s, True) and not _has_homogeneous(adj, t, False):
            return adj
    return None


def _binomial(s: int, t: int) -> Big:
    a, k = s + t - 2, min(s - 1, t - 1)
    if a.bit_length() * k <= MAX_EXACT_BITS:
        return math.comb(a, k)
    return Symbolic(_log10_comb(a, k), f"C({s}+{t}-2,{k})")


def _log10_comb(a: int, k: int) -> float:
    la = math.log10(a)
    # a is astronomically larger than k here, so C(a,k) ~ a^k / k!
    return k * la - math.lgamma(k + 1) / math.log(10)


def ramsey_upper(s: int, t: int) -> tuple[int, str]:
    """Certified upper bound on R(s, t) with its source tag."""
    if s < 1 or t < 1:
        raise InvalidParameter("Ramsey arguments must be positive")
    lo, hi = sorted((s, t))
    # with one side at most 2 the binomial bound is already exact; otherwise
    # an exact entry needs the value to fit the exhaustive search
    if lo <= 2 and hi <= MAX_EXHAUSTIVE_ORDER or lo >= 3 and lo + hi <= 6:
        exact = ramsey_exhaustive(lo, hi)
        if exact is not None:
            return exact, EXHAUSTIVE
    return _binomial(s, t), BINOMIAL


def _ramsey_upper_big(s: int, t: Big) -> tuple[Big, str]:
    if isinstance(t, int):
        return ramsey_upper(s, t)
    k = s - 1
    return Symbolic(k * t.log10 - math.lgamma(k + 1) / math.log(10), f"C({s}+t-2,{k})"), BINOMIAL


# ---------------------------------------------------------------------------
# constants table


def n0_of(n: int) -> int:
    return max(-(-(n * n - n - 2) // 2), n)


@dataclass
class ConstantsTable:
    n: int
    n0: int
    alpha_seq: list[Big]
    ramsey_source: list[str]
    segment_pc_bound: int
    segment_pp_bound: int
    ysharp_bound: int
    core_pc_bound: int
    core_pp_bound: int
    layer_bound: Big
    total_pc_bound: Big = field(init=False)
    total_pp_bound: Big = field(init=False)

    def __post_init__(self):
        self.total_pc_bound = big_add(self.layer_bound, self.core_pc_bound, "layer_bound + core_pc_bound")
        self.total_pp_bound = big_add(self.layer_bound, self.core_pp_bound, "layer_bound + core_pp_bound")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "n0": self.n0,
            "alpha_seq": [big_json(a) for a in self.alpha_seq],
            "ramsey_source": list(self.ramsey_source),
            "segment_pc_bound": self.segment_pc_bound,
            "segment_pp_bound": self.segment_pp_bound,
            "ysharp_bound": self.ysharp_bound,
            "core_pc_bound": self.core_pc_bound,
            "core_pp_bound": self.core_pp_bound,
            "layer_bound": big_json(self.layer_bound),
            "total_pc_bound": big_json(self.total_pc_bound),
            "total_pp_bound": big_json(self.total_pp_bound),
        }


def segment_pc_bound(n: int) -> int:
    return (n - 2) * n * (n + 5) // 2 + 6 * (n - 2)


def segment_pp_bound(n: int) -> int:
    return n * (n + 5) // 2 + 1


def bad_index_bound(n: int) -> int:
    return n * (n + 5) // 2


@lru_cache(maxsize=None)
def constants(n: int) -> ConstantsTable:
    if n < 2:
        raise InvalidParameter("constants are defined for n >= 2")
    n0 = n0_of(n)
    alphas: list[Big] = [2 * -(-n0 // 2)]
    sources = [EXHAUSTIVE]  # alpha_0 involves no Ramsey number
    for i in range(1, 2 * n0):
        prev = alphas[-1]
        t = prev + 1 if isinstance(prev, int) else prev
        r, tag = _ramsey_upper_big(n, t)
        if isinstance(r, int):
            alphas.append(_shrink((n - 1) * r - 1, f"alpha_{i}"))
        else:
            alphas.append(Symbolic(r.log10 + math.log10(n - 1), f"(n-1)*R({n},alpha_{i - 1}+1)-1"))
        sources.append(tag)
    layer: Big = 0
    for a in alphas[1:]:
        layer = big_add(layer, a, "sum of alpha_1..alpha_{2n0-1}")
    seg_pc, seg_pp = segment_pc_bound(n), segment_pp_bound(n)
    ysharp = n * (2 * n - 1) * (n - 1)
    return ConstantsTable(
        n=n, n0=n0, alpha_seq=alphas, ramsey_source=sources,
        segment_pc_bound=seg_pc, segment_pp_bound=seg_pp, ysharp_bound=ysharp,
        core_pc_bound=ysharp + (n + 1) * seg_pc, core_pp_bound=ysharp + (n + 1) * seg_pp,
        layer_bound=layer,
    )
