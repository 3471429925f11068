"""Cycle partitions of digraphs whose underlying graph has no long induced paths or big stars.

A connected underlying graph without an induced P_n has diameter at most
n-2, and Ramsey's theorem caps its maximum degree, so the order of every
premise-passing digraph is bounded. The report checks each link of that
chain on a concrete digraph; the enumerator checks it for every small one.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .constants import BINOMIAL, Big, Symbolic, big_json, big_le, ramsey_upper
from .detectors import Condition, check_condition
from .errors import InvalidParameter, TooLarge
from .graph import Digraph, Graph, bits, is_connected
from .solvers import DEFAULT_CAP, cp_exact

MAX_ENUMERATION_ORDER = 7
_POWER_BITS = 12_000


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.order)), default=0)


def diameter(g: Graph) -> int | None:
    """Largest BFS eccentricity; None if ``g`` is disconnected or empty."""
    if g.order == 0 or not is_connected(g):
        return None
    full = (1 << g.order) - 1
    best = 0
    for s in range(g.order):
        seen = frontier = 1 << s
        depth = 0
        while seen != full:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.nbrs[v]
            frontier = nxt & ~seen
            seen |= frontier
            depth += 1
        best = max(best, depth)
    return best


def _pow(base: int, exp: int) -> Big:
    if exp == 0:
        return 1
    if base <= 1:
        return base
    if base.bit_length() * exp > _POWER_BITS:
        return Symbolic(exp * math.log10(base), f"{base}^{exp}")
    return base ** exp


def moore_bound(delta: int, diam: int) -> int:
    """Largest order of a graph with maximum degree ``delta`` and diameter ``diam``."""
    return 1 + delta * sum((delta - 1) ** k for k in range(diam))


def degree_bound(n: int) -> tuple[Big, str]:
    r, tag = ramsey_upper(2 ** (n - 1) - 1, n)
    return r - 1, tag


def order_bound(n: int) -> Big:
    deg, _ = degree_bound(n)
    return _pow(deg, n - 2)


@dataclass
class CycleTheoremReport:
    n: int
    order: int
    premise_ok: bool
    max_degree: int
    diameter: int | None
    degree_bound: Big
    order_bound: Big
    ramsey_source: str
    power_bound: Big | None = None
    power_bound_holds: bool | None = None
    cp_value: int | None = None
    violations: list[str] = field(default_factory=list)
    premise_witness: dict | None = None

    @property
    def bounds_hold(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "n": self.n, "order": self.order, "premise_ok": self.premise_ok,
            "max_degree": self.max_degree, "diameter": self.diameter,
            "degree_bound": big_json(self.degree_bound), "order_bound": big_json(self.order_bound),
            "ramsey_source": self.ramsey_source,
            "power_bound": big_json(self.power_bound) if self.power_bound is not None else None,
            "power_bound_holds": self.power_bound_holds,
            "cp_value": self.cp_value, "violations": list(self.violations),
            "premise_witness": self.premise_witness,
        }


def premise(d: Digraph, n: int) -> tuple[bool, dict | None]:
    if d.order == 0:
        return False, {"reason": "empty digraph"}
    rep = check_condition(d, Condition.CYCLE_PREMISE, n)
    if not rep.satisfied:
        return False, rep.witness.to_json() if rep.witness else None
    if not is_connected(d.underlying):
        return False, {"reason": "not weakly connected"}
    return True, None


def check_cycle_theorem(d: Digraph, n: int, cap: int = DEFAULT_CAP) -> CycleTheoremReport:
    if n < 2:
        raise InvalidParameter("n must be at least 2")
    g = d.underlying
    ok, why = premise(d, n)
    deg_b, tag = degree_bound(n)
    rep = CycleTheoremReport(
        n=n, order=d.order, premise_ok=ok, max_degree=max_degree(g), diameter=diameter(g),
        degree_bound=deg_b, order_bound=order_bound(n), ramsey_source=tag, premise_witness=why,
    )
    if d.order <= cap:
        rep.cp_value = cp_exact(d, cap)[0]
    if rep.diameter is not None:
        rep.power_bound = _pow(rep.max_degree, rep.diameter)
        rep.power_bound_holds = big_le(d.order, rep.power_bound)
    if not ok:
        return rep
    if not big_le(rep.max_degree, deg_b):
        rep.violations.append(f"max degree {rep.max_degree} exceeds {deg_b}")
    if rep.diameter > n - 2:
        rep.violations.append(f"diameter {rep.diameter} exceeds {n - 2}")
    if d.order > moore_bound(rep.max_degree, rep.diameter):
        rep.violations.append("order exceeds the Moore bound")
    if not big_le(d.order, rep.order_bound):
        rep.violations.append(f"order {d.order} exceeds {rep.order_bound}")
    if rep.cp_value is not None and not big_le(rep.cp_value, rep.order_bound):
        rep.violations.append(f"cp {rep.cp_value} exceeds {rep.order_bound}")
    return rep


# ---------------------------------------------------------------------------
# exhaustive enumeration


def canonical_form(d: Digraph) -> tuple:
    """Lexicographically least sorted arc tuple over all vertex relabellings."""
    arcs = list(d.arcs)
    best = None
    for perm in itertools.permutations(range(d.order)):
        key = tuple(sorted((perm[u], perm[v]) for u, v in arcs))
        if best is None or key < best:
            best = key
    return best


def _hereditary_ok(d: Digraph, n: int) -> bool:
    # the forbidden induced patterns are closed under taking induced subgraphs
    return check_condition(d, Condition.CYCLE_PREMISE, n).satisfied


def enumerate_hereditary(n: int, max_order: int) -> dict[int, list[Digraph]]:
    """Oriented graphs up to isomorphism on 1..max_order vertices with no forbidden induced pattern.

    Grows one vertex at a time: each class of order k+1 contains a class of
    order k as an induced subgraph, so extending every survivor by every
    arc pattern to a new vertex reaches all of them.
    """
    if max_order > MAX_ENUMERATION_ORDER:
        raise TooLarge(max_order, MAX_ENUMERATION_ORDER)
    levels: dict[int, list[Digraph]] = {}
    current = [Digraph(1)] if max_order >= 1 and _hereditary_ok(Digraph(1), n) else []
    if current:
        levels[1] = current
    for k in range(1, max_order):
        seen: dict[tuple, Digraph] = {}
        for base in current:
            for pattern in itertools.product((0, 1, 2), repeat=k):
                arcs = list(base.arcs)
                for v, code in enumerate(pattern):
                    if code == 1:
                        arcs.append((v, k))
                    elif code == 2:
                        arcs.append((k, v))
                cand = Digraph(k + 1, arcs)
                key = canonical_form(cand)
                if key in seen:
                    continue
                if _hereditary_ok(cand, n):
                    seen[key] = Digraph(k + 1, key)
        current = [seen[key] for key in sorted(seen)]
        if not current:
            break
        levels[k + 1] = current
    return levels


def exhaustive_small_verification(n: int, max_order: int, cap: int = DEFAULT_CAP) -> dict:
    """Check order and cp against the order bound for every premise-passing digraph up to ``max_order``."""
    if n < 2:
        raise InvalidParameter("n must be at least 2")
    levels = enumerate_hereditary(n, max_order)
    bound = order_bound(n)
    survivors = []
    failures = []
    for k, graphs in sorted(levels.items()):
        for d in graphs:
            if not is_connected(d.underlying):
                continue
            cp = cp_exact(d, cap)[0]
            entry = {"order": k, "arcs": sorted(d.arcs), "cp": cp}
            survivors.append(entry)
            if not (big_le(k, bound) and big_le(cp, bound)):
                failures.append(entry)
    deg_b, tag = degree_bound(n)
    return {
        "n": n,
        "max_order": max_order,
        "order_bound": big_json(bound),
        "degree_bound": big_json(deg_b),
        "ramsey_source": tag,
        "classes_per_order": {k: len(v) for k, v in sorted(levels.items())},
        "survivors": survivors,
        "max_survivor_order": max((s["order"] for s in survivors), default=0),
        "failures": failures,
        "ok": not failures,
    }


__all__ = [
    "BINOMIAL", "CycleTheoremReport", "canonical_form", "check_cycle_theorem", "degree_bound", "diameter",
    "enumerate_hereditary", "exhaustive_small_verification", "max_degree", "moore_bound", "order_bound",
    "premise",
]
