"""Shared strategies and brute-force oracles.

The oracles enumerate permutations and subsets directly and use none of the
package's bitmask machinery, so they can referee the fast solvers.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from pathcover.graph import Digraph, Graph


@st.composite
def digraphs(draw, min_order=0, max_order=7):
    order = draw(st.integers(min_order, max_order))
    arcs = []
    for u, v in itertools.combinations(range(order), 2):
        c = draw(st.integers(0, 2))
        if c == 1:
            arcs.append((u, v))
        elif c == 2:
            arcs.append((v, u))
    return Digraph(order, arcs)


def directed_paths(d: Digraph) -> list[tuple[int, ...]]:
    """Every directed path (as a vertex sequence) in d, by brute force."""
    out = []
    for k in range(1, d.order + 1):
        for seq in itertools.permutations(range(d.order), k):
            if all((a, b) in d.arcs for a, b in zip(seq, seq[1:])):
                out.append(seq)
    return out


def brute_pc(d: Digraph) -> int:
    sets = {frozenset(p) for p in directed_paths(d)}
    full = set(range(d.order))
    for k in range(d.order + 1):
        for combo in itertools.combinations(sets, k):
            if set().union(*combo) == full:
                return k
    raise AssertionError("unreachable")


def brute_pp(d: Digraph) -> int:
    sets = {frozenset(p) for p in directed_paths(d)}
    full = set(range(d.order))
    for k in range(d.order + 1):
        for combo in itertools.combinations(sets, k):
            if sum(map(len, combo)) == d.order and set().union(*combo) == full:
                return k
    raise AssertionError("unreachable")


def brute_alpha(g: Graph) -> int:
    for k in range(g.order, -1, -1):
        for s in itertools.combinations(range(g.order), k):
            if not any(g.adjacent(a, b) for a, b in itertools.combinations(s, 2)):
                return k
    return 0


def brute_contains_induced(host, pattern, directed: bool) -> bool:
    """All host subsets of the pattern's order, all bijections onto them."""
    k = pattern.order
    if directed:
        rel = lambda h, a, b: (a, b) in h.arcs  # noqa: E731
    else:
        rel = lambda h, a, b: h.adjacent(a, b)  # noqa: E731
    pairs = [(a, b) for a in range(k) for b in range(k) if a != b]
    for subset in itertools.combinations(range(host.order), k):
        for image in itertools.permutations(subset):
            if all(rel(pattern, a, b) == rel(host, image[a], image[b]) for a, b in pairs):
                return True
    return False


def small_patterns(max_order=5):
    """Every family member with at most ``max_order`` vertices."""
    from pathcover.families import Family, FamilySpec, generate
    out = []
    for fam in Family:
        for n in range(1, max_order + 1):
            spec = FamilySpec(fam, n)
            g = generate(spec)
            if g.order <= max_order:
                out.append((spec, g))
    return out


def plant(pattern, extra: int, seed: int, directed: bool):
    """Random host containing ``pattern`` on a shuffled vertex set, extra vertices wired at random."""
    import random
    rng = random.Random(seed)
    order = pattern.order + extra
    perm = list(range(order))
    rng.shuffle(perm)
    pairs = pattern.arcs if directed else pattern.edges
    rel = [(perm[u], perm[v]) for u, v in pairs]
    planted = set(perm[: pattern.order])
    for u, v in itertools.combinations(range(order), 2):
        if u in planted and v in planted:
            continue
        c = rng.randrange(3)
        if c:
            rel.append((u, v) if c == 1 else (v, u))
    host = Digraph(order, rel) if directed else Graph(order, rel)
    return host, perm[: pattern.order]


MUTATIONS = ("drop-vertex", "swap-adjacent", "delete-path", "duplicate-vertex", "out-of-range")


def mutate(cert: dict, order: int, rng) -> tuple[str, dict] | None:
    """Apply one mutation that can never leave a valid certificate, or None if none applies.

    Only vertices covered exactly once are dropped or have their path
    deleted; swapping consecutive path vertices needs the reverse arc,
    which an oriented graph cannot have.
    """
    import copy
    paths = copy.deepcopy(cert["paths"])
    counts = {}
    for p in paths:
        for v in p:
            counts[v] = counts.get(v, 0) + 1
    unique = [v for v, c in counts.items() if c == 1]
    kinds = list(MUTATIONS)
    rng.shuffle(kinds)
    for kind in kinds:
        if kind == "drop-vertex" and unique:
            v = rng.choice(unique)
            paths = [[w for w in p if w != v] for p in paths]
            paths = [p for p in paths if p]
        elif kind == "swap-adjacent" and any(len(p) >= 2 for p in paths):
            p = rng.choice([p for p in paths if len(p) >= 2])
            k = rng.randrange(len(p) - 1)
            p[k], p[k + 1] = p[k + 1], p[k]
        elif kind == "delete-path" and unique:
            v = rng.choice(unique)
            paths = [p for p in paths if v not in p]
        elif kind == "duplicate-vertex" and cert["mode"] == "partition" and len(paths) >= 2:
            a, b = rng.sample(range(len(paths)), 2)
            paths[b] = paths[b] + [rng.choice(paths[a])]
        elif kind == "out-of-range":
            rng.choice(paths).append(order + rng.randrange(3))
        else:
            continue
        return kind, {**cert, "paths": paths}
    return None
