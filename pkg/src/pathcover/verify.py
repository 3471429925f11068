"""Standalone certificate validator.

Deliberately self-contained: it parses the arc list and the certificate
itself and imports nothing from the rest of the package, so a bug in the
producers cannot hide behind a shared helper.
"""

from __future__ import annotations

import json
import re

_TOKEN = re.compile(r"[^\s;]+")


class SchemaError(ValueError):
    """The graph or certificate file does not parse."""


def parse_graph(text: str, relabel: bool = False) -> tuple[int, set[tuple[int, int]]]:
    values = []
    for line in text.splitlines():
        if line.lstrip().startswith("#"):
            continue
        for tok in _TOKEN.findall(line):
            if not tok.isdigit():
                raise SchemaError(f"bad token {tok!r} in graph file")
            values.append(int(tok))
    if not values:
        raise SchemaError("graph file has no vertex count")
    order, rest = values[0], values[1:]
    if len(rest) % 2:
        raise SchemaError("odd number of arc endpoints")
    pairs = list(zip(rest[::2], rest[1::2]))
    if relabel:
        index = {lab: k for k, lab in enumerate(sorted({w for p in pairs for w in p}))}
        pairs = [(index[u], index[v]) for u, v in pairs]
    arcs = set()
    for u, v in pairs:
        if u == v or not (0 <= u < order and 0 <= v < order) or (v, u) in arcs:
            raise SchemaError(f"invalid arc {u} {v}")
        arcs.add((u, v))
    return order, arcs


def parse_certificate(text: str) -> dict:
    try:
        cert = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"certificate is not JSON: {exc.msg}") from None
    if not isinstance(cert, dict):
        raise SchemaError("certificate must be a JSON object")
    if isinstance(cert.get("certificate"), dict):  # `solve` output wraps the certificate
        cert = cert["certificate"]
    kind = cert.get("kind", "path")
    if kind not in ("path", "cycle"):
        raise SchemaError(f"unknown certificate kind {kind!r}")
    if cert.get("mode") not in ("cover", "partition"):
        raise SchemaError("mode must be 'cover' or 'partition'")
    key = "paths" if kind == "path" else "units"
    seqs = cert.get(key)
    if not isinstance(seqs, list) or not all(
            isinstance(s, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in s) for s in seqs):
        raise SchemaError(f"{key!r} must be a list of integer lists")
    return cert


def _check_sequence(order: int, arcs, seq: list[int], cyclic: bool) -> str | None:
    if not seq:
        return "empty sequence"
    for v in seq:
        if not 0 <= v < order:
            return f"vertex {v} out of range"
    if len(set(seq)) != len(seq):
        return f"sequence {seq} repeats a vertex"
    if cyclic and len(seq) == 2:
        u, v = seq
        return None if (u, v) in arcs or (v, u) in arcs else f"unit {seq} is not an arc"
    steps = list(zip(seq, seq[1:]))
    if cyclic and len(seq) >= 3:
        steps.append((seq[-1], seq[0]))
    for u, v in steps:
        if (u, v) not in arcs:
            return f"arc {u}->{v} missing"
    return None


def first_violation(order: int, arcs, cert: dict) -> str | None:
    """Return a message for the first defect found, or None for a valid certificate."""
    cyclic = cert.get("kind", "path") == "cycle"
    seqs = cert["units"] if cyclic else cert["paths"]
    owner: dict[int, int] = {}
    for k, seq in enumerate(seqs):
        problem = _check_sequence(order, arcs, seq, cyclic)
        if problem:
            return f"{'unit' if cyclic else 'path'} {k}: {problem}"
        for v in seq:
            if v in owner and cert["mode"] == "partition":
                return f"vertex {v} in two paths"
            owner.setdefault(v, k)
    for v in range(order):
        if v not in owner:
            return f"vertex {v} uncovered"
    bound = cert.get("bound")
    total = bound.get("total") if isinstance(bound, dict) else bound
    if isinstance(total, int) and not isinstance(total, bool) and len(seqs) > total:
        return f"{len(seqs)} sequences exceed the claimed bound {total}"
    return None


def verify_texts(graph_text: str, cert_text: str, relabel: bool = False) -> str | None:
    order, arcs = parse_graph(graph_text, relabel)
    return first_violation(order, arcs, parse_certificate(cert_text))


def verify_objects(order: int, arcs, cert: dict) -> str | None:
    """Validate an in-memory certificate after a JSON round trip."""
    return first_violation(order, set(map(tuple, arcs)), parse_certificate(json.dumps(cert)))
