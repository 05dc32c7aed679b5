"""Edge-list text format and JSON report shaping.

The text format: first non-comment line is `n m`, followed by m lines `u v`
with 1-based labels.  Lines starting with `#` and blank lines are ignored.
Parsing and emitting round-trip exactly, and every report built here is
deterministic byte for byte for identical inputs.
"""

from __future__ import annotations

import json
from typing import Any

from .activities import Cover, PartitionVerdict
from .graph import Graph

__all__ = [
    "EdgeListError",
    "parse_edge_list",
    "emit_edge_list",
    "cover_report",
    "verdict_report",
    "to_json",
]


class EdgeListError(ValueError):
    """Malformed edge-list input; the message carries the line number."""


def parse_edge_list(text: str) -> Graph:
    """Parse the `n m` / `u v` text format into a Graph."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise EdgeListError("line 1: empty input, expected header 'n m'")

    head_no, head = rows[0]
    fields = head.split()
    if len(fields) != 2:
        raise EdgeListError(f"line {head_no}: header must be 'n m', got {head!r}")
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise EdgeListError(f"line {head_no}: header must be two integers") from None
    if n < 0 or m < 0:
        raise EdgeListError(f"line {head_no}: counts must be non-negative")

    body = rows[1:]
    if len(body) != m:
        raise EdgeListError(
            f"line {head_no}: header promises {m} edges, found {len(body)}"
        )
    edges = []
    for lineno, line in body:
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListError(f"line {lineno}: edge must be 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: edge must be two integers") from None
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise EdgeListError(f"line {lineno}: label outside 1..{n} in '{u} {v}'")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
    return Graph(n, edges)


def emit_edge_list(G: Graph) -> str:
    """Serialize a graph to the text format, edges sorted."""
    lines = [f"{G.n} {G.edge_count()}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def _vl(s) -> list[int]:
    """Vertex list, ascending; the JSON spelling of a vertex set."""
    return sorted(s)


def cover_report(C: Cover, verdict: PartitionVerdict) -> dict[str, Any]:
    return {
        "n": C.n,
        "entries": [
            {
                "mis": _vl(e.generator),
                "int": _vl(e.int_),
                "ext": _vl(e.ext),
                "lower": _vl(e.interval.lower),
                "upper": _vl(e.interval.upper),
            }
            for e in C.entries
        ],
        **verdict_report(verdict),
    }


def verdict_report(verdict: PartitionVerdict) -> dict[str, Any]:
    witness = None
    if verdict.witness is not None:
        witness = {
            "subset": _vl(verdict.witness.subset),
            "generators": [
                _vl(verdict.witness.generator_a),
                _vl(verdict.witness.generator_b),
            ],
        }
    return {
        "is_partition": verdict.is_partition,
        "repeated_subsets": verdict.repeated_subset_count,
        "witness": witness,
    }


def to_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2) + "\n"
