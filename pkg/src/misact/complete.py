"""Externally, internally, and fully complete maximal independent sets.

An externally complete set generates everything above it (its external
activity is the whole complement); the ascending greedy pass produces the
unique one.  An internally complete set generates everything below itself
(every member is internally active); the descending greedy pass always
produces one, though others may exist.  A set that is both generates the
entire subset lattice, which also means the cover cannot be a partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .activities import cover, ext_active, int_active, partition_verdict
from .graph import (
    Graph,
    enumerate_maximal_independent_sets,
    greedy_maximal_independent_set,
    induced_subgraph,
    is_maximal_independent,
    open_neighborhood,
    set_of,
)

__all__ = [
    "Obstruction",
    "externally_complete",
    "internally_complete",
    "enumerate_internally_complete",
    "is_externally_complete",
    "is_internally_complete",
    "is_complete",
    "find_complete",
    "partition_obstructions",
    "singleton_generator_for",
    "isolated_after_removal_check",
]


def externally_complete(G: Graph) -> frozenset[int]:
    """The unique maximal independent set S with Ext(S) = complement of S.

    Ascending greedy: every rejected vertex is adjacent to a smaller kept
    one, which is exactly external activity.
    """
    return greedy_maximal_independent_set(G, range(1, G.n + 1))


def internally_complete(G: Graph) -> frozenset[int]:
    """A maximal independent set S with Int(S) = S, by descending greedy.

    Not unique in general; see enumerate_internally_complete.
    """
    return greedy_maximal_independent_set(G, range(G.n, 0, -1))


def is_externally_complete(G: Graph, A: Iterable[int], mode: str = "standard") -> bool:
    s = frozenset(A)
    if not is_maximal_independent(G, s):
        raise ValueError(f"{sorted(s)} is not a maximal independent set")
    return ext_active(G, s, mode=mode) == G.vertex_set - s


def is_internally_complete(G: Graph, A: Iterable[int]) -> bool:
    s = frozenset(A)
    if not is_maximal_independent(G, s):
        raise ValueError(f"{sorted(s)} is not a maximal independent set")
    return int_active(G, s) == s


def enumerate_internally_complete(G: Graph) -> list[frozenset[int]]:
    """All internally complete sets, in canonical order."""
    return [
        A
        for A in enumerate_maximal_independent_sets(G)
        if int_active(G, A) == A
    ]


def is_complete(G: Graph, A: Iterable[int]) -> bool:
    """Both internally and externally complete."""
    s = frozenset(A)
    return is_externally_complete(G, s) and is_internally_complete(G, s)


def find_complete(G: Graph) -> frozenset[int] | None:
    """The complete maximal independent set, if the graph has one.

    A complete set must coincide with the unique externally complete set,
    so only that one candidate needs its internal side checked.
    """
    s = externally_complete(G)
    return s if int_active(G, s) == s else None


@dataclass(frozen=True)
class Obstruction:
    """A structural reason the cover cannot be a partition."""

    kind: str  # "complete_set_exists" or "two_internally_complete"
    witnesses: tuple[frozenset[int], ...]


def partition_obstructions(G: Graph) -> list[Obstruction]:
    """Detect structures that force repeated subsets in the cover.

    A complete set generates every subset, so any second generator's interval
    overlaps it; two internally complete sets both generate the empty set.
    A graph whose only maximal independent set is complete (an edgeless one)
    has a single-interval cover and no obstruction.  When any obstruction is
    present the computed verdict is cross-checked to be a non-partition; a
    mismatch would be a soundness bug, hence the hard error.
    """
    out: list[Obstruction] = []
    comp = find_complete(G)
    if comp is not None and len(enumerate_maximal_independent_sets(G)) >= 2:
        out.append(Obstruction("complete_set_exists", (comp,)))
    internals = enumerate_internally_complete(G)
    if len(internals) >= 2:
        out.append(Obstruction("two_internally_complete", tuple(internals)))
    if out:
        verdict = partition_verdict(cover(G))
        if verdict.is_partition:
            raise RuntimeError("obstruction found but cover is a partition")
    return out


def singleton_generator_for(G: Graph, v: int) -> frozenset[int]:
    """A maximal independent set A containing v with lower endpoint {v} or empty.

    Construction: descending greedy over the graph left after deleting the
    closed neighbourhood of v, plus v itself.  The greedy compares original
    labels, which is what the activity computation sees.  The postcondition
    (A - Int(A) is {v} or empty) is asserted.
    """
    G._check_vertex(v)
    closed_m = G.adj_mask[v] | (1 << (v - 1))
    cur = 1 << (v - 1)
    # descending greedy restricted to vertices outside N[v]; candidates can
    # never conflict with v itself
    for u in range(G.n, 0, -1):
        ubit = 1 << (u - 1)
        if ubit & closed_m or G.adj_mask[u] & cur:
            continue
        cur |= ubit
    A = set_of(cur)
    if not is_maximal_independent(G, A):
        raise RuntimeError(f"construction for vertex {v} is not maximal")
    low = A - int_active(G, A)
    if low not in (frozenset(), frozenset({v})):
        raise RuntimeError(f"lower endpoint {sorted(low)} is neither empty nor {{{v}}}")
    return A


def isolated_after_removal_check(G: Graph, v: int) -> tuple[bool, bool | None]:
    """Does deleting N[v] leave isolated vertices, and the activity consequence.

    Returns (has_isolated, verified).  When has_isolated is true, every
    maximal independent set containing v is checked to have a non-empty
    internal activity set and `verified` reports the outcome; otherwise
    `verified` is None.
    """
    G._check_vertex(v)
    closed = open_neighborhood(G, [v]) | {v}
    keep = G.vertex_set - closed
    sub, old_to_new = induced_subgraph(G, keep)
    new_to_old = {nv: ov for ov, nv in old_to_new.items()}
    isolated = {new_to_old[u] for u in sub.vertices if sub.degree(u) == 0}
    if not isolated:
        return False, None
    verified = all(
        int_active(G, A) != frozenset()
        for A in enumerate_maximal_independent_sets(G)
        if v in A
    )
    return True, verified
