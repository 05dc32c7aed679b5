"""Reference implementations used as oracles.

Everything here works by brute force on plain Python sets, straight from the
definitions, and touches only Graph.n and Graph.adj.  None of the package's
bitmask machinery is reused, so agreement between the two is meaningful.
"""

from itertools import combinations

from misact import Graph


def subsets(n: int):
    verts = range(1, n + 1)
    for r in range(n + 1):
        for c in combinations(verts, r):
            yield frozenset(c)


def brute_independent(G: Graph, S) -> bool:
    return all(v not in G.adj[u] for u, v in combinations(sorted(S), 2))


def brute_dominating(G: Graph, S) -> bool:
    covered = set(S)
    for v in S:
        covered |= G.adj[v]
    return len(covered) == G.n


def brute_mis(G: Graph) -> list[frozenset[int]]:
    out = [
        S
        for S in subsets(G.n)
        if brute_independent(G, S) and brute_dominating(G, S)
    ]
    return sorted(out, key=sorted)


def brute_ext(G: Graph, A) -> frozenset[int]:
    A = frozenset(A)
    return frozenset(
        v for a in A for v in G.adj[a] if v > a and v not in A
    )


def brute_subs(G: Graph, A, v: int) -> frozenset[int]:
    rest = frozenset(A) - {v}
    return frozenset(
        u for u in G.adj[v] if brute_independent(G, rest | {u})
    )


def brute_int(G: Graph, A) -> frozenset[int]:
    out = set()
    for v in A:
        s = brute_subs(G, A, v)
        if not s or v > max(s):
            out.add(v)
    return frozenset(out)


def brute_intervals(G: Graph) -> list[tuple[frozenset, frozenset, frozenset]]:
    """(generator, lower, upper) triples for every maximal independent set."""
    return [
        (A, A - brute_int(G, A), A | brute_ext(G, A))
        for A in brute_mis(G)
    ]


def brute_multiplicity(G: Graph, X) -> int:
    X = frozenset(X)
    return sum(1 for _, lo, hi in brute_intervals(G) if lo <= X <= hi)


def brute_repeated_subsets(G: Graph) -> list[frozenset[int]]:
    triples = brute_intervals(G)
    out = [
        X
        for X in subsets(G.n)
        if sum(1 for _, lo, hi in triples if lo <= X <= hi) >= 2
    ]
    return sorted(out, key=sorted)


def brute_is_partition(G: Graph) -> bool:
    triples = brute_intervals(G)
    for X in subsets(G.n):
        if sum(1 for _, lo, hi in triples if lo <= X <= hi) != 1:
            return False
    return True
