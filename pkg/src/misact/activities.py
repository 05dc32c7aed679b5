"""Vertex activities and the interval covers they generate.

Each maximal independent set A owns the interval

    [A - Int(A);  A + Ext(A)]

where Ext(A) holds the vertices outside A adjacent to a smaller member of A,
and Int(A) holds the members of A that no larger neighbour can replace.  The
intervals of all maximal independent sets always cover the full subset
lattice; whether they form a partition depends on the labelling, and the
machinery here decides that question three independent ways.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, NamedTuple

from .graph import (
    Graph,
    Interval,
    _bits,
    _is_independent_mask,
    _vertex_set_mask,
    enumerate_maximal_independent_sets,
    is_maximal_independent,
    mask_of,
    relabel,
    set_of,
)

__all__ = [
    "ActivityReport",
    "Cover",
    "PartitionVerdict",
    "RepeatWitness",
    "ActivityPolynomial",
    "LabellingSearchResult",
    "MisDifference",
    "ext_active",
    "subs",
    "int_active",
    "interval_of",
    "cover",
    "locate_generator",
    "subset_multiplicity",
    "intervals_intersect",
    "partition_verdict",
    "repeated_subsets_detail",
    "search_labelling",
    "activity_polynomial",
    "mis_difference_decomposition",
]

# Full 2^n subset scans are refused above this bound unless overridden.
DEFAULT_ORACLE_BOUND = 25

ACTIVITY_MODES = ("standard", "reversed")


def _independent_mask_checked(G: Graph, A: Iterable[int]) -> int:
    m = _vertex_set_mask(G, A)
    if not _is_independent_mask(G, m):
        raise ValueError(f"{sorted(set_of(m))} is not independent")
    return m


def ext_active(G: Graph, A: Iterable[int], mode: str = "standard") -> frozenset[int]:
    """Externally active vertices of the independent set A.

    Standard mode collects each vertex outside A that is adjacent to and
    greater than some member of A; reversed mode flips the comparison.
    """
    if mode not in ACTIVITY_MODES:
        raise ValueError(f"mode must be one of {ACTIVITY_MODES}")
    m = _independent_mask_checked(G, A)
    out = 0
    for a in _bits(m):
        if mode == "standard":
            out |= G.adj_mask[a] & ~((1 << a) - 1)  # neighbours labelled > a
        else:
            out |= G.adj_mask[a] & ((1 << (a - 1)) - 1)  # neighbours labelled < a
    return set_of(out & ~m)


def _subs_mask(G: Graph, m: int, v: int) -> int:
    # u can replace v when u has no neighbour left in A - {v}
    rest = m & ~(1 << (v - 1))
    out = 0
    for u in _bits(G.adj_mask[v]):
        if not G.adj_mask[u] & rest:
            out |= 1 << (u - 1)
    return out


def subs(G: Graph, A: Iterable[int], v: int) -> frozenset[int]:
    """Neighbours of v that can substitute v in A while keeping independence."""
    m = _independent_mask_checked(G, A)
    if not m & (1 << (v - 1)):
        raise ValueError(f"vertex {v} is not a member of {sorted(set_of(m))}")
    return set_of(_subs_mask(G, m, v))


def _int_active_mask(G: Graph, m: int) -> int:
    out = 0
    for v in _bits(m):
        s = _subs_mask(G, m, v)
        if not s or v > s.bit_length():  # bit_length of a mask = its max label
            out |= 1 << (v - 1)
    return out


def int_active(G: Graph, A: Iterable[int]) -> frozenset[int]:
    """Internally active vertices: members no larger neighbour can replace."""
    m = _independent_mask_checked(G, A)
    return set_of(_int_active_mask(G, m))


@dataclass(frozen=True)
class ActivityReport:
    """Activities of one maximal independent set and the interval it generates."""

    generator: frozenset[int]
    int_: frozenset[int]
    ext: frozenset[int]
    interval: Interval

    @property
    def lower(self) -> frozenset[int]:
        return self.interval.lower

    @property
    def upper(self) -> frozenset[int]:
        return self.interval.upper


@dataclass(frozen=True)
class Cover:
    """Interval cover of the subset lattice, one entry per maximal independent set."""

    n: int
    entries: tuple[ActivityReport, ...]

    def generators(self) -> list[frozenset[int]]:
        return [e.generator for e in self.entries]

    def multiplicity_of(self, X: Iterable[int]) -> int:
        s = frozenset(X)
        return sum(1 for e in self.entries if e.interval.contains(s))


def _report_for_mask(G: Graph, m: int) -> ActivityReport:
    int_m = _int_active_mask(G, m)
    ext_m = 0
    for a in _bits(m):
        ext_m |= G.adj_mask[a] & ~((1 << a) - 1)
    ext_m &= ~m
    return ActivityReport(
        generator=set_of(m),
        int_=set_of(int_m),
        ext=set_of(ext_m),
        interval=Interval(set_of(m & ~int_m), set_of(m | ext_m)),
    )


def interval_of(G: Graph, A: Iterable[int]) -> ActivityReport:
    """Activity report of a maximal independent set A."""
    m = _vertex_set_mask(G, A)
    if not is_maximal_independent(G, set_of(m)):
        raise ValueError(f"{sorted(set_of(m))} is not a maximal independent set")
    return _report_for_mask(G, m)


def cover(G: Graph) -> Cover:
    """Interval cover generated by all maximal independent sets, canonical order."""
    return Cover(
        n=G.n,
        entries=tuple(
            _report_for_mask(G, mask_of(A))
            for A in enumerate_maximal_independent_sets(G)
        ),
    )


def _locate_generator_mask(G: Graph, xm: int) -> int:
    adj = G.adj_mask
    b = 0
    m = xm
    while m:  # members of X, ascending
        bit = m & -m
        if not adj[bit.bit_length()] & b:
            b |= bit
        m ^= bit
    rest = G.full_mask & ~xm
    while rest:  # non-members, descending
        v = rest.bit_length()
        bit = 1 << (v - 1)
        if not adj[v] & b:
            b |= bit
        rest ^= bit
    return b


def locate_generator(G: Graph, X: Iterable[int]) -> frozenset[int]:
    """A maximal independent set whose interval contains X.

    Greedy pass over the vertex sequence "members of X ascending, then the
    rest descending", keeping whatever stays independent.  The result B
    satisfies X - B <= Ext(B) and B - X <= Int(B), hence contains X in its
    generated interval.
    """
    return set_of(_locate_generator_mask(G, _vertex_set_mask(G, X)))


def subset_multiplicity(G: Graph, X: Iterable[int]) -> int:
    """Number of maximal independent sets whose interval contains X.

    Always at least 1.  Builds the full cover; prefer Cover.multiplicity_of
    when querying many subsets of one graph.
    """
    return cover(G).multiplicity_of(X)


def intervals_intersect(a: Interval, b: Interval) -> bool:
    """Intervals meet exactly when the union of lowers fits under both uppers."""
    lo = a.lower | b.lower
    return lo <= a.upper and lo <= b.upper


class RepeatWitness(NamedTuple):
    """A subset generated by two distinct maximal independent sets."""

    subset: frozenset[int]
    generator_a: frozenset[int]
    generator_b: frozenset[int]


@dataclass(frozen=True)
class PartitionVerdict:
    """Whether a cover's intervals are pairwise disjoint.

    repeated_subset_count is the number of distinct subsets lying in two or
    more intervals; it is None when the graph is too large for the exhaustive
    scan and the cover is not a partition (some repeat exists but the exact
    count was not computed).
    """

    is_partition: bool
    repeated_subset_count: int | None
    witness: RepeatWitness | None


def _interval_masks(C: Cover) -> list[tuple[int, int]]:
    return [(mask_of(e.interval.lower), mask_of(e.interval.upper)) for e in C.entries]


def _pairwise_overlap(C: Cover) -> tuple[int, int] | None:
    masks = _interval_masks(C)
    for i in range(len(masks)):
        lo_i, hi_i = masks[i]
        for j in range(i + 1, len(masks)):
            lo_j, hi_j = masks[j]
            lo = lo_i | lo_j
            if lo & ~hi_i == 0 and lo & ~hi_j == 0:
                return i, j
    return None


def _subset_histogram(C: Cover) -> bytearray:
    """Per-subset interval membership counts, saturated at 255."""
    counts = bytearray(1 << C.n)
    for lo, hi in _interval_masks(C):
        free = hi & ~lo
        s = free
        while True:
            x = lo | s
            if counts[x] < 255:
                counts[x] += 1
            if s == 0:
                break
            s = (s - 1) & free
    return counts


def partition_verdict(C: Cover, oracle_bound: int = DEFAULT_ORACLE_BOUND) -> PartitionVerdict:
    """Decide partition-hood of a cover by independent methods.

    Method one tests pairwise interval disjointness.  Method two compares the
    summed interval sizes against 2^n, which suffices because the intervals
    are known to cover every subset.  Up to `oracle_bound` vertices a third,
    exhaustive per-subset scan also runs and the exact repeated-subset count
    is reported.  Disagreement between methods raises, since it would mean
    the cover violates the coverage guarantee it was built under.
    """
    overlap = _pairwise_overlap(C)
    pairwise_partition = overlap is None
    size_sum = sum(e.interval.size() for e in C.entries)
    size_partition = size_sum == 1 << C.n

    witness = None
    repeated: int | None = None
    if C.n <= oracle_bound:
        counts = _subset_histogram(C)
        zero = counts.count(0)
        if zero:
            raise RuntimeError(f"cover misses {zero} subsets; coverage violated")
        repeated = len(counts) - counts.count(1)
        exhaustive_partition = repeated == 0
        if exhaustive_partition != pairwise_partition or exhaustive_partition != size_partition:
            raise RuntimeError("partition methods disagree on a covered lattice")
        if not exhaustive_partition:
            x = next(i for i, c in enumerate(counts) if c >= 2)
            gens = [
                e.generator
                for e, (lo, hi) in zip(C.entries, _interval_masks(C))
                if x & ~hi == 0 and lo & ~x == 0
            ]
            witness = RepeatWitness(set_of(x), gens[0], gens[1])
    else:
        if pairwise_partition != size_partition:
            raise RuntimeError("partition methods disagree on a covered lattice")
        repeated = 0 if pairwise_partition else None
        if overlap is not None:
            i, j = overlap
            a, b = C.entries[i], C.entries[j]
            witness = RepeatWitness(a.interval.lower | b.interval.lower,
                                    a.generator, b.generator)

    return PartitionVerdict(
        is_partition=pairwise_partition,
        repeated_subset_count=repeated,
        witness=witness,
    )


def repeated_subsets_detail(
    C: Cover, oracle_bound: int = DEFAULT_ORACLE_BOUND
) -> list[tuple[frozenset[int], list[frozenset[int]]]]:
    """Every subset lying in two or more intervals, with its generators."""
    if C.n > oracle_bound:
        raise ValueError(f"exhaustive scan refused for n={C.n} > {oracle_bound}")
    counts = _subset_histogram(C)
    masks = _interval_masks(C)
    out = []
    for x, c in enumerate(counts):
        if c >= 2:
            gens = [
                e.generator
                for e, (lo, hi) in zip(C.entries, masks)
                if x & ~hi == 0 and lo & ~x == 0
            ]
            out.append((set_of(x), gens))
    return out


@dataclass(frozen=True)
class LabellingSearchResult:
    permutation: tuple[int, ...]  # vertex i is renamed permutation[i-1]
    verdict: PartitionVerdict
    found_partition: bool
    mode: str
    trials: int
    seed: int | None


def search_labelling(
    G: Graph,
    budget: int | None = None,
    mode: str = "exhaustive",
    seed: int | None = None,
    factorial_bound: int = 9,
) -> LabellingSearchResult:
    """Search vertex relabellings for one minimizing the repeated-subset count.

    Exhaustive mode walks all n! permutations in lexicographic order (bounded
    by `factorial_bound`) so ties resolve to the lexicographically smallest
    permutation; it stops early once a partition shows up.  Random mode tries
    the identity and then `budget - 1` seeded shuffles; the seed is recorded
    in the result so runs can be reproduced.
    """
    if budget is not None and budget <= 0:
        raise ValueError("budget must be positive")
    if mode not in ("exhaustive", "random"):
        raise ValueError("mode must be 'exhaustive' or 'random'")
    if G.n > DEFAULT_ORACLE_BOUND:
        raise ValueError("labelling search needs exact repeat counts; graph too large")

    def score(perm: tuple[int, ...]) -> PartitionVerdict:
        return partition_verdict(cover(relabel(G, perm)))

    best_perm: tuple[int, ...] | None = None
    best: PartitionVerdict | None = None
    trials = 0

    if mode == "exhaustive":
        if G.n > factorial_bound:
            raise ValueError(
                f"exhaustive search over {G.n}! labellings refused; "
                f"bound is {factorial_bound}!"
            )
        for perm in permutations(range(1, G.n + 1)):
            v = score(perm)
            trials += 1
            if best is None or v.repeated_subset_count < best.repeated_subset_count:
                best_perm, best = perm, v
            if best.repeated_subset_count == 0:
                break
    else:
        if budget is None:
            raise ValueError("random mode needs a trial budget")
        if seed is None:
            seed = 0
        rng = random.Random(seed)
        candidates = [tuple(range(1, G.n + 1))]  # identity baseline first
        while len(candidates) < budget:
            p = list(range(1, G.n + 1))
            rng.shuffle(p)
            candidates.append(tuple(p))
        for perm in candidates:
            v = score(perm)
            trials += 1
            if (
                best is None
                or v.repeated_subset_count < best.repeated_subset_count
                or (v.repeated_subset_count == best.repeated_subset_count and perm < best_perm)
            ):
                best_perm, best = perm, v

    assert best_perm is not None and best is not None
    return LabellingSearchResult(
        permutation=best_perm,
        verdict=best,
        found_partition=best.is_partition,
        mode=mode,
        trials=trials,
        seed=seed if mode == "random" else None,
    )


@dataclass(frozen=True, eq=True)
class ActivityPolynomial:
    """Coefficients of sum over maximal independent sets of x^|S| y^|Ext| z^|Int|."""

    coefficients: Mapping[tuple[int, int, int], int]

    def evaluate(self, x: float, y: float, z: float) -> float:
        return sum(
            c * x**s * y**e * z**i for (s, e, i), c in self.coefficients.items()
        )

    def mis_count(self) -> int:
        return sum(self.coefficients.values())


def activity_polynomial(G: Graph) -> ActivityPolynomial:
    """Exact coefficient map (|S|, |Ext(S)|, |Int(S)|) -> multiplicity."""
    coeffs: dict[tuple[int, int, int], int] = {}
    for e in cover(G).entries:
        key = (len(e.generator), len(e.ext), len(e.int_))
        coeffs[key] = coeffs.get(key, 0) + 1
    return ActivityPolynomial(coeffs)


@dataclass(frozen=True)
class MisDifference:
    """Unique exchange decomposition between two maximal independent sets."""

    removed: frozenset[int]  # members of the first set absent from the second
    added: frozenset[int]  # members of the second set absent from the first
    added_meets_ext_of_first: bool
    removed_meets_ext_of_second: bool


def mis_difference_decomposition(
    G: Graph, A: Iterable[int], B: Iterable[int]
) -> MisDifference:
    """Decompose B as (A - removed) + added and report the activity witness.

    At least one of the two witness flags always holds: either some added
    vertex is externally active in A, or some removed vertex is externally
    active in B.
    """
    a = frozenset(A)
    b = frozenset(B)
    for name, s in (("first", a), ("second", b)):
        if not is_maximal_independent(G, s):
            raise ValueError(f"{name} set {sorted(s)} is not a maximal independent set")
    if a == b:
        raise ValueError("the two sets must differ")
    removed = a - b
    added = b - a
    flag_n = bool(added & ext_active(G, a))
    flag_m = bool(removed & ext_active(G, b))
    if not (flag_n or flag_m):
        raise RuntimeError("exchange without an externally active witness")
    return MisDifference(
        removed=removed,
        added=added,
        added_meets_ext_of_first=flag_n,
        removed_meets_ext_of_second=flag_m,
    )
