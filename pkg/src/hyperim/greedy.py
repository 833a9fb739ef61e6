"""Max-coverage greedy seed selection over a bag of RR sets.

Selection uses a lazy-greedy priority queue: stale gains are re-evaluated on
pop, and a vertex is only taken once its entry is fresh, which makes the
output identical to the naive argmax loop with ties broken by lowest id.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, NamedTuple, Sequence

if TYPE_CHECKING:
    from .sampler import RRSet, SamplerCounters


class RRCollection:
    """RR sets plus an inverted vertex -> set-index map for coverage queries."""

    def __init__(self, sets: Iterable["RRSet"], universe_size: int, counters=None):
        self.sets = tuple(sets)
        self.universe_size = universe_size
        self.counters = counters
        inverted: dict[int, list[int]] = {}
        for idx, rr in enumerate(self.sets):
            for v in rr.members:
                if v >= universe_size or v < 0:
                    raise ValueError(f"vertex {v} outside universe of size {universe_size}")
                inverted.setdefault(v, []).append(idx)
        self.inverted = inverted

    def __len__(self) -> int:
        return len(self.sets)

    def indices_containing(self, v: int) -> list[int]:
        return self.inverted.get(v, [])


class Bounds(NamedTuple):
    lower: float
    upper: float
    ratio: float


@dataclass(frozen=True)
class SeedResult:
    """Selected seeds with coverage, influence estimate, and run diagnostics."""

    seeds: tuple[int, ...]
    coverage: int
    coverage_trace: tuple[int, ...]
    influence_estimate: float
    rr_count: int
    iterations: int = 0
    bounds: Bounds | None = None
    counters: "SamplerCounters | None" = None
    brr_trace: tuple = field(default=())


def marginal_coverage(collection: RRCollection, v: int,
                      covered: Sequence[bool] | None = None) -> int:
    """Number of not-yet-covered RR sets containing ``v``."""
    if not 0 <= v < collection.universe_size:
        raise ValueError(f"vertex {v} outside universe")
    indices = collection.indices_containing(v)
    if covered is None:
        return len(indices)
    return sum(1 for idx in indices if not covered[idx])


def coverage(collection: RRCollection, seeds: Iterable[int]) -> int:
    """Number of RR sets intersecting the seed set."""
    hit = set()
    for v in seeds:
        hit.update(collection.indices_containing(v))
    return len(hit)


def coverage_trace(collection: RRCollection, seeds: Sequence[int]) -> tuple[int, ...]:
    """Cumulative coverage after each seed, in seed order."""
    hit: set[int] = set()
    trace = []
    for v in seeds:
        hit.update(collection.indices_containing(v))
        trace.append(len(hit))
    return tuple(trace)


def estimate_influence(collection: RRCollection, seeds: Iterable[int]) -> float:
    """Influence estimate |V| * coverage / |R|."""
    if len(collection) == 0:
        raise ValueError("collection is empty")
    return collection.universe_size * coverage(collection, seeds) / len(collection)


def select_seeds(collection: RRCollection, k: int) -> SeedResult:
    """Pick up to ``k`` seeds by repeated argmax of marginal coverage.

    Ties go to the lowest vertex id. Selection stops early once every RR set
    is covered or no vertex adds coverage; the result then carries fewer than
    ``k`` seeds.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if len(collection) == 0:
        raise ValueError("collection is empty")

    covered = bytearray(len(collection.sets))
    n_covered = 0
    seeds: list[int] = []
    trace: list[int] = []
    # heap of (-gain, vertex, pick_round_when_computed)
    heap = [(-len(indices), v, 0) for v, indices in collection.inverted.items()]
    heapq.heapify(heap)

    while len(seeds) < k and heap and n_covered < len(collection.sets):
        neg_gain, v, computed = heapq.heappop(heap)
        if computed != len(seeds):
            gain = marginal_coverage(collection, v, covered)
            heapq.heappush(heap, (-gain, v, len(seeds)))
            continue
        if neg_gain == 0:
            break
        seeds.append(v)
        for idx in collection.indices_containing(v):
            if not covered[idx]:
                covered[idx] = 1
                n_covered += 1
        trace.append(n_covered)

    return SeedResult(
        seeds=tuple(seeds),
        coverage=n_covered,
        coverage_trace=tuple(trace),
        influence_estimate=collection.universe_size * n_covered / len(collection.sets),
        rr_count=len(collection.sets),
        counters=collection.counters,
    )
