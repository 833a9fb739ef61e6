"""Bound-driven RR budgeting: partition sets, bound the optimum, double until done.

Generated RR sets are split into two groups by a structural rule on the
root's layers. The first group drives greedy selection and an upper bound on
the optimal coverage; the second yields a concentration lower bound for the
selected seeds. Generation doubles until lower/upper reaches the target
approximation ratio 1 - 1/e - epsilon or the doubling budget is exhausted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .greedy import Bounds, RRCollection, SeedResult, coverage, coverage_trace, select_seeds
from .hypergraph import WeightedGraph
from .layering import LayerCache
from .sampler import RRSet, SamplerCounters, generate_batch, resolve_expansion


@dataclass(frozen=True)
class BrrConfig:
    """Validated parameters of one bound-driven run."""

    k: int
    epsilon: float
    delta: float
    p_max: float
    theta_0: int
    theta_max: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if not 0.0 < self.epsilon < 1.0 or not 0.0 < self.delta < 1.0:
            raise ValueError("epsilon and delta must lie in (0, 1)")
        if self.target_ratio <= 0.0:
            raise ValueError(f"epsilon {self.epsilon} leaves no approximation slack "
                             f"(needs epsilon < 1 - 1/e)")
        if not 0.0 < self.p_max <= 1.0:
            raise ValueError("p_max must lie in (0, 1]")
        if self.theta_0 < 1 or self.theta_max < self.theta_0:
            raise ValueError("need 1 <= theta_0 <= theta_max")

    @property
    def target_ratio(self) -> float:
        return 1.0 - 1.0 / math.e - self.epsilon


@dataclass(frozen=True)
class Partition:
    """Disjoint split of generated RR sets, with the division statistics."""

    r1: RRCollection
    r2: RRCollection
    alpha: float
    beta: float


@dataclass(frozen=True)
class BrrIteration:
    """One doubling round: sizes, bounds, and whether the ratio test passed."""

    index: int
    theta: int
    coverage: int
    lower: float
    upper: float
    ratio: float
    stopped: bool


def compute_division_stats(graph: WeightedGraph,
                           layers: LayerCache | None = None) -> tuple[float, float]:
    """Return (alpha, beta): first-layer vertex share and mean layer count."""
    if layers is None:
        layers = LayerCache(graph)
    first = 0
    total = 0
    layer_count = 0
    for v in range(graph.vertex_count):
        neigh = layers.get(v)
        if neigh.layer_count:
            first += len(neigh.layers[0].members)
            total += neigh.degree
            layer_count += neigh.layer_count
    if total == 0:
        raise ValueError("graph has no edges; division statistics are undefined")
    return first / total, layer_count / graph.vertex_count


def assign_to_r1(rr: RRSet, alpha: float, beta: float) -> bool:
    """Partition predicate: True when the root's first ceil(beta) layers are small.

    A layer is small when its size is strictly below alpha times the root's
    degree. Alternative readings of the rule can swap this one function.
    """
    if not rr.expansions:
        return True
    _, layer_sizes = rr.expansions[0]
    if not layer_sizes:
        return True
    degree = sum(layer_sizes)
    limit = min(len(layer_sizes), math.ceil(beta))
    return all(layer_sizes[i] < alpha * degree for i in range(limit))


def partition_rr(sets, alpha: float, beta: float, universe_size: int) -> Partition:
    """Split RR sets into R1/R2 by the per-root layer rule."""
    r1 = []
    r2 = []
    for rr in sets:
        (r1 if assign_to_r1(rr, alpha, beta) else r2).append(rr)
    return Partition(RRCollection(r1, universe_size), RRCollection(r2, universe_size),
                     alpha, beta)


def _marginals(collection: RRCollection, covered: bytearray) -> dict[int, int]:
    gains: dict[int, int] = {}
    for idx, rr in enumerate(collection.sets):
        if not covered[idx]:
            for v in rr.members:
                gains[v] = gains.get(v, 0) + 1
    return gains


def upper_bound(r1: RRCollection, k: int, p_max: float) -> float:
    """Upper-bound the optimal influence from the greedy trace on R1.

    Takes the minimum over greedy prefixes of coverage plus p_max times the
    k largest marginal gains, caps it with the diminishing-returns bound
    greedy_coverage / (1 - (1 - 1/(k*p_max))^k) when that expression is
    valid, and scales to the influence domain.
    """
    if len(r1) == 0:
        raise ValueError("R1 is empty")
    if p_max <= 0.0:
        raise ValueError("p_max must be positive")
    result = select_seeds(r1, k)
    covered = bytearray(len(r1.sets))
    n_covered = 0
    best = math.inf
    for i in range(len(result.seeds) + 1):
        gains = sorted(_marginals(r1, covered).values(), reverse=True)
        term = n_covered + p_max * sum(gains[:k])
        best = min(best, term)
        if i < len(result.seeds):
            for idx in r1.indices_containing(result.seeds[i]):
                if not covered[idx]:
                    covered[idx] = 1
                    n_covered += 1
    if k * p_max > 1.0:
        cap = result.coverage / (1.0 - (1.0 - 1.0 / (k * p_max)) ** k)
        best = min(best, cap)
    return best * r1.universe_size / len(r1)


def lower_bound(r2: RRCollection, seeds, delta: float) -> float:
    """Concentration lower bound on the seeds' influence, from their R2 coverage."""
    if len(r2) == 0:
        raise ValueError("R2 is empty")
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie in (0, 1)")
    cov = coverage(r2, seeds)
    log_term = math.log(1.0 / delta)
    value = (math.sqrt(cov + 2.0 * log_term / 9.0)
             - math.sqrt(log_term / 2.0)) ** 2 - log_term / 18.0
    return max(0.0, value) * r2.universe_size / len(r2)


def theta_max(n: int, k: int, epsilon: float) -> int:
    """RR-set budget cap for an (epsilon, k) run on n vertices."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if not 0.0 < epsilon < 1.0:
        raise ValueError("epsilon must lie in (0, 1)")
    log_binom = (math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1))
    root = math.sqrt(math.log(2.0 / epsilon)) + math.sqrt(log_binom + math.log(6.0 / epsilon))
    return math.ceil(2.0 * n * root * root / (epsilon * epsilon * k))


def run_brr(graph: WeightedGraph, k: int, epsilon: float, delta: float,
            master_seed: int, model: str = "ic", workers: int = 1,
            layers: LayerCache | None = None, algorithm: str = "hyperim",
            theta_0: int | None = None) -> SeedResult:
    """Doubling loop: generate, partition, bound, and stop on the ratio test.

    Previously generated sets are kept and new ones appended each round, so
    the total after round r is theta_0 * 2**(r-1). The per-round failure
    budget is delta split uniformly over the doubling cap. When the layer
    rule routes every set to one group (e.g. all edge weights equal), the
    round falls back to an even/odd index split so the bounds stay usable.
    """
    expand = resolve_expansion(algorithm, model)
    if layers is None:
        layers = LayerCache(graph)
    n = graph.vertex_count
    alpha, beta = compute_division_stats(graph, layers)
    p_max = layers.max_member_probability()
    cap = theta_max(n, k, epsilon)
    if theta_0 is None:
        theta_0 = max(1, math.ceil(cap * epsilon * epsilon * k / n))
    config = BrrConfig(k, epsilon, delta, p_max, theta_0, max(cap, theta_0))
    rounds = max(1, math.ceil(math.log2(config.theta_max / config.theta_0)))
    delta_i = delta / rounds

    sets: list[RRSet] = []
    totals = SamplerCounters()
    trace: list[BrrIteration] = []
    seeds: tuple[int, ...] = ()
    lower = upper = ratio = 0.0

    for r in range(1, rounds + 1):
        target = config.theta_0 * 2 ** (r - 1)
        for rr, counters in generate_batch(layers, expand, master_seed,
                                           len(sets), target, workers):
            sets.append(rr)
            totals.merge(counters)
        part = partition_rr(sets, alpha, beta, n)
        if not (len(part.r1) and len(part.r2)):
            part = Partition(RRCollection(sets[0::2], n), RRCollection(sets[1::2], n),
                             alpha, beta)
        if len(part.r1) and len(part.r2):
            seeds = select_seeds(part.r1, k).seeds
            upper = upper_bound(part.r1, k, p_max)
            lower = lower_bound(part.r2, seeds, delta_i)
            ratio = lower / upper if upper > 0.0 else 0.0
        else:  # a single generated set so far
            seeds = select_seeds(RRCollection(sets, n), k).seeds
            lower = upper = ratio = 0.0
        stopped = ratio >= config.target_ratio
        full_cov = _union_coverage(sets, seeds)
        trace.append(BrrIteration(r, target, full_cov, lower, upper, ratio, stopped))
        if stopped:
            break

    full = RRCollection(sets, n, counters=totals)
    final_trace = coverage_trace(full, seeds)
    cov = final_trace[-1] if final_trace else 0
    return SeedResult(
        seeds=seeds,
        coverage=cov,
        coverage_trace=final_trace,
        influence_estimate=n * cov / len(sets),
        rr_count=len(sets),
        iterations=len(trace),
        bounds=Bounds(lower, upper, ratio),
        counters=totals,
        brr_trace=tuple(trace),
    )


def _union_coverage(sets, seeds) -> int:
    seed_set = set(seeds)
    return sum(1 for rr in sets if not seed_set.isdisjoint(rr.members))
