"""Random RR-set generation: stratified sampling plus two baselines.

All three samplers run the same breadth-first reverse traversal and differ
only in how one expansion draws members from a layered sample set:

* stratified -- one size draw per layer (Binomial for small layers, truncated
  Poisson above the cutoff), then positional selection of that many members;
* naive      -- an independent coin flip per sample-set member;
* geometric  -- per-layer skip sampling with geometric jump lengths.

Every sampler counts its draws so operation costs can be compared exactly.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .greedy import RRCollection
from .hypergraph import WeightedGraph
from .layering import LayerCache, LayeredNeighborhood

# Layers up to this size use exact Binomial size draws; larger layers switch
# to the Poisson approximation.
BINOMIAL_CUTOFF = 20


@dataclass
class SamplerCounters:
    """Tally of randomness consumed, one field per kind of draw."""

    size_draws: int = 0
    selection_draws: int = 0
    bernoulli_draws: int = 0
    geometric_draws: int = 0

    def merge(self, other: "SamplerCounters") -> None:
        self.size_draws += other.size_draws
        self.selection_draws += other.selection_draws
        self.bernoulli_draws += other.bernoulli_draws
        self.geometric_draws += other.geometric_draws

    def total(self) -> int:
        return (self.size_draws + self.selection_draws
                + self.bernoulli_draws + self.geometric_draws)


@dataclass(frozen=True)
class RRSet:
    """A reverse reachable set plus the per-expansion layer sizes seen.

    ``expansions`` records ``(vertex, layer_sizes)`` for every vertex popped
    during the traversal, root first; it drives the R1/R2 partition rule and
    exact operation-count checks.
    """

    root: int
    members: frozenset[int]
    expansions: tuple[tuple[int, tuple[int, ...]], ...] = ()


def draw_subset_size(n: int, p: float, rng: np.random.Generator,
                     counters: SamplerCounters | None = None,
                     cutoff: int = BINOMIAL_CUTOFF) -> int:
    """Draw how many of a layer's ``n`` members fire, each with probability ``p``.

    Binomial(n, p) when n <= cutoff, else Poisson(n*p) with values above n
    rejected and redrawn. Counts as a single size draw either way.
    """
    if n < 1:
        raise ValueError("layer size must be at least 1")
    if not 0.0 < p <= 1.0:
        raise ValueError("member probability must lie in (0, 1]")
    if counters is not None:
        counters.size_draws += 1
    if n <= cutoff:
        return int(rng.binomial(n, p))
    lam = n * p
    h = int(rng.poisson(lam))
    while h > n:
        h = int(rng.poisson(lam))
    return h


def select_distinct(members, h: int, rng: np.random.Generator,
                    counters: SamplerCounters | None = None) -> list[int]:
    """Pick a uniformly random h-subset with h swap-and-shrink position draws."""
    n = len(members)
    if h > n:
        raise ValueError(f"cannot select {h} of {n} members")
    if counters is not None:
        counters.selection_draws += h
    if h == 0:
        return []
    pool = list(members)
    picked = []
    u = rng.random(h)
    for r in range(h):
        j = int(u[r] * (n - r))
        picked.append(pool[j])
        pool[j] = pool[n - r - 1]
    return picked


def sample_members_stratified(neigh: LayeredNeighborhood, rng: np.random.Generator,
                              counters: SamplerCounters,
                              cutoff: int = BINOMIAL_CUTOFF) -> list[int]:
    """One stratified expansion: a size draw then a selection per layer."""
    fired = []
    for layer in neigh.layers:
        h = draw_subset_size(len(layer.members), layer.member_prob, rng, counters, cutoff)
        if h:
            fired.extend(select_distinct(layer.members, h, rng, counters))
    return fired


def sample_members_bernoulli(neigh: LayeredNeighborhood, rng: np.random.Generator,
                             counters: SamplerCounters) -> list[int]:
    """One reverse-influence expansion: an independent flip per member."""
    fired = []
    for layer in neigh.layers:
        members = layer.members
        p = layer.member_prob
        counters.bernoulli_draws += len(members)
        u = rng.random(len(members))
        fired.extend(v for v, uv in zip(members, u) if uv < p)
    return fired


def sample_members_geometric(neigh: LayeredNeighborhood, rng: np.random.Generator,
                             counters: SamplerCounters) -> list[int]:
    """One subset-sampling expansion: geometric skips within each layer."""
    fired = []
    for layer in neigh.layers:
        members = layer.members
        n = len(members)
        p = layer.member_prob
        if p >= 1.0:
            counters.geometric_draws += n
            fired.extend(members)
            continue
        log_q = math.log(1.0 - p)
        pos = 0
        while True:
            counters.geometric_draws += 1
            # 1 - U in (0, 1] keeps the log finite; skips are at least 1.
            skip = math.ceil(math.log(1.0 - rng.random()) / log_q)
            pos += max(1, skip)
            if pos > n:
                break
            fired.append(members[pos - 1])
    return fired


def sample_single_activator(neigh: LayeredNeighborhood, rng: np.random.Generator,
                            counters: SamplerCounters) -> list[int]:
    """LT expansion: at most one member fires, none with the residual mass.

    Probabilities are rescaled only when their sum exceeds 1.
    """
    total = 0.0
    for layer in neigh.layers:
        total += layer.member_prob * len(layer.members)
    if total <= 0.0:
        return []
    scale = 1.0 / total if total > 1.0 else 1.0
    counters.selection_draws += 1
    u = rng.random()
    acc = 0.0
    for layer in neigh.layers:
        p = layer.member_prob * scale
        for v in layer.members:
            acc += p
            if u < acc:
                return [v]
    return []


def _traverse(layers: LayerCache, root: int, rng: np.random.Generator,
              expand, counters: SamplerCounters) -> RRSet:
    activated = {root}
    queue = deque((root,))
    expansions = []
    while queue:
        v = queue.popleft()
        neigh = layers.get(v)
        expansions.append((v, tuple(len(layer.members) for layer in neigh.layers)))
        for w in expand(neigh, rng, counters):
            if w not in activated:
                activated.add(w)
                queue.append(w)
    return RRSet(root, frozenset(activated), tuple(expansions))


def _check_model(model: str) -> None:
    if model not in ("ic", "lt"):
        raise ValueError(f"unknown cascade model {model!r}")


def generate_rr_stratified(graph: WeightedGraph, layers: LayerCache, root: int,
                           rng: np.random.Generator,
                           model: str = "ic") -> tuple[RRSet, SamplerCounters]:
    """Generate one RR set by stratified sampling (IC) or single-activator (LT)."""
    _check_model(model)
    counters = SamplerCounters()
    expand = sample_members_stratified if model == "ic" else sample_single_activator
    return _traverse(layers, root, rng, expand, counters), counters


def generate_rr_naive(graph: WeightedGraph, layers: LayerCache, root: int,
                      rng: np.random.Generator) -> tuple[RRSet, SamplerCounters]:
    """Generate one RR set by per-vertex coin flips (reverse influence sampling)."""
    counters = SamplerCounters()
    return _traverse(layers, root, rng, sample_members_bernoulli, counters), counters


def generate_rr_subset_geometric(graph: WeightedGraph, layers: LayerCache, root: int,
                                 rng: np.random.Generator) -> tuple[RRSet, SamplerCounters]:
    """Generate one RR set by geometric skip sampling within each layer."""
    counters = SamplerCounters()
    return _traverse(layers, root, rng, sample_members_geometric, counters), counters


# Canonical algorithm names with the per-expansion samplers they use under IC.
ALGORITHMS = {
    "hyperim": sample_members_stratified,
    "naive": sample_members_bernoulli,
    "subsim": sample_members_geometric,
}


def _task_rng(master_seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng((master_seed, index))


def generate_batch(layers: LayerCache, expand, master_seed: int, start: int,
                   stop: int, workers: int = 1) -> list[tuple[RRSet, SamplerCounters]]:
    """Generate sets for task indices [start, stop) with per-index rng streams.

    Task ``t`` derives its stream from ``(master_seed, t)`` and draws its root
    first, so output is bit-identical for any worker count and batches can be
    resumed by index.
    """
    n = layers.graph.vertex_count

    def task(t: int) -> tuple[RRSet, SamplerCounters]:
        rng = _task_rng(master_seed, t)
        root = int(rng.integers(n))
        counters = SamplerCounters()
        return _traverse(layers, root, rng, expand, counters), counters

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(task, range(start, stop)))
    return [task(t) for t in range(start, stop)]


def resolve_expansion(algorithm: str, model: str):
    """Map (algorithm, model) to a per-expansion sampler.

    The LT construction adds at most one activator per popped vertex, which
    leaves nothing for the sampling strategies to vary, so every algorithm
    shares it.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {sorted(ALGORITHMS)}")
    _check_model(model)
    return ALGORITHMS[algorithm] if model == "ic" else sample_single_activator


def generate_collection(graph: WeightedGraph, theta: int, algorithm: str,
                        master_seed: int, model: str = "ic", workers: int = 1,
                        layers: LayerCache | None = None) -> RRCollection:
    """Generate ``theta`` RR sets with roots drawn uniformly from V."""
    if theta < 1:
        raise ValueError("theta must be at least 1")
    if graph.vertex_count == 0:
        raise ValueError("graph has no vertices")
    expand = resolve_expansion(algorithm, model)
    if layers is None:
        layers = LayerCache(graph)
    results = generate_batch(layers, expand, master_seed, 0, theta, workers)
    total = SamplerCounters()
    for _, counters in results:
        total.merge(counters)
    return RRCollection([rr for rr, _ in results], graph.vertex_count, counters=total)
