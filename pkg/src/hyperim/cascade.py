"""Forward Monte-Carlo simulation of IC and LT cascades on the weighted graph.

The probability that an active vertex u activates its neighbor v is u's
member probability inside v's layered sample set (the same probability the
reverse samplers use), so forward spread and RR-based estimates agree. Note
this makes p(u -> v) and p(v -> u) differ in general even though the graph
is undirected; swap ``activation_probability`` to explore other policies.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .hypergraph import WeightedGraph
from .layering import LayerCache


@dataclass(frozen=True)
class CascadeConfig:
    """Simulation settings for spread estimation."""

    model: str = "ic"
    runs: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.model not in ("ic", "lt"):
            raise ValueError(f"unknown cascade model {self.model!r}")
        if self.runs < 1:
            raise ValueError("runs must be at least 1")


@dataclass(frozen=True)
class SpreadEstimate:
    mean: float
    stderr: float
    runs: int


def activation_probability(layers: LayerCache, target: int, source: int) -> float:
    """Probability that active ``source`` activates ``target`` in one attempt."""
    return layers.get(target).probability_of(source)


def _check_seeds(graph: WeightedGraph, seeds: Sequence[int]) -> list[int]:
    seeds = sorted(set(seeds))
    if not seeds:
        raise ValueError("seed set is empty")
    if seeds[0] < 0 or seeds[-1] >= graph.vertex_count:
        raise ValueError("seed id outside vertex range")
    return seeds


def simulate_ic(graph: WeightedGraph, layers: LayerCache, seeds: Iterable[int],
                rng: np.random.Generator, probability=activation_probability) -> int:
    """One independent-cascade run; returns the number of activated vertices.

    Each vertex activated at step i attempts each still-inactive neighbor
    exactly once at step i+1.
    """
    frontier = _check_seeds(graph, seeds)
    active = set(frontier)
    while frontier:
        next_frontier = []
        for v in frontier:
            for w, _ in graph.adjacency[v]:
                if w not in active and rng.random() < probability(layers, w, v):
                    active.add(w)
                    next_frontier.append(w)
        frontier = next_frontier
    return len(active)


def simulate_lt(graph: WeightedGraph, layers: LayerCache, seeds: Iterable[int],
                rng: np.random.Generator, probability=activation_probability) -> int:
    """One linear-threshold run; returns the number of activated vertices.

    Thresholds are drawn once per vertex per run; a vertex activates when the
    probability mass of its active neighbors reaches its threshold.
    """
    frontier = _check_seeds(graph, seeds)
    active = set(frontier)
    thresholds = rng.random(graph.vertex_count)
    load = [0.0] * graph.vertex_count
    while frontier:
        candidates = set()
        for v in frontier:
            for w, _ in graph.adjacency[v]:
                if w not in active:
                    load[w] += probability(layers, w, v)
                    candidates.add(w)
        frontier = [w for w in sorted(candidates) if load[w] >= thresholds[w]]
        active.update(frontier)
    return len(active)


def estimate_spread(graph: WeightedGraph, seeds: Sequence[int], config: CascadeConfig,
                    layers: LayerCache | None = None, workers: int = 1,
                    probability=activation_probability) -> SpreadEstimate:
    """Mean and standard error of the spread over independent runs.

    Run ``r`` uses an rng stream derived from ``(config.seed, r)``, so the
    estimate is deterministic for any worker count.
    """
    if layers is None:
        layers = LayerCache(graph)
    simulate = simulate_ic if config.model == "ic" else simulate_lt

    def one_run(r: int) -> int:
        return simulate(graph, layers, seeds, np.random.default_rng((config.seed, r)),
                        probability=probability)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sizes = np.fromiter(pool.map(one_run, range(config.runs)), dtype=np.int64,
                                count=config.runs)
    else:
        sizes = np.fromiter((one_run(r) for r in range(config.runs)), dtype=np.int64,
                            count=config.runs)
    mean = float(sizes.mean())
    stderr = float(sizes.std(ddof=1) / math.sqrt(config.runs)) if config.runs > 1 else 0.0
    return SpreadEstimate(mean=mean, stderr=stderr, runs=config.runs)
