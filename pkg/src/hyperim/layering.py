"""Stratification of a vertex's sample set into equal-weight layers.

The sample set A(v) of a vertex v is the set of neighbors that can activate
it. Neighbors are grouped by edge weight into layers ordered by strictly
decreasing weight; the i-th layer (1-based) carries total activation
probability 1 / (i * ln(l + 1)) where l is the number of layers, split evenly
among its members and clamped to 1 per member.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import IO

from .hypergraph import WeightedGraph


def layer_probability(index: int, layer_count: int) -> float:
    """Total activation probability of layer ``index`` (1-based), unclamped."""
    if not 1 <= index <= layer_count:
        raise ValueError(f"layer index {index} outside [1, {layer_count}]")
    return 1.0 / (index * math.log(layer_count + 1))


def member_probability(layer_prob: float, size: int) -> float:
    """Per-member share of a layer's probability, clamped to 1."""
    if size < 1:
        raise ValueError("layer size must be at least 1")
    return min(1.0, layer_prob / size)


@dataclass(frozen=True)
class Layer:
    """One weight class of a sample set; members share one probability."""

    weight: int
    members: tuple[int, ...]
    layer_prob: float
    member_prob: float

    def __post_init__(self):
        if self.weight < 1:
            raise ValueError("layer weight must be positive")
        if not self.members:
            raise ValueError("layer must have members")
        if not 0.0 < self.member_prob <= 1.0:
            raise ValueError("member_prob must lie in (0, 1]")

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class LayeredNeighborhood:
    """A vertex's sample set partitioned into layers of decreasing weight."""

    root: int
    layers: tuple[Layer, ...]

    @property
    def layer_count(self) -> int:
        return len(self.layers)

    @property
    def degree(self) -> int:
        return sum(len(layer.members) for layer in self.layers)

    @cached_property
    def _member_probs(self) -> dict[int, float]:
        return {v: layer.member_prob for layer in self.layers for v in layer.members}

    def probability_of(self, v: int) -> float:
        """Activation probability of sample-set member ``v`` on the root."""
        return self._member_probs[v]


def build_layers(graph: WeightedGraph, root: int) -> LayeredNeighborhood:
    """Group the root's neighbors by edge weight into probability layers.

    Pure function of the graph: equal-weight neighbors always share a layer,
    members are listed in ascending id order, and an isolated root yields
    zero layers.
    """
    if not 0 <= root < graph.vertex_count:
        raise ValueError(f"root {root} outside [0, {graph.vertex_count})")
    by_weight: dict[int, list[int]] = {}
    for neighbor, weight in graph.adjacency[root]:
        by_weight.setdefault(weight, []).append(neighbor)
    l = len(by_weight)
    layers = []
    for i, weight in enumerate(sorted(by_weight, reverse=True), start=1):
        members = tuple(by_weight[weight])  # adjacency is id-sorted already
        lp = layer_probability(i, l)
        layers.append(Layer(weight, members, lp, member_probability(lp, len(members))))
    return LayeredNeighborhood(root, tuple(layers))


class LayerCache:
    """Lazy per-vertex memo of layered neighborhoods.

    RR generation touches only a subset of vertices, so neighborhoods are
    built on first access. Concurrent readers may race to compute the same
    vertex; the computation is idempotent so last-write-wins is harmless.
    """

    def __init__(self, graph: WeightedGraph):
        self.graph = graph
        self._cache: dict[int, LayeredNeighborhood] = {}

    def get(self, v: int) -> LayeredNeighborhood:
        neigh = self._cache.get(v)
        if neigh is None:
            neigh = build_layers(self.graph, v)
            self._cache[v] = neigh
        return neigh

    def max_member_probability(self) -> float:
        """Largest clamped member probability over the whole graph."""
        best = 0.0
        for v in range(self.graph.vertex_count):
            for layer in self.get(v).layers:
                if layer.member_prob > best:
                    best = layer.member_prob
        return best


def dump_layers_csv(graph: WeightedGraph, stream: IO[str]) -> None:
    """Debug dump: one row per (vertex, layer)."""
    stream.write("vertex,layer_index,weight,size,layer_prob,member_prob\n")
    for v in range(graph.vertex_count):
        neigh = build_layers(graph, v)
        for i, layer in enumerate(neigh.layers, start=1):
            stream.write(f"{v},{i},{layer.weight},{layer.size},"
                         f"{layer.layer_prob:.12g},{layer.member_prob:.12g}\n")
