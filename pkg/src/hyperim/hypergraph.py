"""Hypergraph loading, clique expansion into a weighted graph, and dataset stats.

Vertex ids are dense, 0-based integers. Hyperedges are stored in input order
as sorted, duplicate-free tuples; duplicate hyperedges are kept as separate
entries and each contributes to edge weights. All structures are immutable
after construction and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterable, Iterator


class HypergraphFormatError(ValueError):
    """Malformed hypergraph input (carries a 1-based line number when known)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyInputError(ValueError):
    """Input contained no usable hyperedges (or an empty vertex set)."""


@dataclass(frozen=True)
class Hypergraph:
    """A vertex universe plus an ordered list of hyperedges.

    Each hyperedge is a sorted tuple of distinct vertex ids, all below
    ``vertex_count``.
    """

    vertex_count: int
    hyperedges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        for he in self.hyperedges:
            if not he:
                raise ValueError("hyperedges must be non-empty")
            if he[-1] >= self.vertex_count or he[0] < 0:
                raise ValueError(f"hyperedge {he} out of range [0, {self.vertex_count})")

    @classmethod
    def from_hyperedges(cls, hyperedges: Iterable[Iterable[int]],
                        vertex_count: int | None = None) -> "Hypergraph":
        """Normalize raw hyperedges: dedupe ids within each edge and sort them."""
        edges = tuple(tuple(sorted(set(he))) for he in hyperedges)
        if vertex_count is None:
            vertex_count = 1 + max((he[-1] for he in edges), default=-1)
        return cls(vertex_count, edges)

    @property
    def hyperedge_count(self) -> int:
        return len(self.hyperedges)


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected clique expansion; weights count the shared hyperedges.

    ``adjacency[v]`` is a sorted tuple of ``(neighbor, weight)`` pairs with
    ``weight >= 1`` and no self-loops; the structure is symmetric.
    """

    vertex_count: int
    adjacency: tuple[tuple[tuple[int, int], ...], ...]
    edge_count: int

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        return self.adjacency[v]


@dataclass(frozen=True)
class GraphStats:
    """Dataset summary for one hypergraph and its expansion."""

    vertex_count: int
    hyperedge_count: int
    edge_count: int
    avg_degree: float
    avg_hyperedges_per_vertex: float
    theta_lstar: float


def _parse_line(line: str, line_no: int) -> tuple[int, ...] | None:
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    ids = set()
    for token in stripped.split():
        try:
            v = int(token)
        except ValueError:
            raise HypergraphFormatError(f"non-integer token {token!r}", line_no) from None
        if v < 0:
            raise HypergraphFormatError(f"negative vertex id {v}", line_no)
        ids.add(v)
    return tuple(sorted(ids))


def load_edge_list(stream: IO[str] | Iterable[str]) -> Hypergraph:
    """Parse whitespace-separated vertex ids, one hyperedge per line.

    Lines starting with ``#`` and blank lines are skipped; duplicate ids within
    a line are dropped. The vertex universe is ``1 + max id seen``.
    """
    hyperedges = []
    for line_no, line in enumerate(stream, start=1):
        he = _parse_line(line, line_no)
        if he is not None:
            hyperedges.append(he)
    if not hyperedges:
        raise EmptyInputError("no hyperedges found in input")
    vertex_count = 1 + max(he[-1] for he in hyperedges)
    return Hypergraph(vertex_count, tuple(hyperedges))


def dump_edge_list(hypergraph: Hypergraph, stream: IO[str]) -> None:
    """Write the canonical edge-list form (one sorted hyperedge per line)."""
    for he in hypergraph.hyperedges:
        stream.write(" ".join(map(str, he)))
        stream.write("\n")


def _int_tokens(stream: IO[str] | Iterable[str], name: str) -> Iterator[int]:
    for line_no, line in enumerate(stream, start=1):
        for token in line.split():
            try:
                yield int(token)
            except ValueError:
                raise HypergraphFormatError(
                    f"non-integer token {token!r} in {name}", line_no) from None


def import_benson(nverts: IO[str] | Iterable[str],
                  simplices: IO[str] | Iterable[str]) -> Hypergraph:
    """Rebuild a hypergraph from the nverts/simplices two-file layout.

    ``nverts`` holds one hyperedge size per entry; ``simplices`` holds the
    concatenated 1-based member ids, converted here to 0-based.
    """
    sizes = list(_int_tokens(nverts, "nverts"))
    members = _int_tokens(simplices, "simplices")
    hyperedges = []
    for idx, size in enumerate(sizes):
        if size < 1:
            raise HypergraphFormatError(f"hyperedge {idx} has non-positive size {size}")
        ids = set()
        for _ in range(size):
            try:
                v = next(members)
            except StopIteration:
                raise HypergraphFormatError(
                    f"simplices ended inside hyperedge {idx} "
                    f"(expected {sum(sizes)} ids)") from None
            if v < 1:
                raise HypergraphFormatError(f"vertex id {v} is not 1-based")
            ids.add(v - 1)
        hyperedges.append(tuple(sorted(ids)))
    if not hyperedges:
        raise EmptyInputError("nverts lists no hyperedges")
    vertex_count = 1 + max(he[-1] for he in hyperedges)
    return Hypergraph(vertex_count, tuple(hyperedges))


def clique_expand(hypergraph: Hypergraph) -> WeightedGraph:
    """Expand each m-vertex hyperedge into its m(m-1)/2 pairwise edges.

    The weight of edge (u, v) is the number of hyperedges containing both
    endpoints; size-1 hyperedges contribute no edges.
    """
    weights: dict[tuple[int, int], int] = {}
    for he in hypergraph.hyperedges:
        m = len(he)
        for i in range(m):
            u = he[i]
            for j in range(i + 1, m):
                pair = (u, he[j])
                weights[pair] = weights.get(pair, 0) + 1
    neighbor_lists: list[list[tuple[int, int]]] = [[] for _ in range(hypergraph.vertex_count)]
    for (u, v), w in weights.items():
        neighbor_lists[u].append((v, w))
        neighbor_lists[v].append((u, w))
    adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbor_lists)
    return WeightedGraph(hypergraph.vertex_count, adjacency, len(weights))


def stats(hypergraph: Hypergraph, graph: WeightedGraph) -> GraphStats:
    """Summary statistics, including the mean per-vertex layer cost l/ln(l+1).

    Isolated vertices have zero layers and contribute 0 to the layer cost.
    """
    from .layering import build_layers

    n = hypergraph.vertex_count
    if n == 0:
        raise EmptyInputError("hypergraph has no vertices")
    membership = sum(len(he) for he in hypergraph.hyperedges)
    total = 0.0
    for v in range(n):
        l = build_layers(graph, v).layer_count
        if l > 0:
            total += l / math.log(l + 1)
    return GraphStats(
        vertex_count=n,
        hyperedge_count=hypergraph.hyperedge_count,
        edge_count=graph.edge_count,
        avg_degree=2.0 * graph.edge_count / n,
        avg_hyperedges_per_vertex=membership / n,
        theta_lstar=total / n,
    )
