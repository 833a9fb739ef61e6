"""Input validation and coercion helpers shared by estimators and the CLI."""

from __future__ import annotations

import numpy as np

from .hypergraph import Hypergraph, WeightedGraph, clique_expand


def as_hypergraph(X) -> Hypergraph:
    """Coerce ``X`` (Hypergraph or iterable of vertex-id iterables) to a Hypergraph."""
    if isinstance(X, Hypergraph):
        return X
    if isinstance(X, WeightedGraph):
        raise TypeError("a WeightedGraph cannot be converted back to a Hypergraph")
    try:
        return Hypergraph.from_hyperedges(X)
    except TypeError:
        raise TypeError(f"cannot interpret {type(X).__name__} as a hypergraph") from None


def as_weighted_graph(X) -> WeightedGraph:
    """Coerce ``X`` to a WeightedGraph, clique-expanding hypergraph input."""
    if isinstance(X, WeightedGraph):
        return X
    return clique_expand(as_hypergraph(X))


def check_master_seed(random_state) -> int:
    """Resolve a master seed: None draws fresh entropy, ints pass through."""
    if random_state is None:
        return int(np.random.SeedSequence().entropy) % (2 ** 63)
    if isinstance(random_state, (int, np.integer)):
        if random_state < 0:
            raise ValueError("random_state must be non-negative")
        return int(random_state)
    raise TypeError(f"random_state must be None or an int, got {type(random_state).__name__}")


def check_positive_int(name: str, value, minimum: int = 1) -> int:
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
        raise TypeError(f"{name} must be an integer")
    if value < minimum:
        raise ValueError(f"{name} must be at least {minimum}, got {value}")
    return int(value)


def check_unit_interval(name: str, value) -> float:
    value = float(value)
    if not 0.0 < value < 1.0:
        raise ValueError(f"{name} must lie strictly inside (0, 1), got {value}")
    return value
