"""Scikit-learn style front door: fit a hypergraph, read off the seed set.

The selectors accept a ``Hypergraph``, a ``WeightedGraph``, or any iterable
of vertex-id iterables, so they compose with ``sklearn.pipeline.Pipeline``
and ``sklearn.base.clone``. All heavy lifting happens in ``fit``; parameters
are stored untouched, per the estimator contract.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin

from .bounds import run_brr
from .cascade import CascadeConfig, estimate_spread
from .greedy import select_seeds
from .layering import LayerCache
from .sampler import generate_collection
from .validation import (as_weighted_graph, check_master_seed,
                         check_positive_int, check_unit_interval)


class CliqueExpansion(TransformerMixin, BaseEstimator):
    """Stateless transformer turning hypergraph input into a weighted graph."""

    def fit(self, X, y=None):
        return self

    def transform(self, X):
        return as_weighted_graph(X)


class _SeedSelectorMixin:
    """Shared post-fit conveniences for the seed selectors."""

    def evaluate(self, runs: int = 10_000, model: str | None = None,
                 seed: int = 0, workers: int = 1):
        """Monte-Carlo spread estimate of the fitted seed set."""
        self._check_fitted()
        config = CascadeConfig(model=model or self.model, runs=runs, seed=seed)
        return estimate_spread(self.graph_, self.seeds_, config,
                               layers=self.layers_, workers=workers)

    def _check_fitted(self):
        if not hasattr(self, "seeds_"):
            raise RuntimeError("estimator is not fitted; call fit(X) first")


class HyperIM(_SeedSelectorMixin, BaseEstimator):
    """Seed selection from a fixed budget of stratified RR sets.

    Parameters
    ----------
    k : int
        Number of seeds to select.
    theta : int
        Number of RR sets to generate.
    algorithm : {"hyperim", "subsim", "naive"}
        Per-expansion sampling strategy.
    model : {"ic", "lt"}
        Cascade model the RR sets encode.
    random_state : int or None
        Master seed for the per-set rng streams; None draws fresh entropy.
    workers : int
        Worker threads for generation (does not affect results).

    Attributes
    ----------
    seeds_ : list[int]
        Selected seed vertices, in pick order.
    coverage_ : int
        RR sets covered by the seeds.
    influence_ : float
        Coverage-based influence estimate.
    result_ : SeedResult
        Full selection record, including the coverage trace and counters.
    """

    def __init__(self, k: int = 10, theta: int = 10_000, algorithm: str = "hyperim",
                 model: str = "ic", random_state: int | None = None, workers: int = 1):
        self.k = k
        self.theta = theta
        self.algorithm = algorithm
        self.model = model
        self.random_state = random_state
        self.workers = workers

    def fit(self, X, y=None):
        k = check_positive_int("k", self.k)
        theta = check_positive_int("theta", self.theta)
        workers = check_positive_int("workers", self.workers)
        graph = as_weighted_graph(X)
        seed = check_master_seed(self.random_state)
        layers = LayerCache(graph)
        collection = generate_collection(graph, theta, self.algorithm, seed,
                                         model=self.model, workers=workers, layers=layers)
        result = select_seeds(collection, k)
        self.graph_ = graph
        self.layers_ = layers
        self.collection_ = collection
        self.result_ = result
        self.seeds_ = list(result.seeds)
        self.coverage_ = result.coverage
        self.influence_ = result.influence_estimate
        self.rr_count_ = result.rr_count
        return self


class HyperIMBRR(_SeedSelectorMixin, BaseEstimator):
    """Seed selection with bound-driven doubling of the RR budget.

    Parameters
    ----------
    k : int
        Number of seeds to select.
    epsilon : float
        Approximation slack; the run targets ratio 1 - 1/e - epsilon.
    delta : float
        Total failure probability budget across doubling rounds.
    model : {"ic", "lt"}
        Cascade model.
    random_state : int or None
        Master seed; None draws fresh entropy.
    workers : int
        Worker threads for generation.

    Attributes
    ----------
    seeds_ : list[int]
    lower_, upper_, ratio_ : float
        Final influence bounds and their ratio.
    iterations_ : int
        Doubling rounds executed.
    result_ : SeedResult
        Full record including the per-round trace.
    """

    def __init__(self, k: int = 10, epsilon: float = 0.1, delta: float = 0.1,
                 model: str = "ic", random_state: int | None = None, workers: int = 1):
        self.k = k
        self.epsilon = epsilon
        self.delta = delta
        self.model = model
        self.random_state = random_state
        self.workers = workers

    def fit(self, X, y=None):
        k = check_positive_int("k", self.k)
        epsilon = check_unit_interval("epsilon", self.epsilon)
        delta = check_unit_interval("delta", self.delta)
        workers = check_positive_int("workers", self.workers)
        graph = as_weighted_graph(X)
        seed = check_master_seed(self.random_state)
        layers = LayerCache(graph)
        result = run_brr(graph, k, epsilon, delta, seed, model=self.model,
                         workers=workers, layers=layers)
        self.graph_ = graph
        self.layers_ = layers
        self.result_ = result
        self.seeds_ = list(result.seeds)
        self.coverage_ = result.coverage
        self.influence_ = result.influence_estimate
        self.rr_count_ = result.rr_count
        self.iterations_ = result.iterations
        self.lower_ = result.bounds.lower
        self.upper_ = result.bounds.upper
        self.ratio_ = result.bounds.ratio
        return self
