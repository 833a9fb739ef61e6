"""Influence maximization on hypergraphs via stratified RR-set sampling."""

from .bounds import (BrrConfig, BrrIteration, Partition, compute_division_stats,
                     lower_bound, partition_rr, run_brr, theta_max, upper_bound)
from .cascade import (CascadeConfig, SpreadEstimate, estimate_spread, simulate_ic,
                      simulate_lt)
from .estimators import CliqueExpansion, HyperIM, HyperIMBRR
from .greedy import (Bounds, RRCollection, SeedResult, coverage, estimate_influence,
                     marginal_coverage, select_seeds)
from .hypergraph import (EmptyInputError, GraphStats, Hypergraph,
                         HypergraphFormatError, WeightedGraph, clique_expand,
                         dump_edge_list, import_benson, load_edge_list, stats)
from .layering import (Layer, LayerCache, LayeredNeighborhood, build_layers,
                       dump_layers_csv, layer_probability, member_probability)
from .sampler import (ALGORITHMS, BINOMIAL_CUTOFF, RRSet, SamplerCounters,
                      draw_subset_size, generate_collection, generate_rr_naive,
                      generate_rr_stratified, generate_rr_subset_geometric,
                      select_distinct)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS", "BINOMIAL_CUTOFF", "Bounds", "BrrConfig", "BrrIteration",
    "CascadeConfig", "CliqueExpansion", "EmptyInputError", "GraphStats",
    "HyperIM", "HyperIMBRR", "Hypergraph", "HypergraphFormatError", "Layer",
    "LayerCache", "LayeredNeighborhood", "Partition", "RRCollection", "RRSet",
    "SamplerCounters", "SeedResult", "SpreadEstimate", "WeightedGraph",
    "build_layers", "clique_expand", "compute_division_stats", "coverage",
    "draw_subset_size", "dump_edge_list", "dump_layers_csv", "estimate_influence",
    "estimate_spread", "generate_collection", "generate_rr_naive",
    "generate_rr_stratified", "generate_rr_subset_geometric", "import_benson",
    "layer_probability", "load_edge_list", "lower_bound", "marginal_coverage",
    "member_probability", "partition_rr", "run_brr", "select_distinct",
    "select_seeds", "simulate_ic", "simulate_lt", "stats", "theta_max",
    "upper_bound",
]
