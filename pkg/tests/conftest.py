import numpy as np
import pytest

from hyperim import Hypergraph, clique_expand
from hyperim.layering import LayerCache

# Two hyperedges overlap in {u3, u4}, so u4 collapses to a single neighbor of
# u3 after expansion: deg(u1) = 5 while deg(u3) = 4.
OVERLAP_HYPEREDGES = ((0, 1, 2, 3), (0, 4, 5), (2, 3, 6))

# Nine vertices, four hyperedges, all containing vertex 0. Vertex 0's sample
# set stratifies into four layers: {4 | w=4}, {2 | w=3}, {6, 7 | w=2},
# {1, 3, 5, 8 | w=1}.
LAYERED_HYPEREDGES = ((0, 1, 2, 4, 6, 7), (0, 2, 3, 4, 6, 7), (0, 2, 4, 5), (0, 4, 8))


@pytest.fixture
def overlap_hypergraph():
    return Hypergraph.from_hyperedges(OVERLAP_HYPEREDGES)


@pytest.fixture
def overlap_graph(overlap_hypergraph):
    return clique_expand(overlap_hypergraph)


@pytest.fixture
def layered_hypergraph():
    return Hypergraph.from_hyperedges(LAYERED_HYPEREDGES)


@pytest.fixture
def layered_graph(layered_hypergraph):
    return clique_expand(layered_hypergraph)


@pytest.fixture
def layered_cache(layered_graph):
    return LayerCache(layered_graph)


class ConstantRng:
    """Stub rng whose uniform draws are a fixed value (forces outcomes)."""

    def __init__(self, value: float):
        self.value = value

    def random(self, size=None):
        if size is None:
            return self.value
        return np.full(size, self.value)


class ArrayRng:
    """Stub rng that hands out a fixed array for vectorized draws."""

    def __init__(self, values):
        self.values = np.asarray(values, dtype=float)

    def random(self, size=None):
        if size is None:
            return float(self.values[0])
        assert size == len(self.values)
        return self.values.copy()


@pytest.fixture
def forced_success_rng():
    return ConstantRng(0.0)
