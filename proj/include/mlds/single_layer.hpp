#pragma once

#include <utility>

#include "mlds/graph.hpp"

namespace mlds {

/// Densest subgraph of one layer: the subset S_i* and its density.
struct LayerOptimum {
    int layer = 0;
    VertexSubset subset;
    double opt_density = 0.0;
};

/// Charikar's greedy peeling: repeatedly delete a minimum-weighted-degree
/// vertex (ties to the lowest id) and return the densest prefix. The result
/// is a 1/2-approximation of the layer's densest subgraph.
/// O(m + n log n) via a lazy priority queue. Throws if the layer is empty.
std::pair<VertexSubset, double> greedy_peeling(const MultilayerGraph& g, int layer);

/// Delete vertices whose weighted degree in the layer is strictly below
/// lower_bound, cascading, and return the induced multilayer graph on the
/// survivors. Safe whenever lower_bound is at most the layer's optimal
/// density: every densest subgraph survives.
MultilayerGraph balalau_prune(const MultilayerGraph& g, int layer, double lower_bound);

/// Exact densest subgraph of one layer via the LP relaxation, seeded by
/// greedy peeling and Balalau pruning. Returns the largest optimal subset.
LayerOptimum densest_exact(const MultilayerGraph& g, int layer);

}  // namespace mlds
