#pragma once

#include <vector>

#include "mlds/graph.hpp"
#include "mlds/metric.hpp"

namespace mlds {

/// A certified lower bound on the optimal worst-layer metric value, together
/// with the distribution over single-layer optimal subsets that attains it.
struct LowerBound {
    double value = 0.0;
    std::vector<double> weights;  // one probability per layer optimum
    std::vector<LayerOptimum> layer_optima;
};

/// Computes the best mixture of the k single-layer optimal subsets: a small
/// LP with one probability per layer. Its value never exceeds the optimum,
/// so it is a safe pruning threshold. cfg.layer_optima may be empty, in
/// which case each layer's densest subgraph is solved here.
LowerBound lower_bound_lp(const MultilayerGraph& g, const MetricConfig& cfg);

struct PruneResult {
    MultilayerGraph graph;
    std::vector<Vertex> original_ids;  // kept vertex -> id in the input graph
    int removed_vertices = 0;
    long removed_edges = 0;
    // True when every vertex was removed. That can only happen when the
    // caller passed a bound above the true optimum, so treat it as a bug.
    bool emptied = false;
};

/// Iteratively deletes any vertex v whose rescaled degree
/// max_i (alpha_i * d_i(V', v) + beta_i) stays strictly below lower_bound.
/// Every subset whose worst-layer metric reaches lower_bound survives
/// intact, so an exact solve on the result is an exact solve on the input.
/// O(k|E| + |V| log |V|) via lazy priority queues.
PruneResult remove_useless(const MultilayerGraph& g, const MetricConfig& cfg,
                           double lower_bound);

}  // namespace mlds
