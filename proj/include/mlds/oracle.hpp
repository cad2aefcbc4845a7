#pragma once

#include <string>

#include "mlds/graph.hpp"
#include "mlds/metric.hpp"
#include "mlds/stochastic.hpp"

namespace mlds {

struct OracleResult {
    double value = 0.0;
    SubsetDistribution distribution;  // not necessarily chain-structured
    std::string method;
};

/// Exhaustive densest subgraph of one layer over all nonempty subsets.
/// Guarded to n <= 20. Ties go to the subset seen first in increasing
/// bitmask order.
LayerOptimum enumerate_densest(const MultilayerGraph& g, int layer);

/// Ground truth for the worst-layer rescaled density: a direct LP with one
/// probability variable per nonempty subset (max t s.t. t <= alpha_i sum_S
/// p_S density_i(S) + beta_i, sum p = 1). Structurally unrelated to the
/// edge-variable relaxation, so agreement is genuine cross-validation.
/// Guarded to n <= 12.
OracleResult oracle_ab_density(const MultilayerGraph& g, const MetricConfig& cfg);

}  // namespace mlds
