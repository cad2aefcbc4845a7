#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlds/graph.hpp"
#include "mlds/single_layer.hpp"

namespace mlds {

enum class MetricKind { Density, RobustRatio, Regret };

MetricKind parse_metric(const std::string& name);
std::string metric_name(MetricKind kind);

// Per-layer affine rescaling of density: layer i contributes
// alpha[i] * density_i(S) + beta[i].
struct MetricConfig {
    MetricKind kind = MetricKind::Density;
    std::vector<double> alpha;
    std::vector<double> beta;
    // Single-layer optima, populated when the metric needs them.
    std::vector<LayerOptimum> layer_optima;

    double value(const MultilayerGraph& g, int layer, const VertexSubset& s) const {
        return alpha[layer] * g.density(layer, s) + beta[layer];
    }
};

// Computes the affine coefficients, solving each layer's densest-subgraph
// problem exactly where the metric requires it.  Throws std::invalid_argument
// if the ratio metric is requested and some layer has optimal density 0.
MetricConfig make_metric_config(const MultilayerGraph& g, MetricKind kind);

/// Same, but with the single-layer optima already known.
MetricConfig make_metric_config(const MultilayerGraph& g, MetricKind kind,
                                std::vector<LayerOptimum> layer_optima);

}  // namespace mlds
