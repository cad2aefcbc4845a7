#include "mlds/metric.hpp"

namespace mlds {

MetricKind parse_metric(const std::string& name) {
    if (name == "density") return MetricKind::Density;
    if (name == "robust-ratio" || name == "robust_ratio") return MetricKind::RobustRatio;
    if (name == "regret") return MetricKind::Regret;
    throw std::invalid_argument("unknown metric: " + name);
}

std::string metric_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::Density: return "density";
        case MetricKind::RobustRatio: return "robust-ratio";
        case MetricKind::Regret: return "regret";
    }
    throw std::logic_error("unreachable");
}

MetricConfig make_metric_config(const MultilayerGraph& g, MetricKind kind) {
    std::vector<LayerOptimum> optima;
    if (kind != MetricKind::Density) {
        const int k = g.num_layers();
        optima.reserve(k);
        for (int i = 0; i < k; ++i) {
            if (g.layer(i).num_edges() == 0) {
                optima.push_back({i, VertexSubset({0}), 0.0});
            } else {
                optima.push_back(densest_exact(g, i));
            }
        }
    }
    return make_metric_config(g, kind, std::move(optima));
}

MetricConfig make_metric_config(const MultilayerGraph& g, MetricKind kind,
                                std::vector<LayerOptimum> layer_optima) {
    const int k = g.num_layers();
    MetricConfig cfg;
    cfg.kind = kind;
    cfg.alpha.assign(k, 1.0);
    cfg.beta.assign(k, 0.0);
    cfg.layer_optima = std::move(layer_optima);
    if (kind == MetricKind::Density) return cfg;

    if (static_cast<int>(cfg.layer_optima.size()) != k) {
        throw std::invalid_argument("metric config needs one layer optimum per layer");
    }
    for (int i = 0; i < k; ++i) {
        const double opt = cfg.layer_optima[i].opt_density;
        if (kind == MetricKind::RobustRatio) {
            if (opt <= 0.0) {
                throw std::invalid_argument(
                    "robust-ratio metric requires positive optimal density in every layer; "
                    "layer " + std::to_string(i) + " has none");
            }
            cfg.alpha[i] = 1.0 / opt;
        } else {  // Regret: maximize min_i (density_i - opt_i); report negated.
            cfg.beta[i] = -opt;
        }
    }
    return cfg;
}

}  // namespace mlds
