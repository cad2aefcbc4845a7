#include "mlds/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace mlds {

std::vector<Edge> chung_lu_layer(int n, double exponent, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("chung_lu_layer: n < 1");
    if (exponent <= 2.0) throw std::invalid_argument("chung_lu_layer: exponent must be > 2");

    // Pareto with minimum 1 via inverse CDF: d = u^(-1/(exponent-1)).
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> d(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& dv : d) {
        double u;
        do {
            u = unit(rng);
        } while (u == 0.0);
        dv = std::pow(u, -1.0 / (exponent - 1.0));
        sum += dv;
    }
    // Capping at sqrt(sum) keeps every pair probability d_u d_v / sum <= 1.
    const double cap = std::sqrt(sum);
    for (double& dv : d) dv = std::min(dv, cap);

    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const double p = d[static_cast<std::size_t>(u)] * d[static_cast<std::size_t>(v)] / sum;
            if (unit(rng) < p) edges.push_back({u, v, 1.0});
        }
    }
    return edges;
}

MultilayerGraph plant_clique(const MultilayerGraph& g, const VertexSubset& v_c,
                             const std::vector<int>& target_layers) {
    if (v_c.size() < 2) throw std::invalid_argument("plant_clique: need at least 2 vertices");
    std::vector<std::vector<Edge>> layer_edges(static_cast<std::size_t>(g.num_layers()));
    for (int i = 0; i < g.num_layers(); ++i) {
        layer_edges[static_cast<std::size_t>(i)] = g.layer(i).edges();
    }
    const auto& members = v_c.members();
    for (int layer : target_layers) {
        auto& edges = layer_edges.at(static_cast<std::size_t>(layer));
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                edges.push_back({members[a], members[b], 1.0});
            }
        }
    }
    return MultilayerGraph(g.num_vertices(), std::move(layer_edges), g.labels());
}

SynthResult generate(const SynthSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generate: n < 1");
    if (spec.clique_size < 0 || spec.clique_size > spec.n) {
        throw std::invalid_argument("generate: clique size out of range");
    }
    if (spec.num_layers < 1) throw std::invalid_argument("generate: needs a layer");

    std::vector<std::vector<Edge>> layers(static_cast<std::size_t>(spec.num_layers));
    // seed_seq keeps only 32 bits per entry, so split the seed.
    auto substream = [&](std::uint32_t stream) {
        std::seed_seq seq{static_cast<std::uint32_t>(spec.seed),
                          static_cast<std::uint32_t>(spec.seed >> 32), stream};
        return std::mt19937_64(seq);
    };
    for (int i = 0; i < spec.num_layers; ++i) {
        auto rng = substream(static_cast<std::uint32_t>(i) + 1);
        layers[static_cast<std::size_t>(i)] = chung_lu_layer(spec.n, spec.exponent, rng);
    }
    MultilayerGraph graph(spec.n, std::move(layers));

    SynthResult result{std::move(graph), VertexSubset(), {}};
    if (spec.clique_size >= 2) {
        auto rng = substream(0);
        std::vector<Vertex> ids(static_cast<std::size_t>(spec.n));
        for (Vertex v = 0; v < spec.n; ++v) ids[static_cast<std::size_t>(v)] = v;
        std::shuffle(ids.begin(), ids.end(), rng);
        ids.resize(static_cast<std::size_t>(spec.clique_size));
        result.clique = VertexSubset(std::move(ids));

        if (spec.clique_layers == CliqueLayers::All) {
            for (int i = 0; i < spec.num_layers; ++i) result.planted_layers.push_back(i);
        } else {
            std::uniform_int_distribution<int> pick(0, spec.num_layers - 1);
            result.planted_layers.push_back(pick(rng));
        }
        result.graph = plant_clique(result.graph, result.clique, result.planted_layers);
    }
    return result;
}

FScore f_measure(const SubsetDistribution& dist, const VertexSubset& v_c) {
    if (v_c.empty()) throw std::invalid_argument("f_measure: empty planted set");
    FScore score;
    for (const Atom& a : dist.atoms) {
        const double overlap = static_cast<double>(a.subset.intersection_size(v_c));
        score.precision += a.probability * overlap / static_cast<double>(a.subset.size());
        score.recall += a.probability * overlap / static_cast<double>(v_c.size());
    }
    const double pr = score.precision + score.recall;
    score.f = pr > 0.0 ? 2.0 * score.precision * score.recall / pr : 0.0;
    return score;
}

VertexSubset extract_subset(const SubsetDistribution& dist, ExtractRule rule,
                            const MultilayerGraph& g, const MetricConfig& cfg,
                            std::uint64_t seed) {
    if (dist.atoms.empty()) throw std::invalid_argument("extract_subset: empty support");
    switch (rule) {
        case ExtractRule::Sample: {
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            double r = unit(rng);
            for (const Atom& a : dist.atoms) {
                r -= a.probability;
                if (r <= 0.0) return a.subset;
            }
            return dist.atoms.back().subset;  // guard against round-off
        }
        case ExtractRule::HighestProb: {
            const Atom* best = &dist.atoms.front();
            for (const Atom& a : dist.atoms) {
                if (a.probability > best->probability ||
                    (a.probability == best->probability &&
                     a.subset.size() < best->subset.size())) {
                    best = &a;
                }
            }
            return best->subset;
        }
        case ExtractRule::BestMetric: {
            const Atom* best = nullptr;
            double best_value = -kInf;
            for (const Atom& a : dist.atoms) {
                double worst = kInf;
                for (int i = 0; i < g.num_layers(); ++i) {
                    worst = std::min(worst,
                                     cfg.alpha[i] * g.density(i, a.subset) + cfg.beta[i]);
                }
                if (worst > best_value) {
                    best_value = worst;
                    best = &a;
                }
            }
            return best->subset;
        }
    }
    throw std::logic_error("unreachable");
}

VertexSubset dcs_greedy(const MultilayerGraph& g) {
    const Vertex n = g.num_vertices();
    const int k = g.num_layers();
    bool any_edges = false;
    for (int i = 0; i < k; ++i) any_edges |= g.layer(i).num_edges() > 0;
    if (!any_edges) throw std::invalid_argument("dcs_greedy: every layer is empty");

    std::vector<std::vector<double>> degree(static_cast<std::size_t>(k));
    std::vector<double> weight(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        degree[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            degree[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] =
                g.layer(i).weighted_degree(v);
        }
        weight[static_cast<std::size_t>(i)] = g.layer(i).total_weight();
    }
    std::vector<double> aggregate(static_cast<std::size_t>(n), 0.0);
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 0; i < k; ++i) {
            aggregate[static_cast<std::size_t>(v)] +=
                degree[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
        }
    }

    auto min_density = [&](int remaining) {
        double worst = kInf;
        for (int i = 0; i < k; ++i) {
            worst = std::min(worst, weight[static_cast<std::size_t>(i)] / remaining);
        }
        return worst;
    };

    using Entry = std::pair<double, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) heap.emplace(aggregate[static_cast<std::size_t>(v)], v);

    std::vector<Vertex> removal_order;
    int remaining = n;
    double best = min_density(remaining);
    int best_remaining = remaining;
    while (remaining > 1) {
        auto [key, v] = heap.top();
        heap.pop();
        if (removed[static_cast<std::size_t>(v)] ||
            key != aggregate[static_cast<std::size_t>(v)]) {
            continue;
        }
        removed[static_cast<std::size_t>(v)] = 1;
        removal_order.push_back(v);
        --remaining;
        for (int i = 0; i < k; ++i) {
            for (auto [u, w] : g.layer(i).neighbors(v)) {
                if (removed[static_cast<std::size_t>(u)]) continue;
                degree[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] -= w;
                aggregate[static_cast<std::size_t>(u)] -= w;
                heap.emplace(aggregate[static_cast<std::size_t>(u)], u);
                // Edges to already-removed neighbors left the total earlier.
                weight[static_cast<std::size_t>(i)] -= w;
            }
        }
        const double current = min_density(remaining);
        if (current > best) {
            best = current;
            best_remaining = remaining;
        }
    }

    std::vector<Vertex> members;
    std::vector<char> dropped(static_cast<std::size_t>(n), 0);
    const int to_drop = n - best_remaining;
    for (int j = 0; j < to_drop; ++j) {
        dropped[static_cast<std::size_t>(removal_order[static_cast<std::size_t>(j)])] = 1;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!dropped[static_cast<std::size_t>(v)]) members.push_back(v);
    }
    return VertexSubset(std::move(members));
}

EvalReport evaluate(const SubsetDistribution& dist, const MultilayerGraph& g,
                    const MetricConfig& cfg, const std::optional<VertexSubset>& planted) {
    EvalReport report;
    report.worst_value = kInf;
    for (int i = 0; i < g.num_layers(); ++i) {
        PerLayerReport r;
        r.layer = i;
        for (const Atom& a : dist.atoms) {
            r.expected_density += a.probability * g.density(i, a.subset);
        }
        r.expected_metric = cfg.alpha[i] * r.expected_density + cfg.beta[i];
        if (r.expected_metric < report.worst_value) {
            report.worst_value = r.expected_metric;
            report.worst_layer = i;
        }
        report.per_layer.push_back(r);
    }
    if (planted) report.f_score = f_measure(dist, *planted);
    return report;
}

}  // namespace mlds
