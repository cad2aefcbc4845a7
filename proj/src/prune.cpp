#include "mlds/prune.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "mlds/lp.hpp"
#include "mlds/single_layer.hpp"

namespace mlds {

LowerBound lower_bound_lp(const MultilayerGraph& g, const MetricConfig& cfg) {
    const int k = g.num_layers();
    LowerBound result;
    result.layer_optima = cfg.layer_optima;
    if (result.layer_optima.empty()) {
        result.layer_optima.reserve(k);
        for (int i = 0; i < k; ++i) {
            if (g.layer(i).num_edges() == 0) {
                result.layer_optima.push_back({i, VertexSubset({0}), 0.0});
            } else {
                result.layer_optima.push_back(densest_exact(g, i));
            }
        }
    }

    // max t  s.t.  t <= alpha_i * sum_j density_i(S_j*) q_j + beta_i,
    //              sum_j q_j = 1,  q >= 0.
    LpInstance lp;
    std::vector<int> q(k);
    for (int j = 0; j < k; ++j) q[j] = lp.add_variable(0.0);
    const int t = lp.add_variable(1.0, -kInf, kInf);
    for (int i = 0; i < k; ++i) {
        std::vector<std::pair<int, double>> row{{t, 1.0}};
        for (int j = 0; j < k; ++j) {
            const double a = cfg.alpha[i] * g.density(i, result.layer_optima[j].subset);
            if (a != 0.0) row.emplace_back(q[j], -a);
        }
        lp.add_row(std::move(row), Relation::LessEqual, cfg.beta[i]);
    }
    {
        std::vector<std::pair<int, double>> row;
        for (int j = 0; j < k; ++j) row.emplace_back(q[j], 1.0);
        lp.add_row(std::move(row), Relation::Equal, 1.0);
    }

    auto sol = solve_basic_optimal(lp);
    if (sol.status != LpStatus::Optimal) {
        throw std::runtime_error(std::string("lower-bound LP did not solve: ") +
                                 to_string(sol.status));
    }
    result.value = sol.objective_value;
    result.weights.assign(sol.values.begin(), sol.values.begin() + k);
    return result;
}

PruneResult remove_useless(const MultilayerGraph& g, const MetricConfig& cfg,
                           double lower_bound) {
    const Vertex n = g.num_vertices();
    const int k = g.num_layers();
    // Only remove a vertex when its key is strictly below the bound by a
    // relative margin, so a bound inflated by round-off stays safe.
    const double threshold = lower_bound - 1e-9 * (1.0 + std::abs(lower_bound));

    // degree[i][v] = d_i(V', v) on the current survivor set V'.
    std::vector<std::vector<double>> degree(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        degree[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            degree[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] =
                g.layer(i).weighted_degree(v);
        }
    }
    auto key = [&](Vertex v) {
        double worst = -kInf;
        for (int i = 0; i < k; ++i) {
            worst = std::max(worst, cfg.alpha[i] * degree[static_cast<std::size_t>(i)]
                                                         [static_cast<std::size_t>(v)] +
                                        cfg.beta[i]);
        }
        return worst;
    };

    using Entry = std::pair<double, Vertex>;  // (key, id); lazy, may be stale
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) heap.emplace(key(v), v);

    int removed_count = 0;
    while (!heap.empty()) {
        auto [entry_key, v] = heap.top();
        heap.pop();
        if (removed[static_cast<std::size_t>(v)] || entry_key != key(v)) continue;
        if (entry_key >= threshold) break;  // heap minimum: nothing else qualifies
        removed[static_cast<std::size_t>(v)] = 1;
        ++removed_count;
        for (int i = 0; i < k; ++i) {
            for (auto [u, w] : g.layer(i).neighbors(v)) {
                if (removed[static_cast<std::size_t>(u)]) continue;
                degree[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] -= w;
                heap.emplace(key(u), u);
            }
        }
    }

    std::vector<Vertex> kept;
    kept.reserve(static_cast<std::size_t>(n - removed_count));
    for (Vertex v = 0; v < n; ++v) {
        if (!removed[static_cast<std::size_t>(v)]) kept.push_back(v);
    }
    auto survivor_graph =
        kept.empty()
            ? MultilayerGraph(0, std::vector<std::vector<Edge>>(static_cast<std::size_t>(k)))
            : g.induce(VertexSubset(kept));
    PruneResult result{std::move(survivor_graph), kept, removed_count, 0, kept.empty()};
    long edges_before = 0, edges_after = 0;
    for (int i = 0; i < k; ++i) {
        edges_before += static_cast<long>(g.layer(i).num_edges());
        edges_after += static_cast<long>(result.graph.layer(i).num_edges());
    }
    result.removed_edges = edges_before - edges_after;
    return result;
}

}  // namespace mlds
