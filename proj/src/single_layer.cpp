#include "mlds/single_layer.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "mlds/lp.hpp"

namespace mlds {

namespace {

using MinHeap =
    std::priority_queue<std::pair<double, Vertex>, std::vector<std::pair<double, Vertex>>,
                        std::greater<>>;

std::vector<Vertex> survivors_above(const MultilayerGraph& g, int layer, double lower_bound) {
    const EdgeLayer& l = g.layer(layer);
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<double> degree(n);
    std::vector<bool> alive(n, true);
    MinHeap heap;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        degree[static_cast<std::size_t>(v)] = l.weighted_degree(v);
        heap.emplace(degree[static_cast<std::size_t>(v)], v);
    }
    while (!heap.empty()) {
        auto [key, v] = heap.top();
        heap.pop();
        const auto vs = static_cast<std::size_t>(v);
        if (!alive[vs] || key != degree[vs]) continue;  // stale entry
        if (!(key < lower_bound)) break;                // strict comparison
        alive[vs] = false;
        for (const auto& [nbr, w] : l.neighbors(v)) {
            const auto ns = static_cast<std::size_t>(nbr);
            if (alive[ns]) {
                degree[ns] -= w;
                heap.emplace(degree[ns], nbr);
            }
        }
    }
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (alive[static_cast<std::size_t>(v)]) kept.push_back(v);
    }
    return kept;
}

}  // namespace

std::pair<VertexSubset, double> greedy_peeling(const MultilayerGraph& g, int layer) {
    const EdgeLayer& l = g.layer(layer);
    if (l.num_edges() == 0) throw std::invalid_argument("greedy_peeling: empty layer");

    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<double> degree(n);
    std::vector<bool> alive(n, true);
    MinHeap heap;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        degree[static_cast<std::size_t>(v)] = l.weighted_degree(v);
        heap.emplace(degree[static_cast<std::size_t>(v)], v);
    }

    double weight = l.total_weight();
    std::size_t remaining = n;
    double best_density = weight / static_cast<double>(remaining);
    std::size_t best_remaining = remaining;
    std::vector<Vertex> removal_order;
    removal_order.reserve(n);

    while (remaining > 1) {
        auto [key, v] = heap.top();
        heap.pop();
        const auto vs = static_cast<std::size_t>(v);
        if (!alive[vs] || key != degree[vs]) continue;
        alive[vs] = false;
        removal_order.push_back(v);
        weight -= degree[vs];
        --remaining;
        for (const auto& [nbr, w] : l.neighbors(v)) {
            const auto ns = static_cast<std::size_t>(nbr);
            if (alive[ns]) {
                degree[ns] -= w;
                heap.emplace(degree[ns], nbr);
            }
        }
        double density = weight / static_cast<double>(remaining);
        if (density > best_density) {
            best_density = density;
            best_remaining = remaining;
        }
    }

    // Reconstruct the best prefix: everything not among the first n - best_remaining removals.
    std::vector<bool> removed(n, false);
    for (std::size_t i = 0; i < n - best_remaining; ++i) {
        removed[static_cast<std::size_t>(removal_order[i])] = true;
    }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!removed[static_cast<std::size_t>(v)]) members.push_back(v);
    }
    return {VertexSubset(std::move(members)), best_density};
}

MultilayerGraph balalau_prune(const MultilayerGraph& g, int layer, double lower_bound) {
    auto kept = survivors_above(g, layer, lower_bound);
    if (kept.size() == static_cast<std::size_t>(g.num_vertices())) return g;
    if (kept.empty()) throw std::invalid_argument("balalau_prune: bound removed every vertex");
    return g.induce(VertexSubset(std::move(kept)));
}

LayerOptimum densest_exact(const MultilayerGraph& g, int layer) {
    const EdgeLayer& full_layer = g.layer(layer);
    if (full_layer.num_edges() == 0) throw std::invalid_argument("densest_exact: empty layer");

    auto [greedy_subset, greedy_density] = greedy_peeling(g, layer);
    std::vector<Vertex> kept = survivors_above(g, layer, greedy_density);
    VertexSubset kept_set(kept);
    MultilayerGraph pruned = g.induce(kept_set);
    const EdgeLayer& l = pruned.layer(layer);
    const Vertex n = pruned.num_vertices();

    // Densest-subgraph LP: max sum_e w(e) x_e s.t. x_e <= y_u, x_e <= y_v, sum y = 1.
    LpInstance lp;
    std::vector<int> x_var(l.num_edges());
    for (std::size_t e = 0; e < l.num_edges(); ++e) x_var[e] = lp.add_variable(l.edges()[e].w);
    std::vector<int> y_var(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) y_var[static_cast<std::size_t>(v)] = lp.add_variable(0.0);
    for (std::size_t e = 0; e < l.num_edges(); ++e) {
        const Edge& edge = l.edges()[e];
        lp.add_row({{x_var[e], 1.0}, {y_var[static_cast<std::size_t>(edge.u)], -1.0}},
                   Relation::LessEqual, 0.0);
        lp.add_row({{x_var[e], 1.0}, {y_var[static_cast<std::size_t>(edge.v)], -1.0}},
                   Relation::LessEqual, 0.0);
    }
    std::vector<std::pair<int, double>> sum_row;
    for (Vertex v = 0; v < n; ++v) sum_row.emplace_back(y_var[static_cast<std::size_t>(v)], 1.0);
    lp.add_row(std::move(sum_row), Relation::Equal, 1.0);

    LpSolution sol = solve_basic_optimal(lp);
    if (sol.status != LpStatus::Optimal) {
        throw std::runtime_error("densest_exact: LP solve failed");
    }

    // Every level set of y attains the optimum; pick the largest (the support).
    std::vector<double> positive;
    for (Vertex v = 0; v < n; ++v) {
        double y = sol.values[static_cast<std::size_t>(y_var[static_cast<std::size_t>(v)])];
        if (y > 1e-9) positive.push_back(y);
    }
    std::sort(positive.begin(), positive.end());
    double best_density = -1.0;
    VertexSubset best_subset;
    double previous = -1.0;
    for (double level : positive) {
        if (level - previous <= 1e-7) continue;  // grouped with previous level
        previous = level;
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v) {
            double y = sol.values[static_cast<std::size_t>(y_var[static_cast<std::size_t>(v)])];
            if (y >= level - 1e-9) members.push_back(v);
        }
        VertexSubset candidate(std::move(members));
        double density = pruned.density(layer, candidate);
        // Largest optimal level set: prefer higher density, then larger size.
        if (density > best_density + 1e-9 ||
            (density > best_density - 1e-9 && candidate.size() > best_subset.size())) {
            best_density = density;
            best_subset = std::move(candidate);
        }
    }

    // Map back to the original vertex ids.
    std::vector<Vertex> original;
    original.reserve(best_subset.size());
    for (Vertex v : best_subset) original.push_back(kept_set.members()[static_cast<std::size_t>(v)]);
    VertexSubset subset(std::move(original));
    return LayerOptimum{layer, subset, g.density(layer, subset)};
}

}  // namespace mlds
