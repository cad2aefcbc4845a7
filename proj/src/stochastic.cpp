#include "mlds/stochastic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>

#include "mlds/single_layer.hpp"

namespace mlds {

namespace {

std::pair<Vertex, Vertex> ordered(Vertex u, Vertex v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace

AbLp build_ab_lp(const MultilayerGraph& g, const MetricConfig& cfg) {
    const Vertex n = g.num_vertices();
    const int k = g.num_layers();
    AbLp ab;
    ab.union_edges = g.edge_union();
    const int m = static_cast<int>(ab.union_edges.size());

    std::map<std::pair<Vertex, Vertex>, int> edge_index;
    for (int e = 0; e < m; ++e) {
        edge_index.emplace(ab.union_edges[static_cast<std::size_t>(e)], e);
        ab.lp.add_variable(0.0);  // x_e
    }
    ab.y_offset = m;
    for (Vertex v = 0; v < n; ++v) ab.lp.add_variable(0.0);  // y_v
    ab.t_index = ab.lp.add_variable(1.0, -kInf, kInf);

    ab.layer_terms.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        auto& terms = ab.layer_terms[static_cast<std::size_t>(i)];
        terms.reserve(g.layer(i).num_edges());
        for (const Edge& e : g.layer(i).edges()) {
            terms.emplace_back(edge_index.at(ordered(e.u, e.v)), e.w);
        }
        // t - alpha_i * sum w_i(e) x_e <= beta_i
        std::vector<std::pair<int, double>> row{{ab.t_index, 1.0}};
        for (auto [xe, w] : terms) {
            const double coeff = cfg.alpha[i] * w;
            if (coeff != 0.0) row.emplace_back(xe, -coeff);
        }
        ab.lp.add_row(std::move(row), Relation::LessEqual, cfg.beta[i]);
    }
    for (int e = 0; e < m; ++e) {
        auto [u, v] = ab.union_edges[static_cast<std::size_t>(e)];
        ab.lp.add_row({{e, 1.0}, {ab.y_offset + u, -1.0}}, Relation::LessEqual, 0.0);
        ab.lp.add_row({{e, 1.0}, {ab.y_offset + v, -1.0}}, Relation::LessEqual, 0.0);
    }
    {
        std::vector<std::pair<int, double>> row;
        row.reserve(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) row.emplace_back(ab.y_offset + v, 1.0);
        ab.lp.add_row(std::move(row), Relation::Equal, 1.0);
    }
    return ab;
}

AbLpSolution extract_solution(const AbLp& ab, const MultilayerGraph& g, const LpSolution& sol) {
    AbLpSolution out;
    out.x.assign(sol.values.begin(), sol.values.begin() + static_cast<long>(ab.union_edges.size()));
    out.y.assign(sol.values.begin() + ab.y_offset,
                 sol.values.begin() + ab.y_offset + g.num_vertices());
    out.t = sol.values[static_cast<std::size_t>(ab.t_index)];
    out.is_basic = sol.is_basic;
    return out;
}

double layer_lp_value(const AbLp& ab, const MetricConfig& cfg, const AbLpSolution& sol,
                      int layer) {
    double sum = 0.0;
    for (auto [xe, w] : ab.layer_terms[static_cast<std::size_t>(layer)]) {
        sum += w * sol.x[static_cast<std::size_t>(xe)];
    }
    return cfg.alpha[layer] * sum + cfg.beta[layer];
}

AbLpSolution purify_x(const AbLp& ab, const MetricConfig& cfg, AbLpSolution sol) {
    for (std::size_t e = 0; e < ab.union_edges.size(); ++e) {
        auto [u, v] = ab.union_edges[e];
        sol.x[e] = std::min(sol.y[static_cast<std::size_t>(u)],
                            sol.y[static_cast<std::size_t>(v)]);
    }
    double t = kInf;
    for (std::size_t i = 0; i < ab.layer_terms.size(); ++i) {
        t = std::min(t, layer_lp_value(ab, cfg, sol, static_cast<int>(i)));
    }
    sol.t = t;
    return sol;
}

SubsetDistribution round_to_distribution(const AbLpSolution& sol, const MultilayerGraph& g,
                                         const MetricConfig& cfg) {
    constexpr double kGroupTol = 1e-7;   // merge near-tied y levels
    constexpr double kAtomDrop = 1e-12;  // discard numerically empty atoms

    std::vector<std::pair<double, Vertex>> pos;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const double yv = sol.y[static_cast<std::size_t>(v)];
        if (yv > kAtomDrop) pos.emplace_back(yv, v);
    }
    if (pos.empty()) throw std::logic_error("rounding: all y values are zero");
    std::sort(pos.begin(), pos.end(), std::greater<>());

    // Walk levels from the largest down; each level's set is a prefix.
    SubsetDistribution dist;
    std::vector<Vertex> prefix;
    std::size_t idx = 0;
    while (idx < pos.size()) {
        const double level = pos[idx].first;
        while (idx < pos.size() && pos[idx].first > level - kGroupTol) {
            prefix.push_back(pos[idx].second);
            ++idx;
        }
        const double next_level = idx < pos.size() ? pos[idx].first : 0.0;
        const double mass = (level - next_level) * static_cast<double>(prefix.size());
        if (mass > kAtomDrop) {
            dist.atoms.push_back({VertexSubset(prefix), mass});
        }
    }
    if (dist.atoms.empty()) throw std::logic_error("rounding: no atom received mass");

    double total = 0.0;
    for (const Atom& a : dist.atoms) total += a.probability;
    if (std::abs(total - 1.0) > 1e-6) {
        throw std::runtime_error("rounding: probability mass drifted to " +
                                 std::to_string(total));
    }
    for (Atom& a : dist.atoms) a.probability /= total;

    dist.value = kInf;
    for (int i = 0; i < g.num_layers(); ++i) {
        dist.value = std::min(dist.value, expected_metric(dist, g, cfg, i));
    }
    return dist;
}

double expected_metric(const SubsetDistribution& dist, const MultilayerGraph& g,
                       const MetricConfig& cfg, int layer) {
    double expected_density = 0.0;
    for (const Atom& a : dist.atoms) {
        expected_density += a.probability * g.density(layer, a.subset);
    }
    return cfg.alpha[layer] * expected_density + cfg.beta[layer];
}

SolveResult solve_ab_density(const MultilayerGraph& g, MetricKind kind,
                             const SolveOptions& options) {
    const double t0 = now_seconds();
    const int k = g.num_layers();

    // Per-layer optima are needed by the lower bound for every metric, and by
    // the affine coefficients for robust-ratio and regret.
    std::vector<LayerOptimum> optima(static_cast<std::size_t>(k));
    auto solve_layer = [&](int i) {
        if (g.layer(i).num_edges() == 0) {
            optima[static_cast<std::size_t>(i)] = {i, VertexSubset({0}), 0.0};
        } else {
            optima[static_cast<std::size_t>(i)] = densest_exact(g, i);
        }
    };
    const int threads = std::clamp(options.threads, 1, k);
    if (threads > 1) {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (int i = t; i < k; i += threads) solve_layer(i);
            });
        }
        for (auto& th : pool) th.join();
    } else {
        for (int i = 0; i < k; ++i) solve_layer(i);
    }

    SolveResult result;
    result.metric = kind;
    MetricConfig cfg = make_metric_config(g, kind, optima);
    result.layer_optima = std::move(optima);

    auto lb = lower_bound_lp(g, cfg);
    result.lower_bound = lb.value;

    const MultilayerGraph* work = &g;
    std::optional<PruneResult> pruned;
    if (options.preprocess) {
        pruned = remove_useless(g, cfg, lb.value);
        if (pruned->emptied) {
            throw std::logic_error("preprocessing removed every vertex");
        }
        result.pruned_vertices = pruned->removed_vertices;
        result.pruned_edges = pruned->removed_edges;
        work = &pruned->graph;
    }
    result.preprocess_seconds = now_seconds() - t0;

    AbLp ab = build_ab_lp(*work, cfg);
    LpOptions lp_options;
    lp_options.tol = options.tol;
    auto lp_sol = solve_basic_optimal(ab.lp, lp_options);
    if (lp_sol.status != LpStatus::Optimal) {
        throw std::runtime_error(std::string("relaxation did not solve: ") +
                                 to_string(lp_sol.status));
    }
    result.lp_value = lp_sol.objective_value;
    result.is_basic = lp_sol.is_basic;

    auto ab_sol = purify_x(ab, cfg, extract_solution(ab, *work, lp_sol));
    auto dist = round_to_distribution(ab_sol, *work, cfg);

    // Map subsets back to the input graph's vertex ids.
    if (options.preprocess && result.pruned_vertices > 0) {
        for (Atom& a : dist.atoms) {
            std::vector<Vertex> members;
            members.reserve(a.subset.size());
            for (Vertex v : a.subset) {
                members.push_back(pruned->original_ids[static_cast<std::size_t>(v)]);
            }
            a.subset = VertexSubset(std::move(members));
        }
    }

    result.per_layer.reserve(static_cast<std::size_t>(k));
    double worst = kInf;
    for (int i = 0; i < k; ++i) {
        PerLayerReport r;
        r.layer = i;
        for (const Atom& a : dist.atoms) {
            r.expected_density += a.probability * g.density(i, a.subset);
        }
        r.expected_metric = cfg.alpha[i] * r.expected_density + cfg.beta[i];
        worst = std::min(worst, r.expected_metric);
        result.per_layer.push_back(r);
    }
    dist.value = worst;
    result.value = worst;
    result.distribution = std::move(dist);
    result.total_seconds = now_seconds() - t0;
    return result;
}

}  // namespace mlds
