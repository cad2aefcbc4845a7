#include "mlds/oracle.hpp"

#include <stdexcept>

#include "mlds/lp.hpp"

namespace mlds {

namespace {

std::vector<Vertex> mask_members(unsigned mask, Vertex n) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
        if (mask & (1u << v)) members.push_back(v);
    }
    return members;
}

}  // namespace

LayerOptimum enumerate_densest(const MultilayerGraph& g, int layer) {
    const Vertex n = g.num_vertices();
    if (n > 20) throw std::invalid_argument("enumerate_densest: n > 20");
    if (g.layer(layer).num_edges() == 0) {
        throw std::invalid_argument("enumerate_densest: empty layer");
    }
    LayerOptimum best{layer, VertexSubset({0}), -1.0};
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        VertexSubset s(mask_members(mask, n));
        const double d = g.density(layer, s);
        if (d > best.opt_density) {
            best.opt_density = d;
            best.subset = std::move(s);
        }
    }
    return best;
}

OracleResult oracle_ab_density(const MultilayerGraph& g, const MetricConfig& cfg) {
    const Vertex n = g.num_vertices();
    if (n > 12) throw std::invalid_argument("oracle_ab_density: n > 12");
    const int k = g.num_layers();
    const unsigned num_subsets = (1u << n) - 1;

    // Variables: p_S for every nonempty S (in bitmask order), then t.
    LpInstance lp;
    std::vector<std::vector<double>> density(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) density[static_cast<std::size_t>(i)].reserve(num_subsets);
    for (unsigned mask = 1; mask <= num_subsets; ++mask) {
        lp.add_variable(0.0);
        VertexSubset s(mask_members(mask, n));
        for (int i = 0; i < k; ++i) {
            density[static_cast<std::size_t>(i)].push_back(g.density(i, s));
        }
    }
    const int t = lp.add_variable(1.0, -kInf, kInf);
    for (int i = 0; i < k; ++i) {
        std::vector<std::pair<int, double>> row{{t, 1.0}};
        for (unsigned s = 0; s < num_subsets; ++s) {
            const double a = cfg.alpha[i] * density[static_cast<std::size_t>(i)][s];
            if (a != 0.0) row.emplace_back(static_cast<int>(s), -a);
        }
        lp.add_row(std::move(row), Relation::LessEqual, cfg.beta[i]);
    }
    {
        std::vector<std::pair<int, double>> row;
        for (unsigned s = 0; s < num_subsets; ++s) row.emplace_back(static_cast<int>(s), 1.0);
        lp.add_row(std::move(row), Relation::Equal, 1.0);
    }

    auto sol = solve_basic_optimal(lp);
    if (sol.status != LpStatus::Optimal) {
        throw std::runtime_error(std::string("oracle LP did not solve: ") +
                                 to_string(sol.status));
    }
    OracleResult result;
    result.value = sol.objective_value;
    result.method = "direct LP over all nonempty subsets";
    for (unsigned s = 0; s < num_subsets; ++s) {
        const double p = sol.values[s];
        if (p > 1e-12) {
            result.distribution.atoms.push_back({VertexSubset(mask_members(s + 1, n)), p});
        }
    }
    result.distribution.value = result.value;
    return result;
}

}  // namespace mlds
