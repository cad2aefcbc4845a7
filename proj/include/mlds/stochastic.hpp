#pragma once

#include <utility>
#include <vector>

#include "mlds/graph.hpp"
#include "mlds/lp.hpp"
#include "mlds/metric.hpp"
#include "mlds/prune.hpp"

namespace mlds {

struct Atom {
    VertexSubset subset;
    double probability = 0.0;
};

/// A probability distribution over vertex subsets. The rounding procedure
/// always produces a chain: atoms ordered so each subset strictly contains
/// the next.
struct SubsetDistribution {
    std::vector<Atom> atoms;
    double value = 0.0;  // achieved worst-layer rescaled density
};

/// The relaxation solved for a metric: variables x_e for every edge of the
/// layer union (shared across layers), y_v per vertex, and the bound t.
///   max t
///   s.t. t <= alpha_i * sum_{e in E_i} w_i(e) x_e + beta_i   for each layer
///        x_e <= y_u, x_e <= y_v                              for each edge
///        sum_v y_v = 1,  x >= 0, y >= 0, t free.
struct AbLp {
    LpInstance lp;
    std::vector<std::pair<Vertex, Vertex>> union_edges;  // x_e is variable e
    int y_offset = 0;                                    // y_v is y_offset + v
    int t_index = 0;
    // layer_terms[i] = (x-variable index, w_i(e)) for every edge of layer i.
    std::vector<std::vector<std::pair<int, double>>> layer_terms;
};

struct AbLpSolution {
    std::vector<double> x;  // indexed like AbLp::union_edges
    std::vector<double> y;  // indexed by vertex
    double t = 0.0;
    bool is_basic = false;
};

AbLp build_ab_lp(const MultilayerGraph& g, const MetricConfig& cfg);

AbLpSolution extract_solution(const AbLp& ab, const MultilayerGraph& g, const LpSolution& sol);

/// alpha_i * sum_{e in E_i} w_i(e) x_e + beta_i for one layer.
double layer_lp_value(const AbLp& ab, const MetricConfig& cfg, const AbLpSolution& sol,
                      int layer);

/// Raises every x_e to min(y_u, y_v) and recomputes t as the worst layer
/// value. Never decreases the objective (alpha >= 0, weights > 0).
AbLpSolution purify_x(const AbLp& ab, const MetricConfig& cfg, AbLpSolution sol);

/// Level-set rounding: the distinct positive y-values r_1 < ... < r_l become
/// nested sets S_j = {v : y_v >= r_j} with mass (r_j - r_{j-1}) * |S_j|.
/// Values closer than 1e-7 are merged into one level; atoms below 1e-12 are
/// dropped; masses are renormalized (drift beyond 1e-6 is a hard error).
SubsetDistribution round_to_distribution(const AbLpSolution& sol, const MultilayerGraph& g,
                                         const MetricConfig& cfg);

/// Expected rescaled density of one layer under a distribution:
/// alpha_i * sum_S p_S w_i(S)/|S| + beta_i.
double expected_metric(const SubsetDistribution& dist, const MultilayerGraph& g,
                       const MetricConfig& cfg, int layer);

struct SolveOptions {
    bool preprocess = true;
    double tol = 1e-9;
    int threads = 1;  // parallelism for the per-layer optimum solves
};

struct PerLayerReport {
    int layer = 0;
    double expected_density = 0.0;
    double expected_metric = 0.0;
};

struct SolveResult {
    MetricKind metric = MetricKind::Density;
    SubsetDistribution distribution;  // subsets in original vertex ids
    double value = 0.0;               // worst-layer metric of the distribution
    double lp_value = 0.0;
    double lower_bound = 0.0;
    std::vector<LayerOptimum> layer_optima;
    int pruned_vertices = 0;
    long pruned_edges = 0;
    double preprocess_seconds = 0.0;
    double total_seconds = 0.0;
    bool is_basic = false;
    std::vector<PerLayerReport> per_layer;
};

/// End-to-end exact solve: per-layer optima -> lower bound -> safe pruning
/// (optional) -> relaxation -> purification -> rounding. The returned value
/// is the true optimum of the worst-layer rescaled density. For the regret
/// metric the value is the internal maximized objective (<= 0); negate it to
/// report a regret.
SolveResult solve_ab_density(const MultilayerGraph& g, MetricKind kind,
                             const SolveOptions& options = {});

}  // namespace mlds
