#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mlds/graph.hpp"
#include "mlds/metric.hpp"
#include "mlds/stochastic.hpp"

namespace mlds {

enum class CliqueLayers { All, OneRandom };

/// Recipe for a synthetic benchmark: power-law random layers with a planted
/// clique. `exponent` is the degree power-law exponent (> 2).
struct SynthSpec {
    int n = 0;
    double exponent = 2.5;
    int num_layers = 1;
    int clique_size = 0;  // 0 = no planted clique
    CliqueLayers clique_layers = CliqueLayers::All;
    std::uint64_t seed = 0;
};

struct SynthResult {
    MultilayerGraph graph;
    VertexSubset clique;              // empty when clique_size == 0
    std::vector<int> planted_layers;  // layers that received the clique
};

/// One power-law random layer: expected degrees d_v drawn from a Pareto law
/// with minimum 1 and the given exponent, capped at sqrt(sum d); each pair
/// {u,v} appears independently with probability min(1, d_u d_v / sum d).
/// Unit weights.
std::vector<Edge> chung_lu_layer(int n, double exponent, std::mt19937_64& rng);

/// Adds all unit clique edges on v_c to each target layer (weights merged
/// with existing edges). Requires |v_c| >= 2.
MultilayerGraph plant_clique(const MultilayerGraph& g, const VertexSubset& v_c,
                             const std::vector<int>& target_layers);

/// Deterministic given the spec: every layer and the clique placement use
/// sub-streams split from spec.seed.
SynthResult generate(const SynthSpec& spec);

struct FScore {
    double precision = 0.0;
    double recall = 0.0;
    double f = 0.0;
};

/// Expected precision/recall of a subset distribution against a known
/// planted set: P = sum_S p_S |S ∩ V_c|/|S|, R = sum_S p_S |S ∩ V_c|/|V_c|,
/// F = harmonic mean (0 when both vanish).
FScore f_measure(const SubsetDistribution& dist, const VertexSubset& v_c);

enum class ExtractRule { Sample, HighestProb, BestMetric };

/// Turns a distribution into one subset: Sample draws per the masses with
/// the seeded RNG; HighestProb takes the max-mass atom (ties -> smallest
/// subset); BestMetric takes the atom with the best worst-layer metric.
VertexSubset extract_subset(const SubsetDistribution& dist, ExtractRule rule,
                            const MultilayerGraph& g, const MetricConfig& cfg,
                            std::uint64_t seed = 0);

/// Deterministic baseline: peel by minimum aggregate (summed over layers)
/// weighted degree and return the prefix maximizing the minimum per-layer
/// density. Throws if every layer is empty.
VertexSubset dcs_greedy(const MultilayerGraph& g);

struct EvalReport {
    std::vector<PerLayerReport> per_layer;
    int worst_layer = 0;
    double worst_value = 0.0;
    std::optional<FScore> f_score;  // present when the planted set is known
};

EvalReport evaluate(const SubsetDistribution& dist, const MultilayerGraph& g,
                    const MetricConfig& cfg,
                    const std::optional<VertexSubset>& planted = std::nullopt);

}  // namespace mlds
