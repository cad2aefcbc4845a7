#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mlds/graph.hpp"
#include "mlds/metric.hpp"
#include "mlds/oracle.hpp"
#include "random_graphs.hpp"

using namespace mlds;

namespace {

MultilayerGraph disjoint_edges() {
    return MultilayerGraph(4, {{{0, 1, 1.0}}, {{2, 3, 1.0}}});
}

double reevaluate(const OracleResult& r, const MultilayerGraph& g, const MetricConfig& cfg) {
    double worst = kInf;
    for (int i = 0; i < g.num_layers(); ++i) {
        worst = std::min(worst, expected_metric(r.distribution, g, cfg, i));
    }
    return worst;
}

}  // namespace

TEST_CASE("exhaustive densest subgraph") {
    MultilayerGraph triangle(3, {{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}});
    CHECK(enumerate_densest(triangle, 0).opt_density == doctest::Approx(1.0));

    MultilayerGraph path(3, {{{0, 1, 1.0}, {1, 2, 1.0}}});
    auto opt = enumerate_densest(path, 0);
    CHECK(opt.opt_density == doctest::Approx(2.0 / 3.0));
    CHECK(opt.subset == VertexSubset::full(3));

    MultilayerGraph heavy_edge(2, {{{0, 1, 3.0}}});
    CHECK(enumerate_densest(heavy_edge, 0).opt_density == doctest::Approx(1.5));

    MultilayerGraph big(25, {{{0, 1, 1.0}}});
    CHECK_THROWS_AS(enumerate_densest(big, 0), std::invalid_argument);
}

TEST_CASE("direct distribution LP on known graphs") {
    auto g = disjoint_edges();
    auto cfg = make_metric_config(g, MetricKind::Density);
    auto r = oracle_ab_density(g, cfg);
    // Optimal mixture: 0.5 on {0,1}, 0.5 on {2,3}; each layer expects 0.25.
    CHECK(r.value == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(reevaluate(r, g, cfg) == doctest::Approx(r.value).epsilon(1e-9));

    MultilayerGraph triangle(3, {{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}});
    auto tri_cfg = make_metric_config(triangle, MetricKind::Density);
    CHECK(oracle_ab_density(triangle, tri_cfg).value ==
          doctest::Approx(enumerate_densest(triangle, 0).opt_density).epsilon(1e-9));
}

TEST_CASE("zero alpha makes the objective constant") {
    auto g = disjoint_edges();
    MetricConfig cfg;
    cfg.alpha = {0.0, 0.0};
    cfg.beta = {-1.0, 2.0};
    CHECK(oracle_ab_density(g, cfg).value == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("size guard") {
    MultilayerGraph big(13, {{{0, 1, 1.0}}});
    auto cfg = make_metric_config(big, MetricKind::Density);
    CHECK_THROWS_AS(oracle_ab_density(big, cfg), std::invalid_argument);
}

TEST_CASE("dominates every deterministic subset") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = mlds::testing::random_multilayer(rng, 3, 7, 1, 3, trial % 2 == 1);
        auto cfg = make_metric_config(g, MetricKind::Density);
        auto r = oracle_ab_density(g, cfg);
        const Vertex n = g.num_vertices();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<Vertex> members;
            for (Vertex v = 0; v < n; ++v) {
                if (mask & (1u << v)) members.push_back(v);
            }
            VertexSubset s(std::move(members));
            double worst = kInf;
            for (int i = 0; i < g.num_layers(); ++i) {
                worst = std::min(worst, g.density(i, s));
            }
            CHECK(r.value >= worst - 1e-7);
        }
        CHECK(reevaluate(r, g, cfg) == doctest::Approx(r.value).epsilon(1e-9));
    }
}
