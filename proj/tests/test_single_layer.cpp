#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mlds/graph.hpp"
#include "mlds/single_layer.hpp"
#include "random_graphs.hpp"

using namespace mlds;

namespace {

// Test-side brute force over all nonempty subsets.
double brute_force_densest(const MultilayerGraph& g, int layer) {
    const int n = g.num_vertices();
    double best = 0.0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vertex> members;
        for (int v = 0; v < n; ++v) {
            if (mask & (1u << v)) members.push_back(v);
        }
        best = std::max(best, g.density(layer, VertexSubset(std::move(members))));
    }
    return best;
}

MultilayerGraph triangle_with_pendant() {
    return MultilayerGraph(4, {{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}}});
}

}  // namespace

TEST_CASE("greedy peeling on small graphs") {
    MultilayerGraph triangle(3, {{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}});
    auto [subset, density] = greedy_peeling(triangle, 0);
    CHECK(subset == VertexSubset::full(3));
    CHECK(density == doctest::Approx(1.0));

    MultilayerGraph path(3, {{{0, 1, 1.0}, {1, 2, 1.0}}});
    REQUIRE(brute_force_densest(path, 0) == doctest::Approx(2.0 / 3.0));
    auto [path_subset, path_density] = greedy_peeling(path, 0);
    CHECK(path_density == doctest::Approx(2.0 / 3.0));
    CHECK(path_subset == VertexSubset::full(3));

    MultilayerGraph star(4, {{{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}}});
    REQUIRE(brute_force_densest(star, 0) == doctest::Approx(0.75));
    auto [star_subset, star_density] = greedy_peeling(star, 0);
    CHECK(star_density == doctest::Approx(0.75));
    CHECK(star_subset.size() == 4);

    MultilayerGraph empty_layer(2, {{}});
    CHECK_THROWS_AS(greedy_peeling(empty_layer, 0), std::invalid_argument);
}

TEST_CASE("densest_exact on small graphs") {
    auto opt = densest_exact(triangle_with_pendant(), 0);
    REQUIRE(brute_force_densest(triangle_with_pendant(), 0) == doctest::Approx(1.0));
    CHECK(opt.opt_density == doctest::Approx(1.0).epsilon(1e-7));
    // Both {0,1,2} and {0,1,2,3} reach 1.0; the largest optimal level set wins.
    CHECK(opt.subset.size() >= 3);

    MultilayerGraph single_edge(2, {{{0, 1, 3.0}}});
    auto opt_edge = densest_exact(single_edge, 0);
    CHECK(opt_edge.opt_density == doctest::Approx(1.5));
    CHECK(opt_edge.subset == VertexSubset({0, 1}));

    MultilayerGraph two_triangles(6, {{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0},
                                       {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}}});
    auto opt_two = densest_exact(two_triangles, 0);
    CHECK(opt_two.opt_density == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("balalau prune strictness") {
    auto g = triangle_with_pendant();
    // Pendant has degree exactly 1.0: not strictly below the bound, retained.
    auto pruned = balalau_prune(g, 0, 1.0);
    CHECK(pruned.num_vertices() == 4);
    // With a bound just above 1.0 the pendant goes, then the triangle survives.
    auto pruned_eps = balalau_prune(g, 0, 1.0 + 1e-9);
    CHECK(pruned_eps.num_vertices() == 3);
    CHECK(pruned_eps.layer(0).num_edges() == 3);
    // Vacuous bound changes nothing.
    auto untouched = balalau_prune(g, 0, 0.0);
    CHECK(untouched.num_vertices() == 4);
}

TEST_CASE("exactness against brute force on random graphs") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = mlds::testing::random_multilayer(rng, 3, 10, 1, 1, trial % 2 == 1);
        double expected = brute_force_densest(g, 0);
        auto opt = densest_exact(g, 0);
        CHECK_MESSAGE(opt.opt_density == doctest::Approx(expected).epsilon(1e-7), "trial " << trial);
        CHECK(opt.opt_density == doctest::Approx(g.density(0, opt.subset)).epsilon(1e-9));
    }
}

TEST_CASE("2-approximation of greedy peeling") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = mlds::testing::random_multilayer(rng, 3, 12, 1, 1, true);
        auto [subset, density] = greedy_peeling(g, 0);
        auto opt = densest_exact(g, 0);
        CHECK(density >= 0.5 * opt.opt_density - 1e-9);
        CHECK(density == doctest::Approx(g.density(0, subset)).epsilon(1e-9));
    }
}

TEST_CASE("prune preserves the exact optimum") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = mlds::testing::random_multilayer(rng, 4, 12, 1, 1, trial % 2 == 1);
        auto [subset, greedy_value] = greedy_peeling(g, 0);
        auto pruned = balalau_prune(g, 0, greedy_value);
        CHECK(densest_exact(pruned, 0).opt_density ==
              doctest::Approx(densest_exact(g, 0).opt_density).epsilon(1e-7));
    }
}
