#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "mlds/lp.hpp"
#include "oracle_lp.hpp"

using namespace mlds;
using mlds::testing::enumerate_lp_optimum;

namespace {

// Rank of the constraints tight at `sol` (rows counted as equalities when
// tight, plus tight bounds). A basic solution must have full rank.
int active_set_rank(const LpInstance& lp, const std::vector<double>& sol, double tol = 1e-7) {
    std::vector<std::vector<double>> gradients;
    for (const LpRow& row : lp.rows) {
        double activity = 0.0;
        for (const auto& [j, a] : row.coeffs) activity += a * sol[static_cast<std::size_t>(j)];
        if (std::abs(activity - row.rhs) <= tol) {
            std::vector<double> g(static_cast<std::size_t>(lp.num_vars), 0.0);
            for (const auto& [j, a] : row.coeffs) g[static_cast<std::size_t>(j)] += a;
            gradients.push_back(std::move(g));
        }
    }
    for (int j = 0; j < lp.num_vars; ++j) {
        const auto js = static_cast<std::size_t>(j);
        if ((std::isfinite(lp.lower[js]) && std::abs(sol[js] - lp.lower[js]) <= tol) ||
            (std::isfinite(lp.upper[js]) && std::abs(sol[js] - lp.upper[js]) <= tol)) {
            std::vector<double> g(static_cast<std::size_t>(lp.num_vars), 0.0);
            g[js] = 1.0;
            gradients.push_back(std::move(g));
        }
    }
    if (gradients.empty()) return 0;
    Eigen::MatrixXd a(static_cast<Eigen::Index>(gradients.size()), lp.num_vars);
    for (std::size_t i = 0; i < gradients.size(); ++i) {
        for (int j = 0; j < lp.num_vars; ++j) a(static_cast<Eigen::Index>(i), j) = gradients[i][static_cast<std::size_t>(j)];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-8);
    return static_cast<int>(lu.rank());
}

bool row_satisfied(const LpRow& row, const std::vector<double>& sol, double tol) {
    double activity = 0.0;
    for (const auto& [j, a] : row.coeffs) activity += a * sol[static_cast<std::size_t>(j)];
    switch (row.rel) {
        case Relation::LessEqual: return activity <= row.rhs + tol;
        case Relation::GreaterEqual: return activity >= row.rhs - tol;
        case Relation::Equal: return std::abs(activity - row.rhs) <= tol;
    }
    return false;
}

LpInstance random_lp(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_dist(2, 8);
    std::uniform_int_distribution<int> m_dist(2, 12);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    LpInstance lp;
    const int n = n_dist(rng);
    const int m = m_dist(rng);
    for (int j = 0; j < n; ++j) {
        double hi = unit(rng) < 0.4 ? std::uniform_real_distribution<double>(0.5, 4.0)(rng) : kInf;
        lp.add_variable(coeff(rng), 0.0, hi);
    }
    for (int i = 0; i < m; ++i) {
        std::vector<std::pair<int, double>> coeffs;
        for (int j = 0; j < n; ++j) {
            int a = coeff(rng);
            if (a != 0) coeffs.emplace_back(j, static_cast<double>(a));
        }
        double r = unit(rng);
        Relation rel = r < 0.6 ? Relation::LessEqual : (r < 0.85 ? Relation::GreaterEqual : Relation::Equal);
        lp.add_row(std::move(coeffs), rel, std::uniform_real_distribution<double>(-2.0, 6.0)(rng));
    }
    return lp;
}

}  // namespace

TEST_CASE("single bounded variable") {
    LpInstance lp;
    lp.add_variable(1.0, -kInf, kInf);  // t free
    lp.add_row({{0, 1.0}}, Relation::LessEqual, 1.0);
    auto sol = solve_basic_optimal(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sol.is_basic);
}

TEST_CASE("box optimum") {
    LpInstance lp;
    lp.add_variable(1.0);
    lp.add_variable(1.0);
    lp.add_row({{0, 1.0}}, Relation::LessEqual, 2.0);
    lp.add_row({{1, 1.0}}, Relation::LessEqual, 3.0);
    auto sol = solve_basic_optimal(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(sol.values[0] == doctest::Approx(2.0));
    CHECK(sol.values[1] == doctest::Approx(3.0));
}

TEST_CASE("closed-form minimax of two linear functions") {
    // max t s.t. t <= 0.5 q1, t <= 0.5 q2, q1+q2 = 1. Verified by a 1-D sweep
    // over q1: min(0.5 q1, 0.5 (1-q1)) peaks at q1 = 0.5 with value 0.25.
    double sweep_best = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        double q1 = i / 10000.0;
        sweep_best = std::max(sweep_best, std::min(0.5 * q1, 0.5 * (1.0 - q1)));
    }
    REQUIRE(sweep_best == doctest::Approx(0.25).epsilon(1e-8));

    LpInstance lp;
    int t = lp.add_variable(1.0, -kInf, kInf);
    int q1 = lp.add_variable(0.0);
    int q2 = lp.add_variable(0.0);
    lp.add_row({{t, 1.0}, {q1, -0.5}}, Relation::LessEqual, 0.0);
    lp.add_row({{t, 1.0}, {q2, -0.5}}, Relation::LessEqual, 0.0);
    lp.add_row({{q1, 1.0}, {q2, 1.0}}, Relation::Equal, 1.0);
    auto sol = solve_basic_optimal(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(sol.values[static_cast<std::size_t>(q1)] == doctest::Approx(0.5));
}

TEST_CASE("infeasible and unbounded detection") {
    LpInstance infeasible;
    infeasible.add_variable(1.0);
    infeasible.add_row({{0, 1.0}}, Relation::LessEqual, 1.0);
    infeasible.add_row({{0, 1.0}}, Relation::GreaterEqual, 2.0);
    CHECK(solve_basic_optimal(infeasible).status == LpStatus::Infeasible);

    LpInstance unbounded;
    unbounded.add_variable(1.0);
    unbounded.add_row({{0, -1.0}}, Relation::LessEqual, 0.0);
    CHECK(solve_basic_optimal(unbounded).status == LpStatus::Unbounded);
}

TEST_CASE("random LPs match exhaustive vertex enumeration") {
    std::mt19937_64 rng(20240817);
    int optimal_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        LpInstance lp = random_lp(rng);
        auto sol = solve_basic_optimal(lp);
        auto oracle = enumerate_lp_optimum(lp);
        if (sol.status == LpStatus::Optimal) {
            ++optimal_seen;
            REQUIRE_MESSAGE(oracle.feasible, "trial " << trial);
            CHECK_MESSAGE(sol.objective_value == doctest::Approx(oracle.best_value).epsilon(1e-7),
                          "trial " << trial);
            // Re-substitution: every constraint satisfied.
            for (const LpRow& row : lp.rows) CHECK(row_satisfied(row, sol.values, 1e-9));
            // Basicness: full-rank active set.
            CHECK_MESSAGE(active_set_rank(lp, sol.values) == lp.num_vars, "trial " << trial);
        } else if (sol.status == LpStatus::Infeasible) {
            CHECK_MESSAGE(!oracle.feasible, "trial " << trial);
        }
    }
    CHECK(optimal_seen > 100);  // the generator must exercise the optimal path
}

TEST_CASE("first-order optimality probe") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        LpInstance lp = random_lp(rng);
        auto sol = solve_basic_optimal(lp);
        if (sol.status != LpStatus::Optimal) continue;
        // No single-coordinate feasible step of 1e-6 along the objective
        // gradient may improve the objective by more than 1e-6.
        for (int j = 0; j < lp.num_vars; ++j) {
            const auto js = static_cast<std::size_t>(j);
            double c = lp.objective[js];
            if (c == 0.0) continue;
            std::vector<double> probe = sol.values;
            probe[js] += (c > 0 ? 1e-6 : -1e-6);
            if (probe[js] < lp.lower[js] || probe[js] > lp.upper[js]) continue;
            bool feasible = true;
            for (const LpRow& row : lp.rows) {
                if (!row_satisfied(row, probe, 1e-9)) feasible = false;
            }
            if (feasible) {
                double gain = std::abs(c) * 1e-6;
                CHECK(gain <= 1e-6 + 1e-12);
            }
        }
    }
}
