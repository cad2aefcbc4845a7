#include "oracle_lp.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace mlds::testing {

namespace {

struct Constraint {
    std::vector<double> coeffs;  // dense gradient
    double rhs;
};

bool feasible_point(const LpInstance& lp, const Eigen::VectorXd& x, double tol) {
    for (int j = 0; j < lp.num_vars; ++j) {
        if (x[j] < lp.lower[static_cast<std::size_t>(j)] - tol) return false;
        if (x[j] > lp.upper[static_cast<std::size_t>(j)] + tol) return false;
    }
    for (const LpRow& row : lp.rows) {
        double activity = 0.0;
        for (const auto& [j, a] : row.coeffs) activity += a * x[j];
        switch (row.rel) {
            case Relation::LessEqual:
                if (activity > row.rhs + tol) return false;
                break;
            case Relation::GreaterEqual:
                if (activity < row.rhs - tol) return false;
                break;
            case Relation::Equal:
                if (std::abs(activity - row.rhs) > tol) return false;
                break;
        }
    }
    return true;
}

}  // namespace

EnumerationResult enumerate_lp_optimum(const LpInstance& lp, double feas_tol) {
    const int n = lp.num_vars;
    std::vector<Constraint> candidates;
    std::vector<bool> mandatory;  // equality rows must always be active
    for (const LpRow& row : lp.rows) {
        Constraint c;
        c.coeffs.assign(static_cast<std::size_t>(n), 0.0);
        for (const auto& [j, a] : row.coeffs) c.coeffs[static_cast<std::size_t>(j)] += a;
        c.rhs = row.rhs;
        candidates.push_back(std::move(c));
        mandatory.push_back(row.rel == Relation::Equal);
    }
    for (int j = 0; j < n; ++j) {
        for (double bound : {lp.lower[static_cast<std::size_t>(j)], lp.upper[static_cast<std::size_t>(j)]}) {
            if (!std::isfinite(bound)) continue;
            Constraint c;
            c.coeffs.assign(static_cast<std::size_t>(n), 0.0);
            c.coeffs[static_cast<std::size_t>(j)] = 1.0;
            c.rhs = bound;
            candidates.push_back(std::move(c));
            mandatory.push_back(false);
        }
    }

    EnumerationResult result;
    const int total = static_cast<int>(candidates.size());
    if (total < n) return result;

    std::vector<int> pick(static_cast<std::size_t>(n));
    // Iterate all n-combinations of candidate constraints.
    for (int i = 0; i < n; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        Eigen::MatrixXd a(n, n);
        Eigen::VectorXd b(n);
        for (int i = 0; i < n; ++i) {
            const Constraint& c = candidates[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
            for (int j = 0; j < n; ++j) a(i, j) = c.coeffs[static_cast<std::size_t>(j)];
            b[i] = c.rhs;
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
        if (lu.rank() == n) {
            Eigen::VectorXd x = lu.solve(b);
            bool covers_equalities = true;
            for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
                if (!mandatory[ci]) continue;
                double activity = 0.0;
                for (int j = 0; j < n; ++j) activity += candidates[ci].coeffs[static_cast<std::size_t>(j)] * x[j];
                if (std::abs(activity - candidates[ci].rhs) > feas_tol) covers_equalities = false;
            }
            if (covers_equalities && feasible_point(lp, x, feas_tol)) {
                double obj = 0.0;
                for (int j = 0; j < n; ++j) obj += lp.objective[static_cast<std::size_t>(j)] * x[j];
                if (!result.feasible || obj > result.best_value) {
                    result.feasible = true;
                    result.best_value = obj;
                }
            }
        }
        // Next combination.
        int i = n - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - n + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return result;
}

}  // namespace mlds::testing
