#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace mlds {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LpRow {
    std::vector<std::pair<int, double>> coeffs;  // (variable index, coefficient)
    Relation rel = Relation::LessEqual;
    double rhs = 0.0;
};

/// max objective . x  s.t.  rows, lower <= x <= upper.
/// Default variable bounds are [0, +inf).
struct LpInstance {
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<LpRow> rows;
    std::vector<double> lower;
    std::vector<double> upper;

    int add_variable(double obj_coeff, double lo = 0.0, double hi = kInf) {
        objective.push_back(obj_coeff);
        lower.push_back(lo);
        upper.push_back(hi);
        return num_vars++;
    }

    void add_row(std::vector<std::pair<int, double>> coeffs, Relation rel, double rhs) {
        rows.push_back({std::move(coeffs), rel, rhs});
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded, SolverFailure };

struct LpSolution {
    LpStatus status = LpStatus::SolverFailure;
    std::vector<double> values;
    double objective_value = 0.0;
    bool is_basic = false;
};

struct LpOptions {
    double tol = 1e-9;        // feasibility / optimality tolerance
    long max_iterations = 0;  // 0 = automatic (proportional to problem size)
    bool scale = true;        // row/column equilibration
};

/// Revised simplex over bounded variables. When the status is Optimal the
/// returned solution is a vertex of the feasible polyhedron.
LpSolution solve_basic_optimal(const LpInstance& lp, const LpOptions& options = {});

/// Plain-text dump of an instance, for diagnostics.
void dump_lp(std::ostream& out, const LpInstance& lp);

const char* to_string(LpStatus status);

}  // namespace mlds
