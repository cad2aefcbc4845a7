#include "mlds/lp.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

namespace mlds {

namespace {

using SparseColumn = std::vector<std::pair<int, double>>;  // (row, value)

constexpr int kMaxEtas = 80;
constexpr double kPivotTol = 1e-9;
constexpr double kZeroTol = 1e-12;

/// LU factorization of the basis plus a product-form eta file for the
/// pivots applied since the last refactorization.
class BasisFactor {
public:
    bool factor(const std::vector<SparseColumn>& columns, const std::vector<int>& basis) {
        const int m = static_cast<int>(basis.size());
        std::vector<Eigen::Triplet<double>> triplets;
        for (int pos = 0; pos < m; ++pos) {
            for (const auto& [row, value] : columns[static_cast<std::size_t>(basis[pos])]) {
                triplets.emplace_back(row, pos, value);
            }
        }
        Eigen::SparseMatrix<double> b(m, m);
        b.setFromTriplets(triplets.begin(), triplets.end());
        b.makeCompressed();
        lu_.compute(b);
        etas_.clear();
        return lu_.info() == Eigen::Success;
    }

    int eta_count() const { return static_cast<int>(etas_.size()); }

    // x := B^{-1} x
    void ftran(Eigen::VectorXd& x) const {
        x = lu_.solve(x);
        for (const Eta& eta : etas_) {
            double pivot_value = x[eta.row] / eta.pivot;
            if (pivot_value != 0.0) {
                for (const auto& [i, v] : eta.entries) x[i] -= v * pivot_value;
            }
            x[eta.row] = pivot_value;
        }
    }

    // y := B^{-T} y
    void btran(Eigen::VectorXd& y) {  // non-const: SparseLU::transpose() is non-const
        for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
            double acc = y[it->row];
            for (const auto& [i, v] : it->entries) acc -= v * y[i];
            y[it->row] = acc / it->pivot;
        }
        y = lu_.transpose().solve(y);
    }

    /// Record a basis change: column at basis position `row` replaced by the
    /// entering column whose FTRAN'd representation is `w`.
    void push_eta(const Eigen::VectorXd& w, int row) {
        Eta eta;
        eta.row = row;
        eta.pivot = w[row];
        for (int i = 0; i < w.size(); ++i) {
            if (i != row && std::abs(w[i]) > kZeroTol) eta.entries.emplace_back(i, w[i]);
        }
        etas_.push_back(std::move(eta));
    }

private:
    struct Eta {
        int row;
        double pivot;
        std::vector<std::pair<int, double>> entries;
    };
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu_;
    std::vector<Eta> etas_;
};

enum class ColStatus : unsigned char { Basic, AtLower, AtUpper, FreeZero };

struct Simplex {
    int m = 0;           // rows
    int num_struct = 0;  // structural variables
    int ncols = 0;       // structural + slack + artificial
    std::vector<SparseColumn> columns;
    std::vector<double> lower, upper, cost;  // per column; `cost` is the phase objective
    std::vector<double> b;
    std::vector<ColStatus> status;
    std::vector<double> x;
    std::vector<int> basis;
    BasisFactor factor;
    Eigen::VectorXd work_y, work_w;
    double tol = 1e-9;
    long iterations = 0;
    long max_iterations = 0;
    long degenerate_streak = 0;
    bool bland = false;

    bool fixed(int j) const { return lower[static_cast<std::size_t>(j)] >= upper[static_cast<std::size_t>(j)]; }

    bool refactor() {
        if (!factor.factor(columns, basis)) return false;
        recompute_basic_values();
        return true;
    }

    void recompute_basic_values() {
        Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(), m);
        for (int j = 0; j < ncols; ++j) {
            if (status[static_cast<std::size_t>(j)] == ColStatus::Basic) continue;
            double v = x[static_cast<std::size_t>(j)];
            if (v != 0.0) {
                for (const auto& [row, value] : columns[static_cast<std::size_t>(j)]) rhs[row] -= value * v;
            }
        }
        factor.ftran(rhs);
        for (int pos = 0; pos < m; ++pos) x[static_cast<std::size_t>(basis[pos])] = rhs[pos];
    }

    double reduced_cost(int j, const Eigen::VectorXd& y) const {
        double d = cost[static_cast<std::size_t>(j)];
        for (const auto& [row, value] : columns[static_cast<std::size_t>(j)]) d -= y[row] * value;
        return d;
    }

    // Returns the entering column, or -1 at optimality. `direction` is +1 when
    // the entering variable increases, -1 when it decreases.
    int price(const Eigen::VectorXd& y, int& direction) const {
        int best = -1;
        double best_violation = tol;
        int best_dir = 0;
        for (int j = 0; j < ncols; ++j) {
            ColStatus st = status[static_cast<std::size_t>(j)];
            if (st == ColStatus::Basic || fixed(j)) continue;
            double d = reduced_cost(j, y);
            double violation = 0.0;
            int dir = 0;
            if (st == ColStatus::AtLower && d > tol) {
                violation = d;
                dir = +1;
            } else if (st == ColStatus::AtUpper && d < -tol) {
                violation = -d;
                dir = -1;
            } else if (st == ColStatus::FreeZero && std::abs(d) > tol) {
                violation = std::abs(d);
                dir = d > 0 ? +1 : -1;
            } else {
                continue;
            }
            if (bland) {  // first violating index
                direction = dir;
                return j;
            }
            if (violation > best_violation) {
                best_violation = violation;
                best = j;
                best_dir = dir;
            }
        }
        direction = best_dir;
        return best;
    }

    enum class StepResult { Pivot, BoundFlip, Unbounded };

    StepResult ratio_test(int entering, int direction, const Eigen::VectorXd& w, double& theta,
                          int& leaving_pos, bool& leaving_to_upper) {
        const auto je = static_cast<std::size_t>(entering);
        theta = upper[je] - lower[je];  // own bound flip distance (may be inf)
        leaving_pos = -1;
        double best_pivot = 0.0;
        for (int pos = 0; pos < m; ++pos) {
            double wi = w[pos];
            if (std::abs(wi) < kPivotTol) continue;
            const auto jb = static_cast<std::size_t>(basis[pos]);
            double delta = -direction * wi;  // change of the basic variable per unit step
            double limit;
            bool to_upper;
            if (delta > 0) {
                if (upper[jb] == kInf) continue;
                limit = (upper[jb] - x[jb]) / delta;
                to_upper = true;
            } else {
                if (lower[jb] == -kInf) continue;
                limit = (lower[jb] - x[jb]) / delta;
                to_upper = false;
            }
            if (limit < 0) limit = 0;  // slightly out-of-bound basics
            bool better_tie = leaving_pos >= 0 &&
                              (bland ? basis[pos] < basis[leaving_pos] : std::abs(wi) > best_pivot);
            if (limit < theta - 1e-10 || (limit < theta + 1e-10 && better_tie)) {
                theta = limit;
                leaving_pos = pos;
                leaving_to_upper = to_upper;
                best_pivot = std::abs(wi);
            } else if (leaving_pos < 0 && limit <= theta) {
                theta = limit;
                leaving_pos = pos;
                leaving_to_upper = to_upper;
                best_pivot = std::abs(wi);
            }
        }
        if (leaving_pos < 0) {
            if (theta == kInf) return StepResult::Unbounded;
            return StepResult::BoundFlip;
        }
        return StepResult::Pivot;
    }

    void apply_step(int entering, int direction, const Eigen::VectorXd& w, double theta) {
        if (theta != 0.0) {
            x[static_cast<std::size_t>(entering)] += direction * theta;
            for (int pos = 0; pos < m; ++pos) {
                if (w[pos] != 0.0) x[static_cast<std::size_t>(basis[pos])] -= direction * theta * w[pos];
            }
        }
    }

    enum class LoopResult { Optimal, Unbounded, Failure };

    LoopResult run_phase() {
        long since_refactor = 0;
        for (;;) {
            if (iterations >= max_iterations) return LoopResult::Failure;
            if (factor.eta_count() >= kMaxEtas || since_refactor >= 4 * kMaxEtas) {
                if (!refactor()) return LoopResult::Failure;
                since_refactor = 0;
            }
            work_y.setZero(m);
            for (int pos = 0; pos < m; ++pos) work_y[pos] = cost[static_cast<std::size_t>(basis[pos])];
            factor.btran(work_y);
            int direction = 0;
            int entering = price(work_y, direction);
            if (entering < 0) {
                if (factor.eta_count() > 0) {  // verify with a fresh factorization
                    if (!refactor()) return LoopResult::Failure;
                    since_refactor = 0;
                    work_y.setZero(m);
                    for (int pos = 0; pos < m; ++pos) work_y[pos] = cost[static_cast<std::size_t>(basis[pos])];
                    factor.btran(work_y);
                    entering = price(work_y, direction);
                    if (entering < 0) return LoopResult::Optimal;
                } else {
                    return LoopResult::Optimal;
                }
            }
            ++iterations;
            ++since_refactor;
            work_w.setZero(m);
            for (const auto& [row, value] : columns[static_cast<std::size_t>(entering)]) work_w[row] = value;
            factor.ftran(work_w);

            double theta = 0.0;
            int leaving_pos = -1;
            bool leaving_to_upper = false;
            StepResult step = ratio_test(entering, direction, work_w, theta, leaving_pos, leaving_to_upper);
            if (step == StepResult::Unbounded) return LoopResult::Unbounded;

            apply_step(entering, direction, work_w, theta);

            if (step == StepResult::BoundFlip) {
                const auto je = static_cast<std::size_t>(entering);
                status[je] = direction > 0 ? ColStatus::AtUpper : ColStatus::AtLower;
                x[je] = direction > 0 ? upper[je] : lower[je];
            } else {
                int leaving = basis[leaving_pos];
                const auto jl = static_cast<std::size_t>(leaving);
                status[jl] = leaving_to_upper ? ColStatus::AtUpper : ColStatus::AtLower;
                x[jl] = leaving_to_upper ? upper[jl] : lower[jl];
                basis[leaving_pos] = entering;
                status[static_cast<std::size_t>(entering)] = ColStatus::Basic;
                factor.push_eta(work_w, leaving_pos);
            }

            if (theta > tol) {
                degenerate_streak = 0;
                bland = false;
            } else if (++degenerate_streak > 500 + 2L * m) {
                bland = true;  // anti-cycling fallback
            }
        }
    }
};

/// Equilibration scales: one max-norm pass over rows then columns.
void compute_scaling(const LpInstance& lp, std::vector<double>& row_scale,
                     std::vector<double>& col_scale) {
    row_scale.assign(lp.rows.size(), 1.0);
    col_scale.assign(static_cast<std::size_t>(lp.num_vars), 1.0);
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        double mx = 0.0;
        for (const auto& [j, a] : lp.rows[i].coeffs) mx = std::max(mx, std::abs(a));
        if (mx > 0.0) row_scale[i] = 1.0 / mx;
    }
    std::vector<double> col_max(static_cast<std::size_t>(lp.num_vars), 0.0);
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        for (const auto& [j, a] : lp.rows[i].coeffs) {
            col_max[static_cast<std::size_t>(j)] =
                std::max(col_max[static_cast<std::size_t>(j)], std::abs(a) * row_scale[i]);
        }
    }
    for (int j = 0; j < lp.num_vars; ++j) {
        double mx = col_max[static_cast<std::size_t>(j)];
        if (mx > 0.0) col_scale[static_cast<std::size_t>(j)] = 1.0 / mx;
    }
}

// Box-constrained problem with no rows.
LpSolution solve_unconstrained(const LpInstance& lp) {
    LpSolution sol;
    sol.values.assign(static_cast<std::size_t>(lp.num_vars), 0.0);
    double obj = 0.0;
    for (int j = 0; j < lp.num_vars; ++j) {
        const auto js = static_cast<std::size_t>(j);
        if (lp.lower[js] > lp.upper[js]) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        double c = lp.objective[js];
        double v;
        if (c > 0) {
            v = lp.upper[js];
        } else if (c < 0) {
            v = lp.lower[js];
        } else {
            v = std::isfinite(lp.lower[js]) ? lp.lower[js] : std::min(0.0, lp.upper[js]);
        }
        if (!std::isfinite(v)) {
            sol.status = LpStatus::Unbounded;
            return sol;
        }
        sol.values[js] = v;
        obj += c * v;
    }
    sol.status = LpStatus::Optimal;
    sol.objective_value = obj;
    sol.is_basic = true;
    return sol;
}

}  // namespace

LpSolution solve_basic_optimal(const LpInstance& lp, const LpOptions& options) {
    if (lp.objective.size() != static_cast<std::size_t>(lp.num_vars) ||
        lp.lower.size() != static_cast<std::size_t>(lp.num_vars) ||
        lp.upper.size() != static_cast<std::size_t>(lp.num_vars)) {
        throw std::invalid_argument("LpInstance: field sizes do not match num_vars");
    }
    for (const LpRow& row : lp.rows) {
        if (!std::isfinite(row.rhs)) throw std::invalid_argument("LpInstance: non-finite rhs");
        for (const auto& [j, a] : row.coeffs) {
            if (j < 0 || j >= lp.num_vars) throw std::invalid_argument("LpInstance: bad column index");
            if (!std::isfinite(a)) throw std::invalid_argument("LpInstance: non-finite coefficient");
        }
    }
    if (lp.rows.empty()) return solve_unconstrained(lp);

    std::vector<double> row_scale, col_scale;
    if (options.scale) {
        compute_scaling(lp, row_scale, col_scale);
    } else {
        row_scale.assign(lp.rows.size(), 1.0);
        col_scale.assign(static_cast<std::size_t>(lp.num_vars), 1.0);
    }

    Simplex s;
    s.m = static_cast<int>(lp.rows.size());
    s.num_struct = lp.num_vars;
    s.ncols = lp.num_vars + 2 * s.m;
    s.tol = options.tol > 0 ? options.tol : 1e-9;
    s.max_iterations =
        options.max_iterations > 0 ? options.max_iterations : 20000 + 60L * (s.m + s.num_struct);

    s.columns.resize(static_cast<std::size_t>(s.ncols));
    s.lower.assign(static_cast<std::size_t>(s.ncols), 0.0);
    s.upper.assign(static_cast<std::size_t>(s.ncols), kInf);
    s.cost.assign(static_cast<std::size_t>(s.ncols), 0.0);
    s.x.assign(static_cast<std::size_t>(s.ncols), 0.0);
    s.status.assign(static_cast<std::size_t>(s.ncols), ColStatus::AtLower);
    s.b.assign(static_cast<std::size_t>(s.m), 0.0);

    // Structural columns in scaled space: x'_j = x_j / col_scale_j.
    for (int j = 0; j < lp.num_vars; ++j) {
        const auto js = static_cast<std::size_t>(j);
        if (lp.lower[js] > lp.upper[js]) throw std::invalid_argument("LpInstance: lower > upper");
        s.lower[js] = lp.lower[js] / col_scale[js];
        s.upper[js] = lp.upper[js] / col_scale[js];
        if (std::isfinite(s.lower[js])) {
            s.status[js] = ColStatus::AtLower;
            s.x[js] = s.lower[js];
        } else if (std::isfinite(s.upper[js])) {
            s.status[js] = ColStatus::AtUpper;
            s.x[js] = s.upper[js];
        } else {
            s.status[js] = ColStatus::FreeZero;
            s.x[js] = 0.0;
        }
    }
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        for (const auto& [j, a] : lp.rows[i].coeffs) {
            double v = a * row_scale[i] * col_scale[static_cast<std::size_t>(j)];
            if (v != 0.0) s.columns[static_cast<std::size_t>(j)].emplace_back(static_cast<int>(i), v);
        }
        s.b[i] = lp.rows[i].rhs * row_scale[i];
        // Slack column.
        int slack = lp.num_vars + static_cast<int>(i);
        const auto ss = static_cast<std::size_t>(slack);
        s.columns[ss].emplace_back(static_cast<int>(i), 1.0);
        switch (lp.rows[i].rel) {
            case Relation::LessEqual:
                s.lower[ss] = 0.0;
                s.upper[ss] = kInf;
                break;
            case Relation::GreaterEqual:
                s.lower[ss] = -kInf;
                s.upper[ss] = 0.0;
                s.status[ss] = ColStatus::AtUpper;
                break;
            case Relation::Equal:
                s.lower[ss] = 0.0;
                s.upper[ss] = 0.0;
                break;
        }
        s.x[ss] = 0.0;
    }

    // Phase 1: minimize total artificial value. On large bases we crash a
    // slack basis first — a row only gets an artificial when its slack cannot
    // absorb the starting residual — which skips the O(m) pivots needed to
    // drive a full artificial basis out. On small dense instances the fully
    // degenerate slack start stalls phase 2, so the classic artificial start
    // wins there; the crossover was measured empirically.
    constexpr int kCrashMinRows = 2000;
    const bool use_crash = s.m >= kCrashMinRows;
    s.basis.resize(static_cast<std::size_t>(s.m));
    {
        std::vector<double> residual = s.b;
        for (int j = 0; j < lp.num_vars; ++j) {
            double v = s.x[static_cast<std::size_t>(j)];
            if (v != 0.0) {
                for (const auto& [row, value] : s.columns[static_cast<std::size_t>(j)]) {
                    residual[static_cast<std::size_t>(row)] -= value * v;
                }
            }
        }
        for (int i = 0; i < s.m; ++i) {
            const double r = residual[static_cast<std::size_t>(i)];
            const int slack = lp.num_vars + i;
            const auto ss = static_cast<std::size_t>(slack);
            const int art = lp.num_vars + s.m + i;
            const auto as = static_cast<std::size_t>(art);
            if (use_crash && r >= s.lower[ss] && r <= s.upper[ss]) {
                s.basis[static_cast<std::size_t>(i)] = slack;
                s.status[ss] = ColStatus::Basic;
                s.x[ss] = r;
                // Unused artificial: keep it out of the problem entirely.
                s.lower[as] = s.upper[as] = 0.0;
                s.columns[as].emplace_back(i, 1.0);
            } else {
                s.basis[static_cast<std::size_t>(i)] = art;
                s.status[as] = ColStatus::Basic;
                s.cost[as] = -1.0;
                s.columns[as].emplace_back(i, r >= 0 ? 1.0 : -1.0);
            }
        }
    }

    LpSolution sol;
    if (!s.refactor()) return sol;  // SolverFailure

    auto phase1 = s.run_phase();
    if (phase1 == Simplex::LoopResult::Failure) return sol;
    double infeasibility = 0.0;
    for (int i = 0; i < s.m; ++i) {
        infeasibility += std::abs(s.x[static_cast<std::size_t>(lp.num_vars + s.m + i)]);
    }
    if (phase1 == Simplex::LoopResult::Unbounded) return sol;  // cannot happen for a sane phase 1
    if (infeasibility > 1e-7) {
        sol.status = LpStatus::Infeasible;
        return sol;
    }

    // Phase 2: real objective; artificials pinned at zero.
    for (int i = 0; i < s.m; ++i) {
        const auto art = static_cast<std::size_t>(lp.num_vars + s.m + i);
        s.cost[art] = 0.0;
        s.lower[art] = 0.0;
        s.upper[art] = 0.0;
        if (s.status[art] != ColStatus::Basic) {
            s.status[art] = ColStatus::AtLower;
            s.x[art] = 0.0;
        }
    }
    for (int j = 0; j < lp.num_vars; ++j) {
        s.cost[static_cast<std::size_t>(j)] =
            lp.objective[static_cast<std::size_t>(j)] * col_scale[static_cast<std::size_t>(j)];
    }
    s.bland = false;
    s.degenerate_streak = 0;

    auto phase2 = s.run_phase();
    if (phase2 == Simplex::LoopResult::Failure) return sol;
    if (phase2 == Simplex::LoopResult::Unbounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    // Unscale and sanity-check the result.
    sol.values.assign(static_cast<std::size_t>(lp.num_vars), 0.0);
    double obj = 0.0;
    for (int j = 0; j < lp.num_vars; ++j) {
        const auto js = static_cast<std::size_t>(j);
        double v = s.x[js] * col_scale[js];
        sol.values[js] = v;
        obj += lp.objective[js] * v;
    }
    for (const LpRow& row : lp.rows) {
        double activity = 0.0;
        double norm = std::abs(row.rhs);
        for (const auto& [j, a] : row.coeffs) {
            activity += a * sol.values[static_cast<std::size_t>(j)];
            norm += std::abs(a * sol.values[static_cast<std::size_t>(j)]);
        }
        double viol = 0.0;
        if (row.rel == Relation::LessEqual) viol = activity - row.rhs;
        else if (row.rel == Relation::GreaterEqual) viol = row.rhs - activity;
        else viol = std::abs(activity - row.rhs);
        if (viol > 1e-7 * (1.0 + norm)) return sol;  // SolverFailure, never a silent wrong answer
    }
    sol.status = LpStatus::Optimal;
    sol.objective_value = obj;
    sol.is_basic = true;
    return sol;
}

void dump_lp(std::ostream& out, const LpInstance& lp) {
    out << "max";
    for (int j = 0; j < lp.num_vars; ++j) {
        double c = lp.objective[static_cast<std::size_t>(j)];
        if (c != 0.0) out << (c >= 0 ? " +" : " ") << c << "*x" << j;
    }
    out << "\ns.t.\n";
    for (const LpRow& row : lp.rows) {
        for (const auto& [j, a] : row.coeffs) out << (a >= 0 ? " +" : " ") << a << "*x" << j;
        out << (row.rel == Relation::LessEqual ? " <= "
                                               : row.rel == Relation::Equal ? " == " : " >= ")
            << row.rhs << '\n';
    }
    for (int j = 0; j < lp.num_vars; ++j) {
        out << lp.lower[static_cast<std::size_t>(j)] << " <= x" << j << " <= "
            << lp.upper[static_cast<std::size_t>(j)] << '\n';
    }
}

const char* to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
        case LpStatus::SolverFailure: return "solver_failure";
    }
    return "unknown";
}

}  // namespace mlds
