#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cgt {

enum class Relation { le, ge, eq };

template <class F>
struct LpConstraint {
    std::vector<F> coefficients;
    Relation relation;
    F rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

template <class F>
struct LpResult {
    LpStatus status;
    std::vector<F> x;
    F objective;
    int pivots = 0;
};

// Exact two-phase dense-tableau simplex with Bland's rule, minimizing
// objective . x subject to the constraints and x >= 0. Valid over any
// ordered field F (rationals, rational functions); no rounding anywhere.
template <class F>
class SimplexSolver {
public:
    SimplexSolver(std::vector<F> objective, std::vector<LpConstraint<F>> constraints,
                  int pivot_budget = 100000)
        : objective_(std::move(objective)),
          constraints_(std::move(constraints)),
          pivot_budget_(pivot_budget) {}

    LpResult<F> solve() {
        const std::size_t n = objective_.size();
        const std::size_t m = constraints_.size();

        // Normalize to nonnegative right-hand sides.
        for (auto& row : constraints_) {
            if (row.coefficients.size() != n)
                throw std::logic_error("simplex: ragged constraint row");
            if (row.rhs < F(0)) {
                for (auto& c : row.coefficients) c = -c;
                row.rhs = -row.rhs;
                if (row.relation == Relation::le) row.relation = Relation::ge;
                else if (row.relation == Relation::ge) row.relation = Relation::le;
            }
        }

        // Column layout: structural | slack/surplus | artificial | rhs.
        std::size_t slack_base = n;
        std::size_t slack_count = 0;
        for (const auto& row : constraints_)
            if (row.relation != Relation::eq) ++slack_count;
        std::size_t art_base = slack_base + slack_count;
        std::size_t art_count = 0;
        for (const auto& row : constraints_)
            if (row.relation != Relation::le) ++art_count;
        total_ = art_base + art_count;

        tableau_.assign(m, std::vector<F>(total_ + 1, F(0)));
        basis_.assign(m, 0);
        is_artificial_.assign(total_, false);

        std::size_t next_slack = slack_base, next_art = art_base;
        for (std::size_t i = 0; i < m; ++i) {
            auto& row = tableau_[i];
            for (std::size_t j = 0; j < n; ++j) row[j] = constraints_[i].coefficients[j];
            row[total_] = constraints_[i].rhs;
            switch (constraints_[i].relation) {
                case Relation::le:
                    row[next_slack] = F(1);
                    basis_[i] = next_slack++;
                    break;
                case Relation::ge:
                    row[next_slack] = F(-1);
                    ++next_slack;
                    row[next_art] = F(1);
                    is_artificial_[next_art] = true;
                    basis_[i] = next_art++;
                    break;
                case Relation::eq:
                    row[next_art] = F(1);
                    is_artificial_[next_art] = true;
                    basis_[i] = next_art++;
                    break;
            }
        }

        LpResult<F> result;
        result.status = LpStatus::optimal;

        if (art_count > 0) {
            std::vector<F> phase1(total_, F(0));
            for (std::size_t j = art_base; j < total_; ++j) phase1[j] = F(1);
            if (!run_phase(phase1, result, /*allow_artificial=*/true))
                throw std::logic_error("simplex: phase 1 unbounded");
            if (!(phase1_objective_ == F(0))) {
                result.status = LpStatus::infeasible;
                return result;
            }
            evict_artificials();
        }

        std::vector<F> cost(total_, F(0));
        for (std::size_t j = 0; j < n; ++j) cost[j] = objective_[j];
        if (!run_phase(cost, result, /*allow_artificial=*/false)) {
            result.status = LpStatus::unbounded;
            return result;
        }

        result.x.assign(n, F(0));
        for (std::size_t i = 0; i < tableau_.size(); ++i)
            if (basis_[i] < n) result.x[basis_[i]] = tableau_[i][total_];
        result.objective = F(0);
        for (std::size_t j = 0; j < n; ++j)
            result.objective += objective_[j] * result.x[j];
        return result;
    }

private:
    // Minimizes cost over the current basis. Returns false when unbounded.
    bool run_phase(const std::vector<F>& cost, LpResult<F>& result, bool allow_artificial) {
        const std::size_t m = tableau_.size();
        std::vector<F> reduced(cost);
        reduced.push_back(F(0));
        for (std::size_t i = 0; i < m; ++i) {
            const F& cb = cost[basis_[i]];
            if (cb == F(0)) continue;
            for (std::size_t j = 0; j <= total_; ++j) reduced[j] -= cb * tableau_[i][j];
        }

        for (;;) {
            // Bland: entering column is the lowest-index negative reduced cost.
            std::size_t enter = total_;
            for (std::size_t j = 0; j < total_; ++j) {
                if (!allow_artificial && is_artificial_[j]) continue;
                if (reduced[j] < F(0)) {
                    enter = j;
                    break;
                }
            }
            if (enter == total_) break;

            std::size_t leave = m;
            for (std::size_t i = 0; i < m; ++i) {
                if (!(tableau_[i][enter] > F(0))) continue;
                if (leave == m) {
                    leave = i;
                    continue;
                }
                F lhs = tableau_[i][total_] * tableau_[leave][enter];
                F rhs = tableau_[leave][total_] * tableau_[i][enter];
                if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave == m) return false;

            pivot(leave, enter, reduced);
            if (++result.pivots > pivot_budget_)
                throw std::logic_error("simplex: pivot budget exceeded");
        }
        phase1_objective_ = -reduced[total_];
        return true;
    }

    void pivot(std::size_t row, std::size_t col, std::vector<F>& reduced) {
        auto& pr = tableau_[row];
        F inv = F(1) / pr[col];
        for (auto& v : pr) v *= inv;
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            if (i == row) continue;
            const F factor = tableau_[i][col];
            if (factor == F(0)) continue;
            for (std::size_t j = 0; j <= total_; ++j) tableau_[i][j] -= factor * pr[j];
        }
        const F factor = reduced[col];
        if (!(factor == F(0)))
            for (std::size_t j = 0; j <= total_; ++j) reduced[j] -= factor * pr[j];
        basis_[row] = col;
    }

    // After phase 1, pivot basic artificials onto structural columns where
    // possible; rows with no eligible column are redundant and zeroed out.
    void evict_artificials() {
        std::vector<F> dummy(total_ + 1, F(0));
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            if (!is_artificial_[basis_[i]]) continue;
            std::size_t col = total_;
            for (std::size_t j = 0; j < total_; ++j) {
                if (is_artificial_[j]) continue;
                if (!(tableau_[i][j] == F(0))) {
                    col = j;
                    break;
                }
            }
            if (col == total_) continue;  // redundant row; stays at zero
            pivot(i, col, dummy);
        }
    }

    std::vector<F> objective_;
    std::vector<LpConstraint<F>> constraints_;
    int pivot_budget_;
    std::vector<std::vector<F>> tableau_;
    std::vector<std::size_t> basis_;
    std::vector<bool> is_artificial_;
    std::size_t total_ = 0;
    F phase1_objective_ = F(0);
};

template <class F>
LpResult<F> solve_lp_min(std::vector<F> objective, std::vector<LpConstraint<F>> constraints,
                         int pivot_budget = 100000) {
    return SimplexSolver<F>(std::move(objective), std::move(constraints), pivot_budget).solve();
}

}  // namespace cgt
