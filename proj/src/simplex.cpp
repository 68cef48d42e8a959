#include "slopelab/simplex.hpp"

#include <cstddef>
#include <functional>
#include <string>

#include "slopelab/errors.hpp"

namespace slopelab::lp {

namespace {

using Tableau = std::vector<std::vector<Rational>>;

struct Workspace {
    Tableau t;                   // active rows of [B^-1 A' | B^-1]
    std::vector<Rational> rhs;   // B^-1 b', stays >= 0
    std::vector<std::size_t> basis;
    std::vector<std::size_t> row_origin;
    std::size_t n = 0;  // structural columns; columns n..n+m-1 are the phase-1 block
};

void pivot(Workspace& w, std::size_t row, std::size_t col) {
    const Rational inv = 1 / w.t[row][col];
    for (auto& v : w.t[row]) v *= inv;
    w.rhs[row] *= inv;
    for (std::size_t i = 0; i < w.t.size(); ++i) {
        if (i == row || w.t[i][col] == 0) continue;
        const Rational factor = w.t[i][col];
        for (std::size_t j = 0; j < w.t[i].size(); ++j) {
            w.t[i][j] -= factor * w.t[row][j];
        }
        w.rhs[i] -= factor * w.rhs[row];
    }
    w.basis[row] = col;
}

// Returns false when the entering column proves the problem unbounded.
// Bland's rule: least-index entering column, least-index basic leaving
// variable among the ratio-test minima.
bool run(Workspace& w, const std::vector<Rational>& cost,
         const std::function<bool(std::size_t)>& may_enter) {
    const std::size_t width = w.n + w.row_origin.size();
    while (true) {
        std::vector<Rational> basic_cost(w.t.size());
        for (std::size_t i = 0; i < w.t.size(); ++i) basic_cost[i] = cost[w.basis[i]];

        std::size_t entering = width;
        for (std::size_t j = 0; j < width; ++j) {
            if (!may_enter(j)) continue;
            Rational reduced = cost[j];
            for (std::size_t i = 0; i < w.t.size(); ++i) {
                reduced -= basic_cost[i] * w.t[i][j];
            }
            if (reduced < 0) {
                entering = j;
                break;
            }
        }
        if (entering == width) return true;  // optimal

        std::size_t leaving = w.t.size();
        Rational best_ratio;
        for (std::size_t i = 0; i < w.t.size(); ++i) {
            if (w.t[i][entering] <= 0) continue;
            const Rational ratio = w.rhs[i] / w.t[i][entering];
            if (leaving == w.t.size() || ratio < best_ratio ||
                (ratio == best_ratio && w.basis[i] < w.basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving == w.t.size()) return false;  // unbounded
        pivot(w, leaving, entering);
    }
}

}  // namespace

Solution solve(const StandardLp& problem) {
    const std::size_t m = problem.rows.size();
    const std::size_t n = problem.cost.size();
    if (problem.rhs.size() != m) {
        throw ValidationError("LP shape: rhs length differs from row count");
    }
    for (const auto& row : problem.rows) {
        if (row.size() != n) {
            throw ValidationError("LP shape: row length differs from cost length");
        }
    }

    Workspace w;
    w.n = n;
    std::vector<int> row_sign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        w.t.emplace_back(n + m, Rational(0));
        Rational b = problem.rhs[i];
        int sign = 1;
        if (b < 0) {
            sign = -1;
            b = -b;
        }
        row_sign[i] = sign;
        for (std::size_t j = 0; j < n; ++j) {
            w.t.back()[j] = sign * problem.rows[i][j];
        }
        w.t.back()[n + i] = 1;
        w.rhs.push_back(b);
        w.basis.push_back(n + i);
        w.row_origin.push_back(i);
    }

    // Phase 1: minimize the artificial total.
    std::vector<Rational> phase1_cost(n + m, Rational(0));
    for (std::size_t j = n; j < n + m; ++j) phase1_cost[j] = 1;
    run(w, phase1_cost, [](std::size_t) { return true; });

    Rational infeasibility = 0;
    for (std::size_t i = 0; i < w.t.size(); ++i) {
        if (w.basis[i] >= n) infeasibility += w.rhs[i];
    }
    Solution result;
    if (infeasibility != 0) {
        result.status = Status::Infeasible;
        return result;
    }

    // Drive remaining artificials out of the basis; rows that admit no
    // structural pivot are redundant and get dropped.
    for (std::size_t i = 0; i < w.t.size();) {
        if (w.basis[i] < n) {
            ++i;
            continue;
        }
        std::size_t col = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (w.t[i][j] != 0) {
                col = j;
                break;
            }
        }
        if (col < n) {
            pivot(w, i, col);
            ++i;
        } else {
            w.t.erase(w.t.begin() + static_cast<std::ptrdiff_t>(i));
            w.rhs.erase(w.rhs.begin() + static_cast<std::ptrdiff_t>(i));
            w.basis.erase(w.basis.begin() + static_cast<std::ptrdiff_t>(i));
            w.row_origin.erase(w.row_origin.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    // Phase 2: artificial columns are frozen out.
    std::vector<Rational> phase2_cost(n + m, Rational(0));
    for (std::size_t j = 0; j < n; ++j) phase2_cost[j] = problem.cost[j];
    const bool bounded = run(w, phase2_cost, [n](std::size_t j) { return j < n; });
    if (!bounded) {
        result.status = Status::Unbounded;
        return result;
    }

    result.status = Status::Optimal;
    result.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < w.t.size(); ++i) {
        if (w.basis[i] < n) result.x[w.basis[i]] = w.rhs[i];
    }
    result.objective = 0;
    for (std::size_t j = 0; j < n; ++j) {
        result.objective += problem.cost[j] * result.x[j];
    }
    // y' = c_B B^-1 read off the phase-1 block, mapped back through the
    // row-sign flips; dropped rows keep multiplier 0.
    result.duals.assign(m, Rational(0));
    for (std::size_t col = 0; col < m; ++col) {
        Rational y = 0;
        for (std::size_t i = 0; i < w.t.size(); ++i) {
            y += problem.cost[w.basis[i]] * w.t[i][n + col];
        }
        result.duals[col] = row_sign[col] * y;
    }
    return result;
}

}  // namespace slopelab::lp
