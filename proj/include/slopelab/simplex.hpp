#ifndef SLOPELAB_SIMPLEX_HPP
#define SLOPELAB_SIMPLEX_HPP

#include <vector>

#include "slopelab/rational.hpp"

namespace slopelab::lp {

// minimize cost . x  subject to  rows . x = rhs,  x >= 0
struct StandardLp {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> cost;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    Rational objective;
    std::vector<Rational> x;
    // One multiplier per original row; at optimality cost - duals . rows >= 0
    // componentwise. Redundant rows carry multiplier 0.
    std::vector<Rational> duals;
};

// Two-phase primal simplex in exact rational arithmetic. Bland's least-index
// pivot rule throughout, so the method terminates on every input.
Solution solve(const StandardLp& problem);

}  // namespace slopelab::lp

#endif
