#pragma once

#include <vector>

#include "gitstab/numbers.hpp"

namespace gitstab::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    Rat objective;        // valid when Optimal
    std::vector<Rat> x;   // primal solution, valid when Optimal
    /// Farkas certificate when Infeasible: y with y.col <= 0 for every column
    /// of A and y.b > 0.
    std::vector<Rat> farkas;
};

/// Exact-rational simplex with Bland's anti-cycling rule for
///     minimize c.x  subject to  A x = b,  x >= 0.
/// Phase I always runs; infeasibility comes with a Farkas certificate.
Solution solve(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
               const std::vector<Rat>& c);

}  // namespace gitstab::lp
