#pragma once

#include <Eigen/Core>

namespace gsv::lp {

struct Solution {
  Eigen::VectorXd x;
  double objective = 0.0;
};

// Minimize c'x subject to A x <= b, x >= 0 (b may have any sign).
// Dense two-phase tableau simplex with Bland's rule; sized for the small
// best-approximation programs this library generates, where robustness
// matters more than speed. Throws solver_failure on an infeasible or
// unbounded program.
Solution solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
               const Eigen::VectorXd& c);

inline constexpr double kOptimalityTol = 1e-9;

}  // namespace gsv::lp
