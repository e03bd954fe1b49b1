#pragma once

#include <vector>

#include <Eigen/Core>

#include "gsv/norms.hpp"

namespace gsv {

enum class DistanceCertificate { exact_ls, exact_lp, degenerate_empty_basis };

const char* to_string(DistanceCertificate certificate) noexcept;

struct SubspaceDistanceResult {
  double distance = 0.0;
  Eigen::VectorXd coefficients;
  DistanceCertificate certificate = DistanceCertificate::degenerate_empty_basis;
};

// Distance from y to span(basis) in norm_y, with the minimizing
// coefficients. An empty basis gives ||y|| back. L2 distances come from a
// rank-revealing least-squares solve (minimum-norm coefficients when the
// basis is dependent); L1 and Linf distances come from the standard linear
// programs over the residual magnitudes.
SubspaceDistanceResult subspace_distance(const Eigen::VectorXd& y,
                                         const std::vector<Eigen::VectorXd>& basis,
                                         const Norm& norm_y);

}  // namespace gsv
