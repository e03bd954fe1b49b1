#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gsv/operators.hpp"

namespace gsv {

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
  std::string grid_spec;
};

struct BruteForceOptions {
  std::uint64_t seed = 0;
  std::int64_t max_sets = 10'000'000;
};

// Brute-force bracket around the (p+1)-th level: `upper` is the smallest
// exact sup over the ball across every p-subset of a candidate direction
// pool (an angular grid in the codomain, seeded random directions beyond
// dimension 3, plus the images of the domain ball's extreme points);
// `lower` is the largest distance any sampled ball point keeps from the
// best subset found. p = 0 degenerates to the operator norm. Throws
// too_large when the subset count exceeds max_sets.
Bracket brute_force_epsilon(const MatrixOperator& T, int p, int grid_points,
                            const BruteForceOptions& options = {});

// Singular values by way of the Gram matrix's eigenvalues; deliberately a
// different route than hilbert_profile so the two can check each other.
// Trailing values below 1e-12 are dropped.
std::vector<double> svd_reference(const Eigen::MatrixXd& matrix);

}  // namespace gsv
