#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "gsv/norms.hpp"
#include "gsv/operators.hpp"

namespace gsv {

enum class SupStrategy { extreme_point_exact, spectral_exact, multistart_heuristic };

const char* to_string(SupStrategy strategy) noexcept;

struct SupResult {
  double value = 0.0;
  Eigen::VectorXd maximizer;
  SupStrategy strategy = SupStrategy::extreme_point_exact;
  bool exact = false;
};

struct SupOptions {
  std::int64_t cap = kDefaultCap;  // Linf vertex enumeration budget
  int multistarts = 64;
  int max_iterations = 500;
  std::uint64_t seed = 0;
  bool force_heuristic = false;
  // Extra ascent seeds (unit vectors in the domain); used by the greedy
  // driver to warm-start later steps with earlier maximizers.
  std::vector<Eigen::VectorXd> warm_starts;
};

// sup over the closed unit ball of the domain norm of
//   x |-> dist_Y(T x, span(basis)).
// The objective is convex, so polytope balls (L1, Linf) are solved exactly
// over their extreme points; L2 -> L2 reduces to the top singular value of
// the basis-deflated matrix; every other pairing falls back to a seeded
// multistart ascent and reports exact=false. Ties between extreme points go
// to the lexicographically smallest maximizer.
SupResult sup_over_ball(const MatrixOperator& T,
                        const std::vector<Eigen::VectorXd>& basis,
                        const SupOptions& options = {});

}  // namespace gsv
