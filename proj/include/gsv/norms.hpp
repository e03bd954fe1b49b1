#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "gsv/error.hpp"

namespace gsv {

enum class NormKind { L1, L2, Linf };

const char* to_string(NormKind kind) noexcept;

// Norm on R^d: the base l^1 / l^2 / l^inf norm applied to the entrywise
// product w_i * x_i. Weights, when present, must be strictly positive and
// fix the dimension the norm acts on; without weights the norm applies to
// any dimension.
struct Norm {
  NormKind kind = NormKind::L2;
  std::optional<Eigen::VectorXd> weights;

  static Norm l1() { return {NormKind::L1, std::nullopt}; }
  static Norm l2() { return {NormKind::L2, std::nullopt}; }
  static Norm linf() { return {NormKind::Linf, std::nullopt}; }
  static Norm weighted(NormKind kind, Eigen::VectorXd w);
};

// Throws dimension_mismatch when weighted and dim != weight count, and
// invalid_argument when any weight is not strictly positive.
void check_norm(const Norm& norm, Eigen::Index dim);

double norm_eval(const Eigen::VectorXd& x, const Norm& norm);

struct ExtremePointSet {
  std::vector<Eigen::VectorXd> points;
  bool exhaustive = false;
};

inline constexpr std::int64_t kDefaultCap = std::int64_t{1} << 20;

// Extreme points of the closed unit ball of `norm` in dimension dim.
//   L1   -> 2*dim signed scaled coordinate vectors, always exhaustive.
//   Linf -> 2^dim sign vectors if 2^dim <= cap, else throws cap_exceeded.
//   L2   -> throws ball_not_enumerable (the sphere has no finite vertex set).
ExtremePointSet extreme_points(const Norm& norm, int dim,
                               std::int64_t cap = kDefaultCap);

}  // namespace gsv
