#include "gsv/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "gsv/approx.hpp"
#include "gsv/minimax.hpp"
#include "gsv/profile.hpp"
#include "gsv/rng.hpp"

namespace gsv {

std::vector<double> svd_reference(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() < 1 || matrix.cols() < 1) {
    fail(errc::invalid_argument, "matrix must be nonempty");
  }
  // Work with the smaller Gram matrix; its eigenvalues are the squared
  // singular values.
  const Eigen::MatrixXd gram =
      matrix.cols() <= matrix.rows()
          ? Eigen::MatrixXd(matrix.transpose() * matrix)
          : Eigen::MatrixXd(matrix * matrix.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(gram);
  if (eigen.info() != Eigen::Success) {
    fail(errc::solver_failure, "eigen decomposition failed");
  }

  std::vector<double> values;
  for (Eigen::Index i = eigen.eigenvalues().size() - 1; i >= 0; --i) {
    const double sigma = std::sqrt(std::max(0.0, eigen.eigenvalues()(i)));
    if (sigma < kProfileTruncationTol) break;
    values.push_back(sigma);
  }
  return values;
}

namespace {

// Direction pool over the unit sphere of R^dim: exhaustive-ish angular
// grids through dimension 3, seeded random directions beyond. Doubling
// grid_points refines the grid without losing any old point.
std::vector<Eigen::VectorXd> sphere_grid(int dim, int grid_points,
                                         std::uint64_t seed) {
  std::vector<Eigen::VectorXd> points;
  if (dim == 1) {
    points.push_back(Eigen::VectorXd::Ones(1));
    return points;
  }
  if (dim == 2) {
    points.reserve(static_cast<std::size_t>(grid_points));
    for (int k = 0; k < grid_points; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / grid_points;
      Eigen::VectorXd p(2);
      p << std::cos(theta), std::sin(theta);
      points.push_back(std::move(p));
    }
    return points;
  }
  if (dim == 3) {
    for (int j = 0; j <= grid_points; ++j) {
      const double phi = std::numbers::pi * j / grid_points;
      for (int k = 0; k < grid_points; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / grid_points;
        Eigen::VectorXd p(3);
        p << std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta),
            std::cos(phi);
        points.push_back(std::move(p));
      }
    }
    return points;
  }
  std::mt19937_64 engine(seed);
  points.reserve(static_cast<std::size_t>(grid_points));
  for (int k = 0; k < grid_points; ++k) {
    points.push_back(random_l2_direction(engine, dim));
  }
  return points;
}

std::int64_t binomial_capped(std::int64_t n, std::int64_t k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

}  // namespace

Bracket brute_force_epsilon(const MatrixOperator& T, int p, int grid_points,
                            const BruteForceOptions& options) {
  if (p < 0) fail(errc::invalid_argument, "p must be nonnegative");
  if (grid_points < 1) fail(errc::invalid_argument, "grid_points must be positive");

  SupOptions sup_options;
  sup_options.seed = mix_seed(options.seed, 0x5b);

  if (p == 0) {
    const SupResult norm = sup_over_ball(T, {}, sup_options);
    Bracket bracket;
    bracket.lower = bracket.upper = norm.value;
    bracket.grid_spec = std::string("p=0 operator norm via ") + to_string(norm.strategy);
    return bracket;
  }

  // Candidate directions: a codomain grid plus the images of the domain
  // ball's extreme points, so the greedy algorithm's own choices are always
  // inside the search set.
  std::vector<Eigen::VectorXd> pool =
      sphere_grid(T.rows(), grid_points, mix_seed(options.seed, 1));
  std::size_t image_count = 0;
  if (T.domain_norm().kind != NormKind::L2) {
    for (const auto& x : extreme_points(T.domain_norm(), T.cols()).points) {
      Eigen::VectorXd image = T.apply(x);
      const double nrm = norm_eval(image, T.codomain_norm());
      if (nrm < 1e-14) continue;
      pool.push_back(image / nrm);
      ++image_count;
    }
  }

  const std::int64_t pool_size = static_cast<std::int64_t>(pool.size());
  const std::int64_t set_count = binomial_capped(pool_size, p, options.max_sets);
  if (set_count > options.max_sets) {
    fail(errc::too_large, "candidate set count exceeds " + std::to_string(options.max_sets));
  }
  if (set_count == 0) {
    fail(errc::invalid_argument, "candidate pool smaller than p");
  }

  std::vector<Eigen::VectorXd> best_set;
  double upper = std::numeric_limits<double>::infinity();
  bool all_exact = true;
  std::vector<int> index(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) index[static_cast<std::size_t>(i)] = i;
  std::vector<Eigen::VectorXd> candidate(static_cast<std::size_t>(p));
  while (true) {
    for (int i = 0; i < p; ++i) {
      candidate[static_cast<std::size_t>(i)] =
          pool[static_cast<std::size_t>(index[static_cast<std::size_t>(i)])];
    }
    const SupResult sup = sup_over_ball(T, candidate, sup_options);
    all_exact = all_exact && sup.exact;
    if (sup.value < upper) {
      upper = sup.value;
      best_set = candidate;
    }
    // next p-combination of pool indices
    int pos = p - 1;
    while (pos >= 0 &&
           index[static_cast<std::size_t>(pos)] ==
               static_cast<int>(pool_size) - p + pos) {
      --pos;
    }
    if (pos < 0) break;
    ++index[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < p; ++i) {
      index[static_cast<std::size_t>(i)] = index[static_cast<std::size_t>(i - 1)] + 1;
    }
  }

  // Every sampled ball point keeps at least `lower` distance from the best
  // set, so lower is a certified floor for that set's sup.
  std::vector<Eigen::VectorXd> samples;
  if (T.domain_norm().kind != NormKind::L2) {
    samples = extreme_points(T.domain_norm(), T.cols()).points;
  } else {
    samples = sphere_grid(T.cols(), grid_points, mix_seed(options.seed, 2));
    if (T.domain_norm().weights) {
      for (auto& s : samples) {
        s = s.cwiseQuotient(*T.domain_norm().weights);
      }
    }
  }
  double lower = 0.0;
  for (const auto& x : samples) {
    lower = std::max(
        lower, subspace_distance(T.apply(x), best_set, T.codomain_norm()).distance);
  }
  lower = std::min(lower, upper);

  Bracket bracket;
  bracket.lower = lower;
  bracket.upper = upper;
  bracket.grid_spec = "codomain grid g=" + std::to_string(grid_points) +
                      " pool=" + std::to_string(pool_size) +
                      " (images=" + std::to_string(image_count) + ")" +
                      " sets=" + std::to_string(set_count) +
                      " samples=" + std::to_string(samples.size()) +
                      (all_exact ? " sup=exact" : " sup=heuristic");
  return bracket;
}

}  // namespace gsv
