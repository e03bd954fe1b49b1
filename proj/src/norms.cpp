#include "gsv/norms.hpp"

#include <cmath>
#include <string>

namespace gsv {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::ball_not_enumerable: return "ball_not_enumerable";
    case errc::cap_exceeded: return "cap_exceeded";
    case errc::codomain_overflow: return "codomain_overflow";
    case errc::not_hilbert: return "not_hilbert";
    case errc::not_a_dof_function: return "not_a_dof_function";
    case errc::order_too_large: return "order_too_large";
    case errc::too_large: return "too_large";
    case errc::parse_error: return "parse_error";
    case errc::solver_failure: return "solver_failure";
    case errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

const char* to_string(NormKind kind) noexcept {
  switch (kind) {
    case NormKind::L1: return "l1";
    case NormKind::L2: return "l2";
    case NormKind::Linf: return "linf";
  }
  return "unknown";
}

Norm Norm::weighted(NormKind kind, Eigen::VectorXd w) {
  Norm norm{kind, std::move(w)};
  check_norm(norm, norm.weights->size());
  return norm;
}

void check_norm(const Norm& norm, Eigen::Index dim) {
  if (!norm.weights) return;
  if (norm.weights->size() != dim) {
    fail(errc::dimension_mismatch,
         "norm weights have length " + std::to_string(norm.weights->size()) +
             " but the space has dimension " + std::to_string(dim));
  }
  for (Eigen::Index i = 0; i < norm.weights->size(); ++i) {
    if (!((*norm.weights)(i) > 0.0) || !std::isfinite((*norm.weights)(i))) {
      fail(errc::invalid_argument, "norm weights must be finite and strictly positive");
    }
  }
}

double norm_eval(const Eigen::VectorXd& x, const Norm& norm) {
  check_norm(norm, x.size());
  Eigen::VectorXd scaled = norm.weights ? (norm.weights->array() * x.array()).matrix() : x;
  switch (norm.kind) {
    case NormKind::L1: return scaled.lpNorm<1>();
    case NormKind::L2: return scaled.norm();
    case NormKind::Linf: return scaled.size() == 0 ? 0.0 : scaled.lpNorm<Eigen::Infinity>();
  }
  fail(errc::invalid_argument, "unknown norm kind");
}

ExtremePointSet extreme_points(const Norm& norm, int dim, std::int64_t cap) {
  if (dim < 1) fail(errc::invalid_argument, "dimension must be positive");
  if (cap < 1) fail(errc::invalid_argument, "cap must be positive");
  check_norm(norm, dim);

  const auto weight = [&](int i) {
    return norm.weights ? (*norm.weights)(i) : 1.0;
  };

  ExtremePointSet set;
  switch (norm.kind) {
    case NormKind::L1: {
      // Cross-polytope: +-e_j scaled to unit norm.
      set.points.reserve(2 * static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) {
        Eigen::VectorXd p = Eigen::VectorXd::Zero(dim);
        p(j) = 1.0 / weight(j);
        set.points.push_back(p);
        set.points.push_back(-p);
      }
      set.exhaustive = true;
      return set;
    }
    case NormKind::Linf: {
      // Box: all sign patterns, one coordinate scale per axis.
      if (dim >= 63 || (std::int64_t{1} << dim) > cap) {
        fail(errc::cap_exceeded,
             "2^" + std::to_string(dim) + " box vertices exceed cap " + std::to_string(cap));
      }
      const std::int64_t count = std::int64_t{1} << dim;
      set.points.reserve(static_cast<std::size_t>(count));
      for (std::int64_t mask = 0; mask < count; ++mask) {
        Eigen::VectorXd p(dim);
        for (int j = 0; j < dim; ++j) {
          p(j) = ((mask >> j) & 1 ? 1.0 : -1.0) / weight(j);
        }
        set.points.push_back(std::move(p));
      }
      set.exhaustive = true;
      return set;
    }
    case NormKind::L2:
      fail(errc::ball_not_enumerable, "the l2 ball has no finite extreme point set");
  }
  fail(errc::invalid_argument, "unknown norm kind");
}

}  // namespace gsv
