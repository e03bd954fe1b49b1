#include "gsv/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "gsv/approx.hpp"
#include "gsv/rng.hpp"

namespace gsv {

const char* to_string(SupStrategy strategy) noexcept {
  switch (strategy) {
    case SupStrategy::extreme_point_exact: return "extreme_point_exact";
    case SupStrategy::spectral_exact: return "spectral_exact";
    case SupStrategy::multistart_heuristic: return "multistart_heuristic";
  }
  return "unknown";
}

namespace {

Eigen::VectorXd norm_weights(const Norm& norm, Eigen::Index dim) {
  return norm.weights ? *norm.weights : Eigen::VectorXd::Ones(dim);
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

void canonicalize_sign(Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

void check_basis(const MatrixOperator& T, const std::vector<Eigen::VectorXd>& basis) {
  for (const auto& psi : basis) {
    if (psi.size() != T.rows()) {
      fail(errc::dimension_mismatch, "basis vectors must live in the codomain");
    }
  }
}

SupResult sup_extreme_points(const MatrixOperator& T,
                             const std::vector<Eigen::VectorXd>& basis,
                             const SupOptions& options) {
  const ExtremePointSet set =
      extreme_points(T.domain_norm(), T.cols(), options.cap);
  SupResult best;
  best.value = -1.0;
  for (const auto& x : set.points) {
    const double value =
        subspace_distance(T.apply(x), basis, T.codomain_norm()).distance;
    if (value > best.value ||
        (value == best.value && lex_less(x, best.maximizer))) {
      best.value = value;
      best.maximizer = x;
    }
  }
  best.strategy = SupStrategy::extreme_point_exact;
  best.exact = true;
  return best;
}

// Orthonormal basis of the span of the columns of B (possibly empty).
Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& B) {
  if (B.cols() == 0) return Eigen::MatrixXd(B.rows(), 0);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(B);
  const Eigen::Index rank = qr.rank();
  if (rank == 0) return Eigen::MatrixXd(B.rows(), 0);
  return qr.householderQ() * Eigen::MatrixXd::Identity(B.rows(), rank);
}

// Both norms euclidean: rescale the weights away, deflate the basis span,
// and read the answer off the top singular pair.
SupResult sup_spectral(const MatrixOperator& T,
                       const std::vector<Eigen::VectorXd>& basis) {
  const Eigen::VectorXd wx = norm_weights(T.domain_norm(), T.cols());
  const Eigen::VectorXd wy = norm_weights(T.codomain_norm(), T.rows());
  Eigen::MatrixXd A = wy.asDiagonal() * T.matrix() *
                      wx.cwiseInverse().asDiagonal();

  Eigen::MatrixXd B(T.rows(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    B.col(static_cast<Eigen::Index>(j)) = (wy.array() * basis[j].array()).matrix();
  }
  const Eigen::MatrixXd Q = orthonormal_span(B);
  if (Q.cols() > 0) A -= Q * (Q.transpose() * A);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinV);
  SupResult result;
  result.value = svd.singularValues()(0);
  result.maximizer = svd.matrixV().col(0).cwiseQuotient(wx);
  canonicalize_sign(result.maximizer);
  result.strategy = SupStrategy::spectral_exact;
  result.exact = true;
  return result;
}

// Support point of the unit ball: argmax over the ball of <v, .>.
Eigen::VectorXd support_point(const Eigen::VectorXd& v, const Norm& norm,
                              const Eigen::VectorXd& w) {
  const Eigen::Index n = v.size();
  switch (norm.kind) {
    case NormKind::L2: {
      Eigen::VectorXd u = v.cwiseQuotient(w);
      const double nrm = u.norm();
      if (nrm < 1e-300) return Eigen::VectorXd::Zero(n);
      return u.cwiseQuotient(w) / nrm;
    }
    case NormKind::L1: {
      Eigen::Index best = 0;
      double best_gain = -1.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        const double gain = std::abs(v(j)) / w(j);
        if (gain > best_gain) {
          best_gain = gain;
          best = j;
        }
      }
      Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
      z(best) = (v(best) >= 0.0 ? 1.0 : -1.0) / w(best);
      return z;
    }
    case NormKind::Linf: {
      Eigen::VectorXd z(n);
      for (Eigen::Index j = 0; j < n; ++j) {
        z(j) = (v(j) >= 0.0 ? 1.0 : -1.0) / w(j);
      }
      return z;
    }
  }
  fail(errc::invalid_argument, "unknown norm kind");
}

struct HeuristicObjective {
  const MatrixOperator& T;
  const std::vector<Eigen::VectorXd>& basis;
  Eigen::VectorXd wy;
  Eigen::MatrixXd Q;  // orthonormal span of the scaled basis, L2 codomain only

  HeuristicObjective(const MatrixOperator& t, const std::vector<Eigen::VectorXd>& b)
      : T(t), basis(b), wy(norm_weights(t.codomain_norm(), t.rows())) {
    if (T.codomain_norm().kind == NormKind::L2) {
      Eigen::MatrixXd B(T.rows(), static_cast<Eigen::Index>(basis.size()));
      for (std::size_t j = 0; j < basis.size(); ++j) {
        B.col(static_cast<Eigen::Index>(j)) =
            (wy.array() * basis[j].array()).matrix();
      }
      Q = orthonormal_span(B);
    }
  }

  // Objective value and a subgradient direction pulled back to the domain
  // (Danskin: the minimizing coefficients are held fixed).
  std::pair<double, Eigen::VectorXd> eval(const Eigen::VectorXd& x) const {
    const Eigen::VectorXd y = T.apply(x);
    switch (T.codomain_norm().kind) {
      case NormKind::L2: {
        Eigen::VectorXd r = (wy.array() * y.array()).matrix();
        if (Q.cols() > 0) r -= Q * (Q.transpose() * r);
        const double g = r.norm();
        if (g < 1e-300) return {g, Eigen::VectorXd::Zero(T.cols())};
        return {g, T.matrix().transpose() * (wy.array() * r.array()).matrix() / g};
      }
      case NormKind::L1: {
        const auto fit = subspace_distance(y, basis, T.codomain_norm());
        Eigen::VectorXd r = y;
        for (std::size_t j = 0; j < basis.size(); ++j) {
          r -= fit.coefficients(static_cast<Eigen::Index>(j)) * basis[j];
        }
        Eigen::VectorXd s(T.rows());
        for (Eigen::Index i = 0; i < s.size(); ++i) {
          s(i) = std::abs(r(i)) > 1e-14 ? (r(i) > 0.0 ? wy(i) : -wy(i)) : 0.0;
        }
        return {fit.distance, T.matrix().transpose() * s};
      }
      case NormKind::Linf: {
        const auto fit = subspace_distance(y, basis, T.codomain_norm());
        Eigen::VectorXd r = y;
        for (std::size_t j = 0; j < basis.size(); ++j) {
          r -= fit.coefficients(static_cast<Eigen::Index>(j)) * basis[j];
        }
        Eigen::Index peak = 0;
        double peak_value = -1.0;
        for (Eigen::Index i = 0; i < r.size(); ++i) {
          const double candidate = wy(i) * std::abs(r(i));
          if (candidate > peak_value) {
            peak_value = candidate;
            peak = i;
          }
        }
        Eigen::VectorXd v = T.matrix().row(peak).transpose() * wy(peak);
        if (r(peak) < 0.0) v = -v;
        return {fit.distance, v};
      }
    }
    fail(errc::invalid_argument, "unknown norm kind");
  }
};

SupResult sup_heuristic(const MatrixOperator& T,
                        const std::vector<Eigen::VectorXd>& basis,
                        const SupOptions& options) {
  const HeuristicObjective objective(T, basis);
  const Norm& dom = T.domain_norm();
  const Eigen::VectorXd wx = norm_weights(dom, T.cols());

  std::vector<Eigen::VectorXd> seeds;
  // Pull-back of each codomain coordinate: the ball point that maximizes
  // the i-th output component.
  for (int i = 0; i < T.rows(); ++i) {
    const Eigen::VectorXd row = T.matrix().row(i).transpose();
    if (row.cwiseAbs().maxCoeff() < 1e-300) continue;
    seeds.push_back(support_point(row, dom, wx));
  }
  for (const auto& warm : options.warm_starts) {
    if (warm.size() != T.cols()) continue;
    const double nrm = norm_eval(warm, dom);
    if (nrm > 1e-12) seeds.push_back(warm / nrm);
  }
  std::mt19937_64 engine(mix_seed(options.seed, 0x6d75));
  for (int k = 0; k < std::max(1, options.multistarts); ++k) {
    seeds.push_back(random_unit_vector(engine, dom, T.cols()));
  }

  SupResult best;
  best.value = -1.0;
  for (const auto& seed : seeds) {
    Eigen::VectorXd x = seed;
    auto [g, v] = objective.eval(x);
    for (int iteration = 0; iteration < options.max_iterations; ++iteration) {
      if (v.cwiseAbs().maxCoeff() < 1e-300) break;
      const Eigen::VectorXd z = support_point(v, dom, wx);
      bool improved = false;
      // Step toward the support point of the linearization; halve on
      // non-improvement. The full step never decreases a convex objective,
      // so halving only fires near a fixed point.
      for (double t = 1.0; t >= 1.0 / 1024.0; t /= 2.0) {
        Eigen::VectorXd candidate = x + t * (z - x);
        const double nrm = norm_eval(candidate, dom);
        if (nrm < 1e-300) continue;
        candidate /= nrm;
        auto [gc, vc] = objective.eval(candidate);
        if (gc > g + 1e-15 * (1.0 + g)) {
          x = std::move(candidate);
          g = gc;
          v = std::move(vc);
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }
    if (g > best.value) {
      best.value = g;
      best.maximizer = x;
    }
  }

  best.strategy = SupStrategy::multistart_heuristic;
  best.exact = false;
  return best;
}

}  // namespace

SupResult sup_over_ball(const MatrixOperator& T,
                        const std::vector<Eigen::VectorXd>& basis,
                        const SupOptions& options) {
  check_basis(T, basis);
  if (options.force_heuristic) return sup_heuristic(T, basis, options);

  switch (T.domain_norm().kind) {
    case NormKind::L1:
    case NormKind::Linf:
      return sup_extreme_points(T, basis, options);
    case NormKind::L2:
      if (T.codomain_norm().kind == NormKind::L2) return sup_spectral(T, basis);
      return sup_heuristic(T, basis, options);
  }
  fail(errc::invalid_argument, "unknown norm kind");
}

}  // namespace gsv
