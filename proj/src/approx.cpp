#include "gsv/approx.hpp"

#include <cmath>
#include <string>

#include <Eigen/QR>

#include "gsv/simplex.hpp"

namespace gsv {

const char* to_string(DistanceCertificate certificate) noexcept {
  switch (certificate) {
    case DistanceCertificate::exact_ls: return "exact_ls";
    case DistanceCertificate::exact_lp: return "exact_lp";
    case DistanceCertificate::degenerate_empty_basis: return "degenerate_empty_basis";
  }
  return "unknown";
}

namespace {

Eigen::VectorXd norm_weights(const Norm& norm, Eigen::Index dim) {
  return norm.weights ? *norm.weights : Eigen::VectorXd::Ones(dim);
}

// min_a || w .* (y - Psi a) ||_p for p in {1, inf} as a linear program over
// (a+, a-, t) >= 0: each residual row i contributes the two constraints
// +-w_i (y_i - Psi_i a) <= t_(i|0), and the objective sums t.
SubspaceDistanceResult polyhedral_fit(const Eigen::VectorXd& y,
                                      const Eigen::MatrixXd& Psi,
                                      const Norm& norm_y) {
  const int m = static_cast<int>(y.size());
  const int q = static_cast<int>(Psi.cols());
  const bool is_l1 = norm_y.kind == NormKind::L1;
  const int n_t = is_l1 ? m : 1;
  const int n_vars = 2 * q + n_t;
  const Eigen::VectorXd w = norm_weights(norm_y, m);

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * m, n_vars);
  Eigen::VectorXd b(2 * m);
  for (int i = 0; i < m; ++i) {
    const int t_col = 2 * q + (is_l1 ? i : 0);
    // w_i (y_i - Psi_i a) <= t
    A.row(2 * i).head(q) = -w(i) * Psi.row(i);
    A.row(2 * i).segment(q, q) = w(i) * Psi.row(i);
    A(2 * i, t_col) = -1.0;
    b(2 * i) = -w(i) * y(i);
    // -w_i (y_i - Psi_i a) <= t
    A.row(2 * i + 1).head(q) = w(i) * Psi.row(i);
    A.row(2 * i + 1).segment(q, q) = -w(i) * Psi.row(i);
    A(2 * i + 1, t_col) = -1.0;
    b(2 * i + 1) = w(i) * y(i);
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n_vars);
  c.tail(n_t).setOnes();

  const lp::Solution sol = lp::solve(A, b, c);

  SubspaceDistanceResult result;
  result.coefficients = sol.x.head(q) - sol.x.segment(q, q);
  result.distance = norm_eval(y - Psi * result.coefficients, norm_y);
  result.certificate = DistanceCertificate::exact_lp;
  if (std::abs(result.distance - sol.objective) >
      1e-7 * (1.0 + std::abs(sol.objective))) {
    fail(errc::solver_failure,
         "best-approximation program and residual norm disagree");
  }
  return result;
}

}  // namespace

SubspaceDistanceResult subspace_distance(const Eigen::VectorXd& y,
                                         const std::vector<Eigen::VectorXd>& basis,
                                         const Norm& norm_y) {
  check_norm(norm_y, y.size());
  if (!y.allFinite()) fail(errc::invalid_argument, "target vector must be finite");
  for (const auto& v : basis) {
    if (v.size() != y.size()) {
      fail(errc::dimension_mismatch,
           "basis vector of length " + std::to_string(v.size()) +
               " against target of length " + std::to_string(y.size()));
    }
    if (!v.allFinite()) fail(errc::invalid_argument, "basis vectors must be finite");
  }

  if (basis.empty()) {
    return {norm_eval(y, norm_y), Eigen::VectorXd(0),
            DistanceCertificate::degenerate_empty_basis};
  }

  const int q = static_cast<int>(basis.size());
  Eigen::MatrixXd Psi(y.size(), q);
  for (int j = 0; j < q; ++j) Psi.col(j) = basis[static_cast<std::size_t>(j)];

  if (norm_y.kind == NormKind::L2) {
    const Eigen::VectorXd w = norm_weights(norm_y, y.size());
    // Rank-revealing solve; gives the minimum-norm coefficients when the
    // basis is linearly dependent.
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(
        w.asDiagonal() * Psi);
    SubspaceDistanceResult result;
    result.coefficients = cod.solve((w.array() * y.array()).matrix());
    result.distance = norm_eval(y - Psi * result.coefficients, norm_y);
    result.certificate = DistanceCertificate::exact_ls;
    return result;
  }
  return polyhedral_fit(y, Psi, norm_y);
}

}  // namespace gsv
