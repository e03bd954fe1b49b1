#include "gsv/operators.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace gsv {

MatrixOperator::MatrixOperator(Eigen::MatrixXd matrix, Norm domain_norm,
                               Norm codomain_norm)
    : matrix_(std::move(matrix)),
      domain_norm_(std::move(domain_norm)),
      codomain_norm_(std::move(codomain_norm)) {
  if (matrix_.rows() < 1 || matrix_.cols() < 1) {
    fail(errc::invalid_argument, "operator matrix must have at least one row and column");
  }
  if (!matrix_.allFinite()) {
    fail(errc::invalid_argument, "operator matrix entries must be finite");
  }
  check_norm(domain_norm_, matrix_.cols());
  check_norm(codomain_norm_, matrix_.rows());
}

Eigen::VectorXd MatrixOperator::apply(const Eigen::VectorXd& x) const {
  if (x.size() != matrix_.cols()) {
    fail(errc::dimension_mismatch,
         "operator expects dimension " + std::to_string(matrix_.cols()) +
             ", got " + std::to_string(x.size()));
  }
  return matrix_ * x;
}

MatrixOperator truncate(const SequenceOperator& op, int n, int m_rows) {
  if (!op.column) fail(errc::invalid_argument, "sequence operator has no column function");
  if (n < 1 || m_rows < 1) {
    fail(errc::invalid_argument, "truncation dimensions must be positive");
  }

  Eigen::MatrixXd matrix = Eigen::MatrixXd::Zero(m_rows, n);
  for (int k = 1; k <= n; ++k) {
    for (const auto& [row, value] : op.column(k)) {
      if (row < 1) fail(errc::invalid_argument, "column entries must use 1-based rows");
      if (value == 0.0) continue;
      if (row > m_rows) {
        fail(errc::codomain_overflow,
             "column " + std::to_string(k) + " has support at row " +
                 std::to_string(row) + " beyond " + std::to_string(m_rows));
      }
      matrix(row - 1, k - 1) += value;
    }
  }
  return MatrixOperator(std::move(matrix), Norm{op.domain_norm_kind, std::nullopt},
                        Norm{op.codomain_norm_kind, std::nullopt});
}

bool is_generator_name(std::string_view name) {
  return name == "rank_one_ones" || name == "harmonic_diag" ||
         name == "rank_one_harmonic";
}

SequenceOperator make_generator(std::string_view name, NormKind domain_kind,
                                NormKind codomain_kind) {
  SequenceOperator op;
  op.domain_norm_kind = domain_kind;
  op.codomain_norm_kind = codomain_kind;
  if (name == "rank_one_ones") {
    op.column = [](int) { return SequenceOperator::Column{{1, 1.0}}; };
  } else if (name == "harmonic_diag") {
    op.column = [](int k) { return SequenceOperator::Column{{k, 1.0 / k}}; };
  } else if (name == "rank_one_harmonic") {
    op.column = [](int k) { return SequenceOperator::Column{{1, 1.0 - 1.0 / k}}; };
  } else {
    fail(errc::invalid_argument, "unknown generator: " + std::string(name));
  }
  return op;
}

}  // namespace gsv
