#pragma once

#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gsv/norms.hpp"

namespace gsv {

// Dense linear map between finite-dimensional normed coordinate spaces.
// The matrix is m x n, the domain norm lives on R^n and the codomain norm
// on R^m; weighted norms must match those dimensions.
class MatrixOperator {
 public:
  MatrixOperator(Eigen::MatrixXd matrix, Norm domain_norm, Norm codomain_norm);

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const Norm& domain_norm() const { return domain_norm_; }
  const Norm& codomain_norm() const { return codomain_norm_; }
  int rows() const { return static_cast<int>(matrix_.rows()); }
  int cols() const { return static_cast<int>(matrix_.cols()); }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

 private:
  Eigen::MatrixXd matrix_;
  Norm domain_norm_;
  Norm codomain_norm_;
};

// Operator on sequence spaces given column-wise: column(k) lists the
// (row, value) pairs of the image of the k-th coordinate vector. Row
// indices and k are 1-based and every column is finitely supported.
struct SequenceOperator {
  using Column = std::vector<std::pair<int, double>>;

  std::function<Column(int)> column;
  NormKind domain_norm_kind = NormKind::L1;
  NormKind codomain_norm_kind = NormKind::L1;
};

// Restriction to the first n coordinates, materialized as an m_rows x n
// matrix. Throws codomain_overflow when any of the first n columns has a
// nonzero entry below row m_rows; tails are never silently dropped.
MatrixOperator truncate(const SequenceOperator& op, int n, int m_rows);

// Built-in generator families:
//   rank_one_ones      e_k -> e_1
//   harmonic_diag      e_k -> (1/k) e_k
//   rank_one_harmonic  e_k -> (1 - 1/k) e_1
SequenceOperator make_generator(std::string_view name, NormKind domain_kind,
                                NormKind codomain_kind);
bool is_generator_name(std::string_view name);

}  // namespace gsv
