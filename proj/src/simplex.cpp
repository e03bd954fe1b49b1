#include "gsv/simplex.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "gsv/error.hpp"

namespace gsv::lp {

namespace {

constexpr double kPivotTol = 1e-9;

// Tableau rows 0..m-1 hold the constraints, row m the phase-2 reduced
// costs and row m+1 the phase-1 reduced costs; the last column is the rhs.
struct Tableau {
  Eigen::MatrixXd t;
  std::vector<int> basis;
  int m, n, n_slack, n_art;

  int cols() const { return n + n_slack + n_art; }
  bool is_artificial(int j) const { return j >= n + n_slack; }

  void pivot(int row, int col) {
    t.row(row) /= t(row, col);
    for (int r = 0; r < t.rows(); ++r) {
      if (r == row || t(r, col) == 0.0) continue;
      t.row(r) -= t(r, col) * t.row(row);
    }
    basis[static_cast<std::size_t>(row)] = col;
  }

  // Bland's rule: smallest eligible entering column, leaving row chosen by
  // minimum ratio with ties broken by smallest basic variable index.
  // Returns false when the objective is unbounded below.
  bool run(int objective_row) {
    const int rhs = cols();
    const long max_iterations = 50000L + 200L * (m + cols());
    for (long iteration = 0; iteration < max_iterations; ++iteration) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (is_artificial(j)) continue;  // dropped once out of the basis
        if (t(objective_row, j) < -kOptimalityTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m; ++i) {
        if (t(i, enter) <= kPivotTol) continue;
        const double ratio = t(i, rhs) / t(i, enter);
        if (leave < 0 || ratio < best_ratio - 1e-12) {
          leave = i;
          best_ratio = ratio;
        } else if (ratio <= best_ratio + 1e-12 &&
                   basis[static_cast<std::size_t>(i)] <
                       basis[static_cast<std::size_t>(leave)]) {
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    fail(errc::solver_failure, "simplex iteration limit reached");
  }
};

}  // namespace

Solution solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
               const Eigen::VectorXd& c) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (m < 1 || n < 1) fail(errc::invalid_argument, "empty linear program");
  if (b.size() != m || c.size() != n) {
    fail(errc::dimension_mismatch, "linear program dimensions disagree");
  }

  int n_art = 0;
  std::vector<int> art_of_row(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    if (b(i) < 0.0) art_of_row[static_cast<std::size_t>(i)] = n_art++;
  }

  Tableau tab;
  tab.m = m;
  tab.n = n;
  tab.n_slack = m;
  tab.n_art = n_art;
  tab.basis.assign(static_cast<std::size_t>(m), -1);
  const int rhs = tab.cols();
  tab.t = Eigen::MatrixXd::Zero(m + 2, rhs + 1);

  // Rows with negative rhs are negated so every basic solution starts
  // feasible; their slack then has coefficient -1 and an artificial
  // variable carries the initial basis instead.
  for (int i = 0; i < m; ++i) {
    const double sign = b(i) < 0.0 ? -1.0 : 1.0;
    tab.t.row(i).head(n) = sign * A.row(i);
    tab.t(i, n + i) = sign;
    tab.t(i, rhs) = sign * b(i);
    const int a = art_of_row[static_cast<std::size_t>(i)];
    if (a >= 0) {
      tab.t(i, n + m + a) = 1.0;
      tab.basis[static_cast<std::size_t>(i)] = n + m + a;
    } else {
      tab.basis[static_cast<std::size_t>(i)] = n + i;
    }
  }

  tab.t.row(m).head(n) = c.transpose();
  if (n_art > 0) {
    for (int a = 0; a < n_art; ++a) tab.t(m + 1, n + m + a) = 1.0;
    for (int i = 0; i < m; ++i) {
      if (art_of_row[static_cast<std::size_t>(i)] >= 0) {
        tab.t.row(m + 1) -= tab.t.row(i);
      }
    }

    if (!tab.run(m + 1)) fail(errc::solver_failure, "phase 1 unbounded");
    const double infeasibility = -tab.t(m + 1, rhs);
    if (infeasibility > 1e-7 * (1.0 + b.cwiseAbs().maxCoeff())) {
      fail(errc::solver_failure, "linear program infeasible");
    }
    // Degenerate artificials still in the basis either pivot onto a real
    // column or sit on a redundant row that phase 2 can never touch.
    for (int i = 0; i < m; ++i) {
      if (tab.basis[static_cast<std::size_t>(i)] < n + m) continue;
      for (int j = 0; j < n + m; ++j) {
        if (std::abs(tab.t(i, j)) > kPivotTol) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  if (!tab.run(m)) fail(errc::solver_failure, "linear program unbounded");

  Solution solution;
  solution.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i) {
    const int j = tab.basis[static_cast<std::size_t>(i)];
    if (j < n) solution.x(j) = tab.t(i, rhs);
  }
  solution.objective = -tab.t(m, rhs);
  return solution;
}

}  // namespace gsv::lp
