#include "gsv/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/SVD>

#include "gsv/rng.hpp"

namespace gsv {

const char* to_string(Provenance provenance) noexcept {
  switch (provenance) {
    case Provenance::exact: return "exact";
    case Provenance::upper_bound: return "upper_bound";
    case Provenance::heuristic: return "heuristic";
  }
  return "unknown";
}

void validate(const SingularProfile& profile) {
  if (profile.provenance.size() != profile.values.size()) {
    fail(errc::invalid_argument, "profile provenance length mismatch");
  }
  if (!profile.maximizers.empty() &&
      profile.maximizers.size() != profile.values.size()) {
    fail(errc::invalid_argument, "profile maximizer length mismatch");
  }
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    const double v = profile.values[i];
    if (!std::isfinite(v) || v < 0.0) {
      fail(errc::invalid_argument, "profile values must be finite and nonnegative");
    }
    if (i > 0 && v > profile.values[i - 1] + 1e-12) {
      fail(errc::invalid_argument, "profile values must be non-increasing");
    }
  }
}

namespace {

void canonicalize_sign(Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace

SingularProfile greedy_profile(const MatrixOperator& T, int p_max,
                               const SupOptions& options) {
  if (p_max < 1) fail(errc::invalid_argument, "p_max must be positive");

  SingularProfile profile;
  std::vector<Eigen::VectorXd> span;
  bool all_exact = true;
  double previous = std::numeric_limits<double>::infinity();
  SupOptions step = options;

  for (int p = 1; p <= p_max; ++p) {
    step.seed = mix_seed(options.seed, static_cast<std::uint64_t>(p));
    step.warm_starts = profile.maximizers;
    const SupResult sup = sup_over_ball(T, span, step);
    // Exact strategies are monotone up to rounding; heuristic values carry
    // no certificate, so clamping to the previous level keeps the profile
    // non-increasing without overstating anything.
    const double value = std::min(sup.value, previous);
    if (value < kProfileTruncationTol) break;

    Provenance provenance;
    if (p == 1) {
      provenance = sup.exact ? Provenance::exact : Provenance::heuristic;
    } else {
      provenance = (all_exact && sup.exact) ? Provenance::upper_bound
                                            : Provenance::heuristic;
    }
    all_exact = all_exact && sup.exact;

    profile.values.push_back(value);
    profile.provenance.push_back(provenance);
    profile.maximizers.push_back(sup.maximizer);
    span.push_back(T.apply(sup.maximizer));
    previous = value;
  }
  return profile;
}

SingularProfile greedy_profile(const MatrixOperator& T, int p_max,
                               std::uint64_t seed) {
  SupOptions options;
  options.seed = seed;
  return greedy_profile(T, p_max, options);
}

SingularProfile hilbert_profile(const MatrixOperator& T) {
  if (T.domain_norm().kind != NormKind::L2 ||
      T.codomain_norm().kind != NormKind::L2) {
    fail(errc::not_hilbert, "hilbert_profile needs l2 norms on both sides");
  }
  const Eigen::VectorXd wx = T.domain_norm().weights
                                 ? *T.domain_norm().weights
                                 : Eigen::VectorXd::Ones(T.cols());
  const Eigen::VectorXd wy = T.codomain_norm().weights
                                 ? *T.codomain_norm().weights
                                 : Eigen::VectorXd::Ones(T.rows());
  const Eigen::MatrixXd A =
      wy.asDiagonal() * T.matrix() * wx.cwiseInverse().asDiagonal();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinV);
  SingularProfile profile;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double sigma = svd.singularValues()(i);
    if (sigma < kProfileTruncationTol) break;
    Eigen::VectorXd x = svd.matrixV().col(i).cwiseQuotient(wx);
    canonicalize_sign(x);
    profile.values.push_back(sigma);
    profile.provenance.push_back(Provenance::exact);
    profile.maximizers.push_back(std::move(x));
  }
  return profile;
}

int dof_at_level(const SingularProfile& profile, double level) {
  validate(profile);
  if (!(level > 0.0)) fail(errc::invalid_argument, "level must be positive");
  int count = 0;
  for (const double v : profile.values) {
    if (v > level) ++count;
  }
  return count;
}

DofStepFunction dof_function(const SingularProfile& profile) {
  validate(profile);
  if (profile.values.empty()) fail(errc::invalid_argument, "profile must be nonempty");

  std::vector<double> values;
  for (const double v : profile.values) {
    if (v > 0.0) values.push_back(v);
  }
  std::sort(values.begin(), values.end(), std::greater<>());

  DofStepFunction step;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (step.breakpoints.empty() || values[i] != step.breakpoints.back()) {
      step.breakpoints.push_back(values[i]);
      step.plateau_counts.push_back(static_cast<int>(i) + 1);
    } else {
      step.plateau_counts.back() = static_cast<int>(i) + 1;
    }
  }
  return step;
}

int evaluate(const DofStepFunction& step, double level) {
  if (!(level > 0.0)) fail(errc::invalid_argument, "level must be positive");
  const std::size_t count = step.breakpoints.size();
  if (count == 0 || level >= step.breakpoints.front()) return 0;
  for (std::size_t j = 0; j + 1 < count; ++j) {
    if (level >= step.breakpoints[j + 1]) return step.plateau_counts[j];
  }
  return step.plateau_counts.back();
}

SingularProfile profile_from_dof(const DofStepFunction& step) {
  if (step.breakpoints.size() != step.plateau_counts.size()) {
    fail(errc::not_a_dof_function, "breakpoint and count lists disagree in length");
  }
  SingularProfile profile;
  int previous_count = 0;
  double previous_level = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < step.breakpoints.size(); ++j) {
    const double level = step.breakpoints[j];
    if (!std::isfinite(level) || level <= 0.0 || level >= previous_level) {
      fail(errc::not_a_dof_function,
           "breakpoints must be strictly decreasing and positive");
    }
    const int jump = step.plateau_counts[j] - previous_count;
    if (jump < 0) {
      fail(errc::not_a_dof_function, "counts must not decrease as the level falls");
    }
    for (int r = 0; r < jump; ++r) {
      profile.values.push_back(level);
      profile.provenance.push_back(Provenance::exact);
    }
    previous_count = step.plateau_counts[j];
    previous_level = level;
  }
  return profile;
}

namespace {

constexpr double kTieTol = 1e-12;

EssDimReport report_from_table(std::vector<std::pair<int, double>> table, int order) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& [n, e] : table) best = std::max(best, e);

  EssDimReport report;
  report.order = order;
  report.e_table = std::move(table);
  for (const auto& [n, e] : report.e_table) {
    if (e >= best - kTieTol) report.argmax_ties.push_back(n);
  }
  report.ess_dim = report.argmax_ties.front();
  return report;
}

}  // namespace

EssDimReport essential_dimension(const SingularProfile& profile) {
  validate(profile);
  const int K = static_cast<int>(profile.values.size());
  if (K == 0) fail(errc::invalid_argument, "profile must be nonempty");

  std::vector<std::pair<int, double>> table;
  table.reserve(static_cast<std::size_t>(K));
  for (int n = 1; n < K; ++n) {
    table.emplace_back(n, profile.values[n - 1] - profile.values[n]);
  }
  // The level set below the last entry extends down to zero.
  table.emplace_back(K, profile.values[K - 1]);
  return report_from_table(std::move(table), 1);
}

EssDimReport essential_dimension_order(const SingularProfile& profile, int order) {
  validate(profile);
  const int K = static_cast<int>(profile.values.size());
  if (K == 0) fail(errc::invalid_argument, "profile must be nonempty");
  if (order < 1) fail(errc::invalid_argument, "order must be positive");

  const int lo = order % 2 == 0 ? order / 2 : (order - 1) / 2;
  const int hi = order % 2 == 0 ? order / 2 : (order + 1) / 2;
  if (lo + 1 > K - hi) {
    fail(errc::order_too_large,
         "order " + std::to_string(order) + " admits no center in a profile of length " +
             std::to_string(K));
  }

  std::vector<std::pair<int, double>> table;
  for (int center = lo + 1; center <= K - hi; ++center) {
    table.emplace_back(center,
                       profile.values[center - lo - 1] - profile.values[center + hi - 1]);
  }
  return report_from_table(std::move(table), order);
}

std::vector<TruncationPoint> truncation_study(const SequenceOperator& op, int m,
                                              const std::vector<int>& n_range,
                                              int m_rows,
                                              const SupOptions& options) {
  if (m < 1) fail(errc::invalid_argument, "m must be positive");
  if (n_range.empty()) fail(errc::invalid_argument, "n_range must be nonempty");
  for (std::size_t i = 0; i < n_range.size(); ++i) {
    if (n_range[i] < 1 || (i > 0 && n_range[i] <= n_range[i - 1])) {
      fail(errc::invalid_argument, "n_range must be strictly increasing and positive");
    }
  }

  std::vector<TruncationPoint> points;
  points.reserve(n_range.size());
  for (const int n : n_range) {
    const MatrixOperator T = truncate(op, n, m_rows);
    const SingularProfile profile = greedy_profile(T, m, options);
    TruncationPoint point;
    point.n = n;
    if (profile.values.size() >= static_cast<std::size_t>(m)) {
      point.value = profile.values[static_cast<std::size_t>(m) - 1];
      point.provenance = profile.provenance[static_cast<std::size_t>(m) - 1];
    }
    points.push_back(std::move(point));
  }
  return points;
}

}  // namespace gsv
