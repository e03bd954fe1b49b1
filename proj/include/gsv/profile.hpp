#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gsv/minimax.hpp"
#include "gsv/operators.hpp"

namespace gsv {

enum class Provenance { exact, upper_bound, heuristic };

const char* to_string(Provenance provenance) noexcept;

// Non-increasing list of approximation levels. values[p-1] is the smallest
// level achievable with p-1 approximating vectors that the producing
// algorithm could certify or reach; provenance says in what sense.
struct SingularProfile {
  std::vector<double> values;
  std::vector<Provenance> provenance;
  // Attaining unit vectors in the domain; may be empty when the producer
  // has none (e.g. profiles read from files).
  std::vector<Eigen::VectorXd> maximizers;
};

// Throws unless values are finite, nonnegative, non-increasing (1e-12
// slack) and the provenance list matches in length.
void validate(const SingularProfile& profile);

inline constexpr double kProfileTruncationTol = 1e-12;

// Greedy sweep: step p maximizes the distance from T x to the span of the
// previously collected images, then adjoins T x_p to the basis. The first
// value is the operator norm. Entries are exact when every sup so far used
// an exact strategy (entry 1) or upper bounds in that case (entries >= 2);
// one heuristic sup taints all later entries. Stops once a value drops
// below kProfileTruncationTol.
SingularProfile greedy_profile(const MatrixOperator& T, int p_max,
                               const SupOptions& options = {});
SingularProfile greedy_profile(const MatrixOperator& T, int p_max,
                               std::uint64_t seed);

// Classical singular values, valid only when both norms are L2 (throws
// not_hilbert otherwise). Weighted L2 norms are rescaled away by diagonal
// congruence before the decomposition. All entries exact; trailing values
// below kProfileTruncationTol are dropped.
SingularProfile hilbert_profile(const MatrixOperator& T);

// Number of profile entries strictly greater than level (level > 0).
int dof_at_level(const SingularProfile& profile, double level);

// Right-continuous step-function view of the profile: N(eps) on
// [breakpoints[j+1], breakpoints[j]) is plateau_counts[j], N = 0 at and
// above the largest breakpoint, and N = K on (0, smallest breakpoint).
// Zero entries of the profile are invisible to every positive level and
// produce no breakpoint.
struct DofStepFunction {
  std::vector<double> breakpoints;   // strictly decreasing, positive
  std::vector<int> plateau_counts;   // strictly increasing
};

DofStepFunction dof_function(const SingularProfile& profile);
int evaluate(const DofStepFunction& step, double level);

// Reads the jump heights back off the step function; inverse of
// dof_function on zero-free profiles. Throws not_a_dof_function when the
// counts decrease (or the breakpoints are not strictly decreasing and
// positive).
SingularProfile profile_from_dof(const DofStepFunction& step);

struct EssDimReport {
  int ess_dim = 0;
  // (n, E(n)) pairs: the measure of the level set {eps : N(eps) = n} for
  // the plain definition, or the order-n gap for each admissible center.
  std::vector<std::pair<int, double>> e_table;
  int order = 1;
  std::vector<int> argmax_ties;
};

// argmax_n E(n) where E(n) = eps_n - eps_{n+1} for n < K and E(K) = eps_K;
// smallest n on ties (1e-12 tolerance).
EssDimReport essential_dimension(const SingularProfile& profile);

// Order-n variant: maximizes the gap across a window of width n centered
// at N (even n: eps_{N-n/2} - eps_{N+n/2}; odd n: eps_{N-(n-1)/2} -
// eps_{N+(n+1)/2}), over the N for which all indices exist. Throws
// order_too_large when no admissible N remains.
EssDimReport essential_dimension_order(const SingularProfile& profile, int order);

struct TruncationPoint {
  int n = 0;
  std::optional<double> value;  // m-th greedy value, absent when the
                                // truncated profile is shorter than m
  Provenance provenance = Provenance::exact;  // meaningful only when value
};

// Greedy m-th value of the restriction to the first n coordinates, for
// each n in n_range (strictly increasing). Exact runs are non-decreasing
// in n and bounded by the full operator's m-th value.
std::vector<TruncationPoint> truncation_study(const SequenceOperator& op, int m,
                                              const std::vector<int>& n_range,
                                              int m_rows,
                                              const SupOptions& options = {});

}  // namespace gsv
