#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "gsv/approx.hpp"
#include "gsv/error.hpp"
#include "gsv/profile.hpp"
#include "support/test_helpers.hpp"

using gsv::DofStepFunction;
using gsv::MatrixOperator;
using gsv::Norm;
using gsv::NormKind;
using gsv::Provenance;
using gsv::SingularProfile;
using gsv::SupOptions;
using gsv::testing::diag_op;
using gsv::testing::random_matrix;
using gsv::testing::vec;

namespace {

SingularProfile profile_of(std::initializer_list<double> values) {
  SingularProfile p;
  p.values = values;
  p.provenance.assign(p.values.size(), Provenance::exact);
  return p;
}

// Worked seven-level example: one dominant cluster of four, then a tail.
const SingularProfile kSeven = profile_of({1.0, 0.9, 0.85, 0.5, 0.1, 0.05, 0.0005});

// Worked nine-level example: a tight cluster of seven, then a cliff.
const SingularProfile kNine =
    profile_of({1.0, 0.98, 0.96, 0.94, 0.92, 0.9, 0.8, 0.4, 0.1});

double replay(const MatrixOperator& T, const SingularProfile& profile,
              std::size_t index) {
  std::vector<Eigen::VectorXd> span;
  for (std::size_t j = 0; j < index; ++j) {
    span.push_back(T.apply(profile.maximizers[j]));
  }
  return gsv::subspace_distance(T.apply(profile.maximizers[index]), span,
                                T.codomain_norm())
      .distance;
}

}  // namespace

TEST_CASE("greedy sweep on a max-norm diagonal overshoots the second level") {
  const auto T = diag_op({1.0, 0.5}, Norm::linf(), Norm::linf());
  const auto profile = gsv::greedy_profile(T, 5, 0);

  REQUIRE(profile.values.size() == 2);
  CHECK(profile.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(profile.values[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(profile.provenance[0] == Provenance::exact);
  CHECK(profile.provenance[1] == Provenance::upper_bound);
  // Each stored value replays as the distance its maximizer attained.
  CHECK(replay(T, profile, 0) == doctest::Approx(profile.values[0]).epsilon(1e-10));
  CHECK(replay(T, profile, 1) == doctest::Approx(profile.values[1]).epsilon(1e-10));
}

TEST_CASE("greedy sweep on a sum-norm diagonal walks the diagonal") {
  const auto T = diag_op({1.0, 0.5, 1.0 / 3.0}, Norm::l1(), Norm::l1());
  const auto profile = gsv::greedy_profile(T, 3, 0);

  REQUIRE(profile.values.size() == 3);
  CHECK(profile.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(profile.values[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(profile.values[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(profile.provenance[0] == Provenance::exact);
  CHECK(profile.provenance[1] == Provenance::upper_bound);
  CHECK(profile.provenance[2] == Provenance::upper_bound);
  for (const auto& x : profile.maximizers) {
    CHECK(gsv::norm_eval(x, T.domain_norm()) == doctest::Approx(1.0));
  }
}

TEST_CASE("rank-one tails collapse after the first step") {
  const auto op = gsv::make_generator("rank_one_harmonic", NormKind::L1, NormKind::L1);
  const auto T = gsv::truncate(op, 4, 1);
  const auto profile = gsv::greedy_profile(T, 4, 0);
  REQUIRE(profile.values.size() == 1);
  CHECK(profile.values[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(profile.provenance[0] == Provenance::exact);
}

TEST_CASE("the zero operator yields an empty profile") {
  const MatrixOperator T(Eigen::MatrixXd::Zero(3, 3), Norm::l1(), Norm::l1());
  const auto profile = gsv::greedy_profile(T, 3, 0);
  CHECK(profile.values.empty());
  CHECK(profile.provenance.empty());
}

TEST_CASE("euclidean profiles match the classical decomposition") {
  const auto T = diag_op({3.0, 4.0}, Norm::l2(), Norm::l2());
  const auto classical = gsv::hilbert_profile(T);
  REQUIRE(classical.values.size() == 2);
  CHECK(classical.values[0] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(classical.values[1] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(classical.maximizers[0](1) == doctest::Approx(1.0));
  CHECK(classical.maximizers[1](0) == doctest::Approx(1.0));

  const auto greedy = gsv::greedy_profile(T, 2, 0);
  REQUIRE(greedy.values.size() == 2);
  CHECK(greedy.values[0] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(greedy.values[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("classical profile rejects non-euclidean norms") {
  const auto T = diag_op({1.0, 2.0}, Norm::l1(), Norm::l2());
  try {
    gsv::hilbert_profile(T);
    FAIL("expected a norm-kind error");
  } catch (const gsv::Error& e) {
    CHECK(e.code() == gsv::errc::not_hilbert);
  }
}

TEST_CASE("weights enter the euclidean profile by congruence") {
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(2, 2);
  const MatrixOperator T(eye, Norm::weighted(NormKind::L2, vec({1.0, 2.0})),
                         Norm::l2());
  const auto profile = gsv::hilbert_profile(T);
  REQUIRE(profile.values.size() == 2);
  CHECK(profile.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(profile.values[1] == doctest::Approx(0.5).epsilon(1e-12));
  for (const auto& x : profile.maximizers) {
    CHECK(gsv::norm_eval(x, T.domain_norm()) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("greedy and classical agree on random euclidean operators") {
  std::mt19937_64 engine(0x9f0f);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + static_cast<int>(engine() % 4);
    const int n = 2 + static_cast<int>(engine() % 4);
    const MatrixOperator T(random_matrix(engine, m, n), Norm::l2(), Norm::l2());
    const auto greedy = gsv::greedy_profile(T, std::min(m, n), 0);
    const auto classical = gsv::hilbert_profile(T);
    REQUIRE(greedy.values.size() == classical.values.size());
    for (std::size_t i = 0; i < greedy.values.size(); ++i) {
      CHECK(greedy.values[i] ==
            doctest::Approx(classical.values[i]).epsilon(1e-8));
    }
    CHECK(greedy.provenance.front() == Provenance::exact);
    for (std::size_t i = 1; i < greedy.provenance.size(); ++i) {
      CHECK(greedy.provenance[i] == Provenance::upper_bound);
    }
  }
}

TEST_CASE("a heuristic step taints every later entry") {
  std::mt19937_64 engine(0x9f10);
  const MatrixOperator T(random_matrix(engine, 3, 3), Norm::l2(), Norm::l1());
  const auto profile = gsv::greedy_profile(T, 3, 123);
  for (const auto p : profile.provenance) {
    CHECK(p == Provenance::heuristic);
  }
  gsv::validate(profile);  // clamp keeps the values non-increasing
}

TEST_CASE("profile validation rejects malformed lists") {
  auto increasing = profile_of({0.5, 1.0});
  CHECK_THROWS_AS(gsv::validate(increasing), gsv::Error);

  auto negative = profile_of({1.0, -0.1});
  CHECK_THROWS_AS(gsv::validate(negative), gsv::Error);

  auto nan = profile_of({1.0});
  nan.values[0] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(gsv::validate(nan), gsv::Error);

  auto mismatched = profile_of({1.0, 0.5});
  mismatched.provenance.pop_back();
  CHECK_THROWS_AS(gsv::validate(mismatched), gsv::Error);
}

TEST_CASE("level counting on the seven-level example") {
  CHECK(gsv::dof_at_level(kSeven, 0.1) == 4);
  CHECK(gsv::dof_at_level(kSeven, 0.2) == 4);
  CHECK(gsv::dof_at_level(kSeven, 0.49) == 4);
  CHECK(gsv::dof_at_level(kSeven, 0.5) == 3);
  CHECK(gsv::dof_at_level(kSeven, 0.075) == 5);
  CHECK(gsv::dof_at_level(kSeven, 0.0001) == 7);
  CHECK(gsv::dof_at_level(kSeven, 1.0) == 0);
  CHECK(gsv::dof_at_level(kSeven, 2.0) == 0);
  CHECK_THROWS_AS(gsv::dof_at_level(kSeven, 0.0), gsv::Error);
  CHECK_THROWS_AS(gsv::dof_at_level(kSeven, -1.0), gsv::Error);
}

TEST_CASE("level counting on the nine-level example") {
  CHECK(gsv::dof_at_level(kNine, 0.75) == 7);
  CHECK(gsv::dof_at_level(kNine, 0.1) == 8);
  CHECK(gsv::dof_at_level(kNine, 0.05) == 9);
  CHECK(gsv::dof_at_level(kNine, 0.99) == 1);
}

TEST_CASE("the step function mirrors direct counting") {
  const auto step = gsv::dof_function(kSeven);
  REQUIRE(step.breakpoints.size() == 7);
  CHECK(step.breakpoints.front() == 1.0);
  CHECK(step.breakpoints.back() == 0.0005);
  for (std::size_t j = 0; j < step.plateau_counts.size(); ++j) {
    CHECK(step.plateau_counts[j] == static_cast<int>(j) + 1);
  }
  for (double level : {0.0001, 0.0005, 0.02, 0.05, 0.1, 0.3, 0.5, 0.9, 1.0, 3.0}) {
    CHECK(gsv::evaluate(step, level) == gsv::dof_at_level(kSeven, level));
  }
}

TEST_CASE("repeated values merge into one breakpoint") {
  const auto profile = profile_of({3.0, 2.0, 2.0, 1.0});
  const auto step = gsv::dof_function(profile);
  REQUIRE(step.breakpoints.size() == 3);
  CHECK(step.breakpoints == std::vector<double>{3.0, 2.0, 1.0});
  CHECK(step.plateau_counts == std::vector<int>{1, 3, 4});
  CHECK(gsv::evaluate(step, 2.5) == 1);
  CHECK(gsv::evaluate(step, 2.0) == 1);
  CHECK(gsv::evaluate(step, 1.5) == 3);
  CHECK(gsv::evaluate(step, 0.5) == 4);

  const auto back = gsv::profile_from_dof(step);
  CHECK(back.values == profile.values);
}

TEST_CASE("zero entries vanish from the step function") {
  const auto profile = profile_of({1.0, 0.5, 0.0, 0.0});
  const auto step = gsv::dof_function(profile);
  REQUIRE(step.breakpoints.size() == 2);
  CHECK(gsv::evaluate(step, 0.25) == 2);
  const auto back = gsv::profile_from_dof(step);
  CHECK(back.values == std::vector<double>{1.0, 0.5});
}

TEST_CASE("round trip through the step function is exact") {
  const auto step = gsv::dof_function(kSeven);
  const auto back = gsv::profile_from_dof(step);
  CHECK(back.values == kSeven.values);
}

TEST_CASE("malformed step functions are rejected") {
  DofStepFunction bad;
  bad.breakpoints = {1.0, 1.5};
  bad.plateau_counts = {1, 2};
  try {
    gsv::profile_from_dof(bad);
    FAIL("expected rejection of increasing breakpoints");
  } catch (const gsv::Error& e) {
    CHECK(e.code() == gsv::errc::not_a_dof_function);
  }

  bad.breakpoints = {1.0, 0.5};
  bad.plateau_counts = {2, 1};
  CHECK_THROWS_AS(gsv::profile_from_dof(bad), gsv::Error);

  bad.breakpoints = {1.0};
  bad.plateau_counts = {1, 2};
  CHECK_THROWS_AS(gsv::profile_from_dof(bad), gsv::Error);

  bad.breakpoints = {-1.0};
  bad.plateau_counts = {1};
  CHECK_THROWS_AS(gsv::profile_from_dof(bad), gsv::Error);
}

TEST_CASE("essential dimension of the seven-level example") {
  const auto report = gsv::essential_dimension(kSeven);
  CHECK(report.ess_dim == 4);
  CHECK(report.order == 1);
  REQUIRE(report.e_table.size() == 7);
  CHECK(report.e_table[3].first == 4);
  CHECK(report.e_table[3].second == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(report.e_table[6].second == doctest::Approx(0.0005).epsilon(1e-12));
  CHECK(report.argmax_ties == std::vector<int>{4});
}

TEST_CASE("essential dimension of the nine-level example") {
  const auto report = gsv::essential_dimension(kNine);
  CHECK(report.ess_dim == 7);
  CHECK(report.e_table[6].second == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("ties resolve to the smallest candidate") {
  const auto tied = gsv::essential_dimension(profile_of({1.0, 0.6, 0.2}));
  CHECK(tied.ess_dim == 1);
  CHECK(tied.argmax_ties == std::vector<int>{1, 2});

  const auto flat = gsv::essential_dimension(profile_of({0.5, 0.5, 0.5}));
  CHECK(flat.ess_dim == 3);
  CHECK(flat.e_table[2].second == doctest::Approx(0.5));

  const auto single = gsv::essential_dimension(profile_of({0.42}));
  CHECK(single.ess_dim == 1);
  CHECK(single.e_table.size() == 1);
}

TEST_CASE("windowed gaps move the essential dimension on the nine-level example") {
  const auto order2 = gsv::essential_dimension_order(kNine, 2);
  CHECK(order2.ess_dim == 8);
  CHECK(order2.order == 2);
  bool found = false;
  for (const auto& [n, e] : order2.e_table) {
    if (n == 8) {
      found = true;
      CHECK(e == doctest::Approx(0.7).epsilon(1e-12));
    }
  }
  CHECK(found);

  const auto order3 = gsv::essential_dimension_order(kNine, 3);
  CHECK(order3.ess_dim == 7);
  CHECK(order3.e_table.back().first == 7);
  CHECK(order3.e_table.back().second == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("windowed gaps on the seven-level example") {
  const auto order2 = gsv::essential_dimension_order(kSeven, 2);
  CHECK(order2.ess_dim == 4);
  for (const auto& [n, e] : order2.e_table) {
    if (n == 4) CHECK(e == doctest::Approx(0.75).epsilon(1e-12));
  }
}

TEST_CASE("oversized windows are rejected") {
  try {
    gsv::essential_dimension_order(profile_of({0.9}), 2);
    FAIL("expected the window to be too large");
  } catch (const gsv::Error& e) {
    CHECK(e.code() == gsv::errc::order_too_large);
  }
  CHECK_THROWS_AS(gsv::essential_dimension_order(kNine, 17), gsv::Error);
  CHECK_THROWS_AS(gsv::essential_dimension_order(kNine, 0), gsv::Error);
}

TEST_CASE("truncation of the rank-one harmonic family climbs as 1 - 1/n") {
  const auto op = gsv::make_generator("rank_one_harmonic", NormKind::L1, NormKind::L1);
  const auto points = gsv::truncation_study(op, 1, {1, 2, 4, 8}, 1);
  REQUIRE(points.size() == 4);
  CHECK(!points[0].value.has_value());  // the 1-column restriction is zero
  REQUIRE(points[1].value.has_value());
  CHECK(*points[1].value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(*points[2].value == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(*points[3].value == doctest::Approx(0.875).epsilon(1e-12));
  for (std::size_t i = 1; i < points.size(); ++i) {
    CHECK(points[i].provenance == Provenance::exact);
  }
}

TEST_CASE("truncation of the harmonic diagonal pins the m-th level at 1/m") {
  const auto op = gsv::make_generator("harmonic_diag", NormKind::L1, NormKind::L1);
  const auto points = gsv::truncation_study(op, 3, {1, 2, 3, 5, 9}, 9);
  REQUIRE(points.size() == 5);
  CHECK(!points[0].value.has_value());
  CHECK(!points[1].value.has_value());
  for (std::size_t i = 2; i < points.size(); ++i) {
    REQUIRE(points[i].value.has_value());
    CHECK(*points[i].value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("truncation studies demand sane arguments") {
  const auto op = gsv::make_generator("harmonic_diag", NormKind::L1, NormKind::L1);
  CHECK_THROWS_AS(gsv::truncation_study(op, 0, {1, 2}, 2), gsv::Error);
  CHECK_THROWS_AS(gsv::truncation_study(op, 1, {}, 2), gsv::Error);
  CHECK_THROWS_AS(gsv::truncation_study(op, 1, {2, 2}, 2), gsv::Error);
  CHECK_THROWS_AS(gsv::truncation_study(op, 1, {3, 1}, 3), gsv::Error);
}
