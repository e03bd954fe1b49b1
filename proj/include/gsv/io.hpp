#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gsv/oracles.hpp"
#include "gsv/operators.hpp"
#include "gsv/profile.hpp"

namespace gsv {

// Operator described entry by entry. `entries` is row-major with
// rows*cols values.
struct InlineOperatorSpec {
  int rows = 0;
  int cols = 0;
  std::vector<double> entries;
  Norm domain_norm;
  Norm codomain_norm;
};

// Operator described as a named generator family restricted to its first
// n coordinates. m_rows defaults to the smallest codomain that holds the
// family's columns (1 for the rank-one families, n for harmonic_diag).
struct GeneratorOperatorSpec {
  std::string name;
  int n = 0;
  std::optional<int> m_rows;
  NormKind domain_kind = NormKind::L1;
  NormKind codomain_kind = NormKind::L1;
};

using OperatorSpec = std::variant<InlineOperatorSpec, GeneratorOperatorSpec>;

// JSON forms:
//   {"m":2,"n":2,"matrix":[1,0,0,0.5],
//    "domain_norm":{"kind":"linf"},"codomain_norm":{"kind":"linf"}}
//   {"generator":{"name":"harmonic_diag","n":3,"m_rows":3,
//                 "domain_norm_kind":"l1","codomain_norm_kind":"l1"}}
// Norm objects take an optional "weights" array. Malformed documents throw
// parse_error; inconsistent dimensions throw dimension_mismatch.
OperatorSpec parse_operator_spec(const std::string& json_text);
OperatorSpec load_operator_spec(const std::string& path);

int resolved_m_rows(const GeneratorOperatorSpec& spec, int max_n);
MatrixOperator instantiate(const OperatorSpec& spec);

// Emitters write doubles with 17 significant digits (JSON) and 12 (CSV) so
// outputs are byte-stable and round-trip exactly.
std::string format_double(double value, int significant_digits);

std::string profile_to_json(const SingularProfile& profile, std::uint64_t seed);
std::string step_to_json(const DofStepFunction& step, std::uint64_t seed);
std::string essdim_to_json(const EssDimReport& report, std::uint64_t seed);
std::string bracket_to_json(const Bracket& bracket, int p, std::uint64_t seed);

// Accepts either {"values":[...],"provenance":[...]} (provenance optional,
// defaulting to exact) or a bare JSON array of values.
SingularProfile parse_profile(const std::string& json_text);
SingularProfile load_profile(const std::string& path);

std::string profile_to_csv(const SingularProfile& profile);        // m,epsilon_m,provenance
std::string step_to_csv(const DofStepFunction& step);              // epsilon,N
std::string truncation_to_csv(const std::vector<TruncationPoint>& points);  // n,epsilon_m,provenance

}  // namespace gsv
