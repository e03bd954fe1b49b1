#include "gsv/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace gsv {

namespace {

using nlohmann::json;

NormKind parse_kind(const std::string& text) {
  if (text == "l1") return NormKind::L1;
  if (text == "l2") return NormKind::L2;
  if (text == "linf") return NormKind::Linf;
  fail(errc::parse_error, "unknown norm kind: " + text);
}

Norm parse_norm(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    fail(errc::parse_error, "norm must be an object with a \"kind\" string");
  }
  Norm norm;
  norm.kind = parse_kind(j["kind"].get<std::string>());
  if (j.contains("weights")) {
    if (!j["weights"].is_array()) fail(errc::parse_error, "norm weights must be an array");
    Eigen::VectorXd w(j["weights"].size());
    Eigen::Index i = 0;
    for (const auto& entry : j["weights"]) {
      if (!entry.is_number()) fail(errc::parse_error, "norm weights must be numbers");
      w(i++) = entry.get<double>();
    }
    norm.weights = std::move(w);
  }
  return norm;
}

int parse_positive_int(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    fail(errc::parse_error, "\"" + field + "\" must be a positive integer");
  }
  const long long value = j[field].get<long long>();
  if (value < 1 || value > std::numeric_limits<int>::max()) {
    fail(errc::parse_error, "\"" + field + "\" must be a positive integer that fits in int");
  }
  return static_cast<int>(value);
}

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "malformed JSON document");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void append_json_string(std::string& out, const std::string& text) {
  out += '"';
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
}

constexpr int kJsonDigits = 17;
constexpr int kCsvDigits = 12;

void append_doubles(std::string& out, const std::vector<double>& values, int digits) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_double(values[i], digits);
  }
  out += ']';
}

}  // namespace

std::string format_double(double value, int significant_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits, value);
  return buffer;
}

OperatorSpec parse_operator_spec(const std::string& json_text) {
  const json j = parse_document(json_text);
  if (!j.is_object()) fail(errc::parse_error, "operator spec must be a JSON object");

  if (j.contains("generator")) {
    const json& g = j["generator"];
    if (!g.is_object()) fail(errc::parse_error, "\"generator\" must be an object");
    GeneratorOperatorSpec spec;
    if (!g.contains("name") || !g["name"].is_string()) {
      fail(errc::parse_error, "generator needs a \"name\" string");
    }
    spec.name = g["name"].get<std::string>();
    if (!is_generator_name(spec.name)) {
      fail(errc::parse_error, "unknown generator: " + spec.name);
    }
    spec.n = parse_positive_int(g, "n");
    if (g.contains("m_rows")) spec.m_rows = parse_positive_int(g, "m_rows");
    if (g.contains("domain_norm_kind")) {
      if (!g["domain_norm_kind"].is_string()) fail(errc::parse_error, "norm kinds are strings");
      spec.domain_kind = parse_kind(g["domain_norm_kind"].get<std::string>());
    }
    if (g.contains("codomain_norm_kind")) {
      if (!g["codomain_norm_kind"].is_string()) fail(errc::parse_error, "norm kinds are strings");
      spec.codomain_kind = parse_kind(g["codomain_norm_kind"].get<std::string>());
    }
    return spec;
  }

  InlineOperatorSpec spec;
  spec.rows = parse_positive_int(j, "m");
  spec.cols = parse_positive_int(j, "n");
  if (!j.contains("matrix") || !j["matrix"].is_array()) {
    fail(errc::parse_error, "\"matrix\" must be an array of numbers");
  }
  for (const auto& entry : j["matrix"]) {
    if (!entry.is_number()) fail(errc::parse_error, "\"matrix\" must be an array of numbers");
    spec.entries.push_back(entry.get<double>());
  }
  if (spec.entries.size() !=
      static_cast<std::size_t>(spec.rows) * static_cast<std::size_t>(spec.cols)) {
    fail(errc::dimension_mismatch, "\"matrix\" must hold m*n row-major entries");
  }
  if (!j.contains("domain_norm") || !j.contains("codomain_norm")) {
    fail(errc::parse_error, "inline specs need \"domain_norm\" and \"codomain_norm\"");
  }
  spec.domain_norm = parse_norm(j["domain_norm"]);
  spec.codomain_norm = parse_norm(j["codomain_norm"]);
  return spec;
}

OperatorSpec load_operator_spec(const std::string& path) {
  return parse_operator_spec(read_file(path));
}

int resolved_m_rows(const GeneratorOperatorSpec& spec, int max_n) {
  if (spec.m_rows) return *spec.m_rows;
  return spec.name == "harmonic_diag" ? max_n : 1;
}

MatrixOperator instantiate(const OperatorSpec& spec) {
  if (const auto* gen = std::get_if<GeneratorOperatorSpec>(&spec)) {
    const SequenceOperator op =
        make_generator(gen->name, gen->domain_kind, gen->codomain_kind);
    return truncate(op, gen->n, resolved_m_rows(*gen, gen->n));
  }
  const auto& inl = std::get<InlineOperatorSpec>(spec);
  Eigen::MatrixXd matrix(inl.rows, inl.cols);
  for (int i = 0; i < inl.rows; ++i) {
    for (int j = 0; j < inl.cols; ++j) {
      matrix(i, j) = inl.entries[static_cast<std::size_t>(i) *
                                     static_cast<std::size_t>(inl.cols) +
                                 static_cast<std::size_t>(j)];
    }
  }
  return MatrixOperator(std::move(matrix), inl.domain_norm, inl.codomain_norm);
}

std::string profile_to_json(const SingularProfile& profile, std::uint64_t seed) {
  std::string out = "{\"seed\":" + std::to_string(seed) + ",\"values\":";
  append_doubles(out, profile.values, kJsonDigits);
  out += ",\"provenance\":[";
  for (std::size_t i = 0; i < profile.provenance.size(); ++i) {
    if (i > 0) out += ',';
    append_json_string(out, to_string(profile.provenance[i]));
  }
  out += "]}";
  return out;
}

std::string step_to_json(const DofStepFunction& step, std::uint64_t seed) {
  std::string out = "{\"seed\":" + std::to_string(seed) + ",\"breakpoints\":";
  append_doubles(out, step.breakpoints, kJsonDigits);
  out += ",\"counts\":[";
  for (std::size_t i = 0; i < step.plateau_counts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(step.plateau_counts[i]);
  }
  out += "]}";
  return out;
}

std::string essdim_to_json(const EssDimReport& report, std::uint64_t seed) {
  std::string out = "{\"seed\":" + std::to_string(seed) +
                    ",\"ess_dim\":" + std::to_string(report.ess_dim) +
                    ",\"order\":" + std::to_string(report.order) + ",\"e_table\":[";
  for (std::size_t i = 0; i < report.e_table.size(); ++i) {
    if (i > 0) out += ',';
    out += '[' + std::to_string(report.e_table[i].first) + ',' +
           format_double(report.e_table[i].second, kJsonDigits) + ']';
  }
  out += "],\"argmax_ties\":[";
  for (std::size_t i = 0; i < report.argmax_ties.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(report.argmax_ties[i]);
  }
  out += "]}";
  return out;
}

std::string bracket_to_json(const Bracket& bracket, int p, std::uint64_t seed) {
  std::string out = "{\"seed\":" + std::to_string(seed) +
                    ",\"p\":" + std::to_string(p) +
                    ",\"lower\":" + format_double(bracket.lower, kJsonDigits) +
                    ",\"upper\":" + format_double(bracket.upper, kJsonDigits) +
                    ",\"grid_spec\":";
  append_json_string(out, bracket.grid_spec);
  out += '}';
  return out;
}

SingularProfile parse_profile(const std::string& json_text) {
  const json j = parse_document(json_text);
  SingularProfile profile;

  const json* values = nullptr;
  if (j.is_array()) {
    values = &j;
  } else if (j.is_object() && j.contains("values") && j["values"].is_array()) {
    values = &j["values"];
  } else {
    fail(errc::parse_error, "profile must be an array or an object with \"values\"");
  }
  for (const auto& entry : *values) {
    if (!entry.is_number()) fail(errc::parse_error, "profile values must be numbers");
    profile.values.push_back(entry.get<double>());
  }

  if (j.is_object() && j.contains("provenance")) {
    if (!j["provenance"].is_array()) fail(errc::parse_error, "provenance must be an array");
    for (const auto& entry : j["provenance"]) {
      if (!entry.is_string()) fail(errc::parse_error, "provenance entries are strings");
      const std::string text = entry.get<std::string>();
      if (text == "exact") {
        profile.provenance.push_back(Provenance::exact);
      } else if (text == "upper_bound") {
        profile.provenance.push_back(Provenance::upper_bound);
      } else if (text == "heuristic") {
        profile.provenance.push_back(Provenance::heuristic);
      } else {
        fail(errc::parse_error, "unknown provenance: " + text);
      }
    }
  } else {
    profile.provenance.assign(profile.values.size(), Provenance::exact);
  }

  validate(profile);
  return profile;
}

SingularProfile load_profile(const std::string& path) {
  return parse_profile(read_file(path));
}

std::string profile_to_csv(const SingularProfile& profile) {
  std::string out = "m,epsilon_m,provenance\n";
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    out += std::to_string(i + 1) + ',' + format_double(profile.values[i], kCsvDigits) +
           ',' + to_string(profile.provenance[i]) + '\n';
  }
  return out;
}

std::string step_to_csv(const DofStepFunction& step) {
  // Two rows per plateau (its two endpoints) so the samples plot as steps.
  std::string out = "epsilon,N\n";
  const std::size_t count = step.breakpoints.size();
  if (count == 0) {
    out += "0,0\n";
    return out;
  }
  double level = 0.0;
  for (std::size_t j = count; j-- > 0;) {
    out += format_double(level, kCsvDigits) + ',' +
           std::to_string(step.plateau_counts[j]) + '\n';
    level = step.breakpoints[j];
    out += format_double(level, kCsvDigits) + ',' +
           std::to_string(step.plateau_counts[j]) + '\n';
  }
  out += format_double(step.breakpoints.front(), kCsvDigits) + ",0\n";
  return out;
}

std::string truncation_to_csv(const std::vector<TruncationPoint>& points) {
  std::string out = "n,epsilon_m,provenance\n";
  for (const auto& point : points) {
    out += std::to_string(point.n) + ',';
    if (point.value) {
      out += format_double(*point.value, kCsvDigits);
      out += ',';
      out += to_string(point.provenance);
    } else {
      out += ",absent";
    }
    out += '\n';
  }
  return out;
}

}  // namespace gsv
