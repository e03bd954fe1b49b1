#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsv/io.hpp"
#include "gsv/minimax.hpp"
#include "gsv/oracles.hpp"
#include "gsv/profile.hpp"

namespace {

int exit_code_for(gsv::errc code) {
  switch (code) {
    case gsv::errc::parse_error:
    case gsv::errc::invalid_argument:
      return 2;
    case gsv::errc::cap_exceeded:
      return 3;
    case gsv::errc::dimension_mismatch:
      return 4;
    case gsv::errc::order_too_large:
      return 5;
    default:
      return 1;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

struct CommonArgs {
  std::string spec_path;
  std::string profile_path;
  std::string csv_path;
  std::uint64_t seed = 0;
  int p_max = 0;  // 0: default to min(m, n) of the instantiated operator
  std::int64_t cap = gsv::kDefaultCap;
};

gsv::SupOptions sup_options(const CommonArgs& args) {
  gsv::SupOptions options;
  options.seed = args.seed;
  options.cap = args.cap;
  return options;
}

// Profile either read from a file or computed greedily from a spec.
gsv::SingularProfile resolve_profile(const CommonArgs& args) {
  if (!args.profile_path.empty() && !args.spec_path.empty()) {
    gsv::fail(gsv::errc::parse_error, "pass either --spec or --profile, not both");
  }
  if (!args.profile_path.empty()) return gsv::load_profile(args.profile_path);
  if (args.spec_path.empty()) {
    gsv::fail(gsv::errc::parse_error, "one of --spec or --profile is required");
  }
  const gsv::MatrixOperator T = gsv::instantiate(gsv::load_operator_spec(args.spec_path));
  const int p_max = args.p_max > 0 ? args.p_max : std::min(T.rows(), T.cols());
  return gsv::greedy_profile(T, p_max, sup_options(args));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedy singular profiles, degrees of freedom and essential "
               "dimension for linear operators between normed spaces"};
  app.require_subcommand(1);

  CommonArgs args;
  double level = 0.0;
  int order = 1;
  int m = 1;
  int p = 0;
  int grid_points = 360;
  std::vector<int> n_range;

  auto add_spec = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--spec", args.spec_path, "operator spec JSON file");
    if (required) opt->required();
  };
  auto add_profile_source = [&](CLI::App* cmd) {
    add_spec(cmd, false);
    cmd->add_option("--profile", args.profile_path, "profile JSON file");
  };
  auto add_seed_cap = [&](CLI::App* cmd) {
    cmd->add_option("--seed", args.seed, "random seed (echoed in JSON output)");
    cmd->add_option("--cap", args.cap, "extreme point enumeration cap")
        ->check(CLI::PositiveNumber);
  };
  auto add_csv = [&](CLI::App* cmd) {
    cmd->add_option("--csv", args.csv_path, "also write CSV to this file");
  };
  auto add_p_max = [&](CLI::App* cmd) {
    cmd->add_option("--p-max", args.p_max, "greedy profile length (default min(m, n))")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* profile_cmd = app.add_subcommand("profile", "greedy singular profile of a spec");
  add_spec(profile_cmd, true);
  add_p_max(profile_cmd);
  add_seed_cap(profile_cmd);
  add_csv(profile_cmd);

  CLI::App* dof_cmd = app.add_subcommand("dof", "degrees of freedom at a level");
  add_profile_source(dof_cmd);
  add_p_max(dof_cmd);
  add_seed_cap(dof_cmd);
  dof_cmd->add_option("--level", level, "approximation level (> 0)")->required();

  CLI::App* doffn_cmd = app.add_subcommand("dof-function", "degrees-of-freedom step function");
  add_profile_source(doffn_cmd);
  add_p_max(doffn_cmd);
  add_seed_cap(doffn_cmd);
  add_csv(doffn_cmd);

  CLI::App* essdim_cmd = app.add_subcommand("essdim", "essential dimension of a profile");
  essdim_cmd->add_option("--profile", args.profile_path, "profile JSON file")->required();
  essdim_cmd->add_option("--order", order, "window width (1 = plain definition)")
      ->check(CLI::PositiveNumber);
  essdim_cmd->add_option("--seed", args.seed, "random seed (echoed in JSON output)");

  CLI::App* truncate_cmd =
      app.add_subcommand("truncate", "m-th greedy value across truncation sizes");
  add_spec(truncate_cmd, true);
  truncate_cmd->add_option("--m", m, "profile index to track")->required()
      ->check(CLI::PositiveNumber);
  truncate_cmd->add_option("--n", n_range, "truncation sizes (strictly increasing)")
      ->required()->delimiter(',');
  add_seed_cap(truncate_cmd);
  add_csv(truncate_cmd);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force bracket for level p+1");
  add_spec(oracle_cmd, true);
  oracle_cmd->add_option("--p", p, "number of approximating directions")->required()
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--grid-points", grid_points, "codomain grid resolution")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--seed", args.seed, "random seed (echoed in JSON output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand(profile_cmd)) {
      const gsv::MatrixOperator T =
          gsv::instantiate(gsv::load_operator_spec(args.spec_path));
      const int p_max = args.p_max > 0 ? args.p_max : std::min(T.rows(), T.cols());
      const gsv::SingularProfile profile = gsv::greedy_profile(T, p_max, sup_options(args));
      std::cout << gsv::profile_to_json(profile, args.seed) << '\n';
      if (!args.csv_path.empty()) write_file(args.csv_path, gsv::profile_to_csv(profile));
    } else if (app.got_subcommand(dof_cmd)) {
      std::cout << gsv::dof_at_level(resolve_profile(args), level) << '\n';
    } else if (app.got_subcommand(doffn_cmd)) {
      const gsv::DofStepFunction step = gsv::dof_function(resolve_profile(args));
      std::cout << gsv::step_to_json(step, args.seed) << '\n';
      if (!args.csv_path.empty()) write_file(args.csv_path, gsv::step_to_csv(step));
    } else if (app.got_subcommand(essdim_cmd)) {
      const gsv::SingularProfile profile = gsv::load_profile(args.profile_path);
      const gsv::EssDimReport report =
          essdim_cmd->count("--order") > 0 && order >= 2
              ? gsv::essential_dimension_order(profile, order)
              : gsv::essential_dimension(profile);
      std::cout << gsv::essdim_to_json(report, args.seed) << '\n';
    } else if (app.got_subcommand(truncate_cmd)) {
      const gsv::OperatorSpec spec = gsv::load_operator_spec(args.spec_path);
      const auto* gen = std::get_if<gsv::GeneratorOperatorSpec>(&spec);
      if (gen == nullptr) {
        gsv::fail(gsv::errc::parse_error, "truncate requires a generator spec");
      }
      const gsv::SequenceOperator op =
          gsv::make_generator(gen->name, gen->domain_kind, gen->codomain_kind);
      const int max_n = *std::max_element(n_range.begin(), n_range.end());
      const auto points = gsv::truncation_study(op, m, n_range,
                                                gsv::resolved_m_rows(*gen, max_n),
                                                sup_options(args));
      std::cout << gsv::truncation_to_csv(points);
      if (!args.csv_path.empty()) write_file(args.csv_path, gsv::truncation_to_csv(points));
    } else if (app.got_subcommand(oracle_cmd)) {
      const gsv::MatrixOperator T =
          gsv::instantiate(gsv::load_operator_spec(args.spec_path));
      gsv::BruteForceOptions options;
      options.seed = args.seed;
      const gsv::Bracket bracket = gsv::brute_force_epsilon(T, p, grid_points, options);
      std::cout << gsv::bracket_to_json(bracket, p, args.seed) << '\n';
    }
  } catch (const gsv::Error& e) {
    std::cerr << gsv::to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
