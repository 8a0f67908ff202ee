#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "epigame/scenario.hpp"
#include "epigame/serialize.hpp"

namespace {

using epigame::CheckLine;
using epigame::RunOptions;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitDiscrepancies = 3;

struct CommonOptions {
  std::string out;
  std::string format = "report";
  std::string convention = "natural";
  double tolerance = 0.0;
  int jobs = 1;
};

void attach(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--out", opts.out, "directory for emitted files");
  cmd->add_option("--format", opts.format, "csv or report")
      ->check(CLI::IsMember({"csv", "report"}));
  cmd->add_option("--log-convention", opts.convention,
                  "logarithm used by the discounting closed forms")
      ->check(CLI::IsMember({"natural", "base10"}));
  cmd->add_option("--tolerance", opts.tolerance, "tie/check tolerance override")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--jobs", opts.jobs, "worker threads for sweeps")
      ->check(CLI::PositiveNumber);
}

RunOptions to_run_options(const CommonOptions& opts) {
  RunOptions run;
  run.convention = opts.convention == "base10" ? epigame::LogConvention::base10
                                               : epigame::LogConvention::natural;
  run.tolerance = opts.tolerance;
  run.jobs = opts.jobs;
  return run;
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void print_profile_list(const char* label, const json& profiles) {
  std::cout << "  " << label << ":";
  if (profiles.empty()) std::cout << " (none)";
  for (const json& p : profiles) {
    std::cout << " (" << p.at("row").get<std::string>() << ","
              << p.at("col").get<std::string>() << ")";
    if (p.contains("strict") && p.at("strict").get<bool>()) std::cout << "*";
  }
  std::cout << "\n";
}

void print_point_header(const epigame::RunPoint& point, std::size_t total) {
  if (total > 1) std::cout << "point " << point.index << ":\n";
}

int run_solve(const std::string& config_path, const CommonOptions& opts) {
  const auto config = epigame::load_config(config_path);
  const auto result = epigame::run(config, to_run_options(opts));
  std::cout << "model: " << result.model << "\n";
  for (const auto& point : result.points) {
    print_point_header(point, result.points.size());
    if (!point.output.contains("equilibrium")) {
      std::cout << "  no game to solve for this model; see classify\n";
      continue;
    }
    const json& eq = point.output.at("equilibrium");
    print_profile_list("pure equilibria (* strict)", eq.at("pure_nash"));
    print_profile_list("social optima", eq.at("social_optima"));
    for (const char* side : {"row", "col"}) {
      const auto dominant =
          eq.at("dominant_actions").at(side).get<std::vector<std::string>>();
      if (dominant.empty()) continue;
      std::cout << "  dominant " << side << " actions:";
      for (const auto& a : dominant) std::cout << " " << a;
      std::cout << "\n";
    }
    const json& poa = eq.at("price_of_anarchy");
    std::cout << "  price of anarchy: "
              << (poa.is_number() ? epigame::format_double(poa.get<double>())
                                  : poa.get<std::string>())
              << "\n";
    for (const auto& note : point.notes) std::cout << "  note: " << note << "\n";
  }
  if (!opts.out.empty()) {
    write_file(opts.out, "solve.report.json",
               epigame::result_to_json(result).dump(2) + "\n");
  }
  return kExitOk;
}

int run_classify(const std::string& config_path, const CommonOptions& opts) {
  const auto config = epigame::load_config(config_path);
  const auto result = epigame::run(config, to_run_options(opts));
  std::cout << "model: " << result.model << "\n";
  for (const auto& point : result.points) {
    print_point_header(point, result.points.size());
    bool printed = false;
    for (const char* key :
         {"classification", "threshold", "equilibrium", "choice", "crossover"}) {
      if (point.output.contains(key) && key != std::string("equilibrium")) {
        std::cout << "  " << key << ": " << point.output.at(key).dump() << "\n";
        printed = true;
      }
    }
    if (result.model == "availability_game" && point.output.contains("equilibrium")) {
      std::cout << "  equilibrium: " << point.output.at("equilibrium").dump() << "\n";
      printed = true;
    }
    if (!printed) std::cout << "  nothing to classify for this model\n";
    for (const auto& note : point.notes) std::cout << "  note: " << note << "\n";
  }
  if (!opts.out.empty()) {
    write_file(opts.out, "classify.report.json",
               epigame::result_to_json(result).dump(2) + "\n");
  }
  return kExitOk;
}

int run_sweep(const std::string& config_path, const CommonOptions& opts) {
  const auto config = epigame::load_config(config_path);
  const auto result = epigame::run(config, to_run_options(opts));
  const bool csv = opts.format == "csv";
  const std::string content = csv ? epigame::result_to_csv(result)
                                  : epigame::result_to_json(result).dump(2) + "\n";
  if (opts.out.empty()) {
    std::cout << content;
  } else {
    write_file(opts.out, csv ? "sweep.csv" : "sweep.report.json", content);
    std::cout << result.points.size() << " points written\n";
  }
  return result.has_discrepancies() ? kExitDiscrepancies : kExitOk;
}

int run_reproduce(const std::string& target, const CommonOptions& opts) {
  const auto result = epigame::reproduce(target, to_run_options(opts));
  for (const CheckLine& line : result.checks) {
    std::cout << epigame::format_check(line) << "\n";
  }
  if (!opts.out.empty()) {
    for (const auto& artifact : result.artifacts) {
      write_file(opts.out, artifact.filename, artifact.content);
    }
  }
  if (result.failed()) return kExitNumeric;
  return result.has_discrepancies() ? kExitDiscrepancies : kExitOk;
}

int run_verify(const std::string& config_path, const CommonOptions& opts) {
  const auto config = epigame::load_config(config_path);
  const auto result = epigame::verify(config, to_run_options(opts));
  for (const CheckLine& line : result.checks) {
    std::cout << epigame::format_check(line) << "\n";
  }
  if (!opts.out.empty()) {
    write_file(opts.out, "verify.report.json", result.report.dump(2) + "\n");
  }
  if (result.failed()) return kExitNumeric;
  return result.has_discrepancies() ? kExitDiscrepancies : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilibria, classifiers and verification oracles for epidemic "
               "decision games"};
  app.require_subcommand(1);

  std::string solve_config, classify_config, sweep_config, verify_config, target;
  CommonOptions solve_opts, classify_opts, sweep_opts, reproduce_opts, verify_opts;

  CLI::App* solve = app.add_subcommand("solve", "equilibrium report for a configured game");
  solve->add_option("config", solve_config, "configuration file")->required();
  attach(solve, solve_opts);

  CLI::App* classify = app.add_subcommand("classify", "threshold classifiers");
  classify->add_option("config", classify_config, "configuration file")->required();
  attach(classify, classify_opts);

  CLI::App* sweep = app.add_subcommand("sweep", "run every sweep point");
  sweep->add_option("config", sweep_config, "configuration file")->required();
  attach(sweep, sweep_opts);

  std::string target_help = "one of:";
  for (const auto& t : epigame::reproduce_targets()) target_help += " " + t;
  CLI::App* repro = app.add_subcommand("reproduce", "bundled verification presets");
  repro->add_option("target", target, target_help)->required();
  attach(repro, reproduce_opts);

  CLI::App* verify = app.add_subcommand("verify", "oracle checks for a configuration");
  verify->add_option("config", verify_config, "configuration file")->required();
  attach(verify, verify_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (solve->parsed()) return run_solve(solve_config, solve_opts);
    if (classify->parsed()) return run_classify(classify_config, classify_opts);
    if (sweep->parsed()) return run_sweep(sweep_config, sweep_opts);
    if (repro->parsed()) return run_reproduce(target, reproduce_opts);
    if (verify->parsed()) return run_verify(verify_config, verify_opts);
  } catch (const epigame::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const epigame::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitConfig;
}
