#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "epigame/vaccination.hpp"

namespace epigame {

/// Invalid configuration: unknown model, unknown parameter, value outside its
/// domain, unreadable file. Messages name the parameter and the constraint.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation failed numerically (non-finite value, unmet residual).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepAxis {
  std::string name;
  std::vector<nlohmann::json> values;
};

/// One scenario: a model tag, its parameter record, and an optional sweep.
struct ScenarioConfig {
  std::string model;
  nlohmann::json parameters;  // object
  std::vector<SweepAxis> sweep;
};

const std::vector<std::string>& known_models();

/// Parses and validates a configuration document.
ScenarioConfig parse_config(const nlohmann::json& document);
ScenarioConfig load_config(const std::filesystem::path& path);

struct RunOptions {
  LogConvention convention = LogConvention::natural;
  double tolerance = 0.0;  // 0 selects per-check defaults
  int jobs = 1;
};

struct RunPoint {
  std::size_t index = 0;
  nlohmann::json parameters;
  nlohmann::json output;
  std::vector<std::string> notes;
  std::vector<std::string> discrepancies;
};

struct RunResult {
  std::string model;
  std::vector<RunPoint> points;

  bool has_discrepancies() const;
};

/// Evaluates every sweep point (the cartesian product of the sweep axes, or
/// the single base point without a sweep). Points may be computed in
/// parallel; the result order is always the sweep order.
RunResult run(const ScenarioConfig& config, const RunOptions& options = {});

/// One verification or reproduction check with its outcome.
struct CheckLine {
  enum class Status { pass, discrepancy, fail };
  Status status = Status::pass;
  std::string label;
  std::string detail;
};

struct VerifyResult {
  std::vector<CheckLine> checks;
  nlohmann::json report;

  bool failed() const;
  bool has_discrepancies() const;
};

/// Runs the oracle checks matching the config's model: solver self-checks and
/// classifier agreement for the matrix games, residual checks for crossover
/// search, closed-form versus quadrature for the discounted utilities, and
/// the window/telescoping/argmax comparisons for the availability game.
VerifyResult verify(const ScenarioConfig& config, const RunOptions& options = {});

/// A deterministic output file: reproduce targets and sweeps produce these.
struct Artifact {
  std::string filename;
  std::string content;
};

struct ReproduceResult {
  std::string target;
  std::vector<CheckLine> checks;
  std::vector<Artifact> artifacts;

  bool failed() const;
  bool has_discrepancies() const;
};

const std::vector<std::string>& reproduce_targets();

/// Runs one bundled preset and checks its outputs against the expected
/// values. Unknown targets throw ConfigError.
ReproduceResult reproduce(const std::string& target, const RunOptions& options = {});

// Formatting helpers shared by every emitter. Doubles use shortest
// round-trip decimal form, so emitted numbers re-parse to identical bits.
std::string format_double(double value);
std::string format_check(const CheckLine& line);

/// CSV with a header row; every cell formatted with format_double.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows);

/// Flattens the numeric leaves of every point into one CSV table
/// (index column, then dotted parameter and output paths in sorted order).
std::string result_to_csv(const RunResult& result);

nlohmann::json result_to_json(const RunResult& result);

}  // namespace epigame
