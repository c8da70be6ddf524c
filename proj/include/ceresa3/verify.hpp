#pragma once

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ceresa3 {

struct RunConfig {
  double eps = 1e-10;
  unsigned precision = 30;
  std::string precision_source = "default";  // "default", "flag", or "env CERESA3_PRECISION"
  std::uint64_t seed = 1;
  std::string output;  // empty means stdout
  std::string format = "json";
  std::size_t trials = 20;  // random equivariance trials
  double threshold = 1e-8;
  std::string generators_path;
  std::string quartic_path;
  bool timings = false;

  /// Throws std::invalid_argument for eps ≤ 0, precision 0 or an unknown format.
  void validate() const;
  nlohmann::json to_json() const;
};

struct CheckReport {
  std::string name;
  std::string expected;
  std::string provenance;  // "published", "derived" or "identity"
  std::string computed;
  bool pass = false;
  std::string note;
  double runtime_seconds = 0;
};

std::vector<CheckReport> klein_verify(const RunConfig& config);
std::vector<CheckReport> coho_verify(const RunConfig& config);
std::vector<CheckReport> chi18_verify(const RunConfig& config);

bool all_pass(const std::vector<CheckReport>& reports);

std::string tool_version();
/// Directory holding the bundled data files.
std::string data_dir();

/// Report document: {"tool", "version", "command", "config", "checks", "pass"}.
/// Runtimes appear only when config.timings is set.
nlohmann::json report_json(const std::string& command, const RunConfig& config,
                           const std::vector<CheckReport>& reports);
std::string report_text(const std::string& command, const RunConfig& config, const std::vector<CheckReport>& reports);

}  // namespace ceresa3
