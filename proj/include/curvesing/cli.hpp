#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace curvesing::cli {

/// One command-line job. Option values are kept as text and validated by run().
struct JobSpec {
  std::string command;
  std::map<std::string, std::string> options;
  std::vector<std::string> positional;
  bool json = false;
  bool trace = false;
  bool classify = false;
  bool list = false;
};

struct JobResult {
  /// 0 success, 1 mathematical refusal or failed reproduction, 2 input error.
  int exit_code = 0;
  nlohmann::json document;
  std::string text;
};

JobResult run(const JobSpec& job);

struct ReproCase {
  std::string id;
  std::string description;
  /// Check name and the exact expected text.
  std::vector<std::pair<std::string, std::string>> expected;
};

std::vector<ReproCase> repro_manifest();

struct ReproCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ReproReport {
  std::string id;
  std::vector<ReproCheck> checks;
  bool pass() const;
};

/// Runs a named case ("example-6.1" runs both parts). Throws InputError for
/// an unknown id.
std::vector<ReproReport> run_repro(const std::string& id);

}  // namespace curvesing::cli
