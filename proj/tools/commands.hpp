#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcong/report.hpp"

namespace qcong::cli {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitConfig = 2 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;  ///< expand | verify-family | suite
  std::string target;   ///< series, family or suite name
  std::int64_t trunc = 0;
  unsigned alpha_max = 0;
  std::size_t samples = 25;
  unsigned m_max = 15;
  std::string output = "text";
  unsigned jobs = 1;
  std::int64_t budget = 1'000'000;
  std::string out_path;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> inject_fault;
};

std::vector<std::string> suite_names();

/// Throws ConfigError for invalid names or budgets.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

/// Runs one command; report goes to `out` (or cfg.out_path), diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and runs.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcong::cli
