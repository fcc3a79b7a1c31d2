#pragma once

#include <string>
#include <vector>

#include "guplab/table.hpp"

namespace guplab::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::vector<double> betas = {0.1};
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  int n_max = 10;
  std::size_t grid_size = 1024;
  std::string format = "csv";  // "csv" or "json"
  std::string out_path;        // empty = stdout
};

// Validates the numeric inputs and the format literal; returns false (usage
// error) on bad values.  Grid sizes that are positive but too small for a
// given suite are *not* usage errors: they surface as suite failures.
bool validate(const RunConfig& config, std::string& message);

int cmd_verify(const RunConfig& config);
int cmd_overlap(const RunConfig& config, double lambda_min, double lambda_max, int steps);
int cmd_spectrum(const RunConfig& config);
int cmd_bethe(const RunConfig& config, int n);
int cmd_mlstate(const RunConfig& config, double xi, int samples);

// Serializes to config.out_path or stdout in the configured format.
// Exposed for the table-level tests.
int emit(const RunConfig& config, const Table& table, int status);

}  // namespace guplab::cli
