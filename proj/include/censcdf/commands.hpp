#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "censcdf/bootstrap.hpp"
#include "censcdf/simulation.hpp"

namespace censcdf {

// Implementations behind the CLI subcommands. Each writes its result files
// under `out_dir` and returns the paths it created; argument handling and
// exit codes live in the tool.

struct EstimateOptions {
  std::filesystem::path sample_path;
  std::filesystem::path population_path;
  std::filesystem::path out_dir;
  std::optional<double> time_bandwidth;       // override the CV choice
  std::optional<double> covariate_bandwidth;  // override the CV choice
  std::size_t grid_size = 30;
};

struct EstimateOutput {
  std::filesystem::path curve_path;
  std::filesystem::path quartile_path;
  Bandwidths bandwidths;
};

EstimateOutput cmd_estimate(const EstimateOptions& opt);

struct BootstrapOptions {
  std::filesystem::path sample_path;
  std::filesystem::path population_path;
  std::filesystem::path out_dir;
  BootstrapConfig config;
};

struct BootstrapOutput {
  std::filesystem::path result_path;
  std::filesystem::path meta_path;
  BootstrapResult result;
};

BootstrapOutput cmd_bootstrap(const BootstrapOptions& opt);

struct SimulateModelOptions {
  SimScenario scenario;
  std::filesystem::path out_dir;
};

struct SimulateDesignOptions {
  std::filesystem::path population_path;
  std::filesystem::path out_dir;
  std::size_t sample_size = 40;
  std::size_t iterations = 500;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::size_t grid_size = 30;
};

struct SimulateOutput {
  std::filesystem::path metrics_path;
  std::filesystem::path summary_path;
  MetricTable table;
};

SimulateOutput cmd_simulate_model(const SimulateModelOptions& opt);
SimulateOutput cmd_simulate_design(const SimulateDesignOptions& opt);

// Table-style text block: MASE values, their ratio and per-quartile
// relative bias with root relative MSE in parentheses.
std::string format_summary(const MetricTable& table);

}  // namespace censcdf
