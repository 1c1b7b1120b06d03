#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mabsim/engine.hpp"

namespace mabsim {

// Configuration problems map to CLI exit code 1; every message carries the
// file/line or flag that caused it.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flag values that override keys from the config file.
struct CliOverrides {
  std::optional<std::string> algo;
  std::optional<std::uint64_t> seed;
  std::optional<int> repeats;
  std::optional<std::string> t0;
};

// Parses the flat key=value config format ('#' comments, blank lines
// allowed). An empty file yields the default experiment configuration.
// Unknown keys, malformed values, and invariant violations throw
// ConfigError with a line/field diagnostic.
ExperimentConfig parse_config(const std::string& path,
                              const CliOverrides& overrides = {});
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& source_name,
                                   const CliOverrides& overrides = {});

// "auto", an integer round count, or a horizon fraction like "0.1T".
T0Spec parse_t0_spec(const std::string& text);
AlgoSelection parse_algo_selection(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

struct RunManifest {
  std::string build_id;
  std::uint64_t master_seed = 0;
  std::string timestamp_utc;
  std::map<std::string, std::string> config;       // resolved key/value view
  std::map<std::string, std::string> output_csvs;  // algo name -> path
  std::string summary_path;
  std::string manifest_path;
};

// Runs every selected algorithm, writes one CSV per algorithm plus a JSON
// summary and the manifest into out_dir, and returns the manifest.
RunManifest run_experiment(const ExperimentConfig& config,
                           const std::string& out_dir,
                           const std::string& build_id = "unknown");

// CSV schema: t,cum_regret_mean,cum_regret_se,reward_mean,reward_se,phase
// with one row per round and numbers printed with 17 significant digits.
void export_csv(const MonteCarloResult& result, const std::string& path);

void export_summary(const std::vector<MonteCarloResult>& results,
                    const ExperimentConfig& config, const std::string& path);

// Reconstructs the experiment configuration recorded in a manifest, so a
// run can be reproduced from the manifest alone.
ExperimentConfig config_from_manifest(const std::string& manifest_path);

}  // namespace mabsim
