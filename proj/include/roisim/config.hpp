#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "roisim/engine.hpp"

namespace roisim {

/// Flat key=value store with '#' comments. Later sources override earlier
/// ones: defaults < config file < environment (ROISIM_<KEY>) < flags.
class KeyValueConfig {
 public:
  static KeyValueConfig from_file(const std::string& path);

  void set(const std::string& key, const std::string& value);
  void merge_environment(const std::string& prefix);
  std::optional<std::string> get(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// Every knob a command can consume, after all override layers are merged.
struct Settings {
  std::vector<std::string> strategies = {"q0", "ma",  "mls",
                                         "iur", "ga", "sw"};
  std::string mode = "rs";
  double sigma1 = 0.0;
  double sigma2 = 0.5;
  int period = 100;
  long t_max = 100000;
  int trials = 100;
  std::uint64_t seed = 1;
  double q_min = 0.1;
  double q_max = 1.0;
  int ma_m = 5;
  int mls_m = 25;
  double iur_gamma = 0.5;
  int ga_c = 1000;
  double ga_pc = 0.7;
  double ga_pm = 0.01;
  double ga_s = 0.3;
  double q0 = 0.5;
  std::string out_dir = "out";
  int threads = 0;

  /// Applies recognized keys; unknown keys raise with the key named.
  void apply(const KeyValueConfig& config);

  StrategySpec make_strategy(const std::string& token) const;
  std::vector<StrategySpec> make_strategies() const;
  ExperimentConfig make_experiment() const;
  QBounds bounds() const { return QBounds{q_min, q_max}; }

  /// Key=value echo of every knob (for the run manifest).
  std::map<std::string, std::string> echo() const;
};

std::vector<std::string> split_list(const std::string& csv);

}  // namespace roisim
