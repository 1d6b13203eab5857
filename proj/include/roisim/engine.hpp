#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roisim/ga.hpp"
#include "roisim/policy.hpp"
#include "roisim/returns.hpp"
#include "roisim/rng.hpp"

namespace roisim {

enum class StrategyKind {
  Constant,       // fixed fraction q0
  MovingAverage,  // rolling-mean predictor + rs/ra action
  LeastSquares,   // linear-trend predictor + rs/ra action
  Incremental,    // exponential-recency predictor + rs/ra action
  Genetic,        // evolved per-cycle-step schedule
  SquareWave      // phase-locked q_max/q_min half-period schedule
};

enum class ActionMode { RiskSeeking, RiskAvoiding };

/// Full description of one agent's strategy. Only the fields relevant to
/// `kind` matter; the rest keep their defaults.
struct StrategySpec {
  StrategyKind kind = StrategyKind::Constant;
  ActionMode mode = ActionMode::RiskSeeking;
  double constant_q = 0.5;  // Constant
  int ma_window = 5;        // MovingAverage
  int mls_window = 25;      // LeastSquares
  double iur_gamma = 0.5;   // Incremental
  GaConfig ga;              // Genetic (ga.genes is forced to the period)

  static StrategySpec constant(double q0);
  static StrategySpec moving_average(int window, ActionMode mode);
  static StrategySpec least_squares(int window, ActionMode mode);
  static StrategySpec incremental(double gamma, ActionMode mode);
  static StrategySpec genetic(const GaConfig& cfg);
  static StrategySpec square_wave();

  std::string name() const;       // "q0" "ma" "mls" "iur" "ga" "sw"
  std::string mode_name() const;  // "rs" / "ra" / "none"
  std::string label() const;      // name or name-mode

  /// Stable identity over the behavior-relevant fields; seeds the strategy's
  /// private random stream so identical specs evolve identically regardless
  /// of their position in the lineup.
  std::uint64_t fingerprint() const;

  void validate(const QBounds& bounds) const;
};

struct BudgetSample {
  long t = 0;  // number of completed steps
  double budget = 1.0;
  double log10_budget = 0.0;
};

/// Optional per-trial capture: a contiguous window of (return, fraction)
/// pairs, the genetic strategy's acting schedule after given step counts,
/// and the best chromosome of every completed generation.
struct TraceRequest {
  long window_start = -1;  // -1 disables the window
  long window_length = 0;
  std::vector<long> ga_snapshot_steps;
  bool ga_generation_dump = false;
};

struct GaSnapshot {
  long step = 0;
  std::vector<double> genes;  // empty until a first generation completes
};

struct GaGenerationBest {
  long generation = 0;
  double fitness = 0.0;
  std::vector<double> genes;
};

struct StrategyTrial {
  std::vector<BudgetSample> samples;
  std::vector<double> traced_fractions;  // aligned with traced_returns
  std::vector<GaSnapshot> ga_snapshots;  // genetic strategies only
  std::vector<GaGenerationBest> ga_generations;
};

struct TrialResult {
  std::vector<StrategyTrial> per_strategy;
  std::vector<double> traced_returns;
};

struct ExperimentConfig {
  std::vector<StrategySpec> strategies;
  ReturnParams returns = ReturnParams::periodic(100, 0.0, 0.5);
  long t_max = 100000;
  int n_trials = 100;
  std::uint64_t master_seed = 1;
  long record_period = 0;  // 0 -> returns.period
  QBounds bounds;
  int n_threads = 0;  // 0 -> hardware concurrency

  long effective_record_period() const;
  void validate() const;
};

/// Per-strategy budget curves averaged across trials.
struct StrategyCurve {
  StrategySpec spec;
  std::vector<long> times;
  std::vector<double> mean_budget;
  std::vector<double> mean_log10;
  std::vector<double> std_log10;  // sample std across trials

  double final_mean_log10() const { return mean_log10.back(); }
  double final_std_log10() const { return std_log10.back(); }
};

struct ExperimentResult {
  std::vector<StrategyCurve> curves;
};

/// One application of the budget recursion x' = x * (1 + r q).
double step_budget(double x, double q, double r);

/// Same recursion on the log10 scale; a zero budget (-inf) is absorbing.
double log10_step_budget(double log10_x, double q, double r);

/// One trial: a single return stream drawn from trial_seed is consumed by
/// every strategy. Each step the agents pick their fraction from information
/// up to t-1, the return is revealed, budgets update, and the learners see
/// the revealed return. Budgets (x(0) = 1) are sampled every record_period
/// completed steps.
TrialResult run_trial(const std::vector<StrategySpec>& strategies,
                      const ReturnParams& returns, long t_max,
                      std::uint64_t trial_seed, const QBounds& bounds = {},
                      long record_period = 0,
                      const TraceRequest* trace = nullptr);

/// n_trials independent trials (trial i seeded from (master_seed, i)),
/// aggregated per strategy and recorded time into mean budget, mean log10
/// budget and its sample std. Trials may run on worker threads; aggregation
/// order is fixed by trial index, so results do not depend on the schedule.
ExperimentResult run_experiment(const ExperimentConfig& config);

const char* to_string(StrategyKind kind);
const char* to_string(ActionMode mode);

}  // namespace roisim
