#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "roisim/engine.hpp"
#include "roisim/rng.hpp"

namespace roisim {

/// One tunable axis: an ordered list of candidate values for a named
/// strategy parameter ("ma_m", "mls_m", "iur_gamma", "ga_c", "ga_pc",
/// "ga_pm", "ga_s", "q0").
struct ParamGrid {
  std::string name;
  std::vector<double> values;
};

struct TuneEntry {
  std::vector<std::pair<std::string, double>> assignment;
  StrategySpec spec;
  double objective = 0.0;  // mean log10 budget growth per recorded period
  double std_dev = 0.0;    // std across trials of the per-period growth
  int rank = 0;
};

/// Entries ranked by descending objective; ties keep evaluation order.
struct TuneResult {
  std::vector<TuneEntry> entries;

  const TuneEntry& best() const { return entries.front(); }
};

/// Applies one named parameter to a spec, enforcing the allowed interval
/// (ma/mls windows in [1,50] resp. [2,50], step size in [0,1], population in
/// {50,100,200,500,1000}, probabilities in [0,1], elitism in [0,0.5], q0
/// within the bounds at evaluation time).
StrategySpec with_parameter(StrategySpec spec, const std::string& name,
                            double value);

/// Exhaustive search over the cartesian product of the grids. Every point is
/// scored by run_experiment under eval's master seed (common random numbers,
/// so ranking differences reflect parameters only).
TuneResult grid_search(const StrategySpec& base,
                       const std::vector<ParamGrid>& grids,
                       const ExperimentConfig& eval);

/// Greedy coordinate hill climbing with random restarts over the same grid
/// axes: from a uniformly drawn start, repeatedly move to the best
/// strictly-improving neighbor (one index step along one axis) until none
/// improves. Evaluations are memoized. Returns one entry per restart plus
/// the overall ranking across everything evaluated.
TuneResult hill_climb_restart(const StrategySpec& base,
                              const std::vector<ParamGrid>& axes,
                              int n_restarts, const ExperimentConfig& eval,
                              RngStream& rng);

// Objective-level variants, used by the strategy front ends above and
// directly testable against synthetic objectives.
using Objective =
    std::function<double(const std::vector<double>&)>;  // maximized

TuneResult grid_search_objective(const std::vector<ParamGrid>& grids,
                                 const Objective& objective);
TuneResult hill_climb_objective(const std::vector<ParamGrid>& axes,
                                int n_restarts, const Objective& objective,
                                RngStream& rng);

}  // namespace roisim
