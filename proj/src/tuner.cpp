#include "roisim/tuner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace roisim {

namespace {

bool is_allowed_population(double v) {
  for (int c : {50, 100, 200, 500, 1000}) {
    if (v == static_cast<double>(c)) return true;
  }
  return false;
}

void check_interval(const std::string& name, double v, double lo, double hi) {
  if (!(v >= lo && v <= hi)) {
    throw std::invalid_argument(name + " value " + std::to_string(v) +
                                " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
}

}  // namespace

StrategySpec with_parameter(StrategySpec spec, const std::string& name,
                            double value) {
  if (name == "ma_m") {
    check_interval(name, value, 1, 50);
    spec.ma_window = static_cast<int>(value);
  } else if (name == "mls_m") {
    check_interval(name, value, 2, 50);
    spec.mls_window = static_cast<int>(value);
  } else if (name == "iur_gamma") {
    check_interval(name, value, 0.0, 1.0);
    spec.iur_gamma = value;
  } else if (name == "ga_c") {
    if (!is_allowed_population(value)) {
      throw std::invalid_argument("ga_c must be one of 50,100,200,500,1000");
    }
    spec.ga.population = static_cast<int>(value);
  } else if (name == "ga_pc") {
    check_interval(name, value, 0.0, 1.0);
    spec.ga.p_crossover = value;
  } else if (name == "ga_pm") {
    check_interval(name, value, 0.0, 1.0);
    spec.ga.p_mutation = value;
  } else if (name == "ga_s") {
    check_interval(name, value, 0.0, 0.5);
    spec.ga.elitism = value;
  } else if (name == "q0") {
    spec.constant_q = value;  // bounds enforced when the spec is validated
  } else {
    throw std::invalid_argument("unknown tunable parameter: " + name);
  }
  return spec;
}

namespace {

void require_grids(const std::vector<ParamGrid>& grids) {
  if (grids.empty()) throw std::invalid_argument("empty parameter grid");
  for (const auto& g : grids) {
    if (g.values.empty()) {
      throw std::invalid_argument("empty candidate list for " + g.name);
    }
  }
}

std::vector<std::pair<std::string, double>> assignment_for(
    const std::vector<ParamGrid>& grids, const std::vector<std::size_t>& idx) {
  std::vector<std::pair<std::string, double>> out;
  out.reserve(grids.size());
  for (std::size_t a = 0; a < grids.size(); ++a) {
    out.emplace_back(grids[a].name, grids[a].values[idx[a]]);
  }
  return out;
}

std::vector<double> values_for(const std::vector<ParamGrid>& grids,
                               const std::vector<std::size_t>& idx) {
  std::vector<double> out(grids.size());
  for (std::size_t a = 0; a < grids.size(); ++a) {
    out[a] = grids[a].values[idx[a]];
  }
  return out;
}

void rank_entries(std::vector<TuneEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const TuneEntry& a, const TuneEntry& b) {
                     return a.objective > b.objective;
                   });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].rank = static_cast<int>(i) + 1;
  }
}

}  // namespace

TuneResult grid_search_objective(const std::vector<ParamGrid>& grids,
                                 const Objective& objective) {
  require_grids(grids);
  TuneResult result;
  std::vector<std::size_t> idx(grids.size(), 0);
  for (;;) {
    TuneEntry entry;
    entry.assignment = assignment_for(grids, idx);
    entry.objective = objective(values_for(grids, idx));
    result.entries.push_back(std::move(entry));
    // Odometer increment over the cartesian product.
    std::size_t a = 0;
    while (a < grids.size() && ++idx[a] == grids[a].values.size()) {
      idx[a] = 0;
      ++a;
    }
    if (a == grids.size()) break;
  }
  rank_entries(result.entries);
  return result;
}

TuneResult hill_climb_objective(const std::vector<ParamGrid>& axes,
                                int n_restarts, const Objective& objective,
                                RngStream& rng) {
  require_grids(axes);
  if (n_restarts < 1) throw std::invalid_argument("need at least one restart");

  std::map<std::vector<std::size_t>, double> cache;
  auto evaluate = [&](const std::vector<std::size_t>& idx) {
    auto it = cache.find(idx);
    if (it != cache.end()) return it->second;
    const double v = objective(values_for(axes, idx));
    cache.emplace(idx, v);
    return v;
  };

  TuneResult result;
  for (int restart = 0; restart < n_restarts; ++restart) {
    std::vector<std::size_t> current(axes.size());
    for (std::size_t a = 0; a < axes.size(); ++a) {
      current[a] = static_cast<std::size_t>(
          rng.uniform_int(static_cast<std::uint64_t>(axes[a].values.size())));
    }
    double current_value = evaluate(current);
    for (;;) {
      std::vector<std::size_t> best_neighbor;
      double best_value = current_value;
      for (std::size_t a = 0; a < axes.size(); ++a) {
        for (int dir : {-1, +1}) {
          if (dir < 0 && current[a] == 0) continue;
          if (dir > 0 && current[a] + 1 == axes[a].values.size()) continue;
          auto neighbor = current;
          neighbor[a] = static_cast<std::size_t>(
              static_cast<long>(neighbor[a]) + dir);
          const double v = evaluate(neighbor);
          if (v > best_value) {
            best_value = v;
            best_neighbor = neighbor;
          }
        }
      }
      if (best_neighbor.empty()) break;
      current = std::move(best_neighbor);
      current_value = best_value;
    }
    TuneEntry entry;
    entry.assignment = assignment_for(axes, current);
    entry.objective = current_value;
    result.entries.push_back(std::move(entry));
  }
  rank_entries(result.entries);
  return result;
}

namespace {

// Scores a spec by the final mean log10 budget divided by the number of
// recorded periods, with the trial std scaled the same way.
std::pair<double, double> score_spec(const StrategySpec& spec,
                                     const ExperimentConfig& eval) {
  ExperimentConfig config = eval;
  config.strategies = {spec};
  const auto result = run_experiment(config);
  const auto& curve = result.curves.front();
  const double periods =
      static_cast<double>(config.t_max / config.effective_record_period());
  return {curve.final_mean_log10() / periods,
          curve.final_std_log10() / periods};
}

Objective spec_objective(const StrategySpec& base,
                         const std::vector<ParamGrid>& grids,
                         const ExperimentConfig& eval,
                         std::map<std::vector<double>, double>* stds) {
  return [&base, &grids, &eval, stds](const std::vector<double>& values) {
    StrategySpec spec = base;
    for (std::size_t a = 0; a < grids.size(); ++a) {
      spec = with_parameter(spec, grids[a].name, values[a]);
    }
    const auto [objective, std_dev] = score_spec(spec, eval);
    if (stds) (*stds)[values] = std_dev;
    return objective;
  };
}

void attach_specs(TuneResult& result, const StrategySpec& base,
                  const std::map<std::vector<double>, double>& stds) {
  for (auto& entry : result.entries) {
    StrategySpec spec = base;
    std::vector<double> values;
    for (const auto& [name, value] : entry.assignment) {
      spec = with_parameter(spec, name, value);
      values.push_back(value);
    }
    entry.spec = spec;
    if (auto it = stds.find(values); it != stds.end()) {
      entry.std_dev = it->second;
    }
  }
}

}  // namespace

TuneResult grid_search(const StrategySpec& base,
                       const std::vector<ParamGrid>& grids,
                       const ExperimentConfig& eval) {
  std::map<std::vector<double>, double> stds;
  auto result =
      grid_search_objective(grids, spec_objective(base, grids, eval, &stds));
  attach_specs(result, base, stds);
  return result;
}

TuneResult hill_climb_restart(const StrategySpec& base,
                              const std::vector<ParamGrid>& axes,
                              int n_restarts, const ExperimentConfig& eval,
                              RngStream& rng) {
  std::map<std::vector<double>, double> stds;
  auto result = hill_climb_objective(
      axes, n_restarts, spec_objective(base, axes, eval, &stds), rng);
  attach_specs(result, base, stds);
  return result;
}

}  // namespace roisim
