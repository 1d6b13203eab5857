#include "roisim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <thread>
#include <variant>

#include "roisim/predictors.hpp"

namespace roisim {

StrategySpec StrategySpec::constant(double q0) {
  StrategySpec s;
  s.kind = StrategyKind::Constant;
  s.constant_q = q0;
  return s;
}

StrategySpec StrategySpec::moving_average(int window, ActionMode mode) {
  StrategySpec s;
  s.kind = StrategyKind::MovingAverage;
  s.ma_window = window;
  s.mode = mode;
  return s;
}

StrategySpec StrategySpec::least_squares(int window, ActionMode mode) {
  StrategySpec s;
  s.kind = StrategyKind::LeastSquares;
  s.mls_window = window;
  s.mode = mode;
  return s;
}

StrategySpec StrategySpec::incremental(double gamma, ActionMode mode) {
  StrategySpec s;
  s.kind = StrategyKind::Incremental;
  s.iur_gamma = gamma;
  s.mode = mode;
  return s;
}

StrategySpec StrategySpec::genetic(const GaConfig& cfg) {
  StrategySpec s;
  s.kind = StrategyKind::Genetic;
  s.ga = cfg;
  return s;
}

StrategySpec StrategySpec::square_wave() {
  StrategySpec s;
  s.kind = StrategyKind::SquareWave;
  return s;
}

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Constant: return "q0";
    case StrategyKind::MovingAverage: return "ma";
    case StrategyKind::LeastSquares: return "mls";
    case StrategyKind::Incremental: return "iur";
    case StrategyKind::Genetic: return "ga";
    case StrategyKind::SquareWave: return "sw";
  }
  return "?";
}

const char* to_string(ActionMode mode) {
  return mode == ActionMode::RiskSeeking ? "rs" : "ra";
}

std::string StrategySpec::name() const { return to_string(kind); }

std::string StrategySpec::mode_name() const {
  switch (kind) {
    case StrategyKind::MovingAverage:
    case StrategyKind::LeastSquares:
    case StrategyKind::Incremental:
      return to_string(mode);
    default:
      return "none";
  }
}

std::string StrategySpec::label() const {
  const std::string m = mode_name();
  return m == "none" ? name() : name() + "-" + m;
}

namespace {

std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  return splitmix_mix(h ^ (v + 0x9E3779B97F4A7C15ull + (h << 6)));
}

std::uint64_t hash_double(double d) { return std::bit_cast<std::uint64_t>(d); }

}  // namespace

std::uint64_t StrategySpec::fingerprint() const {
  std::uint64_t h = hash_combine(0x5EED, static_cast<std::uint64_t>(kind));
  switch (kind) {
    case StrategyKind::Constant:
      h = hash_combine(h, hash_double(constant_q));
      break;
    case StrategyKind::MovingAverage:
      h = hash_combine(h, static_cast<std::uint64_t>(mode));
      h = hash_combine(h, static_cast<std::uint64_t>(ma_window));
      break;
    case StrategyKind::LeastSquares:
      h = hash_combine(h, static_cast<std::uint64_t>(mode));
      h = hash_combine(h, static_cast<std::uint64_t>(mls_window));
      break;
    case StrategyKind::Incremental:
      h = hash_combine(h, static_cast<std::uint64_t>(mode));
      h = hash_combine(h, hash_double(iur_gamma));
      break;
    case StrategyKind::Genetic:
      h = hash_combine(h, static_cast<std::uint64_t>(ga.population));
      h = hash_combine(h, static_cast<std::uint64_t>(ga.genes));
      h = hash_combine(h, hash_double(ga.p_crossover));
      h = hash_combine(h, hash_double(ga.p_mutation));
      h = hash_combine(h, hash_double(ga.elitism));
      break;
    case StrategyKind::SquareWave:
      break;
  }
  return h;
}

void StrategySpec::validate(const QBounds& bounds) const {
  bounds.validate();
  switch (kind) {
    case StrategyKind::Constant:
      if (!(constant_q >= bounds.q_min && constant_q <= bounds.q_max)) {
        throw std::invalid_argument("constant fraction outside bounds");
      }
      break;
    case StrategyKind::MovingAverage:
      if (ma_window < 1) throw std::invalid_argument("ma window must be >= 1");
      break;
    case StrategyKind::LeastSquares:
      if (mls_window < 2) {
        throw std::invalid_argument("mls window must be >= 2");
      }
      break;
    case StrategyKind::Incremental:
      if (!(iur_gamma >= 0.0 && iur_gamma <= 1.0)) {
        throw std::invalid_argument("iur step size must be in [0,1]");
      }
      break;
    case StrategyKind::Genetic:
      ga.validate();
      break;
    case StrategyKind::SquareWave:
      break;
  }
}

long ExperimentConfig::effective_record_period() const {
  return record_period > 0 ? record_period : returns.period;
}

void ExperimentConfig::validate() const {
  returns.validate();
  bounds.validate();
  if (strategies.empty()) {
    throw std::invalid_argument("experiment needs at least one strategy");
  }
  for (const auto& s : strategies) s.validate(bounds);
  if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
  if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");
  const long rp = effective_record_period();
  if (rp < 1 || t_max % rp != 0) {
    throw std::invalid_argument(
        "t_max must be a positive multiple of the record period");
  }
}

double step_budget(double x, double q, double r) {
  if (!(x >= 0.0)) throw std::invalid_argument("budget must be >= 0");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("invested fraction must be in [0,1]");
  }
  if (!(r >= -1.0 && r <= 1.0)) {
    throw std::invalid_argument("return must be in [-1,1]");
  }
  return x * (1.0 + r * q);
}

double log10_step_budget(double log10_x, double q, double r) {
  const double factor = 1.0 + r * q;
  if (factor <= 0.0) return -std::numeric_limits<double>::infinity();
  return log10_x + std::log10(factor);
}

namespace {

// Per-trial runtime state of one agent.
struct ConstantState {
  double q;
};
struct SquareWaveState {
  int period;
};
struct PredictorState {
  std::variant<MovingAverage, MovingLeastSquares, IncrementalUpdate> predictor;
  ActionMode mode;
};
struct GeneticState {
  Population pop;
  GaConfig cfg;
  RngStream rng;
};

struct Agent {
  std::variant<ConstantState, SquareWaveState, PredictorState, GeneticState>
      state;
  double log10_budget = 0.0;
};

Agent make_agent(const StrategySpec& spec, const ReturnParams& returns,
                 const QBounds& bounds, std::uint64_t trial_seed) {
  Agent agent;
  switch (spec.kind) {
    case StrategyKind::Constant:
      agent.state = ConstantState{q_constant(spec.constant_q, bounds)};
      break;
    case StrategyKind::SquareWave:
      agent.state = SquareWaveState{returns.period};
      break;
    case StrategyKind::MovingAverage:
      agent.state = PredictorState{MovingAverage(spec.ma_window), spec.mode};
      break;
    case StrategyKind::LeastSquares:
      agent.state =
          PredictorState{MovingLeastSquares(spec.mls_window), spec.mode};
      break;
    case StrategyKind::Incremental:
      agent.state =
          PredictorState{IncrementalUpdate(spec.iur_gamma), spec.mode};
      break;
    case StrategyKind::Genetic: {
      GaConfig cfg = spec.ga;
      cfg.genes = returns.period;  // one gene per cycle step
      auto rng = RngStream::substream(trial_seed, spec.fingerprint());
      GeneticState gs{init_population(cfg, bounds, rng), cfg, rng};
      agent.state = std::move(gs);
      break;
    }
  }
  return agent;
}

double choose_fraction(Agent& agent, long t, const QBounds& bounds) {
  return std::visit(
      [&](auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ConstantState>) {
          return s.q;
        } else if constexpr (std::is_same_v<T, SquareWaveState>) {
          return q_square_wave(s.period, t, bounds);
        } else if constexpr (std::is_same_v<T, GeneticState>) {
          return ga_fraction(s.pop, t, bounds);
        } else {
          const double r_hat = std::visit(
              [&](auto& p) -> double {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, MovingLeastSquares>) {
                  return p.predict(t);
                } else {
                  return p.predict();
                }
              },
              s.predictor);
          return s.mode == ActionMode::RiskSeeking
                     ? q_risk_seeking(r_hat, bounds)
                     : q_risk_avoiding(r_hat, bounds);
        }
      },
      agent.state);
}

void learn(Agent& agent, double r, long t, const QBounds& bounds) {
  std::visit(
      [&](auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PredictorState>) {
          std::visit([&](auto& p) { p.observe(r); }, s.predictor);
        } else if constexpr (std::is_same_v<T, GeneticState>) {
          accumulate_fitness(s.pop, r, t);
          if (s.pop.steps_accumulated == s.cfg.genes) {
            evolve(s.pop, s.cfg, bounds, s.rng);
          }
        }
      },
      agent.state);
}

}  // namespace

TrialResult run_trial(const std::vector<StrategySpec>& strategies,
                      const ReturnParams& returns, long t_max,
                      std::uint64_t trial_seed, const QBounds& bounds,
                      long record_period, const TraceRequest* trace) {
  returns.validate();
  bounds.validate();
  if (strategies.empty()) {
    throw std::invalid_argument("trial needs at least one strategy");
  }
  for (const auto& s : strategies) s.validate(bounds);
  const long rp = record_period > 0 ? record_period : returns.period;
  if (t_max < 1 || t_max % rp != 0) {
    throw std::invalid_argument(
        "t_max must be a positive multiple of the record period");
  }
  if (trace && trace->window_start >= 0) {
    if (trace->window_length < 0 ||
        trace->window_start + trace->window_length > t_max) {
      throw std::invalid_argument("trace window outside the run");
    }
  }

  auto returns_rng = RngStream::substream(trial_seed, 0);
  std::vector<Agent> agents;
  agents.reserve(strategies.size());
  for (const auto& spec : strategies) {
    agents.push_back(make_agent(spec, returns, bounds, trial_seed));
  }

  TrialResult result;
  result.per_strategy.resize(strategies.size());
  const auto n_samples = static_cast<std::size_t>(t_max / rp);
  for (auto& st : result.per_strategy) st.samples.reserve(n_samples);

  std::vector<double> fractions(agents.size(), 0.0);
  std::size_t next_snapshot = 0;
  std::vector<long> snapshot_steps;
  if (trace) {
    snapshot_steps = trace->ga_snapshot_steps;
    std::sort(snapshot_steps.begin(), snapshot_steps.end());
  }

  for (long t = 0; t < t_max; ++t) {
    // Actions first: each agent sees only returns up to t-1.
    for (std::size_t i = 0; i < agents.size(); ++i) {
      fractions[i] = choose_fraction(agents[i], t, bounds);
    }
    const double r = next_return(returns, t, returns_rng);
    const bool in_window = trace && trace->window_start >= 0 &&
                           t >= trace->window_start &&
                           t < trace->window_start + trace->window_length;
    if (in_window) result.traced_returns.push_back(r);
    for (std::size_t i = 0; i < agents.size(); ++i) {
      agents[i].log10_budget =
          log10_step_budget(agents[i].log10_budget, fractions[i], r);
      learn(agents[i], r, t, bounds);
      if (in_window) {
        result.per_strategy[i].traced_fractions.push_back(fractions[i]);
      }
      if (trace && trace->ga_generation_dump) {
        // steps_accumulated resets to zero only when a generation just
        // turned over, so this fires exactly once per evolve.
        if (auto* gs = std::get_if<GeneticState>(&agents[i].state);
            gs && gs->pop.steps_accumulated == 0 && gs->pop.best_previous) {
          result.per_strategy[i].ga_generations.push_back(
              GaGenerationBest{gs->pop.generation - 1,
                               gs->pop.best_previous->fitness,
                               gs->pop.best_previous->genes});
        }
      }
    }
    const long completed = t + 1;
    if (completed % rp == 0) {
      for (std::size_t i = 0; i < agents.size(); ++i) {
        const double l = agents[i].log10_budget;
        result.per_strategy[i].samples.push_back(
            BudgetSample{completed, std::pow(10.0, l), l});
      }
    }
    while (next_snapshot < snapshot_steps.size() &&
           snapshot_steps[next_snapshot] == completed) {
      for (std::size_t i = 0; i < agents.size(); ++i) {
        if (auto* gs = std::get_if<GeneticState>(&agents[i].state)) {
          GaSnapshot snap;
          snap.step = completed;
          if (gs->pop.best_previous) snap.genes = gs->pop.best_previous->genes;
          result.per_strategy[i].ga_snapshots.push_back(std::move(snap));
        }
      }
      ++next_snapshot;
    }
  }
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const int n_trials = config.n_trials;
  std::vector<TrialResult> trials(static_cast<std::size_t>(n_trials));

  auto run_one = [&](int i) {
    trials[static_cast<std::size_t>(i)] = run_trial(
        config.strategies, config.returns, config.t_max,
        substream_seed(config.master_seed, static_cast<std::uint64_t>(i)),
        config.bounds, config.effective_record_period(), nullptr);
  };

  unsigned n_threads = config.n_threads > 0
                           ? static_cast<unsigned>(config.n_threads)
                           : std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(n_trials));

  if (n_threads <= 1) {
    for (int i = 0; i < n_trials; ++i) run_one(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    for (unsigned w = 0; w < n_threads; ++w) {
      workers.emplace_back([&] {
        for (int i = next.fetch_add(1); i < n_trials; i = next.fetch_add(1)) {
          run_one(i);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }

  // Aggregation runs in trial order, so parallel and serial execution agree.
  ExperimentResult result;
  const auto n_samples =
      static_cast<std::size_t>(config.t_max / config.effective_record_period());
  for (std::size_t s = 0; s < config.strategies.size(); ++s) {
    StrategyCurve curve;
    curve.spec = config.strategies[s];
    curve.times.resize(n_samples);
    curve.mean_budget.assign(n_samples, 0.0);
    curve.mean_log10.assign(n_samples, 0.0);
    curve.std_log10.assign(n_samples, 0.0);
    for (std::size_t k = 0; k < n_samples; ++k) {
      curve.times[k] = trials[0].per_strategy[s].samples[k].t;
      double sum_budget = 0.0, sum_log = 0.0;
      for (int i = 0; i < n_trials; ++i) {
        const auto& sample =
            trials[static_cast<std::size_t>(i)].per_strategy[s].samples[k];
        sum_budget += sample.budget;
        sum_log += sample.log10_budget;
      }
      const double mean_log = sum_log / n_trials;
      double ss = 0.0;
      for (int i = 0; i < n_trials; ++i) {
        const double d = trials[static_cast<std::size_t>(i)]
                             .per_strategy[s]
                             .samples[k]
                             .log10_budget -
                         mean_log;
        ss += d * d;
      }
      curve.mean_budget[k] = sum_budget / n_trials;
      curve.mean_log10[k] = mean_log;
      curve.std_log10[k] = n_trials > 1 ? std::sqrt(ss / (n_trials - 1)) : 0.0;
    }
    result.curves.push_back(std::move(curve));
  }
  return result;
}

}  // namespace roisim
