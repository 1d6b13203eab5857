// Command-line front end: simulate budget curves, sweep noise levels, dump
// return statistics, tune strategy parameters, and trace the genetic
// strategy against the square wave. Every command writes CSV files plus a
// manifest and a gnuplot script into the output directory.

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "roisim/analysis.hpp"
#include "roisim/config.hpp"
#include "roisim/csv.hpp"
#include "roisim/engine.hpp"
#include "roisim/tuner.hpp"
#include "roisim/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace roisim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

// Raw flag values; empty optionals fall back to env, config file, defaults.
struct Flags {
  std::optional<std::string> config_path;
  std::optional<std::string> out;
  std::optional<std::string> seed;
  std::optional<std::string> trials;
  std::optional<std::string> steps;
  std::optional<std::string> sigma1;
  std::optional<std::string> sigma2;
  std::optional<std::string> mode;
  std::optional<std::string> period;
  std::optional<std::string> threads;
  std::optional<std::string> q0;
  std::optional<std::string> ma_m;
  std::optional<std::string> mls_m;
  std::optional<std::string> iur_gamma;
  std::optional<std::string> ga_c;
  std::optional<std::string> ga_pc;
  std::optional<std::string> ga_pm;
  std::optional<std::string> ga_s;
  std::optional<std::string> q_min;
  std::optional<std::string> q_max;
  std::vector<std::string> strategy;
};

void add_common_options(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--config", flags.config_path, "key=value config file");
  cmd->add_option("--out", flags.out, "output directory");
  cmd->add_option("--seed", flags.seed, "master seed");
  cmd->add_option("--trials", flags.trials, "number of trials");
  cmd->add_option("--steps", flags.steps, "time steps per trial");
  cmd->add_option("--sigma1", flags.sigma1, "phase noise level");
  cmd->add_option("--sigma2", flags.sigma2, "amplitude noise level");
  cmd->add_option("--mode", flags.mode, "action mode: rs or ra");
  cmd->add_option("--period", flags.period, "return period");
  cmd->add_option("--threads", flags.threads, "worker threads (0 = auto)");
  cmd->add_option("--q0", flags.q0, "constant strategy fraction");
  cmd->add_option("--ma-m", flags.ma_m, "moving-average window");
  cmd->add_option("--mls-m", flags.mls_m, "least-squares window");
  cmd->add_option("--iur-gamma", flags.iur_gamma, "incremental step size");
  cmd->add_option("--ga-c", flags.ga_c, "genetic population size");
  cmd->add_option("--ga-pc", flags.ga_pc, "genetic crossover probability");
  cmd->add_option("--ga-pm", flags.ga_pm, "genetic mutation probability");
  cmd->add_option("--ga-s", flags.ga_s, "genetic elitism fraction");
  cmd->add_option("--q-min", flags.q_min, "minimum invested fraction");
  cmd->add_option("--q-max", flags.q_max, "maximum invested fraction");
  cmd->add_option("--strategy", flags.strategy,
                  "strategy to run (repeatable): q0 ma mls iur ga sw");
}

Settings resolve_settings(const Flags& flags) {
  Settings settings;
  if (flags.config_path) {
    settings.apply(KeyValueConfig::from_file(*flags.config_path));
  }
  KeyValueConfig env;
  env.merge_environment("ROISIM_");
  settings.apply(env);

  KeyValueConfig overlay;
  auto put = [&](const char* key, const std::optional<std::string>& v) {
    if (v) overlay.set(key, *v);
  };
  put("out_dir", flags.out);
  put("seed", flags.seed);
  put("trials", flags.trials);
  put("t_max", flags.steps);
  put("sigma1", flags.sigma1);
  put("sigma2", flags.sigma2);
  put("mode", flags.mode);
  put("period", flags.period);
  put("threads", flags.threads);
  put("q0", flags.q0);
  put("ma_m", flags.ma_m);
  put("mls_m", flags.mls_m);
  put("iur_gamma", flags.iur_gamma);
  put("ga_c", flags.ga_c);
  put("ga_pc", flags.ga_pc);
  put("ga_pm", flags.ga_pm);
  put("ga_s", flags.ga_s);
  put("q_min", flags.q_min);
  put("q_max", flags.q_max);
  if (!flags.strategy.empty()) {
    std::string joined;
    for (const auto& s : flags.strategy) {
      if (!joined.empty()) joined += ',';
      joined += s;
    }
    overlay.set("strategies", joined);
  }
  settings.apply(overlay);
  return settings;
}

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Manifest {
 public:
  Manifest(const std::string& command, const Settings& settings) {
    doc_["tool"] = "roisim";
    doc_["version"] = kVersion;
    doc_["command"] = command;
    doc_["started_at"] = iso8601_now();
    doc_["master_seed"] = settings.seed;
    json echo;
    for (const auto& [k, v] : settings.echo()) echo[k] = v;
    doc_["settings"] = echo;
    if (settings.sigma1 > 0.0 && settings.sigma2 > 0.0) {
      doc_["non_canonical_mixed_noise"] = true;
    }
    start_ = std::chrono::steady_clock::now();
  }

  void extra(const std::string& key, const json& value) { doc_[key] = value; }

  void output(const std::string& name) { outputs_.push_back(name); }

  void write(const fs::path& dir) {
    doc_["outputs"] = outputs_;
    doc_["duration_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_)
            .count();
    std::ofstream out(dir / "manifest.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest.json");
    out << doc_.dump(2) << '\n';
  }

 private:
  json doc_;
  std::vector<std::string> outputs_;
  std::chrono::steady_clock::time_point start_;
};

fs::path prepare_out_dir(const Settings& settings) {
  fs::path dir(settings.out_dir);
  fs::create_directories(dir);
  return dir;
}

void write_plot_script(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# gnuplot script\nset datafile separator ','\n" << body;
}

std::vector<double> parse_sigma_list(const std::string& csv) {
  std::vector<double> out;
  for (const auto& tok : split_list(csv)) {
    out.push_back(std::stod(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty sigma grid");
  return out;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const Flags& flags) {
  const Settings settings = resolve_settings(flags);
  const fs::path dir = prepare_out_dir(settings);
  Manifest manifest("simulate", settings);

  const auto config = settings.make_experiment();
  const auto result = run_experiment(config);

  CsvWriter csv((dir / "budget_curves.csv").string(),
                {"t", "strategy", "mode", "sigma1", "sigma2", "mean_budget",
                 "mean_log10_budget", "std_log10_budget"});
  for (const auto& curve : result.curves) {
    for (std::size_t k = 0; k < curve.times.size(); ++k) {
      csv.row({CsvWriter::field(curve.times[k]), curve.spec.name(),
               curve.spec.mode_name(), CsvWriter::field(settings.sigma1),
               CsvWriter::field(settings.sigma2),
               CsvWriter::field(curve.mean_budget[k]),
               CsvWriter::field(curve.mean_log10[k]),
               CsvWriter::field(curve.std_log10[k])});
    }
  }
  manifest.output("budget_curves.csv");

  std::string labels;
  for (const auto& curve : result.curves) {
    if (!labels.empty()) labels += ' ';
    labels += curve.spec.name();
  }
  write_plot_script(dir / "budget_curves.gp",
                    "set xlabel 't'\n"
                    "set ylabel 'mean log10 budget'\n"
                    "set key outside\n"
                    "strategies = \"" + labels + "\"\n"
                    "plot for [s in strategies] 'budget_curves.csv' skip 1 "
                    "using 1:(strcol(2) eq s ? column(7) : 1/0) "
                    "with lines title s\n");
  manifest.output("budget_curves.gp");
  manifest.write(dir);
  return kExitOk;
}

// ------------------------------------------------------------------- sweep

int cmd_sweep(const Flags& flags, const std::string& noise,
              const std::string& grid_csv) {
  const Settings settings = resolve_settings(flags);
  const fs::path dir = prepare_out_dir(settings);
  Manifest manifest("sweep", settings);

  if (noise != "amplitude" && noise != "phase") {
    throw std::invalid_argument("--noise must be amplitude or phase");
  }
  const auto grid = parse_sigma_list(grid_csv);
  for (double s : grid) {
    if (!(s > 0.0 && s < 1.0)) {
      throw std::invalid_argument("sweep sigma values must lie in (0,1)");
    }
  }
  manifest.extra("noise", noise);
  manifest.extra("sigma_grid", grid);

  CsvWriter csv((dir / "sweep.csv").string(),
                {"noise", "mode", "sigma", "strategy", "mean_budget",
                 "mean_log10_budget", "std_log10_budget"});
  for (double sigma : grid) {
    Settings point = settings;
    if (noise == "amplitude") {
      point.sigma2 = sigma;
      point.sigma1 = 0.0;
    } else {
      point.sigma1 = sigma;
      point.sigma2 = 0.0;
    }
    const auto result = run_experiment(point.make_experiment());
    for (const auto& curve : result.curves) {
      csv.row({noise, settings.mode, CsvWriter::field(sigma),
               curve.spec.name(), CsvWriter::field(curve.mean_budget.back()),
               CsvWriter::field(curve.final_mean_log10()),
               CsvWriter::field(curve.final_std_log10())});
    }
  }
  manifest.output("sweep.csv");

  write_plot_script(dir / "sweep.gp",
                    "set xlabel 'sigma'\n"
                    "set ylabel 'final mean log10 budget'\n"
                    "set key outside\n"
                    "strategies = \"q0 ma mls iur ga sw\"\n"
                    "plot for [s in strategies] 'sweep.csv' skip 1 "
                    "using 3:(strcol(4) eq s ? column(6) : 1/0) "
                    "with linespoints title s\n");
  manifest.output("sweep.gp");
  manifest.write(dir);
  return kExitOk;
}

// ------------------------------------------------------------------- stats

int cmd_stats(const Flags& flags, long samples, int bins,
              const std::string& hist_sigmas_csv,
              const std::string& grid_csv) {
  const Settings settings = resolve_settings(flags);
  const fs::path dir = prepare_out_dir(settings);
  Manifest manifest("stats", settings);

  const auto hist_sigmas = parse_sigma_list(hist_sigmas_csv);
  const auto grid = parse_sigma_list(grid_csv);
  if (samples < 2) throw std::invalid_argument("--samples must be >= 2");
  if (bins < 1) throw std::invalid_argument("--bins must be >= 1");
  manifest.extra("samples", samples);
  manifest.extra("bins", bins);

  auto series_for = [&](const std::string& noise, double sigma) {
    const auto params =
        noise == "phase" ? ReturnParams::periodic(settings.period, sigma, 0.0)
                         : ReturnParams::periodic(settings.period, 0.0, sigma);
    auto rng = RngStream::substream(settings.seed,
                                    noise == "phase" ? 1000 : 2000);
    return generate_series(params, samples, rng);
  };

  CsvWriter hist_csv((dir / "histograms.csv").string(),
                     {"noise", "sigma", "bin_lo", "bin_hi", "count",
                      "frequency"});
  CsvWriter cons_csv((dir / "consecutive_products.csv").string(),
                     {"noise", "sigma", "bin_lo", "bin_hi", "count",
                      "frequency"});
  CsvWriter mean_csv((dir / "mean_abs.csv").string(),
                     {"noise", "sigma", "mean_abs"});
  CsvWriter corr_csv((dir / "correlation_summary.csv").string(),
                     {"noise", "sigma", "mean_product", "sign_correlation"});

  for (const std::string noise : {"phase", "amplitude"}) {
    for (double sigma : hist_sigmas) {
      const auto series = series_for(noise, sigma);
      const auto hist = histogram(series.values, bins, -1.0, 1.0);
      const auto freq = hist.frequencies();
      for (std::size_t b = 0; b < hist.counts.size(); ++b) {
        hist_csv.row({noise, CsvWriter::field(sigma),
                      CsvWriter::field(hist.bin_edges[b]),
                      CsvWriter::field(hist.bin_edges[b + 1]),
                      CsvWriter::field(static_cast<long>(hist.counts[b])),
                      CsvWriter::field(freq[b])});
      }
      const auto cons = consecutive_product_distribution(series.values, bins);
      const auto cons_freq = cons.frequencies();
      for (std::size_t b = 0; b < cons.counts.size(); ++b) {
        cons_csv.row({noise, CsvWriter::field(sigma),
                      CsvWriter::field(cons.bin_edges[b]),
                      CsvWriter::field(cons.bin_edges[b + 1]),
                      CsvWriter::field(static_cast<long>(cons.counts[b])),
                      CsvWriter::field(cons_freq[b])});
      }
    }
    for (double sigma : grid) {
      const auto series = series_for(noise, sigma);
      mean_csv.row({noise, CsvWriter::field(sigma),
                    CsvWriter::field(mean_abs(series.values))});
      corr_csv.row({noise, CsvWriter::field(sigma),
                    CsvWriter::field(mean_consecutive_product(series.values)),
                    CsvWriter::field(sign_correlation(series.values))});
    }
  }
  manifest.output("histograms.csv");
  manifest.output("consecutive_products.csv");
  manifest.output("mean_abs.csv");
  manifest.output("correlation_summary.csv");

  write_plot_script(dir / "stats.gp",
                    "set xlabel 'sigma'\n"
                    "set ylabel 'mean |r|'\n"
                    "set key outside\n"
                    "plot 'mean_abs.csv' skip 1 "
                    "using 2:(strcol(1) eq 'phase' ? column(3) : 1/0) "
                    "with linespoints title 'phase', '' skip 1 "
                    "using 2:(strcol(1) eq 'amplitude' ? column(3) : 1/0) "
                    "with linespoints title 'amplitude'\n");
  manifest.output("stats.gp");
  manifest.write(dir);
  return kExitOk;
}

// -------------------------------------------------------------------- tune

int cmd_tune(const Flags& flags, const std::string& family,
             std::string algorithm, const std::string& grid_csv,
             int restarts) {
  const Settings settings = resolve_settings(flags);
  const fs::path dir = prepare_out_dir(settings);
  Manifest manifest("tune", settings);
  if (algorithm.empty()) {
    // Exhaustive search for the one-parameter families; the genetic
    // configuration space is searched greedily.
    algorithm = family == "ga" ? "hillclimb" : "grid";
  }
  manifest.extra("family", family);
  manifest.extra("algorithm", algorithm);

  const StrategySpec base = settings.make_strategy(family);
  ExperimentConfig eval = settings.make_experiment();
  eval.strategies.clear();  // filled per grid point by the tuner

  std::vector<ParamGrid> grids;
  if (family == "ma" || family == "mls") {
    const std::string param = family + "_m";
    std::vector<double> values;
    if (!grid_csv.empty()) {
      values = parse_sigma_list(grid_csv);
    } else if (family == "ma") {
      for (int m = 1; m <= 10; ++m) values.push_back(m);
    } else {
      for (int m = 5; m <= 50; m += 5) values.push_back(m);
    }
    grids.push_back({param, values});
  } else if (family == "iur") {
    std::vector<double> values;
    if (!grid_csv.empty()) {
      values = parse_sigma_list(grid_csv);
    } else {
      for (int i = 1; i <= 9; ++i) values.push_back(0.1 * i);
    }
    grids.push_back({"iur_gamma", values});
  } else if (family == "ga") {
    grids.push_back({"ga_c", {50, 100, 200, 500, 1000}});
    grids.push_back({"ga_pc", {0.1, 0.3, 0.5, 0.7, 0.9}});
    grids.push_back({"ga_pm", {0.005, 0.01, 0.02, 0.05, 0.1}});
    grids.push_back({"ga_s", {0.1, 0.2, 0.3, 0.4, 0.5}});
  } else {
    throw std::invalid_argument("--family must be ma, mls, iur or ga");
  }

  TuneResult result;
  if (algorithm == "grid") {
    result = grid_search(base, grids, eval);
  } else if (algorithm == "hillclimb") {
    auto rng = RngStream::substream(settings.seed, 0xC11B);
    result = hill_climb_restart(base, grids, restarts, eval, rng);
  } else {
    throw std::invalid_argument("--algorithm must be grid or hillclimb");
  }

  std::vector<std::string> header;
  for (const auto& g : grids) header.push_back(g.name);
  header.insert(header.end(), {"objective", "std", "rank"});
  CsvWriter csv((dir / "tune_report.csv").string(), header);
  for (const auto& entry : result.entries) {
    std::vector<std::string> row;
    for (const auto& [name, value] : entry.assignment) {
      (void)name;
      row.push_back(CsvWriter::field(value));
    }
    row.push_back(CsvWriter::field(entry.objective));
    row.push_back(CsvWriter::field(entry.std_dev));
    row.push_back(CsvWriter::field(entry.rank));
    csv.row(row);
  }
  manifest.output("tune_report.csv");
  manifest.write(dir);
  return kExitOk;
}

// ---------------------------------------------------------------- ga-trace

int cmd_ga_trace(const Flags& flags, long tn, long window,
                 const std::string& snapshots_csv) {
  const Settings settings = resolve_settings(flags);
  const fs::path dir = prepare_out_dir(settings);
  Manifest manifest("ga-trace", settings);
  manifest.extra("tn", tn);
  manifest.extra("window", window);

  if (window <= 0) throw std::invalid_argument("--window must be positive");
  if (tn < 0 || tn + window > settings.t_max) {
    throw std::invalid_argument("trace window outside the run");
  }

  TraceRequest trace;
  trace.window_start = tn;
  trace.window_length = window;
  trace.ga_generation_dump = true;
  for (const auto& tok : split_list(snapshots_csv)) {
    const long step = std::stol(tok);
    if (step < 1 || step > settings.t_max) {
      throw std::invalid_argument("snapshot step outside the run: " + tok);
    }
    trace.ga_snapshot_steps.push_back(step);
  }

  const StrategySpec ga_spec = settings.make_strategy("ga");
  const auto params =
      ReturnParams::periodic(settings.period, settings.sigma1,
                             settings.sigma2);
  const auto result =
      run_trial({ga_spec}, params, settings.t_max,
                substream_seed(settings.seed, 0), settings.bounds(),
                settings.period, &trace);
  const auto& ga_trial = result.per_strategy[0];

  CsvWriter trace_csv((dir / "ga_trace.csv").string(),
                      {"t", "r", "q_ga", "q_sw"});
  for (long i = 0; i < window; ++i) {
    const long t = tn + i;
    trace_csv.row(
        {CsvWriter::field(t),
         CsvWriter::field(result.traced_returns[static_cast<std::size_t>(i)]),
         CsvWriter::field(
             ga_trial.traced_fractions[static_cast<std::size_t>(i)]),
         CsvWriter::field(
             q_square_wave(settings.period, t, settings.bounds()))});
  }
  manifest.output("ga_trace.csv");

  std::vector<double> sw_profile(static_cast<std::size_t>(settings.period));
  for (int k = 0; k < settings.period; ++k) {
    sw_profile[static_cast<std::size_t>(k)] =
        q_square_wave(settings.period, k, settings.bounds());
  }
  CsvWriter corr_csv((dir / "ga_correlation.csv").string(),
                     {"step", "corr_vs_sw"});
  for (const auto& snap : ga_trial.ga_snapshots) {
    const double corr =
        snap.genes.empty() ? 0.0 : pearson(snap.genes, sw_profile);
    corr_csv.row({CsvWriter::field(snap.step), CsvWriter::field(corr)});
  }
  manifest.output("ga_correlation.csv");

  CsvWriter best_csv((dir / "ga_best_chromosomes.csv").string(),
                     {"generation", "gene_index", "gene_value", "fitness"});
  for (const auto& gen : ga_trial.ga_generations) {
    for (std::size_t k = 0; k < gen.genes.size(); ++k) {
      best_csv.row({CsvWriter::field(gen.generation),
                    CsvWriter::field(static_cast<long>(k)),
                    CsvWriter::field(gen.genes[k]),
                    CsvWriter::field(gen.fitness)});
    }
  }
  manifest.output("ga_best_chromosomes.csv");

  write_plot_script(dir / "ga_trace.gp",
                    "set xlabel 't'\n"
                    "set key outside\n"
                    "plot 'ga_trace.csv' skip 1 using 1:2 with lines "
                    "title 'r', '' skip 1 using 1:3 with steps title "
                    "'q ga', '' skip 1 using 1:4 with steps title 'q sw'\n");
  manifest.output("ga_trace.gp");
  manifest.write(dir);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Investment-strategy simulator for noisy periodic returns"};
  app.require_subcommand(1);

  Flags flags;

  auto* simulate = app.add_subcommand(
      "simulate", "Run strategies and write averaged budget curves");
  add_common_options(simulate, flags);

  auto* sweep = app.add_subcommand(
      "sweep", "Final budgets across a grid of noise levels");
  add_common_options(sweep, flags);
  std::string sweep_noise = "amplitude";
  std::string sweep_grid = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  sweep->add_option("--noise", sweep_noise, "noise family: amplitude|phase");
  sweep->add_option("--grid", sweep_grid, "comma list of sigma values");

  auto* stats = app.add_subcommand(
      "stats", "Return-stream statistics (distribution, mean |r|, lag-1)");
  add_common_options(stats, flags);
  long stats_samples = 100000;
  int stats_bins = kDefaultHistogramBins;
  std::string hist_sigmas = "0.1,0.5,0.9";
  std::string stats_grid = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  stats->add_option("--samples", stats_samples, "samples per series");
  stats->add_option("--bins", stats_bins, "histogram bins");
  stats->add_option("--hist-sigmas", hist_sigmas,
                    "sigma values for the distribution files");
  stats->add_option("--grid", stats_grid,
                    "sigma values for the mean-|r| and correlation sweeps");

  auto* tune = app.add_subcommand(
      "tune", "Search strategy parameters for the best budget growth");
  add_common_options(tune, flags);
  std::string tune_family;
  std::string tune_algorithm;
  std::string tune_grid;
  int tune_restarts = 3;
  tune->add_option("--family", tune_family, "ma|mls|iur|ga")->required();
  tune->add_option("--algorithm", tune_algorithm, "grid|hillclimb");
  tune->add_option("--grid", tune_grid,
                   "candidate values (single-parameter families)");
  tune->add_option("--restarts", tune_restarts, "hill-climb restarts");

  auto* ga_trace = app.add_subcommand(
      "ga-trace", "Dump the genetic strategy's schedule next to the "
                  "square-wave reference");
  add_common_options(ga_trace, flags);
  long trace_tn = 10000;
  long trace_window = 200;
  std::string trace_snapshots = "10000,100000";
  ga_trace->add_option("--tn", trace_tn, "window start step");
  ga_trace->add_option("--window", trace_window, "window length");
  ga_trace->add_option("--snapshots", trace_snapshots,
                       "steps at which to score the schedule vs the square "
                       "wave");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(flags);
    if (sweep->parsed()) return cmd_sweep(flags, sweep_noise, sweep_grid);
    if (stats->parsed()) {
      return cmd_stats(flags, stats_samples, stats_bins, hist_sigmas,
                       stats_grid);
    }
    if (tune->parsed()) {
      return cmd_tune(flags, tune_family, tune_algorithm, tune_grid,
                      tune_restarts);
    }
    if (ga_trace->parsed()) {
      return cmd_ga_trace(flags, trace_tn, trace_window, trace_snapshots);
    }
    std::cerr << "no command given\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}
