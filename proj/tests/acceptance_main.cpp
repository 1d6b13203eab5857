// Acceptance suite: one pass/fail line per criterion, run at full scale.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "roisim/analysis.hpp"
#include "roisim/engine.hpp"
#include "roisim/predictors.hpp"
#include "roisim/returns.hpp"
#include "roisim/tuner.hpp"
#include "test_util.hpp"

using namespace roisim;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::chrono::steady_clock::time_point g_start;

void begin_criterion() { g_start = std::chrono::steady_clock::now(); }

void report(int id, const std::string& title, bool pass,
            const std::string& detail) {
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start)
          .count();
  std::printf("[%s] criterion %d: %s (%s) [%.1fs]\n", pass ? "PASS" : "FAIL",
              id, title.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

double pooled_se(const StrategyCurve& a, const StrategyCurve& b, int n) {
  const double sa = a.final_std_log10();
  const double sb = b.final_std_log10();
  return std::sqrt(sa * sa / n + sb * sb / n);
}

const QBounds kBounds{};
constexpr std::uint64_t kMasterSeed = 20080609;  // fixed for the whole suite

// Reference parameters used throughout the comparisons.
StrategySpec ma_rs() { return StrategySpec::moving_average(5, ActionMode::RiskSeeking); }
StrategySpec ma_ra() { return StrategySpec::moving_average(2, ActionMode::RiskAvoiding); }
StrategySpec mls_rs() { return StrategySpec::least_squares(25, ActionMode::RiskSeeking); }
StrategySpec iur_rs() { return StrategySpec::incremental(0.5, ActionMode::RiskSeeking); }
GaConfig ga_reference() {
  GaConfig cfg;
  cfg.population = 1000;
  cfg.genes = 100;
  cfg.p_crossover = 0.7;
  cfg.p_mutation = 0.01;
  cfg.elitism = 0.3;
  return cfg;
}

ExperimentResult run(std::vector<StrategySpec> strategies, double sigma2,
                     long t_max, int n_trials) {
  ExperimentConfig config;
  config.strategies = std::move(strategies);
  config.returns = ReturnParams::periodic(100, 0.0, sigma2);
  config.t_max = t_max;
  config.n_trials = n_trials;
  config.master_seed = kMasterSeed;
  return run_experiment(config);
}

// -------------------------------------------------------------- criterion 1

void criterion_1() {
  begin_criterion();
  const auto result = run({StrategySpec::constant(0.1),
                           StrategySpec::constant(0.5),
                           StrategySpec::constant(1.0)},
                          0.5, 10000, 100);
  const double m1 = result.curves[0].final_mean_log10();
  const double m5 = result.curves[1].final_mean_log10();
  const double m10 = result.curves[2].final_mean_log10();
  const bool pass = m1 < 0.0 && m5 < 0.0 && m10 < 0.0 && m1 > m5 && m5 > m10;
  report(1, "constant strategies decay, faster for larger stakes", pass,
         "mean log10 at t=1e4: q0=0.1: " + fmt(m1) + ", 0.5: " + fmt(m5) +
             ", 1.0: " + fmt(m10));
}

// -------------------------------------------------------------- criterion 2

void criterion_2() {
  begin_criterion();
  const auto low = run({ma_rs(), mls_rs(), iur_rs()}, 0.2, 100000, 100);
  const auto high = run({ma_rs(), mls_rs(), iur_rs()}, 0.8, 100000, 100);
  bool pass = true;
  std::string detail;
  const char* names[] = {"ma", "mls", "iur"};
  for (std::size_t s = 0; s < 3; ++s) {
    const double lo = low.curves[s].final_mean_log10();
    const double hi = high.curves[s].final_mean_log10();
    pass = pass && lo > hi;
    detail += std::string(names[s]) + ": " + fmt(lo) + " vs " + fmt(hi) + "; ";
  }
  report(2, "more amplitude noise degrades every predictor strategy", pass,
         detail);
}

// -------------------------------------------------------------- criterion 3

void criterion_3() {
  begin_criterion();
  const int n = 100;
  const auto result =
      run({StrategySpec::square_wave(), ma_rs(), mls_rs(), iur_rs(),
           StrategySpec::constant(0.5)},
          0.1, 100000, n);
  const auto& sw = result.curves[0];
  const auto& q0 = result.curves[4];
  bool pass = true;
  std::string detail = "final mean log10: sw=" + fmt(sw.final_mean_log10());
  for (std::size_t s = 1; s <= 3; ++s) {
    const auto& mid = result.curves[s];
    const double gap_top = sw.final_mean_log10() - mid.final_mean_log10();
    const double gap_bottom = mid.final_mean_log10() - q0.final_mean_log10();
    pass = pass && gap_top > 2.0 * pooled_se(sw, mid, n);
    pass = pass && gap_bottom > 2.0 * pooled_se(mid, q0, n);
    detail += ", " + mid.spec.name() + "=" + fmt(mid.final_mean_log10());
  }
  detail += ", q0=" + fmt(q0.final_mean_log10());
  report(3, "square wave beats the predictors, predictors beat constant",
         pass, detail);
}

// -------------------------------------------------------------- criterion 4

void criterion_4() {
  begin_criterion();
  std::vector<double> sw_profile(100);
  for (int k = 0; k < 100; ++k) {
    sw_profile[static_cast<std::size_t>(k)] = k < 50 ? 1.0 : 0.1;
  }
  TraceRequest trace;
  trace.ga_snapshot_steps = {10000, 100000};
  double sum_mid = 0.0;
  double sum_final = 0.0;
  const int n_seeds = 10;
  for (int seed = 1; seed <= n_seeds; ++seed) {
    const auto result = run_trial(
        {StrategySpec::genetic(ga_reference())},
        ReturnParams::periodic(100, 0.0, 0.0), 100000,
        substream_seed(kMasterSeed, static_cast<std::uint64_t>(seed)),
        kBounds, 100, &trace);
    const auto& snaps = result.per_strategy[0].ga_snapshots;
    sum_mid += testutil::pearson(snaps[0].genes, sw_profile);
    sum_final += testutil::pearson(snaps[1].genes, sw_profile);
  }
  const double mid = sum_mid / n_seeds;
  const double final_corr = sum_final / n_seeds;
  const bool pass = final_corr >= 0.8 && final_corr >= mid;
  report(4, "the genetic strategy discovers the square wave", pass,
         "mean corr vs square wave: t=1e4: " + fmt(mid) +
             ", t=1e5: " + fmt(final_corr));
}

// -------------------------------------------------------------- criterion 5

void criterion_5() {
  begin_criterion();
  const int n = 100;
  const auto low = run({ma_rs(), ma_ra()}, 0.1, 100000, n);
  const auto high = run({ma_rs(), ma_ra()}, 0.9, 100000, n);
  const double low_gap =
      low.curves[0].final_mean_log10() - low.curves[1].final_mean_log10();
  const double high_gap =
      high.curves[1].final_mean_log10() - high.curves[0].final_mean_log10();
  const bool pass =
      low_gap > 2.0 * pooled_se(low.curves[0], low.curves[1], n) &&
      high_gap > 2.0 * pooled_se(high.curves[0], high.curves[1], n);
  report(5, "risk-seeking wins at low noise, risk-avoiding at high noise",
         pass,
         "rs-ra at sigma2=0.1: " + fmt(low_gap) +
             ", ra-rs at sigma2=0.9: " + fmt(high_gap));
}

// -------------------------------------------------------------- criterion 6

void criterion_6() {
  begin_criterion();
  const long n = 100000;
  std::string detail;

  // (a) phase histograms are level-independent.
  std::vector<std::vector<double>> phase_samples;
  int stream = 0;
  for (double s1 : {0.1, 0.5, 0.9}) {
    auto rng = RngStream::substream(kMasterSeed,
                                    static_cast<std::uint64_t>(900 + stream++));
    phase_samples.push_back(
        generate_series(ReturnParams::periodic(100, s1, 0.0), n, rng).values);
  }
  double sup = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto fi = histogram(phase_samples[i], 50, -1, 1).frequencies();
      const auto fj = histogram(phase_samples[j], 50, -1, 1).frequencies();
      for (std::size_t b = 0; b < fi.size(); ++b) {
        sup = std::max(sup, std::abs(fi[b] - fj[b]));
      }
    }
  }
  const bool pass_a = sup < 0.02;
  detail += "(a) hist sup=" + fmt(sup);

  // (b) arcsine law.
  double worst_ks = 0.0;
  for (const auto& samples : phase_samples) {
    worst_ks = std::max(
        worst_ks, testutil::ks_one_sample(samples, [](double r) {
          return 0.5 + std::asin(std::clamp(r, -1.0, 1.0)) / std::numbers::pi;
        }));
  }
  const bool pass_b = worst_ks < 0.02;
  detail += "; (b) arcsine KS=" + fmt(worst_ks);

  // (c) interior minimum of the amplitude mean-|r| curve.
  double best_sigma = 0.0, best_value = 1e9;
  for (int i = 1; i <= 9; ++i) {
    const double sigma = 0.1 * i;
    auto rng = RngStream::substream(kMasterSeed,
                                    static_cast<std::uint64_t>(950 + i));
    const double m = mean_abs(
        generate_series(ReturnParams::periodic(100, 0.0, sigma), n, rng)
            .values);
    if (m < best_value) {
      best_value = m;
      best_sigma = sigma;
    }
  }
  const bool pass_c = best_sigma >= 0.4 && best_sigma <= 0.7;
  detail += "; (c) argmin sigma2=" + fmt(best_sigma);

  // (d) mean lag-1 product ordering at sigma = 0.5.
  auto rng_a = RngStream::substream(kMasterSeed, 970);
  auto rng_p = RngStream::substream(kMasterSeed, 971);
  const double amp_mean = mean_consecutive_product(
      generate_series(ReturnParams::periodic(100, 0.0, 0.5), n, rng_a).values);
  const double phase_mean = mean_consecutive_product(
      generate_series(ReturnParams::periodic(100, 0.5, 0.0), n, rng_p).values);
  const bool pass_d = amp_mean > phase_mean;
  detail += "; (d) mean product amp=" + fmt(amp_mean) +
            " phase=" + fmt(phase_mean);

  report(6, "return statistics match the analysis claims",
         pass_a && pass_b && pass_c && pass_d, detail);
}

// -------------------------------------------------------------- criterion 7

void criterion_7() {
  begin_criterion();
  ExperimentConfig eval;
  eval.returns = ReturnParams::periodic(100, 0.0, 0.2);
  eval.t_max = 100000;
  eval.n_trials = 50;
  eval.master_seed = kMasterSeed;

  ParamGrid ma_grid{"ma_m", {}};
  for (int m = 1; m <= 10; ++m) ma_grid.values.push_back(m);
  ParamGrid iur_grid{"iur_gamma", {}};
  for (int i = 1; i <= 9; ++i) iur_grid.values.push_back(0.1 * i);

  const auto rs = grid_search(ma_rs(), {ma_grid}, eval);
  const auto ra = grid_search(
      StrategySpec::moving_average(2, ActionMode::RiskAvoiding), {ma_grid},
      eval);
  const auto iur = grid_search(iur_rs(), {iur_grid}, eval);

  const double rs_m = rs.best().assignment[0].second;
  const double ra_m = ra.best().assignment[0].second;
  const double gamma = iur.best().assignment[0].second;
  const bool pass_rs = rs_m >= 3 && rs_m <= 7;
  const bool pass_ra = ra_m >= 1 && ra_m <= 4;
  const bool pass_iur = gamma >= 0.3 - 1e-12 && gamma <= 0.7 + 1e-12;
  report(7, "grid search lands in the reference parameter neighborhoods",
         pass_rs && pass_ra && pass_iur,
         "ma-rs M=" + fmt(rs_m) + " (want 3..7), ma-ra M=" + fmt(ra_m) +
             " (want 1..4), iur gamma=" + fmt(gamma) + " (want 0.3..0.7)");
}

// -------------------------------------------------------------- criterion 8

void criterion_8() {
  begin_criterion();
  bool pass = true;
  std::string detail;

  // (a) budget recursion vs the direct product over one cycle.
  double worst = 0.0;
  for (double q0 : {0.1, 0.5, 1.0}) {
    const auto result =
        run_trial({StrategySpec::constant(q0)},
                  ReturnParams::periodic(100, 0.0, 0.0), 100, 314);
    double expected = 1.0;
    for (int t = 0; t < 100; ++t) {
      expected *= 1.0 + q0 * std::sin(2.0 * std::numbers::pi * t / 100.0);
    }
    worst = std::max(
        worst,
        std::abs(result.per_strategy[0].samples.back().budget - expected));
  }
  pass = pass && worst < 1e-9;
  detail += "(a) product gap=" + fmt(worst);

  // (b) least-squares fit vs the normal equations.
  {
    MovingLeastSquares mls(4);
    const std::vector<double> values{0.0, 1.0, 0.0, 1.0};
    for (double v : values) mls.observe(v);
    const auto fit = mls.fit();
    long double st = 0 + 1 + 2 + 3, sy = 2, sty = 1 + 3, stt = 1 + 4 + 9;
    const long double m = (4 * sty - st * sy) / (4 * stt - st * st);
    const long double b = (sy - m * st) / 4;
    const double gap =
        std::max(std::abs(fit.slope - static_cast<double>(m)),
                 std::abs(fit.intercept - static_cast<double>(b)));
    pass = pass && gap < 1e-9;
    detail += "; (b) fit gap=" + fmt(gap);
  }

  // (c) accumulated fitness vs the brute-force double loop, exactly.
  {
    GaConfig cfg;
    cfg.population = 3;
    cfg.genes = 4;
    auto rng = RngStream::substream(kMasterSeed, 988);
    auto pop = init_population(cfg, kBounds, rng);
    std::vector<double> returns;
    auto r_rng = RngStream::substream(kMasterSeed, 989);
    for (int t = 0; t < 4; ++t) returns.push_back(r_rng.uniform(-1, 1));
    for (long t = 0; t < 4; ++t) {
      accumulate_fitness(pop, returns[static_cast<std::size_t>(t)], t);
    }
    bool exact = true;
    for (std::size_t j = 0; j < 3; ++j) {
      double expected = 0.0;
      for (std::size_t k = 0; k < 4; ++k) {
        expected += returns[k] * pop.members[j].genes[k];
      }
      exact = exact && pop.members[j].fitness == expected;
    }
    pass = pass && exact;
    detail += exact ? "; (c) fitness exact" : "; (c) fitness differs";
  }

  // (d) square wave vs the unit-ramp rectangle: they may differ only at the
  // two single-step ramp locations t mod T in {0, T/2} (the wrap step is
  // assigned to the investing half by the square wave's convention).
  {
    const auto rr = RampRectParams::make(1, 50, 51, 100);
    bool ok = true;
    for (long t = 0; t < 400; ++t) {
      const double sw = q_square_wave(100, t, kBounds);
      const double ramp = q_ramp_rect(rr, t, kBounds);
      const long that = t % 100;
      if (that == 0 || that == 50) {
        ok = ok && sw != ramp;
      } else {
        ok = ok && sw == ramp;
      }
    }
    pass = pass && ok;
    detail += ok ? "; (d) sw/rr mismatch set {0,50} exact"
                 : "; (d) sw/rr mismatch set wrong";
  }

  report(8, "oracle equivalences hold exactly", pass, detail);
}

// -------------------------------------------------------------- criterion 9

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<missing " + path.string() + ">";
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_9() {
  begin_criterion();
  const char* bin = std::getenv("ROISIM_CLI_BIN");
  if (!bin) {
    report(9, "commands are byte-deterministic", false,
           "ROISIM_CLI_BIN not set");
    return;
  }
  const fs::path root = "acceptance-out";
  fs::remove_all(root);
  fs::create_directories(root);
  auto run_cli = [&](const std::string& args) {
    const std::string cmd =
        std::string(bin) + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };

  struct Case {
    std::string name;
    std::string args;
    std::vector<std::string> files;
  };
  const std::vector<Case> cases{
      {"simulate",
       "simulate --trials 20 --steps 20000 --seed 909 --sigma2 0.5 "
       "--ga-c 200",
       {"budget_curves.csv"}},
      {"sweep",
       "sweep --noise amplitude --grid 0.3,0.6 --trials 5 --steps 5000 "
       "--seed 909 --strategy q0 --strategy ma --strategy sw",
       {"sweep.csv"}},
      {"stats", "stats --samples 20000 --seed 909",
       {"histograms.csv", "mean_abs.csv", "consecutive_products.csv",
        "correlation_summary.csv"}},
      {"tune",
       "tune --family iur --grid 0.3,0.5,0.7 --trials 5 --steps 5000 "
       "--seed 909 --sigma2 0.5",
       {"tune_report.csv"}},
      {"ga-trace",
       "ga-trace --steps 5000 --tn 4800 --window 100 --snapshots 5000 "
       "--seed 909 --sigma2 0 --ga-c 100",
       {"ga_trace.csv", "ga_correlation.csv", "ga_best_chromosomes.csv"}},
  };

  bool pass = true;
  std::string detail;
  for (const auto& test_case : cases) {
    const auto dir_a = root / (test_case.name + "-a");
    const auto dir_b = root / (test_case.name + "-b");
    bool case_ok =
        run_cli(test_case.args + " --out " + dir_a.string()) == 0 &&
        run_cli(test_case.args + " --out " + dir_b.string()) == 0;
    for (const auto& file : test_case.files) {
      case_ok = case_ok && slurp(dir_a / file) == slurp(dir_b / file);
    }
    if (test_case.name == "simulate") {
      // Parallel trial execution must not change a single byte.
      const auto dir_c = root / "simulate-threads";
      case_ok = case_ok &&
                run_cli(test_case.args + " --threads 4 --out " +
                        dir_c.string()) == 0 &&
                slurp(dir_a / "budget_curves.csv") ==
                    slurp(dir_c / "budget_curves.csv");
    }
    pass = pass && case_ok;
    detail += test_case.name + (case_ok ? " ok; " : " DIFFERS; ");
  }
  report(9, "commands are byte-deterministic, serial or parallel", pass,
         detail);
}

}  // namespace

int main() {
  std::printf("acceptance suite (master seed %llu)\n",
              static_cast<unsigned long long>(kMasterSeed));
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", g_failures);
  }
  return g_failures;
}
