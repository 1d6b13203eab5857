#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "roisim/analysis.hpp"
#include "roisim/engine.hpp"
#include "roisim/policy.hpp"
#include "roisim/predictors.hpp"
#include "roisim/returns.hpp"
#include "roisim/rng.hpp"
#include "roisim/tuner.hpp"
#include "roisim/version.hpp"

namespace py = pybind11;
using namespace roisim;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Investment-strategy simulator for noisy periodic returns";
  m.attr("__version__") = kVersion;

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def_static("substream", &RngStream::substream, py::arg("master_seed"),
                  py::arg("stream_id"))
      .def("next_u64", &RngStream::next_u64)
      .def("next_double", &RngStream::next_double)
      .def("uniform", &RngStream::uniform, py::arg("lo"), py::arg("hi"));

  py::class_<ReturnParams>(m, "ReturnParams")
      .def_static("periodic", &ReturnParams::periodic, py::arg("period"),
                  py::arg("sigma1"), py::arg("sigma2"))
      .def_readonly("period", &ReturnParams::period)
      .def_readonly("angular_frequency", &ReturnParams::angular_frequency)
      .def_readonly("sigma1", &ReturnParams::sigma1)
      .def_readonly("sigma2", &ReturnParams::sigma2)
      .def("mixed_noise", &ReturnParams::mixed_noise);

  py::class_<ReturnSeries>(m, "ReturnSeries")
      .def_readonly("values", &ReturnSeries::values)
      .def_readonly("params", &ReturnSeries::params);

  m.def("next_return", &next_return, py::arg("params"), py::arg("t"),
        py::arg("rng"));
  m.def("generate_series", &generate_series, py::arg("params"),
        py::arg("t_max"), py::arg("rng"));

  py::class_<Histogram>(m, "Histogram")
      .def_readonly("bin_edges", &Histogram::bin_edges)
      .def_readonly("counts", &Histogram::counts)
      .def_readonly("total", &Histogram::total)
      .def("frequencies", &Histogram::frequencies);

  m.def(
      "histogram",
      [](const std::vector<double>& values, int n_bins, double lo, double hi) {
        return histogram(values, n_bins, lo, hi);
      },
      py::arg("values"), py::arg("n_bins") = kDefaultHistogramBins,
      py::arg("lo") = -1.0, py::arg("hi") = 1.0);
  m.def("mean_abs",
        [](const std::vector<double>& values) { return mean_abs(values); });
  m.def(
      "consecutive_product_distribution",
      [](const std::vector<double>& values, int n_bins) {
        return consecutive_product_distribution(values, n_bins);
      },
      py::arg("values"), py::arg("n_bins") = kDefaultHistogramBins);
  m.def("mean_consecutive_product", [](const std::vector<double>& values) {
    return mean_consecutive_product(values);
  });
  m.def("sign_correlation", [](const std::vector<double>& values) {
    return sign_correlation(values);
  });

  py::class_<MovingAverage>(m, "MovingAverage")
      .def(py::init<int>(), py::arg("memory"))
      .def("observe", &MovingAverage::observe)
      .def("predict", &MovingAverage::predict);

  py::class_<LineFit>(m, "LineFit")
      .def_readonly("slope", &LineFit::slope)
      .def_readonly("intercept", &LineFit::intercept);

  py::class_<MovingLeastSquares>(m, "MovingLeastSquares")
      .def(py::init<int, long>(), py::arg("memory"), py::arg("start_time") = 0)
      .def("observe", &MovingLeastSquares::observe)
      .def("fit", &MovingLeastSquares::fit)
      .def("predict", &MovingLeastSquares::predict, py::arg("t_next"));

  py::class_<IncrementalUpdate>(m, "IncrementalUpdate")
      .def(py::init<double>(), py::arg("gamma"))
      .def("observe", &IncrementalUpdate::observe)
      .def("predict", &IncrementalUpdate::predict);

  py::class_<QBounds>(m, "QBounds")
      .def(py::init<>())
      .def(py::init([](double q_min, double q_max) {
             QBounds b{q_min, q_max};
             b.validate();
             return b;
           }),
           py::arg("q_min"), py::arg("q_max"))
      .def_readonly("q_min", &QBounds::q_min)
      .def_readonly("q_max", &QBounds::q_max);

  m.def("q_constant", &q_constant, py::arg("q0"), py::arg("bounds") = QBounds{});
  m.def("q_risk_seeking", &q_risk_seeking, py::arg("r_hat"),
        py::arg("bounds") = QBounds{});
  m.def("q_risk_avoiding", &q_risk_avoiding, py::arg("r_hat"),
        py::arg("bounds") = QBounds{});
  m.def("q_square_wave", &q_square_wave, py::arg("period"), py::arg("t"),
        py::arg("bounds") = QBounds{});

  py::class_<RampRectParams>(m, "RampRectParams")
      .def_static("make", &RampRectParams::make, py::arg("h1"), py::arg("h2"),
                  py::arg("h3"), py::arg("h4"));
  m.def("q_ramp_rect", &q_ramp_rect, py::arg("params"), py::arg("t"),
        py::arg("bounds") = QBounds{});

  py::class_<GaConfig>(m, "GaConfig")
      .def(py::init<>())
      .def_readwrite("population", &GaConfig::population)
      .def_readwrite("genes", &GaConfig::genes)
      .def_readwrite("p_crossover", &GaConfig::p_crossover)
      .def_readwrite("p_mutation", &GaConfig::p_mutation)
      .def_readwrite("elitism", &GaConfig::elitism);

  py::enum_<StrategyKind>(m, "StrategyKind")
      .value("CONSTANT", StrategyKind::Constant)
      .value("MOVING_AVERAGE", StrategyKind::MovingAverage)
      .value("LEAST_SQUARES", StrategyKind::LeastSquares)
      .value("INCREMENTAL", StrategyKind::Incremental)
      .value("GENETIC", StrategyKind::Genetic)
      .value("SQUARE_WAVE", StrategyKind::SquareWave);

  py::enum_<ActionMode>(m, "ActionMode")
      .value("RISK_SEEKING", ActionMode::RiskSeeking)
      .value("RISK_AVOIDING", ActionMode::RiskAvoiding);

  py::class_<StrategySpec>(m, "StrategySpec")
      .def_static("constant", &StrategySpec::constant, py::arg("q0"))
      .def_static("moving_average", &StrategySpec::moving_average,
                  py::arg("window"), py::arg("mode"))
      .def_static("least_squares", &StrategySpec::least_squares,
                  py::arg("window"), py::arg("mode"))
      .def_static("incremental", &StrategySpec::incremental, py::arg("gamma"),
                  py::arg("mode"))
      .def_static("genetic", &StrategySpec::genetic, py::arg("config"))
      .def_static("square_wave", &StrategySpec::square_wave)
      .def("name", &StrategySpec::name)
      .def("label", &StrategySpec::label);

  py::class_<BudgetSample>(m, "BudgetSample")
      .def_readonly("t", &BudgetSample::t)
      .def_readonly("budget", &BudgetSample::budget)
      .def_readonly("log10_budget", &BudgetSample::log10_budget);

  py::class_<StrategyTrial>(m, "StrategyTrial")
      .def_readonly("samples", &StrategyTrial::samples);

  py::class_<TrialResult>(m, "TrialResult")
      .def_readonly("per_strategy", &TrialResult::per_strategy);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("strategies", &ExperimentConfig::strategies)
      .def_readwrite("returns", &ExperimentConfig::returns)
      .def_readwrite("t_max", &ExperimentConfig::t_max)
      .def_readwrite("n_trials", &ExperimentConfig::n_trials)
      .def_readwrite("master_seed", &ExperimentConfig::master_seed)
      .def_readwrite("record_period", &ExperimentConfig::record_period)
      .def_readwrite("bounds", &ExperimentConfig::bounds)
      .def_readwrite("n_threads", &ExperimentConfig::n_threads);

  py::class_<StrategyCurve>(m, "StrategyCurve")
      .def_readonly("times", &StrategyCurve::times)
      .def_readonly("mean_budget", &StrategyCurve::mean_budget)
      .def_readonly("mean_log10", &StrategyCurve::mean_log10)
      .def_readonly("std_log10", &StrategyCurve::std_log10)
      .def_property_readonly(
          "label", [](const StrategyCurve& c) { return c.spec.label(); });

  py::class_<ExperimentResult>(m, "ExperimentResult")
      .def_readonly("curves", &ExperimentResult::curves);

  m.def("step_budget", &step_budget, py::arg("x"), py::arg("q"), py::arg("r"));
  m.def(
      "run_trial",
      [](const std::vector<StrategySpec>& strategies,
         const ReturnParams& returns, long t_max, std::uint64_t trial_seed,
         const QBounds& bounds, long record_period) {
        return run_trial(strategies, returns, t_max, trial_seed, bounds,
                         record_period);
      },
      py::arg("strategies"), py::arg("returns"), py::arg("t_max"),
      py::arg("trial_seed"), py::arg("bounds") = QBounds{},
      py::arg("record_period") = 0);
  m.def("run_experiment", &run_experiment, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<ParamGrid>(m, "ParamGrid")
      .def(py::init([](const std::string& name, std::vector<double> values) {
             return ParamGrid{name, std::move(values)};
           }),
           py::arg("name"), py::arg("values"));

  py::class_<TuneEntry>(m, "TuneEntry")
      .def_readonly("assignment", &TuneEntry::assignment)
      .def_readonly("objective", &TuneEntry::objective)
      .def_readonly("std_dev", &TuneEntry::std_dev)
      .def_readonly("rank", &TuneEntry::rank);

  py::class_<TuneResult>(m, "TuneResult")
      .def_readonly("entries", &TuneResult::entries);

  m.def("grid_search", &grid_search, py::arg("base"), py::arg("grids"),
        py::arg("eval"), py::call_guard<py::gil_scoped_release>());
}
