#include "roisim/returns.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace roisim {

ReturnParams ReturnParams::periodic(int period, double sigma1, double sigma2) {
  ReturnParams p;
  p.period = period;
  p.angular_frequency = 2.0 * std::numbers::pi / static_cast<double>(period);
  p.sigma1 = sigma1;
  p.sigma2 = sigma2;
  p.validate();
  return p;
}

void ReturnParams::validate() const {
  if (period < 1) {
    throw std::invalid_argument("return period must be >= 1, got " +
                                std::to_string(period));
  }
  if (!(sigma1 >= 0.0 && sigma1 <= 1.0)) {
    throw std::invalid_argument("sigma1 must be in [0,1], got " +
                                std::to_string(sigma1));
  }
  if (!(sigma2 >= 0.0 && sigma2 <= 1.0)) {
    throw std::invalid_argument("sigma2 must be in [0,1], got " +
                                std::to_string(sigma2));
  }
  const double two_pi = 2.0 * std::numbers::pi;
  if (std::abs(angular_frequency * period - two_pi) > 1e-12) {
    throw std::invalid_argument(
        "angular_frequency * period must equal 2*pi; construct via "
        "ReturnParams::periodic");
  }
}

double next_return(const ReturnParams& params, long t, RngStream& rng) {
  if (t < 0) {
    throw std::invalid_argument("time step must be >= 0, got " +
                                std::to_string(t));
  }
  params.validate();
  const double w = params.angular_frequency;
  const double s1 = params.sigma1;
  const double s2 = params.sigma2;
  const double pi = std::numbers::pi;

  if (s1 > 0.0 && s2 > 0.0) {
    // Non-canonical mixed configuration: independent draws per noise term.
    const double xi1 = rng.uniform(-1.0, 1.0);
    const double xi2 = rng.uniform(-1.0, 1.0);
    return (1.0 - s2) * std::sin(w * static_cast<double>(t) + s1 * pi * xi1) +
           s2 * xi2;
  }
  if (s2 > 0.0) {
    const double xi = rng.uniform(-1.0, 1.0);
    return (1.0 - s2) * std::sin(w * static_cast<double>(t)) + s2 * xi;
  }
  const double xi = rng.uniform(-1.0, 1.0);
  return std::sin(w * static_cast<double>(t) + s1 * pi * xi);
}

ReturnSeries generate_series(const ReturnParams& params, long t_max,
                             RngStream& rng) {
  if (t_max < 1) {
    throw std::invalid_argument("t_max must be >= 1, got " +
                                std::to_string(t_max));
  }
  ReturnSeries series;
  series.params = params;
  series.values.reserve(static_cast<std::size_t>(t_max));
  for (long t = 0; t < t_max; ++t) {
    series.values.push_back(next_return(params, t, rng));
  }
  return series;
}

}  // namespace roisim
