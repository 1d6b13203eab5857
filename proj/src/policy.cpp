#include "roisim/policy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace roisim {

void QBounds::validate() const {
  if (!(0.0 <= q_min && q_min < q_max && q_max <= 1.0)) {
    throw std::invalid_argument("bounds must satisfy 0 <= q_min < q_max <= 1");
  }
}

double q_constant(double q0, const QBounds& bounds) {
  bounds.validate();
  if (!(q0 >= bounds.q_min && q0 <= bounds.q_max)) {
    throw std::invalid_argument("q0 outside [q_min, q_max]: " +
                                std::to_string(q0));
  }
  return q0;
}

namespace {

void require_finite(double r_hat) {
  if (!std::isfinite(r_hat)) {
    throw std::invalid_argument("return estimate is not finite");
  }
}

}  // namespace

double q_risk_seeking(double r_hat, const QBounds& bounds) {
  require_finite(r_hat);
  return r_hat > 0.0 ? bounds.q_max : bounds.q_min;
}

double q_risk_avoiding(double r_hat, const QBounds& bounds) {
  require_finite(r_hat);
  if (r_hat <= bounds.q_min) return bounds.q_min;
  if (r_hat >= bounds.q_max) return bounds.q_max;
  return r_hat;
}

RampRectParams RampRectParams::make(int h1, int h2, int h3, int h4) {
  RampRectParams p;
  p.h1 = h1;
  p.h2 = h2;
  p.h3 = h3;
  p.h4 = h4;
  p.delta_h = h1;
  p.validate();
  return p;
}

void RampRectParams::validate() const {
  if (!(0 < h1 && h1 <= h2 && h2 < h3 && h3 <= h4)) {
    throw std::invalid_argument(
        "ramp-rectangle breakpoints must satisfy 0 < h1 <= h2 < h3 <= h4");
  }
  if (delta_h != h1 || delta_h != h3 - h2) {
    throw std::invalid_argument(
        "ramp-rectangle ramps must be symmetric: delta_h = h1 = h3 - h2");
  }
}

double q_ramp_rect(const RampRectParams& params, long t,
                   const QBounds& bounds) {
  params.validate();
  bounds.validate();
  if (t < 0) throw std::invalid_argument("time step must be >= 0");
  const long that = t % params.h4;
  const double span = bounds.q_max - bounds.q_min;
  if (that < params.h1) {  // rising ramp; value at 0 is exactly q_min
    return bounds.q_min + static_cast<double>(that) * span / params.h1;
  }
  if (that <= params.h2) return bounds.q_max;
  if (that < params.h3) {  // falling ramp
    return bounds.q_max -
           static_cast<double>(that - params.h2) * span /
               (params.h3 - params.h2);
  }
  return bounds.q_min;
}

double q_square_wave(int period, long t, const QBounds& bounds) {
  bounds.validate();
  if (period <= 0 || period % 2 != 0) {
    throw std::invalid_argument("square wave needs a positive even period");
  }
  if (t < 0) throw std::invalid_argument("time step must be >= 0");
  return t % period < period / 2 ? bounds.q_max : bounds.q_min;
}

}  // namespace roisim
