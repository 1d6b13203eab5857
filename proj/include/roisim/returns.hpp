#pragma once

#include <vector>

#include "roisim/rng.hpp"

namespace roisim {

/// Parameters of the periodic noisy return stream.
///
/// The stream is a sine of period `period` perturbed by one of two noise
/// families: phase noise (sigma1) jitters the argument, amplitude noise
/// (sigma2) mixes the sine with uniform noise. Setting both nonzero is
/// accepted but is a non-canonical configuration (experiments vary one at a
/// time); mixed_noise() reports it so front ends can flag the output.
struct ReturnParams {
  int period = 100;
  double angular_frequency = 0.0;  // 2*pi / period
  double sigma1 = 0.0;             // phase noise level, in [0, 1]
  double sigma2 = 0.0;             // amplitude noise level, in [0, 1]

  static ReturnParams periodic(int period, double sigma1, double sigma2);

  bool mixed_noise() const { return sigma1 > 0.0 && sigma2 > 0.0; }
  void validate() const;
};

struct ReturnSeries {
  std::vector<double> values;  // each in [-1, 1]
  ReturnParams params;
};

/// One return draw at time step t. Consumes exactly one noise draw from the
/// stream (two when both noise levels are nonzero, which uses independent
/// draws for the phase and amplitude terms).
double next_return(const ReturnParams& params, long t, RngStream& rng);

/// Batch of t_max consecutive returns starting at t = 0.
ReturnSeries generate_series(const ReturnParams& params, long t_max,
                             RngStream& rng);

}  // namespace roisim
