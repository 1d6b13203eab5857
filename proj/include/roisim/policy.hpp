#pragma once

namespace roisim {

/// Allowed range for the invested fraction. Every policy output lands in
/// [q_min, q_max]; the floor forces a minimal investment each step.
struct QBounds {
  double q_min = 0.1;
  double q_max = 1.0;

  void validate() const;
};

/// Fixed fraction q0, every step. q0 must lie within the bounds.
double q_constant(double q0, const QBounds& bounds);

/// Threshold rule: q_max when the estimate is strictly positive, else q_min
/// ("everything on red").
double q_risk_seeking(double r_hat, const QBounds& bounds);

/// Proportional rule: invest the estimate itself, clamped to the bounds.
double q_risk_avoiding(double r_hat, const QBounds& bounds);

/// Breakpoints of the time-triggered ramp-rectangle profile: rise over
/// (0, h1), hold q_max over [h1, h2], fall over (h2, h3), hold q_min over
/// [h3, h4); the profile repeats with period h4. Symmetric ramps are
/// required: delta_h = h1 = h3 - h2.
struct RampRectParams {
  int h1 = 1;
  int h2 = 50;
  int h3 = 51;
  int h4 = 100;
  int delta_h = 1;

  static RampRectParams make(int h1, int h2, int h3, int h4);
  void validate() const;
};

/// Ramp-rectangle profile value at step t (t >= 0). The wrap point
/// t mod h4 == 0 sits on the rising ramp's start and evaluates to q_min.
double q_ramp_rect(const RampRectParams& params, long t, const QBounds& bounds);

/// Square-wave profile: q_max on the first half period [0, T/2), q_min on
/// the second half [T/2, T). Matches the ramp-rectangle profile with
/// breakpoints (1, T/2, T/2+1, T) everywhere except the two single-step ramp
/// locations t mod T in {0, T/2}, where the square wave switches one step
/// earlier.
double q_square_wave(int period, long t, const QBounds& bounds);

}  // namespace roisim
