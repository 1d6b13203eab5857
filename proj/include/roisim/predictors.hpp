#pragma once

#include <cstddef>
#include <vector>

namespace roisim {

/// Fixed-capacity window over the most recent observations; push drops the
/// oldest once full. at(0) is the oldest retained value.
class RollingWindow {
 public:
  explicit RollingWindow(int capacity);

  void push(double v);
  std::size_t size() const { return size_; }
  int capacity() const { return static_cast<int>(buf_.size()); }
  bool empty() const { return size_ == 0; }
  double at(std::size_t i) const;  // i = 0 -> oldest
  double newest() const;

 private:
  std::vector<double> buf_;
  std::size_t next_ = 0;  // slot the next push writes to
  std::size_t size_ = 0;
};

/// Rolling-mean estimate of the next return: the average of the last
/// `memory` observed values. While warming up it averages whatever has been
/// observed; with no observations it predicts 0 (neutral).
class MovingAverage {
 public:
  explicit MovingAverage(int memory);

  void observe(double r) { window_.push(r); }
  double predict() const;

  int memory() const { return window_.capacity(); }
  std::size_t count() const { return window_.size(); }

 private:
  RollingWindow window_;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;  // in absolute time coordinates
};

/// Linear-trend estimate of the next return: ordinary least squares over the
/// last `memory` (time, value) pairs, extrapolated to the requested step.
///
/// Observations are implicitly at consecutive time steps; the fit runs in
/// window-local coordinates (window start = 0) so the normal equations stay
/// well conditioned at large absolute times, and intercepts are mapped back.
class MovingLeastSquares {
 public:
  explicit MovingLeastSquares(int memory, long start_time = 0);

  void observe(double r);

  /// Least-squares line over the current window. Needs >= 2 observations.
  LineFit fit() const;

  /// Trend-line value at step t_next, clamped to [-1, 1]. Warm-up fallback:
  /// the last observation with a single point, 0 with none.
  double predict(long t_next) const;

  int memory() const { return window_.capacity(); }
  std::size_t count() const { return window_.size(); }
  long next_time() const { return next_time_; }

 private:
  RollingWindow window_;
  long next_time_;  // absolute time of the next observation
};

/// Exponential-recency estimate of the next return:
/// new = old + gamma * (observed - old), starting from 0.
class IncrementalUpdate {
 public:
  explicit IncrementalUpdate(double gamma);

  void observe(double r);
  double predict() const { return estimate_; }
  double gamma() const { return gamma_; }

 private:
  double gamma_;
  double estimate_ = 0.0;
};

}  // namespace roisim
