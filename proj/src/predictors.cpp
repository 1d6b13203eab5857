#include "roisim/predictors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace roisim {

RollingWindow::RollingWindow(int capacity) {
  if (capacity < 1) {
    throw std::invalid_argument("window capacity must be >= 1, got " +
                                std::to_string(capacity));
  }
  buf_.resize(static_cast<std::size_t>(capacity));
}

void RollingWindow::push(double v) {
  buf_[next_] = v;
  next_ = (next_ + 1) % buf_.size();
  if (size_ < buf_.size()) ++size_;
}

double RollingWindow::at(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("window index out of range");
  // When full, next_ is also the oldest slot; during warm-up slot 0 is.
  const std::size_t oldest = size_ == buf_.size() ? next_ : 0;
  return buf_[(oldest + i) % buf_.size()];
}

double RollingWindow::newest() const {
  if (size_ == 0) throw std::out_of_range("window is empty");
  return at(size_ - 1);
}

MovingAverage::MovingAverage(int memory) : window_(memory) {}

double MovingAverage::predict() const {
  if (window_.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < window_.size(); ++i) sum += window_.at(i);
  return sum / static_cast<double>(window_.size());
}

MovingLeastSquares::MovingLeastSquares(int memory, long start_time)
    : window_(memory), next_time_(start_time) {
  if (memory < 2) {
    throw std::invalid_argument("least-squares window must be >= 2, got " +
                                std::to_string(memory));
  }
}

void MovingLeastSquares::observe(double r) {
  window_.push(r);
  ++next_time_;
}

LineFit MovingLeastSquares::fit() const {
  const std::size_t n = window_.size();
  if (n < 2) {
    throw std::logic_error("least-squares fit needs at least 2 points");
  }
  // Local time coordinates x = 0 .. n-1 over the window.
  double sx = 0.0, sy = 0.0, sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i);
    const double y = window_.at(i);
    sx += x;
    sy += y;
    sxy += x * y;
    sxx += x * x;
  }
  const double nd = static_cast<double>(n);
  const double denom = nd * sxx - sx * sx;
  const double slope = (nd * sxy - sx * sy) / denom;
  const double local_intercept = (sy - slope * sx) / nd;
  const double window_start =
      static_cast<double>(next_time_) - static_cast<double>(n);
  return LineFit{slope, local_intercept - slope * window_start};
}

double MovingLeastSquares::predict(long t_next) const {
  const std::size_t n = window_.size();
  if (n == 0) return 0.0;
  if (n == 1) return window_.newest();
  // Evaluate in local coordinates to avoid cancellation at large t.
  double sx = 0.0, sy = 0.0, sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i);
    const double y = window_.at(i);
    sx += x;
    sy += y;
    sxy += x * y;
    sxx += x * x;
  }
  const double nd = static_cast<double>(n);
  const double denom = nd * sxx - sx * sx;
  const double slope = (nd * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / nd;
  const long window_start = next_time_ - static_cast<long>(n);
  const double x_next = static_cast<double>(t_next - window_start);
  return std::clamp(slope * x_next + intercept, -1.0, 1.0);
}

IncrementalUpdate::IncrementalUpdate(double gamma) : gamma_(gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("step size must be in [0,1], got " +
                                std::to_string(gamma));
  }
}

void IncrementalUpdate::observe(double r) {
  if (!(r >= -1.0 && r <= 1.0)) {
    throw std::invalid_argument("observed return outside [-1,1]: " +
                                std::to_string(r));
  }
  if (gamma_ == 0.0) return;
  // Algebraically equal to estimate += gamma * (r - estimate); this form
  // keeps |new - r| == (1 - gamma) * |old - r| bit-exact.
  estimate_ = r + (1.0 - gamma_) * (estimate_ - r);
}

}  // namespace roisim
