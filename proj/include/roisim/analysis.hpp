#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace roisim {

inline constexpr int kDefaultHistogramBins = 50;

/// Equal-width histogram. Bins are left-closed/right-open; the last bin also
/// includes the upper edge.
struct Histogram {
  std::vector<double> bin_edges;       // size counts.size() + 1
  std::vector<std::int64_t> counts;
  std::int64_t total = 0;

  std::vector<double> frequencies() const;  // counts / total
};

/// Histogram of `values` over [lo, hi). A value outside the range signals a
/// corrupted series and raises.
Histogram histogram(std::span<const double> values, int n_bins, double lo,
                    double hi);

/// Arithmetic mean of |v| over the series. Rejects an empty series.
double mean_abs(std::span<const double> values);

/// Histogram over [-1, 1] of the lag-1 products v(t) * v(t+1).
Histogram consecutive_product_distribution(std::span<const double> values,
                                           int n_bins);

/// Mean of the lag-1 products v(t) * v(t+1).
double mean_consecutive_product(std::span<const double> values);

/// Mean of sign(v(t)) * sign(v(t+1)) with sign(0) = 0.
double sign_correlation(std::span<const double> values);

}  // namespace roisim
