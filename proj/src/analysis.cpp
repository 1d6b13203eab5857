#include "roisim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace roisim {

std::vector<double> Histogram::frequencies() const {
  std::vector<double> f(counts.size(), 0.0);
  if (total == 0) return f;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    f[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return f;
}

Histogram histogram(std::span<const double> values, int n_bins, double lo,
                    double hi) {
  if (n_bins < 1) {
    throw std::invalid_argument("histogram needs at least one bin");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("histogram range must satisfy lo < hi");
  }
  Histogram h;
  h.bin_edges.resize(static_cast<std::size_t>(n_bins) + 1);
  const double width = (hi - lo) / static_cast<double>(n_bins);
  for (int i = 0; i <= n_bins; ++i) {
    h.bin_edges[static_cast<std::size_t>(i)] = lo + width * i;
  }
  h.bin_edges.back() = hi;
  h.counts.assign(static_cast<std::size_t>(n_bins), 0);
  for (double v : values) {
    if (!(v >= lo && v <= hi)) {
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " outside histogram range");
    }
    auto idx = static_cast<long>((v - lo) / (hi - lo) * n_bins);
    idx = std::min<long>(idx, n_bins - 1);  // v == hi lands in the last bin
    ++h.counts[static_cast<std::size_t>(idx)];
  }
  h.total = static_cast<std::int64_t>(values.size());
  return h;
}

double mean_abs(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("mean_abs of an empty series");
  }
  double sum = 0.0;
  for (double v : values) sum += std::abs(v);
  return sum / static_cast<double>(values.size());
}

namespace {

void require_pairs(std::span<const double> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("series must have at least 2 elements");
  }
}

}  // namespace

Histogram consecutive_product_distribution(std::span<const double> values,
                                           int n_bins) {
  require_pairs(values);
  std::vector<double> products;
  products.reserve(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    products.push_back(values[i] * values[i + 1]);
  }
  return histogram(products, n_bins, -1.0, 1.0);
}

double mean_consecutive_product(std::span<const double> values) {
  require_pairs(values);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    sum += values[i] * values[i + 1];
  }
  return sum / static_cast<double>(values.size() - 1);
}

double sign_correlation(std::span<const double> values) {
  require_pairs(values);
  auto sgn = [](double v) -> int { return (v > 0.0) - (v < 0.0); };
  long sum = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    sum += sgn(values[i]) * sgn(values[i + 1]);
  }
  return static_cast<double>(sum) / static_cast<double>(values.size() - 1);
}

}  // namespace roisim
