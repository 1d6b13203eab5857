#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "roisim/analysis.hpp"
#include "roisim/returns.hpp"
#include "test_util.hpp"

using namespace roisim;

TEST_CASE("two-bin histogram splits the endpoints") {
  const std::vector<double> values{-1.0, 1.0};
  const auto h = histogram(values, 2, -1.0, 1.0);
  CHECK(h.counts == std::vector<std::int64_t>{1, 1});
  CHECK(h.total == 2);
}

TEST_CASE("uniform samples fill bins within binomial bounds") {
  RngStream rng(11);
  const auto series =
      generate_series(ReturnParams::periodic(100, 0.0, 1.0), 100000, rng);
  const auto h = histogram(series.values, 20, -1.0, 1.0);
  const double expected = 100000.0 / 20.0;
  const double sigma = std::sqrt(100000.0 * (1.0 / 20.0) * (19.0 / 20.0));
  for (auto count : h.counts) {
    CHECK(std::abs(static_cast<double>(count) - expected) < 5.0 * sigma);
  }
}

TEST_CASE("phase-noise histograms are level-independent") {
  RngStream a = RngStream::substream(13, 0);
  RngStream b = RngStream::substream(13, 1);
  const auto sa =
      generate_series(ReturnParams::periodic(100, 0.5, 0.0), 100000, a);
  const auto sb =
      generate_series(ReturnParams::periodic(100, 0.9, 0.0), 100000, b);
  const auto fa = histogram(sa.values, 50, -1.0, 1.0).frequencies();
  const auto fb = histogram(sb.values, 50, -1.0, 1.0).frequencies();
  double sup = 0.0;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    sup = std::max(sup, std::abs(fa[i] - fb[i]));
  }
  CHECK(sup < 0.02);
}

TEST_CASE("histogram mass is conserved") {
  RngStream rng(14);
  for (int n : {1, 10, 1000}) {
    const auto series =
        generate_series(ReturnParams::periodic(50, 0.0, 0.7), n, rng);
    const auto h = histogram(series.values, 13, -1.0, 1.0);
    std::int64_t sum = 0;
    for (auto c : h.counts) sum += c;
    CHECK(sum == h.total);
    CHECK(h.total == n);
  }
}

TEST_CASE("mean_abs basics") {
  CHECK(mean_abs(std::vector<double>{0.5, -0.5}) == 0.5);
}

TEST_CASE("mean_abs of the noise-free sine approaches 2/pi") {
  RngStream rng(15);
  const auto series =
      generate_series(ReturnParams::periodic(100, 0.0, 0.0), 1000000, rng);
  CHECK(mean_abs(series.values) ==
        doctest::Approx(2.0 / std::numbers::pi).epsilon(0.002 / 0.6366));
}

TEST_CASE("amplitude mean-|r| dips at intermediate noise") {
  double best_sigma = 0.0;
  double best_value = 1e9;
  for (int i = 1; i <= 9; ++i) {
    const double sigma = 0.1 * i;
    RngStream rng = RngStream::substream(16, static_cast<std::uint64_t>(i));
    const auto series =
        generate_series(ReturnParams::periodic(100, 0.0, sigma), 100000, rng);
    const double m = mean_abs(series.values);
    if (m < best_value) {
      best_value = m;
      best_sigma = sigma;
    }
  }
  CHECK(best_sigma >= 0.4);
  CHECK(best_sigma <= 0.7);
}

TEST_CASE("mean_abs is invariant under sign flip") {
  RngStream rng(17);
  auto series =
      generate_series(ReturnParams::periodic(100, 0.0, 0.6), 5000, rng);
  const double before = mean_abs(series.values);
  for (auto& v : series.values) v = -v;
  CHECK(mean_abs(series.values) == before);
}

TEST_CASE("consecutive products of a short series") {
  const std::vector<double> values{1.0, 1.0, -1.0};
  const auto h = consecutive_product_distribution(values, 2);
  // Products are [1, -1]: one in each half.
  CHECK(h.counts == std::vector<std::int64_t>{1, 1});
  CHECK(h.total == 2);
}

TEST_CASE("uncorrelated noise has zero mean product") {
  RngStream rng(18);
  const auto series =
      generate_series(ReturnParams::periodic(100, 0.0, 1.0), 100000, rng);
  std::vector<double> products;
  for (std::size_t i = 0; i + 1 < series.values.size(); ++i) {
    products.push_back(series.values[i] * series.values[i + 1]);
  }
  CHECK(std::abs(testutil::mean(products)) <
        3.0 * testutil::standard_error(products));
}

TEST_CASE("lag-1 product means match the analytic values at sigma = 0.5") {
  // Independent per-step draws give closed forms for the mean product:
  //   amplitude: (1 - s)^2 * cos(w) / 2
  //   phase:     (sin(s pi)/(s pi))^2 * cos(w) / 2
  // At s = 0.5 the phase mean is the larger one; the often-quoted "more
  // correlation for amplitude noise" only holds after normalizing by the
  // marginal second moment (amplitude noise has the smaller variance).
  const double w = 2.0 * std::numbers::pi / 100.0;
  const double expected_amp = 0.25 * std::cos(w) / 2.0;
  const double sinc = std::sin(0.5 * std::numbers::pi) /
                      (0.5 * std::numbers::pi);
  const double expected_phase = sinc * sinc * std::cos(w) / 2.0;

  RngStream ra = RngStream::substream(19, 0);
  RngStream rp = RngStream::substream(19, 1);
  const auto amp =
      generate_series(ReturnParams::periodic(100, 0.0, 0.5), 100000, ra);
  const auto phase =
      generate_series(ReturnParams::periodic(100, 0.5, 0.0), 100000, rp);

  auto products = [](const std::vector<double>& v) {
    std::vector<double> p;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) p.push_back(v[i] * v[i + 1]);
    return p;
  };
  const auto pa = products(amp.values);
  const auto pp = products(phase.values);
  CHECK(std::abs(testutil::mean(pa) - expected_amp) <
        4.0 * testutil::standard_error(pa));
  CHECK(std::abs(testutil::mean(pp) - expected_phase) <
        4.0 * testutil::standard_error(pp));

  // Normalized lag-1 correlation is higher for amplitude noise.
  auto second_moment = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s / static_cast<double>(v.size());
  };
  const double corr_amp = testutil::mean(pa) / second_moment(amp.values);
  const double corr_phase = testutil::mean(pp) / second_moment(phase.values);
  CHECK(corr_amp > corr_phase);
}

TEST_CASE("sign correlation of the noise-free sine over one period") {
  RngStream rng(20);
  const auto series =
      generate_series(ReturnParams::periodic(100, 0.0, 0.0), 100, rng);
  // Independent enumeration with integer sign logic.
  auto sgn = [](double v) -> int { return (v > 0.0) - (v < 0.0); };
  long sum = 0;
  for (int t = 0; t + 1 < 100; ++t) {
    sum += sgn(std::sin(2.0 * std::numbers::pi * t / 100.0)) *
           sgn(std::sin(2.0 * std::numbers::pi * (t + 1) / 100.0));
  }
  const double expected = static_cast<double>(sum) / 99.0;
  CHECK(sign_correlation(series.values) == doctest::Approx(expected));
  CHECK(sign_correlation(series.values) >= 0.9);
}

TEST_CASE("sign correlation of alternating signs is -1") {
  CHECK(sign_correlation(std::vector<double>{1.0, -1.0, 1.0, -1.0}) == -1.0);
}

TEST_CASE("sign correlation of pure noise is near zero") {
  RngStream rng(21);
  const auto series =
      generate_series(ReturnParams::periodic(100, 0.0, 1.0), 100000, rng);
  // Each sign product is +/-1; SE of the mean is about 1/sqrt(n).
  CHECK(std::abs(sign_correlation(series.values)) < 3.0 / std::sqrt(99999.0));
}

TEST_CASE("sign correlation is invariant under negation") {
  RngStream rng(22);
  auto series =
      generate_series(ReturnParams::periodic(100, 0.0, 0.4), 3000, rng);
  const double before = sign_correlation(series.values);
  for (auto& v : series.values) v = -v;
  CHECK(sign_correlation(series.values) == before);
}

TEST_CASE("analysis rejects bad inputs") {
  const std::vector<double> empty;
  const std::vector<double> one{0.5};
  const std::vector<double> bad{0.0, 2.0};
  CHECK_THROWS_AS(mean_abs(empty), std::invalid_argument);
  CHECK_THROWS_AS(histogram(bad, 10, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(histogram(one, 0, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(histogram(one, 10, 1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(consecutive_product_distribution(one, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(sign_correlation(one), std::invalid_argument);
  CHECK_THROWS_AS(mean_consecutive_product(one), std::invalid_argument);
}
