#include <doctest.h>

#include <cmath>

#include "robintri/loeschian.hpp"
#include "robintri/rn_stats.hpp"

using namespace robintri;

namespace {
const TriangleGeometry kUnit = make_geometry(1.0);
} // namespace

TEST_SUITE_BEGIN("rn_stats");

TEST_CASE("all gaps below the mean value on the first 500") {
  auto series = rn_gaps(kUnit, 1.0, 500);
  REQUIRE(series.d.size() == 500);
  CHECK(series.dbar == doctest::Approx(8.0 * std::sqrt(3.0)).epsilon(1e-14));
  for (double d : series.d) {
    CHECK(d > 0.0);
    CHECK(d < series.dbar);
  }
  for (double mp : series.mean_prefix) {
    CHECK(mp >= 0.0);
    CHECK(mp <= series.dbar);
  }
}

TEST_CASE("first gap slope is 2 sigma / r at small sigma") {
  const double sigma = 1e-4;
  auto series = rn_gaps(kUnit, sigma, 1);
  CHECK(series.d[0] ==
        doctest::Approx(2.0 * sigma / kUnit.r).epsilon(2e-2));
}

TEST_CASE("running mean at N = 5000") {
  auto series = rn_gaps(kUnit, 1.0, 5000);
  double mean = series.mean_prefix.back();
  CHECK(mean >= 0.9 * series.dbar);
  CHECK(mean <= series.dbar);
}

TEST_CASE("normalization gives the gaps unit mean") {
  const std::size_t N = 20000;
  EnumerateOptions opts;
  auto table = enumerate_first(kUnit, 1.0, N + 1, opts);
  auto gaps = normalized_gaps(kUnit, table, N);
  double mean = 0.0;
  for (double x : gaps) mean += x;
  mean /= static_cast<double>(N);
  CHECK(mean == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("systematic doubles put mass at zero spacing") {
  auto cdf = spacing_cdf(kUnit, 0.0, 10000, {0.5});
  CHECK(cdf.samples[0].second >= 0.5);
  CHECK(cdf.normalization_c ==
        doctest::Approx(kUnit.area / (4.0 * M_PI)).epsilon(1e-14));
}

TEST_CASE("cdf is monotone in t with values in [0,1]") {
  std::vector<double> grid;
  for (double t = 0.05; t <= 2.0; t += 0.05) grid.push_back(t);
  auto cdf = spacing_cdf(kUnit, 1.0, 5000, grid);
  double prev = 0.0;
  for (const auto& [t, p] : cdf.samples) {
    CHECK(p >= prev);
    CHECK(p <= 1.0);
    prev = p;
  }
}

TEST_CASE("delta concentration grows with N at sigma = 1") {
  EnumerateOptions opts;
  auto table = enumerate_first(kUnit, 1.0, 100001, opts);
  auto gaps = normalized_gaps(kUnit, table, 100000);
  double p3 = spacing_cdf_value(gaps, 1000, 0.1);
  double p4 = spacing_cdf_value(gaps, 10000, 0.1);
  double p5 = spacing_cdf_value(gaps, 100000, 0.1);
  MESSAGE("P(0.1, N): ", p3, " ", p4, " ", p5);
  CHECK(p3 < p4);
  CHECK(p4 < p5);
}

TEST_CASE("spacing-shift identity") {
  const std::size_t N = 2000;
  auto series = rn_gaps(kUnit, 1.0, N + 1);
  EnumerateOptions opts;
  auto robin = enumerate_first(kUnit, 1.0, N + 1, opts);
  auto neumann = enumerate_first(kUnit, 0.0, N + 1, opts);
  auto xs = normalized_gaps(kUnit, robin, N);
  auto x0 = normalized_gaps(kUnit, neumann, N);
  const double c = spacing_normalization(kUnit);
  const double eps = 0.05 * series.dbar;
  std::size_t qualified = 0;
  for (std::size_t n = 0; n < N; ++n) {
    // identity x_sigma(n) - x_0(n) = c (d_{n+1} - d_n), up to roundoff
    double lhs = xs[n] - x0[n];
    double rhs = c * (series.d[n + 1] - series.d[n]);
    CHECK(std::fabs(lhs - rhs) <= 1e-9);
    bool in_band = series.d[n] > series.dbar - eps &&
                   series.d[n + 1] > series.dbar - eps;
    if (in_band) {
      ++qualified;
      CHECK(std::fabs(lhs) <= 2.0 * c * eps + 1e-12);
    }
  }
  CHECK(qualified > 0);
}

TEST_CASE("density-one convergence to the mean") {
  EnumerateOptions opts;
  const std::size_t N = 100000;
  auto series = rn_gaps(kUnit, 1.0, N);
  const double eps = 0.05 * series.dbar;
  auto fraction_above = [&](std::size_t upto) {
    std::size_t hits = 0;
    for (std::size_t n = 0; n < upto; ++n)
      if (series.d[n] > series.dbar - eps) ++hits;
    return static_cast<double>(hits) / static_cast<double>(upto);
  };
  double f3 = fraction_above(1000);
  double f4 = fraction_above(10000);
  double f5 = fraction_above(100000);
  MESSAGE("fraction near dbar: ", f3, " ", f4, " ", f5);
  CHECK(f3 <= f4);
  CHECK(f4 <= f5);
  CHECK(f5 > 0.8);
}

TEST_CASE("max gap scan against the sieve") {
  // At sigma = 0 the maximal eigenvalue gap is the prefactor times the
  // largest difference between consecutive representable integers.
  const double X = 100.0 * kUnit.eig_prefactor;
  auto result = max_gap_scan(kUnit, 0.0, X);
  auto sieve = build_sieve(100);
  auto [run, at] = max_gap(sieve);
  CHECK(result.gap ==
        doctest::Approx(kUnit.eig_prefactor * (run + 1)).epsilon(1e-12));
  CHECK(result.location.first ==
        doctest::Approx(kUnit.eig_prefactor * (at - 1)).epsilon(1e-12));

  // Squeeze: at sigma = 1 the max gap cannot fall by more than dbar.
  auto robin = max_gap_scan(kUnit, 1.0, X);
  CHECK(robin.gap >= result.gap - 8.0 * std::sqrt(3.0));
}

TEST_CASE("histogram bins") {
  std::vector<double> gaps{0.01, 0.02, 0.07, 0.11, 0.49};
  auto hist = spacing_histogram(gaps, gaps.size(), 0.05);
  REQUIRE(hist.size() == 10);
  CHECK(hist[0].second == doctest::Approx(0.4));
  CHECK(hist[1].second == doctest::Approx(0.2));
  CHECK(hist[2].second == doctest::Approx(0.2));
  CHECK(hist[9].second == doctest::Approx(0.2));
}

TEST_SUITE_END();
