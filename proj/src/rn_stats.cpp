#include "robintri/rn_stats.hpp"

#include <algorithm>
#include <cmath>

namespace robintri {

GapSeries rn_gaps(const TriangleGeometry& geom, double sigma,
                  std::size_t count_N, double tol, int threads) {
  if (count_N < 1) throw DomainError("rn_gaps: count must be >= 1");
  if (!(sigma > 0.0)) throw InvalidSigma("rn_gaps: sigma must be > 0");

  EnumerateOptions opts;
  opts.tol = tol;
  opts.threads = threads;
  SpectrumTable robin = enumerate_first(geom, sigma, count_N, opts);

  // The Neumann spectrum needs no solves; reuse the enumeration machinery at
  // sigma = 0 with the same cutoff recipe.
  SpectrumTable neumann = enumerate_first(geom, 0.0, count_N, opts);

  GapSeries series;
  series.sigma = sigma;
  series.dbar = mean_gap_bound(geom, sigma);
  series.d.reserve(count_N);
  series.mean_prefix.reserve(count_N);
  double running = 0.0;
  for (std::size_t i = 0; i < count_N; ++i) {
    double dn = robin.entries[i].value - neumann.entries[i].value;
    series.d.push_back(dn);
    series.lambda_robin.push_back(robin.entries[i].value);
    series.lambda_neumann.push_back(neumann.entries[i].value);
    running += dn;
    series.mean_prefix.push_back(running / static_cast<double>(i + 1));
  }
  return series;
}

double spacing_normalization(const TriangleGeometry& geom) {
  // Weyl's law gives #\{lambda <= X\} ~ area X / (4 pi), so the constant
  // below is the one that gives the normalized gaps unit mean.
  return geom.area / (4.0 * std::numbers::pi);
}

std::vector<double> normalized_gaps(const TriangleGeometry& geom,
                                    const SpectrumTable& table,
                                    std::size_t N) {
  if (table.entries.size() < N + 1)
    throw DomainError("normalized_gaps: table holds fewer than N+1 entries");
  if (table.entries[N].value > table.complete_below)
    throw DomainError("normalized_gaps: table is not complete up to entry N+1");
  const double c = spacing_normalization(geom);
  std::vector<double> x(N);
  for (std::size_t n = 0; n < N; ++n)
    x[n] = c * (table.entries[n + 1].value - table.entries[n].value);
  return x;
}

double spacing_cdf_value(const std::vector<double>& gaps, std::size_t N,
                         double t) {
  N = std::min(N, gaps.size());
  std::size_t hits = 0;
  for (std::size_t n = 0; n < N; ++n)
    if (gaps[n] < t) ++hits; // strict, matching the definition of P(t, N)
  return static_cast<double>(hits) / static_cast<double>(N);
}

SpacingCDF spacing_cdf(const TriangleGeometry& geom, double sigma,
                       std::size_t N, const std::vector<double>& t_grid,
                       double tol, int threads) {
  if (N < 2) throw DomainError("spacing_cdf: N must be >= 2");
  EnumerateOptions opts;
  opts.tol = tol;
  opts.threads = threads;
  SpectrumTable table = enumerate_first(geom, sigma, N + 1, opts);
  std::vector<double> x = normalized_gaps(geom, table, N);

  SpacingCDF cdf;
  cdf.sigma = sigma;
  cdf.normalization_c = spacing_normalization(geom);
  cdf.N = N;
  cdf.samples.reserve(t_grid.size());
  for (double t : t_grid)
    cdf.samples.emplace_back(t, spacing_cdf_value(x, N, t));
  return cdf;
}

MaxGapResult max_gap_scan(const TriangleGeometry& geom, double sigma,
                          double energy_x, double tol, int threads) {
  EnumerateOptions opts;
  opts.tol = tol;
  opts.threads = threads;
  const double cutoff = energy_x + mean_gap_bound(geom, sigma);
  SpectrumTable table = enumerate_spectrum(geom, sigma, cutoff, opts);
  std::size_t last = 0;
  while (last + 1 < table.entries.size() &&
         table.entries[last + 1].value <= energy_x)
    ++last;
  if (last < 10)
    throw DomainError("max_gap_scan: energy_x below the 10th eigenvalue");
  MaxGapResult best;
  for (std::size_t n = 0; n < last; ++n) {
    double gap = table.entries[n + 1].value - table.entries[n].value;
    if (gap > best.gap) {
      best.gap = gap;
      best.location = {table.entries[n].value, table.entries[n + 1].value};
    }
  }
  return best;
}

std::vector<std::pair<double, double>>
spacing_histogram(const std::vector<double>& gaps, std::size_t N,
                  double bin_width) {
  N = std::min(N, gaps.size());
  std::vector<std::pair<double, double>> hist;
  if (N == 0) return hist;
  double xmax = *std::max_element(gaps.begin(), gaps.begin() + N);
  std::size_t bins = static_cast<std::size_t>(xmax / bin_width) + 1;
  std::vector<std::size_t> counts(bins, 0);
  for (std::size_t n = 0; n < N; ++n)
    ++counts[static_cast<std::size_t>(gaps[n] / bin_width)];
  hist.reserve(bins);
  for (std::size_t b = 0; b < bins; ++b)
    hist.emplace_back(b * bin_width,
                      static_cast<double>(counts[b]) / static_cast<double>(N));
  return hist;
}

} // namespace robintri
