#ifndef ROBINTRI_RN_STATS_HPP
#define ROBINTRI_RN_STATS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "robintri/spectrum.hpp"

namespace robintri {

/// Robin-Neumann gaps d_n = lambda_n^sigma - lambda_n^0 paired by rank over
/// the independently ordered spectra, plus running means.
struct GapSeries {
  double sigma = 0.0;
  double dbar = 0.0;                // 4 sigma / r
  std::vector<double> d;            // d[0] = d_1
  std::vector<double> lambda_robin; // per rank, same indexing
  std::vector<double> lambda_neumann;
  std::vector<double> mean_prefix; // mean_prefix[k] = (1/(k+1)) sum d[0..k]
};

/// Empirical CDF of the normalized nearest-neighbour gaps
/// x(n) = c (lambda_{n+1} - lambda_n), sampled on t_grid.
struct SpacingCDF {
  double sigma = 0.0;
  double normalization_c = 0.0; // see rn_gaps.cpp for the choice of c
  std::size_t N = 0;
  std::vector<std::pair<double, double>> samples; // (t, P(t))
};

GapSeries rn_gaps(const TriangleGeometry& geom, double sigma,
                  std::size_t count_N, double tol = 1e-12, int threads = 0);

/// Normalization that gives the x(n) unit mean under the Weyl law.
double spacing_normalization(const TriangleGeometry& geom);

/// Normalized nearest-neighbour gaps x(1..N) from an ordered table holding at
/// least N+1 complete entries.
std::vector<double> normalized_gaps(const TriangleGeometry& geom,
                                    const SpectrumTable& table, std::size_t N);

/// Fraction of the first N normalized gaps strictly below t.
double spacing_cdf_value(const std::vector<double>& gaps, std::size_t N,
                         double t);

SpacingCDF spacing_cdf(const TriangleGeometry& geom, double sigma,
                       std::size_t N, const std::vector<double>& t_grid,
                       double tol = 1e-12, int threads = 0);

struct MaxGapResult {
  double gap = 0.0;
  std::pair<double, double> location; // the adjacent eigenvalues
};

/// Maximal consecutive gap among eigenvalues <= energy_x.
MaxGapResult max_gap_scan(const TriangleGeometry& geom, double sigma,
                          double energy_x, double tol = 1e-12,
                          int threads = 0);

/// Histogram of normalized gaps with fixed bin width (0.05 by default).
std::vector<std::pair<double, double>>
spacing_histogram(const std::vector<double>& gaps, std::size_t N,
                  double bin_width = 0.05);

} // namespace robintri

#endif // ROBINTRI_RN_STATS_HPP
