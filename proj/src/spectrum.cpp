#include "robintri/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <thread>

#include "robintri/cache.hpp"

namespace robintri {

namespace {

// All desymmetrized modes with m^2 + mn + n^2 <= t, (m, n) lexicographic.
std::vector<ModeIndex> modes_up_to(long long t) {
  std::vector<ModeIndex> modes;
  if (t < 0) return modes;
  for (long long m = 0; 3 * m * m <= t; ++m) {
    for (long long n = m; m * m + m * n + n * n <= t; ++n)
      modes.push_back(ModeIndex{static_cast<int>(m), static_cast<int>(n)});
  }
  return modes;
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t nthreads = threads > 0 ? static_cast<std::size_t>(threads)
                                     : (hw > 0 ? hw : 1);
  nthreads = std::min<std::size_t>(nthreads, count ? count : 1);
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  std::size_t chunk = (count + nthreads - 1) / nthreads;
  for (std::size_t w = 0; w < nthreads; ++w) {
    std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

EigenvalueRecord record_from_solution(const TriangleGeometry& geom,
                                      ModeIndex mode, double sigma,
                                      const SecularSolution& sol) {
  EigenvalueRecord rec;
  rec.mode = mode;
  rec.sigma = sigma;
  rec.neumann_value = geom.eig_prefactor * static_cast<double>(mode.r_squared());
  rec.gap = robin_gap_from_solution(geom, mode, sol);
  rec.value = rec.neumann_value + rec.gap;
  rec.weight = mode.multiplicity_weight();
  return rec;
}

EigenvalueRecord solve_record(const TriangleGeometry& geom, ModeIndex mode,
                              double sigma, const EnumerateOptions& opts) {
  if (opts.cache) {
    if (auto hit = opts.cache->lookup(geom.h, sigma, mode.m, mode.n, opts.tol)) {
      SecularSolution sol;
      sol.L = hit->L;
      sol.M = hit->M;
      sol.N = hit->N;
      sol.mu = (2.0 * sol.M - sol.N - sol.L) / std::numbers::pi + mode.m;
      sol.nu = (2.0 * sol.N - sol.L - sol.M) / std::numbers::pi + mode.n;
      sol.lambda_aux = -(sol.mu + sol.nu);
      return record_from_solution(geom, mode, sigma, sol);
    }
  }
  SolveOptions sopts;
  sopts.tol = opts.tol;
  SecularSolution sol = solve_secular(geom, mode, sigma, sopts);
  EigenvalueRecord rec = record_from_solution(geom, mode, sigma, sol);
  if (opts.cache)
    opts.cache->insert(geom.h, sigma, mode.m, mode.n, opts.tol,
                       EigenvalueCache::Entry{sol.L, sol.M, sol.N, rec.value});
  return rec;
}

} // namespace

EigenvalueRecord eigenvalue(const TriangleGeometry& geom, ModeIndex mode,
                            double sigma, double tol) {
  SecularSolution sol = solve_secular(geom, mode, sigma, tol);
  return record_from_solution(geom, mode, sigma, sol);
}

SpectrumTable enumerate_spectrum(const TriangleGeometry& geom, double sigma,
                                 double energy_cutoff, double tol) {
  EnumerateOptions opts;
  opts.tol = tol;
  return enumerate_spectrum(geom, sigma, energy_cutoff, opts);
}

SpectrumTable enumerate_spectrum(const TriangleGeometry& geom, double sigma,
                                 double energy_cutoff,
                                 const EnumerateOptions& opts) {
  const long long t =
      static_cast<long long>(std::floor(energy_cutoff / geom.eig_prefactor));
  std::vector<ModeIndex> modes = modes_up_to(t);
  if (modes.empty())
    throw CutoffTooSmall("enumerate_spectrum: no Neumann value below cutoff");

  std::vector<EigenvalueRecord> records(modes.size());
  parallel_for(modes.size(), opts.threads, [&](std::size_t i) {
    records[i] = solve_record(geom, modes[i], sigma, opts);
  });

  SpectrumTable table;
  table.sigma = sigma;
  table.cutoff = energy_cutoff;
  table.complete_below = energy_cutoff - mean_gap_bound(geom, sigma);
  table.entries.reserve(2 * records.size());
  for (const auto& rec : records) {
    table.entries.push_back(SpectrumEntry{rec.value, rec.gap, rec.mode, 0});
    if (rec.weight == 2)
      table.entries.push_back(SpectrumEntry{rec.value, rec.gap, rec.mode, 1});
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              if (a.value != b.value) return a.value < b.value;
              if (a.mode.m != b.mode.m) return a.mode.m < b.mode.m;
              if (a.mode.n != b.mode.n) return a.mode.n < b.mode.n;
              return a.copy < b.copy;
            });
  return table;
}

double neumann_energy_for_count(const TriangleGeometry& geom,
                                std::size_t count) {
  if (count == 0) return 0.0;
  // Weyl: the weight-expanded count below eig_prefactor * t is about 0.6 t.
  long long t = std::max<long long>(16, static_cast<long long>(count / 0.55));
  while (true) {
    std::vector<long long> values;
    for (const ModeIndex& mode : modes_up_to(t)) {
      values.push_back(mode.r_squared());
      if (mode.m < mode.n) values.push_back(mode.r_squared());
    }
    if (values.size() >= count) {
      std::nth_element(values.begin(), values.begin() + (count - 1),
                       values.end());
      return geom.eig_prefactor * static_cast<double>(values[count - 1]);
    }
    t += t / 2 + 16;
  }
}

SpectrumTable enumerate_first(const TriangleGeometry& geom, double sigma,
                              std::size_t count, const EnumerateOptions& opts) {
  const double top = neumann_energy_for_count(geom, count);
  // Margin of two gap bounds keeps entry #count below complete_below.
  const double cutoff =
      top + 2.0 * mean_gap_bound(geom, sigma) + geom.eig_prefactor;
  SpectrumTable table = enumerate_spectrum(geom, sigma, cutoff, opts);
  if (table.entries.size() < count ||
      table.entries[count - 1].value > table.complete_below)
    throw Error("enumerate_first: completeness margin violated");
  return table;
}

std::vector<Cluster> clusters_up_to(long long r2_max) {
  if (r2_max < 1) throw DomainError("clusters_up_to: r2_max must be >= 1");
  std::vector<Cluster> clusters;
  std::map<long long, std::vector<ModeIndex>> by_r2;
  for (const ModeIndex& mode : modes_up_to(r2_max))
    by_r2[mode.r_squared()].push_back(mode);
  clusters.reserve(by_r2.size());
  for (auto& [r2, modes] : by_r2) {
    std::sort(modes.begin(), modes.end(),
              [](const ModeIndex& a, const ModeIndex& b) { return a.m < b.m; });
    clusters.push_back(Cluster{r2, std::move(modes)});
  }
  return clusters;
}

SimplicityReport check_simplicity(const TriangleGeometry& geom, double sigma,
                                  long long r2_max, double tol) {
  if (!(sigma > 0.0)) throw InvalidSigma("check_simplicity: sigma must be > 0");
  SimplicityReport report;
  report.sigma = sigma;
  report.r2_max = r2_max;

  std::vector<Cluster> clusters = clusters_up_to(r2_max);

  // Robin gaps per mode, solved hard so that within-cluster differences far
  // below the eigenvalue magnitude remain meaningful.
  EnumerateOptions eopts;
  eopts.tol = 1e-14;
  struct ClusterGaps {
    long long r2;
    std::vector<double> gaps; // aligned with clusters[i].modes
  };
  std::vector<ClusterGaps> solved(clusters.size());
  parallel_for(clusters.size(), eopts.threads, [&](std::size_t i) {
    solved[i].r2 = clusters[i].r_squared;
    solved[i].gaps.reserve(clusters[i].modes.size());
    for (const ModeIndex& mode : clusters[i].modes) {
      SolveOptions sopts;
      sopts.tol = eopts.tol;
      SecularSolution sol = solve_secular(geom, mode, sigma, sopts);
      solved[i].gaps.push_back(robin_gap_from_solution(geom, mode, sol));
    }
  });
  for (const auto& c : clusters) report.modes_checked += c.modes.size();

  double min_sep = std::numeric_limits<double>::infinity();

  // Pairwise separations within a cluster: the Neumann parts coincide, so
  // only the gaps differ.
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const auto& modes = clusters[i].modes;
    const auto& gaps = solved[i].gaps;
    for (std::size_t a = 0; a < modes.size(); ++a)
      for (std::size_t b = a + 1; b < modes.size(); ++b) {
        double sep = std::fabs(gaps[a] - gaps[b]);
        min_sep = std::min(min_sep, sep);
        if (sep <= tol)
          report.violating_pairs.emplace_back(modes[a], modes[b]);
        // Ordering versus F_R: modes sorted by m, F_R decreasing in m, so the
        // later (smaller F_R) branch should carry the larger gap. m = 0 has
        // no F_R but its slope 10/(3r) keeps it lowest.
        if (gaps[a] >= gaps[b]) report.larger_fr_lies_lower = false;
      }
  }

  // Adjacent clusters: separation between the top of one and the bottom of
  // the next.
  double min_between = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
    double top = geom.eig_prefactor * static_cast<double>(solved[i].r2) +
                 *std::max_element(solved[i].gaps.begin(), solved[i].gaps.end());
    double bottom =
        geom.eig_prefactor * static_cast<double>(solved[i + 1].r2) +
        *std::min_element(solved[i + 1].gaps.begin(), solved[i + 1].gaps.end());
    double sep = bottom - top;
    min_between = std::min(min_between, sep);
    if (sep <= 0.0) report.intercluster_crossing = true;
    min_sep = std::min(min_sep, std::fabs(sep));
  }

  report.min_separation = min_sep;
  report.min_intercluster_gap = min_between;
  report.matches_printed_assertion = !report.larger_fr_lies_lower;
  return report;
}

} // namespace robintri
