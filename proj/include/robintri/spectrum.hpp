#ifndef ROBINTRI_SPECTRUM_HPP
#define ROBINTRI_SPECTRUM_HPP

#include <cstddef>
#include <vector>

#include "robintri/secular.hpp"

namespace robintri {

class EigenvalueCache;

/// One solved eigenvalue branch. value = neumann_value + gap with the gap
/// carried separately at full precision (the two agree with
/// eig_prefactor*(mu^2+nu^2+mu*nu) to roundoff).
struct EigenvalueRecord {
  ModeIndex mode;
  double sigma = 0.0;
  double value = 0.0;
  double neumann_value = 0.0;
  double gap = 0.0; // value - neumann_value, cancellation-free
  int weight = 1;
};

struct SpectrumEntry {
  double value = 0.0;
  double gap = 0.0;
  ModeIndex mode;
  int copy = 0; // 0 = symmetric, 1 = antisymmetric (weight-2 modes only)
};

/// Ordered, weight-expanded eigenvalue multiset. Entries are sorted by
/// (value, m, n, copy); every eigenvalue <= complete_below is provably
/// present (Robin values exceed their Neumann values by less than 4 sigma/r).
struct SpectrumTable {
  double sigma = 0.0;
  double cutoff = 0.0;
  double complete_below = 0.0;
  std::vector<SpectrumEntry> entries;
};

struct Cluster {
  long long r_squared = 0;
  std::vector<ModeIndex> modes; // sorted by m ascending
};

struct SimplicityReport {
  double sigma = 0.0;
  long long r2_max = 0;
  std::size_t modes_checked = 0;
  double min_separation = 0.0; // smallest pairwise |difference| observed
  std::vector<std::pair<ModeIndex, ModeIndex>> violating_pairs;
  // Within every multi-mode cluster, does the branch with the larger F_R sit
  // strictly below? (The second-order term is -8 F_R / pi^2.) The printed
  // claim in the source material has the opposite sign; we report what the
  // numbers do.
  bool larger_fr_lies_lower = true;
  bool matches_printed_assertion = false; // flagged discrepancy
  // Smallest gap between the top of one cluster and the bottom of the next.
  double min_intercluster_gap = 0.0;
  bool intercluster_crossing = false;
};

EigenvalueRecord eigenvalue(const TriangleGeometry& geom, ModeIndex mode,
                            double sigma, double tol = 1e-12);

struct EnumerateOptions {
  double tol = 1e-12;
  int threads = 0; // 0 = hardware concurrency
  EigenvalueCache* cache = nullptr;
};

SpectrumTable enumerate_spectrum(const TriangleGeometry& geom, double sigma,
                                 double energy_cutoff, double tol = 1e-12);
SpectrumTable enumerate_spectrum(const TriangleGeometry& geom, double sigma,
                                 double energy_cutoff,
                                 const EnumerateOptions& opts);

/// Table guaranteed to contain at least `count` complete leading entries
/// (i.e. entry[count-1].value <= complete_below).
SpectrumTable enumerate_first(const TriangleGeometry& geom, double sigma,
                              std::size_t count,
                              const EnumerateOptions& opts = {});

std::vector<Cluster> clusters_up_to(long long r2_max);

SimplicityReport check_simplicity(const TriangleGeometry& geom, double sigma,
                                  long long r2_max, double tol = 1e-15);

/// Smallest energy X such that the weight-expanded Neumann count of values
/// <= X reaches `count` (exact integer enumeration).
double neumann_energy_for_count(const TriangleGeometry& geom,
                                std::size_t count);

} // namespace robintri

#endif // ROBINTRI_SPECTRUM_HPP
