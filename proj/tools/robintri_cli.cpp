// Command-line front end. Subcommands mirror the library modules; outputs are
// deterministic for a fixed configuration regardless of the thread count.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "robintri/asymptotics.hpp"
#include "robintri/cache.hpp"
#include "robintri/csv.hpp"
#include "robintri/eigenfunctions.hpp"
#include "robintri/loeschian.hpp"
#include "robintri/rn_stats.hpp"
#include "robintri/spectrum.hpp"
#include "robintri/svg.hpp"

using json = nlohmann::ordered_json;
using namespace robintri;

namespace {

struct CommonOpts {
  double side = 1.0;
  double sigma = 1.0;
  double sigma_frac = -1.0; // fraction of pi^2/(27 r) when >= 0
  double tol = 1e-12;
  int threads = 0;
  std::string out_path;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_sigma = true) {
  cmd->add_option("--side", o.side, "triangle side length h")
      ->check(CLI::PositiveNumber);
  if (with_sigma) {
    cmd->add_option("--sigma", o.sigma, "Robin parameter");
    cmd->add_option("--sigma-frac", o.sigma_frac,
                    "sigma as a fraction of pi^2/(27 r)");
  }
  cmd->add_option("--tol", o.tol, "solver tolerance");
  cmd->add_option("--threads", o.threads, "worker threads (0 = all)");
  cmd->add_option("--out", o.out_path, "output file (default stdout)");
  cmd->add_option("--format", o.format, "csv | json | svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
}

double effective_sigma(const CommonOpts& o, const TriangleGeometry& geom) {
  if (o.sigma_frac >= 0.0)
    return o.sigma_frac * simplicity_sigma_threshold(geom);
  return o.sigma;
}

void emit(const CommonOpts& o, const std::string& payload) {
  if (o.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(o.out_path);
  if (!out) throw Error("cannot open output file " + o.out_path);
  out << payload;
}

std::unique_ptr<EigenvalueCache> cache_from_env() {
  const char* dir = std::getenv("ROBIN_TRI_CACHE");
  if (!dir || !*dir) return nullptr;
  std::filesystem::create_directories(dir);
  return std::make_unique<EigenvalueCache>(std::string(dir) +
                                           "/robintri-cache.txt");
}

// ---------------------------------------------------------------- solve ----

int run_solve(const CommonOpts& o, int m, int n) {
  auto geom = make_geometry(o.side);
  double sigma = effective_sigma(o, geom);
  ModeIndex mode = make_mode(m, n);
  SecularSolution sol = solve_secular(geom, mode, sigma, o.tol);
  EigenvalueRecord rec = eigenvalue(geom, mode, sigma, o.tol);
  if (o.format == "json") {
    json j;
    j["m"] = mode.m;
    j["n"] = mode.n;
    j["sigma"] = sigma;
    j["L"] = sol.L;
    j["M"] = sol.M;
    j["N"] = sol.N;
    j["mu"] = sol.mu;
    j["nu"] = sol.nu;
    j["lambda"] = rec.value;
    j["lambda_neumann"] = rec.neumann_value;
    j["residual_max"] = sol.residual_max;
    j["iterations"] = sol.iterations;
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "L,M,N,mu,nu,lambda,lambda_neumann,residual_max,iterations\n"
       << g17(sol.L) << ',' << g17(sol.M) << ',' << g17(sol.N) << ','
       << g17(sol.mu) << ',' << g17(sol.nu) << ',' << g17(rec.value) << ','
       << g17(rec.neumann_value) << ',' << g17(sol.residual_max) << ','
       << sol.iterations << '\n';
    emit(o, os.str());
  }
  return 0;
}

// ------------------------------------------------------------- spectrum ----

int run_spectrum(const CommonOpts& o, double cutoff, std::size_t count) {
  auto geom = make_geometry(o.side);
  double sigma = effective_sigma(o, geom);
  auto cache = cache_from_env();
  EnumerateOptions opts;
  opts.tol = o.tol;
  opts.threads = o.threads;
  opts.cache = cache.get();
  // An explicit --cutoff wins over the (defaulted) --count.
  SpectrumTable table = cutoff > 0.0
                            ? enumerate_spectrum(geom, sigma, cutoff, opts)
                            : enumerate_first(geom, sigma, count, opts);
  if (o.format == "json") {
    json j;
    j["sigma"] = sigma;
    j["cutoff"] = table.cutoff;
    j["complete_below"] = table.complete_below;
    j["entries"] = json::array();
    for (const auto& e : table.entries)
      j["entries"].push_back({{"lambda", e.value},
                              {"m", e.mode.m},
                              {"n", e.mode.n},
                              {"copy", e.copy},
                              {"gap", e.gap}});
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "index,m,n,copy,r2,lambda_neumann,lambda,gap\n";
    std::size_t idx = 1;
    for (const auto& e : table.entries) {
      os << idx++ << ',' << e.mode.m << ',' << e.mode.n << ',' << e.copy << ','
         << e.mode.r_squared() << ',' << g17(e.value - e.gap) << ','
         << g17(e.value) << ',' << g17(e.gap) << '\n';
    }
    emit(o, os.str());
  }
  return 0;
}

// --------------------------------------------------------------- rngaps ----

int run_rngaps(const CommonOpts& o, std::size_t count) {
  auto geom = make_geometry(o.side);
  double sigma = effective_sigma(o, geom);
  GapSeries series = rn_gaps(geom, sigma, count, o.tol, o.threads);

  bool ok = true;
  for (double d : series.d)
    if (!(d > 0.0 && d < series.dbar)) ok = false;

  if (o.format == "svg") {
    SvgPlot plot(0.0, static_cast<double>(count), 0.0, series.dbar * 1.1);
    plot.set_title("Robin-Neumann gaps, sigma = " + g17(sigma));
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < series.d.size(); ++i)
      pts.emplace_back(static_cast<double>(i + 1), series.d[i]);
    plot.add_scatter(pts, "steelblue");
    plot.add_hline(series.dbar, "red");
    emit(o, plot.render());
  } else if (o.format == "json") {
    json j;
    j["sigma"] = sigma;
    j["dbar"] = series.dbar;
    j["d"] = series.d;
    j["mean_prefix_final"] = series.mean_prefix.back();
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "n,lambda_neumann,lambda_robin,d_n,dbar\n";
    for (std::size_t i = 0; i < series.d.size(); ++i)
      os << (i + 1) << ',' << g17(series.lambda_neumann[i]) << ','
         << g17(series.lambda_robin[i]) << ',' << g17(series.d[i]) << ','
         << g17(series.dbar) << '\n';
    emit(o, os.str());
  }
  if (!ok)
    std::cerr << "rngaps: at least one gap outside (0, dbar)\n";
  return ok ? 0 : 1;
}

// -------------------------------------------------------------- spacing ----

int run_spacing(const CommonOpts& o, std::size_t count, double tmax,
                double tstep, bool histogram) {
  auto geom = make_geometry(o.side);
  double sigma = effective_sigma(o, geom);
  std::vector<double> grid;
  for (double t = tstep; t <= tmax + 1e-12; t += tstep) grid.push_back(t);
  SpacingCDF cdf = spacing_cdf(geom, sigma, count, grid, o.tol, o.threads);

  std::ostringstream os;
  if (histogram) {
    EnumerateOptions opts;
    opts.tol = o.tol;
    opts.threads = o.threads;
    SpectrumTable table = enumerate_first(geom, sigma, count + 1, opts);
    auto gaps = normalized_gaps(geom, table, count);
    os << "t,density\n";
    for (const auto& [t, dens] : spacing_histogram(gaps, count))
      os << g17(t) << ',' << g17(dens) << '\n';
  } else {
    os << "t,cdf\n";
    for (const auto& [t, p] : cdf.samples) os << g17(t) << ',' << g17(p) << '\n';
  }
  emit(o, os.str());
  return 0;
}

// ------------------------------------------------------------- clusters ----

int run_clusters(const CommonOpts& o, long long r2max) {
  auto clusters = clusters_up_to(r2max);
  if (o.format == "json") {
    json j = json::array();
    for (const auto& c : clusters) {
      json modes = json::array();
      for (const auto& mode : c.modes)
        modes.push_back({{"m", mode.m}, {"n", mode.n}});
      j.push_back({{"r2", c.r_squared}, {"modes", modes}});
    }
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "r2,m,n,weight\n";
    for (const auto& c : clusters)
      for (const auto& mode : c.modes)
        os << c.r_squared << ',' << mode.m << ',' << mode.n << ','
           << mode.multiplicity_weight() << '\n';
    emit(o, os.str());
  }
  return 0;
}

// ----------------------------------------------------------- simplicity ----

int run_simplicity(const CommonOpts& o, long long r2max) {
  auto geom = make_geometry(o.side);
  double sigma = effective_sigma(o, geom);
  SimplicityReport rep = check_simplicity(geom, sigma, r2max, 0.0);
  std::ostringstream os;
  os << "sigma," << g17(rep.sigma) << "\nr2_max," << rep.r2_max
     << "\nmodes_checked," << rep.modes_checked << "\nmin_separation,"
     << g17(rep.min_separation) << "\nmin_intercluster_gap,"
     << g17(rep.min_intercluster_gap) << "\ncollisions,"
     << rep.violating_pairs.size() << "\nintercluster_crossing,"
     << (rep.intercluster_crossing ? 1 : 0) << "\nlarger_fr_lies_lower,"
     << (rep.larger_fr_lies_lower ? 1 : 0) << "\n";
  emit(o, os.str());
  bool ok = rep.violating_pairs.empty() && !rep.intercluster_crossing;
  if (!ok) std::cerr << "simplicity: collision or cluster crossing detected\n";
  return ok ? 0 : 1;
}

// ---------------------------------------------------------- asymptotics ----

int run_asymptotics(const CommonOpts& o, int mmax, double sigma_max, int steps,
                    bool derivatives, bool curves) {
  auto geom = make_geometry(o.side);
  if (curves) {
    // Eigenvalue curves of the classic crossing example (two branches share
    // the Neumann value at R^2 = 91) plus a reference branch.
    const std::array<ModeIndex, 3> modes = {ModeIndex{1, 9}, ModeIndex{5, 6},
                                            ModeIndex{4, 7}};
    const std::array<const char*, 3> colors = {"steelblue", "darkorange",
                                               "seagreen"};
    double lo = 1e18, hi = -1e18;
    std::array<std::vector<std::pair<double, double>>, 3> pts;
    for (std::size_t k = 0; k < modes.size(); ++k) {
      for (int i = 0; i <= steps; ++i) {
        double s = sigma_max * i / steps;
        double v = eigenvalue(geom, modes[k], s, o.tol).value;
        pts[k].emplace_back(s, v);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    SvgPlot plot(0.0, sigma_max, lo - 1.0, hi + 1.0);
    plot.set_title("eigenvalue curves (1,9) (5,6) (4,7)");
    for (std::size_t k = 0; k < modes.size(); ++k)
      plot.add_line(pts[k], colors[k]);
    emit(o, plot.render());
    return 0;
  }
  if (derivatives) {
    std::ostringstream os;
    os << "m,n,order,step,lambda_predicted,lambda_fd,lambda_rel_err\n";
    for (int m = 1; m <= mmax; ++m)
      for (int n = m; n <= mmax; ++n)
        for (int order = 1; order <= 3; ++order) {
          auto chk = secular_derivative_check(geom, ModeIndex{m, n}, order);
          os << m << ',' << n << ',' << order << ',' << g17(chk.step) << ','
             << g17(chk.lambda_predicted) << ',' << g17(chk.lambda_fd) << ','
             << g17(chk.lambda_rel_err) << '\n';
        }
    emit(o, os.str());
    return 0;
  }
  std::ostringstream os;
  os << "m,n,sigma,lambda_solver,lambda_3term,abs_err,bound\n";
  for (int m = 1; m <= mmax; ++m)
    for (int n = m; n <= mmax; ++n)
      for (int i = 1; i <= steps; ++i) {
        double s = sigma_max * i / steps;
        double lam = eigenvalue(geom, ModeIndex{m, n}, s, 1e-14).value;
        double approx = expansion_3term(geom, ModeIndex{m, n}, s);
        double bound = expansion_remainder_constant * s * s * s /
                       std::pow(static_cast<double>(m), 4.0);
        os << m << ',' << n << ',' << g17(s) << ',' << g17(lam) << ','
           << g17(approx) << ',' << g17(std::fabs(lam - approx)) << ','
           << g17(bound) << '\n';
      }
  emit(o, os.str());
  return 0;
}

// ------------------------------------------------------------ loeschian ----

int run_loeschian(const CommonOpts& o, std::uint64_t limit, int crt_k,
                  std::int64_t check_k, bool want_max_gap, bool want_count) {
  if (crt_k > 0) {
    GapCertificate cert = crt_gap_certificate(crt_k);
    json j;
    j["K"] = cert.K;
    j["n0"] = cert.n0;
    j["primes"] = cert.primes;
    json window = json::array();
    for (int i = 1; i <= cert.K; ++i) window.push_back(cert.n0 + i);
    j["window"] = window;
    emit(o, j.dump(2) + "\n");
    return 0;
  }
  if (check_k >= 0) {
    std::pair<std::uint64_t, std::uint64_t> witness;
    bool rep = is_loeschian(static_cast<std::uint64_t>(check_k), &witness);
    json j;
    j["k"] = check_k;
    j["representable"] = rep;
    if (rep) j["witness"] = {witness.first, witness.second};
    emit(o, j.dump(2) + "\n");
    return 0;
  }
  LoeschianSieve sieve = build_sieve(limit);
  std::ostringstream os;
  if (want_max_gap) {
    auto [run, at] = max_gap(sieve);
    os << "limit,max_run,run_start,max_consecutive_difference\n"
       << limit << ',' << run << ',' << at << ',' << (run + 1) << '\n';
  } else if (want_count) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 0; k <= limit; ++k)
      if (sieve.is_representable[k]) ++count;
    os << "limit,count\n" << limit << ',' << count << '\n';
  } else {
    os << "k\n";
    for (std::uint64_t k = 0; k <= limit; ++k)
      if (sieve.is_representable[k]) os << k << '\n';
  }
  emit(o, os.str());
  return 0;
}

// -------------------------------------------------------- eigenfunction ----

int run_eigenfunction(const CommonOpts& o, int m, int n, std::string parity,
                      int grid, bool check) {
  auto geom = make_geometry(o.side);
  NeumannMode nmode = make_neumann_mode(
      m, n, parity == "a" ? Parity::antisymmetric : Parity::symmetric);
  if (check) {
    ModeReport rep = check_mode(geom, nmode, std::max(grid, 16), 48);
    std::ostringstream os;
    os << "helmholtz_residual,boundary_residual,l2_norm,l2_norm_sq\n"
       << g17(rep.helmholtz_residual) << ',' << g17(rep.boundary_residual)
       << ',' << g17(rep.l2_norm) << ',' << g17(rep.l2_norm * rep.l2_norm)
       << '\n';
    emit(o, os.str());
    return 0;
  }
  std::ostringstream os;
  os << "x,y,value\n";
  const double cy = std::numbers::sqrt3 * geom.h / 2.0;
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; j <= grid; ++j) {
      double x = geom.h * i / grid;
      double y = cy * j / grid;
      if (!inside_triangle(geom, x, y)) continue;
      os << g17(x) << ',' << g17(y) << ','
         << g17(eval_neumann(geom, nmode, x, y)) << '\n';
    }
  emit(o, os.str());
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robin spectrum of the equilateral triangle"};
  app.require_subcommand(1);

  CommonOpts o;
  int m = 0, n = 0;
  double cutoff = 0.0;
  std::size_t count = 500;
  long long r2max = 100;
  double tmax = 2.0, tstep = 0.05;
  bool histogram = false;
  int mmax = 10, steps = 10;
  double sigma_max = 0.05;
  bool derivatives = false, curves = false;
  std::uint64_t limit = 1000000;
  int crt_k = 0;
  std::int64_t check_k = -1;
  bool want_max_gap = false, want_count = false;
  std::string parity = "s";
  int grid = 64;
  bool fn_check = false;

  auto* solve = app.add_subcommand("solve", "solve the secular system");
  solve->add_option("--m", m)->required();
  solve->add_option("--n", n)->required();
  add_common(solve, o);

  auto* spectrum = app.add_subcommand("spectrum", "ordered eigenvalue table");
  spectrum->add_option("--cutoff", cutoff, "energy cutoff");
  spectrum->add_option("--count", count, "guaranteed complete entry count");
  add_common(spectrum, o);

  auto* rngaps = app.add_subcommand("rngaps", "Robin-Neumann gap series");
  rngaps->add_option("--count", count);
  add_common(rngaps, o);

  auto* spacing = app.add_subcommand("spacing", "nearest-neighbour spacings");
  spacing->add_option("--count", count);
  spacing->add_option("--tmax", tmax);
  spacing->add_option("--tstep", tstep);
  spacing->add_flag("--histogram", histogram);
  add_common(spacing, o);

  auto* clusters = app.add_subcommand("clusters", "cluster decomposition");
  clusters->add_option("--r2max", r2max);
  add_common(clusters, o, false);

  auto* simplicity =
      app.add_subcommand("simplicity", "pairwise-separation report");
  simplicity->add_option("--r2max", r2max);
  add_common(simplicity, o);

  auto* asym = app.add_subcommand("asymptotics", "expansion diagnostics");
  asym->add_option("--mmax", mmax);
  asym->add_option("--sigma-max", sigma_max);
  asym->add_option("--steps", steps);
  asym->add_flag("--derivatives", derivatives);
  asym->add_flag("--curves", curves);
  add_common(asym, o);

  auto* loeschian = app.add_subcommand("loeschian", "norm-form number theory");
  loeschian->add_option("--limit", limit);
  loeschian->add_option("--crt", crt_k, "emit a CRT gap certificate");
  loeschian->add_option("--check", check_k, "test one integer");
  loeschian->add_flag("--max-gap", want_max_gap);
  loeschian->add_flag("--count", want_count);
  add_common(loeschian, o, false);

  auto* eigenfunction =
      app.add_subcommand("eigenfunction", "Neumann eigenfunction samples");
  eigenfunction->add_option("--m", m)->required();
  eigenfunction->add_option("--n", n)->required();
  eigenfunction->add_option("--parity", parity)
      ->check(CLI::IsMember({"s", "a"}));
  eigenfunction->add_option("--grid", grid);
  eigenfunction->add_flag("--check", fn_check);
  add_common(eigenfunction, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return run_solve(o, m, n);
    if (spectrum->parsed()) return run_spectrum(o, cutoff, count);
    if (rngaps->parsed()) return run_rngaps(o, count);
    if (spacing->parsed())
      return run_spacing(o, count, tmax, tstep, histogram);
    if (clusters->parsed()) return run_clusters(o, r2max);
    if (simplicity->parsed()) return run_simplicity(o, r2max);
    if (asym->parsed())
      return run_asymptotics(o, mmax, sigma_max, steps, derivatives, curves);
    if (loeschian->parsed())
      return run_loeschian(o, limit, crt_k, check_k, want_max_gap, want_count);
    if (eigenfunction->parsed())
      return run_eigenfunction(o, m, n, parity, grid, fn_check);
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << " (residual " << e.residual << ")\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
