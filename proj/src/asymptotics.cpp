#include "robintri/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "robintri/spectrum.hpp"

namespace robintri {

namespace {

constexpr double kPi = std::numbers::pi;

struct CurveSample {
  std::array<double, 3> mj; // M, N, L
  double gap;               // Lambda(sigma) - Lambda(0)
};

CurveSample sample_curves(const TriangleGeometry& geom, ModeIndex mode,
                          double sigma) {
  SolveOptions opts;
  opts.tol = 1e-14;
  SecularSolution sol = solve_secular(geom, mode, sigma, opts);
  return CurveSample{{sol.M, sol.N, sol.L},
                     robin_gap_from_solution(geom, mode, sol)};
}

double rel_err(double fd, double predicted) {
  double scale = std::fabs(predicted);
  if (scale == 0.0) return std::fabs(fd);
  return std::fabs(fd - predicted) / scale;
}

// One-sided stencils on the nodes {0, h, 2h, ...}; sigma < 0 is outside the
// solution branch so everything differences from the right.
template <typename F>
double fd_estimate(F&& f, int order, double h) {
  switch (order) {
    case 1:
      return (f(2.0 * h) - f(0.0)) / (2.0 * h);
    case 2:
      return (2.0 * f(0.0) - 5.0 * f(h) + 4.0 * f(2.0 * h) - f(3.0 * h)) /
             (h * h);
    case 3:
      return (-2.5 * f(0.0) + 9.0 * f(h) - 12.0 * f(2.0 * h) +
              7.0 * f(3.0 * h) - 1.5 * f(4.0 * h)) /
             (h * h * h);
    default:
      throw DomainError("fd_estimate: order must be 1, 2 or 3");
  }
}

// Step-halving consistency: the two estimates must roughly agree or the
// step has hit the noise floor.
template <typename F>
double fd_checked(F&& f, int order, double h, double scale) {
  double a = fd_estimate(f, order, h);
  double b = fd_estimate(f, order, 0.5 * h);
  double tolerance = 0.2 * std::max({std::fabs(a), std::fabs(b), scale});
  if (std::fabs(a - b) > tolerance)
    throw StepTooSmall("secular_derivative_check: step-halving inconsistency");
  return a;
}

} // namespace

double f_r(ModeIndex mode) {
  if (mode.m < 1)
    throw DomainError("f_r: undefined for m = 0");
  const double m = mode.m, n = mode.n, s = m + n;
  const double direct = 1.0 / (m * m) + 1.0 / (n * n) + 1.0 / (s * s);
  const double r2 = static_cast<double>(mode.r_squared());
  const double quotient = r2 * r2 / (m * m * n * n * s * s);
  if (rel_err(quotient, direct) > 1e-12)
    throw Error("f_r: the two algebraic forms disagree");
  return direct;
}

ExpansionCoefficients predicted_derivatives_at_zero(const TriangleGeometry& geom,
                                                    ModeIndex mode) {
  ExpansionCoefficients c;
  c.mode = mode;
  c.lambda0 = geom.eig_prefactor * static_cast<double>(mode.r_squared());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (mode.m >= 1) {
    c.f_r = f_r(mode);
    c.c1 = 4.0 / geom.r;
    c.c2 = -8.0 * c.f_r / (kPi * kPi);
    // Differentiating mu_j tan M_j = 3 r sigma / pi three times gives
    // m_j M_j''' = -2 m_j (M_j')^3 - 3(mu_j'' M_j' + mu_j' M_j''), hence
    // Lambda'''(0) = -24 r F_R / pi^2 to leading order; the finite-difference
    // checks confirm the negative sign.
    c.c3_leading = -24.0 * geom.r * c.f_r / (kPi * kPi);
    c.c2_available = true;
    c.slope_kind = ExpansionCoefficients::SlopeKind::exact;
  } else if (mode.n >= 1) {
    c.f_r = nan;
    c.c1 = 10.0 / (3.0 * geom.r);
    c.c2 = nan;
    c.c3_leading = nan;
    c.slope_kind = ExpansionCoefficients::SlopeKind::m0_branch;
  } else {
    c.f_r = nan;
    c.c1 = 2.0 / geom.r;
    c.c2 = nan;
    c.c3_leading = nan;
    c.slope_kind = ExpansionCoefficients::SlopeKind::origin_leading;
  }
  return c;
}

double expansion_3term(const TriangleGeometry& geom, ModeIndex mode,
                       double sigma) {
  if (mode.m < 1)
    throw DomainError("expansion_3term: defined for m >= 1 only");
  if (!(sigma >= 0.0))
    throw InvalidSigma("expansion_3term: sigma must be >= 0");
  const double lambda0 =
      geom.eig_prefactor * static_cast<double>(mode.r_squared());
  const double fr = f_r(mode);
  // The sigma^3 coefficient is Lambda'''(0)/6 = -4 r F_R / pi^2; the third
  // derivative at the origin is negative (see the derivative checks), so the
  // bracket is (1 + r sigma).
  return lambda0 + (4.0 / geom.r) * sigma -
         (4.0 * fr / (kPi * kPi)) * sigma * sigma * (1.0 + geom.r * sigma);
}

DerivativeCheck secular_derivative_check(const TriangleGeometry& geom,
                                         ModeIndex mode, int order) {
  if (mode.m < 1)
    throw DomainError("secular_derivative_check: requires m >= 1");
  DerivativeCheck check;
  check.mode = mode;
  check.order = order;
  switch (order) {
    case 1: check.step = 1e-6; break;
    case 2: check.step = 1e-4; break;
    case 3: check.step = 1e-3; break;
    default:
      throw DomainError("secular_derivative_check: order must be 1, 2 or 3");
  }

  const double r = geom.r;
  const double mj[3] = {static_cast<double>(mode.m),
                        static_cast<double>(mode.n),
                        static_cast<double>(-(mode.m + mode.n))};
  const double fr = f_r(mode);
  for (int j = 0; j < 3; ++j) {
    const double mi = mj[(j + 1) % 3], mk = mj[(j + 2) % 3];
    switch (order) {
      case 1:
        check.mj_predicted[j] = 3.0 * r / (kPi * mj[j]);
        break;
      case 2:
        check.mj_predicted[j] = -18.0 * r * r / (kPi * kPi * kPi) *
                                (mj[j] * mj[j] + 2.0 * mi * mk) /
                                (mj[j] * mj[j] * mj[j] * mi * mk);
        break;
      case 3:
        // leading term -2 (M_j'(0))^3; the remainder carries the
        // mu'' M' + mu' M'' cross terms and fades only for larger m
        check.mj_predicted[j] =
            -2.0 * std::pow(3.0 * r / (kPi * mj[j]), 3.0);
        break;
    }
  }
  switch (order) {
    case 1: check.lambda_predicted = 4.0 / r; break;
    case 2: check.lambda_predicted = -8.0 * fr / (kPi * kPi); break;
    case 3: check.lambda_predicted = -24.0 * r * fr / (kPi * kPi); break;
  }

  for (int j = 0; j < 3; ++j) {
    auto curve = [&](double s) { return sample_curves(geom, mode, s).mj[j]; };
    check.mj_fd[j] =
        fd_checked(curve, order, check.step, std::fabs(check.mj_predicted[j]));
    check.mj_rel_err[j] = rel_err(check.mj_fd[j], check.mj_predicted[j]);
  }
  auto gap = [&](double s) { return sample_curves(geom, mode, s).gap; };
  check.lambda_fd =
      fd_checked(gap, order, check.step, std::fabs(check.lambda_predicted));
  check.lambda_rel_err = rel_err(check.lambda_fd, check.lambda_predicted);
  return check;
}

double m0_slope_fd(const TriangleGeometry& geom, int n) {
  if (n < 1) throw DomainError("m0_slope_fd: requires n >= 1");
  const double h = 1e-6;
  auto gap = [&](double s) {
    return s == 0.0 ? 0.0 : sample_curves(geom, ModeIndex{0, n}, s).gap;
  };
  return gap(h) / h;
}

ProfileF profile_f(double x) {
  constexpr double upper = 0.57735026918962584; // 1/sqrt(3)
  if (!(x > 0.0) || x > upper + 1e-15)
    throw DomainError("profile_f: x outside (0, 1/sqrt(3)]");
  const double x2 = x * x;
  const double one_m = 1.0 - x2;
  ProfileF out;
  out.f = 1.0 / (x2 * one_m * one_m);
  out.fp = -2.0 * (1.0 - 3.0 * x2) / (x2 * x * one_m * one_m * one_m);
  const double q = x2 - 1.0;
  out.fpp = 6.0 * (7.0 * x2 * x2 - 4.0 * x2 + 1.0) / (x2 * x2 * q * q * q * q);
  return out;
}

std::pair<double, double> min_f_second_derivative() {
  // f'' decreases from +infinity, dips once, and climbs back to 121.5 at the
  // right endpoint, so golden-section search applies.
  double lo = 0.2, hi = 0.57735026918962584;
  const double gr = 0.61803398874989485;
  double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
  double fa = profile_f(a).fpp, fb = profile_f(b).fpp;
  for (int i = 0; i < 200; ++i) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - gr * (hi - lo);
      fa = profile_f(a).fpp;
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + gr * (hi - lo);
      fb = profile_f(b).fpp;
    }
  }
  double t = 0.5 * (lo + hi);
  return {t, profile_f(t).fpp};
}

FrSeparationReport check_fr_separation(long long r2_max) {
  if (r2_max < 49)
    throw DomainError("check_fr_separation: r2_max must be >= 49");
  FrSeparationReport report;
  report.r2_max = r2_max;
  report.min_scaled_difference = std::numeric_limits<double>::infinity();
  for (const Cluster& cluster : clusters_up_to(r2_max)) {
    std::vector<ModeIndex> branches;
    for (const ModeIndex& mode : cluster.modes)
      if (mode.m >= 1) branches.push_back(mode);
    for (std::size_t a = 0; a < branches.size(); ++a)
      for (std::size_t b = a + 1; b < branches.size(); ++b) {
        // modes are sorted by m ascending and within a cluster all m differ
        double diff = f_r(branches[a]) - f_r(branches[b]);
        double m4 = std::pow(static_cast<double>(branches[a].m), 4.0);
        ++report.pairs_checked;
        if (diff <= 0.0) {
          report.strictly_ordered = false;
          report.violations.emplace_back(branches[a], branches[b]);
        }
        report.min_scaled_difference =
            std::min(report.min_scaled_difference, diff * m4);
      }
  }
  if (report.pairs_checked == 0) report.min_scaled_difference = 0.0;
  return report;
}

} // namespace robintri
