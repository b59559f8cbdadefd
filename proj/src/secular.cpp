#include "robintri/secular.hpp"

#include <algorithm>
#include <cmath>

namespace robintri {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
// Keep iterates strictly away from the tan poles.
constexpr double kBoxMargin = 1e-12;

struct Triple {
  double L, M, N;
};

double clamp_L(double L) { return std::clamp(L, -kHalfPi + kBoxMargin, 0.0); }
double clamp_MN(double x) { return std::clamp(x, 0.0, kHalfPi - kBoxMargin); }

std::array<double, 3> residuals(double r, int m, int n, double sigma,
                                const Triple& t) {
  const double rhs = 3.0 * r * sigma;
  return {
      (2.0 * t.L - t.M - t.N - (m + n) * kPi) * std::tan(t.L) - rhs,
      (2.0 * t.M - t.N - t.L + m * kPi) * std::tan(t.M) - rhs,
      (2.0 * t.N - t.L - t.M + n * kPi) * std::tan(t.N) - rhs,
  };
}

double residual_max(double r, int m, int n, double sigma, const Triple& t) {
  auto f = residuals(r, m, n, sigma, t);
  return std::max({std::fabs(f[0]), std::fabs(f[1]), std::fabs(f[2])});
}

Eigen::Matrix3d jacobian(int m, int n, const Triple& t) {
  const double tanL = std::tan(t.L), tanM = std::tan(t.M), tanN = std::tan(t.N);
  const double cL = std::cos(t.L), cM = std::cos(t.M), cN = std::cos(t.N);
  Eigen::Matrix3d J;
  J(0, 0) = (2.0 * t.L - t.M - t.N - (m + n) * kPi) / (cL * cL) + 2.0 * tanL;
  J(0, 1) = -tanL;
  J(0, 2) = -tanL;
  J(1, 0) = -tanM;
  J(1, 1) = (2.0 * t.M - t.N - t.L + m * kPi) / (cM * cM) + 2.0 * tanM;
  J(1, 2) = -tanM;
  J(2, 0) = -tanN;
  J(2, 1) = -tanN;
  J(2, 2) = (2.0 * t.N - t.L - t.M + n * kPi) / (cN * cN) + 2.0 * tanN;
  return J;
}

// Root in L of the first equation for fixed (M, N). The lhs decreases in L
// from +inf at -pi/2 to -3 r sigma at 0, so plain bisection applies.
double bisect_L(double r, int m, int n, double sigma, double M, double N) {
  const double rhs = 3.0 * r * sigma;
  auto f = [&](double L) {
    return (2.0 * L - M - N - (m + n) * kPi) * std::tan(L) - rhs;
  };
  double lo = -kHalfPi + kBoxMargin, hi = 0.0;
  if (f(hi) >= 0.0) return 0.0; // sigma == 0
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Root in M of the second equation for fixed (L, N); the lhs starts at
// -3 r sigma and grows to +inf towards pi/2, crossing zero exactly once.
// The third equation has the same shape in N by symmetry.
double bisect_M(double r, int mcoef, double sigma, double a, double b) {
  // Equation: (2M - a - b + mcoef*pi) tan M = 3 r sigma, with (a, b) the
  // other two angles.
  const double rhs = 3.0 * r * sigma;
  auto f = [&](double M) {
    return (2.0 * M - a - b + mcoef * kPi) * std::tan(M) - rhs;
  };
  double lo = 0.0, hi = kHalfPi - kBoxMargin;
  if (f(lo) >= 0.0) return 0.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Cyclic coordinate-wise bisection. Each sweep solves each equation for its
// own variable with the others held fixed; the per-equation monotonicity
// makes every inner solve unconditional.
Triple bisection_sweeps(double r, int m, int n, double sigma, Triple t,
                        double tol_abs, int max_sweeps, int* sweeps_used) {
  for (int s = 0; s < max_sweeps; ++s) {
    Triple prev = t;
    t.L = bisect_L(r, m, n, sigma, t.M, t.N);
    t.M = bisect_M(r, m, sigma, t.N, t.L);
    t.N = bisect_M(r, n, sigma, t.L, t.M);
    double move = std::max({std::fabs(t.L - prev.L), std::fabs(t.M - prev.M),
                            std::fabs(t.N - prev.N)});
    if (sweeps_used) *sweeps_used = s + 1;
    if (move < 1e-15 && residual_max(r, m, n, sigma, t) <= tol_abs) break;
  }
  return t;
}

Triple initial_guess(double r, int m, int n, double sigma) {
  // The leading-order asymptotics of the solution branch double as seeds:
  // arctan(3 r sigma / (pi m_j)) for m_j != 0, sqrt(3 r sigma / 2) for the
  // m = 0 equation.
  const double rhs = 3.0 * r * sigma;
  Triple t;
  t.L = -std::atan(rhs / (kPi * (m + n)));
  t.N = std::atan(rhs / (kPi * n));
  t.M = m >= 1 ? std::atan(rhs / (kPi * m)) : std::sqrt(1.5 * r * sigma);
  t.L = clamp_L(t.L);
  t.M = clamp_MN(t.M);
  t.N = clamp_MN(t.N);
  return t;
}

SecularSolution finish(double r, int m, int n, double sigma, const Triple& t,
                       int iterations) {
  SecularSolution s;
  s.L = t.L;
  s.M = t.M;
  s.N = t.N;
  s.mu = (2.0 * t.M - t.N - t.L) / kPi + m;
  s.nu = (2.0 * t.N - t.L - t.M) / kPi + n;
  s.lambda_aux = -(s.mu + s.nu);
  s.residual_max = residual_max(r, m, n, sigma, t);
  s.iterations = iterations;
  return s;
}

// Newton iteration with backtracking line search and box projection; falls
// back to bisection sweeps when the damped steps stall.
SecularSolution solve_general(double r, int m, int n, double sigma,
                              const SolveOptions& opts) {
  const double tol_abs = opts.tol * (1.0 + 3.0 * r * sigma);
  Triple t = initial_guess(r, m, n, sigma);
  double res = residual_max(r, m, n, sigma, t);
  Triple best = t;
  double best_res = res;
  int bad_steps = 0;
  int iter = 0;

  for (; iter < opts.max_iterations && res > tol_abs; ++iter) {
    Eigen::Vector3d f(residuals(r, m, n, sigma, t).data());
    Eigen::Vector3d step = jacobian(m, n, t).partialPivLu().solve(-f);
    double alpha = 1.0;
    Triple next = t;
    double next_res = res;
    bool improved = false;
    for (int ls = 0; ls < 50; ++ls) {
      next.L = clamp_L(t.L + alpha * step[0]);
      next.M = clamp_MN(t.M + alpha * step[1]);
      next.N = clamp_MN(t.N + alpha * step[2]);
      next_res = residual_max(r, m, n, sigma, next);
      if (next_res < res) {
        improved = true;
        break;
      }
      alpha *= 0.5;
    }
    t = next;
    res = next_res;
    if (res < best_res) {
      best = t;
      best_res = res;
    }
    bad_steps = improved ? 0 : bad_steps + 1;
    if (bad_steps >= 3) {
      int sweeps = 0;
      t = bisection_sweeps(r, m, n, sigma, t, tol_abs, 400, &sweeps);
      res = residual_max(r, m, n, sigma, t);
      iter += sweeps;
      if (res < best_res) {
        best = t;
        best_res = res;
      }
      break;
    }
  }

  if (best_res > tol_abs)
    throw NonConvergence("solve_secular: iteration budget exhausted", best.L,
                         best.M, best.N, best_res, iter);

  if (opts.polish) {
    // Quadratic convergence means one or two more steps land on the
    // evaluation floor of the residuals.
    for (int p = 0; p < 2; ++p) {
      Eigen::Vector3d f(residuals(r, m, n, sigma, best).data());
      Eigen::Vector3d step = jacobian(m, n, best).partialPivLu().solve(-f);
      Triple next{clamp_L(best.L + step[0]), clamp_MN(best.M + step[1]),
                  clamp_MN(best.N + step[2])};
      double next_res = residual_max(r, m, n, sigma, next);
      if (next_res < best_res) {
        best = next;
        best_res = next_res;
      } else {
        break;
      }
    }
  }
  return finish(r, m, n, sigma, best, iter);
}

// m = n = 0: the symmetry M = N is forced and the system reduces to
//   2(L-M) tan L = 3 r sigma,  (M-L) tan M = 3 r sigma.
SecularSolution solve_origin_mode(double r, double sigma,
                                  const SolveOptions& opts) {
  const double rhs = 3.0 * r * sigma;
  const double tol_abs = opts.tol * (1.0 + rhs);
  double M = clamp_MN(std::sqrt(2.0 * r * sigma));
  double L = clamp_L(-0.5 * M);

  auto res2 = [&](double Lv, double Mv) {
    return Eigen::Vector2d(2.0 * (Lv - Mv) * std::tan(Lv) - rhs,
                           (Mv - Lv) * std::tan(Mv) - rhs);
  };
  auto rmax = [&](double Lv, double Mv) {
    auto f = res2(Lv, Mv);
    return std::max(std::fabs(f[0]), std::fabs(f[1]));
  };

  double res = rmax(L, M);
  int iter = 0;
  for (; iter < opts.max_iterations && res > tol_abs; ++iter) {
    const double tanL = std::tan(L), tanM = std::tan(M);
    const double cL = std::cos(L), cM = std::cos(M);
    Eigen::Matrix2d J;
    J(0, 0) = 2.0 * tanL + 2.0 * (L - M) / (cL * cL);
    J(0, 1) = -2.0 * tanL;
    J(1, 0) = -tanM;
    J(1, 1) = tanM + (M - L) / (cM * cM);
    Eigen::Vector2d step = J.partialPivLu().solve(-res2(L, M));
    double alpha = 1.0;
    for (int ls = 0; ls < 60; ++ls) {
      double Ln = clamp_L(L + alpha * step[0]);
      double Mn = clamp_MN(M + alpha * step[1]);
      double rn = rmax(Ln, Mn);
      if (rn < res || ls == 59) {
        L = Ln;
        M = Mn;
        res = rn;
        break;
      }
      alpha *= 0.5;
    }
  }
  if (res > tol_abs)
    throw NonConvergence("solve_secular: (0,0) mode did not converge", L, M, M,
                         res, iter);
  if (opts.polish) {
    for (int p = 0; p < 2; ++p) {
      const double tanL = std::tan(L), tanM = std::tan(M);
      const double cL = std::cos(L), cM = std::cos(M);
      Eigen::Matrix2d J;
      J(0, 0) = 2.0 * tanL + 2.0 * (L - M) / (cL * cL);
      J(0, 1) = -2.0 * tanL;
      J(1, 0) = -tanM;
      J(1, 1) = tanM + (M - L) / (cM * cM);
      Eigen::Vector2d step = J.partialPivLu().solve(-res2(L, M));
      double Ln = clamp_L(L + step[0]);
      double Mn = clamp_MN(M + step[1]);
      if (rmax(Ln, Mn) < res) {
        L = Ln;
        M = Mn;
        res = rmax(L, M);
      } else {
        break;
      }
    }
  }
  return finish(r, 0, 0, sigma, Triple{L, M, M}, iter);
}

} // namespace

SecularSolution solve_secular(const TriangleGeometry& geom, ModeIndex mode,
                              double sigma, double tol) {
  SolveOptions opts;
  opts.tol = tol;
  return solve_secular(geom, mode, sigma, opts);
}

SecularSolution solve_secular(const TriangleGeometry& geom, ModeIndex mode,
                              double sigma, const SolveOptions& opts) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma))
    throw InvalidSigma("solve_secular: sigma must be finite and >= 0");
  if (!(opts.tol >= 1e-15 && opts.tol <= 1e-6))
    throw DomainError("solve_secular: tol outside [1e-15, 1e-6]");
  if (mode.m < 0 || mode.m > mode.n)
    throw DomainError("solve_secular: mode must satisfy 0 <= m <= n");

  if (sigma == 0.0) {
    SecularSolution s;
    s.mu = mode.m;
    s.nu = mode.n;
    s.lambda_aux = -(s.mu + s.nu);
    return s;
  }
  if (mode.m == 0 && mode.n == 0)
    return solve_origin_mode(geom.r, sigma, opts);
  return solve_general(geom.r, mode.m, mode.n, sigma, opts);
}

std::array<double, 3> secular_residuals(const TriangleGeometry& geom,
                                        ModeIndex mode, double sigma, double L,
                                        double M, double N) {
  return residuals(geom.r, mode.m, mode.n, sigma, Triple{L, M, N});
}

Eigen::Matrix3d secular_jacobian(const TriangleGeometry& /*geom*/,
                                 ModeIndex mode, double /*sigma*/, double L,
                                 double M, double N) {
  const double lim = kHalfPi - 1e-9;
  if (std::fabs(L) >= lim || std::fabs(M) >= lim || std::fabs(N) >= lim)
    throw Singularity("secular_jacobian: angle within 1e-9 of a tan pole");
  return jacobian(mode.m, mode.n, Triple{L, M, N});
}

double robin_gap_from_solution(const TriangleGeometry& geom, ModeIndex mode,
                               const SecularSolution& sol) {
  // mu = m + a, nu = n + b with small a, b; expand
  // (mu^2 + nu^2 + mu nu) - (m^2 + mn + n^2)
  //   = a(2m + n) + b(2n + m) + a^2 + ab + b^2
  // so the shift never touches the large Neumann part.
  const double a = (2.0 * sol.M - sol.N - sol.L) / kPi;
  const double b = (2.0 * sol.N - sol.L - sol.M) / kPi;
  const double m = mode.m, n = mode.n;
  return geom.eig_prefactor *
         (a * (2.0 * m + n) + b * (2.0 * n + m) + a * a + a * b + b * b);
}

} // namespace robintri
