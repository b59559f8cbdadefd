#include "robintri/eigenfunctions.hpp"

#include <cmath>

#include "robintri/quadrature.hpp"

namespace robintri {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

// One summand: cos(a (3r - y)) * {cos|sin}(b (x - sqrt(3) r)) with
// a = pi k1 / (3r), b = sqrt(3) pi k2 / (9r).
struct Term {
  double a, b;
};

std::array<Term, 3> terms(const TriangleGeometry& geom,
                          const NeumannMode& nmode) {
  const int m = nmode.mode.m, n = nmode.mode.n, ell = nmode.ell();
  auto mk = [&](int k1, int k2) {
    return Term{kPi * k1 / (3.0 * geom.r),
                kSqrt3 * kPi * k2 / (9.0 * geom.r)};
  };
  return {mk(ell, m - n), mk(m, n - ell), mk(n, ell - m)};
}

} // namespace

NeumannMode make_neumann_mode(int m, int n, Parity parity) {
  if (m < 0 || n < 0 || m > n)
    throw DomainError("make_neumann_mode: need 0 <= m <= n");
  if (parity == Parity::antisymmetric && m == n)
    throw DomainError("make_neumann_mode: antisymmetric modes need m < n");
  return NeumannMode{ModeIndex{m, n}, parity};
}

bool inside_triangle(const TriangleGeometry& geom, double x, double y,
                     double slack) {
  const double s = slack * geom.h;
  return y >= -s && y <= kSqrt3 * x + s && y <= kSqrt3 * (geom.h - x) + s;
}

double eval_neumann(const TriangleGeometry& geom, const NeumannMode& nmode,
                    double x, double y) {
  if (!inside_triangle(geom, x, y))
    throw OutsideDomain("eval_neumann: point outside the closed triangle");
  const double u = 3.0 * geom.r - y;
  const double v = x - kSqrt3 * geom.r;
  const bool sym = nmode.parity == Parity::symmetric;
  double sum = 0.0;
  for (const Term& t : terms(geom, nmode))
    sum += std::cos(t.a * u) *
           (sym ? std::cos(t.b * v) : std::sin(t.b * v));
  return sum;
}

Gradient eval_neumann_gradient(const TriangleGeometry& geom,
                               const NeumannMode& nmode, double x, double y) {
  const double u = 3.0 * geom.r - y;
  const double v = x - kSqrt3 * geom.r;
  const bool sym = nmode.parity == Parity::symmetric;
  Gradient g{0.0, 0.0};
  for (const Term& t : terms(geom, nmode)) {
    const double cu = std::cos(t.a * u), su = std::sin(t.a * u);
    const double cv = std::cos(t.b * v), sv = std::sin(t.b * v);
    g.dx += cu * t.b * (sym ? -sv : cv);
    g.dy += t.a * su * (sym ? cv : sv); // d/dy cos(a(3r-y)) = a sin(a(3r-y))
  }
  return g;
}

double eval_neumann_laplacian(const TriangleGeometry& geom,
                              const NeumannMode& nmode, double x, double y) {
  const double u = 3.0 * geom.r - y;
  const double v = x - kSqrt3 * geom.r;
  const bool sym = nmode.parity == Parity::symmetric;
  double sum = 0.0;
  for (const Term& t : terms(geom, nmode))
    sum -= (t.a * t.a + t.b * t.b) * std::cos(t.a * u) *
           (sym ? std::cos(t.b * v) : std::sin(t.b * v));
  return sum;
}

ModeReport check_mode(const TriangleGeometry& geom, const NeumannMode& nmode,
                      int grid_n, int quad_order) {
  if (grid_n < 16) throw DomainError("check_mode: grid_n must be >= 16");
  ModeReport report;
  const double lambda0 =
      geom.eig_prefactor * static_cast<double>(nmode.mode.r_squared());

  // Interior Helmholtz residual on a barycentric lattice.
  const double bx = geom.h, cx = geom.h / 2.0, cy = kSqrt3 * geom.h / 2.0;
  for (int i = 1; i < grid_n; ++i)
    for (int j = 1; i + j < grid_n; ++j) {
      double u = static_cast<double>(i) / grid_n;
      double v = static_cast<double>(j) / grid_n;
      double x = u * bx + v * cx, y = v * cy;
      double res = eval_neumann_laplacian(geom, nmode, x, y) +
                   lambda0 * eval_neumann(geom, nmode, x, y);
      report.helmholtz_residual =
          std::max(report.helmholtz_residual, std::fabs(res));
    }

  // Outward normal derivative on the three edges.
  for (int k = 0; k < grid_n; ++k) {
    double t = (k + 0.5) / grid_n;
    // bottom edge y = 0, outward normal (0, -1)
    Gradient g = eval_neumann_gradient(geom, nmode, t * geom.h, 0.0);
    report.boundary_residual = std::max(report.boundary_residual,
                                        std::fabs(-g.dy));
    // left edge (0,0)->(h/2, cy), outward normal (-sqrt(3)/2, 1/2)
    g = eval_neumann_gradient(geom, nmode, t * cx, t * cy);
    report.boundary_residual = std::max(
        report.boundary_residual, std::fabs(-kSqrt3 / 2.0 * g.dx + 0.5 * g.dy));
    // right edge (h,0)->(h/2, cy), outward normal (sqrt(3)/2, 1/2)
    g = eval_neumann_gradient(geom, nmode, geom.h - t * cx, t * cy);
    report.boundary_residual = std::max(
        report.boundary_residual, std::fabs(kSqrt3 / 2.0 * g.dx + 0.5 * g.dy));
  }

  double norm_sq = 0.0;
  for (const QuadraturePoint& p : triangle_quadrature(geom, quad_order)) {
    double val = eval_neumann(geom, nmode, p.x, p.y);
    norm_sq += p.w * val * val;
  }
  report.l2_norm = std::sqrt(norm_sq);
  return report;
}

double inner_product(const TriangleGeometry& geom, const NeumannMode& a,
                     const NeumannMode& b, int quad_order) {
  double acc = 0.0;
  for (const QuadraturePoint& p : triangle_quadrature(geom, quad_order))
    acc += p.w * eval_neumann(geom, a, p.x, p.y) *
           eval_neumann(geom, b, p.x, p.y);
  return acc;
}

} // namespace robintri
