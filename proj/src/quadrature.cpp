#include "robintri/quadrature.hpp"

#include <cmath>

namespace robintri {

std::vector<std::pair<double, double>> gauss_legendre_01(int n) {
  if (n < 1) throw DomainError("gauss_legendre_01: n must be >= 1");
  std::vector<std::pair<double, double>> rule(n);
  for (int i = 0; i < n; ++i) {
    // Newton from the Chebyshev-angle estimate of the i-th root of P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule[n - 1 - i] = {0.5 * (x + 1.0), 0.5 * w}; // map [-1,1] -> [0,1]
  }
  return rule;
}

std::vector<QuadraturePoint> triangle_quadrature(const TriangleGeometry& geom,
                                                 int order) {
  auto gl = gauss_legendre_01(order);
  const double bx = geom.h, cx = geom.h / 2.0;
  const double cy = std::numbers::sqrt3 * geom.h / 2.0;
  std::vector<QuadraturePoint> pts;
  pts.reserve(static_cast<std::size_t>(order) * order);
  // Duffy map of the unit square: xi = u(1-v), eta = u v, |J| = u;
  // reference-to-physical carries the factor 2*area.
  for (const auto& [u, wu] : gl)
    for (const auto& [v, wv] : gl) {
      double xi = u * (1.0 - v), eta = u * v;
      QuadraturePoint p;
      p.x = xi * bx + eta * cx;
      p.y = eta * cy;
      p.w = 2.0 * geom.area * wu * wv * u;
      pts.push_back(p);
    }
  return pts;
}

} // namespace robintri
