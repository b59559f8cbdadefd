#ifndef ROBINTRI_QUADRATURE_HPP
#define ROBINTRI_QUADRATURE_HPP

#include <utility>
#include <vector>

#include "robintri/geometry.hpp"

namespace robintri {

/// Gauss-Legendre nodes and weights on [0, 1].
std::vector<std::pair<double, double>> gauss_legendre_01(int n);

struct QuadraturePoint {
  double x, y, w;
};

/// Tensor Gauss rule collapsed onto the triangle with vertices (0,0), (h,0),
/// (h/2, sqrt(3) h / 2); weights sum to the area.
std::vector<QuadraturePoint> triangle_quadrature(const TriangleGeometry& geom,
                                                 int order);

} // namespace robintri

#endif // ROBINTRI_QUADRATURE_HPP
