#ifndef ROBINTRI_GEOMETRY_HPP
#define ROBINTRI_GEOMETRY_HPP

#include <cmath>
#include <numbers>

#include "robintri/errors.hpp"

namespace robintri {

/// Equilateral triangle of side length h. The inradius r = h/(2*sqrt(3)) is
/// the canonical parameter; every spectral formula below is written in r.
struct TriangleGeometry {
  double h;             // side length
  double r;             // inradius
  double area;          // 3*sqrt(3)*r^2
  double eig_prefactor; // 4*pi^2 / (27 r^2), scale of the Neumann eigenvalues
};

inline TriangleGeometry make_geometry(double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw DomainError("make_geometry: side length must be positive and finite");
  TriangleGeometry g;
  g.h = h;
  g.r = h / (2.0 * std::numbers::sqrt3);
  g.area = 3.0 * std::numbers::sqrt3 * g.r * g.r;
  constexpr double pi = std::numbers::pi;
  g.eig_prefactor = 4.0 * pi * pi / (27.0 * g.r * g.r);
  return g;
}

// Upper limit of the sigma range on which different Neumann clusters provably
// stay separated: pi^2 / (27 r).
inline double simplicity_sigma_threshold(const TriangleGeometry& g) {
  constexpr double pi = std::numbers::pi;
  return pi * pi / (27.0 * g.r);
}

// Limiting mean value of the Robin-Neumann gaps, 2|dT|/|T| * sigma = 4 sigma / r.
inline double mean_gap_bound(const TriangleGeometry& g, double sigma) {
  return 4.0 * sigma / g.r;
}

} // namespace robintri

#endif // ROBINTRI_GEOMETRY_HPP
