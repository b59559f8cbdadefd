#ifndef ROBINTRI_EIGENFUNCTIONS_HPP
#define ROBINTRI_EIGENFUNCTIONS_HPP

#include "robintri/secular.hpp"

namespace robintri {

enum class Parity { symmetric, antisymmetric };

/// Neumann eigenfunction label. Symmetric modes take 0 <= m <= n,
/// antisymmetric ones 0 <= m < n; ell = -(m+n) closes the index triple.
struct NeumannMode {
  ModeIndex mode;
  Parity parity = Parity::symmetric;

  int ell() const { return -(mode.m + mode.n); }
};

NeumannMode make_neumann_mode(int m, int n, Parity parity);

/// Value of the three-term trigonometric sum at (x, y). The triangle sits on
/// [0,h] x {0} with apex (h/2, sqrt(3) h/2); throws OutsideDomain off it.
double eval_neumann(const TriangleGeometry& geom, const NeumannMode& nmode,
                    double x, double y);

struct Gradient {
  double dx, dy;
};

/// Analytic gradient and Laplacian of the closed trigonometric form (no
/// numerical differentiation anywhere).
Gradient eval_neumann_gradient(const TriangleGeometry& geom,
                               const NeumannMode& nmode, double x, double y);
double eval_neumann_laplacian(const TriangleGeometry& geom,
                              const NeumannMode& nmode, double x, double y);

struct ModeReport {
  double helmholtz_residual = 0.0; // max |Laplacian T + Lambda(0) T| inside
  double boundary_residual = 0.0;  // max |dT/dn| over the three edges
  double l2_norm = 0.0;
};

ModeReport check_mode(const TriangleGeometry& geom, const NeumannMode& nmode,
                      int grid_n, int quad_order = 20);

/// L2 inner product by triangle quadrature.
double inner_product(const TriangleGeometry& geom, const NeumannMode& a,
                     const NeumannMode& b, int quad_order = 20);

bool inside_triangle(const TriangleGeometry& geom, double x, double y,
                     double slack = 1e-12);

} // namespace robintri

#endif // ROBINTRI_EIGENFUNCTIONS_HPP
