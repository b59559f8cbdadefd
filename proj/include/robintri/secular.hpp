#ifndef ROBINTRI_SECULAR_HPP
#define ROBINTRI_SECULAR_HPP

#include <array>
#include <Eigen/Dense>

#include "robintri/geometry.hpp"

namespace robintri {

/// Desymmetrized mode label, 0 <= m <= n. A mode with m < n carries the
/// systematic double multiplicity (symmetric + antisymmetric eigenfunction),
/// a mode with m = n appears once.
struct ModeIndex {
  int m = 0;
  int n = 0;

  int multiplicity_weight() const { return m < n ? 2 : 1; }
  long long r_squared() const {
    long long mm = m, nn = n;
    return mm * mm + mm * nn + nn * nn;
  }
};

// Validates 0 <= m <= n, swapping if given in (n,m) order.
inline ModeIndex make_mode(int m, int n) {
  if (m < 0 || n < 0)
    throw DomainError("make_mode: indices must be non-negative");
  if (m > n) std::swap(m, n);
  return ModeIndex{m, n};
}

/// Solution of the coupled system
///   (2L-M-N-(m+n)pi) tan L = 3 r sigma
///   (2M-N-L+m pi)    tan M = 3 r sigma
///   (2N-L-M+n pi)    tan N = 3 r sigma
/// with L in (-pi/2, 0], M,N in [0, pi/2), together with the shifted
/// frequencies mu = (2M-N-L)/pi + m, nu = (2N-L-M)/pi + n and
/// lambda_aux = -(mu+nu).
struct SecularSolution {
  double L = 0.0;
  double M = 0.0;
  double N = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double lambda_aux = 0.0;
  double residual_max = 0.0;
  int iterations = 0;
};

struct SolveOptions {
  double tol = 1e-12;  // relative residual tolerance, in [1e-15, 1e-6]
  int max_iterations = 200;
  // After reaching tol, take up to two extra Newton steps while the residual
  // still improves. Sharpens the iterate to the evaluation floor, which the
  // within-cluster separation diagnostics rely on.
  bool polish = true;
};

SecularSolution solve_secular(const TriangleGeometry& geom, ModeIndex mode,
                              double sigma, double tol = 1e-12);
SecularSolution solve_secular(const TriangleGeometry& geom, ModeIndex mode,
                              double sigma, const SolveOptions& opts);

/// Residuals (lhs - 3 r sigma) of the three equations, in the printed order
/// (L-equation, M-equation, N-equation).
std::array<double, 3> secular_residuals(const TriangleGeometry& geom,
                                        ModeIndex mode, double sigma,
                                        double L, double M, double N);

/// Jacobian d(residual_j)/d(variable_k), rows and columns ordered (L, M, N).
/// Throws Singularity if any angle is within 1e-9 of +-pi/2.
Eigen::Matrix3d secular_jacobian(const TriangleGeometry& geom, ModeIndex mode,
                                 double sigma, double L, double M, double N);

/// Robin-Neumann shift Lambda_{m,n}(sigma) - Lambda_{m,n}(0) evaluated from a
/// solved triple without forming the large eigenvalues, so it stays accurate
/// to roundoff in the shift itself.
double robin_gap_from_solution(const TriangleGeometry& geom, ModeIndex mode,
                               const SecularSolution& sol);

} // namespace robintri

#endif // ROBINTRI_SECULAR_HPP
