#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "robintri/eigenfunctions.hpp"
#include "robintri/quadrature.hpp"

using namespace robintri;

namespace {
const TriangleGeometry kUnit = make_geometry(1.0);
} // namespace

TEST_SUITE_BEGIN("eigenfunctions");

TEST_CASE("gauss rule integrates polynomials") {
  auto rule = gauss_legendre_01(8);
  double total = 0.0, x7 = 0.0;
  for (auto [x, w] : rule) {
    total += w;
    x7 += w * std::pow(x, 7);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(x7 == doctest::Approx(1.0 / 8.0).epsilon(1e-13));
}

TEST_CASE("triangle rule reproduces area and centroid moments") {
  auto pts = triangle_quadrature(kUnit, 12);
  double area = 0.0, mx = 0.0, my = 0.0;
  for (const auto& p : pts) {
    area += p.w;
    mx += p.w * p.x;
    my += p.w * p.y;
  }
  CHECK(area == doctest::Approx(kUnit.area).epsilon(1e-13));
  CHECK(mx / area == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(my / area == doctest::Approx(kUnit.r).epsilon(1e-12));
}

TEST_CASE("constant mode") {
  NeumannMode constant = make_neumann_mode(0, 0, Parity::symmetric);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    double x = ux(rng), y = ux(rng) * 0.86;
    if (!inside_triangle(kUnit, x, y)) continue;
    CHECK(eval_neumann(kUnit, constant, x, y) == doctest::Approx(3.0));
  }
}

TEST_CASE("antisymmetric modes vanish on the altitude") {
  for (auto [m, n] : {std::pair{0, 1}, {1, 3}, {2, 4}}) {
    NeumannMode a = make_neumann_mode(m, n, Parity::antisymmetric);
    for (double y : {0.0, 0.2, 0.5, 0.8}) {
      if (!inside_triangle(kUnit, 0.5, y)) continue;
      CHECK(std::fabs(eval_neumann(kUnit, a, 0.5, y)) <= 1e-14);
    }
  }
}

TEST_CASE("frozen point values for the (1,2) symmetric mode") {
  NeumannMode s12 = make_neumann_mode(1, 2, Parity::symmetric);
  // centroid: the x-factor collapses to 1 and the cosine triple sums to zero
  double centroid = eval_neumann(kUnit, s12, 0.5, kUnit.r);
  CHECK(std::fabs(centroid) <= 1e-14);
  // off-center points frozen from a direct arithmetic evaluation
  CHECK(eval_neumann(kUnit, s12, 0.3, 0.2) ==
        doctest::Approx(0.88175233715946544).epsilon(1e-14));
  CHECK(eval_neumann(kUnit, s12, 0.5, 0.1) ==
        doctest::Approx(-0.6507763876314212).epsilon(1e-14));
}

TEST_CASE("outside-domain guard") {
  NeumannMode s12 = make_neumann_mode(1, 2, Parity::symmetric);
  CHECK_THROWS_AS(eval_neumann(kUnit, s12, -0.1, 0.0), OutsideDomain);
  CHECK_THROWS_AS(eval_neumann(kUnit, s12, 0.5, 0.9), OutsideDomain);
  CHECK_THROWS_AS(make_neumann_mode(2, 2, Parity::antisymmetric), DomainError);
  CHECK_THROWS_AS(make_neumann_mode(3, 1, Parity::symmetric), DomainError);
}

TEST_CASE("eigenvalue identity at random interior points") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (auto [m, n, parity] :
       {std::tuple{1, 2, Parity::symmetric}, {0, 3, Parity::antisymmetric},
        {2, 2, Parity::symmetric}}) {
    NeumannMode mode = make_neumann_mode(m, n, parity);
    double lambda0 =
        kUnit.eig_prefactor * static_cast<double>(mode.mode.r_squared());
    int tested = 0;
    while (tested < 1000) {
      double x = ux(rng), y = ux(rng) * 0.87;
      if (!inside_triangle(kUnit, x, y, -1e-9)) continue;
      ++tested;
      double lap = eval_neumann_laplacian(kUnit, mode, x, y);
      double val = eval_neumann(kUnit, mode, x, y);
      CHECK(std::fabs(lap + lambda0 * val) <= 1e-9 * (1.0 + lambda0));
    }
  }
}

TEST_CASE("check_mode residuals and norms") {
  auto rep = check_mode(kUnit, make_neumann_mode(1, 2, Parity::symmetric), 32,
                        48);
  CHECK(rep.helmholtz_residual <= 1e-8);
  CHECK(rep.boundary_residual <= 1e-8);
  CHECK(rep.l2_norm * rep.l2_norm ==
        doctest::Approx(9.0 * std::sqrt(3.0) * kUnit.r * kUnit.r / 4.0)
            .epsilon(1e-6));

  auto rep22 = check_mode(kUnit, make_neumann_mode(2, 2, Parity::symmetric),
                          32, 48);
  CHECK(rep22.l2_norm * rep22.l2_norm ==
        doctest::Approx(9.0 * std::sqrt(3.0) * kUnit.r * kUnit.r / 2.0)
            .epsilon(1e-6));

  auto repa = check_mode(kUnit, make_neumann_mode(1, 3, Parity::antisymmetric),
                         32, 48);
  CHECK(repa.l2_norm * repa.l2_norm ==
        doctest::Approx(9.0 * std::sqrt(3.0) * kUnit.r * kUnit.r / 4.0)
            .epsilon(1e-6));

  // On the m = 0 column two of the three summands coincide and the squared
  // norm doubles, same as for m = n.
  for (auto parity : {Parity::symmetric, Parity::antisymmetric}) {
    auto rep0 = check_mode(kUnit, make_neumann_mode(0, 3, parity), 32, 48);
    CHECK(rep0.l2_norm * rep0.l2_norm ==
          doctest::Approx(9.0 * std::sqrt(3.0) * kUnit.r * kUnit.r / 2.0)
              .epsilon(1e-6));
  }
}

TEST_CASE("orthogonality for small modes") {
  std::vector<NeumannMode> modes;
  for (int m = 0; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) {
      modes.push_back(make_neumann_mode(m, n, Parity::symmetric));
      if (m < n) modes.push_back(make_neumann_mode(m, n, Parity::antisymmetric));
    }
  std::vector<double> norms;
  for (const auto& mode : modes)
    norms.push_back(std::sqrt(inner_product(kUnit, mode, mode, 48)));
  for (std::size_t i = 0; i < modes.size(); ++i)
    for (std::size_t j = i + 1; j < modes.size(); ++j) {
      double ip = inner_product(kUnit, modes[i], modes[j], 48);
      CHECK(std::fabs(ip) / (norms[i] * norms[j]) <= 1e-6);
    }
}

TEST_SUITE_END();
