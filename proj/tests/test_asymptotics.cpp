#include <doctest.h>

#include <cmath>
#include <random>

#include "robintri/asymptotics.hpp"
#include "robintri/spectrum.hpp"

using namespace robintri;

namespace {
const TriangleGeometry kUnit = make_geometry(1.0);
constexpr double kPi = 3.14159265358979323846;
} // namespace

TEST_SUITE_BEGIN("asymptotics");

TEST_CASE("F_R fixtures") {
  CHECK(f_r(ModeIndex{1, 9}) ==
        doctest::Approx(8281.0 / 8100.0).epsilon(1e-14));
  CHECK(f_r(ModeIndex{5, 6}) ==
        doctest::Approx(1.0 / 25 + 1.0 / 36 + 1.0 / 121).epsilon(1e-14));
  for (int m : {1, 2, 7})
    CHECK(f_r(ModeIndex{m, m}) == doctest::Approx(9.0 / (4.0 * m * m)));
  CHECK_THROWS_AS(f_r(ModeIndex{0, 5}), DomainError);
}

TEST_CASE("predicted derivatives at zero") {
  auto c12 = predicted_derivatives_at_zero(kUnit, ModeIndex{1, 2});
  CHECK(c12.c1 == doctest::Approx(8.0 * std::sqrt(3.0)).epsilon(1e-14));
  CHECK(c12.c1 == doctest::Approx(4.0 / kUnit.r).epsilon(1e-14));
  CHECK(c12.c2_available);

  auto c05 = predicted_derivatives_at_zero(kUnit, ModeIndex{0, 5});
  CHECK(c05.c1 ==
        doctest::Approx(20.0 * std::sqrt(3.0) / 3.0).epsilon(1e-14));
  CHECK(!c05.c2_available);
  CHECK(c05.slope_kind == ExpansionCoefficients::SlopeKind::m0_branch);

  auto c35 = predicted_derivatives_at_zero(kUnit, ModeIndex{3, 5});
  double fr = 1.0 / 9 + 1.0 / 25 + 1.0 / 64;
  CHECK(c35.f_r == doctest::Approx(fr).epsilon(1e-14));
  CHECK(c35.c2 == doctest::Approx(-8.0 * fr / (kPi * kPi)).epsilon(1e-14));
  CHECK(c35.c2 == doctest::Approx(-0.135146).epsilon(1e-4));

  auto c00 = predicted_derivatives_at_zero(kUnit, ModeIndex{0, 0});
  CHECK(c00.c1 == doctest::Approx(2.0 / kUnit.r).epsilon(1e-14));
  CHECK(c00.slope_kind ==
        ExpansionCoefficients::SlopeKind::origin_leading);
}

TEST_CASE("three-term expansion") {
  CHECK(expansion_3term(kUnit, ModeIndex{4, 7}, 0.0) ==
        doctest::Approx(kUnit.eig_prefactor * 93.0).epsilon(1e-14));
  CHECK_THROWS_AS(expansion_3term(kUnit, ModeIndex{0, 3}, 0.1), DomainError);

  // On small modes the remainder constant stays below 10; the frozen global
  // constant covers the full calibration grid.
  for (auto [m, n, sigma] :
       {std::tuple{1, 2, 0.01}, {10, 14, 0.05}, {3, 9, 0.02}}) {
    double lam = eigenvalue(kUnit, ModeIndex{m, n}, sigma, 1e-14).value;
    double approx = expansion_3term(kUnit, ModeIndex{m, n}, sigma);
    double s3 = sigma * sigma * sigma;
    double m4 = std::pow(static_cast<double>(m), 4.0);
    CHECK(std::fabs(lam - approx) <= 10.0 * s3 / m4);
    CHECK(std::fabs(lam - approx) <=
          expansion_remainder_constant * s3 / m4);
  }
}

TEST_CASE("first derivatives match the closed forms") {
  auto chk = secular_derivative_check(kUnit, ModeIndex{2, 3}, 1);
  // M_1'(0) = 3r/(2 pi) for m = 2
  CHECK(chk.mj_predicted[0] ==
        doctest::Approx(3.0 * kUnit.r / (2.0 * kPi)).epsilon(1e-14));
  for (int j = 0; j < 3; ++j) CHECK(chk.mj_rel_err[j] <= 1e-6);
  CHECK(chk.lambda_predicted == doctest::Approx(4.0 / kUnit.r));
  CHECK(chk.lambda_rel_err <= 1e-6);
}

TEST_CASE("second derivatives match the closed forms") {
  auto chk = secular_derivative_check(kUnit, ModeIndex{2, 3}, 2);
  // M_2''(0) with (m1, m2, m3) = (2, 3, -5)
  double predicted = -18.0 * kUnit.r * kUnit.r / (kPi * kPi * kPi) *
                     (9.0 + 2.0 * 2.0 * (-5.0)) / (27.0 * 2.0 * (-5.0));
  CHECK(chk.mj_predicted[1] == doctest::Approx(predicted).epsilon(1e-14));
  for (int j = 0; j < 3; ++j) CHECK(chk.mj_rel_err[j] <= 1e-3);

  auto chk47 = secular_derivative_check(kUnit, ModeIndex{4, 7}, 2);
  CHECK(chk47.lambda_predicted ==
        doctest::Approx(-8.0 * f_r(ModeIndex{4, 7}) / (kPi * kPi)));
  CHECK(chk47.lambda_rel_err <= 1e-4);
}

TEST_CASE("third derivatives follow the leading term") {
  // The third derivative of the curves is negative: the measured values sit
  // at -2(M')^3 and -24 r F_R / pi^2. The lower-order cross terms fade as m
  // grows, so the tolerance tightens with the mode.
  auto big = secular_derivative_check(kUnit, ModeIndex{20, 30}, 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(big.mj_fd[j] * big.mj_predicted[j] > 0.0); // matching signs
    CHECK(big.mj_rel_err[j] <= 0.05);
  }
  CHECK(big.lambda_fd < 0.0);
  CHECK(big.lambda_rel_err <= 0.05);
  CHECK(big.lambda_predicted ==
        doctest::Approx(-24.0 * kUnit.r * f_r(ModeIndex{20, 30}) /
                        (kPi * kPi)));

  auto mid = secular_derivative_check(kUnit, ModeIndex{10, 12}, 3);
  for (int j = 0; j < 3; ++j) CHECK(mid.mj_rel_err[j] <= 0.15);
  CHECK(mid.lambda_rel_err <= 0.15);
}

TEST_CASE("m = 0 slope") {
  for (int n : {2, 5, 30}) {
    double fd = m0_slope_fd(kUnit, n);
    CHECK(fd == doctest::Approx(10.0 / (3.0 * kUnit.r)).epsilon(1e-3));
  }
}

TEST_CASE("profile function") {
  const double end = 1.0 / std::sqrt(3.0);
  auto at_end = profile_f(end);
  CHECK(at_end.f == doctest::Approx(6.75).epsilon(1e-12));
  CHECK(std::fabs(at_end.fp) <= 1e-10);
  CHECK_THROWS_AS(profile_f(0.0), DomainError);
  CHECK_THROWS_AS(profile_f(0.6), DomainError);

  // F_R(m,n) = f(m/R)/R^2 on the cluster ellipse
  const double R = std::sqrt(49.0);
  CHECK(f_r(ModeIndex{3, 5}) ==
        doctest::Approx(profile_f(3.0 / R).f / 49.0).epsilon(1e-12));

  // f decreasing, f'' positive on the open interval
  for (int i = 1; i <= 1000; ++i) {
    double t = end * i / 1000.0;
    auto p = profile_f(t);
    if (i < 1000) CHECK(p.fp < 0.0);
    CHECK(p.fpp > 0.0);
  }
}

TEST_CASE("minimum of f''") {
  auto [t, value] = min_f_second_derivative();
  CHECK(value == doctest::Approx(119.1673146536).epsilon(1e-8));
  CHECK(t > 0.5);
  CHECK(t < 0.6);
}

TEST_CASE("F_R separation within clusters") {
  auto rep = check_fr_separation(2000);
  CHECK(rep.strictly_ordered);
  CHECK(rep.violations.empty());
  CHECK(rep.min_scaled_difference > 0.0);
  MESSAGE("min (dF_R) m^4 up to 2000: ", rep.min_scaled_difference);

  // fixture pair at R^2 = 91
  CHECK(f_r(ModeIndex{1, 9}) - f_r(ModeIndex{5, 6}) ==
        doctest::Approx(0.946298).epsilon(1e-5));
  CHECK_THROWS_AS(check_fr_separation(10), DomainError);
}

TEST_CASE("Taylor consistency with one constant") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> md(1, 50);
  double fitted = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    int a = md(rng), b = md(rng);
    ModeIndex mode = make_mode(a, b);
    auto coef = predicted_derivatives_at_zero(kUnit, mode);
    for (double sigma : {1e-3, 1e-2}) {
      double lam = eigenvalue(kUnit, mode, sigma, 1e-14).value;
      double taylor = coef.lambda0 + coef.c1 * sigma +
                      0.5 * coef.c2 * sigma * sigma;
      fitted = std::max(fitted,
                        std::fabs(lam - taylor) / (sigma * sigma * sigma));
    }
  }
  MESSAGE("fitted Taylor constant K = ", fitted);
  CHECK(fitted > 0.0);
  CHECK(fitted <= 5.0);
}

TEST_CASE("m = 0 branch stays within K' sigma^(3/2)") {
  double fitted = 0.0;
  for (int n : {1, 3, 10, 100}) {
    auto coef = predicted_derivatives_at_zero(kUnit, ModeIndex{0, n});
    for (double sigma : {0.001, 0.01, 0.1}) {
      double lam = eigenvalue(kUnit, ModeIndex{0, n}, sigma, 1e-14).value;
      double lead = coef.lambda0 + coef.c1 * sigma;
      fitted = std::max(fitted, std::fabs(lam - lead) / std::pow(sigma, 1.5));
    }
  }
  MESSAGE("fitted m=0 constant K' = ", fitted);
  CHECK(fitted > 0.0);
  CHECK(fitted <= 5.0);
}

TEST_CASE("mean slope splits into the two families") {
  double weighted_sum = 0.0;
  long weight_total = 0;
  for (const auto& cluster : clusters_up_to(200))
    for (const auto& mode : cluster.modes) {
      auto coef = predicted_derivatives_at_zero(kUnit, mode);
      if (mode.m >= 1) CHECK(coef.c1 == 4.0 / kUnit.r);
      weighted_sum += mode.multiplicity_weight() * coef.c1;
      weight_total += mode.multiplicity_weight();
    }
  double avg = weighted_sum / static_cast<double>(weight_total);
  CHECK(avg < 4.0 / kUnit.r); // dragged down by the sparse m = 0 family only
}

TEST_SUITE_END();
