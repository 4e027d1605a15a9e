#include <doctest.h>

#include <cmath>

#include "hua/errors.hpp"
#include "hua/pde_check.hpp"
#include "support/oracles.hpp"

using namespace hua;

namespace {

const SeriesControl kTight{400, 1e-15, true};

double cosh_prod(const std::vector<double>& t, double power) {
  double out = 1.0;
  for (double tj : t) out *= std::pow(std::cosh(tj), power);
  return out;
}

}  // namespace

TEST_SUITE("pde_check") {
  TEST_CASE("origin values") {
    for (int r = 1; r <= 3; ++r) {
      const SphericalParams sp{Complex(0.7, 0.2), 1, 2.0, r};
      const std::vector<double> zero(r, 0.0);
      CHECK(spherical_F(sp, {zero}).value == Complex(1.0));
      CHECK(hua_integral_rhs(sp, {zero}).value == Complex(1.0));
      CHECK(std::abs(spherical_F_xform(sp, {zero}).value - 1.0) <= 1e-15);
    }
  }

  TEST_CASE("reducible parameters give closed forms") {
    // lambda = eta -+ nu turns the series into a binomial and F into prod cosh^{-+nu}.
    oracle::Gen gen(3);
    for (int trial = 0; trial < 12; ++trial) {
      const int r = gen.integer(1, 3), nu = gen.integer(-2, 2);
      const double m = gen.integer(1, 4);
      const std::vector<double> t = gen.reals(r, -0.5, 0.5);
      SphericalParams sp{0.0, nu, m, r};
      sp.lambda = sp.eta() - nu;
      const double minus = cosh_prod(t, -nu);
      CHECK(std::abs(spherical_F(sp, {t}, kTight).value - minus) <= 1e-12 * minus);
      sp.lambda = sp.eta() + nu;
      const double plus = cosh_prod(t, nu);
      CHECK(std::abs(spherical_F(sp, {t}, kTight).value - plus) <= 1e-12 * plus);
    }
  }

  TEST_CASE("symmetries (property)") {
    oracle::Gen gen(4);
    for (int trial = 0; trial < 20; ++trial) {
      const int r = gen.integer(1, 3), nu = gen.integer(-3, 3);
      const SphericalParams sp{Complex(gen.uniform(-1, 3), gen.uniform(-1, 1)), nu, 2.0, r};
      const SphericalParams flipped{sp.lambda, -nu, 2.0, r};
      std::vector<double> t = gen.reals(r, -0.6, 0.6);
      const Complex f = spherical_F(sp, {t}, kTight).value;
      CHECK(spherical_F(flipped, {t}, kTight).value == f);
      const Complex phi = hua_integral_rhs(sp, {t}, kTight).value;
      const Complex phi_flipped = hua_integral_rhs(flipped, {t}, kTight).value;
      CHECK(std::abs(phi_flipped - phi * cosh_prod(t, -2.0 * nu)) <= 1e-13 * std::abs(phi));

      auto moved = t;
      std::reverse(moved.begin(), moved.end());
      moved[0] = -moved[0];
      CHECK(std::abs(spherical_F(sp, {moved}, kTight).value - f) <= 1e-13 * std::abs(f));
    }
  }

  TEST_CASE("the -sinh^2 form agrees and is even in lambda") {
    oracle::Gen gen(5);
    for (int trial = 0; trial < 12; ++trial) {
      const int r = gen.integer(1, 3);
      const SphericalParams sp{Complex(gen.uniform(0, 2), gen.uniform(-0.5, 0.5)), gen.integer(-2, 2), 2.0, r};
      const SphericalParams neg{-sp.lambda, sp.nu, 2.0, r};
      const std::vector<double> t = gen.reals(r, -0.5, 0.5);
      const Complex g = spherical_F_xform(sp, {t}, kTight).value;
      CHECK(spherical_F_xform(neg, {t}, kTight).value == g);
      CHECK(std::abs(spherical_F(sp, {t}, kTight).value - g) <= 1e-7 * std::abs(g));
    }
    CHECK_THROWS_AS(spherical_F_xform({0.5, 0, 2.0, 1}, {{1.2}}), Error);
  }

  TEST_CASE("eigen constants") {
    const SphericalParams sp{Complex(1.5, 0.5), 1, 2.0, 2};
    const Complex consistent = radial_eigen_constant(sp, RadialEigenConstant::consistent);
    CHECK(std::abs(consistent - (sp.lambda * sp.lambda - 1.0)) <= 1e-15);
    CHECK(radial_eigen_constant(sp, RadialEigenConstant::printed) == consistent / 4.0);
  }

  TEST_CASE("rank one radial equation") {
    for (int nu : {-1, 0, 2}) {
      const SphericalParams sp{Complex(0.8, 0.3), nu, 2.0, 1};
      const auto res = hua_radial_residual(sp, {{0.7}}, 1e-3);
      CHECK(res.max_relative() <= 1e-5);
    }
  }

  TEST_CASE("rank two radial equation and Richardson ratio") {
    const SphericalParams sp{Complex(0.9), 1, 2.0, 2};
    const auto check = hua_radial_richardson(sp, {{0.6, 0.3}}, 2e-3);
    CHECK(check.fine.max_relative() <= 1e-5);
    for (double ratio : check.ratio) {
      CHECK(ratio >= 3.5);
      CHECK(ratio <= 4.5);
    }
    const auto printed = hua_radial_residual(sp, {{0.6, 0.3}}, 1e-3, RadialEigenConstant::printed);
    CHECK(printed.max_relative() > 1e-2);
  }

  TEST_CASE("x system") {
    const SphericalParams sp{Complex(0.6, 0.2), 1, 2.0, 2};
    CHECK(x_system_residual(sp, {-0.2, -0.5}, 1e-3).max_relative() <= 1e-5);
    CHECK_THROWS_AS(x_system_residual(sp, {-0.3, -0.3}, 1e-4), Error);
    CHECK_THROWS_AS(x_system_residual(sp, {0.1, -0.3}, 1e-4), Error);
  }

  TEST_CASE("stencil geometry errors") {
    const SphericalParams sp{0.5, 0, 2.0, 2};
    for (const auto& t : std::vector<std::vector<double>>{{0.005, 0.4}, {0.4, 0.4}, {0.4, -0.4001}}) {
      try {
        hua_radial_residual(sp, {t}, 1e-3);
        FAIL("expected a geometry error");
      } catch (const Error& e) {
        CHECK(e.code() == Errc::geometry);
      }
    }
    CHECK_THROWS_AS(hua_radial_residual(sp, {{0.4}}, 1e-3), Error);
  }

  TEST_CASE("disk Casimir") {
    for (const Complex lambda : {Complex(2.0), Complex(0.5, 1.0), Complex(-0.3)}) {
      for (const Complex z : {Complex(0.3, 0.1), Complex(-0.5, 0.2)}) {
        const auto res = disk_casimir_residual(lambda, z, 1e-3);
        CHECK(res.relative <= 1e-5);
        CHECK(std::abs(res.expected - (lambda * lambda - 1.0) / 4.0 * res.value) <= 1e-14 * std::abs(res.expected));
      }
    }
    CHECK_THROWS_AS(disk_casimir_residual(2.0, Complex(0.999), 1e-3), Error);
  }
}
