#include <doctest.h>

#include <cmath>
#include <cstring>

#include "hua/errors.hpp"
#include "hua/hypergeometric.hpp"
#include "support/oracles.hpp"

using namespace hua;

namespace {

HyperParams params(Complex a, Complex b, Complex c, double m = 2.0, int k_max = 30) {
  HyperParams p;
  p.a = a;
  p.b = b;
  p.c = c;
  p.multiplicity_m = m;
  p.k_max = k_max;
  return p;
}

bool bitwise_equal(Complex x, Complex y) { return std::memcmp(&x, &y, sizeof(Complex)) == 0; }

}  // namespace

TEST_SUITE("hypergeometric") {
  TEST_CASE("zero argument gives 1") {
    const auto r = hyp2f1_multi(params(0.5, 0.5, 1.7), std::vector<double>{0.0, 0.0});
    CHECK(r.value == Complex(1.0));
    CHECK(r.converged);
  }

  TEST_CASE("binomial case b = c") {
    const std::vector<double> x{0.1, 0.2, 0.3};
    const auto r = hyp2f1_multi(params(0.7, 1.3, 1.3, 2.0, 30), x);
    const double want = std::pow(0.9 * 0.8 * 0.7, -0.7);
    CHECK(std::abs(r.value - want) / want <= 1e-8);
    const auto two = hyp2f1_multi(params(0.7, 1.3, 1.3), std::vector<double>{0.1, 0.2});
    CHECK(std::abs(two.value - std::pow(0.72, -0.7)) <= 1e-10);
  }

  TEST_CASE("vanishing odd shells do not stop the series") {
    for (int r : {2, 4}) {
      std::vector<double> x;
      for (int i = 0; i < r / 2; ++i) x.insert(x.end(), {-0.4 + 0.1 * i, 0.4 - 0.1 * i});
      const HyperParams p{0.7, 1.3, 1.3, 2.0, 100, 1e-14};
      const auto res = hyp2f1_multi(p, x);
      CHECK(res.shell_magnitudes[1] == 0.0);
      Complex want = 1.0;
      for (double xi : x) want *= std::pow(1.0 - xi, -0.7);
      CHECK(std::abs(res.value - want) <= 1e-12 * std::abs(want));
    }
  }

  TEST_CASE("rank one reduces to the classical series") {
    oracle::Gen gen(17);
    for (int trial = 0; trial < 20; ++trial) {
      const double a = gen.uniform(0.3, 2.5), b = gen.uniform(0.3, 2.5), c = gen.uniform(0.3, 2.5);
      const double x = gen.uniform(-0.6, 0.6);
      for (double m : {1.0, 2.0, 4.0}) {
        auto p = params(a, b, c, m, 400);
        p.tol = 1e-16;
        const auto r = hyp2f1_multi(p, std::vector<double>{x});
        const auto want = oracle::gauss_direct(a, b, c, x, 3000);
        CHECK(std::abs(r.value - want) / std::abs(want) <= 1e-10);
      }
    }
  }

  TEST_CASE("hyp2f1_classical examples and oracle") {
    CHECK(hyp2f1_classical(0.3, 0.4, 1.5, 0.0) == Complex(1.0));
    CHECK(std::abs(hyp2f1_classical(0.8, 1.7, 1.7, 0.45) - std::pow(0.55, -0.8)) <= 1e-13);
    const auto want = oracle::gauss_direct(0.5, 0.5, 1.0, 0.25, 200);
    CHECK(std::abs(hyp2f1_classical(0.5, 0.5, 1.0, 0.25) - want) <= 1e-14);
    // 2/pi K(k) with k^2 = 0.25.
    CHECK(std::abs(hyp2f1_classical(0.5, 0.5, 1.0, 0.25) - 2.0 / M_PI * std::comp_ellint_1(0.5)) <= 1e-14);
    // Terminating series with c a nonpositive integer beyond the termination point.
    CHECK(hyp2f1_classical(-1.0, 2.0, -3.0, 0.5) == Complex(1.0 + (-1.0 * 2.0) / (-3.0) * 0.5));
    CHECK_THROWS_AS(hyp2f1_classical(0.5, 0.5, -2.0, 0.3), Error);
    CHECK_THROWS_AS(hyp2f1_classical(0.5, 0.5, 1.0, 1.0), Error);
  }

  TEST_CASE("errors: domain and poles") {
    CHECK_THROWS_AS(hyp2f1_multi(params(0.5, 0.5, 1.0), std::vector<double>{0.3, 1.0}), Error);
    try {
      hyp2f1_multi(params(0.5, 0.5, -1.0), std::vector<double>{0.3});
      FAIL("expected a pole error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parameter);
      CHECK(std::string(e.what()).find("(2)") != std::string::npos);
    }
    // With m = 2 the second row shifts c by -1: c = 1 fails at kappa = (1,1).
    try {
      hyp2f1_multi(params(0.5, 0.5, 1.0), std::vector<double>{0.3, 0.2});
      FAIL("expected a pole error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parameter);
      CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
    }
    try {
      hyp2f1_multi(params(0.5, 0.5, 1.5), std::vector<double>{2.0});
      FAIL("expected a domain error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::domain);
    }
  }

  TEST_CASE("non-convergence is reported, not hidden") {
    const auto r = hyp2f1_multi(params(0.7, 1.3, 1.3), std::vector<double>{0.99});
    CHECK_FALSE(r.converged);
    CHECK(r.truncation_degree == 30);
    CHECK(r.shell_magnitudes.size() == 31);
  }

  TEST_CASE("a <-> b symmetry is bitwise (property)") {
    oracle::Gen gen(99);
    for (int trial = 0; trial < 25; ++trial) {
      const Complex a(gen.uniform(0.1, 2.5), gen.uniform(-0.5, 0.5));
      const Complex b(gen.uniform(0.1, 2.5), gen.uniform(-0.5, 0.5));
      const Complex c(gen.uniform(2.6, 4.0), 0.0);
      const auto x = gen.reals(gen.integer(1, 3), -0.6, 0.6);
      const double m = std::vector<double>{1.0, 2.0, 4.0}[gen.integer(0, 2)];
      const auto ab = hyp2f1_multi(params(a, b, c, m), x);
      const auto ba = hyp2f1_multi(params(b, a, c, m), x);
      CHECK(bitwise_equal(ab.value, ba.value));
    }
  }

  TEST_CASE("permutation symmetry in x (property)") {
    oracle::Gen gen(100);
    for (int trial = 0; trial < 20; ++trial) {
      auto x = gen.reals(3, -0.6, 0.6);
      const auto p = params(gen.uniform(0.3, 2.5), gen.uniform(0.3, 2.5), gen.uniform(2.1, 3.5),
                            std::vector<double>{1.0, 2.0, 4.0}[gen.integer(0, 2)]);
      const auto v1 = hyp2f1_multi(p, x).value;
      std::swap(x[0], x[2]);
      std::swap(x[1], x[2]);
      const auto v2 = hyp2f1_multi(p, x).value;
      CHECK(std::abs(v1 - v2) <= 1e-12 * std::abs(v1));
    }
  }

  TEST_CASE("shell magnitudes decay geometrically past degree 10") {
    oracle::Gen gen(8);
    for (int trial = 0; trial < 15; ++trial) {
      auto p = params(gen.uniform(0.3, 2.5), gen.uniform(0.3, 2.5), gen.uniform(2.0, 2.5),
                      std::vector<double>{1.0, 2.0, 4.0}[gen.integer(0, 2)], 40);
      p.early_stop = false;
      const auto x = gen.reals(gen.integer(1, 3), -0.6, 0.6);
      const auto r = hyp2f1_multi(p, x);
      for (std::size_t k = 11; k < r.shell_magnitudes.size(); ++k) {
        if (r.shell_magnitudes[k - 1] < 1e-300) continue;
        CHECK(r.shell_magnitudes[k] / r.shell_magnitudes[k - 1] < 0.9);
      }
    }
  }

  TEST_CASE("Euler transformation") {
    CHECK(euler_transform_check(params(0.5, 0.3, 1.2), std::vector<double>{0.0}) == 0.0);
    auto p1 = params(0.5, 0.3, 1.2, 2.0, 200);
    CHECK(euler_transform_check(p1, std::vector<double>{0.4}) <= 1e-8);
    CHECK(euler_transform_check(params(1.1, 0.6, 2.0, 2.0, 30), std::vector<double>{0.2, 0.35}) <= 1e-7);
    auto p2 = params(0.9, 0.4, 2.2, 1.0, 80);
    CHECK(euler_transform_check(p2, std::vector<double>{-0.3, 0.4}) <= 1e-7);
  }

  TEST_CASE("extended precision sum agrees with double") {
    auto p = params(Complex(0.8, 0.2), 1.4, 2.3, 2.0, 60);
    p.early_stop = false;
    const std::vector<double> x{0.35, -0.5};
    const std::vector<long double> xl{0.35L, -0.5L};
    const auto d = hyp2f1_multi(p, x).value;
    const auto l = hyp2f1_multi_extended(p, xl);
    CHECK(std::abs(Complex(l) - d) <= 1e-13 * std::abs(d));
  }

  TEST_CASE("parameter validation") {
    auto p = params(0.5, 0.5, 1.5);
    p.k_max = 0;
    CHECK_THROWS_AS(hyp2f1_multi(p, std::vector<double>{0.1}), Error);
    p = params(0.5, 0.5, 1.5);
    p.tol = 0.0;
    CHECK_THROWS_AS(hyp2f1_multi(p, std::vector<double>{0.1}), Error);
    CHECK_THROWS_AS(hyp2f1_multi(params(0.5, 0.5, 1.5), std::vector<double>{}), Error);
  }
}
