#include <doctest.h>

#include <cmath>

#include "hua/errors.hpp"
#include "hua/partitions.hpp"
#include "support/oracles.hpp"

using namespace hua;

namespace {

std::vector<std::vector<int>> as_vectors(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.emplace_back(p.parts().begin(), p.parts().end());
  return out;
}

double fd_lb_operator(const Partition& kappa, double alpha, std::vector<double> x, double h) {
  const int n = static_cast<int>(x.size());
  auto f = [&](const std::vector<double>& y) { return jack_C(kappa, JackParameter(alpha), y); };
  const double f0 = f(x);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    auto p = x, m = x;
    p[i] += h;
    m[i] -= h;
    const double fp = f(p), fm = f(m);
    const double d1 = (fp - fm) / (2 * h);
    const double d2 = (fp - 2 * f0 + fm) / (h * h);
    total += alpha / 2.0 * x[i] * x[i] * d2;
    for (int j = 0; j < n; ++j) {
      if (j != i) total += x[i] * x[i] / (x[i] - x[j]) * d1;
    }
  }
  return total;
}

}  // namespace

TEST_SUITE("partitions_jack") {
  TEST_CASE("Partition validates and strips trailing zeros") {
    Partition p({3, 1, 0, 0});
    CHECK(p.length() == 2);
    CHECK(p.weight() == 4);
    CHECK(p[5] == 0);
    CHECK(p.conjugate() == std::vector<int>{2, 1, 1});
    CHECK(p.to_string() == "(3,1)");
    CHECK_THROWS_AS(Partition({1, 2}), Error);
    CHECK_THROWS_AS(Partition({2, -1}), Error);
    CHECK(Partition().empty());
  }

  TEST_CASE("enumerate_partitions examples") {
    auto e0 = enumerate_partitions(0, 3);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0].empty());
    CHECK(as_vectors(enumerate_partitions(3, 2)) == std::vector<std::vector<int>>{{3}, {2, 1}});
    CHECK(enumerate_partitions(6, 3).size() == 7);
    CHECK_THROWS_AS(enumerate_partitions(-1, 2), Error);
    CHECK_THROWS_AS(enumerate_partitions(2, 0), Error);
  }

  TEST_CASE("enumerate_partitions matches brute force and is reverse lexicographic") {
    for (int k = 0; k <= 12; ++k) {
      for (int len = 1; len <= 5; ++len) {
        auto got = as_vectors(enumerate_partitions(k, len));
        auto want = oracle::partitions_brute(k, len);
        std::sort(want.begin(), want.end(), std::greater<>());
        CHECK(got == want);
      }
    }
  }

  TEST_CASE("gen_pochhammer examples") {
    CHECK(gen_pochhammer(2.0, Partition({1}), JackParameter(0.7)) == Complex(2.0));
    CHECK(gen_pochhammer(2.0, Partition({2}), JackParameter(3.0)) == Complex(6.0));
    CHECK(gen_pochhammer(2.0, Partition({1, 1}), JackParameter(1.0)) == Complex(2.0));
    CHECK(gen_pochhammer(Complex(0.3, 1.0), Partition(), JackParameter(1.0)) == Complex(1.0));
  }

  TEST_CASE("gen_pochhammer box recursion (property)") {
    oracle::Gen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
      const double alpha = gen.uniform(0.2, 3.0);
      const Complex a(gen.uniform(-2, 3), gen.uniform(-1, 1));
      const auto parts = enumerate_partitions(gen.integer(0, 7), 4);
      const auto& kappa = parts[gen.integer(0, static_cast<int>(parts.size()) - 1)];
      std::vector<int> v(kappa.parts().begin(), kappa.parts().end());
      v.resize(4, 0);
      for (int i = 0; i < 4; ++i) {
        if (i > 0 && v[i] + 1 > v[i - 1]) continue;
        auto w = v;
        ++w[i];
        const Complex expect =
            gen_pochhammer(a, kappa, JackParameter(alpha)) * (a - static_cast<double>(i) / alpha + double(v[i]));
        const Complex got = gen_pochhammer(a, Partition(w), JackParameter(alpha));
        CHECK(std::abs(got - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
      }
    }
  }

  TEST_CASE("jack_C examples") {
    const std::vector<double> x{0.3, -0.2, 0.7};
    CHECK(jack_C(Partition({1}), JackParameter(2.0), x) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(jack_C(Partition({5}), JackParameter(0.5), std::vector<double>{0.6}) ==
          doctest::Approx(std::pow(0.6, 5)).epsilon(1e-14));
    const std::vector<double> ones{1.0, 1.0};
    const double c2 = jack_C(Partition({2}), JackParameter(1.0), ones);
    const double c11 = jack_C(Partition({1, 1}), JackParameter(1.0), ones);
    CHECK(c2 + c11 == doctest::Approx(4.0).epsilon(1e-14));
    // alpha = 1: C_kappa = k! / hook-product * s_kappa, s_(1,1)(1,1) = 1, hooks (2)(1).
    CHECK(c11 == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("monic P against closed monomial expansions in degree <= 3") {
    oracle::Gen gen(7);
    const std::vector<std::vector<int>> shapes{{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}};
    for (int trial = 0; trial < 30; ++trial) {
      const double alpha = gen.uniform(0.25, 4.0);
      const auto x = gen.reals(gen.integer(1, 4), -1.0, 1.0);
      JackEvaluator eval(JackParameter(alpha), x);
      for (const auto& s : shapes) {
        const double want = s.size() > x.size() ? 0.0 : oracle::jack_P_small(s, alpha, x);
        CHECK(eval.P(Partition(s)) == doctest::Approx(want).epsilon(1e-12).scale(1.0));
      }
    }
  }

  TEST_CASE("alpha = 1 Jack P equals Schur polynomial from tableaux") {
    oracle::Gen gen(3);
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = gen.reals(gen.integer(1, 4), -1.0, 1.0);
      std::vector<oracle::C> xc(x.begin(), x.end());
      JackEvaluator eval(JackParameter(1.0), x);
      for (int k = 0; k <= 6; ++k) {
        for (const auto& kappa : enumerate_partitions(k, static_cast<int>(x.size()))) {
          std::vector<int> shape(kappa.parts().begin(), kappa.parts().end());
          const double want = oracle::schur_ssyt(shape, xc).real();
          CHECK(eval.P(kappa) == doctest::Approx(want).epsilon(1e-12).scale(1.0));
        }
      }
    }
  }

  TEST_CASE("C_kappa is an eigenfunction of the Laplace-Beltrami operator") {
    oracle::Gen gen(5);
    for (int trial = 0; trial < 6; ++trial) {
      const double alpha = gen.uniform(0.4, 2.5);
      const int n = gen.integer(2, 3);
      auto x = gen.reals(n, 0.2, 0.9);
      std::sort(x.begin(), x.end());
      for (int i = 1; i < n; ++i) x[i] = std::max(x[i], x[i - 1] + 0.15);
      for (int k = 1; k <= 4; ++k) {
        for (const auto& kappa : enumerate_partitions(k, n)) {
          std::vector<int> parts(kappa.parts().begin(), kappa.parts().end());
          const double value = jack_C(kappa, JackParameter(alpha), x);
          const double lhs = fd_lb_operator(kappa, alpha, x, 1e-4);
          const double rhs = oracle::jack_lb_eigenvalue(parts, alpha, n) * value;
          CHECK(std::abs(lhs - rhs) <= 1e-5 * std::max(1.0, std::abs(rhs)));
        }
      }
    }
  }

  TEST_CASE("sum rule, vanishing and permutation symmetry (property)") {
    oracle::Gen gen(2024);
    for (int trial = 0; trial < 40; ++trial) {
      const double alpha = gen.uniform(0.2, 5.0);
      const int r = gen.integer(1, 4);
      auto x = gen.reals(r, -1.0, 1.0);
      JackEvaluator eval(JackParameter(alpha), x);
      auto y = x;
      std::reverse(y.begin(), y.end());
      if (r > 1) std::swap(y[0], y[r - 1 > 1 ? 1 : 0]);
      JackEvaluator permuted(JackParameter(alpha), y);
      const double s = std::accumulate(x.begin(), x.end(), 0.0);
      for (int k = 0; k <= 8; ++k) {
        double total = 0.0;
        for (const auto& kappa : enumerate_partitions(k, 8)) {
          const double c = eval.C(kappa);
          if (kappa.length() > r) {
            CHECK(c == 0.0);
          } else {
            CHECK(c == doctest::Approx(permuted.C(kappa)).epsilon(1e-12).scale(1.0));
          }
          total += c;
        }
        CHECK(std::abs(total - std::pow(s, k)) <= 1e-10 * std::max(1.0, std::pow(std::abs(s), k)));
      }
    }
  }

  TEST_CASE("Jack parameter validation") {
    CHECK_THROWS_AS(JackParameter(0.0), Error);
    CHECK_THROWS_AS(JackParameter::from_multiplicity(-1.0), Error);
    CHECK(JackParameter::from_multiplicity(4.0).alpha == doctest::Approx(0.5));
    CHECK_THROWS_AS(JackEvaluator(JackParameter(1.0), {}), Error);
  }

  TEST_CASE("long double evaluator agrees with double") {
    const std::vector<double> x{0.3, 0.55, -0.4};
    JackEvaluator d(JackParameter(0.8), x);
    BasicJackEvaluator<long double> e(JackParameter(0.8), std::vector<long double>(x.begin(), x.end()));
    for (const auto& kappa : enumerate_partitions(7, 3)) {
      CHECK(static_cast<double>(e.P(kappa)) == doctest::Approx(d.P(kappa)).epsilon(1e-13).scale(1.0));
    }
  }
}
