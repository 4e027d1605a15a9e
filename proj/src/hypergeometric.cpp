#include "hua/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hua/errors.hpp"

namespace hua {
namespace {

bool near_zero(Complex v, Complex scale) {
  return std::abs(v) <= 1e-12 * std::max(1.0, std::abs(scale));
}

// (a)_kappa (b)_kappa / (c)_kappa times the hook factor, accumulated box by box
// so that the partial products stay of moderate size at high degree.
template <class Real>
std::complex<Real> series_coefficient(const HyperParams& p, const Partition& kappa, JackParameter alpha) {
  using C = std::complex<Real>;
  const auto conj = kappa.conjugate();
  const Real al = alpha.alpha;
  const C a(p.a), b(p.b), c(p.c);
  C result = 1.0;
  for (int i = 0; i < kappa.length(); ++i) {
    const Real row_shift = -static_cast<Real>(i) / al;
    for (int j = 0; j < kappa[i]; ++j) {
      const Real shift = row_shift + static_cast<Real>(j);
      const C denom = c + shift;
      if (near_zero(Complex(denom), p.c)) {
        std::ostringstream os;
        os << "(c)_kappa vanishes for c = " << p.c << " at kappa = " << kappa.to_string();
        throw Error(Errc::parameter, os.str());
      }
      const Real arm = kappa[i] - j - 1;
      const Real leg = conj[j] - i - 1;
      result *= (a + shift) * (b + shift) / denom * (al / (leg + al * (arm + Real(1))));
    }
  }
  return result;
}



template <class Real>
struct SeriesSum {
  std::complex<Real> value;
  std::vector<double> shells;
  int degree = 0;
};

template <class Real>
SeriesSum<Real> sum_series(const HyperParams& params, std::span<const Real> x) {
  params.validate();
  if (x.empty()) throw Error(Errc::invalid_argument, "hyp2f1_multi needs at least one variable");
  for (Real xi : x) {
    if (!std::isfinite(xi) || std::abs(xi) >= 1) {
      throw Error(Errc::domain, "hyp2f1_multi requires max |x_i| < 1");
    }
  }

  const auto alpha = JackParameter::from_multiplicity(params.multiplicity_m);
  const int r = static_cast<int>(x.size());
  BasicJackEvaluator<Real> jack(alpha, std::vector<Real>(x.begin(), x.end()));

  SeriesSum<Real> out;
  out.value = 1;
  out.shells.push_back(1.0);
  // Odd shells vanish identically at points like (-x, x), so one small shell
  // is not enough to stop.
  int quiet = 0;
  for (int k = 1; k <= params.k_max; ++k) {
    std::complex<Real> shell = 0;
    Real magnitude = 0;
    for (const auto& kappa : enumerate_partitions(k, r)) {
      const auto term = series_coefficient<Real>(params, kappa, alpha) * jack.P(kappa);
      shell += term;
      magnitude += std::abs(term);
    }
    out.value += shell;
    out.shells.push_back(static_cast<double>(magnitude));
    out.degree = k;
    quiet = magnitude <= params.tol * std::max<Real>(1, std::abs(out.value)) ? quiet + 1 : 0;
    if (params.early_stop && quiet == 2) break;
  }
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) {
    throw Error(Errc::numerical, "hyp2f1_multi produced a non-finite value");
  }
  return out;
}

}  // namespace

void HyperParams::validate() const {
  if (k_max < 1) throw Error(Errc::invalid_argument, "k_max must be at least 1");
  if (!(tol > 0.0)) throw Error(Errc::invalid_argument, "tol must be positive");
  if (!(multiplicity_m > 0.0)) throw Error(Errc::invalid_argument, "multiplicity m must be positive");
}

SeriesResult hyp2f1_multi(const HyperParams& params, std::span<const double> x) {
  auto sum = sum_series<double>(params, x);
  SeriesResult out;
  out.value = sum.value;
  out.last_shell = sum.shells.back();
  out.truncation_degree = sum.degree;
  out.converged = out.last_shell <= params.tol * std::max(1.0, std::abs(out.value));
  out.shell_magnitudes = std::move(sum.shells);
  return out;
}

std::complex<long double> hyp2f1_multi_extended(const HyperParams& params, std::span<const long double> x) {
  return sum_series<long double>(params, x).value;
}

Complex hyp2f1_classical(Complex a, Complex b, Complex c, double x) {
  if (!std::isfinite(x) || std::abs(x) >= 1.0) {
    throw Error(Errc::domain, "hyp2f1_classical requires |x| < 1");
  }
  constexpr double kTailTol = 1e-14;
  constexpr int kMaxTerms = 1000000;
  // Past this index the term ratio is monotone and bounded by its current value.
  const int settle = static_cast<int>(std::abs(a) + std::abs(b) + std::abs(c)) + 2;

  Complex sum = 1.0;
  Complex term = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const Complex num = (a + static_cast<double>(n)) * (b + static_cast<double>(n));
    if (num == Complex(0.0)) return sum;  // terminating series
    const Complex den = (c + static_cast<double>(n)) * static_cast<double>(n + 1);
    if (near_zero(c + static_cast<double>(n), c)) {
      throw Error(Errc::parameter, "hyp2f1_classical: c is a nonpositive integer reached before termination");
    }
    const Complex ratio = num / den * x;
    term *= ratio;
    sum += term;
    const double rho = std::abs(ratio);
    if (n >= settle && rho < 1.0 &&
        std::abs(term) * rho / (1.0 - rho) <= kTailTol * std::abs(sum)) {
      return sum;
    }
  }
  throw Error(Errc::numerical, "hyp2f1_classical did not converge");
}

double euler_transform_check(const HyperParams& params, std::span<const double> x) {
  std::vector<double> y(x.size());
  Complex prefactor = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (std::abs(x[j]) >= 1.0) throw Error(Errc::domain, "euler_transform_check requires max |x_i| < 1");
    y[j] = x[j] / (x[j] - 1.0);
    prefactor *= std::exp(-params.a * std::log(1.0 - x[j]));
  }
  const auto lhs = hyp2f1_multi(params, x);
  HyperParams transformed = params;
  transformed.b = params.c - params.b;
  const auto rhs = hyp2f1_multi(transformed, y);
  return std::abs(lhs.value - prefactor * rhs.value) / std::max(1.0, std::abs(lhs.value));
}

}  // namespace hua
