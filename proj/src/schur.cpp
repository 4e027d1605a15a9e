#include "hua/schur.hpp"

#include <cmath>
#include <algorithm>

#include "hua/errors.hpp"
#include "hua/hypergeometric.hpp"

namespace hua {
namespace {

// Smallest |prod_{i<j} (x_i - x_j)| sent to the bialternant.
constexpr double kMinVandermonde = 1e-2;

std::vector<Complex> eigenvalues(const Matrix& u) {
  if (u.rows() != u.cols() || u.rows() == 0) throw Error(Errc::invalid_argument, "u must be square");
  if (u.rows() == 1) return {u(0, 0)};
  Eigen::ComplexEigenSolver<Matrix> solver(u, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error(Errc::numerical, "eigenvalue computation failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

Complex bialternant(const std::vector<int>& lam, const std::vector<Complex>& x) {
  const int n = static_cast<int>(x.size());
  Matrix num(n, n), den(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      num(i, j) = int_pow(x[i], lam[j] + n - 1 - j);
      den(i, j) = int_pow(x[i], n - 1 - j);
    }
  }
  return num.determinant() / den.determinant();
}

Complex jacobi_trudi(const std::vector<int>& lam, const std::vector<Complex>& x) {
  const int n = static_cast<int>(x.size());
  const int kmax = lam.empty() ? 0 : lam.front() + n;
  // complete homogeneous h_k(x_1..x_j), built one variable at a time
  std::vector<Complex> h(static_cast<std::size_t>(kmax) + 1, 0.0);
  h[0] = 1.0;
  for (const Complex xi : x) {
    for (int k = 1; k <= kmax; ++k) h[k] += xi * h[k - 1];
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int k = lam[i] - i + j;
      m(i, j) = k < 0 ? Complex(0.0) : h[static_cast<std::size_t>(k)];
    }
  }
  return m.determinant();
}

}  // namespace

Signature::Signature(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(Errc::invalid_argument, "signature needs n >= 1 parts");
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] > parts_[i - 1]) {
      throw Error(Errc::invalid_argument, "signature parts must be weakly decreasing");
    }
  }
}

bool Signature::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}

double weyl_dim(const Signature& sig) {
  __int128 num = 1, den = 1;
  const int n = sig.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= static_cast<__int128>(sig[i] - sig[j] + j - i);
      den *= static_cast<__int128>(j - i);
      __int128 a = num < 0 ? -num : num, b = den;
      while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
      }
      if (a > 1) {
        num /= a;
        den /= a;
      }
    }
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

Complex schur_from_eigenvalues(const Signature& sig, const std::vector<Complex>& x) {
  const int n = sig.n();
  if (static_cast<int>(x.size()) != n) throw Error(Errc::invalid_argument, "eigenvalue count != n");
  // s_m = det^{m_n} s_{m - m_n}
  const int shift = sig[n - 1];
  std::vector<int> lam(sig.parts());
  for (int& p : lam) p -= shift;
  Complex prefactor = 1.0;
  for (const Complex xi : x) prefactor *= int_pow(xi, shift);

  double vandermonde = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) vandermonde *= std::abs(x[i] - x[j]);
  }
  const Complex s = vandermonde >= kMinVandermonde ? bialternant(lam, x) : jacobi_trudi(lam, x);
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw Error(Errc::numerical, "Schur character evaluation failed");
  }
  return prefactor * s;
}

Complex schur_char(const Signature& sig, const Matrix& u) {
  if (u.rows() != sig.n()) throw Error(Errc::invalid_argument, "u must be n x n");
  return schur_from_eigenvalues(sig, eigenvalues(u));
}

Complex phi_m(const Signature& sig, const Matrix& u) {
  if (sig.is_zero()) {
    if (u.rows() != sig.n()) throw Error(Errc::invalid_argument, "u must be n x n");
    return 1.0;
  }
  return schur_char(sig, u) / weyl_dim(sig);
}

Complex phi_lambda_k(Complex lambda, int k, double t, int n) {
  if (k < 0) throw Error(Errc::invalid_argument, "phi_lambda_k needs k >= 0");
  if (n < 1) throw Error(Errc::invalid_argument, "phi_lambda_k needs n >= 1");
  const double tau = std::tanh(t);
  const double x = tau * tau;
  if (!(x < 1.0)) throw Error(Errc::domain, "phi_lambda_k requires |tanh t| < 1");
  const Complex a = 0.5 * (lambda + static_cast<double>(n));
  if (k > 0 && tau == 0.0) return 0.0;
  Complex poch = 1.0;
  for (int j = 0; j < k; ++j) poch *= (a + static_cast<double>(j)) / static_cast<double>(j + 1);
  return std::exp(a * std::log1p(-x)) * poch * std::pow(tau, k) *
         hyp2f1_classical(a, a + static_cast<double>(k), 1.0 + k, x);
}

double measure_mass(SchurMeasure measure, int n) {
  return measure == SchurMeasure::haar ? 1.0 : std::tgamma(n + 1.0);
}

Complex det_formula_rhs(Complex lambda, const Signature& sig, double t, SchurMeasure measure) {
  const int n = sig.n();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = phi_lambda_k(lambda, std::abs(sig[i] - i + j), t, n);
  }
  return measure_mass(measure, n) / weyl_dim(sig) * m.determinant();
}

Complex schur_det_integrand(Complex lambda, const Signature& sig, double t, const Matrix& u,
                            ExponentVariant variant) {
  const int n = sig.n();
  if (u.rows() != n || u.cols() != n) throw Error(Errc::invalid_argument, "u must be n x n");
  const double tau = std::tanh(t);
  const Matrix id = Matrix::Identity(n, n);
  const double hzz = std::pow(1.0 - tau * tau, n);
  const Complex hzu = (id - tau * u.adjoint()).determinant();
  const double mag = std::abs(hzu);
  if (mag == 0.0) throw Error(Errc::singular, "h(z,u) = 0");
  const double denom = variant == ExponentVariant::abs_h ? mag : mag * mag;
  const Complex s = 0.5 * (lambda + static_cast<double>(n));
  return std::exp(s * std::log(hzz / denom)) * phi_m(sig, u);
}

}  // namespace hua
