#pragma once

#include <vector>

#include "hua/domains.hpp"

namespace hua {

/// GL(n) highest weight m_1 >= ... >= m_n; negative parts allowed.
class Signature {
 public:
  /// Throws Error(invalid_argument) if empty or not weakly decreasing.
  explicit Signature(std::vector<int> parts);

  int n() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

 private:
  std::vector<int> parts_;
};

/// d_m = prod_{i<j} (1 + (m_i - m_j)/(j - i)); evaluated in exact integer
/// arithmetic and returned as a double.
double weyl_dim(const Signature& sig);

/// Schur polynomial s_m at the eigenvalues of u. Uses the bialternant
/// det(x_i^{m_j + n - j}) / det(x_i^{n - j}) when the Vandermonde is not small and
/// the division-free Jacobi-Trudi determinant otherwise.
Complex schur_char(const Signature& sig, const Matrix& u);

/// Same, directly on an eigenvalue list.
Complex schur_from_eigenvalues(const Signature& sig, const std::vector<Complex>& x);

/// Normalized character s_m(u) / d_m.
Complex phi_m(const Signature& sig, const Matrix& u);

/// (1 - tanh^2 t)^{(lambda+n)/2} ((lambda+n)/2)_k / k! tanh^k t
///   * 2F1((lambda+n)/2, (lambda+n)/2 + k; 1 + k; tanh^2 t).
Complex phi_lambda_k(Complex lambda, int k, double t, int n);

/// Total mass of the measure on U(n) the determinant identity is stated against.
enum class SchurMeasure {
  haar,        // normalized Haar measure, RHS = det / d_m
  weyl_torus,  // mass n! (unnormalized Weyl torus measure), RHS = n! det / d_m
};

double measure_mass(SchurMeasure measure, int n);

/// c * det(phi_{lambda, |m_i - i + j|}(t))_{i,j} with c = mass / d_m.
Complex det_formula_rhs(Complex lambda, const Signature& sig, double t,
                        SchurMeasure measure = SchurMeasure::haar);

/// Exponent applied to |h(tanh t I, u)| in the integrand.
enum class ExponentVariant { abs_h, abs_h_squared };

/// [h(tI, tI) / |h(tI, u)|^e]^{(lambda + n)/2} phi_m(u), e = 1 or 2.
Complex schur_det_integrand(Complex lambda, const Signature& sig, double t, const Matrix& u,
                            ExponentVariant variant);

}  // namespace hua
