#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

#include "hua/partitions.hpp"

namespace hua {

using Matrix = Eigen::MatrixXcd;

enum class DomainKind { disk, type_I, type_II, type_III, type_IV, e7 };

/// Invariants of an irreducible tube-type domain. Only the disk and type I_{n,n}
/// carry kernel evaluators; the others are catalog records.
struct DomainSpec {
  DomainKind kind = DomainKind::disk;
  int rank = 1;
  double multiplicity = 2.0;  // m, short-root multiplicity
  double eta = 1.0;           // (m/2)(r - 1) + 1
  double genus = 2.0;         // p = m(r - 1) + 2 = 2 eta
  int matrix_size = 1;        // 0 when no matrix realization is implemented

  static DomainSpec disk();
  static DomainSpec type_I(int n);    // n x n complex matrices, r = n, m = 2
  static DomainSpec type_II(int n);   // 2n x 2n skew-symmetric, r = n, m = 4
  static DomainSpec type_III(int n);  // n x n symmetric, r = n, m = 1
  static DomainSpec type_IV(int n);   // Lie ball in C^n, r = 2, m = n - 2
  static DomainSpec e7();             // exceptional, r = 3, m = 8

  /// Build from rank and multiplicity (eta and genus derived).
  static DomainSpec from_rank_multiplicity(DomainKind kind, int rank, double m, int matrix_size);

  bool has_kernel() const { return kind == DomainKind::disk || kind == DomainKind::type_I; }
  std::string name() const;
};

struct LineBundleParams {
  Complex lambda;
  int nu = 0;
};

struct KernelPoint {
  Matrix z;  // interior point, spectral norm < 1
  Matrix u;  // Shilov boundary point, unitary
};

/// Throws Error(invalid_argument) unless ||z|| < 1 and u is unitary within 1e-12.
void validate_kernel_point(const DomainSpec& spec, const KernelPoint& pt);

/// Jordan polynomial h(z, w) = det(I - z w^*).
Complex jordan_h(const DomainSpec& spec, const Matrix& z, const Matrix& w);

/// [h(z,z) / |h(z,u)|^2]^{(lambda + eta - nu)/2} h(z,u)^{-nu}.
/// The real-base power uses the principal branch; the integer power is exact.
Complex poisson_kernel(const DomainSpec& spec, const LineBundleParams& params, const KernelPoint& pt);

/// (lambda^2 - (eta - nu)^2) / (4p).
Complex hua_eigenvalue(const DomainSpec& spec, const LineBundleParams& params);

/// (lambda^2 - (eta - nu)^2) / (4r).
Complex casimir_eigenvalue(const DomainSpec& spec, const LineBundleParams& params);

struct AdmissibilityReport {
  bool condition_13 = true;  // -lambda - (m/2)(-r + 2 + j) not in {1, 2, ...} for j = 0, 1
  bool condition_14 = true;  // -lambda + eta - |nu| not in {2, 4, 6, ...}
  bool admissible() const { return condition_13 && condition_14; }
};

AdmissibilityReport check_admissibility(const DomainSpec& spec, const LineBundleParams& params);

/// Throws Error(invalid_argument) unless g^* J g = J within tol, J = diag(I, -I).
void validate_group_element(const Matrix& g, double tol = 1e-10);

/// g . z = (A z + B)(C z + D)^{-1} for g = [[A, B], [C, D]].
Matrix moebius_typeI(const Matrix& g, const Matrix& z);

/// j(g, z) = det(C z + D).
Complex cocycle_j(const Matrix& g, const Matrix& z);

/// Factor with P(g.z, g.u) = P(z, u) * factor:
///   |j(g,u)|^{lambda + eta - nu} j(g,z)^nu conj(j(g,u))^nu.
/// Single-valued for every integer nu.
Complex kernel_covariance_factor(const DomainSpec& spec, const LineBundleParams& params,
                                 const Matrix& g, const Matrix& z, const Matrix& u);

/// Variant with exponent nu/2 on j(g,z) and half-integer powers of j(g,u),
/// principal branches. Agrees with the above only for nu = 0. Diagnostic only.
Complex kernel_covariance_factor_printed(const DomainSpec& spec, const LineBundleParams& params,
                                         const Matrix& g, const Matrix& z, const Matrix& u);

/// exp(X) for a random element X of u(n, n) with spectral norm `scale`.
/// Deterministic in seed.
Matrix sample_group_typeI(int n, std::uint64_t seed, double scale = 0.5);

/// Uniformly scaled random matrix with spectral norm `norm`. Deterministic in seed.
Matrix sample_interior_point(int n, std::uint64_t seed, double norm);

/// Integer power by repeated squaring; negative exponents invert.
Complex int_pow(Complex base, int exponent);

}  // namespace hua
