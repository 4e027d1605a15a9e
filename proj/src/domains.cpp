#include "hua/domains.hpp"

#include <cmath>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "hua/errors.hpp"
#include "hua/rng.hpp"

namespace hua {
namespace {

void require_kernel(const DomainSpec& spec) {
  if (!spec.has_kernel()) {
    throw Error(Errc::invalid_argument, "no kernel evaluator for domain " + spec.name());
  }
}

void require_square(const Matrix& m, int size, const char* what) {
  if (m.rows() != size || m.cols() != size) {
    throw Error(Errc::invalid_argument, std::string(what) + " has the wrong size");
  }
}

double spectral_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

bool is_positive_integer(Complex v) {
  if (v.imag() != 0.0) return false;
  const double r = std::round(v.real());
  return r >= 1.0 && std::abs(v.real() - r) <= 1e-12;
}

// Member of 2Z+ + 2 = {2, 4, 6, ...}.
bool is_even_at_least_two(Complex v) {
  if (v.imag() != 0.0) return false;
  const double r = std::round(v.real());
  return r >= 2.0 && std::fmod(r, 2.0) == 0.0 && std::abs(v.real() - r) <= 1e-12;
}

struct Blocks {
  Matrix A, B, C, D;
};

Blocks split(const Matrix& g) {
  if (g.rows() != g.cols() || g.rows() % 2 != 0 || g.rows() == 0) {
    throw Error(Errc::invalid_argument, "group element must be 2n x 2n");
  }
  const Eigen::Index n = g.rows() / 2;
  return {g.topLeftCorner(n, n), g.topRightCorner(n, n), g.bottomLeftCorner(n, n),
          g.bottomRightCorner(n, n)};
}

Matrix gaussian_matrix(int n, SplitMix64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

}  // namespace

DomainSpec DomainSpec::from_rank_multiplicity(DomainKind kind, int rank, double m, int matrix_size) {
  if (rank < 1) throw Error(Errc::invalid_argument, "rank must be at least 1");
  if (!(m > 0.0)) throw Error(Errc::invalid_argument, "multiplicity must be positive");
  DomainSpec s;
  s.kind = kind;
  s.rank = rank;
  s.multiplicity = m;
  s.eta = 0.5 * m * (rank - 1) + 1.0;
  s.genus = m * (rank - 1) + 2.0;
  s.matrix_size = matrix_size;
  return s;
}

DomainSpec DomainSpec::disk() { return from_rank_multiplicity(DomainKind::disk, 1, 2.0, 1); }

DomainSpec DomainSpec::type_I(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "type I needs n >= 1");
  return from_rank_multiplicity(DomainKind::type_I, n, 2.0, n);
}

DomainSpec DomainSpec::type_II(int n) {
  if (n < 2) throw Error(Errc::invalid_argument, "type II_{2n} needs n >= 2");
  return from_rank_multiplicity(DomainKind::type_II, n, 4.0, 0);
}

DomainSpec DomainSpec::type_III(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "type III needs n >= 1");
  return from_rank_multiplicity(DomainKind::type_III, n, 1.0, 0);
}

DomainSpec DomainSpec::type_IV(int n) {
  if (n < 3) throw Error(Errc::invalid_argument, "type IV needs n >= 3");
  return from_rank_multiplicity(DomainKind::type_IV, 2, n - 2.0, 0);
}

DomainSpec DomainSpec::e7() { return from_rank_multiplicity(DomainKind::e7, 3, 8.0, 0); }

std::string DomainSpec::name() const {
  switch (kind) {
    case DomainKind::disk: return "disk";
    case DomainKind::type_I: return "typeI(" + std::to_string(rank) + ")";
    case DomainKind::type_II: return "typeII(" + std::to_string(2 * rank) + ")";
    case DomainKind::type_III: return "typeIII(" + std::to_string(rank) + ")";
    case DomainKind::type_IV:
      return "typeIV(" + std::to_string(static_cast<int>(multiplicity) + 2) + ")";
    case DomainKind::e7: return "E7";
  }
  return "unknown";
}

void validate_kernel_point(const DomainSpec& spec, const KernelPoint& pt) {
  require_kernel(spec);
  require_square(pt.z, spec.matrix_size, "z");
  require_square(pt.u, spec.matrix_size, "u");
  if (!(spectral_norm(pt.z) < 1.0)) throw Error(Errc::invalid_argument, "z must have spectral norm < 1");
  const Matrix id = Matrix::Identity(spec.matrix_size, spec.matrix_size);
  if ((pt.u * pt.u.adjoint() - id).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(Errc::invalid_argument, "u must be unitary");
  }
}

Complex jordan_h(const DomainSpec& spec, const Matrix& z, const Matrix& w) {
  require_kernel(spec);
  require_square(z, spec.matrix_size, "z");
  require_square(w, spec.matrix_size, "w");
  const Matrix id = Matrix::Identity(spec.matrix_size, spec.matrix_size);
  if (spec.matrix_size == 1) return 1.0 - z(0, 0) * std::conj(w(0, 0));
  return (id - z * w.adjoint()).determinant();
}

Complex int_pow(Complex base, int exponent) {
  Complex result = 1.0;
  Complex b = exponent < 0 ? 1.0 / base : base;
  unsigned e = exponent < 0 ? static_cast<unsigned>(-static_cast<long>(exponent))
                            : static_cast<unsigned>(exponent);
  while (e) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

Complex poisson_kernel(const DomainSpec& spec, const LineBundleParams& params, const KernelPoint& pt) {
  const Complex hzu = jordan_h(spec, pt.z, pt.u);
  const double hzz = jordan_h(spec, pt.z, pt.z).real();
  const double abs2 = std::norm(hzu);
  if (abs2 == 0.0) throw Error(Errc::singular, "h(z,u) = 0");
  const Complex s = 0.5 * (params.lambda + spec.eta - static_cast<double>(params.nu));
  return std::exp(s * std::log(hzz / abs2)) * int_pow(hzu, -params.nu);
}

Complex hua_eigenvalue(const DomainSpec& spec, const LineBundleParams& params) {
  const double shift = spec.eta - params.nu;
  return (params.lambda * params.lambda - shift * shift) / (4.0 * spec.genus);
}

Complex casimir_eigenvalue(const DomainSpec& spec, const LineBundleParams& params) {
  const double shift = spec.eta - params.nu;
  return (params.lambda * params.lambda - shift * shift) / (4.0 * spec.rank);
}

AdmissibilityReport check_admissibility(const DomainSpec& spec, const LineBundleParams& params) {
  AdmissibilityReport report;
  for (int j = 0; j <= 1; ++j) {
    const Complex v = -params.lambda - 0.5 * spec.multiplicity * (-spec.rank + 2.0 + j);
    if (is_positive_integer(v)) report.condition_13 = false;
  }
  const Complex w = -params.lambda + spec.eta - static_cast<double>(std::abs(params.nu));
  report.condition_14 = !is_even_at_least_two(w);
  return report;
}

void validate_group_element(const Matrix& g, double tol) {
  const auto b = split(g);
  const Eigen::Index n = b.A.rows();
  Matrix J = Matrix::Zero(2 * n, 2 * n);
  J.topLeftCorner(n, n).setIdentity();
  J.bottomRightCorner(n, n) = -Matrix::Identity(n, n);
  if ((g.adjoint() * J * g - J).cwiseAbs().maxCoeff() > tol) {
    throw Error(Errc::invalid_argument, "g does not satisfy g^* J g = J");
  }
}

Matrix moebius_typeI(const Matrix& g, const Matrix& z) {
  validate_group_element(g);
  const auto b = split(g);
  require_square(z, static_cast<int>(b.A.rows()), "z");
  Eigen::FullPivLU<Matrix> lu(b.C * z + b.D);
  if (!lu.isInvertible() || lu.rcond() < 1e-14) {
    throw Error(Errc::singular, "Cz + D is not invertible");
  }
  return (b.A * z + b.B) * lu.inverse();
}

Complex cocycle_j(const Matrix& g, const Matrix& z) {
  validate_group_element(g);
  const auto b = split(g);
  require_square(z, static_cast<int>(b.A.rows()), "z");
  const Complex j = (b.C * z + b.D).determinant();
  if (std::abs(j) < 1e-300) throw Error(Errc::singular, "Cz + D is not invertible");
  return j;
}

Complex kernel_covariance_factor(const DomainSpec& spec, const LineBundleParams& params,
                                 const Matrix& g, const Matrix& z, const Matrix& u) {
  require_kernel(spec);
  const Complex jz = cocycle_j(g, z);
  const Complex ju = cocycle_j(g, u);
  const Complex s = params.lambda + spec.eta - static_cast<double>(params.nu);
  return std::exp(0.5 * s * std::log(std::norm(ju))) * int_pow(jz, params.nu) *
         int_pow(std::conj(ju), params.nu);
}

Complex kernel_covariance_factor_printed(const DomainSpec& spec, const LineBundleParams& params,
                                         const Matrix& g, const Matrix& z, const Matrix& u) {
  require_kernel(spec);
  // J_g^{1/p} = j^{-1}: J(z)^{-nu/2p} J(u)^{-(l+e-n)/2p} conj(J(u))^{-(l+e+n)/2p}
  const Complex jz = cocycle_j(g, z);
  const Complex ju = cocycle_j(g, u);
  const double nu = params.nu;
  const Complex a = 0.5 * (params.lambda + spec.eta - nu);
  const Complex b = 0.5 * (params.lambda + spec.eta + nu);
  return std::exp(0.5 * nu * std::log(jz)) * std::exp(a * std::log(ju)) *
         std::exp(b * std::log(std::conj(ju)));
}

Matrix sample_group_typeI(int n, std::uint64_t seed, double scale) {
  if (n < 1) throw Error(Errc::invalid_argument, "n must be at least 1");
  SplitMix64 rng(SplitMix64::mix(seed));
  const Matrix a = gaussian_matrix(n, rng);
  const Matrix d = gaussian_matrix(n, rng);
  const Matrix b = gaussian_matrix(n, rng);
  // u(n,n): [[A, B], [B^*, D]] with A, D skew-Hermitian.
  Matrix x(2 * n, 2 * n);
  x.topLeftCorner(n, n) = 0.5 * (a - a.adjoint());
  x.bottomRightCorner(n, n) = 0.5 * (d - d.adjoint());
  x.topRightCorner(n, n) = b;
  x.bottomLeftCorner(n, n) = b.adjoint();
  x *= scale / spectral_norm(x);
  return x.exp();
}

Matrix sample_interior_point(int n, std::uint64_t seed, double norm) {
  if (n < 1) throw Error(Errc::invalid_argument, "n must be at least 1");
  SplitMix64 rng(SplitMix64::mix(seed ^ 0x5bd1e995ull));
  Matrix z = gaussian_matrix(n, rng);
  return z * (norm / spectral_norm(z));
}

}  // namespace hua
