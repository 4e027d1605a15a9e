#pragma once

#include <vector>

#include "hua/hypergeometric.hpp"

namespace hua {

struct SphericalParams {
  Complex lambda;
  int nu = 0;
  double m = 2.0;  // short-root multiplicity
  int r = 1;       // rank

  double eta() const { return 0.5 * m * (r - 1) + 1.0; }
  void validate() const;
};

/// Flat coordinates t_1..t_r of a_t.
struct RadialPoint {
  std::vector<double> t;
};

struct SeriesControl {
  int k_max = 30;
  double tol = 1e-12;
  bool early_stop = true;
};

/// prod (1 - tanh^2 t_j)^{(lambda+eta)/2}
///   * 2F1^(m)((lambda+eta-nu)/2, (lambda+eta+nu)/2; eta; tanh^2 t).
/// value holds F; the remaining fields describe the series.
SeriesResult spherical_F(const SphericalParams& sp, const RadialPoint& pt,
                         const SeriesControl& control = {});

/// prod cosh(t_j)^{-nu} 2F1^(m)((lambda+eta-nu)/2, (-lambda+eta-nu)/2; eta; -sinh^2 t).
/// Needs sinh^2 t_j < 1.
SeriesResult spherical_F_xform(const SphericalParams& sp, const RadialPoint& pt,
                               const SeriesControl& control = {});

/// phi = prod cosh(t_j)^nu F(t), the closed form of the Shilov-boundary integral of
/// the Poisson kernel at z = diag(tanh t). value holds phi.
SeriesResult hua_integral_rhs(const SphericalParams& sp, const RadialPoint& pt,
                              const SeriesControl& control = {});

/// Eigenvalue constant on the right-hand side of the radial t-system.
enum class RadialEigenConstant {
  consistent,  // lambda^2 - (eta - nu)^2, the value the closed form satisfies
  printed,     // (lambda^2 - (eta - nu)^2) / 4
};

Complex radial_eigen_constant(const SphericalParams& sp, RadialEigenConstant which);

struct RadialResidual {
  std::vector<Complex> residual;  // LHS_k - constant * phi
  std::vector<double> relative;   // |residual_k| / |phi|
  Complex phi;                    // value at the stencil centre
  Complex eigen_constant;
  int series_degree = 0;          // fixed truncation used on the stencil

  double max_relative() const;
};

/// Central-difference residual of the radial system for
/// phi = prod cosh(t_j)^nu F(t):
///   phi_kk + 2 coth(2t_k) phi_k - 2 nu tanh(t_k) phi_k
///     + (m/2) sum_{j != k} [sinh(2t_j) phi_j - sinh(2t_k) phi_k] / (sinh^2 t_j - sinh^2 t_k)
///   = constant * phi.
/// Throws Error(geometry) when |t_k| < 10h or two sinh^2 t_j are closer than 10h.
RadialResidual hua_radial_residual(const SphericalParams& sp, const RadialPoint& pt, double h,
                                   RadialEigenConstant which = RadialEigenConstant::consistent);

struct RichardsonCheck {
  RadialResidual coarse;     // step h
  RadialResidual fine;       // step h / 2
  std::vector<double> ratio; // |coarse_k| / |fine_k|, ~4 for a second-order scheme
};

RichardsonCheck hua_radial_richardson(const SphericalParams& sp, const RadialPoint& pt, double h,
                                      RadialEigenConstant which = RadialEigenConstant::consistent);

/// Residual of the x-coordinate system (x_i = -sinh^2 t_i, psi(x) = phi(t)):
///   x_k(1-x_k) psi_kk + (1 - (2-nu) x_k) psi_k
///     - (m/2) sum_{j != k} [x_j(1-x_j) psi_j - x_k(1-x_k) psi_k] / (x_k - x_j)
///   = ((eta - nu)^2 - lambda^2)/4 * psi.
/// Needs x_k < 0, pairwise distinct, away from 0 and each other by 10h.
RadialResidual x_system_residual(const SphericalParams& sp, const std::vector<double>& x, double h);

struct CasimirResidual {
  Complex value;      // P_lambda 1 (z)
  Complex laplacian;  // (1 - |z|^2)^2 d^2/dz dzbar of it, 5-point stencil
  Complex expected;   // (lambda^2 - 1)/4 * value
  double relative = 0.0;
};

/// Disk (r = 1, nu = 0) Casimir check on the quadrature-evaluated Poisson
/// integral of the constant function.
CasimirResidual disk_casimir_residual(Complex lambda, Complex z, double h, int nodes = 1024);

}  // namespace hua
