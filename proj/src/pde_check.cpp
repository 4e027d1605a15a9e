#include "hua/pde_check.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hua/domains.hpp"
#include "hua/errors.hpp"
#include "hua/shilov_mc.hpp"

namespace hua {
namespace {

HyperParams series_params(Complex a, Complex b, double c, double m, const SeriesControl& control) {
  HyperParams p;
  p.a = a;
  p.b = b;
  p.c = c;
  p.multiplicity_m = m;
  p.k_max = control.k_max;
  p.tol = control.tol;
  p.early_stop = control.early_stop;
  return p;
}

void check_point(const SphericalParams& sp, const RadialPoint& pt) {
  sp.validate();
  if (static_cast<int>(pt.t.size()) != sp.r) {
    throw Error(Errc::invalid_argument, "radial point must have r coordinates");
  }
  for (double tj : pt.t) {
    if (!std::isfinite(tj)) throw Error(Errc::invalid_argument, "radial coordinates must be finite");
  }
}

Complex cosh_power(const std::vector<double>& t, int nu) {
  Complex prod = 1.0;
  for (double tj : t) prod *= int_pow(std::cosh(tj), nu);
  return prod;
}

// Smallest truncation degree that converges to ~1e-16 at every stencil point,
// plus a small margin; the stencil then uses it with early stop disabled.
int stencil_degree(const SphericalParams& sp, const std::vector<double>& t, double h) {
  std::vector<double> worst(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    const double th = std::tanh(std::abs(t[j]) + h);
    worst[j] = th * th;
  }
  const double eta = sp.eta();
  const double nu = sp.nu;
  auto p = series_params(0.5 * (sp.lambda + eta - nu), 0.5 * (sp.lambda + eta + nu), eta, sp.m,
                         {600, 1e-16, true});
  const auto res = hyp2f1_multi(p, worst);
  if (!res.converged) throw Error(Errc::numerical, "series does not converge on the FD stencil");
  return res.truncation_degree + 4;
}

using Ext = long double;
using CExt = std::complex<long double>;
using ExtPoint = std::vector<Ext>;

// phi = prod cosh(t_j)^nu F(t) with F summed to a fixed degree in long double.
CExt phi_at(const SphericalParams& sp, const ExtPoint& t, int degree) {
  const double eta = sp.eta();
  const double nu = sp.nu;
  HyperParams p = series_params(0.5 * (sp.lambda + eta - nu), 0.5 * (sp.lambda + eta + nu), eta, sp.m,
                                {degree, 1e-12, false});
  ExtPoint x(t.size());
  Ext log_cosh = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    const Ext th = std::tanh(t[j]);
    x[j] = th * th;
    log_cosh += std::log(std::cosh(t[j]));
  }
  const CExt exponent = CExt(nu) - CExt(sp.lambda) - CExt(eta);
  return std::exp(exponent * log_cosh) * hyp2f1_multi_extended(p, x);
}

struct Derivatives {
  CExt f0;
  std::vector<CExt> d1, d2;
};

Derivatives central_differences(const std::function<CExt(const ExtPoint&)>& f, const ExtPoint& at,
                                Ext h) {
  Derivatives d;
  d.f0 = f(at);
  for (std::size_t k = 0; k < at.size(); ++k) {
    auto plus = at, minus = at;
    plus[k] += h;
    minus[k] -= h;
    const CExt fp = f(plus), fm = f(minus);
    d.d1.push_back((fp - fm) / (2 * h));
    d.d2.push_back((fp - Ext(2) * d.f0 + fm) / (h * h));
  }
  return d;
}

}  // namespace

void SphericalParams::validate() const {
  if (r < 1) throw Error(Errc::invalid_argument, "rank must be at least 1");
  if (!(m > 0.0)) throw Error(Errc::invalid_argument, "multiplicity must be positive");
}

double RadialResidual::max_relative() const {
  return relative.empty() ? 0.0 : *std::max_element(relative.begin(), relative.end());
}

SeriesResult spherical_F(const SphericalParams& sp, const RadialPoint& pt, const SeriesControl& control) {
  check_point(sp, pt);
  const double eta = sp.eta();
  const double nu = sp.nu;
  std::vector<double> x(pt.t.size());
  Complex prefactor = 1.0;
  const Complex power = 0.5 * (sp.lambda + eta);
  for (std::size_t j = 0; j < pt.t.size(); ++j) {
    const double th = std::tanh(pt.t[j]);
    x[j] = th * th;
    prefactor *= std::exp(power * std::log1p(-x[j]));
  }
  auto res = hyp2f1_multi(series_params(0.5 * (sp.lambda + eta - nu), 0.5 * (sp.lambda + eta + nu), eta,
                                        sp.m, control),
                          x);
  res.value *= prefactor;
  return res;
}

SeriesResult spherical_F_xform(const SphericalParams& sp, const RadialPoint& pt,
                               const SeriesControl& control) {
  check_point(sp, pt);
  const double eta = sp.eta();
  const double nu = sp.nu;
  std::vector<double> x(pt.t.size());
  for (std::size_t j = 0; j < pt.t.size(); ++j) {
    const double sh = std::sinh(pt.t[j]);
    x[j] = -sh * sh;
  }
  auto res = hyp2f1_multi(series_params(0.5 * (sp.lambda + eta - nu), 0.5 * (-sp.lambda + eta - nu),
                                        eta, sp.m, control),
                          x);
  res.value *= cosh_power(pt.t, -sp.nu);
  return res;
}

SeriesResult hua_integral_rhs(const SphericalParams& sp, const RadialPoint& pt,
                              const SeriesControl& control) {
  auto res = spherical_F(sp, pt, control);
  res.value *= cosh_power(pt.t, sp.nu);
  return res;
}

Complex radial_eigen_constant(const SphericalParams& sp, RadialEigenConstant which) {
  const double shift = sp.eta() - sp.nu;
  const Complex c = sp.lambda * sp.lambda - shift * shift;
  return which == RadialEigenConstant::consistent ? c : c / 4.0;
}

RadialResidual hua_radial_residual(const SphericalParams& sp, const RadialPoint& pt, double h,
                                   RadialEigenConstant which) {
  check_point(sp, pt);
  if (!(h > 0.0)) throw Error(Errc::invalid_argument, "step size must be positive");
  const auto& t = pt.t;
  const int r = sp.r;
  for (int k = 0; k < r; ++k) {
    if (std::abs(t[k]) < 10.0 * h) throw Error(Errc::geometry, "t_k too close to 0 for the stencil");
    for (int j = k + 1; j < r; ++j) {
      const double sj = std::sinh(t[j]), sk = std::sinh(t[k]);
      if (std::abs(sj * sj - sk * sk) < 10.0 * h) {
        throw Error(Errc::geometry, "point too close to the singular set sinh^2 t_j = sinh^2 t_k");
      }
    }
  }

  const int degree = stencil_degree(sp, t, h);
  const ExtPoint te(t.begin(), t.end());
  const auto d = central_differences([&](const ExtPoint& s) { return phi_at(sp, s, degree); }, te, h);
  RadialResidual out;
  out.phi = Complex(d.f0);
  out.eigen_constant = radial_eigen_constant(sp, which);
  out.series_degree = degree;
  const Ext nu = sp.nu;
  const Ext half_m = 0.5L * sp.m;
  for (int k = 0; k < r; ++k) {
    CExt lhs = d.d2[k] + Ext(2) / std::tanh(2 * te[k]) * d.d1[k] - 2 * nu * std::tanh(te[k]) * d.d1[k];
    const Ext sk = std::sinh(te[k]);
    for (int j = 0; j < r; ++j) {
      if (j == k) continue;
      const Ext sj = std::sinh(te[j]);
      lhs += half_m * (std::sinh(2 * te[j]) * d.d1[j] - std::sinh(2 * te[k]) * d.d1[k]) / (sj * sj - sk * sk);
    }
    const CExt res = lhs - CExt(out.eigen_constant) * d.f0;
    out.residual.push_back(Complex(res));
    out.relative.push_back(static_cast<double>(std::abs(res) / std::abs(d.f0)));
  }
  return out;
}

RichardsonCheck hua_radial_richardson(const SphericalParams& sp, const RadialPoint& pt, double h,
                                      RadialEigenConstant which) {
  RichardsonCheck out{hua_radial_residual(sp, pt, h, which), hua_radial_residual(sp, pt, 0.5 * h, which),
                      {}};
  for (std::size_t k = 0; k < out.coarse.residual.size(); ++k) {
    out.ratio.push_back(std::abs(out.coarse.residual[k]) / std::abs(out.fine.residual[k]));
  }
  return out;
}

RadialResidual x_system_residual(const SphericalParams& sp, const std::vector<double>& x, double h) {
  sp.validate();
  if (static_cast<int>(x.size()) != sp.r) throw Error(Errc::invalid_argument, "x must have r entries");
  if (!(h > 0.0)) throw Error(Errc::invalid_argument, "step size must be positive");
  const int r = sp.r;
  for (int k = 0; k < r; ++k) {
    if (!(x[k] < -10.0 * h)) throw Error(Errc::geometry, "x_k must be negative and away from 0");
    for (int j = k + 1; j < r; ++j) {
      if (std::abs(x[j] - x[k]) < 10.0 * h) throw Error(Errc::geometry, "x_j and x_k too close");
    }
  }
  auto to_t = [](const ExtPoint& xs) {
    ExtPoint t(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) t[i] = std::asinh(std::sqrt(-xs[i]));
    return t;
  };
  std::vector<double> far(x);
  for (double& v : far) v = std::asinh(std::sqrt(h - v));
  const int degree = stencil_degree(sp, far, 0.0);
  const ExtPoint xe(x.begin(), x.end());
  const auto d = central_differences([&](const ExtPoint& xs) { return phi_at(sp, to_t(xs), degree); }, xe, h);

  RadialResidual out;
  out.phi = Complex(d.f0);
  const double shift = sp.eta() - sp.nu;
  out.eigen_constant = (shift * shift - sp.lambda * sp.lambda) / 4.0;
  out.series_degree = degree;
  const Ext half_m = 0.5L * sp.m;
  for (int k = 0; k < r; ++k) {
    const Ext xk = xe[k];
    CExt lhs = xk * (1 - xk) * d.d2[k] + (1 - (2 - Ext(sp.nu)) * xk) * d.d1[k];
    for (int j = 0; j < r; ++j) {
      if (j == k) continue;
      const Ext xj = xe[j];
      lhs -= half_m * (xj * (1 - xj) * d.d1[j] - xk * (1 - xk) * d.d1[k]) / (xk - xj);
    }
    const CExt res = lhs - CExt(out.eigen_constant) * d.f0;
    out.residual.push_back(Complex(res));
    out.relative.push_back(static_cast<double>(std::abs(res) / std::abs(d.f0)));
  }
  return out;
}

CasimirResidual disk_casimir_residual(Complex lambda, Complex z, double h, int nodes) {
  if (!(h > 0.0)) throw Error(Errc::invalid_argument, "step size must be positive");
  if (!(std::abs(z) + 2.0 * h < 1.0)) throw Error(Errc::invalid_argument, "need |z| + 2h < 1");
  const auto spec = DomainSpec::disk();
  const LineBundleParams params{lambda, 0};
  const BoundaryFunction one{[](const Matrix&) { return Complex(1.0); }, "1"};
  TransformOptions options;
  options.quadrature_nodes = nodes;
  auto P = [&](Complex w) {
    Matrix zm(1, 1);
    zm(0, 0) = w;
    return poisson_transform(spec, params, one, zm, options).mean;
  };
  CasimirResidual out;
  out.value = P(z);
  const Complex stencil = P(z + h) + P(z - h) + P(z + Complex(0, h)) + P(z - Complex(0, h)) - 4.0 * out.value;
  const double w = 1.0 - std::norm(z);
  out.laplacian = w * w * 0.25 * stencil / (h * h);
  out.expected = (lambda * lambda - 1.0) / 4.0 * out.value;
  out.relative = std::abs(out.laplacian - out.expected) / std::abs(out.value);
  return out;
}

}  // namespace hua
