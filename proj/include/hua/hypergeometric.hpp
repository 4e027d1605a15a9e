#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hua/partitions.hpp"

namespace hua {

/// Parameters of 2F1^(m)(a, b; c; x) with c the denominator parameter.
struct HyperParams {
  Complex a;
  Complex b;
  Complex c;
  double multiplicity_m = 2.0;  // Jack parameter alpha = 2/m
  int k_max = 30;               // truncation degree
  double tol = 1e-12;           // shell tolerance, relative to max(1, |value|)
  bool early_stop = true;       // stop after two consecutive shells below tol

  void validate() const;
};

struct SeriesResult {
  Complex value;
  double last_shell = 0.0;  // sum of |term| over the last degree summed
  int truncation_degree = 0;
  bool converged = false;
  std::vector<double> shell_magnitudes;  // indexed by degree
};

/// Truncated Jack-series evaluation of the multivariate Gauss function
///   sum_kappa (a)_kappa (b)_kappa / (c)_kappa * C_kappa(x) / |kappa|!.
/// Degrees are summed in increasing order and partitions in reverse
/// lexicographic order within a degree, so results are reproducible bitwise.
/// Throws Error(domain) when max |x_i| >= 1 and Error(parameter) when (c)_kappa
/// vanishes for a visited kappa.
SeriesResult hyp2f1_multi(const HyperParams& params, std::span<const double> x);

/// The same summation carried out in long double, value only. Finite-difference
/// stencils use it to push rounding noise below the truncation error.
std::complex<long double> hyp2f1_multi_extended(const HyperParams& params, std::span<const long double> x);

/// Classical Gauss series, summed until the estimated relative tail is below 1e-14.
Complex hyp2f1_classical(Complex a, Complex b, Complex c, double x);

/// |LHS - RHS| / max(1, |LHS|) for the Euler-type transformation
///   2F1(a, b; c; y) = prod (1 - y_j)^(-a) 2F1(a, c - b; c; y_j / (y_j - 1)).
double euler_transform_check(const HyperParams& params, std::span<const double> x);

}  // namespace hua
