#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "hua/domains.hpp"
#include "hua/rng.hpp"

namespace hua {

/// Monte Carlo mean with its standard error. std_error combines the real and
/// imaginary sample standard deviations in quadrature, divided by sqrt(samples).
struct McEstimate {
  Complex mean;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// A boundary datum u -> f(u) on U(n).
struct BoundaryFunction {
  std::function<Complex(const Matrix&)> f;
  std::string tag;
};

/// Haar-distributed n x n unitary: QR of an i.i.d. complex Gaussian matrix with
/// column j rescaled by the phase of R_jj.
Matrix haar_unitary(int n, SplitMix64& rng);

/// Sample-mean estimate of the Haar integral of f over U(n).
///
/// Sample i draws from sample_stream(seed, i). Samples are accumulated in
/// fixed-size chunks (Welford within a chunk, Chan's merge across chunks in
/// chunk order), so the result is bitwise independent of `workers`.
/// workers <= 0 uses the hardware concurrency.
/// Throws Error(numerical) naming the lowest sample index with a non-finite value.
McEstimate mc_integrate(const BoundaryFunction& f, int n, std::int64_t samples, std::uint64_t seed,
                        int workers = 0);

/// Trapezoidal rule on `nodes` equispaced points of the unit circle,
/// normalized to total mass 1.
Complex circle_quadrature(const std::function<Complex(Complex)>& f, int nodes);

struct TransformOptions {
  std::int64_t samples = 200000;
  std::uint64_t seed = 0x5eed5eedull;
  int workers = 0;
  int quadrature_nodes = 1024;  // disk only
};

/// Poisson transform of f at z. The disk goes through circle_quadrature and
/// reports std_error 0 with samples = quadrature nodes; type I uses Haar MC.
McEstimate poisson_transform(const DomainSpec& spec, const LineBundleParams& params,
                             const BoundaryFunction& f, const Matrix& z,
                             const TransformOptions& options = {});

}  // namespace hua
