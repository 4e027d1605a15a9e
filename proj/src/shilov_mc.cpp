#include "hua/shilov_mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "hua/errors.hpp"

namespace hua {
namespace {

constexpr std::int64_t kChunk = 4096;

struct Moments {
  std::int64_t count = 0;
  double mean_re = 0.0, m2_re = 0.0;
  double mean_im = 0.0, m2_im = 0.0;

  void push(Complex v) {
    ++count;
    const double n = static_cast<double>(count);
    const double dr = v.real() - mean_re;
    mean_re += dr / n;
    m2_re += dr * (v.real() - mean_re);
    const double di = v.imag() - mean_im;
    mean_im += di / n;
    m2_im += di * (v.imag() - mean_im);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(count), nb = static_cast<double>(o.count);
    const double n = na + nb;
    const double dr = o.mean_re - mean_re;
    const double di = o.mean_im - mean_im;
    mean_re += dr * nb / n;
    mean_im += di * nb / n;
    m2_re += o.m2_re + dr * dr * na * nb / n;
    m2_im += o.m2_im + di * di * na * nb / n;
    count += o.count;
  }
};

}  // namespace

Matrix haar_unitary(int n, SplitMix64& rng) {
  if (n < 1) throw Error(Errc::invalid_argument, "haar_unitary needs n >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  for (int j = 0; j < n; ++j) {
    const Complex d = qr.matrixQR()(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

McEstimate mc_integrate(const BoundaryFunction& f, int n, std::int64_t samples, std::uint64_t seed,
                        int workers) {
  if (samples < 2) throw Error(Errc::invalid_argument, "mc_integrate needs at least 2 samples");
  if (n < 1) throw Error(Errc::invalid_argument, "mc_integrate needs n >= 1");

  const std::int64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Moments> partial(static_cast<std::size_t>(chunks));
  std::vector<std::int64_t> bad(static_cast<std::size_t>(chunks), -1);
  std::atomic<std::int64_t> next{0};

  auto run = [&] {
    for (std::int64_t c = next++; c < chunks; c = next++) {
      Moments m;
      const std::int64_t end = std::min(samples, (c + 1) * kChunk);
      for (std::int64_t i = c * kChunk; i < end; ++i) {
        SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(i));
        const Complex v = f.f(haar_unitary(n, rng));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
          bad[static_cast<std::size_t>(c)] = i;
          break;
        }
        m.push(v);
      }
      partial[static_cast<std::size_t>(c)] = m;
    }
  };

  int threads = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
  threads = static_cast<int>(std::clamp<std::int64_t>(threads, 1, chunks));
  if (threads == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(run);
  }

  for (std::int64_t idx : bad) {
    if (idx >= 0) {
      throw Error(Errc::numerical, "non-finite integrand value at sample " + std::to_string(idx) +
                                       " (" + f.tag + ")");
    }
  }

  Moments total;
  for (const auto& m : partial) total.merge(m);
  const double nn = static_cast<double>(total.count);
  const double var_re = total.m2_re / (nn - 1.0);
  const double var_im = total.m2_im / (nn - 1.0);
  return {Complex(total.mean_re, total.mean_im), std::sqrt((var_re + var_im) / nn), samples, seed};
}

Complex circle_quadrature(const std::function<Complex(Complex)>& f, int nodes) {
  if (nodes < 8) throw Error(Errc::invalid_argument, "circle_quadrature needs at least 8 nodes");
  Complex sum = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / nodes;
    sum += f(std::polar(1.0, theta));
  }
  return sum / static_cast<double>(nodes);
}

McEstimate poisson_transform(const DomainSpec& spec, const LineBundleParams& params,
                             const BoundaryFunction& f, const Matrix& z,
                             const TransformOptions& options) {
  const int n = spec.matrix_size;
  if (spec.kind == DomainKind::disk) {
    validate_kernel_point(spec, {z, Matrix::Identity(1, 1)});
    Matrix u(1, 1);
    const Complex value = circle_quadrature(
        [&](Complex w) {
          u(0, 0) = w;
          return poisson_kernel(spec, params, {z, u}) * f.f(u);
        },
        options.quadrature_nodes);
    return {value, 0.0, options.quadrature_nodes, options.seed};
  }
  validate_kernel_point(spec, {z, Matrix::Identity(n, n)});
  BoundaryFunction integrand{
      [&](const Matrix& u) { return poisson_kernel(spec, params, {z, u}) * f.f(u); },
      "poisson_transform[" + f.tag + "]"};
  return mc_integrate(integrand, n, options.samples, options.seed, options.workers);
}

}  // namespace hua
