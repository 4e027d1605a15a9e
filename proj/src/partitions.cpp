#include "hua/partitions.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "hua/errors.hpp"

namespace hua {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw Error(Errc::invalid_argument, "partition parts must be nonnegative");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw Error(Errc::invalid_argument, "partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::conjugate() const {
  std::vector<int> conj(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++conj[j];
  }
  return conj;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

JackParameter::JackParameter(double a) : alpha(a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(Errc::invalid_argument, "Jack parameter alpha must be positive");
  }
}

JackParameter JackParameter::from_multiplicity(double m) {
  if (!(m > 0.0)) throw Error(Errc::invalid_argument, "multiplicity m must be positive");
  return JackParameter(2.0 / m);
}

std::vector<Partition> enumerate_partitions(int k, int max_length) {
  if (k < 0) throw Error(Errc::invalid_argument, "partition weight must be nonnegative");
  if (max_length < 1) throw Error(Errc::invalid_argument, "max_length must be at least 1");

  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(k, k);
  return out;
}

Complex gen_pochhammer(Complex a, const Partition& kappa, JackParameter alpha) {
  Complex result = 1.0;
  for (int i = 0; i < kappa.length(); ++i) {
    const Complex row_shift = a - static_cast<double>(i) / alpha.alpha;
    for (int j = 0; j < kappa[i]; ++j) result *= row_shift + static_cast<double>(j);
  }
  return result;
}

double jack_hook_factor(const Partition& kappa, JackParameter alpha) {
  const auto conj = kappa.conjugate();
  const double a = alpha.alpha;
  double factor = 1.0;
  for (int i = 0; i < kappa.length(); ++i) {
    for (int j = 0; j < kappa[i]; ++j) {
      const double arm = kappa[i] - j - 1;
      const double leg = conj[j] - i - 1;
      factor *= a / (leg + a * (arm + 1.0));
    }
  }
  return factor;
}

template <class Real>
std::size_t BasicJackEvaluator<Real>::KeyHash::operator()(const std::vector<int>& key) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int v : key) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

template <class Real>
BasicJackEvaluator<Real>::BasicJackEvaluator(JackParameter alpha, std::vector<Real> x)
    : alpha_(alpha.alpha), x_(std::move(x)), powers_(x_.size(), std::vector<Real>{1.0}) {
  if (x_.empty()) throw Error(Errc::invalid_argument, "Jack evaluation needs at least one variable");
}

template <class Real>
Real BasicJackEvaluator<Real>::power(int var, int exponent) {
  auto& table = powers_[var];
  while (static_cast<int>(table.size()) <= exponent) table.push_back(table.back() * x_[var]);
  return table[exponent];
}

// psi_{kappa/mu} for the P normalization. Only boxes lying in a row touched
// by the strip and in an untouched column contribute; there the legs of kappa
// and mu agree and only the arms differ.
template <class Real>
Real BasicJackEvaluator<Real>::branching_coefficient(const std::vector<int>& kappa,
                                                     const std::vector<int>& mu) const {
  const int cols = kappa.empty() ? 0 : kappa.front();
  std::vector<int> kconj(cols, 0), mconj(cols, 0);
  for (int p : kappa) for (int j = 0; j < p; ++j) ++kconj[j];
  for (int p : mu) for (int j = 0; j < p; ++j) ++mconj[j];

  const Real a = alpha_;
  Real psi = 1.0;
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    const int ki = kappa[i];
    const int mi = i < mu.size() ? mu[i] : 0;
    if (ki == mi) continue;
    for (int j = 0; j < mi; ++j) {
      if (kconj[j] != mconj[j]) continue;
      const Real leg = kconj[j] - static_cast<int>(i) - 1;
      const Real karm = ki - j - 1;
      const Real marm = mi - j - 1;
      psi *= (leg + a * (karm + 1.0)) / (leg + 1.0 + a * karm);
      psi *= (leg + 1.0 + a * marm) / (leg + a * (marm + 1.0));
    }
  }
  return psi;
}

template <class Real>
Real BasicJackEvaluator<Real>::P_prefix(const std::vector<int>& kappa, int nvars) {
  if (kappa.empty()) return 1.0;
  if (static_cast<int>(kappa.size()) > nvars) return 0.0;
  if (nvars == 1) return power(0, kappa.front());

  std::vector<int> key = kappa;
  key.push_back(-nvars);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const int len = static_cast<int>(kappa.size());
  const int weight = std::accumulate(kappa.begin(), kappa.end(), 0);
  // Horizontal strips: kappa_{i+1} <= mu_i <= kappa_i, and mu has at most
  // nvars - 1 nonzero parts.
  std::vector<int> lo(len), hi(len);
  for (int i = 0; i < len; ++i) {
    lo[i] = i + 1 < len ? kappa[i + 1] : 0;
    hi[i] = kappa[i];
  }
  if (len == nvars) hi[len - 1] = 0;

  Real total = 0.0;
  std::vector<int> mu(lo);
  std::vector<int> trimmed;
  while (true) {
    trimmed.assign(mu.begin(), mu.end());
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    const int mu_weight = std::accumulate(trimmed.begin(), trimmed.end(), 0);
    const Real sub = P_prefix(trimmed, nvars - 1);
    if (sub != 0.0) {
      total += sub * power(nvars - 1, weight - mu_weight) * branching_coefficient(kappa, trimmed);
    }
    int pos = 0;
    while (pos < len && mu[pos] == hi[pos]) {
      mu[pos] = lo[pos];
      ++pos;
    }
    if (pos == len) break;
    ++mu[pos];
  }
  cache_.emplace(std::move(key), total);
  return total;
}

template <class Real>
Real BasicJackEvaluator<Real>::P(const Partition& kappa) {
  std::vector<int> parts(kappa.parts().begin(), kappa.parts().end());
  return P_prefix(parts, num_vars());
}

template <class Real>
Real BasicJackEvaluator<Real>::C(const Partition& kappa) {
  if (kappa.length() > num_vars()) return 0.0;
  return static_cast<Real>(std::tgamma(kappa.weight() + 1.0) * jack_hook_factor(kappa, JackParameter(alpha_))) *
         P(kappa);
}

template class BasicJackEvaluator<double>;
template class BasicJackEvaluator<long double>;

double jack_C(const Partition& kappa, JackParameter alpha, std::span<const double> x) {
  JackEvaluator eval(alpha, std::vector<double>(x.begin(), x.end()));
  return eval.C(kappa);
}

}  // namespace hua
