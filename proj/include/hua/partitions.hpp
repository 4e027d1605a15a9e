#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hua {

using Complex = std::complex<double>;

/// Integer partition: weakly decreasing positive parts, trailing zeros dropped.
class Partition {
 public:
  Partition() = default;
  /// Throws Error(invalid_argument) for negative or increasing parts.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based); 0 past the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Conjugate partition as a plain vector (column lengths).
  std::vector<int> conjugate() const;

  std::string to_string() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct JackParameter {
  double alpha;

  /// Throws Error(invalid_argument) unless alpha > 0.
  explicit JackParameter(double alpha);

  /// alpha = 2/m for short-root multiplicity m.
  static JackParameter from_multiplicity(double m);
};

/// All partitions of k with at most max_length parts, reverse lexicographic.
std::vector<Partition> enumerate_partitions(int k, int max_length);

/// Generalized Pochhammer symbol prod_i prod_{j<=kappa_i} (a - (i-1)/alpha + j - 1).
Complex gen_pochhammer(Complex a, const Partition& kappa, JackParameter alpha);

/// prod over boxes s of alpha / (leg(s) + alpha (arm(s) + 1)).
/// C_kappa = |kappa|! * hook_factor * P_kappa.
double jack_hook_factor(const Partition& kappa, JackParameter alpha);

/// Jack polynomials at a fixed real point, memoized across calls.
///
/// P-normalized values come from the horizontal-strip branching rule
///   P_kappa(x_1..x_n) = sum_mu P_mu(x_1..x_{n-1}) x_n^{|kappa/mu|} psi_{kappa/mu},
/// which keeps every intermediate O(1) in size so degrees well past 100 stay
/// finite. The cache is owned by the evaluator; do not share one instance
/// across threads. Instantiated for double and long double.
template <class Real>
class BasicJackEvaluator {
 public:
  BasicJackEvaluator(JackParameter alpha, std::vector<Real> x);

  double alpha() const { return alpha_; }
  int num_vars() const { return static_cast<int>(x_.size()); }

  /// Monic (P) normalization.
  Real P(const Partition& kappa);

  /// C normalization: sum over |kappa| = k of C_kappa(x) equals (sum x_i)^k.
  Real C(const Partition& kappa);

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& key) const noexcept;
  };

  Real P_prefix(const std::vector<int>& kappa, int nvars);
  Real branching_coefficient(const std::vector<int>& kappa, const std::vector<int>& mu) const;
  Real power(int var, int exponent);

  double alpha_;
  std::vector<Real> x_;
  std::vector<std::vector<Real>> powers_;
  std::unordered_map<std::vector<int>, Real, KeyHash> cache_;
};

extern template class BasicJackEvaluator<double>;
extern template class BasicJackEvaluator<long double>;

using JackEvaluator = BasicJackEvaluator<double>;

/// C_kappa^(alpha)(x); 0 when length(kappa) > x.size().
double jack_C(const Partition& kappa, JackParameter alpha, std::span<const double> x);

}  // namespace hua
