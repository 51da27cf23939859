#pragma once

#include <vector>

#include "ucomp/combinatorics.hpp"

namespace ucomp {

/// k copies of the first unknown state, l copies of the second, both living
/// in a d-dimensional Hilbert space.
struct EnsembleSpec {
  int k = 1;
  int l = 1;
  int d = 2;

  /// Throws std::invalid_argument unless k >= 1, l >= 1 and d >= 2.
  static EnsembleSpec create(int k, int l, int d);

  int total() const noexcept { return k + l; }

  friend bool operator==(const EnsembleSpec&, const EnsembleSpec&) = default;
};

/// Squared overlap |<psi1|psi2>|^2 in [0, 1].
class OverlapSquared {
 public:
  explicit OverlapSquared(double x);
  double value() const noexcept { return x_; }

 private:
  double x_;
};

inline constexpr double kProbabilityClampTolerance = 1e-14;

/// A probability in [0, 1]. Values within 1e-14 outside the interval are
/// clamped; anything further out is a bug and raises std::domain_error.
class Probability {
 public:
  explicit Probability(double p);
  double value() const noexcept { return p_; }

 private:
  double p_;
};

/// Coefficients c_m = C(k,m) C(l,m) / C(k+l,k), m = 0..min(k,l), of the
/// symmetric-projector overlap <Psi|P_sym|Psi> as a polynomial in x.
/// They sum to exactly one.
std::vector<Rational> failure_coefficients(int k, int l);

/// Success probability of the optimal comparator for fixed (k, l), with the
/// exact coefficients converted to double once. Used for hot loops.
class PureComparator {
 public:
  PureComparator(int k, int l);

  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }

  /// 1 - sum_m c_m x^m, evaluated as sum_{m>=1} c_m (1 - x^m) so that the
  /// value at x = 1 is exactly zero.
  double operator()(double x) const noexcept;

 private:
  int k_;
  int l_;
  std::vector<double> coeffs_;
};

Probability success_prob_pure(OverlapSquared x, const EnsembleSpec& spec);

/// Haar-averaged success probability as an exact rational,
/// 1 - D(k+l) / (D(k) D(l)) with D(n) = sym_dim(d, n).
Rational avg_success_exact(const EnsembleSpec& spec);
Probability avg_success(const EnsembleSpec& spec);

struct ExtraCopyDelta {
  double value;
  SignedPolynomial poly;
};

/// Coefficients of P(x, k+1, l) - P(x, k, l) as exact rationals.
std::vector<Rational> delta_coefficients(int k, int l);

/// Gain from one extra copy of the first state, P(x, k+1, l) - P(x, k, l).
/// The value is a difference of two closed-form evaluations; the polynomial
/// is the coefficient-wise difference of the two failure polynomials.
ExtraCopyDelta delta_extra_copy(OverlapSquared x, const EnsembleSpec& spec);

/// Coefficients of P(x, k+1, N-k-1) - P(x, k, N-k) as exact rationals.
std::vector<Rational> lambda_coefficients(int k, int total);

/// Change from moving one copy between the ensembles at fixed total N:
/// P(x, k+1, N-k-1) - P(x, k, N-k). Requires 1 <= k <= N - 2.
double lambda_split(OverlapSquared x, int k, int total);
SignedPolynomial lambda_polynomial(int k, int total);

/// Copy split maximizing the success probability at fixed total N >= 2.
int optimal_split(int total);

/// l -> infinity limit of the k = 1 success probability: 1 - x.
Probability limit_one_vs_infinity(OverlapSquared x);

/// Haar average of |<psi1|psi2>|^{2m} in dimension d: 1 / C(m+d-1, d-1).
Rational mean_overlap_power_exact(int d, int m);
Probability mean_overlap_power(int d, int m);

}  // namespace ucomp
