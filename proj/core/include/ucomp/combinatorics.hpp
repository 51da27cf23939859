#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ucomp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, r). Zero when r < 0 or r > n.
BigInt binom(std::uint64_t n, std::int64_t r);

/// Dimension of the completely symmetric subspace of an n-fold tensor power
/// of a d-dimensional space, C(n + d - 1, d - 1).
struct SymDim {
  BigInt value;

  friend bool operator==(const SymDim&, const SymDim&) = default;
};

SymDim sym_dim(std::uint64_t d, std::uint64_t n);

inline constexpr double kLemmaTolerance = 1e-12;

/// Real polynomial Q(x) = sum_m a_m x^m together with its sign split.
///
/// The split index r0 is the last index of the leading run of nonnegative
/// coefficients when every later coefficient is nonpositive. It is -1 when
/// all coefficients are nonpositive, and empty when the coefficients change
/// sign more than once. Signs are judged after scaling by max |a_m|, with
/// the tolerance given at construction.
class SignedPolynomial {
 public:
  explicit SignedPolynomial(std::vector<double> coefficients,
                            double tol = kLemmaTolerance);

  static SignedPolynomial from_exact(std::span<const Rational> coefficients,
                                     double tol = kLemmaTolerance);

  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::optional<std::ptrdiff_t> r0() const noexcept { return r0_; }

  /// Largest |a_m|; zero for the zero polynomial.
  double scale() const noexcept;

  double operator()(double x) const noexcept;

  SignedPolynomial negated() const;

  /// Sign split at an explicit tolerance (relative to scale()).
  std::optional<std::ptrdiff_t> sign_split(double tol) const noexcept;

 private:
  std::vector<double> coeffs_;
  std::optional<std::ptrdiff_t> r0_;
};

/// True iff the hypotheses of the nonnegativity lemma hold: Q(1) = 0 and a
/// single sign change from nonnegative to nonpositive coefficients. Both are
/// checked on coefficients normalized by max |a_m|.
bool lemma_b_applies(const SignedPolynomial& p, double tol = kLemmaTolerance);

/// Minimum of Q over a uniform grid on [0, 1] including both endpoints.
double poly_min_on_unit_interval(const SignedPolynomial& p,
                                 std::size_t grid_points);

}  // namespace ucomp
