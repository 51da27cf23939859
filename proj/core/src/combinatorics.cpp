#include "ucomp/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ucomp {

BigInt binom(std::uint64_t n, std::int64_t r) {
  if (r < 0 || static_cast<std::uint64_t>(r) > n) {
    return 0;
  }
  std::uint64_t k = static_cast<std::uint64_t>(r);
  k = std::min(k, n - k);
  BigInt result = 1;
  // result * (n - i) is always divisible by (i + 1) since it equals
  // C(n, i + 1) * (i + 1).
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

SymDim sym_dim(std::uint64_t d, std::uint64_t n) {
  if (d < 1) {
    throw std::invalid_argument("sym_dim: dimension must be at least 1");
  }
  return SymDim{binom(n + d - 1, static_cast<std::int64_t>(d - 1))};
}

SignedPolynomial::SignedPolynomial(std::vector<double> coefficients, double tol)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("SignedPolynomial: empty coefficient list");
  }
  for (double a : coeffs_) {
    if (!std::isfinite(a)) {
      throw std::invalid_argument("SignedPolynomial: non-finite coefficient");
    }
  }
  r0_ = sign_split(tol);
}

SignedPolynomial SignedPolynomial::from_exact(
    std::span<const Rational> coefficients, double tol) {
  std::vector<double> out;
  out.reserve(coefficients.size());
  for (const Rational& a : coefficients) {
    out.push_back(a.convert_to<double>());
  }
  return SignedPolynomial(std::move(out), tol);
}

double SignedPolynomial::scale() const noexcept {
  double s = 0.0;
  for (double a : coeffs_) {
    s = std::max(s, std::abs(a));
  }
  return s;
}

double SignedPolynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

SignedPolynomial SignedPolynomial::negated() const {
  std::vector<double> out(coeffs_);
  for (double& a : out) {
    a = -a;
  }
  return SignedPolynomial(std::move(out));
}

std::optional<std::ptrdiff_t> SignedPolynomial::sign_split(
    double tol) const noexcept {
  const double s = scale();
  if (s == 0.0) {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  const auto n = static_cast<std::ptrdiff_t>(coeffs_.size());
  std::ptrdiff_t first_negative = n;
  for (std::ptrdiff_t m = 0; m < n; ++m) {
    if (coeffs_[static_cast<std::size_t>(m)] / s < -tol) {
      first_negative = m;
      break;
    }
  }
  for (std::ptrdiff_t m = first_negative; m < n; ++m) {
    if (coeffs_[static_cast<std::size_t>(m)] / s > tol) {
      return std::nullopt;
    }
  }
  return first_negative - 1;
}

bool lemma_b_applies(const SignedPolynomial& p, double tol) {
  const double s = p.scale();
  if (s == 0.0) {
    return true;
  }
  double at_one = 0.0;
  for (double a : p.coefficients()) {
    at_one += a / s;
  }
  if (std::abs(at_one) > tol) {
    return false;
  }
  return p.sign_split(tol).has_value();
}

double poly_min_on_unit_interval(const SignedPolynomial& p,
                                 std::size_t grid_points) {
  if (grid_points < 2) {
    throw std::invalid_argument(
        "poly_min_on_unit_interval: need at least two grid points");
  }
  const double last = static_cast<double>(grid_points - 1);
  double lowest = p(0.0);
  for (std::size_t i = 1; i < grid_points; ++i) {
    lowest = std::min(lowest, p(static_cast<double>(i) / last));
  }
  return lowest;
}

}  // namespace ucomp
