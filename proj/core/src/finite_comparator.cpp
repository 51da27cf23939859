#include "ucomp/finite_comparator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ucomp {

namespace {

void require_copies(int k, int l, const char* where) {
  if (k < 1 || l < 1) {
    throw std::invalid_argument(std::string(where) +
                                ": copy counts must be at least 1");
  }
}

// Coefficient-wise a - b, padding the shorter list with zeros.
std::vector<Rational> subtract(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  std::vector<Rational> out(std::max(a.size(), b.size()));
  for (std::size_t m = 0; m < a.size(); ++m) out[m] += a[m];
  for (std::size_t m = 0; m < b.size(); ++m) out[m] -= b[m];
  return out;
}

}  // namespace

EnsembleSpec EnsembleSpec::create(int k, int l, int d) {
  require_copies(k, l, "EnsembleSpec");
  if (d < 2) {
    throw std::invalid_argument("EnsembleSpec: dimension must be at least 2");
  }
  return EnsembleSpec{k, l, d};
}

OverlapSquared::OverlapSquared(double x) : x_(x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("OverlapSquared: value outside [0, 1]");
  }
}

Probability::Probability(double p) : p_(p) {
  if (!std::isfinite(p) || p < -kProbabilityClampTolerance ||
      p > 1.0 + kProbabilityClampTolerance) {
    throw std::domain_error("Probability: value " + std::to_string(p) +
                            " outside [0, 1]");
  }
  p_ = std::clamp(p, 0.0, 1.0);
}

std::vector<Rational> failure_coefficients(int k, int l) {
  require_copies(k, l, "failure_coefficients");
  const BigInt norm = binom(static_cast<std::uint64_t>(k + l), k);
  const int top = std::min(k, l);
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(top) + 1);
  for (int m = 0; m <= top; ++m) {
    c.emplace_back(binom(static_cast<std::uint64_t>(k), m) *
                       binom(static_cast<std::uint64_t>(l), m),
                   norm);
  }
  return c;
}

PureComparator::PureComparator(int k, int l) : k_(k), l_(l) {
  for (const Rational& c : failure_coefficients(k, l)) {
    coeffs_.push_back(c.convert_to<double>());
  }
}

double PureComparator::operator()(double x) const noexcept {
  double p = 0.0;
  double power = 1.0;
  for (std::size_t m = 1; m < coeffs_.size(); ++m) {
    power *= x;
    p += coeffs_[m] * (1.0 - power);
  }
  return p;
}

Probability success_prob_pure(OverlapSquared x, const EnsembleSpec& spec) {
  return Probability(PureComparator(spec.k, spec.l)(x.value()));
}

Rational avg_success_exact(const EnsembleSpec& spec) {
  const auto d = static_cast<std::uint64_t>(spec.d);
  const BigInt joint = sym_dim(d, static_cast<std::uint64_t>(spec.total())).value;
  const BigInt first = sym_dim(d, static_cast<std::uint64_t>(spec.k)).value;
  const BigInt second = sym_dim(d, static_cast<std::uint64_t>(spec.l)).value;
  return Rational(1) - Rational(joint, first * second);
}

Probability avg_success(const EnsembleSpec& spec) {
  return Probability(avg_success_exact(spec).convert_to<double>());
}

std::vector<Rational> delta_coefficients(int k, int l) {
  // P = 1 - sum c_m x^m, so P(k+1) - P(k) has coefficients c(k) - c(k+1).
  return subtract(failure_coefficients(k, l), failure_coefficients(k + 1, l));
}

ExtraCopyDelta delta_extra_copy(OverlapSquared x, const EnsembleSpec& spec) {
  const double value = PureComparator(spec.k + 1, spec.l)(x.value()) -
                       PureComparator(spec.k, spec.l)(x.value());
  const auto coeffs = delta_coefficients(spec.k, spec.l);
  return ExtraCopyDelta{value, SignedPolynomial::from_exact(coeffs)};
}

namespace {

void require_split(int k, int total) {
  if (k < 1 || k > total - 2) {
    throw std::invalid_argument("lambda_split: need 1 <= k <= N - 2");
  }
}

}  // namespace

std::vector<Rational> lambda_coefficients(int k, int total) {
  require_split(k, total);
  return subtract(failure_coefficients(k, total - k),
                  failure_coefficients(k + 1, total - k - 1));
}

double lambda_split(OverlapSquared x, int k, int total) {
  require_split(k, total);
  return PureComparator(k + 1, total - k - 1)(x.value()) -
         PureComparator(k, total - k)(x.value());
}

SignedPolynomial lambda_polynomial(int k, int total) {
  const auto coeffs = lambda_coefficients(k, total);
  return SignedPolynomial::from_exact(coeffs);
}

int optimal_split(int total) {
  if (total < 2) {
    throw std::invalid_argument("optimal_split: N must be at least 2");
  }
  return total / 2;
}

Probability limit_one_vs_infinity(OverlapSquared x) {
  return Probability(1.0 - x.value());
}

Rational mean_overlap_power_exact(int d, int m) {
  if (d < 2 || m < 0) {
    throw std::invalid_argument("mean_overlap_power: need d >= 2, m >= 0");
  }
  return Rational(BigInt(1), binom(static_cast<std::uint64_t>(m + d - 1), d - 1));
}

Probability mean_overlap_power(int d, int m) {
  return Probability(mean_overlap_power_exact(d, m).convert_to<double>());
}

}  // namespace ucomp
