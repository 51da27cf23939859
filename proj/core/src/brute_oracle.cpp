#include "ucomp/brute_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ucomp {

namespace {

double squared_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& a : v) s += std::norm(a);
  return s;
}

std::size_t checked_power(std::size_t d, std::size_t n, std::size_t cap) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (dim > cap / d) return cap + 1;
    dim *= d;
  }
  return dim;
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {
  if (amps_.empty()) {
    throw std::invalid_argument("PureState: empty amplitude list");
  }
  if (std::abs(squared_norm(amps_) - 1.0) > kNormTolerance) {
    throw std::invalid_argument("PureState: amplitudes are not unit norm");
  }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  const double norm = std::sqrt(squared_norm(amplitudes));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("PureState: cannot normalize zero vector");
  }
  for (Complex& a : amplitudes) a /= norm;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t d, std::size_t index) {
  if (index >= d) {
    throw std::invalid_argument("PureState::basis: index out of range");
  }
  std::vector<Complex> amps(d);
  amps[index] = 1.0;
  return PureState(std::move(amps));
}

Complex inner_product(const PureState& bra, const PureState& ket) {
  if (bra.dimension() != ket.dimension()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  Complex acc = 0.0;
  for (std::size_t i = 0; i < bra.dimension(); ++i) {
    acc += std::conj(bra.amplitudes()[i]) * ket.amplitudes()[i];
  }
  return acc;
}

double overlap_squared(const PureState& a, const PureState& b) {
  return std::norm(inner_product(a, b));
}

ProductState::ProductState(std::vector<PureState> factors, std::size_t boundary)
    : factors_(std::move(factors)), boundary_(boundary) {
  if (factors_.empty()) {
    throw std::invalid_argument("ProductState: no factors");
  }
  if (boundary_ > factors_.size()) {
    throw std::invalid_argument("ProductState: boundary past the last factor");
  }
  const std::size_t d = factors_.front().dimension();
  for (const PureState& f : factors_) {
    if (f.dimension() != d) {
      throw std::invalid_argument("ProductState: mixed local dimensions");
    }
  }
}

ProductState ProductState::comparator_input(const PureState& psi1,
                                            const PureState& psi2, int k,
                                            int l) {
  if (k < 1 || l < 1) {
    throw std::invalid_argument("comparator_input: copy counts must be >= 1");
  }
  std::vector<PureState> factors;
  factors.reserve(static_cast<std::size_t>(k + l));
  factors.insert(factors.end(), static_cast<std::size_t>(k), psi1);
  factors.insert(factors.end(), static_cast<std::size_t>(l), psi2);
  return ProductState(std::move(factors), static_cast<std::size_t>(k));
}

Eigen::VectorXcd ProductState::to_vector() const {
  Eigen::VectorXcd out(1);
  out(0) = 1.0;
  for (const PureState& f : factors_) {
    const auto d = static_cast<Eigen::Index>(f.dimension());
    Eigen::VectorXcd next(out.size() * d);
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        next(i * d + j) = out(i) * f.amplitudes()[static_cast<std::size_t>(j)];
      }
    }
    out = std::move(next);
  }
  return out;
}

PureState haar_random_state(int d, RandomStream& rng) {
  if (d < 1) {
    throw std::invalid_argument("haar_random_state: dimension must be >= 1");
  }
  if (d == 1) {
    return PureState({Complex(1.0, 0.0)});
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(static_cast<std::size_t>(d));
  for (Complex& a : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = Complex(re, im);
  }
  return PureState::normalized(std::move(amps));
}

double sym_overlap_permutation_sum(const ProductState& state) {
  const std::size_t n = state.size();
  if (n > kMaxPermutationSites) {
    throw std::invalid_argument(
        "sym_overlap_permutation_sum: more than 8 subsystems");
  }
  const auto& f = state.factors();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  Complex total = 0.0;
  std::size_t count = 0;
  do {
    Complex term = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      term *= inner_product(f[i], f[sigma[i]]);
    }
    total += term;
    ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total.real() / static_cast<double>(count);
}

double sym_overlap_permutation_sum(const PureState& psi1, const PureState& psi2,
                                   int k, int l) {
  if (k >= 1 && l >= 1 &&
      static_cast<std::size_t>(k + l) > kMaxPermutationSites) {
    throw std::invalid_argument(
        "sym_overlap_permutation_sum: k + l exceeds 8");
  }
  return sym_overlap_permutation_sum(
      ProductState::comparator_input(psi1, psi2, k, l));
}

Eigen::MatrixXcd sym_projector_matrix(int d, int n) {
  if (d < 1 || n < 1) {
    throw std::invalid_argument("sym_projector_matrix: need d >= 1, n >= 1");
  }
  const auto ud = static_cast<std::size_t>(d);
  const auto un = static_cast<std::size_t>(n);
  const std::size_t dim = checked_power(ud, un, kMaxProjectorDimension);
  if (dim > kMaxProjectorDimension) {
    throw std::invalid_argument("sym_projector_matrix: d^n exceeds 1024");
  }

  // Basis digits, site 0 most significant.
  std::vector<std::vector<std::size_t>> digits(dim, std::vector<std::size_t>(un));
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t rest = idx;
    for (std::size_t s = un; s-- > 0;) {
      digits[idx][s] = rest % ud;
      rest /= ud;
    }
  }
  auto index_of = [&](const std::vector<std::size_t>& dg) {
    std::size_t idx = 0;
    for (std::size_t v : dg) idx = idx * ud + v;
    return idx;
  };

  // Sum over S_n via its left-coset chain:
  //   sum_{S_j} sigma = (e + sum_{i<j} (i j)) * sum_{S_{j-1}} sigma,
  // applied right to left, so every permutation matrix M_sigma appears
  // exactly once. Dividing by j at each stage yields the 1/n! factor.
  const auto idim = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(idim, idim);
  std::vector<std::size_t> swapped(dim);
  for (std::size_t j = 1; j < un; ++j) {
    Eigen::MatrixXcd next = acc;
    for (std::size_t i = 0; i < j; ++i) {
      for (std::size_t idx = 0; idx < dim; ++idx) {
        auto dg = digits[idx];
        std::swap(dg[i], dg[j]);
        swapped[idx] = index_of(dg);
      }
      for (std::size_t r = 0; r < dim; ++r) {
        next.row(static_cast<Eigen::Index>(r)) +=
            acc.row(static_cast<Eigen::Index>(swapped[r]));
      }
    }
    acc = next / static_cast<double>(j + 1);
  }
  return acc;
}

MCEstimate mc_average_success(const EnsembleSpec& spec,
                              const MonteCarloConfig& config) {
  const EnsembleSpec checked = EnsembleSpec::create(spec.k, spec.l, spec.d);
  const PureComparator comparator(checked.k, checked.l);
  return run_monte_carlo(config, [&](RandomStream& rng) {
    const PureState a = haar_random_state(checked.d, rng);
    const PureState b = haar_random_state(checked.d, rng);
    return comparator(std::min(1.0, overlap_squared(a, b)));
  });
}

MCEstimate mc_mean_overlap_power(int d, int m, const MonteCarloConfig& config) {
  if (d < 1 || m < 0) {
    throw std::invalid_argument("mc_mean_overlap_power: need d >= 1, m >= 0");
  }
  return run_monte_carlo(config, [&](RandomStream& rng) {
    const PureState a = haar_random_state(d, rng);
    const PureState b = haar_random_state(d, rng);
    return std::pow(overlap_squared(a, b), m);
  });
}

double coherent_failure_quadrature(Complex alpha1, Complex alpha2, int k, int l,
                                   double half_width, int points_per_axis) {
  if (!(half_width > 0.0)) {
    throw std::invalid_argument(
        "coherent_failure_quadrature: half_width must be positive");
  }
  if (points_per_axis < 16) {
    throw std::invalid_argument(
        "coherent_failure_quadrature: need at least 16 points per axis");
  }
  if (k < 1 || l < 1) {
    throw std::invalid_argument(
        "coherent_failure_quadrature: copy counts must be >= 1");
  }
  const double n = static_cast<double>(k + l);
  const Complex center =
      (static_cast<double>(k) * alpha1 + static_cast<double>(l) * alpha2) / n;
  const double extent = half_width / std::sqrt(n);
  const double step = 2.0 * extent / static_cast<double>(points_per_axis - 1);

  std::vector<double> nodes(static_cast<std::size_t>(points_per_axis));
  std::vector<double> weights(nodes.size(), step);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    nodes[i] = -extent + step * static_cast<double>(i);
  }
  weights.front() = weights.back() = 0.5 * step;

  double integral = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const Complex beta = center + Complex(nodes[i], nodes[j]);
      const double exponent = static_cast<double>(k) * std::norm(alpha1 - beta) +
                              static_cast<double>(l) * std::norm(alpha2 - beta);
      row += weights[j] * std::exp(-exponent);
    }
    integral += weights[i] * row;
  }
  return 1.0 - n / std::numbers::pi * integral;
}

double fock_overlap_check(Complex alpha, Complex beta, int cutoff) {
  if (cutoff < 1) {
    throw std::invalid_argument("fock_overlap_check: cutoff must be >= 1");
  }
  const double limit = std::sqrt(static_cast<double>(cutoff)) / 2.0;
  if (std::abs(alpha) > limit || std::abs(beta) > limit) {
    throw std::invalid_argument(
        "fock_overlap_check: amplitude too large for the cutoff");
  }
  // c_n = exp(-|a|^2/2) a^n / sqrt(n!), built by c_n = c_{n-1} a / sqrt(n).
  Complex ca = std::exp(-0.5 * std::norm(alpha));
  Complex cb = std::exp(-0.5 * std::norm(beta));
  Complex overlap = std::conj(ca) * cb;
  for (int level = 1; level <= cutoff; ++level) {
    const double root = std::sqrt(static_cast<double>(level));
    ca *= alpha / root;
    cb *= beta / root;
    overlap += std::conj(ca) * cb;
  }
  return std::norm(overlap);
}

}  // namespace ucomp
