#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "ucomp/finite_comparator.hpp"
#include "ucomp/monte_carlo.hpp"

// Independent verification engines. Nothing here uses the closed-form
// combinatorics of finite_comparator to produce its answer; Monte Carlo
// estimators only evaluate the closed form at sampled overlaps.

namespace ucomp {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;

/// Unit-norm vector of d complex amplitudes.
class PureState {
 public:
  /// Throws std::invalid_argument if the squared norm differs from 1 by more
  /// than 1e-12, or the list is empty.
  explicit PureState(std::vector<Complex> amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(std::vector<Complex> amplitudes);

  /// Computational basis vector |index> in dimension d.
  static PureState basis(std::size_t d, std::size_t index);

  std::size_t dimension() const noexcept { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const noexcept { return amps_; }

 private:
  std::vector<Complex> amps_;
};

/// <bra|ket>
Complex inner_product(const PureState& bra, const PureState& ket);

/// |<a|b>|^2
double overlap_squared(const PureState& a, const PureState& b);

/// Tensor product of single-system pure states. For comparator inputs the
/// first `boundary` factors are copies of psi1 and the rest copies of psi2.
class ProductState {
 public:
  ProductState(std::vector<PureState> factors, std::size_t boundary);

  /// psi1^{(x)k} (x) psi2^{(x)l}
  static ProductState comparator_input(const PureState& psi1,
                                       const PureState& psi2, int k, int l);

  const std::vector<PureState>& factors() const noexcept { return factors_; }
  std::size_t boundary() const noexcept { return boundary_; }
  std::size_t size() const noexcept { return factors_.size(); }
  std::size_t local_dimension() const noexcept {
    return factors_.front().dimension();
  }

  /// Full d^n amplitude vector; factor 0 is the most significant digit.
  Eigen::VectorXcd to_vector() const;

 private:
  std::vector<PureState> factors_;
  std::size_t boundary_;
};

/// Haar-distributed pure state: 2d independent standard normals form d
/// complex amplitudes, then the vector is normalized. d = 1 returns (1).
PureState haar_random_state(int d, RandomStream& rng);

inline constexpr std::size_t kMaxPermutationSites = 8;

/// <Psi|P_sym|Psi> by explicit enumeration of all n! permutations. Each term
/// is the product of single-system inner products <f_i|f_sigma(i)>, computed
/// afresh per permutation. Throws std::invalid_argument for n > 8.
double sym_overlap_permutation_sum(const ProductState& state);
double sym_overlap_permutation_sum(const PureState& psi1, const PureState& psi2,
                                   int k, int l);

inline constexpr std::size_t kMaxProjectorDimension = 1024;

/// Dense symmetric-subspace projector (1/n!) sum_sigma M_sigma on the n-fold
/// tensor power of C^d. Throws std::invalid_argument when d^n > 1024.
Eigen::MatrixXcd sym_projector_matrix(int d, int n);

MCEstimate mc_average_success(const EnsembleSpec& spec,
                              const MonteCarloConfig& config);

/// Monte Carlo estimate of the Haar average of |<psi1|psi2>|^{2m}.
MCEstimate mc_mean_overlap_power(int d, int m, const MonteCarloConfig& config);

inline constexpr double kDefaultQuadratureHalfWidth = 8.0;
inline constexpr int kDefaultQuadraturePoints = 201;

/// Coherent-state success probability from the failure integral
///   1 - (k+l)/pi * Int exp(-k|a1 - b|^2 - l|a2 - b|^2) d^2b,
/// evaluated with a tensor-product trapezoid rule on a square centered at
/// (k a1 + l a2)/(k+l) with half-width half_width / sqrt(k+l) per axis.
double coherent_failure_quadrature(
    Complex alpha1, Complex alpha2, int k, int l,
    double half_width = kDefaultQuadratureHalfWidth,
    int points_per_axis = kDefaultQuadraturePoints);

/// |<alpha|beta>|^2 from number-basis expansions truncated at `cutoff`.
/// Throws std::invalid_argument when |alpha| or |beta| > sqrt(cutoff)/2.
double fock_overlap_check(Complex alpha, Complex beta, int cutoff);

}  // namespace ucomp
