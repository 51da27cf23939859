#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "ucomp/finite_comparator.hpp"
#include "ucomp/monte_carlo.hpp"

namespace ucomp {

using Complex = std::complex<double>;

/// k copies of |alpha1> and l copies of |alpha2>.
struct CoherentPair {
  Complex alpha1;
  Complex alpha2;
  int k = 1;
  int l = 1;

  /// Throws std::invalid_argument unless k, l >= 1 and amplitudes are finite.
  static CoherentPair create(Complex alpha1, Complex alpha2, int k, int l);
};

/// Lossless two-mode beam splitter with transmissivity T and reflectivity
/// R = 1 - T.
class BeamSplitter {
 public:
  /// Throws std::invalid_argument unless T is in [0, 1].
  explicit BeamSplitter(double transmissivity);

  double transmissivity() const noexcept { return t_; }
  double reflectivity() const noexcept { return r_; }

 private:
  double t_;
  double r_;
};

/// One coherent amplitude per optical mode.
class ModeRegister {
 public:
  /// Throws std::invalid_argument on an empty list or non-finite entries.
  explicit ModeRegister(std::vector<Complex> amplitudes);

  /// `count` copies of the same amplitude.
  static ModeRegister copies(Complex alpha, int count);

  std::size_t size() const noexcept { return modes_.size(); }
  const std::vector<Complex>& amplitudes() const noexcept { return modes_; }
  Complex operator[](std::size_t i) const { return modes_.at(i); }

  /// Mean photon number summed over all modes.
  double total_intensity() const noexcept;

 private:
  std::vector<Complex> modes_;
};

struct DetectionOutcome {
  bool clicked = false;
  std::uint64_t photon_count = 0;
};

/// 1 - exp(-(kl/(k+l)) |alpha1 - alpha2|^2)
Probability success_prob_coherent(const CoherentPair& pair);

/// Coherent success probability for a pair whose squared overlap
/// exp(-|alpha1 - alpha2|^2) equals x: 1 - x^{kl/(k+l)}, and 1 at x = 0.
Probability success_prob_coherent_at_overlap(OverlapSquared x, int k, int l);

/// |a>|b> -> |sqrt(T) a + sqrt(R) b>|-sqrt(R) a + sqrt(T) b>
std::pair<Complex, Complex> bs_transform(Complex a, Complex b,
                                         const BeamSplitter& bs);

/// Splitters T_j = j/(j+1), j = 1..count-1, of the concentration cascade.
std::vector<BeamSplitter> cascade_transmissivities(int count);

inline constexpr double kIdenticalModeTolerance = 1e-12;

/// Funnels count identical coherent modes into mode 0. Splitter j mixes the
/// accumulated mode 0 (amplitude sqrt(j) alpha) with fresh copy j, leaving
/// sqrt(j+1) alpha in mode 0 and vacuum in mode j. Throws
/// std::invalid_argument if the inputs differ by more than 1e-12.
ModeRegister concentrate(const ModeRegister& reg);

/// Final splitter with k R_f = l T_f, i.e. T_f = k/(k+l).
BeamSplitter final_splitter(int k, int l);

struct NetworkResult {
  /// Second output of the final splitter, sqrt(kl/(k+l)) (alpha2 - alpha1).
  /// This is the monitored port; it is vacuum whenever alpha1 == alpha2.
  Complex detector_amplitude;
  /// First output, (k alpha1 + l alpha2) / sqrt(k+l).
  Complex bright_amplitude;
  /// Largest residual amplitude left in the cascades' idle modes.
  double max_residual = 0.0;
  Probability success_prob{0.0};
};

/// Runs both concentration cascades and the final splitter.
NetworkResult comparator_network(const CoherentPair& pair);

/// Ideal number-resolving detection of a coherent mode: a Poisson photon
/// count with mean |amplitude|^2.
DetectionOutcome sample_detection(Complex detector_amplitude, RandomStream& rng);

/// Monte Carlo click frequency over config.samples detections.
MCEstimate click_frequency(Complex detector_amplitude,
                           const MonteCarloConfig& config);

/// Orders mn/(m+n) against kl/(k+l) by exact integer cross-multiplication.
std::strong_ordering copy_tradeoff(int m, int n, int k, int l);

}  // namespace ucomp
