#include "ucomp/coherent_comparator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <tuple>

#include "ucomp/combinatorics.hpp"

namespace ucomp {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

CoherentPair CoherentPair::create(Complex alpha1, Complex alpha2, int k, int l) {
  if (k < 1 || l < 1) {
    throw std::invalid_argument("CoherentPair: copy counts must be >= 1");
  }
  if (!finite(alpha1) || !finite(alpha2)) {
    throw std::invalid_argument("CoherentPair: non-finite amplitude");
  }
  return CoherentPair{alpha1, alpha2, k, l};
}

BeamSplitter::BeamSplitter(double transmissivity)
    : t_(transmissivity), r_(1.0 - transmissivity) {
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw std::invalid_argument("BeamSplitter: transmissivity outside [0, 1]");
  }
}

ModeRegister::ModeRegister(std::vector<Complex> amplitudes)
    : modes_(std::move(amplitudes)) {
  if (modes_.empty()) {
    throw std::invalid_argument("ModeRegister: no modes");
  }
  if (!std::all_of(modes_.begin(), modes_.end(), finite)) {
    throw std::invalid_argument("ModeRegister: non-finite amplitude");
  }
}

ModeRegister ModeRegister::copies(Complex alpha, int count) {
  if (count < 1) {
    throw std::invalid_argument("ModeRegister::copies: count must be >= 1");
  }
  return ModeRegister(std::vector<Complex>(static_cast<std::size_t>(count), alpha));
}

double ModeRegister::total_intensity() const noexcept {
  double s = 0.0;
  for (const Complex& a : modes_) s += std::norm(a);
  return s;
}

Probability success_prob_coherent(const CoherentPair& pair) {
  const double k = pair.k;
  const double l = pair.l;
  const double mean = k * l / (k + l) * std::norm(pair.alpha1 - pair.alpha2);
  return Probability(-std::expm1(-mean));
}

Probability success_prob_coherent_at_overlap(OverlapSquared x, int k, int l) {
  if (k < 1 || l < 1) {
    throw std::invalid_argument("success_prob_coherent_at_overlap: copy counts must be >= 1");
  }
  const double weight = static_cast<double>(k) * l / (static_cast<double>(k) + l);
  return Probability(1.0 - std::pow(x.value(), weight));
}

std::pair<Complex, Complex> bs_transform(Complex a, Complex b,
                                         const BeamSplitter& bs) {
  const double st = std::sqrt(bs.transmissivity());
  const double sr = std::sqrt(bs.reflectivity());
  return {st * a + sr * b, -sr * a + st * b};
}

std::vector<BeamSplitter> cascade_transmissivities(int count) {
  if (count < 1) {
    throw std::invalid_argument("cascade_transmissivities: count must be >= 1");
  }
  std::vector<BeamSplitter> out;
  out.reserve(static_cast<std::size_t>(count - 1));
  for (int j = 1; j < count; ++j) {
    out.emplace_back(static_cast<double>(j) / static_cast<double>(j + 1));
  }
  return out;
}

ModeRegister concentrate(const ModeRegister& reg) {
  const auto& in = reg.amplitudes();
  for (const Complex& a : in) {
    if (std::abs(a - in.front()) > kIdenticalModeTolerance) {
      throw std::invalid_argument("concentrate: input modes are not identical");
    }
  }
  std::vector<Complex> modes(in);
  const auto splitters = cascade_transmissivities(static_cast<int>(modes.size()));
  for (std::size_t j = 1; j < modes.size(); ++j) {
    std::tie(modes[0], modes[j]) = bs_transform(modes[0], modes[j], splitters[j - 1]);
  }
  return ModeRegister(std::move(modes));
}

BeamSplitter final_splitter(int k, int l) {
  if (k < 1 || l < 1) {
    throw std::invalid_argument("final_splitter: copy counts must be >= 1");
  }
  return BeamSplitter(static_cast<double>(k) / static_cast<double>(k + l));
}

NetworkResult comparator_network(const CoherentPair& pair) {
  const ModeRegister first = concentrate(ModeRegister::copies(pair.alpha1, pair.k));
  const ModeRegister second = concentrate(ModeRegister::copies(pair.alpha2, pair.l));

  double residual = 0.0;
  for (const ModeRegister* reg : {&first, &second}) {
    for (std::size_t i = 1; i < reg->size(); ++i) {
      residual = std::max(residual, std::abs((*reg)[i]));
    }
  }

  const auto [bright, detector] =
      bs_transform(first[0], second[0], final_splitter(pair.k, pair.l));
  return NetworkResult{detector, bright, residual,
                       Probability(-std::expm1(-std::norm(detector)))};
}

DetectionOutcome sample_detection(Complex detector_amplitude, RandomStream& rng) {
  if (!finite(detector_amplitude)) {
    throw std::invalid_argument("sample_detection: non-finite amplitude");
  }
  const double mean = std::norm(detector_amplitude);
  if (mean == 0.0) {
    return DetectionOutcome{};
  }
  std::poisson_distribution<std::uint64_t> photons(mean);
  const std::uint64_t count = photons(rng);
  return DetectionOutcome{count >= 1, count};
}

MCEstimate click_frequency(Complex detector_amplitude,
                           const MonteCarloConfig& config) {
  return run_monte_carlo(config, [detector_amplitude](RandomStream& rng) {
    return sample_detection(detector_amplitude, rng).clicked ? 1.0 : 0.0;
  });
}

std::strong_ordering copy_tradeoff(int m, int n, int k, int l) {
  if (m < 1 || n < 1 || k < 1 || l < 1) {
    throw std::invalid_argument("copy_tradeoff: copy counts must be >= 1");
  }
  // mn/(m+n) vs kl/(k+l)  <=>  mn(k+l) vs kl(m+n)
  const BigInt lhs = BigInt(m) * n * (BigInt(k) + l);
  const BigInt rhs = BigInt(k) * l * (BigInt(m) + n);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace ucomp
