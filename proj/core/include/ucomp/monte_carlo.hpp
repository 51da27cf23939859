#pragma once

#include <cstdint>
#include <functional>
#include <random>

namespace ucomp {

using RandomStream = std::mt19937_64;

/// Independent stream for one worker, derived only from (seed, worker).
RandomStream substream(std::uint64_t seed, std::uint32_t worker);

struct MonteCarloConfig {
  std::uint64_t seed = 42;
  std::uint64_t samples = 100000;
  std::uint32_t workers = 1;

  /// Throws std::invalid_argument unless samples >= 1 and workers >= 1.
  void validate() const;
};

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint32_t workers = 1;

  /// (mean - reference) / std_error; zero when both the difference and the
  /// standard error vanish.
  double z_score(double reference) const noexcept;
};

/// Draws one scalar sample from the worker's stream.
using Sampler = std::function<double(RandomStream&)>;

/// Sample mean and standard error of `draw` over config.samples draws.
///
/// Sample indices are split into contiguous blocks, one per worker; worker w
/// draws from substream(seed, w). Per-worker moments are merged in worker
/// order, so the result is a pure function of (seed, samples, workers).
/// `draw` must be safe to call concurrently on distinct streams.
MCEstimate run_monte_carlo(const MonteCarloConfig& config, const Sampler& draw);

}  // namespace ucomp
