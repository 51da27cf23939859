#include "ucomp/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ucomp {

RandomStream substream(std::uint64_t seed, std::uint32_t worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), worker,
                    0x75636f6du};
  return RandomStream(seq);
}

void MonteCarloConfig::validate() const {
  if (samples < 1) {
    throw std::invalid_argument("Monte Carlo: samples must be at least 1");
  }
  if (workers < 1) {
    throw std::invalid_argument("Monte Carlo: workers must be at least 1");
  }
}

double MCEstimate::z_score(double reference) const noexcept {
  const double diff = mean - reference;
  if (std_error == 0.0) {
    return diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff);
  }
  return diff / std_error;
}

namespace {

// Welford accumulator; merge() is Chan et al.'s pairwise update.
struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double v) {
    ++n;
    const double delta = v - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (v - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(n);
    const double nb = static_cast<double>(o.n);
    const double total = na + nb;
    const double delta = o.mean - mean;
    mean += delta * nb / total;
    m2 += o.m2 + delta * delta * na * nb / total;
    n += o.n;
  }
};

}  // namespace

MCEstimate run_monte_carlo(const MonteCarloConfig& config, const Sampler& draw) {
  config.validate();
  const std::uint64_t workers =
      std::min<std::uint64_t>(config.workers, config.samples);
  std::vector<Moments> partial(workers);

  auto run_block = [&](std::uint64_t w) {
    const std::uint64_t begin = w * config.samples / workers;
    const std::uint64_t end = (w + 1) * config.samples / workers;
    RandomStream rng = substream(config.seed, static_cast<std::uint32_t>(w));
    Moments acc;
    for (std::uint64_t i = begin; i < end; ++i) {
      acc.push(draw(rng));
    }
    partial[w] = acc;
  };

  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back(run_block, w);
    }
  }

  Moments total;
  for (const Moments& m : partial) {
    total.merge(m);
  }

  MCEstimate est;
  est.mean = total.mean;
  est.samples = config.samples;
  est.seed = config.seed;
  est.workers = config.workers;
  est.std_error = total.n > 1
                      ? std::sqrt(total.m2 / static_cast<double>(total.n - 1) /
                                  static_cast<double>(total.n))
                      : 0.0;
  return est;
}

}  // namespace ucomp
