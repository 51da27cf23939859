#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "output.hpp"
#include "ucomp/monte_carlo.hpp"

namespace ucomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Options shared by every subcommand.
struct RunConfig {
  std::uint64_t seed = 42;
  std::uint64_t samples = 100000;
  std::uint32_t workers = 1;
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path = "-";  // "-" is standard output

  MonteCarloConfig monte_carlo() const { return {seed, samples, workers}; }
};

/// Parses "re,im". Returns nullopt on anything else.
std::optional<std::complex<double>> parse_complex(std::string_view text);

/// Parses "k:l". Returns nullopt on anything else.
std::optional<std::pair<int, int>> parse_copy_pair(std::string_view text);

Table compare_pure_table(double x, int k, int l);

struct CoherentOptions {
  std::complex<double> alpha1;
  std::complex<double> alpha2;
  int k = 1;
  int l = 1;
  bool simulate = false;
  /// Empirical click sampling runs only when set (and simulate is on).
  std::optional<std::uint64_t> click_samples;
};

Table compare_coherent_table(const CoherentOptions& opts, const RunConfig& config);

Table average_table(int d, int k, int l, bool with_mc, const RunConfig& config);

Table figure1_table(const std::vector<std::pair<int, int>>& pairs, int grid_points);

Table figure2_table(int d_max, const std::vector<int>& k_list);

/// Full command-line entry point. Tables go to `out` (or --out), diagnostics
/// to `err`. Returns 0 on success, 1 on a failed validation, 2 on a usage or
/// configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ucomp::cli
