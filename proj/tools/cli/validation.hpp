#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "output.hpp"
#include "ucomp/coherent_comparator.hpp"
#include "ucomp/monte_carlo.hpp"

namespace ucomp::cli {

enum class Suite { oracle, lemma, coherent, all };

/// One invariant check. It passes iff max_deviation <= tolerance; for
/// statistical checks the deviation is the largest |z| score, for boolean
/// checks it is the number of failing cases.
struct InvariantResult {
  std::string suite;
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::int64_t cases = 0;

  bool passed() const noexcept { return max_deviation <= tolerance; }
};

/// Closed forms under test. The suites compare these against the oracles,
/// so substituting a deliberately broken formula must make them fail.
struct ClosedForms {
  std::function<double(double x, int k, int l)> pure_success;
  std::function<double(const CoherentPair&)> coherent_success;

  static ClosedForms reference();
};

std::vector<InvariantResult> run_validation(
    Suite suite, const MonteCarloConfig& config,
    const ClosedForms& forms = ClosedForms::reference());

Table validation_table(const std::vector<InvariantResult>& results);

}  // namespace ucomp::cli
