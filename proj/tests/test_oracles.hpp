#pragma once

// Test-only reference computations. None of these call into the library
// paths they are used to check.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <Eigen/Dense>

namespace ucomp::testing {

/// Number of multisets of size n drawn from d symbols, by enumeration of
/// sorted index tuples (the symmetric basis monomials).
inline std::size_t count_symmetric_monomials(int d, int n) {
  std::set<std::vector<int>> seen;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> sorted = digits;
    std::sort(sorted.begin(), sorted.end());
    seen.insert(sorted);
    int pos = n - 1;
    while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == d - 1) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
  return seen.size();
}

/// Pascal-triangle binomial in double; exact for the small n used in tests.
inline double pascal_binom(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  std::vector<double> row{1.0};
  for (int i = 1; i <= n; ++i) {
    std::vector<double> next(row.size() + 1, 1.0);
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(r)];
}

/// (1/n!) sum over all n! permutation matrices, enumerated one by one.
inline Eigen::MatrixXcd direct_symmetrizer(int d, int n) {
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= static_cast<std::size_t>(d);
  const auto idim = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(idim, idim);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::size_t count = 0;
  std::vector<std::size_t> digits(static_cast<std::size_t>(n));
  do {
    for (std::size_t idx = 0; idx < dim; ++idx) {
      std::size_t rest = idx;
      for (int s = n - 1; s >= 0; --s) {
        digits[static_cast<std::size_t>(s)] = rest % static_cast<std::size_t>(d);
        rest /= static_cast<std::size_t>(d);
      }
      std::size_t target = 0;
      for (int s = 0; s < n; ++s) {
        target = target * static_cast<std::size_t>(d) +
                 digits[static_cast<std::size_t>(sigma[static_cast<std::size_t>(s)])];
      }
      sum(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(idx)) += 1.0;
    }
    ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum / static_cast<double>(count);
}

/// Plain trapezoid reference for a 1-D Gaussian integral over [-a, a].
inline double gaussian_trapezoid(double a, int points) {
  const double h = 2.0 * a / (points - 1);
  double s = 0.0;
  for (int i = 0; i < points; ++i) {
    const double t = -a + h * i;
    const double w = (i == 0 || i == points - 1) ? 0.5 : 1.0;
    s += w * std::exp(-t * t);
  }
  return s * h;
}

}  // namespace ucomp::testing
