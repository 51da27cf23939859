#include "ucomp/combinatorics.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_oracles.hpp"

using namespace ucomp;

TEST(combinatorics, binom_examples) {
  EXPECT_EQ(binom(4, 2), 6);
  EXPECT_EQ(binom(5, 0), 1);
  EXPECT_EQ(binom(3, 5), 0);
  EXPECT_EQ(binom(3, -1), 0);
  EXPECT_EQ(binom(0, 0), 1);
}

TEST(combinatorics, binom_is_exact_beyond_64_bits) {
  // C(120, 60) = 9.66e34, far past uint64.
  EXPECT_EQ(binom(120, 60),
            BigInt("96614908840363322603893139521372656"));
  EXPECT_EQ(binom(120, 60), binom(119, 59) + binom(119, 60));
}

TEST(combinatorics, binom_symmetry_and_pascal) {
  for (std::uint64_t n = 1; n <= 70; ++n) {
    for (std::int64_t r = 0; r <= static_cast<std::int64_t>(n); ++r) {
      ASSERT_EQ(binom(n, r), binom(n, static_cast<std::int64_t>(n) - r));
      ASSERT_EQ(binom(n, r), binom(n - 1, r - 1) + binom(n - 1, r));
    }
  }
}

TEST(combinatorics, sym_dim_examples) {
  EXPECT_EQ(sym_dim(2, 2).value, 3);
  EXPECT_EQ(sym_dim(3, 2).value, 6);
  for (std::uint64_t d = 1; d <= 6; ++d) {
    EXPECT_EQ(sym_dim(d, 0).value, 1);
  }
  EXPECT_THROW(sym_dim(0, 3), std::invalid_argument);
}

TEST(combinatorics, sym_dim_matches_monomial_enumeration) {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 1; n <= 5; ++n) {
      EXPECT_EQ(sym_dim(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(n)).value,
                ucomp::testing::count_symmetric_monomials(d, n))
          << "d=" << d << " n=" << n;
    }
  }
}

TEST(combinatorics, sym_dim_pascal_recurrence) {
  for (std::uint64_t d = 2; d <= 15; ++d) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      ASSERT_EQ(sym_dim(d, n).value, sym_dim(d - 1, n).value + sym_dim(d, n - 1).value);
    }
  }
}

TEST(combinatorics, lemma_examples) {
  EXPECT_TRUE(lemma_b_applies(SignedPolynomial({1.0, -1.0})));
  EXPECT_FALSE(lemma_b_applies(SignedPolynomial({-1.0, 1.0})));
  EXPECT_TRUE(lemma_b_applies(SignedPolynomial({0.5, 0.5, -1.0})));
}

TEST(combinatorics, lemma_rejects_nonzero_sum_and_double_sign_change) {
  EXPECT_FALSE(lemma_b_applies(SignedPolynomial({1.0, -0.5})));
  EXPECT_FALSE(lemma_b_applies(SignedPolynomial({1.0, -2.0, 1.0})));
  EXPECT_TRUE(lemma_b_applies(SignedPolynomial({0.0, 0.0})));
}

TEST(combinatorics, lemma_tolerance_is_relative_to_scale) {
  // Sum is 1e-9 in absolute terms but 1e-21 relative to max |a|.
  EXPECT_TRUE(lemma_b_applies(SignedPolynomial({1e12, -1e12 + 1e-9})));
  EXPECT_FALSE(lemma_b_applies(SignedPolynomial({1e-3, -1e-3 + 1e-12})));
}

TEST(combinatorics, sign_split_index) {
  EXPECT_EQ(SignedPolynomial({1.0, -1.0}).r0(), 0);
  EXPECT_EQ(SignedPolynomial({0.5, 0.5, -1.0}).r0(), 1);
  EXPECT_EQ(SignedPolynomial({-1.0, -2.0}).r0(), -1);
  EXPECT_EQ(SignedPolynomial({1.0, 2.0}).r0(), 1);
  EXPECT_FALSE(SignedPolynomial({-1.0, 1.0}).r0().has_value());
}

TEST(combinatorics, empty_polynomial_rejected) {
  EXPECT_THROW(SignedPolynomial(std::vector<double>{}), std::invalid_argument);
}

TEST(combinatorics, poly_min_examples) {
  EXPECT_DOUBLE_EQ(poly_min_on_unit_interval(SignedPolynomial({1.0, -1.0}), 11), 0.0);
  EXPECT_DOUBLE_EQ(poly_min_on_unit_interval(SignedPolynomial({0.0, 1.0}), 11), 0.0);
  EXPECT_DOUBLE_EQ(poly_min_on_unit_interval(SignedPolynomial({1.0, -2.0, 1.0}), 101), 0.0);
  EXPECT_THROW(poly_min_on_unit_interval(SignedPolynomial({1.0}), 1), std::invalid_argument);
}

// Random polynomials built to satisfy the lemma's hypotheses: nonnegative
// head, nonpositive tail, rescaled so the tail cancels the head at x = 1.
TEST(combinatorics, lemma_conclusion_holds_for_random_admissible_polynomials) {
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<int> degree(1, 14);
  std::uniform_real_distribution<double> mag(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const int r = degree(rng);
    std::uniform_int_distribution<int> split(0, r - 1);
    const int r0 = split(rng);
    std::vector<double> a(static_cast<std::size_t>(r) + 1);
    double head = 0.0;
    double tail = 0.0;
    for (int m = 0; m <= r; ++m) {
      const double v = mag(rng);
      if (m <= r0) {
        a[static_cast<std::size_t>(m)] = v;
        head += v;
      } else {
        a[static_cast<std::size_t>(m)] = -v;
        tail += v;
      }
    }
    if (tail == 0.0 || head == 0.0) continue;
    for (int m = r0 + 1; m <= r; ++m) a[static_cast<std::size_t>(m)] *= head / tail;
    const SignedPolynomial p(a);
    ASSERT_TRUE(lemma_b_applies(p)) << "trial " << trial;
    ASSERT_GE(poly_min_on_unit_interval(p, 1001), -kLemmaTolerance) << "trial " << trial;
  }
}

TEST(combinatorics, from_exact_and_negation) {
  const std::vector<Rational> exact{Rational(1, 3), Rational(-1, 3)};
  const SignedPolynomial p = SignedPolynomial::from_exact(exact);
  EXPECT_DOUBLE_EQ(p.coefficients()[0], 1.0 / 3.0);
  EXPECT_EQ(p.degree(), 1u);
  EXPECT_DOUBLE_EQ(p(0.5), 1.0 / 6.0);
  EXPECT_FALSE(p.negated().r0().has_value());
}
