#include "validation.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ucomp/brute_oracle.hpp"
#include "ucomp/combinatorics.hpp"
#include "ucomp/finite_comparator.hpp"

namespace ucomp::cli {

namespace {

constexpr double kOracleTol = 1e-10;
constexpr double kMatrixTol = 1e-12;
constexpr double kZLimit = 3.0;
constexpr std::size_t kGrid = 1001;

// Fixed per-invariant stream ids, disjoint from Monte Carlo worker ids.
enum Stream : std::uint32_t {
  kPermutationStream = 0x10000,
  kMatrixStream,
  kNoErrorStream,
  kHaarMomentStream,
  kNetworkStream,
  kQuadratureStream,
  kEnergyStream,
  kCascadeStream,
};

class Tracker {
 public:
  Tracker(std::string suite, std::string name, double tolerance)
      : result_{std::move(suite), std::move(name), 0.0, tolerance, 0} {}

  void observe(double deviation) {
    ++result_.cases;
    if (std::isnan(deviation)) deviation = INFINITY;
    result_.max_deviation = std::max(result_.max_deviation, deviation);
  }
  void fail_if(bool failed) { observe(failed ? 1.0 : 0.0); }

  InvariantResult done() const { return result_; }

 private:
  InvariantResult result_;
};

double grid_x(std::size_t i) {
  return static_cast<double>(i) / static_cast<double>(kGrid - 1);
}

// (d, n) pairs with 2 <= n <= 8 and d^n <= max_dim.
std::vector<std::pair<int, int>> tensor_shapes(std::size_t max_dim) {
  std::vector<std::pair<int, int>> out;
  for (int d = 2; static_cast<std::size_t>(d * d) <= max_dim; ++d) {
    std::size_t dim = static_cast<std::size_t>(d);
    for (int n = 2; n <= 8; ++n) {
      dim *= static_cast<std::size_t>(d);
      if (dim > max_dim) break;
      out.emplace_back(d, n);
    }
  }
  return out;
}

Complex random_amplitude(RandomStream& rng, double radius) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  while (true) {
    const Complex z(unit(rng), unit(rng));
    if (std::abs(z) <= 1.0) return radius * z;
  }
}

// ---------------------------------------------------------------- oracle

void oracle_suite(const MonteCarloConfig& config, const ClosedForms& forms,
                  std::vector<InvariantResult>& out) {
  const std::string suite = "oracle";
  {
    Tracker t(suite, "permutation_sum_vs_closed_form", kOracleTol);
    RandomStream rng = substream(config.seed, kPermutationStream);
    for (int d : {2, 3}) {
      for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k < n; ++k) {
          const int l = n - k;
          for (int trial = 0; trial < 100; ++trial) {
            const PureState a = haar_random_state(d, rng);
            const PureState b = haar_random_state(d, rng);
            const double x = std::min(1.0, overlap_squared(a, b));
            t.observe(std::abs((1.0 - forms.pure_success(x, k, l)) -
                               sym_overlap_permutation_sum(a, b, k, l)));
          }
        }
      }
    }
    out.push_back(t.done());
  }

  Tracker matrix_vs_perm(suite, "projector_matrix_vs_permutation_sum", kOracleTol);
  Tracker hermitian(suite, "projector_hermitian", kMatrixTol);
  Tracker idempotent(suite, "projector_idempotent", kMatrixTol);
  Tracker trace(suite, "projector_trace_equals_sym_dim", kOracleTol);
  Tracker no_error(suite, "no_error_condition", kMatrixTol);
  RandomStream rng = substream(config.seed, kMatrixStream);
  RandomStream rng_no_error = substream(config.seed, kNoErrorStream);
  for (const auto& [d, n] : tensor_shapes(256)) {
    const Eigen::MatrixXcd p = sym_projector_matrix(d, n);
    hermitian.observe((p - p.adjoint()).cwiseAbs().maxCoeff());
    idempotent.observe((p * p - p).cwiseAbs().maxCoeff());
    const double dim = sym_dim(static_cast<std::uint64_t>(d),
                               static_cast<std::uint64_t>(n))
                           .value.convert_to<double>();
    trace.observe(std::abs(p.trace() - Complex(dim, 0.0)));
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<PureState> factors;
      for (int i = 0; i < n; ++i) factors.push_back(haar_random_state(d, rng));
      const ProductState state(std::move(factors), static_cast<std::size_t>(n / 2));
      const Eigen::VectorXcd v = state.to_vector();
      const Complex via_matrix = v.dot(p * v);
      matrix_vs_perm.observe(
          std::abs(via_matrix - Complex(sym_overlap_permutation_sum(state), 0.0)));
    }
    for (int trial = 0; trial < 100; ++trial) {
      const PureState psi = haar_random_state(d, rng_no_error);
      const Eigen::VectorXcd v =
          ProductState(std::vector<PureState>(static_cast<std::size_t>(n), psi), 0)
              .to_vector();
      no_error.observe(std::abs(v.squaredNorm() - v.dot(p * v)));
    }
  }
  out.push_back(matrix_vs_perm.done());
  out.push_back(hermitian.done());
  out.push_back(idempotent.done());
  out.push_back(trace.done());
  out.push_back(no_error.done());

  {
    Tracker t(suite, "haar_basis_moment_d2", kZLimit);
    MonteCarloConfig cfg = config;
    cfg.seed = config.seed ^ kHaarMomentStream;
    const MCEstimate est = run_monte_carlo(cfg, [](RandomStream& r) {
      return std::norm(haar_random_state(2, r).amplitudes()[0]);
    });
    t.observe(std::abs(est.z_score(0.5)));
    out.push_back(t.done());
  }
  {
    Tracker t(suite, "mc_average_success", kZLimit);
    for (int d : {2, 3}) {
      for (const auto& [k, l] : {std::pair{1, 1}, std::pair{2, 2}}) {
        const EnsembleSpec spec = EnsembleSpec::create(k, l, d);
        // The reference is the closed form under test, averaged exactly.
        const MCEstimate est = mc_average_success(spec, config);
        t.observe(std::abs(est.z_score(avg_success(spec).value())));
      }
    }
    out.push_back(t.done());
  }
  {
    Tracker t(suite, "mc_mean_overlap_power", kZLimit);
    for (int d : {2, 3}) {
      for (int m = 1; m <= 3; ++m) {
        const MCEstimate est = mc_mean_overlap_power(d, m, config);
        t.observe(std::abs(est.z_score(mean_overlap_power(d, m).value())));
      }
    }
    out.push_back(t.done());
  }
  {
    Tracker t(suite, "fock_overlap_vs_closed_form", kOracleTol);
    const std::pair<Complex, Complex> cases[] = {
        {0.0, 1.0}, {1.0, -1.0}, {Complex(0.5, 0.5), Complex(-1.0, 0.25)},
        {Complex(2.0, 0.0), Complex(0.0, 1.5)}};
    for (const auto& [a, b] : cases) {
      t.observe(std::abs(fock_overlap_check(a, b, 60) - std::exp(-std::norm(a - b))));
    }
    out.push_back(t.done());
  }
}

// ----------------------------------------------------------------- lemma

void lemma_suite(const ClosedForms& forms, std::vector<InvariantResult>& out) {
  const std::string suite = "lemma";
  {
    Tracker t(suite, "sym_dim_pascal_recurrence", 0.0);
    for (std::uint64_t d = 2; d <= 12; ++d) {
      for (std::uint64_t n = 1; n <= 40; ++n) {
        t.fail_if(sym_dim(d, n).value !=
                  sym_dim(d - 1, n).value + sym_dim(d, n - 1).value);
      }
    }
    out.push_back(t.done());
  }
  {
    Tracker t(suite, "binom_symmetry", 0.0);
    for (std::uint64_t n = 0; n <= 80; ++n) {
      for (std::int64_t r = 0; r <= static_cast<std::int64_t>(n); ++r) {
        t.fail_if(binom(n, r) != binom(n, static_cast<std::int64_t>(n) - r));
      }
    }
    out.push_back(t.done());
  }
  {
    Tracker t(suite, "vandermonde_closure", 0.0);
    for (int d = 2; d <= 5; ++d) {
      for (int k = 1; k <= 30; ++k) {
        for (int l = 1; l <= 30; ++l) {
          const auto c = failure_coefficients(k, l);
          Rational direct = 1;
          for (std::size_t m = 0; m < c.size(); ++m) {
            direct -= c[m] * mean_overlap_power_exact(d, static_cast<int>(m));
          }
          t.fail_if(direct != avg_success_exact(EnsembleSpec::create(k, l, d)));
        }
      }
    }
    out.push_back(t.done());
  }
  {
    Tracker t(suite, "success_symmetric_in_k_l", 0.0);
    for (int k = 1; k <= 12; ++k) {
      for (int l = 1; l <= 12; ++l) {
        for (std::size_t i = 0; i < kGrid; i += 10) {
          const double x = grid_x(i);
          t.observe(std::abs(forms.pure_success(x, k, l) - forms.pure_success(x, l, k)));
        }
      }
    }
    out.push_back(t.done());
  }
  {
    Tracker copies(suite, "extra_copy_never_hurts", kLemmaTolerance);
    Tracker overlap(suite, "success_nonincreasing_in_overlap", kLemmaTolerance);
    for (int k = 1; k <= 12; ++k) {
      for (int l = 1; l <= 12; ++l) {
        double previous = forms.pure_success(0.0, k, l);
        for (std::size_t i = 0; i < kGrid; ++i) {
          const double x = grid_x(i);
          const double p = forms.pure_success(x, k, l);
          copies.observe(std::max(0.0, -(forms.pure_success(x, k + 1, l) - p)));
          overlap.observe(std::max(0.0, p - previous));
          previous = p;
        }
      }
    }
    out.push_back(copies.done());
    out.push_back(overlap.done());
  }
  {
    Tracker sign(suite, "lambda_sign_pattern", kLemmaTolerance);
    Tracker argmax(suite, "balanced_split_is_optimal", kLemmaTolerance);
    for (int total = 2; total <= 24; ++total) {
      for (std::size_t i = 0; i < kGrid; ++i) {
        const double x = grid_x(i);
        double best = -INFINITY;
        for (int k = 1; k < total; ++k) {
          best = std::max(best, forms.pure_success(x, k, total - k));
        }
        argmax.observe(best - forms.pure_success(x, optimal_split(total), total - optimal_split(total)));
        for (int k = 1; k <= total - 2; ++k) {
          const double lambda = forms.pure_success(x, k + 1, total - k - 1) -
                                forms.pure_success(x, k, total - k);
          // Moving a copy helps while the first ensemble is the smaller one.
          sign.observe(2 * k < total ? std::max(0.0, -lambda) : std::max(0.0, lambda));
        }
      }
    }
    out.push_back(sign.done());
    out.push_back(argmax.done());
  }
  {
    Tracker hyp(suite, "lemma_hypotheses_delta_lambda", 0.0);
    Tracker concl(suite, "lemma_conclusion_on_grid", kLemmaTolerance);
    auto check = [&](const SignedPolynomial& p) {
      hyp.fail_if(!lemma_b_applies(p));
      concl.observe(std::max(0.0, -poly_min_on_unit_interval(p, kGrid) / std::max(p.scale(), 1e-300)));
    };
    for (int k = 1; k <= 12; ++k) {
      for (int l = 1; l <= 12; ++l) {
        check(delta_extra_copy(OverlapSquared(0.0), EnsembleSpec::create(k, l, 2)).poly);
      }
    }
    for (int total = 3; total <= 24; ++total) {
      for (int k = 1; k <= total - 2; ++k) {
        const SignedPolynomial p = lambda_polynomial(k, total);
        check(2 * k < total ? p : p.negated());
      }
    }
    out.push_back(hyp.done());
    out.push_back(concl.done());
  }
  {
    // Coefficient a_m of the extra-copy gain is nonnegative exactly when
    // m <= (k+1) l / (k+l+1); compared in exact arithmetic.
    Tracker t(suite, "delta_sign_threshold", 0.0);
    for (int k = 1; k <= 12; ++k) {
      for (int l = 1; l <= 12; ++l) {
        const auto a = delta_coefficients(k, l);
        for (std::size_t m = 0; m < a.size(); ++m) {
          const bool predicted_nonneg =
              static_cast<std::int64_t>(m) * (k + l + 1) <= (k + 1) * l;
          t.fail_if(predicted_nonneg != (a[m] >= 0));
        }
      }
    }
    out.push_back(t.done());
  }
  {
    Tracker t(suite, "average_approaches_one_d2_k60", 0.0);
    const Rational v = avg_success_exact(EnsembleSpec::create(60, 60, 2));
    t.fail_if(v < Rational(96, 100));
    out.push_back(t.done());
  }
}

// -------------------------------------------------------------- coherent

void coherent_suite(const MonteCarloConfig& config, const ClosedForms& forms,
                    std::vector<InvariantResult>& out) {
  const std::string suite = "coherent";
  {
    Tracker t(suite, "network_vs_closed_form", kMatrixTol);
    RandomStream rng = substream(config.seed, kNetworkStream);
    std::uniform_int_distribution<int> copies(1, 10);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto pair = CoherentPair::create(random_amplitude(rng, 3.0),
                                             random_amplitude(rng, 3.0),
                                             copies(rng), copies(rng));
      t.observe(std::abs(comparator_network(pair).success_prob.value() -
                         forms.coherent_success(pair)));
    }
    out.push_back(t.done());
  }
  {
    Tracker t(suite, "quadrature_vs_closed_form", 1e-8);
    RandomStream rng = substream(config.seed, kQuadratureStream);
    std::uniform_int_distribution<int> copies(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
      const auto pair = CoherentPair::create(random_amplitude(rng, 2.0),
                                             random_amplitude(rng, 2.0),
                                             copies(rng), copies(rng));
      t.observe(std::abs(coherent_failure_quadrature(pair.alpha1, pair.alpha2,
                                                     pair.k, pair.l) -
                         forms.coherent_success(pair)));
    }
    out.push_back(t.done());
  }
  {
    Tracker energy(suite, "energy_conservation", kMatrixTol);
    Tracker vacuum(suite, "cascade_leaves_vacuum", kMatrixTol);
    RandomStream rng = substream(config.seed, kEnergyStream);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
      const Complex a = random_amplitude(rng, 3.0);
      const Complex b = random_amplitude(rng, 3.0);
      const auto [c, e] = bs_transform(a, b, BeamSplitter(unit(rng)));
      energy.observe(std::abs(std::norm(a) + std::norm(b) - std::norm(c) - std::norm(e)));
    }
    RandomStream cascade_rng = substream(config.seed, kCascadeStream);
    for (int count = 1; count <= 10; ++count) {
      for (int trial = 0; trial < 100; ++trial) {
        const Complex alpha = random_amplitude(cascade_rng, 3.0);
        const ModeRegister in = ModeRegister::copies(alpha, count);
        const ModeRegister outm = concentrate(in);
        energy.observe(std::abs(in.total_intensity() - outm.total_intensity()));
        vacuum.observe(std::abs(outm[0] - std::sqrt(static_cast<double>(count)) * alpha));
        for (std::size_t i = 1; i < outm.size(); ++i) {
          vacuum.observe(std::abs(outm[i]));
        }
      }
    }
    out.push_back(energy.done());
    out.push_back(vacuum.done());
  }
  {
    Tracker t(suite, "coherent_dominates_generic", kLemmaTolerance);
    for (int k = 1; k <= 10; ++k) {
      for (int l = 1; l <= 10; ++l) {
        for (std::size_t i = 0; i < kGrid; i += 5) {
          const double x = grid_x(i);
          double p_coh = 1.0;
          if (x > 0.0) {
            const double gap = std::sqrt(-std::log(x));
            p_coh = forms.coherent_success(CoherentPair::create(0.0, gap, k, l));
          }
          t.observe(std::max(0.0, forms.pure_success(x, k, l) - p_coh));
        }
      }
    }
    out.push_back(t.done());
  }
  {
    Tracker extra(suite, "extra_copy_tradeoff", 0.0);
    for (int k = 1; k <= 100; ++k) {
      for (int l = 1; l <= 100; ++l) {
        extra.fail_if(copy_tradeoff(k + 1, l, k, l) != std::strong_ordering::greater);
      }
    }
    out.push_back(extra.done());
    Tracker fixed(suite, "fixed_total_optimum", 0.0);
    for (int total = 2; total <= 100; ++total) {
      const int best = optimal_split(total);
      for (int k = 1; k < total; ++k) {
        fixed.fail_if(copy_tradeoff(best, total - best, k, total - k) ==
                      std::strong_ordering::less);
      }
    }
    out.push_back(fixed.done());
  }
  {
    Tracker t(suite, "detection_click_frequency", kZLimit);
    for (double intensity : {0.5, 1.0, 4.0}) {
      const MCEstimate est = click_frequency(Complex(std::sqrt(intensity), 0.0), config);
      t.observe(std::abs(est.z_score(-std::expm1(-intensity))));
    }
    out.push_back(t.done());
  }
}

}  // namespace

ClosedForms ClosedForms::reference() {
  return ClosedForms{
      [](double x, int k, int l) { return PureComparator(k, l)(x); },
      [](const CoherentPair& pair) { return success_prob_coherent(pair).value(); }};
}

std::vector<InvariantResult> run_validation(Suite suite,
                                            const MonteCarloConfig& config,
                                            const ClosedForms& forms) {
  config.validate();
  std::vector<InvariantResult> out;
  if (suite == Suite::oracle || suite == Suite::all) oracle_suite(config, forms, out);
  if (suite == Suite::lemma || suite == Suite::all) lemma_suite(forms, out);
  if (suite == Suite::coherent || suite == Suite::all) coherent_suite(config, forms, out);
  return out;
}

Table validation_table(const std::vector<InvariantResult>& results) {
  Table table({"suite", "invariant", "status", "max_deviation", "tolerance", "cases"});
  for (const auto& r : results) {
    table.add_row({r.suite, r.name, std::string(r.passed() ? "pass" : "fail"),
                   r.max_deviation, r.tolerance, r.cases});
  }
  return table;
}

}  // namespace ucomp::cli
