#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include "CLI11.hpp"
#include "ucomp/brute_oracle.hpp"
#include "ucomp/coherent_comparator.hpp"
#include "ucomp/finite_comparator.hpp"
#include "validation.hpp"

namespace ucomp::cli {

namespace {

std::optional<double> parse_double(std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<int> parse_int(std::string_view text) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

// Usage errors detected after flag parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

std::optional<std::complex<double>> parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos ||
      text.find(',', comma + 1) != std::string_view::npos) {
    return std::nullopt;
  }
  const auto re = parse_double(text.substr(0, comma));
  const auto im = parse_double(text.substr(comma + 1));
  if (!re || !im) return std::nullopt;
  return std::complex<double>(*re, *im);
}

std::optional<std::pair<int, int>> parse_copy_pair(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto k = parse_int(text.substr(0, colon));
  const auto l = parse_int(text.substr(colon + 1));
  if (!k || !l || *k < 1 || *l < 1) return std::nullopt;
  return std::pair{*k, *l};
}

Table compare_pure_table(double x, int k, int l) {
  const EnsembleSpec spec = EnsembleSpec::create(k, l, 2);
  Table table({"x", "k", "l", "p_pure"});
  table.add_row({x, std::int64_t{k}, std::int64_t{l},
                 success_prob_pure(OverlapSquared(x), spec).value()});
  return table;
}

Table compare_coherent_table(const CoherentOptions& opts, const RunConfig& config) {
  const CoherentPair pair = CoherentPair::create(opts.alpha1, opts.alpha2, opts.k, opts.l);
  const double closed = success_prob_coherent(pair).value();

  std::vector<std::string> columns{"alpha1_re", "alpha1_im", "alpha2_re", "alpha2_im",
                                   "k", "l", "p_coherent"};
  std::vector<Cell> row{pair.alpha1.real(), pair.alpha1.imag(), pair.alpha2.real(),
                        pair.alpha2.imag(), std::int64_t{pair.k}, std::int64_t{pair.l},
                        closed};
  if (opts.simulate) {
    const NetworkResult net = comparator_network(pair);
    const double simulated = net.success_prob.value();
    columns.insert(columns.end(), {"detector_re", "detector_im", "p_network",
                                   "network_abs_diff"});
    row.insert(row.end(), {net.detector_amplitude.real(), net.detector_amplitude.imag(),
                           simulated, std::abs(simulated - closed)});
    if (opts.click_samples && *opts.click_samples > 0) {
      MonteCarloConfig mc = config.monte_carlo();
      mc.samples = *opts.click_samples;
      const MCEstimate est = click_frequency(net.detector_amplitude, mc);
      columns.insert(columns.end(), {"click_frequency", "click_std_error", "samples"});
      row.insert(row.end(), {est.mean, est.std_error,
                             static_cast<std::int64_t>(est.samples)});
    }
  }
  Table table(std::move(columns));
  table.add_row(std::move(row));
  return table;
}

Table average_table(int d, int k, int l, bool with_mc, const RunConfig& config) {
  const EnsembleSpec spec = EnsembleSpec::create(k, l, d);
  const double exact = avg_success(spec).value();
  std::vector<std::string> columns{"d", "k", "l", "p_avg"};
  std::vector<Cell> row{std::int64_t{d}, std::int64_t{k}, std::int64_t{l}, exact};
  if (with_mc) {
    const MCEstimate est = mc_average_success(spec, config.monte_carlo());
    columns.insert(columns.end(), {"mc_mean", "mc_std_error", "z_score", "samples"});
    row.insert(row.end(), {est.mean, est.std_error, est.z_score(exact),
                           static_cast<std::int64_t>(est.samples)});
  }
  Table table(std::move(columns));
  table.add_row(std::move(row));
  return table;
}

Table figure1_table(const std::vector<std::pair<int, int>>& pairs, int grid_points) {
  if (pairs.empty()) {
    throw std::invalid_argument("figure1: empty list of copy pairs");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("figure1: grid needs at least two points");
  }
  Table table({"x", "k", "l", "p_pure", "p_coherent"});
  for (const auto& [k, l] : pairs) {
    const PureComparator pure(k, l);
    for (int i = 0; i < grid_points; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(grid_points - 1);
      const OverlapSquared overlap(x);
      table.add_row({x, std::int64_t{k}, std::int64_t{l}, Probability(pure(x)).value(),
                     success_prob_coherent_at_overlap(overlap, k, l).value()});
    }
  }
  return table;
}

Table figure2_table(int d_max, const std::vector<int>& k_list) {
  if (d_max < 2) {
    throw std::invalid_argument("figure2: d-max must be at least 2");
  }
  if (k_list.empty()) {
    throw std::invalid_argument("figure2: empty k list");
  }
  Table table({"d", "k", "p_avg"});
  for (int k : k_list) {
    for (int d = 2; d <= d_max; ++d) {
      table.add_row({std::int64_t{d}, std::int64_t{k},
                     avg_success(EnsembleSpec::create(k, k, d)).value()});
    }
  }
  return table;
}

namespace {

void add_common_flags(CLI::App* cmd, RunConfig& config) {
  static const std::map<std::string, OutputFormat> formats{
      {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
  cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  cmd->add_option("--samples", config.samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--workers", config.workers, "Monte Carlo worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  cmd->add_option("--format", config.output_format, "Output format: csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--out", config.output_path, "Output file, or - for stdout")
      ->capture_default_str();
}

std::complex<double> require_complex(const std::string& text, const char* flag) {
  const auto z = parse_complex(text);
  if (!z) {
    throw UsageError(std::string(flag) + ": expected a complex literal \"re,im\", got \"" +
                     text + "\"");
  }
  return *z;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Optimal unambiguous comparison of quantum state ensembles", "ucomp"};
  app.require_subcommand(1);
  RunConfig config;

  double x = 0.0;
  int k = 1;
  int l = 1;
  int d = 2;

  auto* pure = app.add_subcommand("compare-pure", "Success probability for generic pure states");
  pure->add_option("--x", x, "Squared overlap |<psi1|psi2>|^2")->required()->check(CLI::Range(0.0, 1.0));
  pure->add_option("--k", k, "Copies of the first state")->required()->check(CLI::PositiveNumber);
  pure->add_option("--l", l, "Copies of the second state")->required()->check(CLI::PositiveNumber);
  add_common_flags(pure, config);

  std::string alpha1_text = "0,0";
  std::string alpha2_text = "0,0";
  bool simulate = false;
  auto* coherent = app.add_subcommand("compare-coherent", "Success probability for coherent states");
  coherent->add_option("--alpha1", alpha1_text, "First amplitude as re,im")->required();
  coherent->add_option("--alpha2", alpha2_text, "Second amplitude as re,im")->required();
  coherent->add_option("--k", k, "Copies of |alpha1>")->check(CLI::PositiveNumber)->capture_default_str();
  coherent->add_option("--l", l, "Copies of |alpha2>")->check(CLI::PositiveNumber)->capture_default_str();
  coherent->add_flag("--simulate", simulate, "Run the beam-splitter network simulation");
  add_common_flags(coherent, config);

  bool with_mc = false;
  auto* average = app.add_subcommand("average", "Haar-averaged success probability");
  average->add_option("--d", d, "Hilbert-space dimension")->required()->check(CLI::Range(2, 1 << 20));
  average->add_option("--k", k, "Copies of the first state")->required()->check(CLI::PositiveNumber);
  average->add_option("--l", l, "Copies of the second state")->required()->check(CLI::PositiveNumber);
  average->add_flag("--mc", with_mc, "Also estimate by Monte Carlo over Haar pairs");
  add_common_flags(average, config);

  std::vector<std::string> pair_texts{"1:1", "2:2", "3:3", "4:4"};
  int grid_points = 101;
  auto* fig1 = app.add_subcommand("figure1", "Success probability versus squared overlap");
  fig1->add_option("--pairs", pair_texts, "Copy pairs k:l, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  fig1->add_option("--grid", grid_points, "Number of x grid points")->capture_default_str();
  add_common_flags(fig1, config);

  int d_max = 20;
  std::vector<int> k_list{1, 2, 3, 4};
  auto* fig2 = app.add_subcommand("figure2", "Average success versus dimension for k = l");
  fig2->add_option("--d-max", d_max, "Largest dimension")->capture_default_str();
  fig2->add_option("--k-list", k_list, "Copy numbers k, comma separated")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common_flags(fig2, config);

  static const std::map<std::string, Suite> suites{{"oracle", Suite::oracle},
                                                   {"lemma", Suite::lemma},
                                                   {"coherent", Suite::coherent},
                                                   {"all", Suite::all}};
  Suite suite = Suite::all;
  auto* validate = app.add_subcommand("validate", "Run the invariant suites");
  validate->add_option("--suite", suite, "oracle, lemma, coherent or all")
      ->transform(CLI::CheckedTransformer(suites, CLI::ignore_case));
  add_common_flags(validate, config);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output_path != "-") {
    file.open(config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open output file " << config.output_path << "\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (*pure) {
      write_table(*sink, compare_pure_table(x, k, l), config.output_format);
    } else if (*coherent) {
      CoherentOptions opts;
      opts.alpha1 = require_complex(alpha1_text, "--alpha1");
      opts.alpha2 = require_complex(alpha2_text, "--alpha2");
      opts.k = k;
      opts.l = l;
      opts.simulate = simulate;
      if (coherent->count("--samples") > 0) opts.click_samples = config.samples;
      write_table(*sink, compare_coherent_table(opts, config), config.output_format);
    } else if (*average) {
      write_table(*sink, average_table(d, k, l, with_mc, config), config.output_format);
    } else if (*fig1) {
      std::vector<std::pair<int, int>> pairs;
      for (const std::string& text : pair_texts) {
        if (text.empty()) continue;
        const auto p = parse_copy_pair(text);
        if (!p) throw UsageError("--pairs: expected k:l with k, l >= 1, got \"" + text + "\"");
        pairs.push_back(*p);
      }
      write_table(*sink, figure1_table(pairs, grid_points), config.output_format);
    } else if (*fig2) {
      write_table(*sink, figure2_table(d_max, k_list), config.output_format);
    } else if (*validate) {
      const auto results = run_validation(suite, config.monte_carlo());
      write_table(*sink, validation_table(results), config.output_format);
      const auto failed = std::count_if(results.begin(), results.end(),
                                        [](const InvariantResult& r) { return !r.passed(); });
      err << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
          << " invariants passed\n";
      sink->flush();
      return failed == 0 ? kExitOk : kExitValidationFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitValidationFailure;
  }
  sink->flush();
  return kExitOk;
}

}  // namespace ucomp::cli
