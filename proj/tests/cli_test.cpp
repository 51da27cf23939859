#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "cli/validation.hpp"
#include "gtest/gtest.h"

using namespace ucomp::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

}  // namespace

TEST(cli, format_number) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333333");
  EXPECT_EQ(format_number(1.0 - std::exp(-0.5)), "0.393469340287367");
}

TEST(cli, table_rejects_ragged_rows) {
  Table t({"a", "b"});
  EXPECT_THROW(t.add_row({std::int64_t{1}}), std::logic_error);
}

TEST(cli, parsers) {
  EXPECT_EQ(parse_complex("-1,0.5"), std::complex<double>(-1.0, 0.5));
  EXPECT_FALSE(parse_complex("1").has_value());
  EXPECT_FALSE(parse_complex("1,2,3").has_value());
  EXPECT_FALSE(parse_complex("a,b").has_value());
  EXPECT_EQ(parse_copy_pair("2:3"), std::make_pair(2, 3));
  EXPECT_FALSE(parse_copy_pair("2-3").has_value());
  EXPECT_FALSE(parse_copy_pair("0:3").has_value());
}

TEST(cli, compare_pure_examples) {
  auto r = run({"compare-pure", "--x", "1", "--k", "3", "--l", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).at(1), "1,3,2,0");
  r = run({"compare-pure", "--x", "0", "--k", "1", "--l", "1"});
  EXPECT_EQ(lines(r.out).at(1), "0,1,1,0.5");
  r = run({"compare-pure", "--x", "0.25", "--k", "2", "--l", "2"});
  EXPECT_EQ(lines(r.out).at(0), "x,k,l,p_pure");
  EXPECT_EQ(lines(r.out).at(1), "0.25,2,2,0.65625");
}

TEST(cli, usage_errors_exit_2) {
  EXPECT_EQ(run({"compare-pure", "--x", "2", "--k", "1", "--l", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"compare-pure", "--x", "0.5", "--k", "0", "--l", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"compare-coherent", "--alpha1", "1;0", "--alpha2", "0,0"}).code, kExitUsage);
  EXPECT_EQ(run({"average", "--d", "1", "--k", "1", "--l", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"figure1", "--pairs", ""}).code, kExitUsage);
  EXPECT_EQ(run({"figure1", "--grid", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"figure2", "--d-max", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"validate", "--suite", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"average", "--d", "2", "--k", "1", "--l", "1", "--workers", "0"}).code,
            kExitUsage);
  EXPECT_EQ(run({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  const auto r = run({"compare-pure", "--x", "2", "--k", "1", "--l", "1"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(cli, compare_coherent_examples) {
  auto r = run({"compare-coherent", "--alpha1", "1,0", "--alpha2", "1,0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).at(1).substr(lines(r.out).at(1).rfind(',') + 1), "0");
  r = run({"compare-coherent", "--alpha1", "0,0", "--alpha2", "1,0", "--simulate"});
  const auto head = lines(r.out).at(0);
  const auto row = lines(r.out).at(1);
  EXPECT_NE(row.find("0.393469340287367"), std::string::npos);
  EXPECT_NE(head.find("network_abs_diff"), std::string::npos);
  const double diff = std::stod(row.substr(row.rfind(',') + 1));
  EXPECT_LE(diff, 1e-12);
}

TEST(cli, average_examples) {
  EXPECT_EQ(lines(run({"average", "--d", "2", "--k", "1", "--l", "1"}).out).at(1), "2,1,1,0.25");
  EXPECT_EQ(lines(run({"average", "--d", "3", "--k", "1", "--l", "1"}).out).at(1),
            "3,1,1,0.333333333333333");
  const auto r = run({"average", "--d", "2", "--k", "2", "--l", "2", "--mc"});
  const auto head = lines(r.out).at(0);
  const auto row = lines(r.out).at(1);
  ASSERT_NE(head.find("z_score"), std::string::npos);
  // z_score is the column before samples.
  std::vector<std::string> cells;
  std::stringstream ss(row);
  for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
  EXPECT_LE(std::abs(std::stod(cells.at(cells.size() - 2))), 3.0);
}

TEST(cli, figure1_rows) {
  const auto r = run({"figure1", "--pairs", "1:1", "--grid", "5"});
  const auto v = lines(r.out);
  ASSERT_EQ(v.size(), 6u);
  EXPECT_EQ(v[0], "x,k,l,p_pure,p_coherent");
  EXPECT_EQ(v[1], "0,1,1,0.5,1");
  EXPECT_EQ(v[2], "0.25,1,1,0.375,0.5");
  EXPECT_EQ(v[5], "1,1,1,0,0");
  const auto table = figure1_table({{1, 1}, {2, 2}, {3, 3}, {4, 4}}, 101);
  for (const auto& row : table.rows()) {
    ASSERT_GE(std::get<double>(row[4]), std::get<double>(row[3]) - 1e-15);
  }
}

TEST(cli, figure2_rows) {
  const auto table = figure2_table(20, {1, 2, 3, 4});
  ASSERT_EQ(table.columns(), (std::vector<std::string>{"d", "k", "p_avg"}));
  EXPECT_EQ(std::get<double>(table.rows().front()[2]), 0.25);
  auto value = [&](std::int64_t d, std::int64_t k) {
    for (const auto& row : table.rows()) {
      if (std::get<std::int64_t>(row[0]) == d && std::get<std::int64_t>(row[1]) == k) {
        return std::get<double>(row[2]);
      }
    }
    return -1.0;
  };
  for (int d = 2; d <= 20; ++d) {
    for (int k = 1; k <= 4; ++k) {
      if (d < 20) ASSERT_LE(value(d, k), value(d + 1, k));
      if (k < 4) ASSERT_LE(value(d, k), value(d, k + 1));
    }
  }
}

TEST(cli, json_output) {
  const auto r = run({"compare-pure", "--x", "0.25", "--k", "2", "--l", "2", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"p_pure\": 0.65625"), std::string::npos);
  EXPECT_EQ(r.out.front(), '[');
}

TEST(cli, out_file) {
  const auto path = std::filesystem::temp_directory_path() / "ucomp_cli_test_out.csv";
  const auto r = run({"figure2", "--d-max", "3", "--k-list", "1", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), "d,k,p_avg\n2,1,0.25\n3,1,0.333333333333333\n");
  std::filesystem::remove(path);
}

TEST(cli, output_is_byte_identical) {
  const std::vector<std::string> args{"average", "--d",       "3", "--k", "2", "--l", "2",
                                      "--mc",    "--samples", "5000", "--workers", "3",
                                      "--seed",  "99"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> v{"validate", "--suite", "coherent",
                                   "--workers", "2"};
  const auto a = run(v);
  const auto b = run(v);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(cli, validate_oracle_suite_passes) {
  const auto r = run({"validate", "--suite", "oracle", "--seed", "42"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
}

TEST(cli, validate_detects_sign_flipped_closed_form) {
  ClosedForms broken = ClosedForms::reference();
  const auto good = broken.pure_success;
  broken.pure_success = [good](double x, int k, int l) { return 1.0 - good(x, k, l); };
  const auto results = run_validation(Suite::all, {42, 20000, 1}, broken);
  bool any_failed = false;
  for (const auto& r : results) any_failed = any_failed || !r.passed();
  EXPECT_TRUE(any_failed);

  ClosedForms coherent_broken = ClosedForms::reference();
  coherent_broken.coherent_success = [](const ucomp::CoherentPair& p) {
    return std::exp(-static_cast<double>(p.k) * p.l / (p.k + p.l) *
                    std::norm(p.alpha1 - p.alpha2));
  };
  any_failed = false;
  for (const auto& r : run_validation(Suite::coherent, {42, 20000, 1}, coherent_broken)) {
    any_failed = any_failed || !r.passed();
  }
  EXPECT_TRUE(any_failed);
}
