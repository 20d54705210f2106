#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "drvkit/acceptance.hpp"
#include "drvkit/cli.hpp"
#include "drvkit/json_io.hpp"

using namespace drvkit;

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json report(const std::vector<std::string>& args, int expected_code = 0) {
  const CliRun r = cli(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return Json::parse(r.out);
}

const std::string kGolden = DRVKIT_GOLDEN_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, WitnessOnZeroDerivation) {
  const Json j = report({"witness", "--group", "S3", "--sigma", "id", "--tau", "id", "--ring", "Q", "--derivation",
                         kGolden + "/zero_S3.json"});
  EXPECT_EQ(j["result"]["status"], "inner");
  for (const auto& c : j["result"]["witness"]["coeffs"]) EXPECT_EQ(c, "0");
  EXPECT_EQ(j["result"]["hypotheses_violated"].size(), 0u);
}

TEST(Cli, DimensionOfS3) {
  const Json j = report({"dimension", "--group", "S3", "--sigma", "id", "--tau", "id", "--ring", "Q"});
  EXPECT_EQ(j["result"]["derivation_dimension"], 3);
  EXPECT_EQ(j["result"]["inner_dimension"], 3);
  EXPECT_TRUE(j["hypotheses"]["sigma_fixes_center"].get<bool>());
  EXPECT_TRUE(j["hypotheses"]["tau_fixes_center"].get<bool>());
  EXPECT_FALSE(j["hypotheses"]["char_divides_order"].get<bool>());
  EXPECT_TRUE(j["hypotheses"]["theorem_applies"].get<bool>());
}

TEST(Cli, OuterDerivationOverF2) {
  const Json j = report({"witness", "--group", "C2", "--ring", "Fp:2", "--sigma", "id", "--tau", "id", "--derivation",
                         kGolden + "/outer_C2.json"});
  EXPECT_EQ(j["result"]["status"], "not-inner");
  EXPECT_TRUE(j["hypotheses"]["char_divides_order"].get<bool>());
  EXPECT_EQ(j["result"]["derivation_dimension"], 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"dimension", "--group", "S3", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(cli({"witness", "--group", "S3", "--derivation", "/nonexistent/d.json"}).code, kExitIo);
  EXPECT_EQ(cli({"group", "--group", kGolden + "/bad_table.json"}).code, kExitValidation);
  EXPECT_EQ(cli({"group", "--group", "Z7"}).code, kExitValidation);
  EXPECT_EQ(cli({"orbits", "--group", "S3", "--sigma", "inner:9"}).code, kExitValidation);
  EXPECT_EQ(cli({"dimension", "--group", "S3", "--ring", "Z"}).code, kExitValidation);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);

  const CliRun bad = cli({"witness", "--group", "C2", "--derivation", kGolden + "/bad_C2.json"});
  EXPECT_EQ(bad.code, kExitValidation);
  const Json diag = Json::parse(bad.out);
  EXPECT_EQ(diag["error"]["kind"], "validation");
}

TEST(Cli, InvalidEndomorphismFile) {
  const fs::path tmp = fs::temp_directory_path() / "drvkit_bad_hom.json";
  std::ofstream(tmp) << R"({"images": [1, 0]})";
  EXPECT_EQ(cli({"check-hom", "--group", "C2", "--sigma", tmp.string()}).code, kExitValidation);
  std::ofstream(tmp) << R"({"kind": "algebra", "images": [["1","0"],["0","0"]]})";
  EXPECT_EQ(cli({"check-hom", "--group", "C2", "--sigma", tmp.string()}).code, kExitValidation);
  std::ofstream(tmp) << R"({"kind": "algebra", "images": [["1","0"],["1","0"]]})";
  const Json ok = report({"check-hom", "--group", "C2", "--sigma", tmp.string()});
  EXPECT_FALSE(ok["result"]["sigma"]["bijective"].get<bool>());
  fs::remove(tmp);
}

TEST(Cli, WritesToOutFile) {
  const fs::path tmp = fs::temp_directory_path() / "drvkit_out.json";
  const CliRun r = cli({"group", "--group", "C3", "--out", tmp.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Json::parse(slurp(tmp))["result"]["order"], 3);
  fs::remove(tmp);
  EXPECT_EQ(cli({"group", "--group", "C3", "--out", "/nonexistent/dir/x.json"}).code, kExitIo);
}

TEST(Cli, SeededRunsAreByteIdentical) {
  for (const std::string cmd : {"witness", "integralize"}) {
    const std::vector<std::string> args{cmd, "--group", "D4", "--sigma", "inner:2", "--seed", "11"};
    const CliRun a = cli(args), b = cli(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    std::vector<std::string> other = args;
    other.back() = "12";
    EXPECT_NE(cli(other).out, a.out);
  }
}

TEST(Cli, CapOverride) {
  ::setenv("DRVKIT_CAP", "6", 1);
  EXPECT_EQ(cli({"group", "--group", "D4"}).code, kExitValidation);
  ::unsetenv("DRVKIT_CAP");
  EXPECT_EQ(cli({"group", "--group", "D4"}).code, 0);
}

// Every golden report parses and reserializes to the same bytes.
TEST(Json, GoldenReportsRoundTrip) {
  std::size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(kGolden)) {
    if (entry.path().string().ends_with(".out.json")) {
      const std::string text = slurp(entry.path());
      EXPECT_EQ(dump_canonical(Json::parse(text)), text) << entry.path();
      ++seen;
    }
  }
  EXPECT_GT(seen, 0u);
}

TEST(Json, SchemasRoundTrip) {
  const GroupPtr d4 = build_group("D4");
  const GroupPtr back = group_from_json(group_to_json(*d4), "D4");
  EXPECT_TRUE(back->same_table(*d4));
  EXPECT_EQ(back->labels(), d4->labels());

  const Ring q = Ring::rationals();
  const Ring f7 = Ring::prime_field(7);
  for (const Ring& r : {q, f7, Ring::integers()}) EXPECT_EQ(ring_from_json(ring_to_json(r)), r);

  const auto x = GroupRingElement::basis(d4, q, 3, Scalar::parse("-7/3", q));
  EXPECT_EQ(element_from_json(element_to_json(x), d4, q), x);

  const auto phi = AlgebraEndomorphism::lift(inner_automorphism(d4, 4), q);
  const Json pj = endomorphism_to_json(phi);
  EXPECT_EQ(endomorphism_to_json(endomorphism_from_json(pj, d4, q)), pj);

  const auto delta = inner_derivation(x, phi, AlgebraEndomorphism::identity(d4, q));
  const Json dj = derivation_to_json(delta);
  EXPECT_EQ(derivation_values_from_json(dj, d4, q), delta.values());
  EXPECT_EQ(dump_canonical(Json::parse(dump_canonical(dj))), dump_canonical(dj));
}

TEST(Golden, ManifestMatches) {
  AcceptanceOptions options;
  options.only = {"GOLDEN"};
  options.golden_dir = kGolden;
  const auto results = run_acceptance(options);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_TRUE(results[0].passed) << results[0].detail;
  EXPECT_FALSE(results[0].skipped);
}

// A corrupted golden file makes the named criterion fail.
TEST(Golden, CorruptedFileFails) {
  const fs::path dir = fs::temp_directory_path() / "drvkit_golden_corrupt";
  fs::remove_all(dir);
  fs::copy(kGolden, dir);
  std::ofstream(dir / "dimension_S3.out.json") << "{}\n";
  AcceptanceOptions options;
  options.only = {"GOLDEN"};
  options.golden_dir = dir.string();
  const auto results = run_acceptance(options);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].passed);
  EXPECT_NE(results[0].detail.find("dimension-S3"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Selftest, SmallCriteriaAreDeterministic) {
  AcceptanceOptions options;
  options.only = {"AC2", "AC6"};
  std::vector<std::string> first, second;
  for (const auto& r : run_acceptance(options)) first.push_back(format_result_line(r, false));
  for (const auto& r : run_acceptance(options)) second.push_back(format_result_line(r, false));
  EXPECT_EQ(first, second);
  for (const auto& line : first) EXPECT_EQ(line.rfind("PASS", 0), 0u) << line;
}
