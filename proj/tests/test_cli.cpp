#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "apn/catalog.hpp"
#include "apn/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = apn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("apnkit_cli_" + name)).string();
}

std::string t1_poly() {
  char buf[32];
  std::snprintf(buf, sizeof buf, "3:1,36:%x", apn::theorem1_valid_us(apn::Field(10)).front());
  return buf;
}

}  // namespace

TEST(Cli, AnalyzeTheorem1Function) {
  const auto r = run({"analyze", "--m", "10", "--poly", t1_poly()});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.report();
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_EQ(j["m"], 10);
  EXPECT_EQ(j["poly"], "0x409");
  EXPECT_EQ(j["tool_version"], "0.3.0");
  EXPECT_TRUE(j["results"]["flags"]["apn"].get<bool>());
  EXPECT_TRUE(j["results"]["flags"]["crooked"].get<bool>());
  EXPECT_FALSE(j["results"]["flags"]["ab"].get<bool>());
  EXPECT_EQ(j["results"]["flags"]["degree"], 2);
  EXPECT_EQ(j["results"]["uniformity"], 2);
}

TEST(Cli, AnalyzeIdentityLut) {
  const std::string path = temp_path("identity.lut");
  {
    std::ofstream out(path);
    for (int i = 0; i < 16; ++i) out << std::hex << i << '\n';
  }
  const auto r = run({"analyze", "--m", "4", "--lut-file", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.report()["results"]["flags"]["apn"].get<bool>());
  EXPECT_EQ(r.report()["results"]["flags"]["degree"], 1);
  std::filesystem::remove(path);
}

TEST(Cli, FieldPolynomialIsEchoed) {
  const auto r = run({"analyze", "--m", "5", "--field-poly", "3b", "--poly", "3:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["poly"], "0x3b");
  EXPECT_EQ(run({"analyze", "--m", "5", "--field-poly", "15", "--poly", "3:1"}).code, 2);
}

TEST(Cli, CsvAndJsonCarryTheSameNumbers) {
  const auto j = run({"analyze", "--m", "6", "--poly", "3:1,5:2"});
  const auto c = run({"analyze", "--m", "6", "--poly", "3:1,5:2", "--csv"});
  ASSERT_EQ(j.code, 0);
  ASSERT_EQ(c.code, 0);
  std::map<std::string, std::string> rows;
  std::istringstream in(c.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "section,key,value");
  while (std::getline(in, line)) {
    const auto a = line.find(','), b = line.find(',', a + 1);
    rows[line.substr(0, a) + "/" + line.substr(a + 1, b - a - 1)] = line.substr(b + 1);
  }
  const json r = j.report()["results"];
  EXPECT_EQ(rows["uniformity/"], r["uniformity"].dump());
  EXPECT_EQ(rows["linearity/"], r["linearity"].dump());
  for (const auto& [k, v] : r["differential_histogram"].items()) EXPECT_EQ(rows["differential_histogram/" + k], v.dump());
  for (const auto& [k, v] : r["walsh_abs"].items()) EXPECT_EQ(rows["walsh_abs/" + k], v.dump());
  EXPECT_EQ(rows["flags/degree"], r["flags"]["degree"].dump());
  EXPECT_EQ(rows["meta/poly"], "0x43");
}

TEST(Cli, UsageErrors) {
  auto r = run({"analyze", "--m", "10", "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--bogus"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"analyze", "--m", "10"}).code, 2);
  EXPECT_EQ(run({"analyze", "--m", "10", "--poly", "3:1", "--lut-file", "x"}).code, 2);
  EXPECT_EQ(run({"analyze", "--m", "40", "--poly", "3:1"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  r = run({"analyze", "--m", "4", "--lut-file", "/nonexistent/f.lut"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/nonexistent/f.lut"), std::string::npos);
  EXPECT_EQ(run({"analyze", "--m", "4", "--poly", "3:xyz"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CatalogTheorem1Us) {
  const auto r = run({"catalog", "--m", "10", "--theorem1-us"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["results"]["theorem1_us"].size(), 62U);
  EXPECT_EQ(run({"catalog", "--m", "9", "--theorem1-us"}).code, 2);
}

TEST(Cli, VerifySuites) {
  auto r = run({"verify", "--suite", "theorem1", "--quiet"});
  EXPECT_EQ(r.code, 0) << r.out;
  r = run({"verify", "--suite", "table1", "--m", "7", "--quiet"});
  EXPECT_EQ(r.code, 0) << r.out;
  r = run({"verify", "--suite", "table2-small", "--quiet"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.report()["results"]["seed"], 20240611);
}

TEST(Cli, SearchDeterministicAcrossJobsAndResumable) {
  const std::string a = temp_path("a.jsonl"), b = temp_path("b.jsonl");
  const auto r1 = run({"search", "--m", "10", "--d1", "3", "--d2", "36", "--jobs", "1", "--out", a, "--quiet"});
  const auto r8 = run({"search", "--m", "10", "--d1", "3", "--d2", "36", "--jobs", "8", "--out", b, "--quiet"});
  ASSERT_EQ(r1.code, 0) << r1.err;
  EXPECT_EQ(r1.report()["results"]["orbits"], r8.report()["results"]["orbits"]);
  EXPECT_EQ(r1.report()["results"]["hits"], 1);

  const auto full1 = run({"search", "--m", "6", "--jobs", "1", "--out", a, "--quiet"});
  const auto full3 = run({"search", "--m", "6", "--jobs", "3", "--out", b, "--quiet"});
  EXPECT_EQ(full1.report()["results"]["orbits"], full3.report()["results"]["orbits"]);

  // Drop the second half of the file and resume.
  std::vector<std::string> lines;
  {
    std::ifstream in(a);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  {
    std::ofstream out(a, std::ios::trunc);
    for (std::size_t i = 0; i < lines.size() / 2; ++i) out << lines[i] << '\n';
  }
  const auto resumed = run({"search", "--m", "6", "--out", a, "--resume", "--quiet"});
  ASSERT_EQ(resumed.code, 0) << resumed.err;
  EXPECT_GT(resumed.report()["results"]["slices_skipped"].get<int>(), 0);
  EXPECT_EQ(resumed.report()["results"]["orbits"], full1.report()["results"]["orbits"]);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, RankWithCheckpoint) {
  const std::string basis = temp_path("basis.bin");
  const auto full = run({"rank", "--m", "6", "--poly", "3:1", "--quiet"});
  ASSERT_EQ(full.code, 0) << full.err;
  EXPECT_EQ(full.report()["results"]["dimension"], 94);
  const auto capped = run({"rank", "--m", "6", "--poly", "3:1", "--max-dim", "20", "--save-basis", basis, "--quiet"});
  ASSERT_EQ(capped.code, 0) << capped.err;
  EXPECT_FALSE(capped.report()["results"]["complete"].get<bool>());
  const auto resumed = run({"rank", "--m", "6", "--load-basis", basis, "--quiet"});
  ASSERT_EQ(resumed.code, 0) << resumed.err;
  EXPECT_EQ(resumed.report()["results"]["dimension"], 94);
  const auto graph = run({"rank", "--m", "4", "--poly", "3:1", "--target", "graph", "--quiet"});
  EXPECT_EQ(graph.report()["results"]["dimension"], 100);
  EXPECT_EQ(run({"rank", "--m", "4", "--poly", "5:1", "--quiet"}).code, 2);
  std::filesystem::remove(basis);
}
