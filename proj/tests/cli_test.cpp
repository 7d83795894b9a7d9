#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result lieq(const std::string& args) {
  const std::string cmd = std::string(LIEQ_BINARY) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string example(const std::string& file) { return std::string(LIEQ_EXAMPLES) + "/" + file; }

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST(Cli, CapabilityOfZ) {
  const Result r = lieq("capability --q 2 catalog:Z --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r.out);
  EXPECT_EQ(j["verdicts"]["q_capable"], true);
  EXPECT_EQ(j["verdicts"]["strongly_q_capable"], false);
  EXPECT_EQ(j["flags"]["theorem_backed"], true);
  EXPECT_FALSE(j.contains("centers"));
  const Result t = lieq("capability --q 2 catalog:Z");
  EXPECT_NE(t.out.find("q_capable=true strongly_q_capable=false"), std::string::npos) << t.out;
}

TEST(Cli, ExteriorSquareOfZ) {
  const Result r = lieq("product --q 2 --kind exterior catalog:Z");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("invariant factors: [0]"), std::string::npos) << r.out;
  const auto j = parse(lieq("product --q 2 --kind exterior catalog:Z --format json").out);
  EXPECT_EQ(j["invariant_factors"].dump(), "[0]");
  EXPECT_EQ(j["kind"], "exterior");
}

TEST(Cli, ProductOverSeveralQ) {
  const auto j = parse(lieq("product --q 0,2 catalog:Z --format json").out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["invariant_factors"].dump(), "[0]");
  EXPECT_EQ(j[1]["invariant_factors"].dump(), "[2,0]");
}

TEST(Cli, CentersReport) {
  const Result r = lieq("centers --q 2 catalog:Z --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r.out);
  EXPECT_EQ(j["centers"]["exterior_center"].dump(), "[]");
  EXPECT_EQ(j["centers"]["ellis_exterior_center"].dump(), "[0]");
  for (const auto& [name, holds] : j["inclusions"].items()) EXPECT_EQ(holds, true) << name;
}

TEST(Cli, JsonIsByteStable) {
  const std::string args = "centers catalog:heisenberg --format json";
  EXPECT_EQ(lieq(args).out, lieq(args).out);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "lieq_cli_out.json";
  const Result r = lieq("capability --q 3 'catalog:sl2(Z/5)' --format json -o " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(parse(ss.str())["verdicts"]["strongly_q_capable"], true);
  std::remove(path.c_str());
}

TEST(Cli, Validate) {
  EXPECT_EQ(lieq("validate " + example("heisenberg.alg")).code, 0);
  EXPECT_EQ(lieq("validate " + example("sl2_z5.alg")).code, 0);
  EXPECT_EQ(lieq("validate " + example("torsion.alg")).code, 0);
  const Result bad = lieq("validate " + example("broken_jacobi.alg"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("Jacobi"), std::string::npos) << bad.out;
  EXPECT_NE(bad.out.find("[-1,0,0]"), std::string::npos) << bad.out;
  const auto j = parse(lieq("validate --format json " + example("broken_jacobi.alg")).out);
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["issues"][0]["witness"].dump(), "[-1,0,0]");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(lieq("validate " + example("bad_syntax.alg")).code, 2);
  EXPECT_EQ(lieq("validate /nonexistent.alg").code, 2);
  EXPECT_EQ(lieq("centers catalog:nope").code, 2);
  EXPECT_EQ(lieq("centers --q -1 catalog:Z").code, 2);
  EXPECT_EQ(lieq("centers --q x catalog:Z").code, 2);
  EXPECT_EQ(lieq("product --kind wedge catalog:Z").code, 2);
  EXPECT_EQ(lieq("").code, 2);
  EXPECT_EQ(lieq("frobnicate").code, 2);
  EXPECT_EQ(lieq("--help").code, 0);
}

TEST(Cli, Catalog) {
  const Result r = lieq("catalog --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r.out);
  EXPECT_GE(j.size(), 10u);
  bool found = false;
  for (const auto& e : j) found = found || e["name"] == "sl2(Z/5)";
  EXPECT_TRUE(found);
}

TEST(Cli, VerifyPassesAndFailsHonestly) {
  EXPECT_EQ(lieq("verify catalog:zero").code, 0);
  EXPECT_EQ(lieq("verify 'catalog:sl2(Z/5)' --q 0,2").code, 0);
  EXPECT_EQ(lieq("verify catalog:heisenberg --q 0").code, 0);
  // the brace-free right exact sequence breaks for heisenberg at q = 2
  const Result h = lieq("verify catalog:heisenberg --q 0,2 --format json");
  EXPECT_EQ(h.code, 1);
  const auto j = parse(h.out);
  for (const auto& v : j["verdicts"])
    if (v["verdict"] == "fail") {
      EXPECT_EQ(v["instance"], "heisenberg q=2");
      EXPECT_NE(v["theorem"].get<std::string>().find("curly"), std::string::npos);
    }
  EXPECT_GT(j["failed"].get<int>(), 0);
}

TEST(Cli, VerifyWithOracle) {
  const Result r = lieq("verify 'catalog:(Z/2)^2' --q 0,2 --oracle --format json");
  EXPECT_EQ(r.code, 0);
  const auto j = parse(r.out);
  int oracle = 0;
  for (const auto& v : j["verdicts"]) oracle += v["theorem"].get<std::string>().rfind("oracle", 0) == 0;
  EXPECT_EQ(oracle, 4);
}

TEST(Cli, FileTargets) {
  const auto j = parse(lieq("product --q 0 --format json " + example("heisenberg.alg")).out);
  EXPECT_EQ(j["invariant_factors"].dump(), "[0,0,0,0,0,0]");
  EXPECT_EQ(lieq("centers --q 0,2 " + example("n4.alg")).code, 0);
}
