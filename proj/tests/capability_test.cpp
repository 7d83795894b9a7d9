#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lieq/capability.hpp"
#include "lieq/catalog.hpp"
#include "lieq/report.hpp"

using namespace lieq;

namespace {

const LieAlgebra& Zalg() {
  static const LieAlgebra g = catalog::abelian({0}, 0, "Z");
  return g;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Centers, ZIsCapableButNotStronglyCapable) {
  for (int q : {1, 2, 3, 4, 6}) {
    const CenterReport r = center_report(Zalg(), q);
    EXPECT_TRUE(r.get("exterior_center").is_zero()) << q;
    EXPECT_TRUE(r.get("ellis_exterior_center").is_whole()) << q;
    EXPECT_TRUE(r.q_capable);
    EXPECT_FALSE(r.strongly_q_capable);
    EXPECT_TRUE(r.theorem_backed);
  }
  EXPECT_TRUE(tensor_center(Zalg(), 2).is_zero());
}

TEST(Centers, ZAtQZeroIsNotCapable) {
  // no braces: e^e = 0 makes every element central in the exterior square
  EXPECT_TRUE(exterior_center(Zalg(), 0).is_whole());
  EXPECT_FALSE(is_q_capable(Zalg(), 0).value);
  EXPECT_TRUE(is_q_capable(Zalg(), 0).theorem_backed);
}

TEST(Centers, ZModTwoAtQTwo) {
  const LieAlgebra g = catalog::abelian({2});
  EXPECT_TRUE(exterior_center(g, 2).is_zero());
  EXPECT_TRUE(is_q_capable(g, 2).value);
  EXPECT_TRUE(ellis_centers(g, 2).exterior.is_whole());
}

TEST(Centers, TorsionFlag) {
  EXPECT_TRUE(lambda_q_torsion_free(0, 2));
  EXPECT_TRUE(lambda_q_torsion_free(5, 2));
  EXPECT_FALSE(lambda_q_torsion_free(6, 2));
  EXPECT_TRUE(theorem_backed(6, 0));
  EXPECT_FALSE(theorem_backed(4, 2));
  const CenterReport r = center_report(catalog::heisenberg(2), 2);
  EXPECT_FALSE(r.lambda_q_torsion_free);
  EXPECT_FALSE(r.theorem_backed);
}

TEST(Centers, PerfectAlgebras) {
  for (const Int p : {5, 7})
    for (int q : {0, 2, 3}) {
      const LieAlgebra g = catalog::sl2(p);
      const CenterReport r = center_report(g, q);
      EXPECT_TRUE(r.get("center").is_zero());
      EXPECT_EQ(r.get("ellis_tensor_center"), r.get("center"));
      EXPECT_EQ(r.get("ellis_exterior_center"), r.get("center"));
      if (r.theorem_backed) {
        EXPECT_TRUE(r.strongly_q_capable) << g.name() << " q=" << q;
      }
    }
  EXPECT_TRUE(is_strongly_q_capable(catalog::sl2(5), 2).value);
}

TEST(Centers, ZeroAlgebra) {
  const LieAlgebra z = catalog::abelian({}, 0, "zero");
  for (int q : {0, 2}) {
    EXPECT_TRUE(is_q_capable(z, q).value);
    EXPECT_TRUE(is_strongly_q_capable(z, q).value);
  }
}

TEST(Centers, InclusionChainsOnTheCatalog) {
  for (const auto& e : catalog::entries())
    for (int q : {0, 1, 2, 3, 4, 6}) {
      const CenterReport r = center_report(e.make(), q);
      for (const auto& c : r.inclusions) EXPECT_TRUE(c.holds) << e.name << " q=" << q << " " << c.name;
    }
}

TEST(Centers, HeisenbergCentersSitInsideTheCenter) {
  const LieAlgebra h = catalog::heisenberg(0);
  const CenterReport r = center_report(h, 0);
  EXPECT_EQ(r.get("center").invariant_factors(), (Vec{0}));
  EXPECT_TRUE(r.get("exterior_center").subset_of(r.get("center")));
}

TEST(Coincidence, ZAtQTwo) {
  const CoincidenceVerdict v = coincidence_check(Zalg(), 2);
  EXPECT_TRUE(v.hypothesis);
  EXPECT_TRUE(v.equal);
  EXPECT_TRUE(v.tensor_center.is_zero());
}

TEST(Coincidence, FailsAtQZeroForZ) {
  // Z/[Z,Z] = Z is free, yet Z (x) Z = Z and Z ^ Z = 0
  const CoincidenceVerdict v = coincidence_check(Zalg(), 0);
  EXPECT_TRUE(v.free);
  EXPECT_FALSE(v.hypothesis);
  EXPECT_FALSE(v.equal);
  EXPECT_TRUE(v.tensor_center.is_zero());
  EXPECT_TRUE(v.exterior_center.is_whole());
}

TEST(Coincidence, PerfectAndRecordedCases) {
  const CoincidenceVerdict p = coincidence_check(catalog::sl2(5), 2);
  EXPECT_TRUE(p.hypothesis);
  EXPECT_TRUE(p.equal);
  const CoincidenceVerdict a = coincidence_check(catalog::abelian({2, 4}), 4);
  EXPECT_TRUE(a.ok());
}

TEST(Coincidence, HoldsOnTheCatalogUnderTheHypothesis) {
  for (const auto& e : catalog::entries())
    for (int q : {1, 2, 3, 4, 6}) EXPECT_TRUE(coincidence_check(e.make(), q).ok()) << e.name << " q=" << q;
}

TEST(Report, JsonForZAtQTwo) {
  const Json j = center_report_json(center_report(Zalg(), 2));
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["ring"], "Z");
  EXPECT_EQ(j["centers"]["exterior_center"].dump(), "[]");
  EXPECT_EQ(j["centers"]["ellis_exterior_center"].dump(), "[0]");
  EXPECT_EQ(j["verdicts"]["q_capable"], true);
  EXPECT_EQ(j["verdicts"]["strongly_q_capable"], false);
}

TEST(Report, ZeroAlgebraReport) {
  const Json j = center_report_json(center_report(catalog::abelian({}, 0, "zero"), 3));
  for (const auto& [name, f] : j["centers"].items()) EXPECT_EQ(f.dump(), "[]") << name;
  EXPECT_EQ(j["verdicts"]["q_capable"], true);
  EXPECT_EQ(j["verdicts"]["strongly_q_capable"], true);
}

TEST(Report, WritesAreByteIdentical) {
  const std::string a = ::testing::TempDir() + "lieq_report_a.json";
  const std::string b = ::testing::TempDir() + "lieq_report_b.json";
  write_report(center_report(catalog::heisenberg(0), 2), a);
  write_report(center_report(catalog::heisenberg(0), 2), b);
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
  EXPECT_THROW(write_report(center_report(Zalg(), 2), "/nonexistent-dir/x.json"), IoError);
}
