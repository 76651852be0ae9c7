#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "reveng/pipeline.hpp"
#include "reveng/report_json.hpp"

using namespace reveng;

namespace {

SurgeryScript bundled(std::string const& name) {
  std::ifstream in(std::string(REVENG_SCRIPTS_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_script(os.str());
}

}  // namespace

TEST(Pipeline, FakeProjectivePlane) {
  RunOptions opts;
  opts.max_cosets = 10'000;
  auto r = run_pipeline(bundled("fake_cp2_3.srg"), opts);
  ASSERT_EQ(r.trace.size(), 7u);
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    EXPECT_EQ(r.trace[i].euler, 6);
    EXPECT_EQ(r.trace[i].signature, -2);
    EXPECT_EQ(r.trace[i].betti.b1, 6 - static_cast<std::int64_t>(i));
    EXPECT_EQ(r.trace[i].betti.b2, 16 - 2 * static_cast<std::int64_t>(i));
  }
  EXPECT_TRUE(r.enumeration.completed());
  EXPECT_EQ(r.enumeration.index, 1u);
  ASSERT_TRUE(r.classification);
  EXPECT_EQ(r.classification->description, "CP²#3CP̄²");
  EXPECT_EQ(r.classification->certainty, Certainty::Homeomorphism);
  ASSERT_TRUE(r.sw);
  EXPECT_EQ(r.sw->dimension_square, 6);
  ASSERT_EQ(r.sw->scenarios.size(), 2u);
  EXPECT_TRUE(r.sw->scenarios[0].candidates.empty());
  EXPECT_EQ(r.sw->min_difference_square, 24);
  EXPECT_TRUE(r.anomalies.empty());
  EXPECT_EQ(r.simplified.presentation.num_generators(), 0u);
}

TEST(Pipeline, FamilyFibersAreTrivial) {
  auto r = run_pipeline(bundled("fake_cp2_3_family.srg"));
  ASSERT_EQ(r.family.size(), 9u);
  for (auto const& f : r.family) {
    EXPECT_EQ(f.m, f.n + 1);
    EXPECT_EQ(f.b1, 0);
    EXPECT_TRUE(f.outcome.completed() && f.outcome.index == 1) << "n=" << f.n;
  }
  EXPECT_EQ(r.fiber, 2);
  RunOptions narrow;
  narrow.family = IntRange{3, 4};
  narrow.threads = 2;
  auto n = run_pipeline(bundled("fake_cp2_3_family.srg"), narrow);
  ASSERT_EQ(n.family.size(), 2u);
  EXPECT_EQ(n.family[0].n, 3);
}

TEST(Pipeline, HomologyS2xS2StaysOpen) {
  RunOptions opts;
  opts.max_cosets = 20'000;
  auto r = run_pipeline(bundled("homology_s2xs2.srg"), opts);
  EXPECT_EQ(r.euler, 4);
  EXPECT_EQ(r.signature, 0);
  EXPECT_TRUE(r.perfect);
  EXPECT_EQ(r.betti.b2, 2);
  EXPECT_FALSE(r.enumeration.completed());
  ASSERT_TRUE(r.classification);
  EXPECT_EQ(r.classification->certainty, Certainty::HomologyType);
  EXPECT_EQ(r.classification->description, "homology S²×S²");
  EXPECT_TRUE(r.anomalies.empty());
}

TEST(Pipeline, CompletedEnumerationOnAnOpenScriptIsAnAnomaly) {
  auto s = parse_script("manifold custom e=3 sign=1\ngenerators x\nrelator x\nexpect pi1=open\n");
  auto r = run_pipeline(s);
  ASSERT_EQ(r.anomalies.size(), 1u);
  EXPECT_NE(r.anomalies[0].find("expected to stay open"), std::string::npos);
}

TEST(Pipeline, UnexpectedNontrivialGroupIsAnAnomaly) {
  auto s = parse_script("manifold custom e=3 sign=1\ngenerators x\nrelator x^2\nexpect pi1=trivial\n");
  auto r = run_pipeline(s);
  ASSERT_EQ(r.anomalies.size(), 1u);
  EXPECT_EQ(r.classification->description, "rational homology CP²");
}

TEST(Pipeline, ErrorsNameTheStage) {
  auto s = parse_script("manifold sym2 3\ntorus T g1=a1 g2=a2 mu=b1\nsurgery T curve=g1 m=1\n");
  try {
    run_pipeline(s);
    FAIL();
  } catch (InvalidArgument const& e) {
    EXPECT_EQ(std::string(e.what()).rfind("surgery on T: ", 0), 0u) << e.what();
  }
  auto hole = parse_script("manifold sym2 3\ntorus T g1=a1 g2=a2 mu=[b1,b2]\nsurgery T curve=g1 m=n\n");
  EXPECT_THROW(run_pipeline(hole), InvalidArgument);
  auto bad = parse_script("manifold custom e=1 sign=0\n");
  EXPECT_THROW(run_pipeline(bad), InconsistentState);
}

TEST(Pipeline, EverySurgeryAppearsOnceInTheTrace) {
  auto s = bundled("homology_s2xs2.srg");
  RunOptions opts;
  opts.max_cosets = 1000;
  auto r = run_pipeline(s, opts);
  ASSERT_EQ(r.trace.size(), s.surgeries.size() + 1);
  for (std::size_t i = 0; i < s.surgeries.size(); ++i) EXPECT_EQ(r.trace[i + 1].label, s.surgeries[i].torus);
}

TEST(Pipeline, JsonIsDeterministic) {
  auto s = bundled("fake_cp2_3_family.srg");
  RunOptions opts;
  opts.threads = 3;
  auto a = to_json(run_pipeline(s, opts)).dump();
  opts.threads = 1;
  auto b = to_json(run_pipeline(s, opts)).dump();
  EXPECT_EQ(a, b);
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["enumeration"]["status"], "Completed");
  EXPECT_EQ(j["classification"]["description"], "CP²#3CP̄²");
  EXPECT_EQ(j["family"].size(), 9u);
  EXPECT_TRUE(j["sw"]["family"]["pairwise_distinct"].get<bool>());
}

TEST(Pipeline, TextReport) {
  RunOptions opts;
  auto text = format_report(run_pipeline(bundled("fake_cp2_3.srg"), opts));
  EXPECT_NE(text.find("Completed(1)"), std::string::npos);
  EXPECT_NE(text.find("classification: CP²#3CP̄² [Homeomorphism]"), std::string::npos);
}
