#include <gtest/gtest.h>

#include <set>

#include "igcob/campaigns.hpp"
#include "igcob/errors.hpp"
#include "igcob/functor_bridge.hpp"
#include "igcob/text_format.hpp"
#include "igcob/random_instances.hpp"

namespace igcob {
namespace {

TEST(Campaigns, ReportsAreDeterministicAcrossThreadCounts) {
  for (const auto& name : campaign_names()) {
    CampaignOptions a;
    a.trials = 40;
    a.seed = 1234;
    a.threads = 1;
    CampaignOptions b = a;
    b.threads = 4;
    const Report ra = run_campaign(name, a);
    const Report rb = run_campaign(name, b);
    EXPECT_EQ(ra.to_lines(), rb.to_lines()) << name;
    EXPECT_TRUE(ra.passed()) << ra.to_text();
  }
}

TEST(TrialRng, StreamsDependOnSeedAndIndex) {
  std::set<std::uint64_t> firsts;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    for (std::uint64_t index = 0; index < 20; ++index) firsts.insert(trial_rng(seed, index)());
  EXPECT_EQ(firsts.size(), 400u);
  Rng a = trial_rng(42, 7), b = trial_rng(42, 7);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a(), b());
}

TEST(Campaigns, SkipAccounting) {
  CampaignOptions o;
  o.trials = 300;
  const Report r = run_trefoil_campaign(o);
  ASSERT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(std::stoull(r.get("checked")) + std::stoull(r.get("skipped")), 300u);
  EXPECT_EQ(r.get("passed"), r.get("checked"));
  EXPECT_FALSE(r.get("skip_rate").empty());
}

TEST(Campaigns, AssocAndTrefoilAcrossSizes) {
  std::uint64_t with_cycles = 0;
  for (std::size_t v = 3; v <= 8; v += 1) {
    for (std::size_t e = 3; e <= 8; e += 5) {
      CampaignOptions o;
      o.trials = 2000;
      o.seed = 1000 + v * 10 + e;
      o.max_vertices = v;
      o.max_edges = e;
      const Report assoc = run_associativity_campaign(o);
      const Report trefoil = run_trefoil_campaign(o);
      EXPECT_TRUE(assoc.passed()) << assoc.to_text();
      EXPECT_TRUE(trefoil.passed()) << trefoil.to_text();
      with_cycles += std::stoull(trefoil.get("trials_with_cycles"));
    }
  }
  EXPECT_GT(with_cycles, 1000u);
}

TEST(Campaigns, UnknownName) {
  EXPECT_THROW(run_campaign("nope", CampaignOptions{}), PreconditionViolation);
}

TEST(Replay, InfiniteInstanceIsSkipped) {
  const std::string doc =
      "graph F\nvertex a b c\nedge e a b\nedge e2 c b\n"
      "graph G\nvertex b c d\nedge f b c\nedge f2 b d\n"
      "graph H\nvertex x\n";
  const Report r = replay_campaign("assoc", doc);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.get("skipped"), "1");
}

TEST(Replay, FiniteTrefoilInstance) {
  const std::string doc =
      "graph F\nvertex x y\nedge e x y\n"
      "graph G\nvertex y z\nedge g y z\n"
      "graph H\nvertex z x\nedge h z x\n";
  const Report r = replay_campaign("trefoil", doc);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.get("checked"), "1");
}

TEST(Replay, ReportTextIsAnInstanceFile) {
  const Report r = check_faithfulness(standard_object(2), standard_object(2), 1);
  ASSERT_FALSE(r.witnesses.empty());
  const Document doc = parse_document(r.to_text());
  ASSERT_EQ(doc.cobs.size(), 2u);
  EXPECT_EQ(doc.cobs[0].name, "collapsed_a");
  const Report again = replay_campaign("faithful", r.to_text());
  EXPECT_TRUE(again.passed()) << again.to_text();

  Report fake;
  fake.property = "trefoil";
  fake.verdict = Verdict::Fail;
  fake.set("failed", 1);
  fake.witnesses.push_back("graph F\nvertex x y\nedge e x y\ngraph G\nvertex y z\nedge g y z\n"
                           "graph H\nvertex z x\nedge h z x\n");
  EXPECT_EQ(replay_campaign("trefoil", fake.to_text()).get("checked"), "1");
}

}  // namespace
}  // namespace igcob
