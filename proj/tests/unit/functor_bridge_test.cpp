#include <gtest/gtest.h>

#include "igcob/cob0.hpp"
#include "igcob/errors.hpp"
#include "igcob/functor_bridge.hpp"

namespace igcob {
namespace {

Point L(const std::string& x) { return {Boundary::Source, x}; }
Point R(const std::string& x) { return {Boundary::Target, x}; }

Cob0Morphism three_segments(std::uint64_t circles) {
  return Cob0Morphism::make({"a1", "a2", "a3"}, {"b1", "b2", "b3"},
                            {{L("a1"), R("b3")}, {L("a2"), L("a3")}, {R("b1"), R("b2")}}, circles);
}

TEST(FundamentalGraph, ThreeSegments) {
  const IntMorphism g = fundamental_graph(three_segments(2));
  EXPECT_EQ(endpoint_multiset(g.graph()),
            (std::vector<std::pair<VertexId, VertexId>>{{"L:a1", "R:b3"},
                                                       {"L:a2", "L:a3"},
                                                       {"L:a3", "L:a2"},
                                                       {"R:b1", "R:b2"},
                                                       {"R:b2", "R:b1"},
                                                       {"R:b3", "L:a1"}}));
  EXPECT_TRUE(g.graph().find_edge("L:a1>R:b3").has_value());
  EXPECT_EQ(normal_form(fundamental_graph(three_segments(0)).graph()), normal_form(g.graph()));
}

TEST(FundamentalGraph, EmptyCobordism) {
  EXPECT_EQ(fundamental_graph(Cob0Morphism::make({}, {}, {}, 4)).graph().edge_count(), 0u);
}

TEST(FundamentalGraph, SymmetricLoopFreeOutDegreeOne) {
  for (const auto& m : cob0_enumerate(standard_object(3), standard_object(3), 0)) {
    const IntMorphism fm = fundamental_graph(m);
    const Graph& g = fm.graph();
    std::map<VertexId, std::size_t> out;
    for (const auto& e : g.edges()) {
      EXPECT_NE(e.source, e.target);
      ++out[e.source];
    }
    for (const auto& v : g.vertices()) EXPECT_EQ(out[v], 1u) << v;
    auto fwd = endpoint_multiset(g);
    for (auto& [s, t] : fwd) std::swap(s, t);
    std::sort(fwd.begin(), fwd.end());
    EXPECT_EQ(fwd, endpoint_multiset(g));
  }
}

TEST(FunctorBar, WagersAndIdentity) {
  EXPECT_EQ(functor_bar(three_segments(2)).wager, ExtNat(2));
  EXPECT_EQ(functor_bar(three_segments(0)).wager, ExtNat(0));
  const auto id = functor_bar(cob0_identity({"x", "y"}));
  EXPECT_EQ(id.wager, ExtNat(0));
  EXPECT_EQ(endpoint_multiset(id.morphism.graph()), endpoint_multiset(int_identity({"x", "y"}).graph()));
}

TEST(Functoriality, CupCap) {
  const auto m = Cob0Morphism::make({"a1", "a2"}, {"b1", "b2"}, {{L("a1"), L("a2")}, {R("b1"), R("b2")}});
  const auto n = Cob0Morphism::make({"b1", "b2"}, {"c1", "c2"}, {{L("b1"), L("b2")}, {R("c1"), R("c2")}});
  const Report r = check_functoriality(m, n);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.get("measure_unoriented"), "1");
  EXPECT_EQ(r.get("measure_directed"), "2");
  EXPECT_EQ(r.get("wager_lhs"), "1");
  EXPECT_EQ(r.get("wager_rhs"), "1");
}

TEST(Functoriality, IdentityFactor) {
  const Report r = check_functoriality(three_segments(2), cob0_identity({"b1", "b2", "b3"}));
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.get("measure_unoriented"), "0");
}

TEST(Functoriality, InterfaceMismatch) {
  EXPECT_THROW(check_functoriality(three_segments(0), three_segments(0)), InterfaceMismatch);
}

TEST(Faithfulness, SixPoints) {
  const Report r = check_faithfulness(standard_object(3), standard_object(3), 2);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.get("hom_size"), "45");
  EXPECT_EQ(r.get("images"), "45");
  EXPECT_EQ(r.get("plain_images"), "15");
  EXPECT_EQ(r.get("plain_collapse"), "wagers 0 vs 1 share one graph");
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(Faithfulness, SingletonHomSet) {
  const Report r = check_faithfulness(standard_object(1), standard_object(1), 0);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.get("images"), "1");
}

}  // namespace
}  // namespace igcob
