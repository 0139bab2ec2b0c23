#include <gtest/gtest.h>

#include <algorithm>

#include "igcob/errors.hpp"
#include "igcob/execution.hpp"
#include "igcob/int_project.hpp"
#include "igcob/random_instances.hpp"

namespace igcob {
namespace {

LabelSet standard_labels(std::size_t n, const std::string& prefix) {
  LabelSet out;
  for (std::size_t i = 1; i <= n; ++i) out.insert(prefix + std::to_string(i));
  return out;
}

IntMorphism morphism(LabelSet a, LabelSet b, std::initializer_list<EdgeSpec> edges) {
  std::set<VertexId> vs;
  for (const auto& x : a) vs.insert(domain_vertex(x));
  for (const auto& y : b) vs.insert(codomain_vertex(y));
  return IntMorphism::make(std::move(a), std::move(b), make_graph(vs, edges));
}

// Endpoint multiset of `m` with every edge whose flattened trace is made of
// identity edges only dropped, and the rest kept: the identity laws hold up
// to that erasure.
std::vector<std::pair<VertexId, VertexId>> erased_endpoints(const IntMorphism& m) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& e : m.graph().edges()) {
    if (!erase_identity_edges(e.trace).empty()) out.emplace_back(e.source, e.target);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Trace> erased_traces(const IntMorphism& m) {
  std::vector<Trace> out;
  for (const auto& e : m.graph().edges()) out.push_back(erase_identity_edges(e.trace));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Trace> traces(const IntMorphism& m) {
  std::vector<Trace> out;
  for (const auto& e : m.graph().edges()) out.push_back(e.trace);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(IntMorphism, RejectsWrongVertexSet) {
  EXPECT_THROW(IntMorphism::make({"a"}, {"b"}, make_graph({"L:a"}, {})), PreconditionViolation);
  EXPECT_NO_THROW(morphism({"a"}, {"a"}, {{"e", "L:a", "R:a"}}));
}

TEST(IntCompose, ThroughInterface) {
  const auto f = morphism({"a"}, {"b"}, {{"e", "L:a", "R:b"}});
  const auto g = morphism({"b"}, {"c"}, {{"g", "L:b", "R:c"}});
  const auto r = int_compose(f, g);
  EXPECT_EQ(r.domain(), LabelSet{"a"});
  EXPECT_EQ(r.codomain(), LabelSet{"c"});
  ASSERT_EQ(r.graph().edge_count(), 1u);
  EXPECT_EQ(r.graph().edges()[0].source, "L:a");
  EXPECT_EQ(r.graph().edges()[0].target, "R:c");
  EXPECT_EQ(r.graph().edges()[0].trace, (Trace{"e", "g"}));
}

TEST(IntCompose, NoBoundaryPath) {
  const auto f = morphism({"a"}, {"b"}, {{"e", "R:b", "L:a"}});
  const auto g = morphism({"b"}, {"c"}, {{"g", "L:b", "R:c"}});
  const auto r = int_compose(f, g);
  EXPECT_EQ(r.graph().edge_count(), 0u);
  EXPECT_EQ(r.graph().vertices(), (std::set<VertexId>{"L:a", "R:c"}));
}

TEST(IntCompose, InterfaceMismatch) {
  const auto f = morphism({"a"}, {"b"}, {});
  const auto g = morphism({"x"}, {"c"}, {});
  EXPECT_THROW(int_compose(f, g), InterfaceMismatch);
}

TEST(IntCompose, ClashingIdsArePrimed) {
  const auto f = morphism({"a"}, {"b"}, {{"e", "L:a", "R:b"}});
  const auto g = morphism({"b"}, {"c"}, {{"e", "L:b", "R:c"}});
  const auto r = int_compose(f, g);
  ASSERT_EQ(r.graph().edge_count(), 1u);
  EXPECT_EQ(r.graph().edges()[0].trace, (Trace{"e", "e'"}));
}

TEST(IntIdentity, Shape) {
  EXPECT_EQ(int_identity({}).graph().edge_count(), 0u);
  const auto id = int_identity({"a"});
  EXPECT_EQ(id.graph().edge_count(), 2u);
  EXPECT_TRUE(is_identity_edge_id("1:a>"));
  EXPECT_TRUE(is_identity_edge_id("1:a<''"));
  EXPECT_FALSE(is_identity_edge_id("e"));
  const auto idid = int_compose(int_identity({"a", "b"}), int_identity({"a", "b"}));
  EXPECT_EQ(endpoint_multiset(idid.graph()), endpoint_multiset(int_identity({"a", "b"}).graph()));
}

TEST(IntIdentity, LawsOnHandExample) {
  const auto f = morphism({"a", "b"}, {"c"}, {{"e", "L:a", "R:c"}, {"k", "L:b", "L:a"}, {"r", "R:c", "L:b"}});
  const auto left = int_compose(int_identity({"a", "b"}), f);
  const auto right = int_compose(f, int_identity({"c"}));
  EXPECT_EQ(endpoint_multiset(left.graph()), endpoint_multiset(f.graph()));
  EXPECT_EQ(endpoint_multiset(right.graph()), endpoint_multiset(f.graph()));
  EXPECT_EQ(erased_traces(left), traces(f));
  EXPECT_EQ(erased_traces(right), traces(f));
}

TEST(IntIdentity, LawsOnRandomMorphisms) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = trial_rng(5, i);
    const LabelSet a = standard_labels(rng() % 3, "a");
    const LabelSet b = standard_labels(1 + rng() % 3, "b");
    const auto f = random_int_morphism(rng, a, b, 6, "f");
    const auto left = int_compose(int_identity(a), f);
    const auto right = int_compose(f, int_identity(b));
    EXPECT_EQ(endpoint_multiset(left.graph()), endpoint_multiset(f.graph())) << i;
    EXPECT_EQ(endpoint_multiset(right.graph()), endpoint_multiset(f.graph())) << i;
    EXPECT_EQ(erased_traces(left), traces(f)) << i;
    EXPECT_EQ(erased_traces(right), traces(f)) << i;
    EXPECT_EQ(erased_endpoints(left), endpoint_multiset(f.graph())) << i;
  }
}

TEST(IntCompose, AssociativeOnRandomTriples) {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = trial_rng(6, i);
    const LabelSet a = standard_labels(rng() % 3, "a");
    const LabelSet b = standard_labels(rng() % 3, "b");
    const LabelSet c = standard_labels(rng() % 3, "c");
    const LabelSet d = standard_labels(rng() % 3, "d");
    const auto f = random_int_morphism(rng, a, b, 4, "f");
    const auto g = random_int_morphism(rng, b, c, 4, "g");
    const auto h = random_int_morphism(rng, c, d, 4, "h");
    try {
      const auto lhs = int_compose(int_compose(f, g), h);
      const auto rhs = int_compose(f, int_compose(g, h));
      EXPECT_EQ(traces(lhs), traces(rhs)) << i;
      EXPECT_EQ(endpoint_multiset(lhs.graph()), endpoint_multiset(rhs.graph())) << i;
      ++checked;
    } catch (const InfinitePathSet&) {
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(ProjectExecute, Examples) {
  const Graph b = make_graph({"x", "y"}, {{"q", "x", "y"}});
  const Project unit{0, Graph{}};
  const Project r = project_execute(unit, Project{3, b}, Orientation::Directed);
  EXPECT_EQ(r.wager, ExtNat(3));
  EXPECT_EQ(normal_form(r.graph), normal_form(b));

  const Project p{1, make_graph({"a", "b"}, {{"e", "a", "b"}})};
  const Project q{2, make_graph({"a", "b"}, {{"f", "b", "a"}})};
  const Project pq = project_execute(p, q, Orientation::Directed);
  EXPECT_EQ(pq.wager, ExtNat(4));
  EXPECT_EQ(pq.graph.edge_count(), 0u);
  EXPECT_TRUE(pq.graph.vertices().empty());

  const Project inf{0, make_graph({"a", "b"}, {{"f1", "b", "a"}, {"f2", "b", "a"}})};
  const Project po{0, make_graph({"a", "b"}, {{"e", "a", "b"}})};
  EXPECT_EQ(project_execute(po, inf, Orientation::Directed).wager, ExtNat::omega());
}

TEST(ProjectExecute, UnitOnRandomProjects) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = trial_rng(8, i);
    const auto p = random_pair(rng, 6, 6);
    const Project x{rng() % 5, p.g};
    const Project unit{0, Graph{}};
    for (const auto mode : {Orientation::Directed, Orientation::Unoriented}) {
      const Project l = project_execute(unit, x, mode);
      const Project r = project_execute(x, unit, mode);
      EXPECT_EQ(l.wager, x.wager);
      EXPECT_EQ(r.wager, x.wager);
      EXPECT_EQ(normal_form(l.graph), normal_form(x.graph));
      EXPECT_EQ(normal_form(r.graph), normal_form(x.graph));
    }
  }
}

TEST(ProjectExecute, WagerAssociativeOnRandomTriples) {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = trial_rng(9, i);
    const auto t = random_triple(rng, 8, 8);
    const Project p{rng() % 3, t.f}, q{rng() % 3, t.g}, r{rng() % 3, t.h};
    try {
      const Project lhs = project_execute(project_execute(p, q, Orientation::Directed), r,
                                          Orientation::Directed);
      const Project rhs = project_execute(p, project_execute(q, r, Orientation::Directed),
                                          Orientation::Directed);
      if (lhs.wager.is_omega() || rhs.wager.is_omega()) continue;
      EXPECT_EQ(lhs.wager, rhs.wager) << i;
      EXPECT_EQ(normal_form(lhs.graph), normal_form(rhs.graph)) << i;
      ++checked;
    } catch (const InfinitePathSet&) {
    }
  }
  EXPECT_GT(checked, 500u);
}

}  // namespace
}  // namespace igcob
