#include <gtest/gtest.h>

#include "igcob/bimodular.hpp"
#include "igcob/errors.hpp"
#include "igcob/execution.hpp"
#include "igcob/random_instances.hpp"

namespace igcob {
namespace {

const FiniteGroup kZ2 = FiniteGroup::cyclic(2);

BimodularGraph swap_left_factor() {
  const ActionSpec swap{"v", "w", 1, {"e2", "e1"}};
  return BimodularGraph::make(make_graph({"v", "w"}, {{"e1", "v", "w"}, {"e2", "v", "w"}}), {{"w", kZ2}}, {},
                              std::span<const ActionSpec>(&swap, 1));
}

BimodularGraph right_factor(std::initializer_list<EdgeSpec> edges) {
  std::set<VertexId> vs{"w", "u"};
  return BimodularGraph::make(make_graph(vs, edges), {{"w", kZ2}});
}

TEST(FiniteGroup, Builders) {
  EXPECT_EQ(FiniteGroup::trivial().order(), 1u);
  EXPECT_EQ(FiniteGroup::cyclic(4).order(), 4u);
  EXPECT_EQ(FiniteGroup::cyclic(4).mul(3, 2), 1u);
  EXPECT_EQ(FiniteGroup::cyclic(4).inverse(1), 3u);
  EXPECT_EQ(FiniteGroup::klein_four().order(), 4u);
  const auto s3 = FiniteGroup::symmetric3();
  EXPECT_EQ(s3.order(), 6u);
  bool abelian = true;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) abelian = abelian && s3.mul(a, b) == s3.mul(b, a);
  EXPECT_FALSE(abelian);
  EXPECT_EQ(FiniteGroup::cyclic(3).describe(), "cyclic:3");
}

TEST(FiniteGroup, RejectsNonGroups) {
  EXPECT_THROW(FiniteGroup::from_table({"x", "y"}, {{0, 1}, {1, 1}}), InvalidGroup);
  EXPECT_THROW(FiniteGroup::from_table({"x", "y"}, {{0, 0}, {1, 1}}), InvalidGroup);
  EXPECT_THROW(FiniteGroup::from_table({"x"}, {{0, 0}}), InvalidGroup);
  // Identity and inverses but not associative.
  EXPECT_THROW(FiniteGroup::from_table({"e", "a", "b", "c", "d"},
                                       {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
               InvalidGroup);
}

TEST(BimodularGraph, RejectsBadActions) {
  const Graph g = make_graph({"v", "w"}, {{"e1", "v", "w"}, {"e2", "v", "w"}});
  const ActionSpec not_perm{"v", "w", 1, {"e1", "e1"}};
  EXPECT_THROW(BimodularGraph::make(g, {{"w", kZ2}}, {}, std::span<const ActionSpec>(&not_perm, 1)), InvalidAction);
  // The generator of Z3 cannot act as a transposition.
  const ActionSpec order2{"v", "w", 1, {"e2", "e1"}};
  EXPECT_THROW(BimodularGraph::make(g, {{"w", FiniteGroup::cyclic(3)}}, {}, std::span<const ActionSpec>(&order2, 1)),
               InvalidAction);
  // Left and right actions that do not commute.
  const Graph g3 = make_graph({"v", "w"}, {{"e1", "v", "w"}, {"e2", "v", "w"}, {"e3", "v", "w"}});
  const ActionSpec l{"v", "w", 1, {"e2", "e1", "e3"}};
  const ActionSpec r{"v", "w", 1, {"e1", "e3", "e2"}};
  EXPECT_THROW(BimodularGraph::make(g3, {{"v", kZ2}, {"w", kZ2}}, std::span<const ActionSpec>(&l, 1),
                                    std::span<const ActionSpec>(&r, 1)),
               InvalidAction);
}

TEST(BimodCompose2, SwapMergesPair) {
  const auto f = swap_left_factor();
  const auto g = right_factor({{"f", "w", "u"}});
  const auto r = bimod_compose2(f, g);
  EXPECT_EQ(r.graph().edge_count(), 1u);
  EXPECT_EQ(r.graph().vertices(), (std::set<VertexId>{"v", "u"}));
  EXPECT_EQ(bimod_execute(f, g).graph().edge_count(), 1u);
}

TEST(BimodCompose2, TrivialActionKeepsSingletons) {
  const auto f = BimodularGraph::make(make_graph({"v", "w"}, {{"e1", "v", "w"}, {"e2", "v", "w"}}), {{"w", kZ2}});
  const auto g = right_factor({{"f", "w", "u"}});
  EXPECT_EQ(bimod_compose2(f, g).graph().edge_count(), 2u);
}

TEST(BimodCompose2, AllTrivialIsPlainComposition) {
  const Graph fg = make_graph({"v", "w"}, {{"e1", "v", "w"}, {"e2", "v", "w"}});
  const Graph gg = make_graph({"w", "u"}, {{"f", "w", "u"}, {"f2", "w", "u"}});
  const auto r = bimod_compose2(BimodularGraph::make(fg, {}), BimodularGraph::make(gg, {}));
  EXPECT_EQ(r.graph().edge_count(), 4u);
}

TEST(BimodExecute, SwapWithSecondRightEdge) {
  const auto f = swap_left_factor();
  const auto g = right_factor({{"f", "w", "u"}, {"f'", "w", "u"}});
  const auto q = bimod_quotient(f, g);
  EXPECT_EQ(q.paths.size(), 4u);
  EXPECT_EQ(q.result.graph().edge_count(), 2u);
  EXPECT_EQ(q.representatives.size(), 2u);
  const Report wd = check_well_defined(f, g);
  EXPECT_TRUE(wd.passed()) << wd.to_text();
}

TEST(BimodExecute, RejectsIncompatibleGroups) {
  const auto f = swap_left_factor();
  const auto g = BimodularGraph::make(make_graph({"w", "u"}, {{"f", "w", "u"}}), {{"w", FiniteGroup::cyclic(3)}});
  EXPECT_THROW(bimod_execute(f, g), IncompatibleGroups);
  const auto same_id = right_factor({{"e1", "w", "u"}});
  EXPECT_THROW(bimod_execute(f, same_id), IncompatibleActions);
}

TEST(BimodExecute, BoundaryActionsDescend) {
  // Z2 at v swaps e1,e2 on the left and commutes with the swap on the right.
  const Graph fg = make_graph({"v", "w"}, {{"e1", "v", "w"}, {"e2", "v", "w"}});
  const ActionSpec l{"v", "w", 1, {"e2", "e1"}};
  const ActionSpec r{"v", "w", 1, {"e2", "e1"}};
  const auto f = BimodularGraph::make(fg, {{"v", kZ2}, {"w", kZ2}}, std::span<const ActionSpec>(&l, 1),
                                      std::span<const ActionSpec>(&r, 1));
  const auto g = right_factor({{"f", "w", "u"}});
  const auto out = bimod_execute(f, g);
  EXPECT_EQ(out.graph().edge_count(), 1u);
  EXPECT_EQ(out.group("v"), kZ2);
  EXPECT_EQ(out.act_left(1, 0), 0u);
  EXPECT_TRUE(check_well_defined(f, g).passed());
}

TEST(BimodExecute, DegeneracyOnRandomInstances) {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = trial_rng(31, i);
    const auto p = random_bimodular_pair(rng, 6, 6, true);
    ASSERT_TRUE(p.f.all_groups_trivial());
    try {
      const auto plain = execute(p.f.graph(), p.g.graph());
      EXPECT_EQ(normal_form(bimod_execute(p.f, p.g).graph()), normal_form(plain)) << i;
      ++checked;
    } catch (const InfinitePathSet&) {
      EXPECT_THROW(bimod_execute(p.f, p.g), InfinitePathSet);
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(BimodExecute, RandomInstancesAreWellDefined) {
  std::size_t checked = 0, merged = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = trial_rng(37, i);
    const auto p = random_bimodular_pair(rng, 5, 6, false);
    try {
      const auto q = bimod_quotient(p.f, p.g);
      EXPECT_LE(q.result.graph().edge_count(), q.paths.size());
      EXPECT_EQ(q.orbit_of.size(), q.paths.size());
      const Report r = check_well_defined(p.f, p.g);
      EXPECT_TRUE(r.passed()) << i << "\n" << r.to_text();
      merged += q.result.graph().edge_count() < q.paths.size() ? 1 : 0;
      ++checked;
    } catch (const InfinitePathSet&) {
    }
  }
  EXPECT_GT(checked, 100u);
  EXPECT_GT(merged, 0u);
}

}  // namespace
}  // namespace igcob
