#include <gtest/gtest.h>

#include "igcob/errors.hpp"
#include "igcob/random_instances.hpp"
#include "igcob/text_format.hpp"

namespace igcob {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    const Document d = parse_document(text);
    for (const auto& g : d.graphs) g.to_bimodular();
    for (const auto& c : d.cobs) c.to_cob();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(Parse, GraphBlocks) {
  const Document d = parse_document(
      "# two graphs\n"
      "graph G\n"
      "vertex a b\n"
      "edge e a b   # trailing comment\n"
      "\n"
      "graph H\n"
      "vertex b c\n"
      "edge f b c\n"
      "wager omega\n");
  ASSERT_EQ(d.graphs.size(), 2u);
  EXPECT_EQ(d.graphs[0].name, "G");
  EXPECT_EQ(d.graphs[0].line, 2u);
  const Graph g = d.graphs[0].to_graph();
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_FALSE(d.graphs[0].wager.has_value());
  EXPECT_EQ(d.graphs[1].to_project().wager, ExtNat::omega());
}

TEST(Parse, CobBlockResolvesSides) {
  const Document d = parse_document(
      "cob M\n"
      "left a1 a2\n"
      "right b1 a1\n"
      "pair a2 b1\n"
      "pair L:a1 R:a1\n"
      "circles 2\n");
  ASSERT_EQ(d.cobs.size(), 1u);
  const auto m = d.cobs[0].to_cob();
  EXPECT_EQ(m.circles(), 2u);
  EXPECT_EQ(m.partner({Boundary::Source, "a2"}), (Point{Boundary::Target, "b1"}));
  EXPECT_EQ(m.partner({Boundary::Source, "a1"}), (Point{Boundary::Target, "a1"}));
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("graph G\nvertex a\nedge e a\n"), 3u);
  EXPECT_EQ(error_line("vertex a\n"), 1u);
  EXPECT_EQ(error_line("graph G\nfrobnicate x\n"), 2u);
  EXPECT_EQ(error_line("graph G\nvertex a\nwager -3\n"), 3u);
  EXPECT_EQ(error_line("cob M\nleft a\nright a\npair a a\n"), 4u);
  EXPECT_EQ(error_line("cob M\nleft a\nright b\npair L:a R:b\ncircles x\n"), 5u);
  EXPECT_EQ(error_line("graph G\nvertex v w\nedge e v w\ngroup w cyclic:0\n"), 4u);
  EXPECT_EQ(error_line("graph G\nvertex v w\nedge e v w\ngroup w cyclic:2\nraction v w 7 e\n"), 5u);
  EXPECT_EQ(error_line("graph G\nvertex a b\nedge e a b\nedge e b a\n"), 4u);
  EXPECT_EQ(error_line("graph G\nvertex a b\nedge e a b\n"), 0u);
}

TEST(Parse, BimodularDirectives) {
  const Document d = parse_document(
      "graph F\n"
      "vertex v w\n"
      "edge e1 v w\n"
      "edge e2 v w\n"
      "group w cyclic:2\n"
      "group v klein4\n"
      "raction v w 1 e2 e1\n");
  const auto b = d.graphs[0].to_bimodular();
  EXPECT_EQ(b.group("w").order(), 2u);
  EXPECT_EQ(b.group("v").order(), 4u);
  EXPECT_EQ(b.act_right(0, 1), 1u);
  EXPECT_EQ(b.act_left(3, 0), 0u);
}

TEST(Parse, ExplicitGroupTable) {
  const Document d = parse_document(
      "graph F\n"
      "vertex v\n"
      "group v table 2 0 1 1 0\n");
  EXPECT_EQ(d.graphs[0].to_bimodular().group("v"), FiniteGroup::cyclic(2));
}

TEST(RoundTrip, RandomGraphsProjectsAndBimodularGraphs) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = trial_rng(77, i);
    const auto t = random_triple(rng, 8, 8);
    const Document d = parse_document(format_graph("F", t.f) + format_project("G", Project{i, t.g}));
    EXPECT_EQ(normal_form(d.graphs[0].to_graph()), normal_form(t.f));
    EXPECT_EQ(d.graphs[1].to_project().wager, ExtNat(i));

    const auto b = random_bimodular_pair(rng, 5, 6, false);
    const auto back = parse_document(format_bimodular("B", b.f)).graphs[0].to_bimodular();
    EXPECT_EQ(normal_form(back.graph()), normal_form(b.f.graph()));
    EXPECT_EQ(back.groups().size() <= b.f.groups().size(), true);
    for (const auto& v : b.f.graph().vertices()) EXPECT_EQ(back.group(v), b.f.group(v));
    EXPECT_EQ(back.left_specs().size(), b.f.left_specs().size());
    for (std::size_t e = 0; e < b.f.graph().edge_count(); ++e) {
      const auto& edge = b.f.graph().edges()[e];
      for (std::size_t g = 0; g < b.f.group(edge.source).order(); ++g)
        EXPECT_EQ(back.act_left(g, e), b.f.act_left(g, e));
      for (std::size_t h = 0; h < b.f.group(edge.target).order(); ++h)
        EXPECT_EQ(back.act_right(e, h), b.f.act_right(e, h));
    }
  }
}

TEST(RoundTrip, AllSmallCobordisms) {
  for (const auto& m : cob0_enumerate(standard_object(2), standard_object(2), 2)) {
    const Document d = parse_document(format_cob("M", m));
    EXPECT_EQ(d.cobs.at(0).to_cob(), m);
  }
}

TEST(Dot, SymmetricPairsDrawnOnce) {
  const Graph g = make_graph({"x", "y", "z"}, {{"u", "x", "y"}, {"v", "y", "x"}, {"w", "y", "z"}});
  const std::string dot = to_dot("G", g);
  EXPECT_NE(dot.find("\"x\" -> \"y\" [label=\"u / v\", dir=both];"), std::string::npos) << dot;
  EXPECT_NE(dot.find("\"y\" -> \"z\" [label=\"w\"];"), std::string::npos) << dot;
  EXPECT_EQ(dot.find("\"y\" -> \"x\""), std::string::npos) << dot;
}

}  // namespace
}  // namespace igcob
