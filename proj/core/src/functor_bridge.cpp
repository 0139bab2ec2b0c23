#include "igcob/functor_bridge.hpp"

#include <map>
#include <tuple>

#include "igcob/text_format.hpp"

namespace igcob {

IntMorphism fundamental_graph(const Cob0Morphism& m) {
  std::set<VertexId> vertices;
  for (const auto& p : m.boundary_points()) vertices.insert(p.to_string());
  std::vector<EdgeSpec> edges;
  for (const auto& [x, y] : m.matching()) {
    const auto xs = x.to_string();
    const auto ys = y.to_string();
    edges.push_back({xs + ">" + ys, xs, ys});
    edges.push_back({ys + ">" + xs, ys, xs});
  }
  return IntMorphism::make(m.source(), m.target(), make_graph(std::move(vertices), edges));
}

IntProject functor_bar(const Cob0Morphism& m) { return {ExtNat(m.circles()), fundamental_graph(m)}; }

namespace {

bool same_endpoints(const Graph& a, const Graph& b) {
  return a.vertices() == b.vertices() && endpoint_multiset(a) == endpoint_multiset(b);
}

}  // namespace

Report check_functoriality(const Cob0Morphism& m, const Cob0Morphism& n) {
  const Cob0Morphism composite = cob0_compose(m, n);
  const IntMorphism fm = fundamental_graph(m);
  const IntMorphism fn = fundamental_graph(n);
  const IntMorphism lhs = fundamental_graph(composite);
  const IntMorphism rhs = int_compose(fm, fn);
  const ExtNat unoriented = int_measure(fm, fn, Orientation::Unoriented);
  const ExtNat directed = int_measure(fm, fn, Orientation::Directed);

  const ExtNat lhs_wager(composite.circles());
  const ExtNat rhs_wager = ExtNat(m.circles()) + ExtNat(n.circles()) + unoriented;
  const bool graph_ok = same_endpoints(lhs.graph(), rhs.graph());
  const bool wager_ok = lhs_wager == rhs_wager;
  const bool doubling_ok = unoriented.is_finite() && directed == ExtNat(2 * unoriented.value());
  const bool directed_convention = lhs_wager == ExtNat(m.circles()) + ExtNat(n.circles()) + directed;

  Report r;
  r.property = "functor";
  r.verdict = graph_ok && wager_ok && doubling_ok ? Verdict::Pass : Verdict::Fail;
  r.set("graph_equal", graph_ok ? "yes" : "no");
  r.set("wager_lhs", lhs_wager.to_string());
  r.set("wager_rhs", rhs_wager.to_string());
  r.set("measure_unoriented", unoriented.to_string());
  r.set("measure_directed", directed.to_string());
  r.set("directed_is_twice_unoriented", doubling_ok ? "yes" : "no");
  if (!directed_convention) {
    r.set("directed_convention", "wager equation fails when counting directed cycles");
  }
  if (!r.passed()) {
    r.witnesses.push_back(format_cob("M", m) + format_cob("N", n));
  }
  return r;
}

Report check_faithfulness(const LabelSet& source, const LabelSet& target, std::uint64_t max_circles) {
  const auto homs = cob0_enumerate(source, target, max_circles);

  using Key = std::tuple<std::set<VertexId>, std::vector<std::pair<VertexId, VertexId>>, ExtNat>;
  std::map<Key, std::size_t> images;
  std::map<std::vector<std::pair<VertexId, VertexId>>, std::size_t> plain_images;
  Report r;
  r.property = "faithful";
  r.verdict = Verdict::Pass;

  std::optional<std::pair<std::size_t, std::size_t>> collapse;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    const IntProject image = functor_bar(homs[i]);
    const auto& graph = image.morphism.graph();
    auto [it, fresh] = images.emplace(Key{graph.vertices(), endpoint_multiset(graph), image.wager}, i);
    if (!fresh) {
      r.verdict = Verdict::Fail;
      r.witnesses.push_back(format_cob("M", homs[it->second]) + format_cob("N", homs[i]));
    }
    auto [pit, pfresh] = plain_images.emplace(endpoint_multiset(graph), i);
    if (!pfresh && !collapse && !(homs[pit->second] == homs[i])) collapse.emplace(pit->second, i);
  }

  r.set("source_size", source.size());
  r.set("target_size", target.size());
  r.set("max_circles", max_circles);
  r.set("hom_size", homs.size());
  r.set("images", images.size());
  r.set("plain_images", plain_images.size());
  if (max_circles >= 1 && !homs.empty()) {
    if (collapse) {
      const auto& [a, b] = *collapse;
      r.set("plain_collapse", "wagers " + std::to_string(homs[a].circles()) + " vs " +
                                  std::to_string(homs[b].circles()) + " share one graph");
      r.witnesses.push_back(format_cob("collapsed_a", homs[a]) + format_cob("collapsed_b", homs[b]));
    } else {
      r.verdict = Verdict::Fail;
      r.set("plain_collapse", "none found");
    }
  }
  return r;
}

}  // namespace igcob
