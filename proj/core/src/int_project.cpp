#include "igcob/int_project.hpp"

#include <unordered_set>

#include "igcob/errors.hpp"
#include "igcob/execution.hpp"

namespace igcob {

VertexId domain_vertex(std::string_view label) { return "L:" + std::string(label); }
VertexId codomain_vertex(std::string_view label) { return "R:" + std::string(label); }

namespace {

VertexId interface_vertex(std::string_view label) { return "M:" + std::string(label); }

std::set<VertexId> tagged_union(const LabelSet& domain, const LabelSet& codomain) {
  std::set<VertexId> out;
  for (const auto& a : domain) out.insert(domain_vertex(a));
  for (const auto& b : codomain) out.insert(codomain_vertex(b));
  return out;
}

}  // namespace

IntMorphism IntMorphism::make(LabelSet domain, LabelSet codomain, Graph graph) {
  if (graph.vertices() != tagged_union(domain, codomain)) {
    throw PreconditionViolation("graph vertex set is not the tagged union of domain and codomain");
  }
  IntMorphism m;
  m.domain_ = std::move(domain);
  m.codomain_ = std::move(codomain);
  m.graph_ = std::move(graph);
  return m;
}

std::pair<Graph, Graph> glue_interface(const IntMorphism& f, const IntMorphism& g) {
  if (f.codomain() != g.domain()) throw InterfaceMismatch("codomain of the first morphism differs from domain of the second");

  std::set<VertexId> f_vertices, g_vertices;
  std::unordered_map<VertexId, VertexId> f_rename, g_rename;
  for (const auto& a : f.domain()) f_rename[domain_vertex(a)] = domain_vertex(a);
  for (const auto& b : f.codomain()) {
    f_rename[codomain_vertex(b)] = interface_vertex(b);
    g_rename[domain_vertex(b)] = interface_vertex(b);
  }
  for (const auto& c : g.codomain()) g_rename[codomain_vertex(c)] = codomain_vertex(c);
  for (const auto& [from, to] : f_rename) f_vertices.insert(to);
  for (const auto& [from, to] : g_rename) g_vertices.insert(to);

  std::unordered_set<EdgeId> taken;
  std::vector<EdgeSpec> f_edges, g_edges;
  for (const auto& e : f.graph().edges()) {
    f_edges.push_back({e.id, f_rename.at(e.source), f_rename.at(e.target)});
    taken.insert(e.id);
  }
  for (const auto& e : g.graph().edges()) {
    Trace trace = e.trace;
    EdgeId id = e.id;
    while (taken.contains(id)) {
      for (auto& part : trace) part += '\'';
      id = id_of_trace(trace);
    }
    taken.insert(id);
    g_edges.push_back({id, g_rename.at(e.source), g_rename.at(e.target)});
  }
  return {make_graph(std::move(f_vertices), f_edges), make_graph(std::move(g_vertices), g_edges)};
}

IntMorphism int_compose(const IntMorphism& f, const IntMorphism& g) {
  auto [left, right] = glue_interface(f, g);
  return IntMorphism::make(f.domain(), g.codomain(), execute(left, right));
}

ExtNat int_measure(const IntMorphism& f, const IntMorphism& g, Orientation mode) {
  auto [left, right] = glue_interface(f, g);
  return measure(left, right, mode);
}

IntMorphism int_identity(const LabelSet& objects) {
  std::vector<EdgeSpec> edges;
  for (const auto& a : objects) {
    edges.push_back({"1:" + a + ">", domain_vertex(a), codomain_vertex(a)});
    edges.push_back({"1:" + a + "<", codomain_vertex(a), domain_vertex(a)});
  }
  return IntMorphism::make(objects, objects, make_graph(tagged_union(objects, objects), edges));
}

bool is_identity_edge_id(std::string_view id) {
  while (!id.empty() && id.back() == '\'') id.remove_suffix(1);
  return id.size() >= 4 && id.starts_with("1:") && (id.back() == '>' || id.back() == '<');
}

Trace erase_identity_edges(const Trace& trace) {
  Trace out;
  for (const auto& part : trace) {
    if (!is_identity_edge_id(part)) out.push_back(part);
  }
  return out;
}

Project project_execute(const Project& p, const Project& q, Orientation mode) {
  Graph graph = execute(p.graph, q.graph);
  return {p.wager + q.wager + measure(p.graph, q.graph, mode), std::move(graph)};
}

IntProject int_project_compose(const IntProject& p, const IntProject& q, Orientation mode) {
  auto [left, right] = glue_interface(p.morphism, q.morphism);
  IntMorphism composite = IntMorphism::make(p.morphism.domain(), q.morphism.codomain(), execute(left, right));
  return {p.wager + q.wager + measure(left, right, mode), std::move(composite)};
}

}  // namespace igcob
