#include "igcob/graph.hpp"

#include <algorithm>
#include <cctype>

#include "igcob/errors.hpp"

namespace igcob {

bool is_plain_id(std::string_view id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']' || c == ',';
  });
}

Trace trace_of(std::string_view id) {
  if (is_plain_id(id)) return {std::string(id)};
  if (id.size() < 2 || id.front() != '[' || id.back() != ']') throw InvalidId(std::string(id));
  Trace out;
  std::string_view body = id.substr(1, id.size() - 2);
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string_view part = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
    if (!is_plain_id(part)) throw InvalidId(std::string(id));
    out.emplace_back(part);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() < 2) throw InvalidId(std::string(id));
  return out;
}

EdgeId id_of_trace(const Trace& trace) {
  if (trace.size() == 1) return trace.front();
  std::string out = "[";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) out += ',';
    out += trace[i];
  }
  out += ']';
  return out;
}

Trace flatten(std::span<const Trace> parts) {
  Trace out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Graph Graph::make(std::set<VertexId> vertices, std::span<const EdgeSpec> edges) {
  Graph g;
  for (const auto& v : vertices) {
    if (!is_plain_id(v)) throw InvalidId(v);
  }
  g.vertices_ = std::move(vertices);
  g.edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    if (!g.vertices_.contains(spec.source)) throw UnknownVertex(spec.id, spec.source);
    if (!g.vertices_.contains(spec.target)) throw UnknownVertex(spec.id, spec.target);
    Trace trace = trace_of(spec.id);
    if (!g.index_.emplace(spec.id, g.edges_.size()).second) throw DuplicateEdgeId(spec.id);
    g.edges_.push_back(Edge{spec.id, spec.source, spec.target, std::move(trace)});
  }
  return g;
}

std::optional<std::size_t> Graph::find_edge(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NormalForm normal_form(const Graph& g) {
  NormalForm nf;
  nf.vertices = g.vertices();
  nf.edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) nf.edges.emplace_back(e.trace, e.source, e.target);
  std::sort(nf.edges.begin(), nf.edges.end());
  return nf;
}

std::vector<std::pair<VertexId, VertexId>> endpoint_multiset(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) out.emplace_back(e.source, e.target);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<VertexId> symmetric_difference(const std::set<VertexId>& a, const std::set<VertexId>& b) {
  std::set<VertexId> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.end()));
  return out;
}

std::set<VertexId> intersection(const std::set<VertexId>& a, const std::set<VertexId>& b) {
  std::set<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace igcob
