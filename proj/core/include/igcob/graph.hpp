#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace igcob {

using VertexId = std::string;
using EdgeId = std::string;

/// The base-edge sequence an edge stands for. Edges produced by execution
/// carry the flattened sequence of the alternating path they came from and use
/// "[e1,e2,...]" as their id; ordinary edges have a one-element trace.
using Trace = std::vector<EdgeId>;

struct EdgeSpec {
  EdgeId id;
  VertexId source;
  VertexId target;
};

struct Edge {
  EdgeId id;
  VertexId source;
  VertexId target;
  Trace trace;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed multigraph with identified edges. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws UnknownVertex, DuplicateEdgeId or InvalidId.
  static Graph make(std::set<VertexId> vertices, std::span<const EdgeSpec> edges);

  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty() && edges_.empty(); }

  bool has_vertex(std::string_view v) const { return vertices_.contains(std::string(v)); }
  std::optional<std::size_t> find_edge(std::string_view id) const;

 private:
  std::set<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<EdgeId, std::size_t> index_;
};

inline Graph make_graph(std::set<VertexId> vertices, std::span<const EdgeSpec> edges) {
  return Graph::make(std::move(vertices), edges);
}
inline Graph make_graph(std::set<VertexId> vertices, std::initializer_list<EdgeSpec> edges) {
  return Graph::make(std::move(vertices), std::span<const EdgeSpec>(edges.begin(), edges.size()));
}

/// True for a nonempty token free of whitespace and of the trace delimiters "[],".
bool is_plain_id(std::string_view id);

/// Splits "[a,b]" into {a,b}; a plain id maps to itself. Throws InvalidId.
Trace trace_of(std::string_view id);

/// Inverse of trace_of: one-element traces keep the bare id.
EdgeId id_of_trace(const Trace& trace);

/// Concatenates constituent traces.
Trace flatten(std::span<const Trace> parts);

/// Vertex set plus sorted (trace, source, target) multiset: two graphs with
/// equal normal forms agree up to the naming of nested execution results.
struct NormalForm {
  std::set<VertexId> vertices;
  std::vector<std::tuple<Trace, VertexId, VertexId>> edges;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const Graph& g);

/// Sorted (source, target) multiset.
std::vector<std::pair<VertexId, VertexId>> endpoint_multiset(const Graph& g);

std::set<VertexId> symmetric_difference(const std::set<VertexId>& a, const std::set<VertexId>& b);
std::set<VertexId> intersection(const std::set<VertexId>& a, const std::set<VertexId>& b);

}  // namespace igcob
