#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "igcob/graph.hpp"

namespace igcob {

/// Which member of an interacting pair (G, H) an edge comes from.
enum class Side : std::uint8_t { Left, Right };

constexpr Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

struct EdgeRef {
  Side side;
  std::size_t index;

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

enum class Orientation : std::uint8_t { Directed, Unoriented };

const char* to_string(Orientation o);

/// A nonempty alternating path between two graphs. Construction checks that
/// consecutive edges compose and come from different graphs.
class Path {
 public:
  Path(const Graph& left, const Graph& right, std::vector<EdgeRef> steps);

  const std::vector<EdgeRef>& steps() const { return steps_; }
  const VertexId& source() const { return source_; }
  const VertexId& target() const { return target_; }
  std::size_t length() const { return steps_.size(); }

  /// Concatenated traces of the constituent edges.
  const Trace& trace() const { return trace_; }

 private:
  std::vector<EdgeRef> steps_;
  VertexId source_;
  VertexId target_;
  Trace trace_;
};

/// Nodes are the edges of both graphs (left edges first); there is an arc
/// e -> e' when e and e' lie in different graphs and target(e) = source(e').
/// Initial nodes start in the symmetric difference of the vertex sets, final
/// nodes end there. Walks are exactly the alternating paths.
class DerivedGraph {
 public:
  DerivedGraph(const Graph& left, const Graph& right);

  std::size_t node_count() const { return nodes_.size(); }
  EdgeRef edge_of(std::size_t node) const { return nodes_[node]; }
  std::size_t node_of(EdgeRef ref) const;
  const EdgeId& edge_id(std::size_t node) const { return ids_[node]; }

  const std::vector<std::size_t>& successors(std::size_t node) const { return successors_[node]; }
  bool is_initial(std::size_t node) const { return initial_[node]; }
  bool is_final(std::size_t node) const { return final_[node]; }

  /// All arcs as (from, to) node pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> arcs() const;

 private:
  std::size_t left_count_ = 0;
  std::vector<EdgeRef> nodes_;
  std::vector<EdgeId> ids_;
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<bool> initial_;
  std::vector<bool> final_;
};

inline DerivedGraph derived_graph(const Graph& g, const Graph& h) { return DerivedGraph(g, h); }

/// Every alternating path whose source and target lie in V^G Δ V^H. Throws
/// InfinitePathSet when an alternating cycle can be reached from and can
/// reach the boundary.
std::vector<Path> alternating_paths(const Graph& g, const Graph& h);

/// A prime alternating cycle up to rotation (and, in unoriented mode, up to
/// traversing it backwards).
struct CycleClass {
  /// Lexicographically least rotation of the edge-id sequence. In unoriented
  /// mode this is the smaller of the two traversal directions present.
  std::vector<EdgeId> canonical;
  std::vector<EdgeRef> steps;
  Orientation mode = Orientation::Directed;
  /// Directed classes merged into this one (1 or 2; always 1 in directed mode).
  std::size_t members = 1;
  /// The cycle is a rotation of its own backwards traversal.
  bool self_reverse = false;

  friend bool operator==(const CycleClass& a, const CycleClass& b) {
    return a.mode == b.mode && a.canonical == b.canonical;
  }
};

/// Prime alternating cycle classes. Throws InfiniteCycleSet when a strongly
/// connected component of the derived graph is not a single simple cycle.
std::vector<CycleClass> prime_cycles(const Graph& g, const Graph& h, Orientation mode);

/// Index of the lexicographically least rotation (Booth-free quadratic scan;
/// sequences here are short).
template <typename T>
std::size_t least_rotation_offset(std::span<const T> seq) {
  const std::size_t n = seq.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = seq[(k + i) % n];
      const auto& b = seq[(best + i) % n];
      if (a < b) {
        best = k;
        break;
      }
      if (b < a) break;
    }
  }
  return best;
}

template <typename T>
std::vector<T> least_rotation(std::span<const T> seq) {
  std::vector<T> out(seq.begin(), seq.end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(least_rotation_offset(seq)),
              out.end());
  return out;
}

/// False when seq is a k-fold repetition of a shorter sequence, k > 1.
template <typename T>
bool is_primitive(std::span<const T> seq) {
  const std::size_t n = seq.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = seq[i] == seq[i - d];
    if (periodic) return false;
  }
  return true;
}

}  // namespace igcob
