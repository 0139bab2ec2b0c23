#pragma once

// Reference implementations used only by tests. They work directly on edge
// lists and share no code with the derived-graph machinery they check.

#include <cstdint>
#include <vector>

#include "igcob/cob0.hpp"
#include "igcob/graph.hpp"

namespace igcob::oracle {

struct PathVerdict {
  bool infinite = false;
  /// Flattened traces of all boundary-to-boundary alternating paths, sorted.
  std::vector<Trace> paths;
};

/// Depth-first enumeration of alternating paths. A walk longer than the total
/// edge count repeats an edge and so can be pumped; more than
/// 4^(|E^G|+|E^H|) walks also count as infinite.
PathVerdict enumerate_paths(const Graph& g, const Graph& h);

struct CycleVerdict {
  bool infinite = false;
  /// Directed prime classes, each as its least rotation of edge ids, sorted.
  std::vector<std::vector<EdgeId>> classes;
  /// Classes up to rotation and backwards traversal.
  std::size_t unoriented = 0;
};

/// Enumerates closed alternating walks of length <= 2(|E^G|+|E^H|) by
/// iterative deepening; the set is infinite iff some prime closed walk uses an
/// edge twice.
CycleVerdict enumerate_cycles(const Graph& g, const Graph& h);

/// Composition by union-find on the glued boundary points.
Cob0Morphism glue_by_union_find(const Cob0Morphism& m, const Cob0Morphism& n);

/// Every rotation compared explicitly.
std::vector<EdgeId> least_rotation_brute(const std::vector<EdgeId>& seq);
bool is_power_brute(const std::vector<EdgeId>& seq);

}  // namespace igcob::oracle
