#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "igcob/alternating.hpp"
#include "igcob/finite_group.hpp"
#include "igcob/graph.hpp"
#include "igcob/report.hpp"

namespace igcob {

/// Image of each edge of E(from, to), listed in graph order, under one group
/// element. Used to specify left actions (element of γ(from)) and right
/// actions (element of γ(to)).
struct ActionSpec {
  VertexId from;
  VertexId to;
  std::size_t element;
  std::vector<EdgeId> images;
};

/// A graph with a finite group per vertex, a left action of γ(v) and a right
/// action of γ(v') on each E(v, v'), the two commuting.
class BimodularGraph {
 public:
  BimodularGraph() = default;

  /// Vertices missing from `groups` get the trivial group. Actions not
  /// mentioned are trivial; partially specified actions are closed under
  /// products and must cover the whole group. Throws InvalidAction,
  /// InvalidGroup, PreconditionViolation.
  static BimodularGraph make(Graph graph, std::map<VertexId, FiniteGroup> groups,
                             std::span<const ActionSpec> left = {},
                             std::span<const ActionSpec> right = {});

  const Graph& graph() const { return graph_; }
  const FiniteGroup& group(const VertexId& v) const;
  const std::map<VertexId, FiniteGroup>& groups() const { return groups_; }

  /// λ_g(e) for g ∈ γ(source(e)).
  std::size_t act_left(std::size_t g, std::size_t edge) const;
  /// ρ_h(e) for h ∈ γ(target(e)).
  std::size_t act_right(std::size_t edge, std::size_t h) const;

  /// Full action tables as ActionSpecs (one per element and vertex pair).
  std::vector<ActionSpec> left_specs() const;
  std::vector<ActionSpec> right_specs() const;

  bool all_groups_trivial() const;

 private:
  struct Block {
    std::vector<std::size_t> edges;             // global edge indices
    std::vector<std::vector<std::size_t>> left;   // [g][local] -> local
    std::vector<std::vector<std::size_t>> right;  // [h][local] -> local
  };

  Graph graph_;
  std::map<VertexId, FiniteGroup> groups_;
  std::vector<Block> blocks_;
  std::map<std::pair<VertexId, VertexId>, std::size_t> block_index_;
  std::vector<std::pair<std::size_t, std::size_t>> slot_;  // edge -> (block, local)
};

/// Alternating paths of two bimodular graphs grouped into orbits of the
/// junction groups. Member `paths` holds every boundary-to-boundary
/// alternating path; `orbit_of[i]` is the orbit index of paths[i];
/// `representatives[k]` is the member of orbit k with the least trace.
struct OrbitQuotient {
  std::vector<Path> paths;
  std::vector<std::size_t> orbit_of;
  std::vector<std::size_t> representatives;
  BimodularGraph result;
};

/// Orbits of the length-2 alternating paths e e' with endpoints in
/// V^F Δ V^G under b ⊳ (e, e') = (ρ_b(e), λ_{b⁻¹}(e')).
/// Throws IncompatibleGroups, IncompatibleActions.
BimodularGraph bimod_compose2(const BimodularGraph& f, const BimodularGraph& g);

/// Execution quotiented by the product of the junction groups.
/// Throws InfinitePathSet, IncompatibleGroups, IncompatibleActions.
BimodularGraph bimod_execute(const BimodularGraph& f, const BimodularGraph& g);

/// bimod_execute with the orbit bookkeeping exposed.
OrbitQuotient bimod_quotient(const BimodularGraph& f, const BimodularGraph& g);

/// Acting on any representative by any junction element stays inside its
/// computed orbit, and the boundary actions do not depend on the representative.
Report check_well_defined(const BimodularGraph& f, const BimodularGraph& g);

}  // namespace igcob
