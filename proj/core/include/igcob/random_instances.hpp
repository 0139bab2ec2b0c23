#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "igcob/bimodular.hpp"
#include "igcob/graph.hpp"
#include "igcob/int_project.hpp"

namespace igcob {

using Rng = std::mt19937_64;

/// Independent generator for trial `index` of a campaign seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

struct GraphTriple {
  Graph f;
  Graph g;
  Graph h;
};

/// Vertex universe of 1..max_vertices points, each assigned to one or two of
/// the three graphs (never all three); 0..max_edges edges per graph with
/// globally unique ids f0.., g0.., h0...
GraphTriple random_triple(Rng& rng, std::size_t max_vertices, std::size_t max_edges);

struct GraphPair {
  Graph g;
  Graph h;
};

/// Vertices assigned to G, H or both.
GraphPair random_pair(Rng& rng, std::size_t max_vertices, std::size_t max_edges);

/// Random graph on the tagged A ⊔ B with up to max_edges edges named <prefix>0...
IntMorphism random_int_morphism(Rng& rng, const LabelSet& domain, const LabelSet& codomain,
                                std::size_t max_edges, const std::string& prefix);

struct BimodularPair {
  BimodularGraph f;
  BimodularGraph g;
};

/// Groups of order <= 4 (trivial, Z2, Z3, Z4, V4) unless `trivial_groups`.
/// Edge sets between two vertices are unions of standard bisets (a fixed
/// point, the left or right regular biset, or the free biset) so the actions
/// commute by construction; at most max_edges edges per graph.
BimodularPair random_bimodular_pair(Rng& rng, std::size_t max_vertices, std::size_t max_edges,
                                    bool trivial_groups);

}  // namespace igcob
