#pragma once

#include "igcob/alternating.hpp"
#include "igcob/ext_nat.hpp"
#include "igcob/graph.hpp"
#include "igcob/report.hpp"

namespace igcob {

/// G ∷ H: vertices V^G Δ V^H, one edge per boundary-to-boundary alternating
/// path, identified by its flattened trace. Throws InfinitePathSet.
Graph execute(const Graph& g, const Graph& h);

/// Number of prime alternating cycle classes; omega when that set is infinite.
ExtNat measure(const Graph& g, const Graph& h, Orientation mode);

/// Requires V^F ∩ V^G ∩ V^H = ∅ (else PreconditionViolation). Compares the
/// normal forms of (F∷G)∷H and F∷(G∷H). Propagates InfinitePathSet.
Report check_associativity(const Graph& f, const Graph& g, const Graph& h);

/// |C(F,G∷H)| + |C(G,H)| = |C(H,F∷G)| + |C(F,G)|. Propagates
/// InfinitePathSet and InfiniteCycleSet; PreconditionViolation as above.
Report check_trefoil(const Graph& f, const Graph& g, const Graph& h, Orientation mode);

/// Throws PreconditionViolation when the three vertex sets share a vertex.
void require_empty_triple_intersection(const Graph& f, const Graph& g, const Graph& h);

}  // namespace igcob
