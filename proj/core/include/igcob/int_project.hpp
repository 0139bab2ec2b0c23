#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "igcob/alternating.hpp"
#include "igcob/ext_nat.hpp"
#include "igcob/graph.hpp"

namespace igcob {

using Label = std::string;
using LabelSet = std::set<Label>;

/// Vertex naming for the tagged disjoint union A ⊔ B.
VertexId domain_vertex(std::string_view label);    // "L:<label>"
VertexId codomain_vertex(std::string_view label);  // "R:<label>"

/// A morphism A -> B of Int(Grph): a graph on the tagged union A ⊔ B.
class IntMorphism {
 public:
  IntMorphism() = default;

  /// Throws PreconditionViolation unless the vertex set is exactly the tagged A ⊔ B.
  static IntMorphism make(LabelSet domain, LabelSet codomain, Graph graph);

  const LabelSet& domain() const { return domain_; }
  const LabelSet& codomain() const { return codomain_; }
  const Graph& graph() const { return graph_; }

 private:
  LabelSet domain_;
  LabelSet codomain_;
  Graph graph_;
};

/// Both graphs after moving the shared B-vertices to a common "M:" namespace.
/// Edge ids of `g` that clash with ids of `f` are primed until unique.
std::pair<Graph, Graph> glue_interface(const IntMorphism& f, const IntMorphism& g);

/// Composition by execution. Throws InterfaceMismatch, InfinitePathSet.
IntMorphism int_compose(const IntMorphism& f, const IntMorphism& g);

/// Cycle count across the shared interface.
ExtNat int_measure(const IntMorphism& f, const IntMorphism& g, Orientation mode);

/// Two edges L:a -> R:a and R:a -> L:a per point, with ids "1:a>" and "1:a<".
IntMorphism int_identity(const LabelSet& objects);

bool is_identity_edge_id(std::string_view id);

/// Drops identity edges from a flattened trace.
Trace erase_identity_edges(const Trace& trace);

/// A graph with a wager. Wagers are extended naturals in the unweighted model.
struct Project {
  ExtNat wager;
  Graph graph;
};

/// (a, A) ∷ (b, B) = (a + b + measure(A, B), A ∷ B). Throws InfinitePathSet.
Project project_execute(const Project& p, const Project& q, Orientation mode);

struct IntProject {
  ExtNat wager;
  IntMorphism morphism;
};

/// Project composition in the Int category.
IntProject int_project_compose(const IntProject& p, const IntProject& q, Orientation mode);

}  // namespace igcob
