#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "igcob/bimodular.hpp"
#include "igcob/cob0.hpp"
#include "igcob/ext_nat.hpp"
#include "igcob/graph.hpp"
#include "igcob/int_project.hpp"

namespace igcob {

struct GroupDecl {
  VertexId vertex;
  FiniteGroup group;
};

/// An action line before the element token is resolved against its group.
struct ActionDecl {
  VertexId from;
  VertexId to;
  std::string element;
  std::vector<EdgeId> images;
  std::size_t line = 0;
};

/// One `graph <name>` block. The optional lines make it a project
/// (`wager`) or a bimodular graph (`group`, `laction`, `raction`).
struct GraphBlock {
  std::string name;
  std::size_t line = 0;
  std::set<VertexId> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<std::size_t> edge_lines;
  std::optional<ExtNat> wager;
  std::vector<GroupDecl> groups;
  std::vector<ActionDecl> left_actions;
  std::vector<ActionDecl> right_actions;

  /// Validation errors are reported as ParseError at the block's line.
  Graph to_graph() const;
  Project to_project() const;
  BimodularGraph to_bimodular() const;
};

/// One `cob <name>` block.
struct CobBlock {
  std::string name;
  std::size_t line = 0;
  std::vector<Label> left;
  std::vector<Label> right;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::size_t> pair_lines;
  std::uint64_t circles = 0;

  Cob0Morphism to_cob() const;
};

/// A parsed instance file; blocks appear in file order.
struct Document {
  std::vector<GraphBlock> graphs;
  std::vector<CobBlock> cobs;
};

/// Line-oriented format, `#` starts a comment:
///   graph <name> | vertex <id>... | edge <id> <src> <tgt> | wager <n|omega>
///   group <v> cyclic:<k> | group <v> table <n> <n*n entries>
///   laction <v> <v'> <g> <images> | raction <v> <v'> <g> <images>
///   cob <name> | left <id>... | right <id>... | pair <p> <q> | circles <n>
/// Throws ParseError with a 1-based line number.
Document parse_document(std::string_view text);
Document read_document(const std::string& path);

std::string format_graph(std::string_view name, const Graph& g);
std::string format_project(std::string_view name, const Project& p);
std::string format_int_project(std::string_view name, const IntProject& p);
std::string format_cob(std::string_view name, const Cob0Morphism& m);
std::string format_bimodular(std::string_view name, const BimodularGraph& b);

/// DOT rendering; antiparallel edge pairs with matching multiplicity are drawn
/// once with dir=both.
std::string to_dot(std::string_view name, const Graph& g);

}  // namespace igcob
