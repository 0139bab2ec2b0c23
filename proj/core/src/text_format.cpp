#include "igcob/text_format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "igcob/errors.hpp"

namespace igcob {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  for (std::string tok; is >> tok;) out.push_back(std::move(tok));
  return out;
}

std::uint64_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected a natural number for ") + what + ", got '" + tok + "'");
  }
  return n;
}

FiniteGroup parse_group(const std::vector<std::string>& toks, std::size_t line) {
  // toks: group <v> <spec...>
  const std::string& kind = toks[2];
  try {
    if (kind.starts_with("cyclic:")) {
      if (toks.size() != 3) throw ParseError(line, "trailing tokens after cyclic group");
      return FiniteGroup::cyclic(parse_count(kind.substr(7), line, "cyclic order"));
    }
    if (kind == "klein4" && toks.size() == 3) return FiniteGroup::klein_four();
    if (kind == "s3" && toks.size() == 3) return FiniteGroup::symmetric3();
    if (kind == "table") {
      if (toks.size() < 4) throw ParseError(line, "table group needs an order");
      const std::size_t n = parse_count(toks[3], line, "group order");
      if (toks.size() != 4 + n * n) throw ParseError(line, "table group needs order^2 entries");
      std::vector<std::string> names;
      std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) table[a][b] = parse_count(toks[4 + a * n + b], line, "table entry");
      }
      return FiniteGroup::from_table(std::move(names), std::move(table));
    }
  } catch (const InvalidGroup& e) {
    throw ParseError(line, e.what());
  }
  throw ParseError(line, "unknown group description '" + kind + "'");
}

}  // namespace

Document parse_document(std::string_view text) {
  Document doc;
  enum class Current { None, Graph, Cob } current = Current::None;

  std::istringstream is{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++lineno;
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    auto need = [&](std::size_t n, const char* usage) {
      if (toks.size() != n) throw ParseError(lineno, std::string("usage: ") + usage);
    };
    auto graph = [&]() -> GraphBlock& {
      if (current != Current::Graph) throw ParseError(lineno, "'" + kw + "' outside a graph block");
      return doc.graphs.back();
    };
    auto cob = [&]() -> CobBlock& {
      if (current != Current::Cob) throw ParseError(lineno, "'" + kw + "' outside a cob block");
      return doc.cobs.back();
    };

    if (kw == "graph") {
      need(2, "graph <name>");
      doc.graphs.emplace_back();
      doc.graphs.back().name = toks[1];
      doc.graphs.back().line = lineno;
      current = Current::Graph;
    } else if (kw == "vertex") {
      if (toks.size() < 2) throw ParseError(lineno, "usage: vertex <id>...");
      auto& g = graph();
      for (std::size_t i = 1; i < toks.size(); ++i) g.vertices.insert(toks[i]);
    } else if (kw == "edge") {
      need(4, "edge <id> <src> <tgt>");
      graph().edges.push_back({toks[1], toks[2], toks[3]});
      graph().edge_lines.push_back(lineno);
    } else if (kw == "wager") {
      need(2, "wager <n|omega>");
      auto w = ExtNat::parse(toks[1]);
      if (!w) throw ParseError(lineno, "bad wager '" + toks[1] + "'");
      graph().wager = *w;
    } else if (kw == "group") {
      if (toks.size() < 3) throw ParseError(lineno, "usage: group <vertex> <cyclic:k | klein4 | s3 | table n ...>");
      auto& g = graph();
      g.groups.push_back({toks[1], parse_group(toks, lineno)});
    } else if (kw == "laction" || kw == "raction") {
      if (toks.size() < 4) throw ParseError(lineno, "usage: " + kw + " <v> <v'> <element> <images>...");
      ActionDecl decl{toks[1], toks[2], toks[3], {toks.begin() + 4, toks.end()}, lineno};
      (kw == "laction" ? graph().left_actions : graph().right_actions).push_back(std::move(decl));
    } else if (kw == "cob") {
      need(2, "cob <name>");
      doc.cobs.emplace_back();
      doc.cobs.back().name = toks[1];
      doc.cobs.back().line = lineno;
      current = Current::Cob;
    } else if (kw == "left" || kw == "right") {
      auto& c = cob();
      auto& side = kw == "left" ? c.left : c.right;
      side.insert(side.end(), toks.begin() + 1, toks.end());
    } else if (kw == "pair") {
      need(3, "pair <p> <q>");
      auto& c = cob();
      c.pairs.emplace_back(toks[1], toks[2]);
      c.pair_lines.push_back(lineno);
    } else if (kw == "circles") {
      need(2, "circles <n>");
      cob().circles = parse_count(toks[1], lineno, "circles");
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }
  return doc;
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

Graph GraphBlock::to_graph() const {
  std::set<EdgeId> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const std::size_t at = i < edge_lines.size() ? edge_lines[i] : line;
    for (const auto& v : {e.source, e.target}) {
      if (!vertices.contains(v)) throw ParseError(at, "edge '" + e.id + "' references unknown vertex '" + v + "'");
    }
    if (!seen.insert(e.id).second) throw ParseError(at, "duplicate edge id '" + e.id + "'");
  }
  try {
    return make_graph(vertices, edges);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line, "graph '" + name + "': " + e.what());
  }
}

Project GraphBlock::to_project() const { return {wager.value_or(ExtNat(0)), to_graph()}; }

BimodularGraph GraphBlock::to_bimodular() const {
  Graph graph = to_graph();
  std::map<VertexId, FiniteGroup> group_map;
  for (const auto& d : groups) {
    if (!group_map.emplace(d.vertex, d.group).second) throw ParseError(line, "two groups for vertex '" + d.vertex + "'");
  }
  auto resolve = [&](const std::vector<ActionDecl>& decls, bool left) {
    std::vector<ActionSpec> out;
    for (const auto& d : decls) {
      const VertexId& acting = left ? d.from : d.to;
      auto it = group_map.find(acting);
      const FiniteGroup group = it == group_map.end() ? FiniteGroup::trivial() : it->second;
      std::size_t element = group.find(d.element);
      if (element == group.order()) {
        element = parse_count(d.element, d.line, "group element");
        if (element >= group.order()) throw ParseError(d.line, "no element '" + d.element + "' in the group of '" + acting + "'");
      }
      out.push_back({d.from, d.to, element, d.images});
    }
    return out;
  };
  const auto left = resolve(left_actions, true);
  const auto right = resolve(right_actions, false);
  try {
    return BimodularGraph::make(std::move(graph), std::move(group_map), left, right);
  } catch (const Error& e) {
    throw ParseError(line, "graph '" + name + "': " + e.what());
  }
}

Cob0Morphism CobBlock::to_cob() const {
  const LabelSet source(left.begin(), left.end());
  const LabelSet target(right.begin(), right.end());
  if (source.size() != left.size() || target.size() != right.size()) throw ParseError(line, "repeated point label");

  auto point = [&](const std::string& ref, std::size_t at) -> Point {
    if (ref.starts_with("L:")) return {Boundary::Source, ref.substr(2)};
    if (ref.starts_with("R:")) return {Boundary::Target, ref.substr(2)};
    const bool in_left = source.contains(ref);
    const bool in_right = target.contains(ref);
    if (in_left && in_right) throw ParseError(at, "'" + ref + "' is ambiguous; prefix it with L: or R:");
    if (in_left) return {Boundary::Source, ref};
    if (in_right) return {Boundary::Target, ref};
    throw ParseError(at, "unknown point '" + ref + "'");
  };
  std::vector<PointPair> matched;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    matched.emplace_back(point(pairs[i].first, pair_lines[i]), point(pairs[i].second, pair_lines[i]));
  }
  try {
    return Cob0Morphism::make(source, target, std::move(matched), circles);
  } catch (const Error& e) {
    throw ParseError(line, "cob '" + name + "': " + e.what());
  }
}

std::string format_graph(std::string_view name, const Graph& g) {
  std::ostringstream os;
  os << "graph " << name << '\n';
  for (const auto& v : g.vertices()) os << "vertex " << v << '\n';
  for (const auto& e : g.edges()) os << "edge " << e.id << ' ' << e.source << ' ' << e.target << '\n';
  return os.str();
}

std::string format_project(std::string_view name, const Project& p) {
  return format_graph(name, p.graph) + "wager " + p.wager.to_string() + "\n";
}

std::string format_int_project(std::string_view name, const IntProject& p) {
  return format_graph(name, p.morphism.graph()) + "wager " + p.wager.to_string() + "\n";
}

std::string format_cob(std::string_view name, const Cob0Morphism& m) {
  std::ostringstream os;
  os << "cob " << name << "\nleft";
  for (const auto& a : m.source()) os << ' ' << a;
  os << "\nright";
  for (const auto& b : m.target()) os << ' ' << b;
  os << '\n';
  for (const auto& [p, q] : m.matching()) os << "pair " << p.to_string() << ' ' << q.to_string() << '\n';
  os << "circles " << m.circles() << '\n';
  return os.str();
}

std::string format_bimodular(std::string_view name, const BimodularGraph& b) {
  std::ostringstream os;
  os << format_graph(name, b.graph());
  for (const auto& [v, group] : b.groups()) {
    if (group.order() > 1) os << "group " << v << ' ' << group.describe() << '\n';
  }
  auto emit = [&](const char* kw, const std::vector<ActionSpec>& specs) {
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> natural;
    for (const auto& e : b.graph().edges()) natural[{e.source, e.target}].push_back(e.id);
    for (const auto& s : specs) {
      if (s.images == natural[{s.from, s.to}]) continue;
      os << kw << ' ' << s.from << ' ' << s.to << ' ' << s.element;
      for (const auto& id : s.images) os << ' ' << id;
      os << '\n';
    }
  };
  emit("laction", b.left_specs());
  emit("raction", b.right_specs());
  return os.str();
}

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(std::string_view name, const Graph& g) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  for (const auto& v : g.vertices()) os << "  " << quoted(v) << ";\n";

  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> by_ends;
  for (const auto& e : g.edges()) by_ends[{e.source, e.target}].push_back(e.id);
  for (const auto& [ends, ids] : by_ends) {
    const auto& [s, t] = ends;
    auto back = by_ends.find({t, s});
    const bool symmetric = s != t && back != by_ends.end() && back->second.size() == ids.size();
    if (symmetric && t < s) continue;  // drawn from the other direction
    for (std::size_t i = 0; i < ids.size(); ++i) {
      os << "  " << quoted(s) << " -> " << quoted(t) << " [label=" << quoted(symmetric ? ids[i] + " / " + back->second[i] : ids[i]);
      if (symmetric) os << ", dir=both";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace igcob
