#include "igcob/bimodular.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

#include "igcob/errors.hpp"

namespace igcob {

namespace {

using Perm = std::vector<std::size_t>;

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Extends the given element -> permutation assignments to the whole group.
// Left actions compose as λ_{gh} = λ_g ∘ λ_h, right actions as ρ_{gh} = ρ_h ∘ ρ_g.
std::vector<Perm> close_action(const FiniteGroup& group, std::map<std::size_t, Perm> known, std::size_t size,
                               bool left, const std::string& where) {
  const std::string kind = left ? "left" : "right";
  const Perm id = identity_perm(size);
  if (known.empty()) return std::vector<Perm>(group.order(), id);
  if (auto it = known.find(group.identity()); it != known.end() && it->second != id) {
    throw InvalidAction(where + ": identity does not act trivially");
  }
  known[group.identity()] = id;

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> keys;
    for (const auto& [g, p] : known) keys.push_back(g);
    for (std::size_t g : keys) {
      for (std::size_t h : keys) {
        Perm product(size);
        const Perm& pg = known.at(g);
        const Perm& ph = known.at(h);
        for (std::size_t x = 0; x < size; ++x) product[x] = left ? pg[ph[x]] : ph[pg[x]];
        const std::size_t gh = group.mul(g, h);
        auto [it, fresh] = known.emplace(gh, product);
        if (!fresh && it->second != product) throw InvalidAction(where + ": tables do not form a " + kind + " action");
        changed = changed || fresh;
      }
    }
  }
  if (known.size() != group.order()) {
    throw InvalidAction(where + ": given elements do not determine the " + kind + " action");
  }
  std::vector<Perm> out(group.order());
  for (auto& [g, p] : known) out[g] = std::move(p);
  return out;
}

}  // namespace

BimodularGraph BimodularGraph::make(Graph graph, std::map<VertexId, FiniteGroup> groups,
                                    std::span<const ActionSpec> left, std::span<const ActionSpec> right) {
  BimodularGraph b;
  for (const auto& [v, group] : groups) {
    if (!graph.has_vertex(v)) throw PreconditionViolation("group attached to unknown vertex '" + v + "'");
  }
  for (const auto& v : graph.vertices()) {
    auto it = groups.find(v);
    b.groups_.emplace(v, it == groups.end() ? FiniteGroup::trivial() : it->second);
  }
  b.slot_.resize(graph.edge_count());
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    const Edge& e = graph.edges()[i];
    auto [it, fresh] = b.block_index_.emplace(std::make_pair(e.source, e.target), b.blocks_.size());
    if (fresh) b.blocks_.emplace_back();
    Block& block = b.blocks_[it->second];
    b.slot_[i] = {it->second, block.edges.size()};
    block.edges.push_back(i);
  }
  b.graph_ = std::move(graph);

  using SpecTable = std::map<std::size_t, std::map<std::size_t, Perm>>;  // block -> element -> perm
  auto collect = [&](std::span<const ActionSpec> specs, bool is_left) {
    SpecTable table;
    for (const auto& spec : specs) {
      const std::string where = std::string(is_left ? "laction " : "raction ") + spec.from + " " + spec.to;
      const VertexId& acting_vertex = is_left ? spec.from : spec.to;
      if (!b.graph_.has_vertex(spec.from) || !b.graph_.has_vertex(spec.to)) {
        throw InvalidAction(where + ": unknown vertex");
      }
      if (spec.element >= b.groups_.at(acting_vertex).order()) throw InvalidAction(where + ": element out of range");
      auto bit = b.block_index_.find({spec.from, spec.to});
      if (bit == b.block_index_.end()) {
        if (spec.images.empty()) continue;
        throw InvalidAction(where + ": no edges between these vertices");
      }
      const Block& block = b.blocks_[bit->second];
      if (spec.images.size() != block.edges.size()) throw InvalidAction(where + ": wrong number of images");
      Perm perm;
      std::vector<bool> hit(block.edges.size(), false);
      for (const auto& id : spec.images) {
        auto idx = b.graph_.find_edge(id);
        if (!idx || b.slot_[*idx].first != bit->second) throw InvalidAction(where + ": '" + id + "' is not in this edge set");
        const std::size_t local = b.slot_[*idx].second;
        if (hit[local]) throw InvalidAction(where + ": images are not a permutation");
        hit[local] = true;
        perm.push_back(local);
      }
      auto [it, fresh] = table[bit->second].emplace(spec.element, perm);
      if (!fresh && it->second != perm) throw InvalidAction(where + ": conflicting tables for one element");
    }
    return table;
  };
  const SpecTable left_table = collect(left, true);
  const SpecTable right_table = collect(right, false);

  for (const auto& [key, index] : b.block_index_) {
    Block& block = b.blocks_[index];
    const std::string where = key.first + " -> " + key.second;
    auto lit = left_table.find(index);
    auto rit = right_table.find(index);
    block.left = close_action(b.groups_.at(key.first), lit == left_table.end() ? std::map<std::size_t, Perm>{} : lit->second,
                              block.edges.size(), true, where);
    block.right = close_action(b.groups_.at(key.second),
                               rit == right_table.end() ? std::map<std::size_t, Perm>{} : rit->second,
                               block.edges.size(), false, where);
    for (const auto& lg : block.left) {
      for (const auto& rh : block.right) {
        for (std::size_t x = 0; x < block.edges.size(); ++x) {
          if (lg[rh[x]] != rh[lg[x]]) throw InvalidAction(where + ": left and right actions do not commute");
        }
      }
    }
  }
  return b;
}

const FiniteGroup& BimodularGraph::group(const VertexId& v) const { return groups_.at(v); }

std::size_t BimodularGraph::act_left(std::size_t g, std::size_t edge) const {
  const auto [block, local] = slot_.at(edge);
  const Block& bl = blocks_[block];
  return bl.edges[bl.left.at(g)[local]];
}

std::size_t BimodularGraph::act_right(std::size_t edge, std::size_t h) const {
  const auto [block, local] = slot_.at(edge);
  const Block& bl = blocks_[block];
  return bl.edges[bl.right.at(h)[local]];
}

namespace {

std::vector<ActionSpec> specs_of(const Graph& graph, const std::map<std::pair<VertexId, VertexId>, std::size_t>& index,
                                 const auto& blocks, bool left) {
  std::vector<ActionSpec> out;
  for (const auto& [key, i] : index) {
    const auto& block = blocks[i];
    const auto& tables = left ? block.left : block.right;
    for (std::size_t g = 0; g < tables.size(); ++g) {
      ActionSpec spec{key.first, key.second, g, {}};
      for (std::size_t local : tables[g]) spec.images.push_back(graph.edges()[block.edges[local]].id);
      out.push_back(std::move(spec));
    }
  }
  return out;
}

}  // namespace

std::vector<ActionSpec> BimodularGraph::left_specs() const { return specs_of(graph_, block_index_, blocks_, true); }
std::vector<ActionSpec> BimodularGraph::right_specs() const { return specs_of(graph_, block_index_, blocks_, false); }

bool BimodularGraph::all_groups_trivial() const {
  return std::all_of(groups_.begin(), groups_.end(), [](const auto& kv) { return kv.second.order() == 1; });
}

namespace {

void require_compatible(const BimodularGraph& f, const BimodularGraph& g) {
  for (const auto& v : intersection(f.graph().vertices(), g.graph().vertices())) {
    if (!(f.group(v) == g.group(v))) throw IncompatibleGroups("vertex '" + v + "' carries different groups");
  }
  for (const auto& e : f.graph().edges()) {
    if (g.graph().find_edge(e.id)) throw IncompatibleActions("edge id '" + e.id + "' occurs in both graphs");
  }
}

struct Pair {
  const BimodularGraph& f;
  const BimodularGraph& g;

  const BimodularGraph& of(Side s) const { return s == Side::Left ? f : g; }
  const Edge& edge(EdgeRef r) const { return of(r.side).graph().edges()[r.index]; }

  // Junction j sits between steps j and j+1.
  const FiniteGroup& junction_group(const std::vector<EdgeRef>& steps, std::size_t j) const {
    return of(steps[j].side).group(edge(steps[j]).target);
  }

  void act_junction(std::vector<EdgeRef>& steps, std::size_t j, std::size_t b) const {
    const FiniteGroup& group = junction_group(steps, j);
    steps[j].index = of(steps[j].side).act_right(steps[j].index, b);
    steps[j + 1].index = of(steps[j + 1].side).act_left(group.inverse(b), steps[j + 1].index);
  }
};

OrbitQuotient quotient(const BimodularGraph& f, const BimodularGraph& g, std::vector<Path> paths) {
  require_compatible(f, g);
  const Pair pair{f, g};

  std::map<std::vector<EdgeRef>, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index.emplace(paths[i].steps(), i);

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  OrbitQuotient q;
  q.orbit_of.assign(paths.size(), kUnset);
  for (std::size_t start = 0; start < paths.size(); ++start) {
    if (q.orbit_of[start] != kUnset) continue;
    const std::size_t orbit = q.representatives.size();
    std::size_t best = start;
    std::deque<std::size_t> queue{start};
    q.orbit_of[start] = orbit;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      if (std::tie(paths[i].trace(), paths[i].steps()) < std::tie(paths[best].trace(), paths[best].steps())) best = i;
      const auto& steps = paths[i].steps();
      for (std::size_t j = 0; j + 1 < steps.size(); ++j) {
        for (std::size_t b = 0; b < pair.junction_group(steps, j).order(); ++b) {
          auto moved = steps;
          pair.act_junction(moved, j, b);
          auto it = index.find(moved);
          if (it == index.end()) throw std::logic_error("junction action leaves the path set");
          if (q.orbit_of[it->second] == kUnset) {
            q.orbit_of[it->second] = orbit;
            queue.push_back(it->second);
          }
        }
      }
    }
    q.representatives.push_back(best);
  }

  const auto boundary = symmetric_difference(f.graph().vertices(), g.graph().vertices());
  std::vector<EdgeSpec> edges;
  for (std::size_t rep : q.representatives) {
    edges.push_back({id_of_trace(paths[rep].trace()), paths[rep].source(), paths[rep].target()});
  }
  Graph graph = make_graph(boundary, edges);

  std::map<VertexId, FiniteGroup> groups;
  for (const auto& v : boundary) groups.emplace(v, f.graph().has_vertex(v) ? f.group(v) : g.group(v));

  // Boundary actions act on the first (left) or last (right) constituent edge.
  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> blocks;
  for (std::size_t k = 0; k < q.representatives.size(); ++k) blocks[{edges[k].source, edges[k].target}].push_back(k);
  std::vector<ActionSpec> left_specs, right_specs;
  for (const auto& [key, orbits] : blocks) {
    for (std::size_t a = 0; a < groups.at(key.first).order(); ++a) {
      ActionSpec spec{key.first, key.second, a, {}};
      for (std::size_t k : orbits) {
        auto steps = paths[q.representatives[k]].steps();
        steps.front().index = pair.of(steps.front().side).act_left(a, steps.front().index);
        spec.images.push_back(edges[q.orbit_of[index.at(steps)]].id);
      }
      left_specs.push_back(std::move(spec));
    }
    for (std::size_t a = 0; a < groups.at(key.second).order(); ++a) {
      ActionSpec spec{key.first, key.second, a, {}};
      for (std::size_t k : orbits) {
        auto steps = paths[q.representatives[k]].steps();
        steps.back().index = pair.of(steps.back().side).act_right(steps.back().index, a);
        spec.images.push_back(edges[q.orbit_of[index.at(steps)]].id);
      }
      right_specs.push_back(std::move(spec));
    }
  }
  q.result = BimodularGraph::make(std::move(graph), std::move(groups), left_specs, right_specs);
  q.paths = std::move(paths);
  return q;
}

}  // namespace

OrbitQuotient bimod_quotient(const BimodularGraph& f, const BimodularGraph& g) {
  require_compatible(f, g);
  return quotient(f, g, alternating_paths(f.graph(), g.graph()));
}

BimodularGraph bimod_execute(const BimodularGraph& f, const BimodularGraph& g) { return bimod_quotient(f, g).result; }

BimodularGraph bimod_compose2(const BimodularGraph& f, const BimodularGraph& g) {
  require_compatible(f, g);
  const Graph& fg = f.graph();
  const Graph& gg = g.graph();
  const auto boundary = symmetric_difference(fg.vertices(), gg.vertices());
  std::vector<Path> paths;
  auto add = [&](const Graph& first, Side first_side, const Graph& second) {
    for (std::size_t i = 0; i < first.edge_count(); ++i) {
      const Edge& e = first.edges()[i];
      if (!boundary.contains(e.source)) continue;
      for (std::size_t j = 0; j < second.edge_count(); ++j) {
        const Edge& e2 = second.edges()[j];
        if (e2.source != e.target || !boundary.contains(e2.target)) continue;
        paths.emplace_back(fg, gg, std::vector<EdgeRef>{{first_side, i}, {other(first_side), j}});
      }
    }
  };
  add(fg, Side::Left, gg);
  add(gg, Side::Right, fg);
  return quotient(f, g, std::move(paths)).result;
}

Report check_well_defined(const BimodularGraph& f, const BimodularGraph& g) {
  Report r;
  r.property = "bimod-well-defined";
  OrbitQuotient q;
  try {
    q = bimod_quotient(f, g);
  } catch (const InvalidAction& e) {
    r.verdict = Verdict::Fail;
    r.set("error", e.what());
    return r;
  } catch (const std::logic_error& e) {
    r.verdict = Verdict::Fail;
    r.set("error", e.what());
    return r;
  }

  const Pair pair{f, g};
  std::map<std::vector<EdgeRef>, std::size_t> index;
  for (std::size_t i = 0; i < q.paths.size(); ++i) index.emplace(q.paths[i].steps(), i);

  constexpr std::uint64_t kProductCap = 1u << 16;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  auto expect_orbit = [&](const std::vector<EdgeRef>& steps, std::size_t orbit) {
    ++checked;
    auto it = index.find(steps);
    if (it == index.end() || q.orbit_of[it->second] != orbit) ++violations;
  };

  for (std::size_t i = 0; i < q.paths.size(); ++i) {
    const auto& steps = q.paths[i].steps();
    const std::size_t orbit = q.orbit_of[i];
    const std::size_t junctions = steps.size() - 1;

    std::vector<std::size_t> orders;
    std::uint64_t product = 1;
    for (std::size_t j = 0; j < junctions; ++j) {
      orders.push_back(pair.junction_group(steps, j).order());
      product = std::min<std::uint64_t>(product * orders.back(), kProductCap + 1);
    }
    if (product <= kProductCap) {
      // Every element of the product of the junction groups.
      std::vector<std::size_t> digits(junctions, 0);
      for (std::uint64_t n = 0; n < product; ++n) {
        auto moved = steps;
        for (std::size_t j = 0; j < junctions; ++j) pair.act_junction(moved, j, digits[j]);
        expect_orbit(moved, orbit);
        for (std::size_t j = 0; j < junctions; ++j) {
          if (++digits[j] < orders[j]) break;
          digits[j] = 0;
        }
      }
    } else {
      for (std::size_t j = 0; j < junctions; ++j) {
        for (std::size_t b = 0; b < orders[j]; ++b) {
          auto moved = steps;
          pair.act_junction(moved, j, b);
          expect_orbit(moved, orbit);
        }
      }
    }

    // Boundary actions computed on this member must agree with the result's.
    const VertexId& src = q.paths[i].source();
    const VertexId& tgt = q.paths[i].target();
    for (std::size_t a = 0; a < q.result.group(src).order(); ++a) {
      auto moved = steps;
      moved.front().index = pair.of(moved.front().side).act_left(a, moved.front().index);
      expect_orbit(moved, q.result.act_left(a, orbit));
    }
    for (std::size_t a = 0; a < q.result.group(tgt).order(); ++a) {
      auto moved = steps;
      moved.back().index = pair.of(moved.back().side).act_right(moved.back().index, a);
      expect_orbit(moved, q.result.act_right(orbit, a));
    }
  }

  r.verdict = violations == 0 ? Verdict::Pass : Verdict::Fail;
  r.set("paths", q.paths.size());
  r.set("orbits", q.representatives.size());
  r.set("actions_checked", checked);
  r.set("violations", violations);
  return r;
}

}  // namespace igcob
