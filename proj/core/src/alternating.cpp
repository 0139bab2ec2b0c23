#include "igcob/alternating.hpp"

#include <deque>
#include <functional>
#include <map>
#include <tuple>
#include <unordered_map>

#include "igcob/errors.hpp"

namespace igcob {

const char* to_string(Orientation o) { return o == Orientation::Directed ? "directed" : "unoriented"; }

namespace {

const Edge& edge_at(const Graph& left, const Graph& right, EdgeRef ref) {
  return (ref.side == Side::Left ? left : right).edges().at(ref.index);
}

}  // namespace

Path::Path(const Graph& left, const Graph& right, std::vector<EdgeRef> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw PreconditionViolation("empty path");
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    const Edge& a = edge_at(left, right, steps_[i]);
    const Edge& b = edge_at(left, right, steps_[i + 1]);
    if (steps_[i].side == steps_[i + 1].side) {
      throw PreconditionViolation("path does not alternate at step " + std::to_string(i + 1));
    }
    if (a.target != b.source) {
      throw PreconditionViolation("edges '" + a.id + "' and '" + b.id + "' do not compose");
    }
  }
  source_ = edge_at(left, right, steps_.front()).source;
  target_ = edge_at(left, right, steps_.back()).target;
  for (const auto& s : steps_) {
    const auto& t = edge_at(left, right, s).trace;
    trace_.insert(trace_.end(), t.begin(), t.end());
  }
}

DerivedGraph::DerivedGraph(const Graph& left, const Graph& right) : left_count_(left.edge_count()) {
  const auto boundary = symmetric_difference(left.vertices(), right.vertices());
  std::map<std::pair<Side, VertexId>, std::vector<std::size_t>> by_source;

  auto add_side = [&](const Graph& g, Side side) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const std::size_t node = nodes_.size();
      const Edge& e = g.edges()[i];
      nodes_.push_back({side, i});
      ids_.push_back(e.id);
      initial_.push_back(boundary.contains(e.source));
      final_.push_back(boundary.contains(e.target));
      by_source[{side, e.source}].push_back(node);
    }
  };
  add_side(left, Side::Left);
  add_side(right, Side::Right);

  successors_.resize(nodes_.size());
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    const Edge& e = edge_at(left, right, nodes_[n]);
    auto it = by_source.find({other(nodes_[n].side), e.target});
    if (it != by_source.end()) successors_[n] = it->second;
  }
}

std::size_t DerivedGraph::node_of(EdgeRef ref) const {
  return ref.side == Side::Left ? ref.index : left_count_ + ref.index;
}

std::vector<std::pair<std::size_t, std::size_t>> DerivedGraph::arcs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t n = 0; n < successors_.size(); ++n) {
    for (std::size_t m : successors_[n]) out.emplace_back(n, m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<bool> reachable(std::size_t n, const std::vector<std::vector<std::size_t>>& adj,
                            const std::vector<bool>& seeds) {
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (seeds[i]) {
      seen[i] = true;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

// Returns a cycle (as node list) inside the subgraph induced by `keep`, if any.
std::vector<std::size_t> find_cycle(const DerivedGraph& d, const std::vector<bool>& keep) {
  enum Color : unsigned char { White, Grey, Black };
  std::vector<Color> color(d.node_count(), White);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> cycle;

  std::function<bool(std::size_t)> visit = [&](std::size_t x) {
    color[x] = Grey;
    stack.push_back(x);
    for (std::size_t y : d.successors(x)) {
      if (!keep[y]) continue;
      if (color[y] == Grey) {
        auto it = std::find(stack.begin(), stack.end(), y);
        cycle.assign(it, stack.end());
        return true;
      }
      if (color[y] == White && visit(y)) return true;
    }
    stack.pop_back();
    color[x] = Black;
    return false;
  };
  for (std::size_t x = 0; x < d.node_count(); ++x) {
    if (keep[x] && color[x] == White && visit(x)) return cycle;
  }
  return {};
}

}  // namespace

std::vector<Path> alternating_paths(const Graph& g, const Graph& h) {
  const DerivedGraph d(g, h);
  const std::size_t n = d.node_count();

  std::vector<std::vector<std::size_t>> forward(n), backward(n);
  std::vector<bool> initial(n), final(n);
  for (std::size_t x = 0; x < n; ++x) {
    forward[x] = d.successors(x);
    for (std::size_t y : d.successors(x)) backward[y].push_back(x);
    initial[x] = d.is_initial(x);
    final[x] = d.is_final(x);
  }
  const auto from_start = reachable(n, forward, initial);
  const auto to_end = reachable(n, backward, final);
  std::vector<bool> relevant(n);
  for (std::size_t x = 0; x < n; ++x) relevant[x] = from_start[x] && to_end[x];

  if (auto cycle = find_cycle(d, relevant); !cycle.empty()) {
    std::vector<std::string> witness;
    for (std::size_t x : cycle) witness.push_back(d.edge_id(x));
    throw InfinitePathSet(std::move(witness));
  }

  std::vector<Path> out;
  std::vector<EdgeRef> walk;
  std::function<void(std::size_t)> extend = [&](std::size_t x) {
    walk.push_back(d.edge_of(x));
    if (d.is_final(x)) out.emplace_back(g, h, walk);
    for (std::size_t y : d.successors(x)) {
      if (relevant[y]) extend(y);
    }
    walk.pop_back();
  };
  for (std::size_t x = 0; x < n; ++x) {
    if (d.is_initial(x) && relevant[x]) extend(x);
  }
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> strongly_connected_components(const DerivedGraph& d) {
  const std::size_t n = d.node_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  std::function<void(std::size_t)> connect = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : d.successors(v)) {
      if (index[w] == kUnset) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> component;
      std::size_t w = 0;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      components.push_back(std::move(component));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == kUnset) connect(v);
  }
  return components;
}

using Signature = std::vector<std::tuple<Side, VertexId, VertexId>>;

}  // namespace

std::vector<CycleClass> prime_cycles(const Graph& g, const Graph& h, Orientation mode) {
  const DerivedGraph d(g, h);
  std::vector<CycleClass> directed;

  for (const auto& component : strongly_connected_components(d)) {
    std::vector<bool> inside(d.node_count(), false);
    for (std::size_t x : component) inside[x] = true;

    std::vector<std::size_t> next(d.node_count(), 0);
    bool cyclic = false;
    for (std::size_t x : component) {
      std::size_t out_degree = 0;
      for (std::size_t y : d.successors(x)) {
        if (inside[y]) {
          ++out_degree;
          next[x] = y;
        }
      }
      if (out_degree > 1) {
        std::vector<std::string> witness;
        for (std::size_t c : component) witness.push_back(d.edge_id(c));
        throw InfiniteCycleSet(std::move(witness));
      }
      cyclic = cyclic || out_degree == 1;
    }
    if (!cyclic) continue;

    std::vector<std::size_t> order{component.front()};
    for (std::size_t x = next[component.front()]; x != component.front(); x = next[x]) order.push_back(x);

    std::vector<EdgeId> ids;
    for (std::size_t x : order) ids.push_back(d.edge_id(x));
    const std::size_t offset = least_rotation_offset(std::span<const EdgeId>(ids));
    std::rotate(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(offset), ids.end());
    std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(offset), order.end());

    CycleClass c;
    c.canonical = std::move(ids);
    for (std::size_t x : order) c.steps.push_back(d.edge_of(x));
    c.mode = Orientation::Directed;
    directed.push_back(std::move(c));
  }

  auto by_canonical = [](const CycleClass& a, const CycleClass& b) { return a.canonical < b.canonical; };
  std::sort(directed.begin(), directed.end(), by_canonical);
  if (mode == Orientation::Directed) return directed;

  // Two directed classes are merged when one traverses the same segments
  // (same side, same endpoints) as the other in the opposite direction.
  std::map<Signature, std::vector<std::size_t>> groups;
  std::vector<bool> self_reverse(directed.size(), false);
  for (std::size_t i = 0; i < directed.size(); ++i) {
    Signature forward_sig, backward_sig;
    for (const auto& step : directed[i].steps) {
      const Edge& e = edge_at(g, h, step);
      forward_sig.emplace_back(step.side, e.source, e.target);
    }
    for (auto it = directed[i].steps.rbegin(); it != directed[i].steps.rend(); ++it) {
      const Edge& e = edge_at(g, h, *it);
      backward_sig.emplace_back(it->side, e.target, e.source);
    }
    auto f = least_rotation(std::span<const Signature::value_type>(forward_sig));
    auto b = least_rotation(std::span<const Signature::value_type>(backward_sig));
    self_reverse[i] = f == b;
    groups[std::min(f, b)].push_back(i);
  }

  std::vector<CycleClass> out;
  for (const auto& [key, members] : groups) {
    CycleClass c = directed[members.front()];  // members are in canonical order
    c.mode = Orientation::Unoriented;
    c.members = members.size();
    c.self_reverse = self_reverse[members.front()];
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), by_canonical);
  return out;
}

}  // namespace igcob
