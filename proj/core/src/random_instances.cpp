#include "igcob/random_instances.hpp"

#include <map>

namespace igcob {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Modulo reduction keeps draws identical across standard libraries, unlike
// std::uniform_int_distribution.
std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

template <typename T>
const T& pick_from(Rng& rng, const std::vector<T>& xs) {
  return xs[pick(rng, xs.size())];
}

Graph random_edges(Rng& rng, const std::set<VertexId>& vertices, std::size_t max_edges, const std::string& prefix) {
  std::vector<EdgeSpec> edges;
  if (!vertices.empty()) {
    const std::vector<VertexId> vs(vertices.begin(), vertices.end());
    const std::size_t count = pick(rng, max_edges + 1);
    for (std::size_t i = 0; i < count; ++i) {
      edges.push_back({prefix + std::to_string(i), pick_from(rng, vs), pick_from(rng, vs)});
    }
  }
  return make_graph(vertices, edges);
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

GraphTriple random_triple(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  // Membership masks over (F, G, H) with one or two bits set.
  static constexpr unsigned kMasks[] = {0b001, 0b010, 0b100, 0b011, 0b110, 0b101};
  const std::size_t n = 1 + pick(rng, max_vertices);
  std::set<VertexId> vf, vg, vh;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned mask = kMasks[pick(rng, 6)];
    const VertexId v = "v" + std::to_string(i);
    if (mask & 0b001) vf.insert(v);
    if (mask & 0b010) vg.insert(v);
    if (mask & 0b100) vh.insert(v);
  }
  GraphTriple t;
  t.f = random_edges(rng, vf, max_edges, "f");
  t.g = random_edges(rng, vg, max_edges, "g");
  t.h = random_edges(rng, vh, max_edges, "h");
  return t;
}

GraphPair random_pair(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = 1 + pick(rng, max_vertices);
  std::set<VertexId> vg, vh;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t where = pick(rng, 3);
    const VertexId v = "v" + std::to_string(i);
    if (where != 1) vg.insert(v);
    if (where != 0) vh.insert(v);
  }
  GraphPair p;
  p.g = random_edges(rng, vg, max_edges, "g");
  p.h = random_edges(rng, vh, max_edges, "h");
  return p;
}

IntMorphism random_int_morphism(Rng& rng, const LabelSet& domain, const LabelSet& codomain, std::size_t max_edges,
                                const std::string& prefix) {
  std::set<VertexId> vertices;
  for (const auto& a : domain) vertices.insert(domain_vertex(a));
  for (const auto& b : codomain) vertices.insert(codomain_vertex(b));
  return IntMorphism::make(domain, codomain, random_edges(rng, vertices, max_edges, prefix));
}

namespace {

enum class Biset { Fixed, LeftRegular, RightRegular, Free, TwoSided };

// One edge of a biset: its kind and coordinates in γ(v) and γ(v').
struct BisetEdge {
  std::size_t edge;
  std::size_t instance;
  Biset kind;
  std::size_t x;
  std::size_t y;
};

FiniteGroup random_small_group(Rng& rng) {
  switch (pick(rng, 5)) {
    case 0: return FiniteGroup::trivial();
    case 1: return FiniteGroup::cyclic(2);
    case 2: return FiniteGroup::cyclic(3);
    case 3: return FiniteGroup::cyclic(4);
    default: return FiniteGroup::klein_four();
  }
}

BimodularGraph random_bimodular(Rng& rng, const std::set<VertexId>& vertices,
                                const std::map<VertexId, FiniteGroup>& all_groups, const std::set<VertexId>& shared,
                                std::size_t max_edges, const std::string& prefix) {
  std::map<VertexId, FiniteGroup> groups;
  for (const auto& v : vertices) groups.emplace(v, all_groups.at(v));

  std::vector<EdgeSpec> edges;
  std::map<std::pair<VertexId, VertexId>, std::vector<BisetEdge>> blocks;
  if (!vertices.empty()) {
    const std::vector<VertexId> vs(vertices.begin(), vertices.end());
    const std::vector<VertexId> hubs(shared.begin(), shared.end());
    const std::size_t attempts = pick(rng, max_edges + 1);
    std::size_t instance = 0;
    for (std::size_t a = 0; a < attempts; ++a) {
      // Half of the edges touch an interface vertex so that junction groups
      // get a chance to act on both sides of a path.
      VertexId s = pick_from(rng, vs);
      VertexId t = pick_from(rng, vs);
      if (!hubs.empty() && pick(rng, 2) == 0) (pick(rng, 2) == 0 ? s : t) = pick_from(rng, hubs);
      const FiniteGroup& gs = groups.at(s);
      const FiniteGroup& gt = groups.at(t);
      auto kind = static_cast<Biset>(pick(rng, 5));
      if (kind == Biset::TwoSided && !(gs == gt)) kind = Biset::Fixed;
      const std::size_t xs = kind == Biset::LeftRegular || kind == Biset::Free || kind == Biset::TwoSided ? gs.order() : 1;
      const std::size_t ys = kind == Biset::RightRegular || kind == Biset::Free ? gt.order() : 1;
      if (edges.size() + xs * ys > max_edges) continue;
      for (std::size_t x = 0; x < xs; ++x) {
        for (std::size_t y = 0; y < ys; ++y) {
          blocks[{s, t}].push_back({edges.size(), instance, kind, x, y});
          edges.push_back({prefix + std::to_string(edges.size()), s, t});
        }
      }
      ++instance;
    }
  }

  std::vector<ActionSpec> left, right;
  for (const auto& [key, members] : blocks) {
    const FiniteGroup& gs = groups.at(key.first);
    const FiniteGroup& gt = groups.at(key.second);
    auto locate = [&](std::size_t instance, std::size_t x, std::size_t y) -> const EdgeId& {
      for (const auto& m : members) {
        if (m.instance == instance && m.x == x && m.y == y) return edges[m.edge].id;
      }
      throw std::logic_error("biset coordinate not found");
    };
    for (std::size_t g = 0; g < gs.order(); ++g) {
      ActionSpec spec{key.first, key.second, g, {}};
      for (const auto& m : members) {
        const bool moves = m.kind == Biset::LeftRegular || m.kind == Biset::Free || m.kind == Biset::TwoSided;
        spec.images.push_back(locate(m.instance, moves ? gs.mul(g, m.x) : m.x, m.y));
      }
      left.push_back(std::move(spec));
    }
    for (std::size_t h = 0; h < gt.order(); ++h) {
      ActionSpec spec{key.first, key.second, h, {}};
      for (const auto& m : members) {
        if (m.kind == Biset::TwoSided) {
          spec.images.push_back(locate(m.instance, gt.mul(m.x, h), m.y));
        } else {
          const bool moves = m.kind == Biset::RightRegular || m.kind == Biset::Free;
          spec.images.push_back(locate(m.instance, m.x, moves ? gt.mul(m.y, h) : m.y));
        }
      }
      right.push_back(std::move(spec));
    }
  }
  return BimodularGraph::make(make_graph(vertices, edges), std::move(groups), left, right);
}

}  // namespace

BimodularPair random_bimodular_pair(Rng& rng, std::size_t max_vertices, std::size_t max_edges, bool trivial_groups) {
  const std::size_t n = 1 + pick(rng, max_vertices);
  std::set<VertexId> vf, vg;
  std::map<VertexId, FiniteGroup> groups;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t where = pick(rng, 3);
    const VertexId v = "v" + std::to_string(i);
    if (where != 1) vf.insert(v);
    if (where != 0) vg.insert(v);
    groups.emplace(v, trivial_groups ? FiniteGroup::trivial() : random_small_group(rng));
  }
  const std::set<VertexId> shared = intersection(vf, vg);
  BimodularPair p;
  p.f = random_bimodular(rng, vf, groups, shared, max_edges, "f");
  p.g = random_bimodular(rng, vg, groups, shared, max_edges, "g");
  return p;
}

}  // namespace igcob
