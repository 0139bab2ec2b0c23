#include "igcob/cob0.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "igcob/errors.hpp"

namespace igcob {

std::string Point::to_string() const { return (side == Boundary::Source ? "L:" : "R:") + label; }

Cob0Morphism Cob0Morphism::make(LabelSet source, LabelSet target, std::vector<PointPair> pairs,
                                std::uint64_t circles) {
  Cob0Morphism m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.circles_ = circles;

  std::map<Point, int> uses;
  for (const auto& a : m.source_) {
    if (!is_plain_id(a)) throw InvalidCobordism("malformed point label '" + a + "'");
    uses[{Boundary::Source, a}] = 0;
  }
  for (const auto& b : m.target_) {
    if (!is_plain_id(b)) throw InvalidCobordism("malformed point label '" + b + "'");
    uses[{Boundary::Target, b}] = 0;
  }
  for (auto& [p, q] : pairs) {
    if (p == q) throw InvalidCobordism("point " + p.to_string() + " paired with itself");
    for (const Point* x : {&p, &q}) {
      auto it = uses.find(*x);
      if (it == uses.end()) throw InvalidCobordism("point " + x->to_string() + " is not on the boundary");
      if (++it->second > 1) throw InvalidCobordism("point " + x->to_string() + " occurs in two pairs");
    }
    if (q < p) std::swap(p, q);
  }
  for (const auto& [p, count] : uses) {
    if (count == 0) throw InvalidCobordism("point " + p.to_string() + " is unmatched");
  }
  std::sort(pairs.begin(), pairs.end());
  m.matching_ = std::move(pairs);
  for (std::size_t i = 0; i < m.matching_.size(); ++i) {
    m.partner_index_.emplace_back(m.matching_[i].first, i);
    m.partner_index_.emplace_back(m.matching_[i].second, i);
  }
  std::sort(m.partner_index_.begin(), m.partner_index_.end());
  return m;
}

const Point& Cob0Morphism::partner(const Point& p) const {
  auto it = std::lower_bound(partner_index_.begin(), partner_index_.end(), p,
                             [](const auto& entry, const Point& key) { return entry.first < key; });
  if (it == partner_index_.end() || it->first != p) throw std::out_of_range("no boundary point " + p.to_string());
  const auto& pair = matching_[it->second];
  return pair.first == p ? pair.second : pair.first;
}

std::vector<Point> Cob0Morphism::boundary_points() const {
  std::vector<Point> out;
  for (const auto& [p, i] : partner_index_) out.push_back(p);
  return out;
}

std::vector<int> AlternatingDecomposition::tags() const {
  std::vector<int> out;
  for (const auto& s : segments) out.push_back(s.factor == Factor::First ? 1 : 2);
  return out;
}

bool AlternatingDecomposition::alternates() const {
  for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
    if (segments[i].factor == segments[i + 1].factor) return false;
  }
  return true;
}

namespace {

// Follows segments from `start` (a point of `factor`) until the chain leaves
// through an outer point or returns to `stop_at` in the first factor.
AlternatingDecomposition chase(const Cob0Morphism& m, const Cob0Morphism& n, Factor factor, Point start,
                               std::map<Label, bool>& interface_seen) {
  AlternatingDecomposition chain;
  Point p = start;
  while (true) {
    const Point q = (factor == Factor::First ? m : n).partner(p);
    chain.segments.push_back({factor, p, q});
    if (factor == Factor::First) {
      if (q.side == Boundary::Source) return chain;
      if (interface_seen[q.label]) return chain;  // closed chain is back at its start
      interface_seen[q.label] = true;
      p = {Boundary::Source, q.label};
      factor = Factor::Second;
    } else {
      if (q.side == Boundary::Target) return chain;
      if (interface_seen[q.label]) return chain;
      interface_seen[q.label] = true;
      p = {Boundary::Target, q.label};
      factor = Factor::First;
    }
  }
}

}  // namespace

Gluing cob0_glue(const Cob0Morphism& m, const Cob0Morphism& n) {
  if (m.target() != n.source()) throw InterfaceMismatch("target of the first cobordism differs from source of the second");

  Gluing out;
  std::map<Label, bool> interface_seen;
  for (const auto& b : m.target()) interface_seen[b] = false;

  std::vector<PointPair> pairs;
  std::map<Point, bool> outer_used;
  auto chase_outer = [&](Factor factor, const Point& start) {
    if (outer_used[start]) return;
    auto chain = chase(m, n, factor, start, interface_seen);
    const Point end = chain.segments.back().to;
    outer_used[start] = outer_used[end] = true;
    pairs.emplace_back(start, end);
    out.open_chains.push_back(std::move(chain));
  };
  for (const auto& a : m.source()) chase_outer(Factor::First, {Boundary::Source, a});
  for (const auto& c : n.target()) chase_outer(Factor::Second, {Boundary::Target, c});

  for (const auto& b : m.target()) {
    if (interface_seen[b]) continue;
    interface_seen[b] = true;
    out.closed_chains.push_back(chase(m, n, Factor::Second, {Boundary::Source, b}, interface_seen));
  }

  out.result = Cob0Morphism::make(m.source(), n.target(), std::move(pairs),
                                  m.circles() + n.circles() + out.closed_chains.size());
  return out;
}

Cob0Morphism cob0_identity(const LabelSet& objects) {
  std::vector<PointPair> pairs;
  for (const auto& a : objects) pairs.emplace_back(Point{Boundary::Source, a}, Point{Boundary::Target, a});
  return Cob0Morphism::make(objects, objects, std::move(pairs), 0);
}

std::uint64_t matching_count(std::size_t points) {
  if (points % 2 != 0) return 0;
  std::uint64_t count = 1;
  for (std::size_t k = points; k > 1; k -= 2) count *= k - 1;
  return count;
}

std::vector<Cob0Morphism> cob0_enumerate(const LabelSet& source, const LabelSet& target,
                                         std::uint64_t max_circles) {
  std::vector<Point> points;
  for (const auto& a : source) points.push_back({Boundary::Source, a});
  for (const auto& b : target) points.push_back({Boundary::Target, b});
  std::vector<Cob0Morphism> out;
  if (points.size() % 2 != 0) return out;

  std::vector<bool> used(points.size(), false);
  std::vector<PointPair> pairs;
  std::function<void()> extend = [&] {
    auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) {
      for (std::uint64_t c = 0; c <= max_circles; ++c) out.push_back(Cob0Morphism::make(source, target, pairs, c));
      return;
    }
    const auto i = static_cast<std::size_t>(first - used.begin());
    used[i] = true;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(points[i], points[j]);
      extend();
      pairs.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  extend();
  return out;
}

AlternatingDecomposition decompose_segment(const Cob0Morphism& m, const Cob0Morphism& n,
                                           const PointPair& composite_pair) {
  auto gluing = cob0_glue(m, n);
  for (auto& chain : gluing.open_chains) {
    const Point& start = chain.segments.front().from;
    const Point& end = chain.segments.back().to;
    if (start == composite_pair.first && end == composite_pair.second) return chain;
    if (start == composite_pair.second && end == composite_pair.first) {
      AlternatingDecomposition reversed;
      for (auto it = chain.segments.rbegin(); it != chain.segments.rend(); ++it) {
        reversed.segments.push_back({it->factor, it->to, it->from});
      }
      return reversed;
    }
  }
  throw NotAComposite("{" + composite_pair.first.to_string() + ", " + composite_pair.second.to_string() +
                      "} is not a segment of the composite");
}

LabelSet standard_object(std::size_t size) {
  LabelSet out;
  for (std::size_t i = 1; i <= size; ++i) out.insert("p" + std::to_string(i));
  return out;
}

}  // namespace igcob
