#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "igcob/int_project.hpp"

namespace igcob {

enum class Boundary : std::uint8_t { Source, Target };

/// A boundary point of a 0-cobordism, tagged with the side it lives on so
/// that source and target may reuse labels.
struct Point {
  Boundary side;
  Label label;

  /// "L:<label>" for source points, "R:<label>" for target points.
  std::string to_string() const;
  friend auto operator<=>(const Point&, const Point&) = default;
};

using PointPair = std::pair<Point, Point>;

/// A 1-dimensional cobordism A -> B up to diffeomorphism: a perfect matching
/// of A ⊔ B (the segments) and a number of closed components (the circles).
class Cob0Morphism {
 public:
  Cob0Morphism() = default;

  /// Throws InvalidCobordism when `pairs` is not a perfect matching of A ⊔ B.
  static Cob0Morphism make(LabelSet source, LabelSet target, std::vector<PointPair> pairs,
                           std::uint64_t circles = 0);

  const LabelSet& source() const { return source_; }
  const LabelSet& target() const { return target_; }
  /// Normalized: each pair ordered, pairs sorted.
  const std::vector<PointPair>& matching() const { return matching_; }
  std::uint64_t circles() const { return circles_; }

  /// Throws std::out_of_range for a point not on the boundary.
  const Point& partner(const Point& p) const;
  std::vector<Point> boundary_points() const;

  friend bool operator==(const Cob0Morphism& a, const Cob0Morphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matching_ == b.matching_ &&
           a.circles_ == b.circles_;
  }

 private:
  LabelSet source_;
  LabelSet target_;
  std::vector<PointPair> matching_;
  std::vector<std::pair<Point, std::size_t>> partner_index_;  // sorted by point
  std::uint64_t circles_ = 0;
};

enum class Factor : std::uint8_t { First, Second };

/// A segment of one factor of a composite, in that factor's own tagging.
struct Segment {
  Factor factor;
  Point from;
  Point to;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// The alternating chain of segments that glue into one composite segment.
struct AlternatingDecomposition {
  std::vector<Segment> segments;

  /// 1 for segments of the first factor, 2 for the second.
  std::vector<int> tags() const;
  bool alternates() const;
};

/// Full gluing record: composite plus every chain it was assembled from.
struct Gluing {
  Cob0Morphism result;
  std::vector<AlternatingDecomposition> open_chains;
  std::vector<AlternatingDecomposition> closed_chains;
};

/// Chain-chasing composition M ; N. Throws InterfaceMismatch.
Gluing cob0_glue(const Cob0Morphism& m, const Cob0Morphism& n);

inline Cob0Morphism cob0_compose(const Cob0Morphism& m, const Cob0Morphism& n) {
  return cob0_glue(m, n).result;
}

Cob0Morphism cob0_identity(const LabelSet& objects);

/// All perfect matchings of A ⊔ B times circle counts 0..max_circles; empty
/// when |A| + |B| is odd.
std::vector<Cob0Morphism> cob0_enumerate(const LabelSet& source, const LabelSet& target,
                                         std::uint64_t max_circles);

/// (n - 1)!! for even n, 0 for odd n.
std::uint64_t matching_count(std::size_t points);

/// The chain of M/N segments realizing `composite_pair`, chased from its first
/// point. Throws NotAComposite when the pair is not in cob0_compose(m, n).
AlternatingDecomposition decompose_segment(const Cob0Morphism& m, const Cob0Morphism& n,
                                           const PointPair& composite_pair);

/// Labels "p1".."pk".
LabelSet standard_object(std::size_t size);

}  // namespace igcob
