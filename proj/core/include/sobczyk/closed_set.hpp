#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sobczyk/order.hpp"

namespace sobczyk {

/// Cantor-Bendixson rank of a point: the ordinal rank on ordinal lines, 0
/// everywhere else.
int point_rank(const LineDescriptor& line, const PointId& p);

/// Smallest q ≥ p with rank ≥ r, if it exists in the line.
std::optional<PointId> ceil_rank(const LineDescriptor& line, const PointId& p, int r);

/// Largest q ≤ p with rank ≥ r, if any.
std::optional<PointId> floor_rank(const LineDescriptor& line, const PointId& p, int r);

/// The points of rank ≥ min_rank in the closed interval [lo, hi]. With
/// min_rank = 0 this is the plain interval. Endpoints are always members.
struct ClosedComponent {
  PointId lo;
  PointId hi;
  int min_rank = 0;

  friend bool operator==(const ClosedComponent&, const ClosedComponent&) = default;
};

/// Closed subset of a line given as a finite, ordered, disjoint union of
/// components. On ordinal lines the rank filter makes sets such as
/// {ω, ω·2, ..., ω²} exactly representable.
class ClosedSet {
 public:
  static ClosedSet empty(const LineDescriptor& line);
  static ClosedSet whole(const LineDescriptor& line);
  /// Finite set of points (e.g. the support of a measure).
  static ClosedSet from_points(const LineDescriptor& line, std::vector<PointId> points);
  /// Tightens endpoints to members, drops empty components, and checks that
  /// the result is ordered and disjoint.
  static ClosedSet from_components(const LineDescriptor& line, std::vector<ClosedComponent> components);

  const LineDescriptor& line() const { return line_; }
  const std::vector<ClosedComponent>& components() const { return components_; }

  bool is_empty() const { return components_.empty(); }
  bool contains(const PointId& p) const;
  PointId min() const;
  PointId max() const;

  ClosedSet intersect(const ClopenInterval& interval) const;
  /// Least member ≥ p.
  std::optional<PointId> first_at_or_above(const PointId& p) const;
  bool is_subset_of(const ClosedSet& other) const;
  /// Number of members when finite, nullopt otherwise.
  std::optional<std::size_t> finite_size() const;
  /// Deterministic finite sample of members: both endpoints of every
  /// component and up to `per_component` further members after lo.
  std::vector<PointId> sample_members(std::size_t per_component) const;

  std::string to_string() const;

  friend bool operator==(const ClosedSet& a, const ClosedSet& b) { return a.components_ == b.components_; }

 private:
  explicit ClosedSet(LineDescriptor line) : line_(std::move(line)) {}

  LineDescriptor line_;
  std::vector<ClosedComponent> components_;
};

}  // namespace sobczyk
