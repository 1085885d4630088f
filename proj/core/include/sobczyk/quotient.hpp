#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sobczyk/order.hpp"

namespace sobczyk {

/// Continuous increasing surjection q: K → L between compact lines. Every
/// fiber is a closed interval of K; b_t = max q⁻¹(t) and, for multi-point
/// fibers of a zero-dimensional K, a_t is a right-isolated fiber point below b_t.
class QuotientMap {
 public:
  enum class Kind { Identity, FirstProjection, DoubleArrowProjection, Cuts };

  static QuotientMap identity(const LineDescriptor& line);
  /// π₁: inner × {0,1} → inner. `doubled` must be a LexDouble line.
  static QuotientMap first_projection(const LineDescriptor& doubled);
  /// π₁: DA(Q) → [0,1].
  static QuotientMap double_arrow_projection(const LineDescriptor& double_arrow);

  Kind kind() const { return kind_; }
  const LineDescriptor& source() const { return source_; }
  const LineDescriptor& target() const { return target_; }
  /// Non-max cuts of a Cuts quotient, increasing.
  const std::vector<PointId>& cuts() const { return cuts_; }

  PointId apply(const PointId& p) const;
  PointId fiber_min(const PointId& t) const;
  /// b_t.
  PointId fiber_max(const PointId& t) const;
  /// t ∈ Q_f, i.e. |q⁻¹(t)| > 1.
  bool is_multi(const PointId& t) const;
  /// a_t for t ∈ Q_f; nullopt when the fiber has no right-isolated point
  /// below b_t (only possible for non-zero-dimensional sources).
  std::optional<PointId> a_point(const PointId& t) const;
  /// Q_f, enumerated. Requires a finite target.
  std::vector<PointId> multi_fiber_points() const;

  friend class QuotientBuilder;

 private:
  QuotientMap(Kind kind, LineDescriptor source, LineDescriptor target)
      : kind_(kind), source_(std::move(source)), target_(std::move(target)) {}

  Kind kind_;
  LineDescriptor source_;
  LineDescriptor target_;
  std::vector<PointId> cuts_;
};

/// (inner × {0,1} with the lexicographic order, first projection).
std::pair<LineDescriptor, QuotientMap> lex_double(const LineDescriptor& line);

/// Quotient of K by the characteristic functions χ_[0,s], s ∈ cuts: the
/// target is the finite line of order classes. Throws PreconditionError if
/// some s is not right-isolated.
QuotientMap build_quotient(const LineDescriptor& source, std::vector<PointId> cuts);

/// Some right-isolated r with lo ≤ r < hi, if one can be found.
std::optional<PointId> right_isolated_between(const LineDescriptor& line, const PointId& lo, const PointId& hi);

}  // namespace sobczyk
