#pragma once

// Computable compact lines: points, order queries, clopen intervals and
// clopen-partitions.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sobczyk/rational.hpp"

namespace sobczyk {

/// Ordinal below ω³ in Cantor normal form: ω²·omega2 + ω·omega + units.
/// Lexicographic comparison on the coefficients is the ordinal order.
struct OrdinalCnf {
  std::uint64_t omega2 = 0;
  std::uint64_t omega = 0;
  std::uint64_t units = 0;

  friend auto operator<=>(const OrdinalCnf&, const OrdinalCnf&) = default;

  /// Cantor-Bendixson rank: 0 for zero and successors, 1 for ω·k-type
  /// limits, 2 for multiples of ω².
  int rank() const;
  bool is_limit() const { return rank() > 0; }
  std::string to_string() const;
};

class PointId {
 public:
  enum class Kind { Finite, Ordinal, Pair, Rational, Doubled };

  static PointId finite(std::uint64_t index);
  static PointId ordinal(OrdinalCnf cnf);
  static PointId ordinal(std::uint64_t omega2, std::uint64_t omega, std::uint64_t units);
  static PointId pair(PointId base, int bit);
  static PointId rational(Rational x);
  static PointId doubled(Rational x, int bit);

  Kind kind() const;

  std::uint64_t index() const;
  const OrdinalCnf& cnf() const;
  const PointId& base() const;
  int bit() const;
  /// First coordinate of RationalPoint and DoubledRational points.
  const Rational& x() const;

  std::string to_string() const;

  /// Intrinsic order. Within one line it coincides with the line order;
  /// across kinds it only serves as a container key order.
  friend std::strong_ordering operator<=>(const PointId& a, const PointId& b);
  friend bool operator==(const PointId& a, const PointId& b) { return (a <=> b) == 0; }

 private:
  struct PairData {
    std::shared_ptr<const PointId> base;
    int bit = 0;
  };
  struct DoubledData {
    Rational x;
    int bit = 0;
  };
  using Storage = std::variant<std::uint64_t, OrdinalCnf, PairData, Rational, DoubledData>;

  explicit PointId(Storage s) : v_(std::move(s)) {}
  Storage v_;
};

/// Largest coefficient accepted in an ordinal bound unless the caller passes
/// another cap.
inline constexpr std::uint64_t kDefaultOrdinalCap = 8;

class LineDescriptor {
 public:
  enum class Kind { Finite, Ordinal, LexDouble, UnitInterval, DoubleArrow };

  static LineDescriptor finite(std::uint64_t size, std::vector<std::string> labels = {});
  /// The segment [0, bound].
  static LineDescriptor ordinal(OrdinalCnf bound, std::uint64_t cap = kDefaultOrdinalCap);
  /// inner × {0,1} with the lexicographic order.
  static LineDescriptor lex_double(LineDescriptor inner);
  static LineDescriptor unit_interval();
  /// ([0,1]×{0}) ∪ (Q×{1}), first coordinates rational. Q ⊂ ]0,1], finite.
  static LineDescriptor double_arrow(std::vector<Rational> q);

  Kind kind() const { return kind_; }
  std::uint64_t size() const { return size_; }
  const OrdinalCnf& bound() const { return bound_; }
  const LineDescriptor& inner() const { return *inner_; }
  const std::vector<Rational>& q_set() const { return q_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool in_q_set(const Rational& x) const;

  bool contains(const PointId& p) const;
  /// Throws InvalidPoint unless contains(p).
  void require(const PointId& p) const;

  PointId min() const;
  PointId max() const;
  std::strong_ordering compare(const PointId& a, const PointId& b) const;
  bool less(const PointId& a, const PointId& b) const { return compare(a, b) < 0; }

  std::optional<PointId> successor(const PointId& p) const;
  std::optional<PointId> predecessor(const PointId& p) const;
  bool is_right_isolated(const PointId& p) const;
  bool is_left_isolated(const PointId& p) const;

  /// Finite, Ordinal and LexDouble lines. DoubleArrow lines are flagged as
  /// not zero-dimensional even though some finite-Q instances are.
  bool is_zero_dimensional() const;
  /// Countable lines (hence metrizable): Finite, Ordinal and doubles thereof.
  bool is_countable() const;
  bool is_finite() const;
  /// Number of points of a finite line.
  std::uint64_t point_count() const;

  std::string describe() const;

  friend bool operator==(const LineDescriptor& a, const LineDescriptor& b);

 private:
  LineDescriptor() = default;

  Kind kind_ = Kind::Finite;
  std::uint64_t size_ = 0;
  OrdinalCnf bound_{};
  std::shared_ptr<const LineDescriptor> inner_;
  std::vector<Rational> q_;
  std::vector<std::string> labels_;
};

/// First `count` points of the line in its canonical enumeration (fewer if
/// the line is finite). Every point of the line appears eventually.
std::vector<PointId> canonical_points(const LineDescriptor& line, std::size_t count);

/// First `count` right-isolated points other than max, canonical order.
std::vector<PointId> canonical_right_isolated(const LineDescriptor& line, std::size_t count);

/// All points of a finite line, increasing.
std::vector<PointId> all_points(const LineDescriptor& line);

/// Some point strictly between lo and hi, if the open interval is nonempty
/// and a witness is computable.
std::optional<PointId> point_between(const LineDescriptor& line, const PointId& lo, const PointId& hi);

/// [0,hi] when lo is absent, ]lo,hi] otherwise.
struct ClopenInterval {
  std::optional<PointId> lo;
  PointId hi;

  friend bool operator==(const ClopenInterval&, const ClopenInterval&) = default;
  std::string to_string() const;
};

/// Throws PreconditionError unless the endpoints are right-isolated and ordered.
void validate_interval(const LineDescriptor& line, const ClopenInterval& interval);
bool interval_contains(const LineDescriptor& line, const ClopenInterval& interval, const PointId& t);
PointId interval_min(const LineDescriptor& line, const ClopenInterval& interval);
ClopenInterval whole_line(const LineDescriptor& line);

class ClopenPartition {
 public:
  /// Sorts and deduplicates. Throws PreconditionError if a cut is not
  /// right-isolated or max is missing.
  static ClopenPartition make(const LineDescriptor& line, std::vector<PointId> cuts);
  static ClopenPartition coarsest(const LineDescriptor& line);

  const std::vector<PointId>& cuts() const { return cuts_; }
  bool has_cut(const PointId& b) const;
  std::vector<ClopenInterval> cells() const;
  ClopenInterval cell_of(const LineDescriptor& line, const PointId& t) const;
  bool refines(const ClopenPartition& coarser) const;

  friend bool operator==(const ClopenPartition&, const ClopenPartition&) = default;

 private:
  std::vector<PointId> cuts_;
};

/// P_k: max plus the first k right-isolated points of the canonical
/// enumeration. Increasing in k; the union over k is every right-isolated point.
ClopenPartition refine_partitions(const LineDescriptor& line, std::size_t k);

}  // namespace sobczyk
