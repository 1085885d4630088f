#pragma once

#include <utility>
#include <vector>

#include "sobczyk/order.hpp"

namespace sobczyk {

/// Node of a piecewise-linear function: (x, f(x)).
struct PlNode {
  Rational x;
  Rational value;
};

/// Continuous function on a line: a step function over a clopen partition,
/// or a piecewise-linear function of the first coordinate.
class TestFunction {
 public:
  enum class Kind { Step, PiecewiseLinear };

  /// Cells [0,c₀], ]c₀,c₁], … ending at max; values[i] on cell i. Cuts are
  /// sorted and must be right-isolated; max is appended when missing.
  static TestFunction step(const LineDescriptor& line, std::vector<PointId> cuts, std::vector<Rational> values);
  /// As step() but without the right-isolation check. Consumers that need
  /// continuity call require_continuous().
  static TestFunction step_unchecked(const LineDescriptor& line, std::vector<PointId> cuts,
                                     std::vector<Rational> values);
  static TestFunction constant(const LineDescriptor& line, const Rational& c);
  /// χ_I.
  static TestFunction indicator(const LineDescriptor& line, const ClopenInterval& interval);
  /// χ_[0,s].
  static TestFunction initial_segment(const LineDescriptor& line, const PointId& s);
  /// Nodes with x strictly increasing from 0 to 1. The line must carry a
  /// rational first coordinate: UnitInterval, DoubleArrow or a LexDouble of one.
  static TestFunction piecewise_linear(const LineDescriptor& line, std::vector<PlNode> nodes);

  Kind kind() const { return kind_; }
  const LineDescriptor& line() const { return line_; }
  /// Step cuts including max.
  const std::vector<PointId>& cuts() const { return cuts_; }
  const std::vector<Rational>& values() const { return values_; }
  const std::vector<PlNode>& nodes() const { return nodes_; }

  Rational eval(const PointId& t) const;
  Rational sup_norm() const;
  bool is_continuous() const;
  /// Throws PreconditionError naming the offending cut.
  void require_continuous() const;
  /// Points of the line where a partition must be cut to resolve f.
  std::vector<PointId> breakpoints() const;

  /// Same function read on another line whose points have the same first
  /// coordinate (used by pullback along first projections).
  TestFunction with_line(const LineDescriptor& line) const;

  friend bool operator==(const TestFunction& a, const TestFunction& b);

 private:
  explicit TestFunction(LineDescriptor line) : line_(std::move(line)) {}

  Kind kind_ = Kind::Step;
  LineDescriptor line_;
  std::vector<PointId> cuts_;
  std::vector<Rational> values_;
  std::vector<PlNode> nodes_;
};

/// First coordinate of a point on a line admitting piecewise-linear functions.
const Rational& first_coordinate(const PointId& p);
bool has_rational_coordinate(const LineDescriptor& line);

}  // namespace sobczyk
