#pragma once

// Subspaces X of C(L) with computable dual norms, the operator R: X → C(L)
// and its boundary map φ(p) = R*(δ_p).

#include <compare>
#include <map>
#include <vector>

#include "sobczyk/closed_set.hpp"
#include "sobczyk/function.hpp"
#include "sobczyk/lp.hpp"
#include "sobczyk/measure.hpp"
#include "sobczyk/quotient.hpp"

namespace sobczyk {

/// (q*f)(p) = f(q(p)).
TestFunction pullback(const QuotientMap& q, const TestFunction& f);

/// Coordinates at or above this value stand for n → ∞: coefficient
/// patterns evaluate there to their tail limit.
inline constexpr std::uint64_t kFarCoordinate = std::uint64_t{1} << 40;

/// Coefficient sequence n ↦ c(n): an explicit prefix followed by a constant
/// tail c or a geometric tail c·ρ^(n − prefix length) with |ρ| < 1.
class CoefficientPattern {
 public:
  enum class Tail { Constant, Geometric };

  static CoefficientPattern zero() { return constant({}, 0); }
  static CoefficientPattern constant(std::vector<Rational> prefix, Rational c);
  static CoefficientPattern geometric(std::vector<Rational> prefix, Rational c, Rational ratio);

  Tail tail() const { return tail_; }
  const std::vector<Rational>& prefix() const { return prefix_; }
  const Rational& tail_value() const { return c_; }
  const Rational& ratio() const { return ratio_; }

  /// c(n); lim c for n ≥ kFarCoordinate.
  Rational at(std::uint64_t n) const;
  /// lim c(n).
  Rational limit() const;
  /// sup |c(n)|; attained.
  Rational sup_abs() const;
  bool is_zero() const;

  friend bool operator==(const CoefficientPattern&, const CoefficientPattern&) = default;

 private:
  Tail tail_ = Tail::Constant;
  std::vector<Rational> prefix_;
  Rational c_;
  Rational ratio_;
};

/// Coordinate of ℓ₁ = X*. On ordinal lines layer 0 is indexed by (A,B,C),
/// layer 1 by (A,B) and layer 2 by A; on finite lines only layer 0 with C
/// the point index is used.
struct CoordKey {
  int layer = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;

  friend auto operator<=>(const CoordKey&, const CoordKey&) = default;
  std::string to_string() const;
};

/// The key of a plain index n (layer 0).
inline CoordKey index_key(std::uint64_t n) { return CoordKey{0, 0, 0, n}; }

/// Patterns of the three layers of a coordinate embedding. With only
/// `units` nonzero, φ(p) = c(p)·e_ι(p) on successors and φ = 0 at limits.
struct CoordinatePatterns {
  CoefficientPattern units = CoefficientPattern::zero();
  CoefficientPattern omega = CoefficientPattern::zero();
  CoefficientPattern omega2 = CoefficientPattern::zero();

  friend bool operator==(const CoordinatePatterns&, const CoordinatePatterns&) = default;
};

/// Element of X*: coordinates against the X-basis, or a finitely supported
/// vector of ℓ₁.
class DualVector {
 public:
  enum class Kind { Finite, L1 };

  static DualVector finite(lp::Vector coords);
  static DualVector l1(std::map<CoordKey, Rational> entries);
  static DualVector zero_like(const DualVector& v);

  Kind kind() const { return kind_; }
  const lp::Vector& coords() const { return coords_; }
  const std::map<CoordKey, Rational>& entries() const { return entries_; }

  DualVector& operator+=(const DualVector& other);
  DualVector& operator-=(const DualVector& other);
  DualVector& operator*=(const Rational& c);
  friend DualVector operator+(DualVector a, const DualVector& b) { return a += b; }
  friend DualVector operator-(DualVector a, const DualVector& b) { return a -= b; }
  friend DualVector operator*(const Rational& c, DualVector a) { return a *= c; }

  std::string to_string() const;
  friend bool operator==(const DualVector& a, const DualVector& b);

 private:
  void require_compatible(const DualVector& other) const;

  Kind kind_ = Kind::Finite;
  lp::Vector coords_;
  std::map<CoordKey, Rational> entries_;
};

class OperatorR {
 public:
  enum class Kind { FiniteBasis, Coordinate };

  /// X = span{h_j}, h_j = Σ_i matrix[i][j]·g_i, normed as a subspace of
  /// C(L). An empty matrix means h_j = g_j. Throws PreconditionError if the
  /// h_j are linearly dependent.
  static OperatorR finite_basis(const LineDescriptor& line, std::vector<TestFunction> g, lp::Matrix matrix = {});
  /// X = c₀ over CoordKey, supported on Finite and Ordinal lines.
  static OperatorR coordinate(const LineDescriptor& line, CoordinatePatterns patterns);

  Kind kind() const { return kind_; }
  const LineDescriptor& line() const { return line_; }
  const std::vector<TestFunction>& generators() const { return g_; }
  const lp::Matrix& matrix() const { return matrix_; }
  std::size_t dimension() const { return kind_ == Kind::FiniteBasis ? matrix_.front().size() : 0; }
  const CoordinatePatterns& patterns() const { return patterns_; }

  /// h_j(t).
  Rational basis_value(std::size_t j, const PointId& t) const;
  /// Points at which every X-element attains its sup norm; for step bases
  /// one per cell of the common refinement, plus breakpoints otherwise.
  const std::vector<PointId>& representatives() const { return reps_; }
  /// Distinct φ vectors over the representatives: the constraint rows of
  /// the unit ball of X.
  const std::vector<lp::Vector>& constraint_rows() const { return rows_; }
  /// True when every generator is a step function.
  bool is_locally_constant() const;
  /// Common-refinement cuts (step bases), including max.
  std::vector<PointId> refinement_cuts() const;

  friend bool operator==(const OperatorR& a, const OperatorR& b);

 private:
  explicit OperatorR(LineDescriptor line) : line_(std::move(line)) {}

  Kind kind_ = Kind::FiniteBasis;
  LineDescriptor line_;
  std::vector<TestFunction> g_;
  lp::Matrix matrix_;
  std::vector<PointId> reps_;
  std::vector<lp::Vector> rows_;
  CoordinatePatterns patterns_;
};

/// ‖ψ‖ in X*. Throws PreconditionError on a variant mismatch.
Rational dual_norm(const OperatorR& r, const DualVector& psi);

/// φ(p) = R*(δ_p).
DualVector phi(const OperatorR& r, const PointId& p);
/// R*(μ) = Σ μ({p})·φ(p).
DualVector r_star(const OperatorR& r, const SignedMeasure& mu);
/// ‖φ(p) − φ(p')‖.
Rational phi_distance(const OperatorR& r, const PointId& p, const PointId& q);
/// sup over p, p' ∈ S of ‖φ(p) − φ(p')‖; 0 for empty S.
Rational diam_phi(const OperatorR& r, const ClosedSet& s);
/// ‖R‖ = sup_p ‖φ(p)‖.
Rational operator_norm(const OperatorR& r);

/// Finite set of members of S on which diam_phi and operator_norm are
/// attained.
std::vector<PointId> extremal_candidates(const OperatorR& r, const ClosedSet& s);

/// Value of x ∈ X (coordinates against the X-basis) at t.
Rational eval_element(const OperatorR& r, const lp::Vector& x, const PointId& t);

}  // namespace sobczyk
