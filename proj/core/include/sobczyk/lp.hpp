#pragma once

// Exact rational linear algebra and linear programming.

#include <cstddef>
#include <optional>
#include <vector>

#include "sobczyk/rational.hpp"

namespace sobczyk::lp {

using Vector = std::vector<Rational>;
/// Row-major; every row has the same length.
using Matrix = std::vector<Vector>;

std::size_t rank(Matrix m);

/// Some x with A x = b, or nullopt if the system is inconsistent. Free
/// variables are set to 0.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  Vector x;
};

/// min cᵀx subject to A x = b, x ≥ 0. Two-phase tableau simplex with
/// Bland's rule, so it terminates on degenerate problems.
Solution minimize_standard(const Matrix& a, const Vector& b, const Vector& c);

struct L1Representation {
  Rational norm;
  /// One weight per column.
  Vector weights;
};

/// min Σ|λ_j| subject to Σ λ_j columns[j] = target. nullopt when target is
/// outside the span of the columns.
std::optional<L1Representation> min_l1_combination(const std::vector<Vector>& columns, const Vector& target);

/// As min_l1_combination, but among optimal basic solutions returns the one
/// whose support (sorted column indices) is lexicographically smallest.
std::optional<L1Representation> min_l1_combination_lex(const std::vector<Vector>& columns, const Vector& target);

}  // namespace sobczyk::lp
