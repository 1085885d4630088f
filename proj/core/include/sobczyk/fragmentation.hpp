#pragma once

// The δ-oscillation hierarchy H₀ ⊇ H₁ ⊇ … of φ: H_{k+1} keeps the points of
// H_k every neighborhood of which meets H_k in a set of φ-diameter ≥ δ.

#include <cstddef>
#include <vector>

#include "sobczyk/closed_set.hpp"
#include "sobczyk/function_space.hpp"

namespace sobczyk {

inline constexpr std::size_t kDefaultMaxStage = 32;

struct Hierarchy {
  OperatorR r;
  Rational delta;
  /// H₀, H₁, …; the last level is empty.
  std::vector<ClosedSet> levels;

  /// Index of the first empty level.
  std::size_t stage() const { return levels.size() - 1; }
};

/// Throws NotStabilized if H_max_stage is still nonempty, PreconditionError
/// if delta ≤ 0.
Hierarchy compute_hierarchy(const OperatorR& r, const Rational& delta, std::size_t max_stage = kDefaultMaxStage);

/// On ordinal coordinate embeddings: whether points of rank s survive in a
/// level component of minimal rank r, i.e. whether their left tails keep
/// φ-diameter ≥ δ in the limit.
bool tail_survives(const OperatorR& r, const Rational& delta, int s, int min_rank);

/// α(I) = min{k : diam φ[H_k ∩ I] < δ}.
std::size_t alpha_of_interval(const Hierarchy& h, const ClopenInterval& interval);

/// Largest k with t ∈ H_k.
std::size_t level_of(const Hierarchy& h, const PointId& t);

struct FlowerBound {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// lhs = ‖R*(μ)‖, rhs = ½·diam φ[supp μ]·‖μ‖. Requires μ(L) = 0; throws
/// PostconditionError if lhs > rhs.
FlowerBound flower_bound(const OperatorR& r, const SignedMeasure& mu);

}  // namespace sobczyk
