#pragma once

// Measure rewriting (tilde, skeleton), the hard/soft decomposition of a
// weak*-null sequence, the quotient extension criterion and extensions of
// functionals from a finite-dimensional X.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sobczyk/fragmentation.hpp"
#include "sobczyk/sequence.hpp"

namespace sobczyk {

/// μ̃ = μ − Σ_{b∈P} μ([0,b])δ_b + Σ_{b∈P, b≠max} μ([0,b])δ_{b⁺}. Asserts
/// μ̃(I) = 0 on every cell, F_μ̃ = F_μ off P, and
/// ‖μ̃‖ ≤ ‖μ‖ + 2Σ_{b∈P}|μ([0,b])|.
SignedMeasure tilde_mu(const LineDescriptor& line, const ClopenPartition& p, const SignedMeasure& mu);

/// Moves every atom of μ (supported in I) onto H ⊆ I: to the least point of
/// H above it, or to max H beyond it. Asserts supp ν ⊆ H, ν(I) = μ(I),
/// ‖ν‖ ≤ ‖μ‖ and F_ν = F_μ on H ∖ {max H}. H may be empty only if μ(I) = 0.
SignedMeasure skeleton(const ClopenInterval& interval, const ClosedSet& h, const SignedMeasure& mu);

/// n₁ < n₂ < … ≤ horizon with 2Σ_{b∈P_k}|μ_n([0,b])| ≤ ε′ for all n ≥ n_k.
/// Throws ScheduleNotFound when a horizon-only sequence never gets there.
std::vector<std::size_t> choose_schedule(const MeasureSequence& seq,
                                         const std::function<ClopenPartition(std::size_t)>& partitions,
                                         const Rational& epsp);

struct DecompositionConfig {
  Rational eps;
  Rational epsp;
  std::size_t max_stage = kDefaultMaxStage;

  /// δ = 2ε/(1+ε′).
  Rational delta() const;
};

struct DecompositionResult {
  /// μ′_n and ν_n for n = 1..horizon, stored at index n−1.
  std::vector<SignedMeasure> mu_prime;
  std::vector<SignedMeasure> nu;
  /// E.
  std::vector<PointId> exceptional;
  std::vector<std::size_t> schedule;
  /// P_1, P_2, … (one per schedule entry).
  std::vector<ClopenPartition> partitions;
  Hierarchy hierarchy;
  std::size_t horizon = 0;
};

/// Requires sup‖μ_n‖ ≤ 1 and a Finite or Ordinal line.
DecompositionResult decompose(const OperatorR& r, const MeasureSequence& seq, const DecompositionConfig& cfg);

/// Least k ≤ partition count with diam φ[H_β ∩ P̄_k(t)] < δ, β = level of t.
std::optional<std::size_t> k0_of(const Hierarchy& h, const std::vector<ClopenPartition>& partitions, const PointId& t);

struct Check {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool pass = false;
  std::string detail;
};

/// Recomputes the hierarchy, k₀ and every postcondition plus the ν-decay
/// property from scratch. `sample` lists points t at which vanishing
/// cumulatives are checked; points of E are skipped.
std::vector<Check> verify_decomposition(const OperatorR& r, const MeasureSequence& seq, const DecompositionConfig& cfg,
                                        const DecompositionResult& result, const std::vector<PointId>& sample);

struct Verdict {
  enum class Kind { Extendable, NotExtendable, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<PointId> exceptional;
  std::optional<PointId> witness;
  /// n ≤ horizon with μ_n([0,witness]) = 1.
  std::size_t hits = 0;
  std::string reason;
};

/// Decides whether μ_n([0,t]) → 0 for every sampled t ∈ Q_f.
Verdict check_criterion(const QuotientMap& q, const MeasureSequence& seq, const std::vector<PointId>& sample);

/// ν_n = Σ_t μ_n({t})·δ_{b_t}. Throws PreconditionError unless the verdict
/// is Extendable.
MeasureSequence extend_through_quotient(const QuotientMap& q, const MeasureSequence& seq, const Verdict& verdict);

/// ν = Σ_t μ({t})·δ_{b_t} for a single measure on q's target.
SignedMeasure lift_measure(const QuotientMap& q, const SignedMeasure& mu);

/// Norm-preserving extension of each functional (coordinates against the
/// X-basis) to a measure on L, supported on representatives, by exact LP
/// with lexicographically smallest support. Zero tail.
MeasureSequence sobczyk_extend(const OperatorR& r, const std::vector<DualVector>& functionals, std::size_t horizon = 0);

}  // namespace sobczyk
