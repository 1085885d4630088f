#pragma once

// Seeded generators of desk-scale instances for property campaigns.

#include <cstdint>
#include <random>
#include <vector>

#include "sobczyk/decomposition.hpp"
#include "sobczyk/pipeline.hpp"

namespace sobczyk {

/// Limits on generated instances.
struct InstanceBudget {
  std::size_t max_atoms = 6;
  std::uint64_t max_finite = 8;
  std::uint64_t max_coefficient = 3;
  std::size_t max_generators = 3;
  std::size_t max_functionals = 4;
};

class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed, InstanceBudget budget = {}) : gen_(seed), budget_(budget) {}

  const InstanceBudget& budget() const { return budget_; }

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// ±p/q with 0 ≤ p ≤ max_num, 1 ≤ q ≤ max_den.
  Rational rational(std::uint64_t max_num = 4, std::uint64_t max_den = 4);
  /// Uniform in ]0,1] with denominator ≤ max_den.
  Rational unit_rational(std::uint64_t max_den = 8);

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[uniform(0, items.size() - 1)];
  }

 private:
  std::mt19937_64 gen_;
  InstanceBudget budget_;
};

enum class LineFamily { Finite, Ordinal, LexDouble, UnitInterval, DoubleArrow };

inline constexpr LineFamily kAllLineFamilies[] = {LineFamily::Finite, LineFamily::Ordinal, LineFamily::LexDouble,
                                                 LineFamily::UnitInterval, LineFamily::DoubleArrow};

LineDescriptor random_line(InstanceRng& rng, LineFamily family);
/// Any family.
LineDescriptor random_line(InstanceRng& rng);
/// Finite or Ordinal, the lines accepted by decompose.
LineDescriptor random_countable_line(InstanceRng& rng);

PointId random_point(InstanceRng& rng, const LineDescriptor& line);
/// A right-isolated point; max when the line has few of them.
PointId random_right_isolated(InstanceRng& rng, const LineDescriptor& line);

/// Nonzero, with up to max_atoms atoms.
SignedMeasure random_measure(InstanceRng& rng, const LineDescriptor& line);
/// μ(L) = 0 and at least two atoms.
SignedMeasure random_balanced_measure(InstanceRng& rng, const LineDescriptor& line);
/// Atoms inside the interval only.
SignedMeasure random_measure_in(InstanceRng& rng, const LineDescriptor& line, const ClopenInterval& interval);

ClopenPartition random_partition(InstanceRng& rng, const LineDescriptor& line);
ClopenInterval random_interval(InstanceRng& rng, const LineDescriptor& line);
/// Closed subset of the interval: finitely many points or, on ordinal
/// lines, occasionally a rank-filtered component.
ClosedSet random_closed_subset(InstanceRng& rng, const LineDescriptor& line, const ClopenInterval& interval);

TestFunction random_step(InstanceRng& rng, const LineDescriptor& line);
/// Step function, or piecewise-linear where the line carries a rational
/// coordinate.
TestFunction random_continuous(InstanceRng& rng, const LineDescriptor& line);

CoefficientPattern random_pattern(InstanceRng& rng);
/// Finite-basis operator on the line; step generators unless the line
/// carries a rational coordinate, in which case some may be piecewise-linear.
OperatorR random_finite_basis(InstanceRng& rng, const LineDescriptor& line);
/// Coordinate embedding on a Finite or Ordinal line.
OperatorR random_coordinate(InstanceRng& rng, const LineDescriptor& line);

/// Sequence on a Finite or Ordinal line with sup‖μ_n‖ ≤ 1 and a certified
/// weak*-null variant.
MeasureSequence random_desk_sequence(InstanceRng& rng, const LineDescriptor& line, std::size_t horizon);

struct PipelineInstance {
  LineDescriptor k;
  SubspaceData x;
  std::vector<DualVector> t0;
};

PipelineInstance random_pipeline_instance(InstanceRng& rng);

}  // namespace sobczyk
