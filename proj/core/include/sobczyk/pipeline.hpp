#pragma once

// End-to-end extension of a c₀-valued operator T₀ on a subspace X ⊂ C(K)
// to T′ on C(K): quotient by the step cuts of X, extend on the metrizable
// quotient, split off the hard part and lift it back through the quotient.

#include <cstddef>
#include <optional>
#include <vector>

#include "sobczyk/decomposition.hpp"

namespace sobczyk {

/// X = span{h_j}, h_j = Σ_i matrix[i][j]·generators[i]. Generators must be
/// step functions on K.
struct SubspaceData {
  std::vector<TestFunction> generators;
  lp::Matrix matrix;
};

struct PipelineReport {
  bool doubled = false;
  /// Points of the quotient line L.
  std::uint64_t quotient_size = 0;
  Rational scale;
  Rational norm_t0;
  Rational norm_t;
  Rational norm_hard;
  Rational norm_s;
  Rational norm_s_r;
  Rational norm_tprime;
  Rational ratio;
  std::size_t horizon = 0;
  std::vector<std::size_t> schedule;
  std::vector<Check> checks;
  bool holds = false;
};

struct PipelineResult {
  /// T′ on the working line (K, or its lexicographic double).
  std::vector<SignedMeasure> tprime;
  /// The hard part T′₀ lifted to the working line.
  std::vector<SignedMeasure> hard;
  PipelineReport report;
};

/// T₀ is given by one functional per index (coordinates against the
/// X-basis), zero afterwards. horizon 0 means functionals + 1.
PipelineResult full_pipeline(const LineDescriptor& k, const SubspaceData& x, const std::vector<DualVector>& t0,
                             const DecompositionConfig& cfg, std::size_t horizon = 0);

}  // namespace sobczyk
