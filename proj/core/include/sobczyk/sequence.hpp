#pragma once

// Bounded sequences of measures (μ_n)_{n≥1}, i.e. operators C(L) → ℓ∞, with
// variant-level weak*-null certificates.

#include <cstddef>
#include <functional>
#include <vector>

#include "sobczyk/measure.hpp"

namespace sobczyk {

class MeasureSequence {
 public:
  enum class Kind { ExplicitList, Scaled, Harmonic, IntervalSweep, Alternating };
  enum class Certificate { Analytic, HorizonOnly };

  /// μ_n = list[n−1] for n ≤ list size, 0 afterwards.
  static MeasureSequence explicit_list(const LineDescriptor& line, std::vector<SignedMeasure> list,
                                       std::size_t horizon = 0);
  /// μ_n = ratioⁿ·base, |ratio| < 1.
  static MeasureSequence scaled(SignedMeasure base, Rational ratio, std::size_t horizon = 20);
  /// μ_n = base / n.
  static MeasureSequence harmonic(SignedMeasure base, std::size_t horizon = 20);
  /// μ_n = δ_{a_n} − δ_{b_n} over the dyadic intervals [a_n, b_n[ of widths
  /// ½, ¼, …, level by level. The default horizon ends with width 2^-depth.
  static MeasureSequence interval_sweep(std::size_t depth);
  /// μ_n = table[(n−1) mod size]. Weak*-null is not certified.
  static MeasureSequence alternating(const LineDescriptor& line, std::vector<SignedMeasure> table,
                                     std::size_t horizon);

  Kind kind() const { return kind_; }
  Certificate certificate() const;
  const LineDescriptor& line() const { return line_; }
  std::size_t horizon() const { return horizon_; }
  std::size_t depth() const { return depth_; }
  const std::vector<SignedMeasure>& table() const { return table_; }
  const SignedMeasure& base() const { return table_.front(); }
  const Rational& ratio() const { return ratio_; }
  const Rational& factor() const { return factor_; }

  /// μ_n for n ≥ 1.
  SignedMeasure at(std::size_t n) const;
  /// Exact sup_n ‖μ_n‖.
  Rational bound() const;

  MeasureSequence with_horizon(std::size_t horizon) const;
  /// (c·μ_n).
  MeasureSequence scaled_by(const Rational& c) const;
  /// (T(μ_n)) for a linear map T into measures on `line`. Finite-description
  /// variants stay symbolic; the sweep is truncated at the horizon.
  MeasureSequence map_linear(const LineDescriptor& line,
                             const std::function<SignedMeasure(const SignedMeasure&)>& t) const;

  /// Least n₀ ≥ 1 such that 2·Σ_{b∈cuts} |μ_n([0,b])| ≤ eps for every n ≥ n₀:
  /// analytic for certified variants, checked up to the horizon otherwise
  /// (horizon + 1 if the horizon itself violates the bound).
  std::size_t decay_index(const std::vector<PointId>& cuts, const Rational& eps) const;

 private:
  explicit MeasureSequence(LineDescriptor line) : line_(std::move(line)) {}

  Kind kind_ = Kind::ExplicitList;
  LineDescriptor line_;
  std::vector<SignedMeasure> table_;
  Rational ratio_ = 0;
  Rational factor_ = 1;
  std::size_t depth_ = 0;
  std::size_t horizon_ = 0;
};

/// [a_n, b_n[ of the dyadic sweep, n ≥ 1.
std::pair<Rational, Rational> sweep_interval(std::size_t n);

/// The dyadic sweep on the unit interval down to width 2^-depth.
MeasureSequence sweep_sequence(std::size_t depth);

/// Σ_{b∈cuts} |μ([0,b])|.
Rational cut_mass(const SignedMeasure& mu, const std::vector<PointId>& cuts);

}  // namespace sobczyk
