#pragma once

// Finitely supported signed measures with exact weights, their cumulative
// (NBV) profiles and Riemann-Stieltjes integration against test functions.

#include <map>
#include <vector>

#include "sobczyk/function.hpp"
#include "sobczyk/order.hpp"
#include "sobczyk/quotient.hpp"

namespace sobczyk {

class SignedMeasure {
 public:
  explicit SignedMeasure(LineDescriptor line) : line_(std::move(line)) {}
  /// Zero weights are dropped; repeated points cannot occur in a map.
  SignedMeasure(LineDescriptor line, const std::map<PointId, Rational>& atoms);

  static SignedMeasure dirac(const LineDescriptor& line, const PointId& p, const Rational& weight = 1);

  const LineDescriptor& line() const { return line_; }
  const std::map<PointId, Rational>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }
  std::vector<PointId> support() const;

  Rational weight(const PointId& p) const;
  /// μ(L).
  Rational total_mass() const;
  /// μ(I).
  Rational mass_of(const ClopenInterval& interval) const;
  /// μ restricted to I.
  SignedMeasure restrict(const ClopenInterval& interval) const;

  void add(const PointId& p, const Rational& weight);

  SignedMeasure& operator+=(const SignedMeasure& other);
  SignedMeasure& operator-=(const SignedMeasure& other);
  SignedMeasure& operator*=(const Rational& c);
  friend SignedMeasure operator+(SignedMeasure a, const SignedMeasure& b) { return a += b; }
  friend SignedMeasure operator-(SignedMeasure a, const SignedMeasure& b) { return a -= b; }
  friend SignedMeasure operator*(const Rational& c, SignedMeasure a) { return a *= c; }

  std::string to_string() const;

  friend bool operator==(const SignedMeasure& a, const SignedMeasure& b);

 private:
  void require_same_line(const SignedMeasure& other) const;

  LineDescriptor line_;
  std::map<PointId, Rational> atoms_;
};

struct JordanParts {
  SignedMeasure positive;
  SignedMeasure negative;
};

/// ‖μ‖ = Σ|weights|.
Rational total_variation(const SignedMeasure& mu);
JordanParts jordan(const SignedMeasure& mu);
/// F_μ(t) = μ([0,t]).
Rational cumulative(const SignedMeasure& mu, const PointId& t);

/// F_μ, evaluated on demand.
class NBVProfile {
 public:
  explicit NBVProfile(SignedMeasure mu) : mu_(std::move(mu)) {}

  const SignedMeasure& measure() const { return mu_; }
  const LineDescriptor& line() const { return mu_.line(); }
  Rational operator()(const PointId& t) const { return cumulative(mu_, t); }

  /// Σ|F(t_{i+1}) − F(t_i)| over an increasing list of points.
  Rational variation_on(const std::vector<PointId>& partition) const;
  /// The atom partition {min} ∪ atoms ∪ {max}.
  std::vector<PointId> atom_partition() const;

 private:
  SignedMeasure mu_;
};

/// |F(0)| + V(F). V is evaluated on the atom partition and checked against
/// one further refinement; PostconditionError if the two disagree.
Rational bv_norm(const NBVProfile& profile);

/// S(f,F;P) = f(t₀)F(t₀) + Σ f(t_{i+1})(F(t_{i+1}) − F(t_i)) for an
/// increasing partition starting at min.
Rational stieltjes_sum(const TestFunction& f, const NBVProfile& profile, const std::vector<PointId>& partition);

/// ∫ f dF. Throws LineMismatch, or PreconditionError when f is not continuous.
Rational rs_integral(const TestFunction& f, const NBVProfile& profile);

/// q_*μ.
SignedMeasure pushforward(const QuotientMap& q, const SignedMeasure& mu);

/// Inserts a point strictly between each consecutive pair where one exists.
std::vector<PointId> refine_once(const LineDescriptor& line, const std::vector<PointId>& partition);

}  // namespace sobczyk
