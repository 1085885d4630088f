#include "sobczyk/measure.hpp"

#include <algorithm>

#include "sobczyk/error.hpp"

namespace sobczyk {

SignedMeasure::SignedMeasure(LineDescriptor line, const std::map<PointId, Rational>& atoms) : line_(std::move(line)) {
  for (const auto& [p, w] : atoms) add(p, w);
}

SignedMeasure SignedMeasure::dirac(const LineDescriptor& line, const PointId& p, const Rational& weight) {
  SignedMeasure mu(line);
  mu.add(p, weight);
  return mu;
}

std::vector<PointId> SignedMeasure::support() const {
  std::vector<PointId> out;
  out.reserve(atoms_.size());
  for (const auto& [p, w] : atoms_) out.push_back(p);
  return out;
}

Rational SignedMeasure::weight(const PointId& p) const {
  line_.require(p);
  const auto it = atoms_.find(p);
  return it == atoms_.end() ? Rational(0) : it->second;
}

Rational SignedMeasure::total_mass() const {
  Rational sum = 0;
  for (const auto& [p, w] : atoms_) sum += w;
  return sum;
}

Rational SignedMeasure::mass_of(const ClopenInterval& interval) const {
  validate_interval(line_, interval);
  Rational sum = 0;
  for (const auto& [p, w] : atoms_) {
    if (interval_contains(line_, interval, p)) sum += w;
  }
  return sum;
}

SignedMeasure SignedMeasure::restrict(const ClopenInterval& interval) const {
  validate_interval(line_, interval);
  SignedMeasure out(line_);
  for (const auto& [p, w] : atoms_) {
    if (interval_contains(line_, interval, p)) out.atoms_.emplace(p, w);
  }
  return out;
}

void SignedMeasure::add(const PointId& p, const Rational& weight) {
  line_.require(p);
  if (weight == 0) return;
  auto [it, inserted] = atoms_.try_emplace(p, weight);
  if (inserted) {
    it->second.canonicalize();
    return;
  }
  it->second += weight;
  if (it->second == 0) atoms_.erase(it);
}

void SignedMeasure::require_same_line(const SignedMeasure& other) const {
  if (!(line_ == other.line_)) {
    throw LineMismatch("measures live on " + line_.describe() + " and " + other.line_.describe());
  }
}

SignedMeasure& SignedMeasure::operator+=(const SignedMeasure& other) {
  require_same_line(other);
  for (const auto& [p, w] : other.atoms_) add(p, w);
  return *this;
}

SignedMeasure& SignedMeasure::operator-=(const SignedMeasure& other) {
  require_same_line(other);
  for (const auto& [p, w] : other.atoms_) add(p, Rational(-w));
  return *this;
}

SignedMeasure& SignedMeasure::operator*=(const Rational& c) {
  if (c == 0) {
    atoms_.clear();
    return *this;
  }
  for (auto& [p, w] : atoms_) w *= c;
  return *this;
}

std::string SignedMeasure::to_string() const {
  if (atoms_.empty()) return "0";
  std::string out;
  for (const auto& [p, w] : atoms_) {
    if (!out.empty()) out += " + ";
    out += sobczyk::to_string(w) + "*d[" + p.to_string() + "]";
  }
  return out;
}

bool operator==(const SignedMeasure& a, const SignedMeasure& b) { return a.line_ == b.line_ && a.atoms_ == b.atoms_; }

Rational total_variation(const SignedMeasure& mu) {
  Rational sum = 0;
  for (const auto& [p, w] : mu.atoms()) sum += abs(w);
  return sum;
}

JordanParts jordan(const SignedMeasure& mu) {
  JordanParts parts{SignedMeasure(mu.line()), SignedMeasure(mu.line())};
  for (const auto& [p, w] : mu.atoms()) {
    if (w > 0) {
      parts.positive.add(p, w);
    } else {
      parts.negative.add(p, Rational(-w));
    }
  }
  return parts;
}

Rational cumulative(const SignedMeasure& mu, const PointId& t) {
  mu.line().require(t);
  Rational sum = 0;
  for (const auto& [p, w] : mu.atoms()) {
    if (t < p) break;
    sum += w;
  }
  return sum;
}

Rational NBVProfile::variation_on(const std::vector<PointId>& partition) const {
  Rational v = 0;
  for (std::size_t i = 1; i < partition.size(); ++i) v += abs((*this)(partition[i]) - (*this)(partition[i - 1]));
  return v;
}

std::vector<PointId> NBVProfile::atom_partition() const {
  std::vector<PointId> points = mu_.support();
  points.push_back(line().min());
  points.push_back(line().max());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<PointId> refine_once(const LineDescriptor& line, const std::vector<PointId>& partition) {
  std::vector<PointId> out;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i > 0) {
      if (auto mid = point_between(line, partition[i - 1], partition[i])) out.push_back(std::move(*mid));
    }
    out.push_back(partition[i]);
  }
  return out;
}

Rational bv_norm(const NBVProfile& profile) {
  const auto partition = profile.atom_partition();
  const Rational v = profile.variation_on(partition);
  if (profile.variation_on(refine_once(profile.line(), partition)) != v) {
    throw PostconditionError("variation changed under refinement");
  }
  return abs(profile(profile.line().min())) + v;
}

Rational stieltjes_sum(const TestFunction& f, const NBVProfile& profile, const std::vector<PointId>& partition) {
  if (partition.empty()) return 0;
  Rational prev = profile(partition.front());
  Rational sum = f.eval(partition.front()) * prev;
  for (std::size_t i = 1; i < partition.size(); ++i) {
    Rational cur = profile(partition[i]);
    sum += f.eval(partition[i]) * (cur - prev);
    prev = cur;
  }
  return sum;
}

Rational rs_integral(const TestFunction& f, const NBVProfile& profile) {
  if (!(f.line() == profile.line())) {
    throw LineMismatch("function on " + f.line().describe() + ", measure on " + profile.line().describe());
  }
  f.require_continuous();
  std::vector<PointId> partition = profile.atom_partition();
  for (auto& b : f.breakpoints()) partition.push_back(b);
  std::sort(partition.begin(), partition.end());
  partition.erase(std::unique(partition.begin(), partition.end()), partition.end());
  const Rational s = stieltjes_sum(f, profile, partition);
  if (stieltjes_sum(f, profile, refine_once(profile.line(), partition)) != s) {
    throw PostconditionError("Riemann-Stieltjes sum changed under refinement");
  }
  return s;
}

SignedMeasure pushforward(const QuotientMap& q, const SignedMeasure& mu) {
  if (!(mu.line() == q.source())) {
    throw LineMismatch("measure on " + mu.line().describe() + ", quotient source " + q.source().describe());
  }
  SignedMeasure out(q.target());
  for (const auto& [p, w] : mu.atoms()) out.add(q.apply(p), w);
  return out;
}

}  // namespace sobczyk
