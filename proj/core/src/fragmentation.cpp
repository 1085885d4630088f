#include "sobczyk/fragmentation.hpp"

#include "sobczyk/error.hpp"

namespace sobczyk {

namespace {

constexpr int kMaxOrdinalRank = 2;

/// Points of a left tail of the representative limit of rank s inside a
/// component of minimal rank r, with far coordinates standing for n → ∞.
std::vector<PointId> tail_sample(const OperatorR& r, int s, int min_rank) {
  constexpr std::uint64_t far[] = {kFarCoordinate, kFarCoordinate + 1, kFarCoordinate + 3};
  std::vector<PointId> out;
  if (s == 1) {
    out.push_back(PointId::ordinal(0, 1, 0));
    for (auto c : far) out.push_back(PointId::ordinal(0, 0, c));
    return out;
  }
  out.push_back(PointId::ordinal(1, 0, 0));
  std::vector<std::uint64_t> units{0};
  if (min_rank == 0) {
    for (std::uint64_t c = 1; c <= r.patterns().units.prefix().size() + 2; ++c) units.push_back(c);
    units.push_back(kFarCoordinate);
    units.push_back(kFarCoordinate + 1);
  }
  for (auto b : far) {
    for (auto c : units) out.push_back(PointId::ordinal(0, b, c));
  }
  return out;
}

}  // namespace

bool tail_survives(const OperatorR& r, const Rational& delta, int s, int min_rank) {
  if (r.kind() != OperatorR::Kind::Coordinate || r.line().kind() != LineDescriptor::Kind::Ordinal) {
    throw PreconditionError("tail_survives needs a coordinate embedding on an ordinal line");
  }
  if (s <= min_rank || s > kMaxOrdinalRank) throw PreconditionError("tail rank out of range");
  const OperatorR probe = OperatorR::coordinate(LineDescriptor::ordinal(OrdinalCnf{1, 0, 0}), r.patterns());
  const auto sample = tail_sample(probe, s, min_rank);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      if (phi_distance(probe, sample[i], sample[j]) >= delta) return true;
    }
  }
  return false;
}

Hierarchy compute_hierarchy(const OperatorR& r, const Rational& delta, std::size_t max_stage) {
  if (delta <= 0) throw PreconditionError("delta must be positive");
  Hierarchy h{r, delta, {ClosedSet::whole(r.line())}};
  const bool symbolic = r.kind() == OperatorR::Kind::Coordinate && r.line().kind() == LineDescriptor::Kind::Ordinal;
  if (!symbolic) {
    // φ is locally constant or continuous into a finite-dimensional space,
    // so every point has a neighborhood of small diameter.
    h.levels.push_back(ClosedSet::empty(r.line()));
    return h;
  }
  while (!h.levels.back().is_empty()) {
    if (h.stage() >= max_stage) throw NotStabilized(max_stage);
    std::vector<ClosedComponent> next;
    for (const auto& comp : h.levels.back().components()) {
      const auto start = r.line().successor(comp.lo);
      if (!start || comp.hi < *start) continue;
      for (int s = comp.min_rank + 1; s <= kMaxOrdinalRank; ++s) {
        if (tail_survives(r, delta, s, comp.min_rank)) {
          next.push_back(ClosedComponent{*start, comp.hi, s});
          break;
        }
      }
    }
    h.levels.push_back(ClosedSet::from_components(r.line(), std::move(next)));
  }
  return h;
}

std::size_t alpha_of_interval(const Hierarchy& h, const ClopenInterval& interval) {
  validate_interval(h.r.line(), interval);
  for (std::size_t k = 0; k < h.levels.size(); ++k) {
    if (diam_phi(h.r, h.levels[k].intersect(interval)) < h.delta) return k;
  }
  return h.stage();
}

std::size_t level_of(const Hierarchy& h, const PointId& t) {
  h.r.line().require(t);
  std::size_t k = 0;
  while (k + 1 < h.levels.size() && h.levels[k + 1].contains(t)) ++k;
  return k;
}

FlowerBound flower_bound(const OperatorR& r, const SignedMeasure& mu) {
  if (mu.total_mass() != 0) throw PreconditionError("flower bound needs mu(L) = 0");
  FlowerBound out;
  out.lhs = dual_norm(r, r_star(r, mu));
  out.rhs = diam_phi(r, ClosedSet::from_points(r.line(), mu.support())) * total_variation(mu) / 2;
  out.holds = out.lhs <= out.rhs;
  if (!out.holds) {
    throw PostconditionError("flower bound fails: " + to_string(out.lhs) + " > " + to_string(out.rhs));
  }
  return out;
}

}  // namespace sobczyk
