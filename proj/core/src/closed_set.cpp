#include "sobczyk/closed_set.hpp"

#include <algorithm>

#include "sobczyk/error.hpp"

namespace sobczyk {

int point_rank(const LineDescriptor& line, const PointId& p) {
  line.require(p);
  return line.kind() == LineDescriptor::Kind::Ordinal ? p.cnf().rank() : 0;
}

std::optional<PointId> ceil_rank(const LineDescriptor& line, const PointId& p, int r) {
  line.require(p);
  if (r <= 0 || point_rank(line, p) >= r) return p;
  if (line.kind() != LineDescriptor::Kind::Ordinal) return std::nullopt;
  const OrdinalCnf& c = p.cnf();
  OrdinalCnf q = r == 1 ? OrdinalCnf{c.omega2, c.omega + 1, 0} : OrdinalCnf{c.omega2 + 1, 0, 0};
  if (r > 2 || q > line.bound()) return std::nullopt;
  return PointId::ordinal(q);
}

std::optional<PointId> floor_rank(const LineDescriptor& line, const PointId& p, int r) {
  line.require(p);
  if (r <= 0 || point_rank(line, p) >= r) return p;
  if (line.kind() != LineDescriptor::Kind::Ordinal || r > 2) return std::nullopt;
  const OrdinalCnf& c = p.cnf();
  if (r == 1) {
    if (c.omega > 0) return PointId::ordinal(c.omega2, c.omega, 0);
    if (c.omega2 > 0) return PointId::ordinal(c.omega2, 0, 0);
    return std::nullopt;
  }
  if (c.omega2 > 0) return PointId::ordinal(c.omega2, 0, 0);
  return std::nullopt;
}

ClosedSet ClosedSet::empty(const LineDescriptor& line) { return ClosedSet(line); }

ClosedSet ClosedSet::whole(const LineDescriptor& line) {
  ClosedSet s(line);
  s.components_.push_back(ClosedComponent{line.min(), line.max(), 0});
  return s;
}

ClosedSet ClosedSet::from_points(const LineDescriptor& line, std::vector<PointId> points) {
  for (const auto& p : points) line.require(p);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  ClosedSet s(line);
  for (auto& p : points) s.components_.push_back(ClosedComponent{p, p, 0});
  return s;
}

ClosedSet ClosedSet::from_components(const LineDescriptor& line, std::vector<ClosedComponent> components) {
  ClosedSet s(line);
  for (auto& comp : components) {
    auto lo = ceil_rank(line, comp.lo, comp.min_rank);
    auto hi = floor_rank(line, comp.hi, comp.min_rank);
    if (!lo || !hi || *hi < *lo) continue;
    // A component whose members are a single point is stored with rank 0.
    const int rank = *lo == *hi ? 0 : comp.min_rank;
    s.components_.push_back(ClosedComponent{*lo, *hi, rank});
  }
  std::sort(s.components_.begin(), s.components_.end(),
            [](const ClosedComponent& a, const ClosedComponent& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < s.components_.size(); ++i) {
    if (!(s.components_[i - 1].hi < s.components_[i].lo)) throw PreconditionError("closed set components overlap");
  }
  return s;
}

bool ClosedSet::contains(const PointId& p) const {
  line_.require(p);
  for (const auto& c : components_) {
    if (c.lo <= p && p <= c.hi) return point_rank(line_, p) >= c.min_rank;
  }
  return false;
}

PointId ClosedSet::min() const {
  if (is_empty()) throw PreconditionError("min of empty closed set");
  return components_.front().lo;
}

PointId ClosedSet::max() const {
  if (is_empty()) throw PreconditionError("max of empty closed set");
  return components_.back().hi;
}

ClosedSet ClosedSet::intersect(const ClopenInterval& interval) const {
  validate_interval(line_, interval);
  const PointId first = interval_min(line_, interval);
  std::vector<ClosedComponent> parts;
  for (const auto& c : components_) {
    if (c.hi < first || interval.hi < c.lo) continue;
    parts.push_back(ClosedComponent{std::max(c.lo, first), std::min(c.hi, interval.hi), c.min_rank});
  }
  return from_components(line_, std::move(parts));
}

std::optional<PointId> ClosedSet::first_at_or_above(const PointId& p) const {
  line_.require(p);
  for (const auto& c : components_) {
    if (c.hi < p) continue;
    return ceil_rank(line_, std::max(p, c.lo), c.min_rank);
  }
  return std::nullopt;
}

bool ClosedSet::is_subset_of(const ClosedSet& other) const {
  for (const auto& c : components_) {
    const bool covered = std::any_of(other.components_.begin(), other.components_.end(), [&](const ClosedComponent& o) {
      return o.lo <= c.lo && c.hi <= o.hi && (c.min_rank >= o.min_rank || c.lo == c.hi);
    });
    if (!covered) return false;
  }
  return true;
}

std::optional<std::size_t> ClosedSet::finite_size() const {
  std::size_t n = 0;
  for (const auto& c : components_) {
    if (c.lo == c.hi) {
      ++n;
      continue;
    }
    if (c.min_rank > 0 || !line_.is_countable()) return std::nullopt;
    // Count members by walking successors; an interval of a countable line is
    // finite iff the walk reaches hi.
    std::size_t steps = 1;
    std::optional<PointId> p = c.lo;
    while (p && *p != c.hi) {
      p = line_.successor(*p);
      if (!p || c.hi < *p) return std::nullopt;
      if (++steps > 1'000'000) return std::nullopt;
    }
    if (!p) return std::nullopt;
    n += steps;
  }
  return n;
}

std::vector<PointId> ClosedSet::sample_members(std::size_t per_component) const {
  std::vector<PointId> out;
  for (const auto& c : components_) {
    out.push_back(c.lo);
    std::optional<PointId> p = c.lo;
    for (std::size_t i = 0; i < per_component; ++i) {
      auto s = line_.successor(*p);
      if (!s) break;
      p = ceil_rank(line_, *s, c.min_rank);
      if (!p || c.hi < *p) break;
      out.push_back(*p);
    }
    out.push_back(c.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string ClosedSet::to_string() const {
  if (is_empty()) return "{}";
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += " u ";
    if (c.lo == c.hi) {
      out += "{" + c.lo.to_string() + "}";
    } else {
      out += "[" + c.lo.to_string() + "," + c.hi.to_string() + "]";
      if (c.min_rank > 0) out += "^" + std::to_string(c.min_rank);
    }
  }
  return out;
}

}  // namespace sobczyk
