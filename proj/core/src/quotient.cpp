#include "sobczyk/quotient.hpp"

#include <algorithm>

#include "sobczyk/error.hpp"

namespace sobczyk {

class QuotientBuilder {
 public:
  static QuotientMap make(QuotientMap::Kind kind, LineDescriptor source, LineDescriptor target,
                          std::vector<PointId> cuts = {}) {
    QuotientMap q(kind, std::move(source), std::move(target));
    q.cuts_ = std::move(cuts);
    return q;
  }
};

QuotientMap QuotientMap::identity(const LineDescriptor& line) {
  return QuotientBuilder::make(Kind::Identity, line, line);
}

QuotientMap QuotientMap::first_projection(const LineDescriptor& doubled) {
  if (doubled.kind() != LineDescriptor::Kind::LexDouble) throw PreconditionError("first projection needs a LexDouble line");
  return QuotientBuilder::make(Kind::FirstProjection, doubled, doubled.inner());
}

QuotientMap QuotientMap::double_arrow_projection(const LineDescriptor& double_arrow) {
  if (double_arrow.kind() != LineDescriptor::Kind::DoubleArrow) {
    throw PreconditionError("double-arrow projection needs a DoubleArrow line");
  }
  return QuotientBuilder::make(Kind::DoubleArrowProjection, double_arrow, LineDescriptor::unit_interval());
}

PointId QuotientMap::apply(const PointId& p) const {
  source_.require(p);
  switch (kind_) {
    case Kind::Identity:
      return p;
    case Kind::FirstProjection:
      return p.base();
    case Kind::DoubleArrowProjection:
      return PointId::rational(p.x());
    case Kind::Cuts: {
      const auto below = std::lower_bound(cuts_.begin(), cuts_.end(), p) - cuts_.begin();
      return PointId::finite(static_cast<std::uint64_t>(below));
    }
  }
  throw Error("unreachable");
}

PointId QuotientMap::fiber_min(const PointId& t) const {
  target_.require(t);
  switch (kind_) {
    case Kind::Identity:
      return t;
    case Kind::FirstProjection:
      return PointId::pair(t, 0);
    case Kind::DoubleArrowProjection:
      return PointId::doubled(t.x(), 0);
    case Kind::Cuts:
      if (t.index() == 0) return source_.min();
      return *source_.successor(cuts_[t.index() - 1]);
  }
  throw Error("unreachable");
}

PointId QuotientMap::fiber_max(const PointId& t) const {
  target_.require(t);
  switch (kind_) {
    case Kind::Identity:
      return t;
    case Kind::FirstProjection:
      return PointId::pair(t, 1);
    case Kind::DoubleArrowProjection:
      return PointId::doubled(t.x(), source_.in_q_set(t.x()) ? 1 : 0);
    case Kind::Cuts:
      if (t.index() < cuts_.size()) return cuts_[t.index()];
      return source_.max();
  }
  throw Error("unreachable");
}

bool QuotientMap::is_multi(const PointId& t) const { return fiber_min(t) != fiber_max(t); }

std::optional<PointId> QuotientMap::a_point(const PointId& t) const {
  if (!is_multi(t)) return std::nullopt;
  return right_isolated_between(source_, fiber_min(t), fiber_max(t));
}

std::vector<PointId> QuotientMap::multi_fiber_points() const {
  std::vector<PointId> out;
  for (const auto& t : all_points(target_)) {
    if (is_multi(t)) out.push_back(t);
  }
  return out;
}

std::pair<LineDescriptor, QuotientMap> lex_double(const LineDescriptor& line) {
  auto doubled = LineDescriptor::lex_double(line);
  auto q = QuotientMap::first_projection(doubled);
  return {std::move(doubled), std::move(q)};
}

QuotientMap build_quotient(const LineDescriptor& source, std::vector<PointId> cuts) {
  for (const auto& s : cuts) {
    source.require(s);
    if (!source.is_right_isolated(s)) throw PreconditionError("cut " + s.to_string() + " is not right-isolated");
  }
  const PointId top = source.max();
  std::erase(cuts, top);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto target = LineDescriptor::finite(cuts.size() + 1);
  return QuotientBuilder::make(QuotientMap::Kind::Cuts, source, std::move(target), std::move(cuts));
}

std::optional<PointId> right_isolated_between(const LineDescriptor& line, const PointId& lo, const PointId& hi) {
  line.require(lo);
  line.require(hi);
  if (!(lo < hi)) return std::nullopt;
  if (line.is_right_isolated(lo)) return lo;
  switch (line.kind()) {
    case LineDescriptor::Kind::LexDouble: {
      // lo = (x,1) with x not right-isolated in the inner line.
      const PointId& x = lo.base();
      if (hi.bit() == 1) return PointId::pair(hi.base(), 0);
      if (auto z = point_between(line.inner(), x, hi.base())) return PointId::pair(*z, 0);
      return std::nullopt;
    }
    case LineDescriptor::Kind::DoubleArrow:
      for (const auto& z : line.q_set()) {
        auto candidate = PointId::doubled(z, 0);
        if (lo < candidate && candidate < hi) return candidate;
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace sobczyk
