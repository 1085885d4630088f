#include "sobczyk/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sobczyk/error.hpp"

namespace sobczyk {

// ---------------------------------------------------------------------------
// OrdinalCnf

int OrdinalCnf::rank() const {
  if (units > 0) return 0;
  if (omega > 0) return 1;
  if (omega2 > 0) return 2;
  return 0;
}

std::string OrdinalCnf::to_string() const {
  std::ostringstream os;
  bool any = false;
  auto term = [&](std::uint64_t coeff, const char* unit) {
    if (coeff == 0) return;
    if (any) os << '+';
    if (*unit == '\0') {
      os << coeff;
    } else {
      os << unit;
      if (coeff != 1) os << '*' << coeff;
    }
    any = true;
  };
  term(omega2, "w^2");
  term(omega, "w");
  term(units, "");
  if (!any) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------
// PointId

PointId PointId::finite(std::uint64_t index) { return PointId(Storage{std::in_place_index<0>, index}); }

PointId PointId::ordinal(OrdinalCnf cnf) { return PointId(Storage{std::in_place_index<1>, cnf}); }

PointId PointId::ordinal(std::uint64_t omega2, std::uint64_t omega, std::uint64_t units) {
  return ordinal(OrdinalCnf{omega2, omega, units});
}

PointId PointId::pair(PointId base, int bit) {
  if (bit != 0 && bit != 1) throw InvalidPoint("pair bit must be 0 or 1");
  return PointId(Storage{std::in_place_index<2>, PairData{std::make_shared<const PointId>(std::move(base)), bit}});
}

PointId PointId::rational(Rational x) {
  x.canonicalize();
  return PointId(Storage{std::in_place_index<3>, std::move(x)});
}

PointId PointId::doubled(Rational x, int bit) {
  if (bit != 0 && bit != 1) throw InvalidPoint("doubled bit must be 0 or 1");
  x.canonicalize();
  return PointId(Storage{std::in_place_index<4>, DoubledData{std::move(x), bit}});
}

PointId::Kind PointId::kind() const { return static_cast<Kind>(v_.index()); }

std::uint64_t PointId::index() const {
  if (const auto* p = std::get_if<0>(&v_)) return *p;
  throw InvalidPoint("not a finite point: " + to_string());
}

const OrdinalCnf& PointId::cnf() const {
  if (const auto* p = std::get_if<1>(&v_)) return *p;
  throw InvalidPoint("not an ordinal point: " + to_string());
}

const PointId& PointId::base() const {
  if (const auto* p = std::get_if<2>(&v_)) return *p->base;
  throw InvalidPoint("not a pair point: " + to_string());
}

int PointId::bit() const {
  if (const auto* p = std::get_if<2>(&v_)) return p->bit;
  if (const auto* p = std::get_if<4>(&v_)) return p->bit;
  throw InvalidPoint("point carries no bit: " + to_string());
}

const Rational& PointId::x() const {
  if (const auto* p = std::get_if<3>(&v_)) return *p;
  if (const auto* p = std::get_if<4>(&v_)) return p->x;
  throw InvalidPoint("point carries no rational coordinate: " + to_string());
}

std::string PointId::to_string() const {
  switch (kind()) {
    case Kind::Finite:
      return std::to_string(index());
    case Kind::Ordinal:
      return cnf().to_string();
    case Kind::Pair:
      return "(" + base().to_string() + "," + std::to_string(bit()) + ")";
    case Kind::Rational:
      return sobczyk::to_string(x());
    case Kind::Doubled:
      return "(" + sobczyk::to_string(x()) + "," + std::to_string(bit()) + ")";
  }
  return "?";
}

namespace {

std::strong_ordering compare_rational(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

std::strong_ordering operator<=>(const PointId& a, const PointId& b) {
  if (a.v_.index() != b.v_.index()) return a.v_.index() <=> b.v_.index();
  switch (a.kind()) {
    case PointId::Kind::Finite:
      return a.index() <=> b.index();
    case PointId::Kind::Ordinal:
      return a.cnf() <=> b.cnf();
    case PointId::Kind::Pair: {
      const auto c = a.base() <=> b.base();
      if (c != 0) return c;
      return a.bit() <=> b.bit();
    }
    case PointId::Kind::Rational:
      return compare_rational(a.x(), b.x());
    case PointId::Kind::Doubled: {
      const auto c = compare_rational(a.x(), b.x());
      if (c != 0) return c;
      return a.bit() <=> b.bit();
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// LineDescriptor

LineDescriptor LineDescriptor::finite(std::uint64_t size, std::vector<std::string> labels) {
  if (size == 0) throw PreconditionError("finite line needs at least one point");
  if (!labels.empty() && labels.size() != size) throw PreconditionError("label count must match line size");
  LineDescriptor line;
  line.kind_ = Kind::Finite;
  line.size_ = size;
  line.labels_ = std::move(labels);
  return line;
}

LineDescriptor LineDescriptor::ordinal(OrdinalCnf bound, std::uint64_t cap) {
  if (bound.omega2 > cap || bound.omega > cap || bound.units > cap) {
    throw PreconditionError("ordinal bound " + bound.to_string() + " exceeds coefficient cap " + std::to_string(cap));
  }
  LineDescriptor line;
  line.kind_ = Kind::Ordinal;
  line.bound_ = bound;
  return line;
}

LineDescriptor LineDescriptor::lex_double(LineDescriptor inner) {
  LineDescriptor line;
  line.kind_ = Kind::LexDouble;
  line.inner_ = std::make_shared<const LineDescriptor>(std::move(inner));
  return line;
}

LineDescriptor LineDescriptor::unit_interval() {
  LineDescriptor line;
  line.kind_ = Kind::UnitInterval;
  return line;
}

LineDescriptor LineDescriptor::double_arrow(std::vector<Rational> q) {
  for (auto& x : q) {
    x.canonicalize();
    if (x <= 0 || x > 1) throw PreconditionError("double-arrow Q must lie in ]0,1]");
  }
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  LineDescriptor line;
  line.kind_ = Kind::DoubleArrow;
  line.q_ = std::move(q);
  return line;
}

bool LineDescriptor::in_q_set(const Rational& x) const { return std::binary_search(q_.begin(), q_.end(), x); }

bool LineDescriptor::contains(const PointId& p) const {
  switch (kind_) {
    case Kind::Finite:
      return p.kind() == PointId::Kind::Finite && p.index() < size_;
    case Kind::Ordinal:
      return p.kind() == PointId::Kind::Ordinal && p.cnf() <= bound_;
    case Kind::LexDouble:
      return p.kind() == PointId::Kind::Pair && inner_->contains(p.base());
    case Kind::UnitInterval:
      return p.kind() == PointId::Kind::Rational && p.x() >= 0 && p.x() <= 1;
    case Kind::DoubleArrow:
      return p.kind() == PointId::Kind::Doubled && p.x() >= 0 && p.x() <= 1 && (p.bit() == 0 || in_q_set(p.x()));
  }
  return false;
}

void LineDescriptor::require(const PointId& p) const {
  if (!contains(p)) throw InvalidPoint("point " + p.to_string() + " is not valid for line " + describe());
}

PointId LineDescriptor::min() const {
  switch (kind_) {
    case Kind::Finite:
      return PointId::finite(0);
    case Kind::Ordinal:
      return PointId::ordinal(OrdinalCnf{});
    case Kind::LexDouble:
      return PointId::pair(inner_->min(), 0);
    case Kind::UnitInterval:
      return PointId::rational(0);
    case Kind::DoubleArrow:
      return PointId::doubled(0, 0);
  }
  throw Error("unreachable");
}

PointId LineDescriptor::max() const {
  switch (kind_) {
    case Kind::Finite:
      return PointId::finite(size_ - 1);
    case Kind::Ordinal:
      return PointId::ordinal(bound_);
    case Kind::LexDouble:
      return PointId::pair(inner_->max(), 1);
    case Kind::UnitInterval:
      return PointId::rational(1);
    case Kind::DoubleArrow:
      return PointId::doubled(1, in_q_set(Rational(1)) ? 1 : 0);
  }
  throw Error("unreachable");
}

std::strong_ordering LineDescriptor::compare(const PointId& a, const PointId& b) const {
  require(a);
  require(b);
  return a <=> b;
}

std::optional<PointId> LineDescriptor::successor(const PointId& p) const {
  require(p);
  switch (kind_) {
    case Kind::Finite:
      if (p.index() + 1 < size_) return PointId::finite(p.index() + 1);
      return std::nullopt;
    case Kind::Ordinal: {
      OrdinalCnf next = p.cnf();
      ++next.units;
      if (next <= bound_) return PointId::ordinal(next);
      return std::nullopt;
    }
    case Kind::LexDouble:
      if (p.bit() == 0) return PointId::pair(p.base(), 1);
      if (auto s = inner_->successor(p.base())) return PointId::pair(*s, 0);
      return std::nullopt;
    case Kind::UnitInterval:
      return std::nullopt;
    case Kind::DoubleArrow:
      if (p.bit() == 0 && in_q_set(p.x())) return PointId::doubled(p.x(), 1);
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<PointId> LineDescriptor::predecessor(const PointId& p) const {
  require(p);
  switch (kind_) {
    case Kind::Finite:
      if (p.index() > 0) return PointId::finite(p.index() - 1);
      return std::nullopt;
    case Kind::Ordinal: {
      if (p.cnf().units == 0) return std::nullopt;
      OrdinalCnf prev = p.cnf();
      --prev.units;
      return PointId::ordinal(prev);
    }
    case Kind::LexDouble:
      if (p.bit() == 1) return PointId::pair(p.base(), 0);
      if (auto s = inner_->predecessor(p.base())) return PointId::pair(*s, 1);
      return std::nullopt;
    case Kind::UnitInterval:
      return std::nullopt;
    case Kind::DoubleArrow:
      if (p.bit() == 1) return PointId::doubled(p.x(), 0);
      return std::nullopt;
  }
  return std::nullopt;
}

bool LineDescriptor::is_right_isolated(const PointId& p) const {
  return p == max() || successor(p).has_value();
}

bool LineDescriptor::is_left_isolated(const PointId& p) const {
  return p == min() || predecessor(p).has_value();
}

bool LineDescriptor::is_zero_dimensional() const {
  return kind_ == Kind::Finite || kind_ == Kind::Ordinal || kind_ == Kind::LexDouble;
}

bool LineDescriptor::is_countable() const {
  switch (kind_) {
    case Kind::Finite:
    case Kind::Ordinal:
      return true;
    case Kind::LexDouble:
      return inner_->is_countable();
    default:
      return false;
  }
}

bool LineDescriptor::is_finite() const {
  switch (kind_) {
    case Kind::Finite:
      return true;
    case Kind::Ordinal:
      return bound_.omega2 == 0 && bound_.omega == 0;
    case Kind::LexDouble:
      return inner_->is_finite();
    default:
      return false;
  }
}

std::uint64_t LineDescriptor::point_count() const {
  switch (kind_) {
    case Kind::Finite:
      return size_;
    case Kind::Ordinal:
      if (is_finite()) return bound_.units + 1;
      break;
    case Kind::LexDouble:
      if (is_finite()) return 2 * inner_->point_count();
      break;
    default:
      break;
  }
  throw PreconditionError("line " + describe() + " is infinite");
}

std::string LineDescriptor::describe() const {
  switch (kind_) {
    case Kind::Finite:
      return "Finite(" + std::to_string(size_) + ")";
    case Kind::Ordinal:
      return "Ordinal[0," + bound_.to_string() + "]";
    case Kind::LexDouble:
      return "LexDouble(" + inner_->describe() + ")";
    case Kind::UnitInterval:
      return "UnitInterval";
    case Kind::DoubleArrow: {
      std::string out = "DoubleArrow{";
      for (std::size_t i = 0; i < q_.size(); ++i) {
        if (i) out += ',';
        out += sobczyk::to_string(q_[i]);
      }
      return out + "}";
    }
  }
  return "?";
}

bool operator==(const LineDescriptor& a, const LineDescriptor& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case LineDescriptor::Kind::Finite:
      return a.size_ == b.size_;
    case LineDescriptor::Kind::Ordinal:
      return a.bound_ == b.bound_;
    case LineDescriptor::Kind::LexDouble:
      return *a.inner_ == *b.inner_;
    case LineDescriptor::Kind::UnitInterval:
      return true;
    case LineDescriptor::Kind::DoubleArrow:
      return a.q_ == b.q_;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Canonical enumerations

namespace {

// Ordinals ≤ bound in shells of increasing max coefficient; lexicographic
// within a shell.
std::vector<PointId> ordinal_points(const OrdinalCnf& bound, std::size_t count, bool skip_max) {
  std::vector<PointId> out;
  const bool finite = bound.omega2 == 0 && bound.omega == 0;
  for (std::uint64_t m = 0; out.size() < count; ++m) {
    if (finite && m > bound.units) break;
    for (std::uint64_t a = 0; a <= std::min(m, bound.omega2) && out.size() < count; ++a) {
      for (std::uint64_t b = 0; b <= m && out.size() < count; ++b) {
        for (std::uint64_t c = 0; c <= m && out.size() < count; ++c) {
          if (std::max({a, b, c}) != m) continue;
          const OrdinalCnf p{a, b, c};
          if (p > bound) continue;
          if (skip_max && p == bound) continue;
          out.push_back(PointId::ordinal(p));
        }
      }
    }
  }
  return out;
}

// 0, 1, 1/2, 1/3, 2/3, 1/4, 3/4, ...
std::vector<Rational> farey_order(std::size_t count) {
  std::vector<Rational> out;
  if (count == 0) return out;
  out.emplace_back(0);
  if (count > 1) out.emplace_back(1);
  for (unsigned long q = 2; out.size() < count; ++q) {
    for (unsigned long p = 1; p < q && out.size() < count; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  for (auto& r : out) r.canonicalize();
  return out;
}

}  // namespace

std::vector<PointId> canonical_points(const LineDescriptor& line, std::size_t count) {
  std::vector<PointId> out;
  switch (line.kind()) {
    case LineDescriptor::Kind::Finite:
      for (std::uint64_t i = 0; i < line.size() && out.size() < count; ++i) out.push_back(PointId::finite(i));
      break;
    case LineDescriptor::Kind::Ordinal:
      out = ordinal_points(line.bound(), count, false);
      break;
    case LineDescriptor::Kind::LexDouble:
      for (const auto& p : canonical_points(line.inner(), count)) {
        if (out.size() < count) out.push_back(PointId::pair(p, 0));
        if (out.size() < count) out.push_back(PointId::pair(p, 1));
      }
      break;
    case LineDescriptor::Kind::UnitInterval:
      for (auto& x : farey_order(count)) out.push_back(PointId::rational(std::move(x)));
      break;
    case LineDescriptor::Kind::DoubleArrow:
      for (auto& x : farey_order(count)) {
        const bool doubled = line.in_q_set(x);
        if (out.size() < count) out.push_back(PointId::doubled(x, 0));
        if (doubled && out.size() < count) out.push_back(PointId::doubled(x, 1));
      }
      break;
  }
  return out;
}

std::vector<PointId> canonical_right_isolated(const LineDescriptor& line, std::size_t count) {
  std::vector<PointId> out;
  switch (line.kind()) {
    case LineDescriptor::Kind::Finite:
      for (std::uint64_t i = 0; i + 1 < line.size() && out.size() < count; ++i) out.push_back(PointId::finite(i));
      break;
    case LineDescriptor::Kind::Ordinal:
      out = ordinal_points(line.bound(), count, true);
      break;
    case LineDescriptor::Kind::LexDouble: {
      const LineDescriptor& inner = line.inner();
      const PointId inner_max = inner.max();
      for (const auto& p : canonical_points(inner, count)) {
        if (out.size() < count) out.push_back(PointId::pair(p, 0));
        if (out.size() < count && p != inner_max && inner.is_right_isolated(p)) out.push_back(PointId::pair(p, 1));
      }
      break;
    }
    case LineDescriptor::Kind::UnitInterval:
      break;
    case LineDescriptor::Kind::DoubleArrow:
      for (const auto& x : line.q_set()) {
        if (out.size() < count) out.push_back(PointId::doubled(x, 0));
      }
      break;
  }
  return out;
}

std::vector<PointId> all_points(const LineDescriptor& line) {
  if (!line.is_finite()) throw PreconditionError("all_points needs a finite line, got " + line.describe());
  std::vector<PointId> out;
  for (auto p = std::optional<PointId>(line.min()); p; p = line.successor(*p)) out.push_back(*p);
  return out;
}

std::optional<PointId> point_between(const LineDescriptor& line, const PointId& lo, const PointId& hi) {
  if (!(line.compare(lo, hi) < 0)) return std::nullopt;
  if (auto s = line.successor(lo); s && *s < hi) return s;
  switch (line.kind()) {
    case LineDescriptor::Kind::UnitInterval:
      return PointId::rational((lo.x() + hi.x()) / 2);
    case LineDescriptor::Kind::DoubleArrow:
      if (lo.x() < hi.x()) return PointId::doubled((lo.x() + hi.x()) / 2, 0);
      return std::nullopt;
    case LineDescriptor::Kind::LexDouble:
      if (lo.base() < hi.base()) {
        if (hi.bit() == 1) return PointId::pair(hi.base(), 0);
        if (auto z = point_between(line.inner(), lo.base(), hi.base())) return PointId::pair(*z, 0);
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Clopen intervals and partitions

std::string ClopenInterval::to_string() const {
  if (lo) return "]" + lo->to_string() + "," + hi.to_string() + "]";
  return "[0," + hi.to_string() + "]";
}

void validate_interval(const LineDescriptor& line, const ClopenInterval& interval) {
  line.require(interval.hi);
  if (!line.is_right_isolated(interval.hi)) {
    throw PreconditionError("interval end " + interval.hi.to_string() + " is not right-isolated");
  }
  if (interval.lo) {
    line.require(*interval.lo);
    if (!line.is_right_isolated(*interval.lo) || *interval.lo == line.max()) {
      throw PreconditionError("interval start " + interval.lo->to_string() + " is not a right-isolated non-max point");
    }
    if (!(*interval.lo < interval.hi)) throw PreconditionError("empty clopen interval " + interval.to_string());
  }
}

bool interval_contains(const LineDescriptor& line, const ClopenInterval& interval, const PointId& t) {
  line.require(t);
  if (interval.lo && !(*interval.lo < t)) return false;
  return t <= interval.hi;
}

PointId interval_min(const LineDescriptor& line, const ClopenInterval& interval) {
  if (!interval.lo) return line.min();
  auto s = line.successor(*interval.lo);
  if (!s) throw PreconditionError("interval start " + interval.lo->to_string() + " has no successor");
  return *s;
}

ClopenInterval whole_line(const LineDescriptor& line) { return ClopenInterval{std::nullopt, line.max()}; }

ClopenPartition ClopenPartition::make(const LineDescriptor& line, std::vector<PointId> cuts) {
  for (const auto& c : cuts) {
    line.require(c);
    if (!line.is_right_isolated(c)) throw PreconditionError("cut " + c.to_string() + " is not right-isolated");
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.empty() || cuts.back() != line.max()) throw PreconditionError("partition cuts must contain max");
  ClopenPartition p;
  p.cuts_ = std::move(cuts);
  return p;
}

ClopenPartition ClopenPartition::coarsest(const LineDescriptor& line) { return make(line, {line.max()}); }

bool ClopenPartition::has_cut(const PointId& b) const { return std::binary_search(cuts_.begin(), cuts_.end(), b); }

std::vector<ClopenInterval> ClopenPartition::cells() const {
  std::vector<ClopenInterval> out;
  out.reserve(cuts_.size());
  std::optional<PointId> lo;
  for (const auto& c : cuts_) {
    out.push_back(ClopenInterval{lo, c});
    lo = c;
  }
  return out;
}

ClopenInterval ClopenPartition::cell_of(const LineDescriptor& line, const PointId& t) const {
  line.require(t);
  const auto it = std::lower_bound(cuts_.begin(), cuts_.end(), t);
  if (it == cuts_.end()) throw InvalidPoint("point beyond partition max");
  std::optional<PointId> lo;
  if (it != cuts_.begin()) lo = *std::prev(it);
  return ClopenInterval{lo, *it};
}

bool ClopenPartition::refines(const ClopenPartition& coarser) const {
  return std::includes(cuts_.begin(), cuts_.end(), coarser.cuts_.begin(), coarser.cuts_.end());
}

ClopenPartition refine_partitions(const LineDescriptor& line, std::size_t k) {
  auto cuts = canonical_right_isolated(line, k);
  cuts.push_back(line.max());
  return ClopenPartition::make(line, std::move(cuts));
}

}  // namespace sobczyk
