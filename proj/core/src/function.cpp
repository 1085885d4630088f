#include "sobczyk/function.hpp"

#include <algorithm>

#include "sobczyk/error.hpp"

namespace sobczyk {

namespace {

std::vector<PointId> points_over(const LineDescriptor& line, const Rational& x) {
  switch (line.kind()) {
    case LineDescriptor::Kind::UnitInterval:
      return {PointId::rational(x)};
    case LineDescriptor::Kind::DoubleArrow: {
      std::vector<PointId> out{PointId::doubled(x, 0)};
      if (line.in_q_set(x)) out.push_back(PointId::doubled(x, 1));
      return out;
    }
    case LineDescriptor::Kind::LexDouble: {
      std::vector<PointId> out;
      for (auto& b : points_over(line.inner(), x)) {
        out.push_back(PointId::pair(b, 0));
        out.push_back(PointId::pair(b, 1));
      }
      return out;
    }
    default:
      return {};
  }
}

}  // namespace

bool has_rational_coordinate(const LineDescriptor& line) {
  switch (line.kind()) {
    case LineDescriptor::Kind::UnitInterval:
    case LineDescriptor::Kind::DoubleArrow:
      return true;
    case LineDescriptor::Kind::LexDouble:
      return has_rational_coordinate(line.inner());
    default:
      return false;
  }
}

const Rational& first_coordinate(const PointId& p) {
  if (p.kind() == PointId::Kind::Pair) return first_coordinate(p.base());
  return p.x();
}

TestFunction TestFunction::step_unchecked(const LineDescriptor& line, std::vector<PointId> cuts,
                                          std::vector<Rational> values) {
  for (const auto& c : cuts) line.require(c);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.empty() || cuts.back() != line.max()) cuts.push_back(line.max());
  if (values.size() != cuts.size()) {
    throw PreconditionError("step function needs " + std::to_string(cuts.size()) + " values, got " +
                            std::to_string(values.size()));
  }
  TestFunction f(line);
  f.kind_ = Kind::Step;
  f.cuts_ = std::move(cuts);
  f.values_ = std::move(values);
  for (auto& v : f.values_) v.canonicalize();
  return f;
}

TestFunction TestFunction::step(const LineDescriptor& line, std::vector<PointId> cuts, std::vector<Rational> values) {
  auto f = step_unchecked(line, std::move(cuts), std::move(values));
  f.require_continuous();
  return f;
}

TestFunction TestFunction::constant(const LineDescriptor& line, const Rational& c) {
  return step(line, {line.max()}, {c});
}

TestFunction TestFunction::indicator(const LineDescriptor& line, const ClopenInterval& interval) {
  validate_interval(line, interval);
  std::vector<PointId> cuts;
  std::vector<Rational> values;
  if (interval.lo) {
    cuts.push_back(*interval.lo);
    values.push_back(0);
  }
  cuts.push_back(interval.hi);
  values.push_back(1);
  if (interval.hi != line.max()) {
    cuts.push_back(line.max());
    values.push_back(0);
  }
  return step(line, std::move(cuts), std::move(values));
}

TestFunction TestFunction::initial_segment(const LineDescriptor& line, const PointId& s) {
  return indicator(line, ClopenInterval{std::nullopt, s});
}

TestFunction TestFunction::piecewise_linear(const LineDescriptor& line, std::vector<PlNode> nodes) {
  if (!has_rational_coordinate(line)) {
    throw Unsupported("piecewise-linear functions need a line with a rational coordinate, got " + line.describe());
  }
  if (nodes.size() < 2) throw PreconditionError("piecewise-linear function needs at least two nodes");
  if (nodes.front().x != 0 || nodes.back().x != 1) throw PreconditionError("piecewise-linear nodes must span [0,1]");
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i - 1].x < nodes[i].x)) throw PreconditionError("piecewise-linear nodes must increase");
  }
  for (auto& n : nodes) {
    n.x.canonicalize();
    n.value.canonicalize();
  }
  TestFunction f(line);
  f.kind_ = Kind::PiecewiseLinear;
  f.nodes_ = std::move(nodes);
  return f;
}

Rational TestFunction::eval(const PointId& t) const {
  line_.require(t);
  if (kind_ == Kind::Step) {
    const auto it = std::lower_bound(cuts_.begin(), cuts_.end(), t);
    return values_[static_cast<std::size_t>(it - cuts_.begin())];
  }
  const Rational& x = first_coordinate(t);
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x, [](const PlNode& n, const Rational& v) { return n.x < v; });
  if (it->x == x) return it->value;
  const PlNode& right = *it;
  const PlNode& left = *(it - 1);
  Rational out = left.value + (right.value - left.value) * (x - left.x) / (right.x - left.x);
  return out;
}

Rational TestFunction::sup_norm() const {
  Rational best = 0;
  if (kind_ == Kind::Step) {
    for (const auto& v : values_) best = max(best, abs(v));
  } else {
    for (const auto& n : nodes_) best = max(best, abs(n.value));
  }
  return best;
}

bool TestFunction::is_continuous() const {
  if (kind_ == Kind::PiecewiseLinear) return true;
  for (std::size_t i = 0; i + 1 < cuts_.size(); ++i) {
    if (values_[i] != values_[i + 1] && !line_.is_right_isolated(cuts_[i])) return false;
  }
  return true;
}

void TestFunction::require_continuous() const {
  if (kind_ == Kind::PiecewiseLinear) return;
  for (std::size_t i = 0; i + 1 < cuts_.size(); ++i) {
    if (values_[i] != values_[i + 1] && !line_.is_right_isolated(cuts_[i])) {
      throw PreconditionError("step function jumps at " + cuts_[i].to_string() + ", which is not right-isolated");
    }
  }
}

std::vector<PointId> TestFunction::breakpoints() const {
  if (kind_ == Kind::Step) return cuts_;
  std::vector<PointId> out;
  for (const auto& n : nodes_) {
    for (auto& p : points_over(line_, n.x)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TestFunction TestFunction::with_line(const LineDescriptor& line) const {
  if (kind_ != Kind::PiecewiseLinear) throw Unsupported("with_line applies to piecewise-linear functions");
  return piecewise_linear(line, nodes_);
}

bool operator==(const TestFunction& a, const TestFunction& b) {
  if (a.kind_ != b.kind_ || !(a.line_ == b.line_)) return false;
  if (a.kind_ == TestFunction::Kind::Step) return a.cuts_ == b.cuts_ && a.values_ == b.values_;
  if (a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    if (a.nodes_[i].x != b.nodes_[i].x || a.nodes_[i].value != b.nodes_[i].value) return false;
  }
  return true;
}

}  // namespace sobczyk
