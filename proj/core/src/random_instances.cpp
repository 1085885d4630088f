#include "sobczyk/random_instances.hpp"

#include <algorithm>

#include "sobczyk/error.hpp"

namespace sobczyk {

namespace {

constexpr int kRetries = 32;

Rational normalized(const Rational& x) {
  Rational out = x;
  out.canonicalize();
  return out;
}

std::uint64_t coefficient(InstanceRng& rng, std::uint64_t below_or_at) { return rng.uniform(0, below_or_at); }

OrdinalCnf random_cnf_upto(InstanceRng& rng, const OrdinalCnf& bound) {
  const std::uint64_t free = rng.budget().max_coefficient + 2;
  OrdinalCnf c;
  c.omega2 = coefficient(rng, bound.omega2);
  const bool top2 = c.omega2 == bound.omega2;
  c.omega = coefficient(rng, top2 ? bound.omega : free);
  const bool top1 = top2 && c.omega == bound.omega;
  // Limits are rare under uniform sampling; force some.
  c.units = rng.uniform(0, 3) == 0 ? 0 : coefficient(rng, top1 ? bound.units : free);
  return c;
}

SignedMeasure measure_from(InstanceRng& rng, const LineDescriptor& line, const std::vector<PointId>& candidates,
                           std::size_t atoms) {
  SignedMeasure mu(line);
  for (std::size_t i = 0; i < atoms && !candidates.empty(); ++i) {
    Rational w = rng.rational();
    if (w == 0) w = 1;
    mu.add(rng.pick(candidates), w);
  }
  return mu;
}

std::vector<PointId> sample_points(InstanceRng& rng, const LineDescriptor& line, std::size_t count) {
  std::vector<PointId> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_point(rng, line));
  return out;
}

SignedMeasure unit_normalized(SignedMeasure mu) {
  const Rational n = total_variation(mu);
  if (n > 1) mu *= Rational(1 / n);
  return mu;
}

}  // namespace

std::uint64_t InstanceRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(gen_);
}

Rational InstanceRng::rational(std::uint64_t max_num, std::uint64_t max_den) {
  Rational r(static_cast<long>(uniform(0, max_num)), static_cast<unsigned long>(uniform(1, max_den)));
  r.canonicalize();
  return coin() ? Rational(-r) : r;
}

Rational InstanceRng::unit_rational(std::uint64_t max_den) {
  const auto den = uniform(1, max_den);
  return normalized(Rational(static_cast<long>(uniform(1, den)), static_cast<unsigned long>(den)));
}

LineDescriptor random_line(InstanceRng& rng, LineFamily family) {
  const auto& b = rng.budget();
  switch (family) {
    case LineFamily::Finite:
      return LineDescriptor::finite(rng.uniform(1, b.max_finite));
    case LineFamily::Ordinal: {
      OrdinalCnf bound;
      switch (rng.uniform(0, 2)) {
        case 0:
          bound = OrdinalCnf{0, 1, rng.uniform(0, b.max_coefficient)};
          break;
        case 1:
          bound = OrdinalCnf{0, rng.uniform(1, b.max_coefficient), rng.uniform(0, b.max_coefficient)};
          break;
        default:
          bound = OrdinalCnf{rng.uniform(1, 2), rng.uniform(0, b.max_coefficient), rng.uniform(0, b.max_coefficient)};
          break;
      }
      return LineDescriptor::ordinal(bound);
    }
    case LineFamily::LexDouble: {
      static const LineFamily inner[] = {LineFamily::Finite, LineFamily::Ordinal, LineFamily::UnitInterval};
      return LineDescriptor::lex_double(random_line(rng, inner[rng.uniform(0, 2)]));
    }
    case LineFamily::UnitInterval:
      return LineDescriptor::unit_interval();
    case LineFamily::DoubleArrow: {
      std::vector<Rational> q;
      const auto n = rng.uniform(1, 4);
      for (std::uint64_t i = 0; i < n; ++i) q.push_back(rng.unit_rational());
      return LineDescriptor::double_arrow(std::move(q));
    }
  }
  throw Error("unreachable");
}

LineDescriptor random_line(InstanceRng& rng) { return random_line(rng, kAllLineFamilies[rng.uniform(0, 4)]); }

LineDescriptor random_countable_line(InstanceRng& rng) {
  return random_line(rng, rng.coin() ? LineFamily::Finite : LineFamily::Ordinal);
}

PointId random_point(InstanceRng& rng, const LineDescriptor& line) {
  switch (line.kind()) {
    case LineDescriptor::Kind::Finite:
      return PointId::finite(rng.uniform(0, line.size() - 1));
    case LineDescriptor::Kind::Ordinal:
      return PointId::ordinal(random_cnf_upto(rng, line.bound()));
    case LineDescriptor::Kind::LexDouble:
      return PointId::pair(random_point(rng, line.inner()), static_cast<int>(rng.uniform(0, 1)));
    case LineDescriptor::Kind::UnitInterval:
      if (rng.uniform(0, 7) == 0) return PointId::rational(0);
      return PointId::rational(rng.unit_rational());
    case LineDescriptor::Kind::DoubleArrow: {
      if (!line.q_set().empty() && rng.coin()) {
        return PointId::doubled(rng.pick(line.q_set()), static_cast<int>(rng.uniform(0, 1)));
      }
      const Rational x = rng.uniform(0, 7) == 0 ? Rational(0) : rng.unit_rational();
      return PointId::doubled(x, line.in_q_set(x) ? static_cast<int>(rng.uniform(0, 1)) : 0);
    }
  }
  throw Error("unreachable");
}

PointId random_right_isolated(InstanceRng& rng, const LineDescriptor& line) {
  if (line.kind() == LineDescriptor::Kind::DoubleArrow && !line.q_set().empty() && rng.uniform(0, 3) != 0) {
    return PointId::doubled(rng.pick(line.q_set()), 0);
  }
  for (int i = 0; i < kRetries; ++i) {
    PointId p = random_point(rng, line);
    if (line.is_right_isolated(p)) return p;
  }
  return line.max();
}

SignedMeasure random_measure(InstanceRng& rng, const LineDescriptor& line) {
  const auto atoms = rng.uniform(1, rng.budget().max_atoms);
  SignedMeasure mu = measure_from(rng, line, sample_points(rng, line, 2 * atoms), atoms);
  // Repeated points can cancel.
  if (mu.is_zero()) mu.add(random_point(rng, line), 1);
  return mu;
}

SignedMeasure random_balanced_measure(InstanceRng& rng, const LineDescriptor& line) {
  for (int i = 0; i < kRetries; ++i) {
    SignedMeasure mu = random_measure(rng, line);
    mu.add(random_point(rng, line), Rational(-mu.total_mass()));
    if (mu.atoms().size() >= 2) return mu;
  }
  // Lines with a single point admit only the zero measure.
  if (line.min() == line.max()) return SignedMeasure(line);
  SignedMeasure mu = SignedMeasure::dirac(line, line.min());
  mu.add(line.max(), -1);
  return mu;
}

SignedMeasure random_measure_in(InstanceRng& rng, const LineDescriptor& line, const ClopenInterval& interval) {
  std::vector<PointId> inside;
  for (int i = 0; i < 4 * kRetries && inside.size() < 2 * rng.budget().max_atoms; ++i) {
    PointId p = random_point(rng, line);
    if (interval_contains(line, interval, p)) inside.push_back(std::move(p));
  }
  inside.push_back(interval.hi);
  inside.push_back(interval_min(line, interval));
  return measure_from(rng, line, inside, rng.uniform(1, rng.budget().max_atoms));
}

ClopenPartition random_partition(InstanceRng& rng, const LineDescriptor& line) {
  std::vector<PointId> cuts{line.max()};
  const auto n = rng.uniform(0, 4);
  for (std::uint64_t i = 0; i < n; ++i) cuts.push_back(random_right_isolated(rng, line));
  return ClopenPartition::make(line, std::move(cuts));
}

ClopenInterval random_interval(InstanceRng& rng, const LineDescriptor& line) {
  PointId a = random_right_isolated(rng, line);
  PointId b = random_right_isolated(rng, line);
  if (b < a) std::swap(a, b);
  if (a == b || rng.uniform(0, 3) == 0) return ClopenInterval{std::nullopt, b};
  return ClopenInterval{a, b};
}

ClosedSet random_closed_subset(InstanceRng& rng, const LineDescriptor& line, const ClopenInterval& interval) {
  const PointId lo = interval_min(line, interval);
  if (line.kind() == LineDescriptor::Kind::Ordinal && rng.uniform(0, 3) == 0) {
    const int rank = static_cast<int>(rng.uniform(0, 2));
    return ClosedSet::from_components(line, {ClosedComponent{lo, interval.hi, rank}});
  }
  std::vector<PointId> points;
  const auto n = rng.uniform(0, 4);
  for (int i = 0; i < 4 * kRetries && points.size() < n; ++i) {
    PointId p = random_point(rng, line);
    if (interval_contains(line, interval, p)) points.push_back(std::move(p));
  }
  return ClosedSet::from_points(line, std::move(points));
}

TestFunction random_step(InstanceRng& rng, const LineDescriptor& line) {
  const ClopenPartition p = random_partition(rng, line);
  std::vector<Rational> values;
  for (std::size_t i = 0; i < p.cuts().size(); ++i) values.push_back(rng.rational(3, 2));
  return TestFunction::step(line, p.cuts(), std::move(values));
}

TestFunction random_continuous(InstanceRng& rng, const LineDescriptor& line) {
  if (!has_rational_coordinate(line) || rng.uniform(0, 2) == 0) return random_step(rng, line);
  std::vector<Rational> xs{0, 1};
  const auto interior = rng.uniform(0, 3);
  for (std::uint64_t i = 0; i < interior; ++i) {
    Rational x = rng.unit_rational();
    if (x < 1) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PlNode> nodes;
  for (auto& x : xs) nodes.push_back(PlNode{x, rng.rational(3, 2)});
  return TestFunction::piecewise_linear(line, std::move(nodes));
}

CoefficientPattern random_pattern(InstanceRng& rng) {
  std::vector<Rational> prefix;
  const auto n = rng.uniform(0, 2);
  for (std::uint64_t i = 0; i < n; ++i) prefix.push_back(rng.rational(2, 2));
  const Rational c = rng.rational(2, 2);
  if (rng.coin()) return CoefficientPattern::constant(std::move(prefix), c);
  static const std::vector<Rational> ratios{Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(2, 3)};
  return CoefficientPattern::geometric(std::move(prefix), c, rng.pick(ratios));
}

OperatorR random_finite_basis(InstanceRng& rng, const LineDescriptor& line) {
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<TestFunction> gens;
    const auto n = rng.uniform(1, rng.budget().max_generators);
    for (std::uint64_t i = 0; i < n; ++i) gens.push_back(random_continuous(rng, line));
    try {
      return OperatorR::finite_basis(line, std::move(gens));
    } catch (const PreconditionError&) {
      // Dependent or vanishing generators; draw again.
    }
  }
  return OperatorR::finite_basis(line, {TestFunction::constant(line, 1)});
}

OperatorR random_coordinate(InstanceRng& rng, const LineDescriptor& line) {
  CoordinatePatterns p;
  p.units = random_pattern(rng);
  if (line.kind() == LineDescriptor::Kind::Ordinal) {
    if (rng.coin()) p.omega = random_pattern(rng);
    if (rng.uniform(0, 2) == 0) p.omega2 = random_pattern(rng);
  }
  return OperatorR::coordinate(line, std::move(p));
}

MeasureSequence random_desk_sequence(InstanceRng& rng, const LineDescriptor& line, std::size_t horizon) {
  switch (rng.uniform(0, 2)) {
    case 0: {
      std::vector<SignedMeasure> list;
      const auto n = rng.uniform(1, std::max<std::size_t>(1, std::min<std::size_t>(4, horizon)));
      for (std::uint64_t i = 0; i < n; ++i) list.push_back(unit_normalized(random_measure(rng, line)));
      return MeasureSequence::explicit_list(line, std::move(list), horizon);
    }
    case 1: {
      static const std::vector<Rational> ratios{Rational(1, 2), Rational(-1, 2), Rational(1, 3)};
      SignedMeasure base = random_measure(rng, line);
      base *= Rational(1 / total_variation(base));
      return MeasureSequence::scaled(std::move(base), rng.pick(ratios), horizon);
    }
    default: {
      SignedMeasure base = random_measure(rng, line);
      base *= Rational(1 / total_variation(base));
      return MeasureSequence::harmonic(std::move(base), horizon);
    }
  }
}

PipelineInstance random_pipeline_instance(InstanceRng& rng) {
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    static const LineFamily families[] = {LineFamily::Finite, LineFamily::Ordinal, LineFamily::LexDouble,
                                          LineFamily::DoubleArrow};
    LineDescriptor k = random_line(rng, families[rng.uniform(0, 3)]);
    std::vector<TestFunction> gens;
    const auto n = rng.uniform(1, rng.budget().max_generators);
    for (std::uint64_t i = 0; i < n; ++i) gens.push_back(random_step(rng, k));
    // Independence is checked where it matters, on the quotient; here a
    // cheap filter on distinct generators is enough to avoid most retries.
    bool distinct = true;
    for (std::size_t i = 0; i < gens.size() && distinct; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (gens[i] == gens[j]) distinct = false;
      }
    }
    if (!distinct) continue;
    try {
      (void)OperatorR::finite_basis(k, gens);
    } catch (const PreconditionError&) {
      continue;
    }
    std::vector<DualVector> t0;
    const auto m = rng.uniform(1, rng.budget().max_functionals);
    for (std::uint64_t i = 0; i < m; ++i) {
      lp::Vector coords;
      for (std::size_t j = 0; j < gens.size(); ++j) coords.push_back(rng.rational(3, 3));
      t0.push_back(DualVector::finite(std::move(coords)));
    }
    return PipelineInstance{std::move(k), SubspaceData{std::move(gens), {}}, std::move(t0)};
  }
  const LineDescriptor k = LineDescriptor::finite(2);
  return PipelineInstance{k, SubspaceData{{TestFunction::constant(k, 1)}, {}}, {DualVector::finite({Rational(1)})}};
}

}  // namespace sobczyk
