#include <gtest/gtest.h>

#include "oracles/ordinal_models.hpp"
#include "sobczyk/error.hpp"
#include "sobczyk/random_instances.hpp"

using namespace sobczyk;

namespace {

PointId fin(std::uint64_t i) { return PointId::finite(i); }
PointId ord(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return PointId::ordinal(a, b, c); }

OperatorR omega_instance() {
  CoordinatePatterns p;
  p.units = CoefficientPattern::constant({}, 1);
  return OperatorR::coordinate(LineDescriptor::ordinal(OrdinalCnf{0, 1, 0}), p);
}

OperatorR omega_squared_instance() {
  CoordinatePatterns p;
  p.units = CoefficientPattern::constant({}, 1);
  p.omega = CoefficientPattern::constant({}, 1);
  return OperatorR::coordinate(LineDescriptor::ordinal(OrdinalCnf{1, 0, 0}), p);
}

}  // namespace

TEST(Hierarchy, OmegaInstanceDeltaOne) {
  const auto r = omega_instance();
  const auto h = compute_hierarchy(r, 1);
  ASSERT_EQ(h.levels.size(), 3u);
  EXPECT_EQ(h.levels[0], ClosedSet::whole(r.line()));
  EXPECT_EQ(h.levels[1], ClosedSet::from_points(r.line(), {ord(0, 1, 0)}));
  EXPECT_TRUE(h.levels[2].is_empty());
  EXPECT_EQ(h.stage(), 2u);
}

TEST(Hierarchy, OmegaInstanceDeltaThree) {
  const auto h = compute_hierarchy(omega_instance(), 3);
  ASSERT_EQ(h.levels.size(), 2u);
  EXPECT_TRUE(h.levels[1].is_empty());
}

TEST(Hierarchy, OmegaSquaredInstance) {
  const auto r = omega_squared_instance();
  const auto h = compute_hierarchy(r, 1);
  ASSERT_EQ(h.levels.size(), 4u);
  EXPECT_TRUE(h.levels[1].contains(ord(0, 3, 0)));
  EXPECT_FALSE(h.levels[1].contains(ord(0, 3, 1)));
  EXPECT_EQ(h.levels[2], ClosedSet::from_points(r.line(), {ord(1, 0, 0)}));
  EXPECT_TRUE(h.levels[3].is_empty());
}

TEST(Hierarchy, FiniteBasisOnFiniteLinesStopsAtOne) {
  InstanceRng rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto line = random_line(rng, LineFamily::Finite);
    const auto h = compute_hierarchy(random_finite_basis(rng, line), Rational(1, 7));
    ASSERT_EQ(h.levels.size(), 2u);
    EXPECT_TRUE(h.levels[1].is_empty());
  }
}

TEST(Hierarchy, RejectsNonPositiveDelta) {
  EXPECT_THROW(compute_hierarchy(omega_instance(), 0), PreconditionError);
}

TEST(Hierarchy, StageCapThrows) {
  try {
    compute_hierarchy(omega_squared_instance(), 1, 2);
    FAIL() << "expected NotStabilized";
  } catch (const NotStabilized& e) {
    EXPECT_EQ(e.max_stage, 2u);
  }
}

TEST(HierarchyOracle, OmegaTruncation) {
  for (const Rational& delta : {Rational(1), Rational(2), Rational(3), Rational(1, 2)}) {
    const auto h = compute_hierarchy(omega_instance(), delta);
    EXPECT_EQ(oracle::hierarchy_disagreements(h, oracle::omega_model(100), delta), 0u) << "delta " << delta;
  }
}

TEST(HierarchyOracle, OmegaSquaredTruncation) {
  for (const Rational& delta : {Rational(1), Rational(2), Rational(5, 2), Rational(4)}) {
    const auto h = compute_hierarchy(omega_squared_instance(), delta);
    EXPECT_EQ(oracle::hierarchy_disagreements(h, oracle::omega_squared_model(10), delta), 0u) << "delta " << delta;
  }
}

TEST(Alpha, OmegaInstance) {
  const auto h = compute_hierarchy(omega_instance(), 1);
  EXPECT_EQ(alpha_of_interval(h, ClopenInterval{std::nullopt, ord(0, 1, 0)}), 1u);
  EXPECT_EQ(alpha_of_interval(h, ClopenInterval{ord(0, 0, 5), ord(0, 1, 0)}), 1u);
  EXPECT_EQ(alpha_of_interval(h, ClopenInterval{ord(0, 0, 4), ord(0, 0, 5)}), 0u);
}

TEST(LevelOf, OmegaInstance) {
  const auto h = compute_hierarchy(omega_instance(), 1);
  EXPECT_EQ(level_of(h, ord(0, 1, 0)), 1u);
  EXPECT_EQ(level_of(h, ord(0, 0, 3)), 0u);
  const auto line = LineDescriptor::finite(4);
  const auto hf = compute_hierarchy(OperatorR::finite_basis(line, {TestFunction::constant(line, 1)}), 1);
  EXPECT_EQ(level_of(hf, fin(2)), 0u);
}

TEST(FlowerBound, Examples) {
  const auto five = LineDescriptor::finite(5);
  const auto r = OperatorR::finite_basis(
      five, {TestFunction::indicator(five, ClopenInterval{fin(0), fin(2)})});
  SignedMeasure mu = SignedMeasure::dirac(five, fin(1));
  mu.add(fin(3), -1);
  auto fb = flower_bound(r, mu);
  EXPECT_EQ(fb.lhs, 1);
  EXPECT_EQ(fb.rhs, 1);
  EXPECT_TRUE(fb.holds);

  fb = flower_bound(r, SignedMeasure(five));
  EXPECT_EQ(fb.lhs, 0);
  EXPECT_EQ(fb.rhs, 0);

  const auto w = omega_instance();
  SignedMeasure nu = SignedMeasure::dirac(w.line(), ord(0, 0, 2));
  nu.add(ord(0, 0, 5), -1);
  fb = flower_bound(w, nu);
  EXPECT_EQ(fb.lhs, 2);
  EXPECT_EQ(fb.rhs, 2);
}

TEST(FlowerBound, RequiresZeroMass) {
  const auto five = LineDescriptor::finite(5);
  const auto r = OperatorR::finite_basis(five, {TestFunction::constant(five, 1)});
  EXPECT_THROW(flower_bound(r, SignedMeasure::dirac(five, fin(0))), PreconditionError);
}

TEST(FlowerBound, RandomBalancedMeasures) {
  InstanceRng rng(77);
  for (int i = 0; i < 100; ++i) {
    const auto line = i % 2 ? random_countable_line(rng) : random_line(rng);
    const auto r = i % 2 ? random_coordinate(rng, line) : random_finite_basis(rng, line);
    const auto fb = flower_bound(r, random_balanced_measure(rng, line));
    EXPECT_LE(fb.lhs, fb.rhs);
  }
}
