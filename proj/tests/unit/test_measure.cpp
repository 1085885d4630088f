#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "sobczyk/error.hpp"
#include "sobczyk/random_instances.hpp"

using namespace sobczyk;

namespace {

PointId fin(std::uint64_t i) { return PointId::finite(i); }

SignedMeasure dipole(const LineDescriptor& line, const PointId& p, const PointId& q) {
  SignedMeasure mu = SignedMeasure::dirac(line, p);
  mu.add(q, -1);
  return mu;
}

const LineDescriptor kFive = LineDescriptor::finite(5);

}  // namespace

TEST(TotalVariation, DipoleAndJordan) {
  const auto mu = dipole(kFive, fin(1), fin(3));
  EXPECT_EQ(total_variation(mu), 2);
  const auto parts = jordan(mu);
  EXPECT_EQ(parts.positive, SignedMeasure::dirac(kFive, fin(1)));
  EXPECT_EQ(parts.negative, SignedMeasure::dirac(kFive, fin(3)));
}

TEST(TotalVariation, ZeroMeasure) {
  const SignedMeasure zero(kFive);
  EXPECT_EQ(total_variation(zero), 0);
  EXPECT_TRUE(jordan(zero).positive.is_zero());
  EXPECT_TRUE(jordan(zero).negative.is_zero());
}

TEST(TotalVariation, MixedWeights) {
  SignedMeasure mu = SignedMeasure::dirac(kFive, fin(0), 2);
  mu.add(fin(2), 1);
  mu.add(fin(4), -3);
  EXPECT_EQ(total_variation(mu), 6);
  EXPECT_EQ(mu.total_mass(), 0);
}

TEST(Cumulative, DipoleProfile) {
  const auto mu = dipole(kFive, fin(1), fin(3));
  const Rational expected[] = {0, 1, 1, 0, 0};
  for (std::uint64_t t = 0; t < 5; ++t) EXPECT_EQ(cumulative(mu, fin(t)), expected[t]) << "t=" << t;
}

TEST(Cumulative, DoubleArrowSplitsTheDoubledPoint) {
  const auto line = LineDescriptor::double_arrow({Rational(1, 2)});
  const auto mu = SignedMeasure::dirac(line, PointId::doubled(Rational(1, 2), 1));
  EXPECT_EQ(cumulative(mu, PointId::doubled(Rational(1, 2), 0)), 0);
  EXPECT_EQ(cumulative(mu, PointId::doubled(Rational(1, 2), 1)), 1);
}

TEST(Cumulative, MaxGivesTotalMass) {
  InstanceRng rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto line = random_line(rng);
    const auto mu = random_measure(rng, line);
    EXPECT_EQ(cumulative(mu, line.max()), mu.total_mass());
  }
}

TEST(BvNorm, Examples) {
  EXPECT_EQ(bv_norm(NBVProfile(dipole(kFive, fin(1), fin(3)))), 2);
  EXPECT_EQ(bv_norm(NBVProfile(SignedMeasure(kFive))), 0);
  // Mass at min shows up in |F(0)|, not in the variation.
  const NBVProfile f(SignedMeasure::dirac(kFive, fin(0), 2));
  EXPECT_EQ(f(fin(0)), 2);
  EXPECT_EQ(f.variation_on(all_points(kFive)), 0);
  EXPECT_EQ(bv_norm(f), 2);
}

TEST(RsIntegral, Examples) {
  const auto mu = dipole(kFive, fin(1), fin(3));
  const auto chi = TestFunction::initial_segment(kFive, fin(2));
  EXPECT_EQ(rs_integral(chi, NBVProfile(mu)), 1);
  EXPECT_EQ(rs_integral(TestFunction::constant(kFive, 1), NBVProfile(mu)), mu.total_mass());

  const auto unit = LineDescriptor::unit_interval();
  const auto identity = TestFunction::piecewise_linear(unit, {{0, 0}, {1, 1}});
  const auto nu = dipole(unit, PointId::rational(Rational(1, 4)), PointId::rational(Rational(3, 4)));
  EXPECT_EQ(rs_integral(identity, NBVProfile(nu)), Rational(-1, 2));
}

TEST(RsIntegral, RejectsDiscontinuousAndForeign) {
  const auto unit = LineDescriptor::unit_interval();
  const auto jump = TestFunction::step_unchecked(unit, {PointId::rational(Rational(1, 2)), PointId::rational(1)},
                                                 {Rational(0), Rational(1)});
  EXPECT_THROW(rs_integral(jump, NBVProfile(SignedMeasure(unit))), PreconditionError);
  EXPECT_THROW(rs_integral(TestFunction::constant(kFive, 1), NBVProfile(SignedMeasure(unit))), LineMismatch);
}

TEST(RsIntegral, StieltjesSumsStabilizeUnderRefinement) {
  InstanceRng rng(5);
  for (int i = 0; i < 40; ++i) {
    const auto line = random_line(rng);
    const auto mu = random_measure(rng, line);
    const auto f = random_continuous(rng, line);
    const NBVProfile prof(mu);
    const auto p = prof.atom_partition();
    EXPECT_EQ(stieltjes_sum(f, prof, p), stieltjes_sum(f, prof, refine_once(line, p)));
  }
}

TEST(Pushforward, Examples) {
  const auto q = build_quotient(kFive, {fin(1), fin(3)});
  const auto mu = dipole(kFive, fin(0), fin(2));
  EXPECT_EQ(pushforward(q, mu), dipole(q.target(), fin(0), fin(1)));
  EXPECT_EQ(pushforward(QuotientMap::identity(kFive), mu), mu);
  EXPECT_TRUE(pushforward(q, dipole(kFive, fin(0), fin(1))).is_zero());
}

TEST(MeasureAlgebra, LinearOperations) {
  const auto a = dipole(kFive, fin(1), fin(3));
  const auto b = SignedMeasure::dirac(kFive, fin(3), 1);
  EXPECT_EQ(a + b, SignedMeasure::dirac(kFive, fin(1)));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(total_variation(Rational(3, 2) * a), 3);
  EXPECT_THROW(a + SignedMeasure(LineDescriptor::finite(4)), LineMismatch);
}

TEST(MeasureAlgebra, MassOfIntervals) {
  SignedMeasure mu = SignedMeasure::dirac(kFive, fin(0), 2);
  mu.add(fin(2), 1);
  mu.add(fin(4), -3);
  EXPECT_EQ(mu.mass_of(ClopenInterval{std::nullopt, fin(1)}), 2);
  EXPECT_EQ(mu.mass_of(ClopenInterval{fin(1), fin(4)}), -2);
  EXPECT_EQ(mu.restrict(ClopenInterval{fin(1), fin(4)}).support(), (std::vector<PointId>{fin(2), fin(4)}));
}

// F_μ agrees with prefix sums computed independently on finite lines.
TEST(CumulativeOracle, FiniteLinePrefixSums) {
  InstanceRng rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto line = random_line(rng, LineFamily::Finite);
    const auto mu = random_measure(rng, line);
    const auto atoms = oracle::atoms_of(mu);
    for (const auto& t : all_points(line)) EXPECT_EQ(cumulative(mu, t), oracle::prefix_mass(atoms, t.index()));
  }
}
