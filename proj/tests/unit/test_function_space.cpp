#include <gtest/gtest.h>

#include <set>

#include "oracles/oracles.hpp"
#include "sobczyk/error.hpp"
#include "sobczyk/function_space.hpp"
#include "sobczyk/random_instances.hpp"

using namespace sobczyk;

namespace {

PointId fin(std::uint64_t i) { return PointId::finite(i); }
PointId ord(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return PointId::ordinal(a, b, c); }

const LineDescriptor kFive = LineDescriptor::finite(5);

OperatorR two_cell_basis() {
  return OperatorR::finite_basis(kFive, {TestFunction::initial_segment(kFive, fin(1)),
                                         TestFunction::initial_segment(kFive, fin(3))});
}

OperatorR omega_instance() {
  CoordinatePatterns p;
  p.units = CoefficientPattern::constant({}, 1);
  return OperatorR::coordinate(LineDescriptor::ordinal(OrdinalCnf{0, 1, 0}), p);
}

}  // namespace

TEST(TestFunction, EvalAndSupNorm) {
  const auto chi = TestFunction::initial_segment(kFive, fin(2));
  EXPECT_EQ(chi.eval(fin(3)), 0);
  EXPECT_EQ(chi.eval(fin(2)), 1);
  EXPECT_EQ(chi.sup_norm(), 1);
  EXPECT_EQ(TestFunction::step(kFive, {fin(1), fin(4)}, {Rational(1), Rational(-2)}).sup_norm(), 2);
  const auto x = TestFunction::piecewise_linear(LineDescriptor::unit_interval(), {{0, 0}, {1, 1}});
  EXPECT_EQ(x.eval(PointId::rational(Rational(3, 4))), Rational(3, 4));
}

TEST(TestFunction, PiecewiseLinearOnDoubleArrowReadsFirstCoordinate) {
  const auto da = LineDescriptor::double_arrow({Rational(1, 3)});
  const auto f = TestFunction::piecewise_linear(da, {{0, 1}, {Rational(1, 2), 0}, {1, 2}});
  EXPECT_EQ(f.eval(PointId::doubled(Rational(1, 3), 1)), Rational(1, 3));
  EXPECT_EQ(f.eval(PointId::doubled(Rational(3, 4), 0)), 1);
  EXPECT_EQ(f.sup_norm(), 2);
  EXPECT_THROW(TestFunction::piecewise_linear(kFive, {{0, 0}, {1, 1}}), std::exception);
}

TEST(Pullback, ThroughCutsQuotient) {
  const auto q = build_quotient(kFive, {fin(1), fin(3)});
  const auto f = TestFunction::initial_segment(q.target(), fin(0));
  const auto g = pullback(q, f);
  for (std::uint64_t i = 0; i < 5; ++i) EXPECT_EQ(g.eval(fin(i)), i <= 1 ? 1 : 0);
  EXPECT_EQ(pullback(q, TestFunction::constant(q.target(), 7)).eval(fin(4)), 7);

  SignedMeasure mu = SignedMeasure::dirac(kFive, fin(0));
  mu.add(fin(2), -1);
  EXPECT_EQ(rs_integral(g, NBVProfile(mu)), 1);
  EXPECT_EQ(rs_integral(f, NBVProfile(pushforward(q, mu))), 1);
}

TEST(DualNorm, TwoCellBasisExample) {
  const auto r = two_cell_basis();
  EXPECT_EQ(dual_norm(r, DualVector::finite({Rational(1), Rational(0)})), 2);
  EXPECT_EQ(dual_norm(r, DualVector::finite({Rational(0), Rational(0)})), 0);
  EXPECT_EQ(phi(r, fin(0)), DualVector::finite({Rational(1), Rational(1)}));
  EXPECT_EQ(phi(r, fin(2)), DualVector::finite({Rational(0), Rational(1)}));
  EXPECT_EQ(phi_distance(r, fin(0), fin(2)), 2);
  // x = (2, −1) attains it: |x₁ + x₂| = 1, |x₂| = 1.
  EXPECT_EQ(eval_element(r, {Rational(2), Rational(-1)}, fin(0)), 1);
  EXPECT_EQ(eval_element(r, {Rational(2), Rational(-1)}, fin(2)), -1);
}

TEST(DualNorm, L1Vector) {
  const auto r = omega_instance();
  const auto psi = DualVector::l1({{index_key(3), Rational(1)}, {index_key(7), Rational(-1)}});
  EXPECT_EQ(dual_norm(r, psi), 2);
  EXPECT_THROW(dual_norm(two_cell_basis(), psi), PreconditionError);
}

TEST(DualNorm, DependentGeneratorsRejected) {
  EXPECT_THROW(OperatorR::finite_basis(kFive, {TestFunction::constant(kFive, 1), TestFunction::constant(kFive, 2)}),
               PreconditionError);
}

TEST(Phi, OmegaInstanceDiameter) {
  const auto r = omega_instance();
  const auto& line = r.line();
  EXPECT_EQ(phi(r, ord(0, 1, 0)), DualVector::l1({}));
  const auto tail = ClosedSet::from_components(line, {ClosedComponent{ord(0, 0, 3), ord(0, 1, 0), 0}});
  EXPECT_EQ(diam_phi(r, tail), 2);
  EXPECT_EQ(diam_phi(r, ClosedSet::from_points(line, {ord(0, 0, 4)})), 0);
  EXPECT_EQ(diam_phi(r, ClosedSet::empty(line)), 0);
  EXPECT_EQ(operator_norm(r), 1);
}

TEST(Phi, RStarIsLinear) {
  InstanceRng rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto line = random_countable_line(rng);
    const auto r = i % 2 ? random_coordinate(rng, line) : random_finite_basis(rng, line);
    const auto a = random_measure(rng, line);
    const auto b = random_measure(rng, line);
    EXPECT_EQ(r_star(r, a + b), r_star(r, a) + r_star(r, b));
    EXPECT_EQ(r_star(r, Rational(-2, 3) * a), Rational(-2, 3) * r_star(r, a));
  }
}

TEST(CoefficientPattern, TailsAndLimits) {
  const auto g = CoefficientPattern::geometric({Rational(5)}, Rational(2), Rational(1, 2));
  EXPECT_EQ(g.at(0), 5);
  EXPECT_EQ(g.at(1), 2);
  EXPECT_EQ(g.at(3), Rational(1, 2));
  EXPECT_EQ(g.limit(), 0);
  EXPECT_EQ(g.at(kFarCoordinate), 0);
  EXPECT_EQ(g.sup_abs(), 5);
  EXPECT_EQ(CoefficientPattern::constant({}, Rational(-3)).at(kFarCoordinate), -3);
  EXPECT_THROW(CoefficientPattern::geometric({}, 1, 1), PreconditionError);
}

// Dual norms against an independent vertex enumeration of the unit ball.
TEST(DualNormOracle, StepBasesOnFiniteLines) {
  InstanceRng rng(101);
  for (int i = 0; i < 60; ++i) {
    const auto line = random_line(rng, LineFamily::Finite);
    const auto r = random_finite_basis(rng, line);
    const auto rows = oracle::rows_on_points(r.generators(), all_points(line));
    lp::Vector psi;
    for (std::size_t j = 0; j < r.dimension(); ++j) psi.push_back(rng.rational(3, 3));
    EXPECT_EQ(dual_norm(r, DualVector::finite(psi)), oracle::dual_norm_by_vertices(rows, psi)) << "trial " << i;
  }
}

TEST(DualNormOracle, PiecewiseLinearBasesOnTheInterval) {
  InstanceRng rng(202);
  const auto unit = LineDescriptor::unit_interval();
  for (int i = 0; i < 40; ++i) {
    const auto r = random_finite_basis(rng, unit);
    // Elements of X are linear between the union of the nodes.
    std::set<Rational> xs{Rational(0), Rational(1)};
    for (const auto& g : r.generators()) {
      for (const auto& n : g.nodes()) xs.insert(n.x);
    }
    std::vector<PointId> pts;
    for (const auto& x : xs) pts.push_back(PointId::rational(x));
    const auto rows = oracle::rows_on_points(r.generators(), pts);
    lp::Vector psi;
    for (std::size_t j = 0; j < r.dimension(); ++j) psi.push_back(rng.rational(3, 3));
    EXPECT_EQ(dual_norm(r, DualVector::finite(psi)), oracle::dual_norm_by_vertices(rows, psi)) << "trial " << i;
  }
}

TEST(Lp, MinimizeStandard) {
  // min x₁ + 2x₂ s.t. x₁ + x₂ = 3, x₁ − x₂ + x₃ = 1.
  const lp::Matrix a{{1, 1, 0}, {1, -1, 1}};
  const auto s = lp::minimize_standard(a, {3, 1}, {1, 2, 0});
  ASSERT_EQ(s.status, lp::Status::Optimal);
  EXPECT_EQ(s.value, 4);
  EXPECT_EQ(s.x, (lp::Vector{2, 1, 0}));
  EXPECT_EQ(lp::minimize_standard({{1, 1}}, {-1}, {1, 1}).status, lp::Status::Infeasible);
  EXPECT_EQ(lp::minimize_standard({{1, -1}}, {0}, {-1, 0}).status, lp::Status::Unbounded);
}

TEST(Lp, MinL1Combination) {
  const std::vector<lp::Vector> cols{{1, 1}, {0, 1}};
  const auto rep = lp::min_l1_combination(cols, {1, 0});
  ASSERT_TRUE(rep.has_value());
  EXPECT_EQ(rep->norm, 2);
  EXPECT_EQ(rep->weights, (lp::Vector{1, -1}));
  EXPECT_FALSE(lp::min_l1_combination({{1, 0}}, {0, 1}).has_value());

  // Two optimal supports; the lexicographic variant takes {0}.
  const std::vector<lp::Vector> tie{{1}, {1}};
  EXPECT_EQ(lp::min_l1_combination_lex(tie, {2})->weights, (lp::Vector{2, 0}));
  EXPECT_EQ(lp::rank({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(lp::solve({{1, 1}, {1, -1}}, {2, 0}), (lp::Vector{1, 1}));
}
