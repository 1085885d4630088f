#include <gtest/gtest.h>

#include "sobczyk/closed_set.hpp"
#include "sobczyk/error.hpp"
#include "sobczyk/quotient.hpp"

using namespace sobczyk;

namespace {

PointId fin(std::uint64_t i) { return PointId::finite(i); }
PointId ord(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return PointId::ordinal(a, b, c); }

}  // namespace

TEST(OrderQuery, FiniteSuccessorAndMax) {
  const auto line = LineDescriptor::finite(5);
  EXPECT_EQ(line.successor(fin(2)), fin(3));
  EXPECT_TRUE(line.is_right_isolated(fin(4)));
  EXPECT_FALSE(line.successor(fin(4)).has_value());
  EXPECT_EQ(line.min(), fin(0));
  EXPECT_EQ(line.max(), fin(4));
}

TEST(OrderQuery, LexDoubleSuccessorCrossesBase) {
  const auto line = LineDescriptor::lex_double(LineDescriptor::finite(2));
  EXPECT_EQ(line.successor(PointId::pair(fin(0), 1)), PointId::pair(fin(1), 0));
  EXPECT_EQ(line.successor(PointId::pair(fin(0), 0)), PointId::pair(fin(0), 1));
}

TEST(OrderQuery, OrdinalSuccessorOfLimit) {
  const auto line = LineDescriptor::ordinal(OrdinalCnf{0, 2, 0});
  EXPECT_EQ(line.successor(ord(0, 1, 0)), ord(0, 1, 1));
  EXPECT_TRUE(line.is_right_isolated(ord(0, 1, 0)));
  EXPECT_FALSE(line.is_left_isolated(ord(0, 1, 0)));
  EXPECT_TRUE(line.is_left_isolated(ord(0, 1, 1)));
  EXPECT_FALSE(line.predecessor(ord(0, 1, 0)).has_value());
}

TEST(OrderQuery, UnitIntervalHasNoRightIsolatedInteriorPoints) {
  const auto line = LineDescriptor::unit_interval();
  EXPECT_FALSE(line.is_right_isolated(PointId::rational(Rational(1, 3))));
  EXPECT_FALSE(line.is_right_isolated(PointId::rational(0)));
  EXPECT_TRUE(line.is_right_isolated(PointId::rational(1)));
}

TEST(OrderQuery, DoubleArrowOrder) {
  const auto line = LineDescriptor::double_arrow({Rational(1, 2)});
  const auto lo = PointId::doubled(Rational(1, 2), 0);
  const auto hi = PointId::doubled(Rational(1, 2), 1);
  EXPECT_TRUE(line.compare(lo, hi) < 0);
  EXPECT_EQ(line.successor(lo), hi);
  EXPECT_TRUE(line.is_right_isolated(lo));
  EXPECT_FALSE(line.is_right_isolated(PointId::doubled(Rational(1, 3), 0)));
  EXPECT_FALSE(line.contains(PointId::doubled(Rational(1, 3), 1)));
}

TEST(OrderQuery, InvalidPointsAreRejected) {
  const auto line = LineDescriptor::finite(3);
  EXPECT_FALSE(line.contains(fin(3)));
  EXPECT_THROW(line.require(fin(7)), InvalidPoint);
  EXPECT_THROW(LineDescriptor::ordinal(OrdinalCnf{0, 9, 0}), PreconditionError);
  EXPECT_FALSE(LineDescriptor::ordinal(OrdinalCnf{0, 1, 0}).contains(ord(0, 1, 1)));
}

TEST(OrdinalCnf, Ranks) {
  EXPECT_EQ((OrdinalCnf{0, 0, 0}).rank(), 0);
  EXPECT_EQ((OrdinalCnf{0, 0, 5}).rank(), 0);
  EXPECT_EQ((OrdinalCnf{0, 3, 0}).rank(), 1);
  EXPECT_EQ((OrdinalCnf{2, 0, 0}).rank(), 2);
  EXPECT_EQ((OrdinalCnf{1, 2, 0}).rank(), 1);
  EXPECT_LT((OrdinalCnf{0, 9, 9}), (OrdinalCnf{1, 0, 0}));
}

TEST(PartitionCells, FiniteLine) {
  const auto line = LineDescriptor::finite(5);
  const auto p = ClopenPartition::make(line, {fin(1), fin(4)});
  const auto cells = p.cells();
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0], (ClopenInterval{std::nullopt, fin(1)}));
  EXPECT_EQ(cells[1], (ClopenInterval{fin(1), fin(4)}));
  EXPECT_EQ(p.cell_of(line, fin(2)), (ClopenInterval{fin(1), fin(4)}));
}

TEST(PartitionCells, CoarsestIsOneCell) {
  const auto line = LineDescriptor::finite(5);
  const auto cells = ClopenPartition::coarsest(line).cells();
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_EQ(cells[0], (ClopenInterval{std::nullopt, fin(4)}));
}

TEST(PartitionCells, OrdinalLine) {
  const auto line = LineDescriptor::ordinal(OrdinalCnf{0, 2, 0});
  const auto p = ClopenPartition::make(line, {ord(0, 0, 5), ord(0, 2, 0)});
  EXPECT_EQ(p.cell_of(line, ord(0, 1, 0)), (ClopenInterval{ord(0, 0, 5), ord(0, 2, 0)}));
  EXPECT_EQ(p.cell_of(line, ord(0, 0, 5)), (ClopenInterval{std::nullopt, ord(0, 0, 5)}));
}

TEST(PartitionCells, RejectsNonRightIsolatedCuts) {
  const auto line = LineDescriptor::unit_interval();
  EXPECT_THROW(ClopenPartition::make(line, {PointId::rational(Rational(1, 2)), PointId::rational(1)}),
               PreconditionError);
}

TEST(LexDouble, FourPointOrderAndFibers) {
  const auto [line, q] = lex_double(LineDescriptor::finite(2));
  EXPECT_TRUE(line.is_finite());
  const auto pts = all_points(line);
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts[0], PointId::pair(fin(0), 0));
  EXPECT_EQ(pts[1], PointId::pair(fin(0), 1));
  EXPECT_EQ(pts[2], PointId::pair(fin(1), 0));
  EXPECT_EQ(pts[3], PointId::pair(fin(1), 1));
  for (const auto& t : all_points(LineDescriptor::finite(2))) {
    EXPECT_TRUE(q.is_multi(t));
    EXPECT_EQ(q.fiber_max(t), PointId::pair(t, 1));
    EXPECT_EQ(q.a_point(t), PointId::pair(t, 0));
  }
}

TEST(LexDouble, OrdinalLimitGetsSuccessor) {
  const auto [line, q] = lex_double(LineDescriptor::ordinal(OrdinalCnf{0, 1, 0}));
  EXPECT_EQ(line.successor(PointId::pair(ord(0, 1, 0), 0)), PointId::pair(ord(0, 1, 0), 1));
  EXPECT_TRUE(line.is_zero_dimensional());
}

TEST(BuildQuotient, FiniteClasses) {
  const auto q = build_quotient(LineDescriptor::finite(5), {fin(1), fin(3)});
  EXPECT_EQ(q.target(), LineDescriptor::finite(3));
  const std::uint64_t expected[] = {0, 0, 1, 1, 2};
  for (std::uint64_t i = 0; i < 5; ++i) EXPECT_EQ(q.apply(fin(i)), fin(expected[i]));
  EXPECT_EQ(q.fiber_max(fin(0)), fin(1));
  EXPECT_EQ(q.fiber_max(fin(1)), fin(3));
  EXPECT_EQ(q.fiber_min(fin(2)), fin(4));
}

TEST(BuildQuotient, NoCutsGivesPoint) {
  const auto q = build_quotient(LineDescriptor::finite(5), {});
  EXPECT_EQ(q.target(), LineDescriptor::finite(1));
  for (std::uint64_t i = 0; i < 5; ++i) EXPECT_EQ(q.apply(fin(i)), fin(0));
}

TEST(BuildQuotient, LexDoubleFibers) {
  const auto line = LineDescriptor::lex_double(LineDescriptor::finite(2));
  const auto q = build_quotient(line, {PointId::pair(fin(0), 0)});
  EXPECT_EQ(q.target(), LineDescriptor::finite(2));
  EXPECT_FALSE(q.is_multi(fin(0)));
  EXPECT_TRUE(q.is_multi(fin(1)));
  EXPECT_EQ(q.fiber_max(fin(1)), PointId::pair(fin(1), 1));
  EXPECT_EQ(q.a_point(fin(1)), PointId::pair(fin(0), 1));
}

TEST(BuildQuotient, RejectsNonRightIsolated) {
  EXPECT_THROW(build_quotient(LineDescriptor::unit_interval(), {PointId::rational(Rational(1, 2))}), PreconditionError);
}

TEST(RefinePartitions, FiniteEventuallyDiscrete) {
  const auto line = LineDescriptor::finite(4);
  EXPECT_TRUE(refine_partitions(line, 1).has_cut(fin(3)));
  EXPECT_EQ(refine_partitions(line, 3).cuts(), (std::vector<PointId>{fin(0), fin(1), fin(2), fin(3)}));
}

TEST(RefinePartitions, OrdinalOmegaEnumeratesIntegers) {
  const auto line = LineDescriptor::ordinal(OrdinalCnf{0, 1, 0});
  const auto p = refine_partitions(line, 3);
  EXPECT_EQ(p.cuts(), (std::vector<PointId>{ord(0, 0, 0), ord(0, 0, 1), ord(0, 0, 2), ord(0, 1, 0)}));
  for (std::size_t k = 1; k < 20; ++k) EXPECT_TRUE(refine_partitions(line, k + 1).refines(refine_partitions(line, k)));
}

TEST(RefinePartitions, UnitIntervalOnlyMax) {
  const auto line = LineDescriptor::unit_interval();
  for (std::size_t k : {0u, 1u, 5u, 50u}) {
    EXPECT_EQ(refine_partitions(line, k).cuts(), (std::vector<PointId>{PointId::rational(1)}));
  }
}

TEST(ClosedSet, RankFilteredComponent) {
  const auto line = LineDescriptor::ordinal(OrdinalCnf{1, 0, 0});
  const auto h = ClosedSet::from_components(line, {ClosedComponent{ord(0, 0, 3), ord(1, 0, 0), 1}});
  EXPECT_EQ(h.min(), ord(0, 1, 0));
  EXPECT_TRUE(h.contains(ord(0, 4, 0)));
  EXPECT_FALSE(h.contains(ord(0, 4, 1)));
  EXPECT_TRUE(h.contains(ord(1, 0, 0)));
  EXPECT_FALSE(h.finite_size().has_value());
  EXPECT_EQ(h.first_at_or_above(ord(0, 2, 5)), ord(0, 3, 0));
}
