#include "polypart/bijection.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace polypart;

namespace {

using Ints = std::vector<std::int64_t>;

const char *kExampleMuBar = "5+4^2+3^3+2^9+1^6";
const char *kExampleLambda = "17^5+16^6+15+14^2+13^3+12^4";

BijectionPair pair_of(const char *mu_bar, std::int64_t ell, std::int64_t t) {
  return BijectionPair(Partition::parse(mu_bar), ell, t);
}

Partition ones(std::int64_t k) { return Partition(Ints(static_cast<std::size_t>(k), 1)); }

} // namespace

TEST(BijectionPairTest, Invariants) {
  EXPECT_THROW(BijectionPair(Partition(), 0, 2), InvalidPair);
  EXPECT_THROW(pair_of("3", 0, 2), InvalidPair);
  EXPECT_THROW(pair_of("2", 3, 2), InvalidPair);
  EXPECT_THROW(pair_of("2", -2, 2), InvalidPair);
  EXPECT_NO_THROW(pair_of("2+1", 4, 2));
}

TEST(BijectionPairTest, TextForms) {
  const auto pair = BijectionPair::parse("5+4^2+3^3+2^9+1^6,265", 5);
  EXPECT_EQ(pair, pair_of(kExampleMuBar, 265, 5));
  EXPECT_EQ(pair.str(), "5+4^2+3^3+2^9+1^6,265");
  EXPECT_EQ(pair.to_json().dump(), R"({"mu_bar":"5+4^2+3^3+2^9+1^6","ell":265})");
  EXPECT_EQ(pair.height(), 311);
  EXPECT_THROW(BijectionPair::parse("2+1", 2), ParseError);
  EXPECT_THROW(BijectionPair::parse("2+1,x", 2), ParseError);
  EXPECT_THROW(BijectionPair::parse("2+1,3", 2), InvalidPair);
}

TEST(DecomposeTest, WorkedExample) {
  const auto d = decompose_m(pair_of(kExampleMuBar, 265, 5));
  EXPECT_EQ(d.m, 12);
  EXPECT_EQ(d.j, 1);
  EXPECT_EQ(d.K, 2);
  EXPECT_EQ(d.alpha_star_j, 5);
  // alpha_1..alpha_4, alpha*_0, alpha*_1 as displayed for the example
  EXPECT_EQ(d.alphas, (Ints{4, 3, 2, 1, 6, 5}));
}

TEST(DecomposeTest, SmallCases) {
  for (std::int64_t t = 1; t <= 4; ++t) {
    const auto d = decompose_m(BijectionPair(ones(3), 0, t));
    EXPECT_EQ(d.m, 1);
    EXPECT_EQ(d.j, 0);
    EXPECT_EQ(d.K, 0);
    EXPECT_EQ(d.alpha_star_j, 0);
  }
  // (1,1,0) = v_2 lies in C_2 although the printed x_t condition gives -1.
  const auto d = decompose_m(pair_of("2", 0, 2));
  EXPECT_EQ(d.m, 2);
  EXPECT_EQ(d.j, 1);
  EXPECT_EQ(d.K, 0);
  EXPECT_EQ(d.alpha_star_j, 0);
  EXPECT_EQ(locate(2, LatticePoint({1, 1, 0})), 2);
}

TEST(DecomposeTest, CoefficientsMatchLinearAlgebra) {
  // Independent route: solve V_m alpha = x exactly in the cones module.
  for (std::int64_t t = 1; t <= 4; ++t) {
    for (std::int64_t n = 1; n <= 16; ++n) {
      for (const auto &pair : enumerate_pairs(t, n)) {
        const auto d = decompose_m(pair);
        EXPECT_EQ(d.m, d.K * t + d.j + 1);
        EXPECT_GE(d.alphas.front(), 1);
        const auto alpha = cone_coords(t, d.m, pair_to_point(pair));
        ASSERT_TRUE(alpha) << pair.str();
        EXPECT_EQ(*alpha, d.alphas) << pair.str();
      }
    }
  }
}

TEST(PairToPartitionTest, Examples) {
  EXPECT_EQ(pair_to_partition(pair_of(kExampleMuBar, 265, 5)).str(), kExampleLambda);
  for (std::int64_t t = 1; t <= 4; ++t)
    for (std::int64_t k = 1; k <= 5; ++k)
      EXPECT_EQ(pair_to_partition(BijectionPair(ones(k), 0, t)), ones(k));
  EXPECT_EQ(pair_to_partition(pair_of("2+1", 2, 2)), Partition({3, 2}));
}

TEST(PairToPartitionTest, MultipleOfTSmallestPart) {
  // m = t: parts use K = (m-1) div t, so weight is preserved.
  const auto lambda = pair_to_partition(pair_of("1^2", 2, 1));
  EXPECT_EQ(lambda, Partition({2, 2}));
  EXPECT_EQ(lambda.weight(), 4);
}

TEST(PartitionToPairTest, Examples) {
  EXPECT_EQ(partition_to_pair(5, Partition::parse(kExampleLambda)), pair_of(kExampleMuBar, 265, 5));
  EXPECT_EQ(partition_to_pair(1, Partition({3, 2})), pair_of("1^2", 3, 1));
  for (std::int64_t t = 1; t <= 4; ++t)
    EXPECT_EQ(partition_to_pair(t, ones(4)), BijectionPair(ones(4), 0, t));
  EXPECT_THROW(partition_to_pair(2, Partition({4, 1})), InvalidPartition);
  EXPECT_THROW(partition_to_pair(2, Partition()), InvalidPartition);
}

TEST(PointPairTest, Examples) {
  const LatticePoint example({21, 15, 6, 3, 1, 265});
  EXPECT_EQ(point_to_pair(5, example), pair_of(kExampleMuBar, 265, 5));
  EXPECT_EQ(pair_to_point(pair_of(kExampleMuBar, 265, 5)), example);
  EXPECT_EQ(example.height(), 311);
  EXPECT_EQ(locate(5, example), 12);

  EXPECT_EQ(point_to_pair(2, LatticePoint({1, 0, 0})), pair_of("1", 0, 2));
  EXPECT_EQ(point_to_pair(2, LatticePoint({2, 1, 2})), pair_of("2+1", 2, 2));
  EXPECT_THROW(point_to_pair(2, LatticePoint({2, 1, 1})), NotInLattice);
  EXPECT_THROW(point_to_pair(2, LatticePoint({0, 0, 2})), NotInX);
  EXPECT_THROW(point_to_pair(2, LatticePoint({1, 2, 0})), NotInX);
}

TEST(RoundTripTest, ExhaustiveSmallHeights) {
  for (std::int64_t t = 1; t <= 4; ++t) {
    for (std::int64_t n = 1; n <= 18; ++n) {
      for (const auto &pair : enumerate_pairs(t, n)) {
        const auto lambda = pair_to_partition(pair);
        EXPECT_EQ(lambda.weight(), pair.height());
        EXPECT_EQ(lambda.smallest(), decompose_m(pair).m);
        EXPECT_LE(lambda.largest() - lambda.smallest(), t);
        EXPECT_EQ(partition_to_pair(t, lambda), pair);
      }
      for (const auto &lambda : enumerate_bounded(n, t))
        EXPECT_EQ(pair_to_partition(partition_to_pair(t, lambda)), lambda) << lambda.str();
    }
  }
}

TEST(CountingTest, PairsCountBoundedPartitions) {
  for (std::int64_t t = 1; t <= 4; ++t)
    for (std::int64_t n = 1; n <= 40; ++n)
      EXPECT_EQ(static_cast<std::int64_t>(enumerate_pairs(t, n).size()), oracle::bounded(n, t))
          << t << "," << n;
}

TEST(VerifyBijectionTest, Passes) {
  for (std::int64_t t = 1; t <= 3; ++t) {
    const auto report = verify_bijection(t, 12);
    EXPECT_TRUE(report.passed) << report.to_json().dump();
    EXPECT_EQ(report.counts.size(), 12u);
    EXPECT_EQ(report.counts[5], oracle::bounded(6, t));
  }
}
