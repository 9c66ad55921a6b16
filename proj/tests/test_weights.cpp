#include <gtest/gtest.h>

#include <random>

#include "branchkit/partitions.hpp"
#include "branchkit/weights.hpp"
#include "oracles.hpp"

using namespace branchkit;

TEST(Partition, CanonicalFormDropsTrailingZeros) {
    EXPECT_EQ(Partition({3, 1, 0, 0}).rows(), (std::vector<int>{3, 1}));
    EXPECT_TRUE(Partition({0, 0}).empty());
    EXPECT_THROW(Partition({1, 2}), invalid_input);
    EXPECT_THROW(Partition({2, -1}), invalid_input);
}

TEST(Partition, ConjugateContainsEven) {
    EXPECT_EQ(Partition({4, 1}).conjugate(), Partition({2, 1, 1, 1}));
    EXPECT_TRUE(Partition({3, 2, 1}).contains(Partition({1, 1})));
    EXPECT_FALSE(Partition({3, 2, 1}).contains(Partition({1, 1, 1, 1})));
    EXPECT_TRUE(Partition({2, 2}).is_even());
    EXPECT_TRUE(Partition({3, 3, 1, 1}).is_even());
    EXPECT_FALSE(Partition({2, 1}).is_even());
    EXPECT_TRUE(Partition{}.is_even());
}

TEST(PartitionOfWeight, Examples) {
    const Rank n2(2);
    EXPECT_EQ(partition_of_weight(FundamentalWeightA(n2, {3, 1, 0})), Partition({4, 1}));
    EXPECT_EQ(partition_of_weight(FundamentalWeightA(Rank(3), {0, 0, 0, 0, 0})), Partition{});
    EXPECT_EQ(partition_of_weight(FundamentalWeightC(n2, {1, 1})), Partition({2, 1}));
    EXPECT_THROW(partition_of_weight(FundamentalWeightA(n2, {1, -1, 0})), invalid_input);
}

TEST(WeightOfPartition, Examples) {
    EXPECT_EQ(weight_of_partition<Type::A>(Partition({4, 1}), Rank(2)).coeffs(), (std::vector<int>{3, 1, 0}));
    EXPECT_EQ(weight_of_partition<Type::A>(Partition{}, Rank(3)).coeffs(), (std::vector<int>(5, 0)));
    EXPECT_EQ(weight_of_partition<Type::C>(Partition({1, 1}), Rank(2)).coeffs(), (std::vector<int>{0, 1}));
    EXPECT_THROW(weight_of_partition<Type::C>(Partition({1, 1, 1}), Rank(2)), invalid_input);
    EXPECT_THROW(weight_of_partition<Type::A>(Partition({1, 1, 1, 1}), Rank(2)), invalid_input);
}

TEST(WeightOfPartition, RoundTripsEveryDominantWeight) {
    for (int n = 1; n <= 3; ++n) {
        const Rank rank(n);
        for (const auto& p : partitions_up_to(7, rank.a_rank())) {
            const auto w = weight_of_partition<Type::A>(p, rank);
            EXPECT_EQ(partition_of_weight(w), p);
            EXPECT_EQ(weight_of_partition<Type::A>(partition_of_weight(w), rank), w);
        }
        for (const auto& p : partitions_up_to(7, n)) {
            const auto w = weight_of_partition<Type::C>(p, rank);
            EXPECT_EQ(partition_of_weight(w), p);
        }
    }
}

TEST(ResWeight, Examples) {
    const Rank n2(2);
    EXPECT_EQ(res_weight(EpsWeightA{1, 0, 0, 0}, n2), (EpsWeightC{1, 0}));
    EXPECT_EQ(res_weight(EpsWeightA{1, 1, 1, 1}, n2), (EpsWeightC{0, 0}));
    EXPECT_EQ(res_weight(EpsWeightA{1, 1, 0, 0}, n2), (EpsWeightC{1, 1}));
    EXPECT_THROW(res_weight(EpsWeightA{1, 0, 0}, n2), invalid_input);
}

TEST(ResWeight, AdditiveAndKillsSymmetricVectors) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-5, 5);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + trial % 4;
        const Rank rank(n);
        std::vector<int> u(2 * n), v(2 * n), sym(2 * n);
        for (auto& x : u) x = coord(rng);
        for (auto& x : v) x = coord(rng);
        for (int j = 0; j < n; ++j) sym[j] = sym[2 * n - 1 - j] = coord(rng);
        EXPECT_EQ(res_weight(EpsWeightA(u) + EpsWeightA(v), rank),
                  res_weight(EpsWeightA(u), rank) + res_weight(EpsWeightA(v), rank));
        EXPECT_EQ(res_weight(EpsWeightA(sym), rank), EpsWeightC::zero(rank));
    }
}

TEST(Dominance, Examples) {
    EXPECT_TRUE(is_dominant_A(EpsWeightA{2, 1, 0, 0}));
    EXPECT_FALSE(is_dominant_A(EpsWeightA{1, 2, 0, 0}));
    EXPECT_TRUE(is_dominant_A(EpsWeightA{1, 1, 1, 1}));
    EXPECT_TRUE(is_dominant_C(EpsWeightC{1, 0}));
    EXPECT_FALSE(is_dominant_C(EpsWeightC{0, -1}));
    EXPECT_TRUE(is_dominant_C(EpsWeightC{2, 2}));
}

TEST(WeylDim, Examples) {
    const Rank n2(2);
    EXPECT_EQ(weyl_dim(FundamentalWeightA(n2, {1, 0, 0})), 4);
    EXPECT_EQ(weyl_dim(FundamentalWeightA(n2, {1, 1, 0})), 20);
    EXPECT_EQ(weyl_dim(FundamentalWeightC(n2, {1, 1})), 16);
    EXPECT_THROW(weyl_dim(FundamentalWeightC(n2, {1, -1})), invalid_input);
}

TEST(WeylDim, MatchesTableauCountsForBothTypes) {
    // A: number of SSYT with entries <= 2n. C: number of King symplectic tableaux.
    for (int n = 1; n <= 2; ++n) {
        const Rank rank(n);
        for (const auto& p : partitions_up_to(5, rank.a_rank()))
            EXPECT_EQ(weyl_dim(p, Type::A, rank), static_cast<std::int64_t>(oracle::ssyt(p, 2 * n).size()))
                << to_string(p);
        for (const auto& p : partitions_up_to(5, n))
            EXPECT_EQ(weyl_dim(p, Type::C, rank), oracle::king_dim(p, n)) << to_string(p);
    }
    for (const auto& p : partitions_up_to(3, 3)) EXPECT_EQ(weyl_dim(p, Type::C, Rank(3)), oracle::king_dim(p, 3));
}

TEST(WeylDim, ExampleDecompositionDimensionsAddUp) {
    const Rank n2(2);
    EXPECT_EQ(weyl_dim(Partition({2, 1}), Type::A, n2),
              weyl_dim(Partition({1}), Type::C, n2) + weyl_dim(Partition({2, 1}), Type::C, n2));
}

TEST(WeylDim, OverflowTripsGuard) {
    EXPECT_THROW(weyl_dim(Partition({400, 300, 200, 100, 50, 20, 10}), Type::A, Rank(8)), guard_exceeded);
}

TEST(TextFormat, PartitionsAndWeights) {
    EXPECT_EQ(to_string(Partition({4, 1})), "4,1");
    EXPECT_EQ(to_string(Partition{}), "");
    EXPECT_EQ(parse_partition("4,1"), Partition({4, 1}));
    EXPECT_EQ(parse_partition(""), Partition{});
    EXPECT_THROW(parse_partition("1,x"), invalid_input);
    EXPECT_THROW(parse_partition("1,2"), invalid_input);
    EXPECT_EQ(to_string(FundamentalWeightA(Rank(2), {3, 1, 0})), "A:3,1,0");
    const auto [t, c] = parse_weight("C:1,1");
    EXPECT_EQ(t, Type::C);
    EXPECT_EQ(c, (std::vector<int>{1, 1}));
    EXPECT_THROW(parse_weight("B:1"), invalid_input);
}

TEST(Partitions, Generators) {
    EXPECT_EQ(partitions_of(4, 10).size(), 5u);
    EXPECT_EQ(partitions_of(4, 2).size(), 3u);
    EXPECT_EQ(partitions_inside(Partition({2, 1}), 2).size(), 5u); // (), 1, 2, 11, 21
    EXPECT_TRUE(is_hook(Partition({4, 1, 1})));
    EXPECT_FALSE(is_hook(Partition({2, 2})));
    EXPECT_TRUE(is_rectangle(Partition({2, 2, 2})));
}
