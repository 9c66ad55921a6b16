#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "branchkit/characters.hpp"
#include "branchkit/partitions.hpp"
#include "oracles.hpp"

using namespace branchkit;

TEST(CharA, Examples) {
    const Rank n2(2);
    const auto c1 = char_A(Partition({1}), n2);
    EXPECT_EQ(c1.weights.size(), 4u);
    for (const auto& [w, k] : c1.weights) EXPECT_EQ(k, 1);
    const auto c21 = char_A(Partition({2, 1}), n2);
    EXPECT_EQ(c21.mass(), 20);
    EXPECT_EQ(c21.mult({1, 1, 1, 0}), 2);
    const auto c1111 = char_A(Partition({1, 1, 1, 1}), n2);
    EXPECT_EQ(c1111.weights.size(), 1u);
    EXPECT_EQ(c1111.mult({1, 1, 1, 1}), 1);
    EXPECT_THROW(char_A(Partition({1, 1, 1, 1, 1}), n2), invalid_input);
}

TEST(CharA, MatchesSsytContents) {
    for (int n = 1; n <= 2; ++n)
        for (const auto& lam : partitions_up_to(5, 2 * n))
            EXPECT_EQ(char_A(lam, Rank(n)).weights, oracle::ssyt_character(lam, 2 * n)) << to_string(lam);
    for (const auto& lam : partitions_up_to(3, 6)) EXPECT_EQ(char_A(lam, Rank(3)).weights, oracle::ssyt_character(lam, 6));
}

TEST(CharA, SymmetricUnderPermutations) {
    const auto c = char_A(Partition({3, 2, 1}), Rank(3));
    for (const auto& [w, k] : c.weights) {
        auto v = w;
        std::sort(v.begin(), v.end());
        do EXPECT_EQ(c.mult(v), k);
        while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST(RestrictChar, Examples) {
    const Rank n2(2);
    const auto r = restrict_char(char_A(Partition({1}), n2), n2);
    const std::map<std::vector<int>, std::int64_t> expect{{{1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}, {{-1, 0}, 1}};
    EXPECT_EQ(r.weights, expect);
    EXPECT_TRUE(restrict_char(Character{Type::A, n2, {}}, n2).weights.empty());
    EXPECT_EQ(restrict_char(char_A(Partition({2, 1}), n2), n2).mass(), 20);
    EXPECT_THROW(restrict_char(Character{Type::C, n2, {}}, n2), invalid_input);
}

TEST(RootSystemC, Shape) {
    for (int n = 1; n <= 4; ++n) {
        const RootSystemC rs{Rank(n)};
        EXPECT_EQ(rs.positive_roots.size(), static_cast<std::size_t>(n * n));
        std::vector<int> rho(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = n - i;
        EXPECT_EQ(rs.rho, rho);
        std::vector<int> sum(static_cast<std::size_t>(n), 0);
        for (const auto& a : rs.positive_roots)
            for (int i = 0; i < n; ++i) sum[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i)];
        for (int i = 0; i < n; ++i) EXPECT_EQ(sum[static_cast<std::size_t>(i)], 2 * rho[static_cast<std::size_t>(i)]);
    }
}

TEST(Freudenthal, Examples) {
    const Rank n2(2);
    EXPECT_EQ(freudenthal_mult(Partition({1}), EpsWeightC{1, 0}, n2), 1);
    EXPECT_EQ(freudenthal_mult(Partition({1, 1}), EpsWeightC{0, 0}, n2), 1);
    EXPECT_EQ(freudenthal_mult(Partition({1}), EpsWeightC{2, 0}, n2), 0);
    EXPECT_EQ(freudenthal_mult(Partition({2, 1}), EpsWeightC{1, 0}, n2), 2);
    EXPECT_THROW(freudenthal_mult(Partition({1, 1, 1}), EpsWeightC{0, 0}, n2), invalid_input);
}

TEST(Freudenthal, HighestWeightIsOneAndOutsideIsZero) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& nu : partitions_up_to(5, n)) {
            std::vector<int> top(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < nu.length(); ++i) top[static_cast<std::size_t>(i)] = nu[i];
            EXPECT_EQ(freudenthal_mult(nu, EpsWeightC(top), Rank(n)), 1);
            auto above = top;
            above[0] += 1;
            EXPECT_EQ(freudenthal_mult(nu, EpsWeightC(above), Rank(n)), 0);
            if (n >= 2 && nu.size() >= 1) {
                auto odd = top; // parity differs from the highest weight
                odd[static_cast<std::size_t>(n - 1)] += 1;
                if (nu[n - 1] == 0) { EXPECT_EQ(freudenthal_mult(nu, EpsWeightC(odd), Rank(n)), 0); }
            }
        }
}

TEST(CharC, Examples) {
    const Rank n2(2);
    const auto c1 = char_C(Partition({1}), n2);
    EXPECT_EQ(c1.weights.size(), 4u);
    EXPECT_EQ(c1.mass(), 4);
    const auto c11 = char_C(Partition({1, 1}), n2);
    EXPECT_EQ(c11.mass(), 5);
    EXPECT_EQ(c11.mult({0, 0}), 1);
    EXPECT_EQ(char_C(Partition({2, 1}), n2).mass(), 16);
}

TEST(CharC, MatchesKingTableaux) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& nu : partitions_up_to(n == 3 ? 4 : 5, n))
            EXPECT_EQ(char_C(nu, Rank(n)).weights, oracle::king_character(nu, n)) << "n=" << n << " nu=" << to_string(nu);
}

TEST(CharC, MassIsWeylDimension) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& nu : partitions_up_to(6, n))
            EXPECT_EQ(char_C(nu, Rank(n)).mass(), weyl_dim(nu, Type::C, Rank(n))) << to_string(nu);
}

TEST(CharC, WeylGroupSymmetry) {
    std::mt19937 rng(17);
    for (const auto& nu : partitions_up_to(5, 3)) {
        const auto c = char_C(nu, Rank(3));
        for (const auto& [w, k] : c.weights) {
            auto v = w;
            std::shuffle(v.begin(), v.end(), rng);
            for (auto& x : v)
                if (rng() & 1) x = -x;
            EXPECT_EQ(c.mult(v), k);
        }
    }
}

TEST(DecomposeC, Examples) {
    const Rank n2(2);
    EXPECT_EQ(decompose_C(char_C(Partition({1}), n2), n2), (Decomposition{{Partition({1}), 1}}));
    EXPECT_EQ(decompose_C(restrict_char(char_A(Partition({1, 1}), n2), n2), n2),
              (Decomposition{{Partition({1, 1}), 1}, {Partition{}, 1}}));
    EXPECT_EQ(decompose_C(restrict_char(char_A(Partition({2, 1}), n2), n2), n2),
              (Decomposition{{Partition({1}), 1}, {Partition({2, 1}), 1}}));
}

TEST(DecomposeC, RejectsNonCharacters) {
    const Rank n2(2);
    Character bad{Type::C, n2, {{{1, 0}, 1}}}; // one weight of the 4-dim module only
    EXPECT_THROW(decompose_C(bad, n2), internal_error);
    Character neg{Type::C, n2, {{{0, 0}, -1}}};
    EXPECT_THROW(decompose_C(neg, n2), internal_error);
}

TEST(DecomposeC, RoundTripsSums) {
    const Rank n3(3);
    const Decomposition d{{Partition({2}), 2}, {Partition({1, 1}), 1}, {Partition{}, 3}, {Partition({2, 1, 1}), 1}};
    const auto c = expand_C(d, n3);
    EXPECT_EQ(decompose_C(c, n3), d);
    EXPECT_EQ(expand_C(decompose_C(c, n3), n3), c);
}

TEST(DecomposeC, RestrictedCharactersReexpand) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : partitions_up_to(n == 3 ? 5 : 6, 2 * n - 1)) {
            const auto r = restrict_char(char_A(lam, Rank(n)), Rank(n));
            EXPECT_EQ(expand_C(decompose_C(r, Rank(n)), Rank(n)), r);
        }
}
