#include "schubert_fk/partition.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace schubert_fk;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

// Inversion count by the definition, kept apart from Permutation::length.
int count_inversions(const std::vector<int>& e) {
    int c = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) c += e[i] > e[j];
    return c;
}

} // namespace

TEST(Permutation, Length) {
    EXPECT_EQ(length(P({1, 2, 3})), 0);
    EXPECT_EQ(length(P({3, 2, 1})), 3);
    EXPECT_EQ(length(P({2, 4, 1, 3})), count_inversions({2, 4, 1, 3}));
    EXPECT_EQ(length(P({2, 4, 1, 3})), 3);
}

TEST(Permutation, RejectsNonBijections) {
    EXPECT_THROW(P({1, 1, 2}), ParseError);
    EXPECT_THROW(P({0, 1}), ParseError);
    EXPECT_THROW(parse_permutation("1 x 2"), ParseError);
    EXPECT_THROW(parse_permutation(""), ParseError);
}

TEST(Permutation, TextRoundTrip) {
    auto w = parse_permutation("2 4 1 3");
    EXPECT_EQ(w, P({2, 4, 1, 3}));
    EXPECT_EQ(to_string(w), "2 4 1 3");
}

TEST(Permutation, ProductConvention) {
    // (u v)(i) = u(v(i)); right multiplication by a transposition swaps positions.
    auto u = P({2, 3, 1});
    auto v = P({2, 1, 3});
    EXPECT_EQ(u * v, P({3, 2, 1}));
    EXPECT_EQ(u * v, u.swap_positions(1, 2));
}

TEST(Permutation, CodeRoundTrip) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : enumerate_sn(n)) {
            auto c = w.code();
            EXPECT_EQ(Permutation::from_code(c, n), w);
            int s = 0;
            for (int x : c) s += x;
            EXPECT_EQ(s, w.length());
        }
    std::vector<int> bad{3, 0, 0};
    EXPECT_THROW(Permutation::from_code(bad, 3), NotInSpan);
}

TEST(Permutation, LexRankMatchesEnumeration) {
    auto all = enumerate_sn(5);
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(lex_rank(all[i]), i);
}

TEST(Permutation, AdjacentTranspositionChangesLengthByOne) {
    for (int n = 2; n <= 6; ++n)
        for (const auto& w : enumerate_sn(n))
            for (int i = 1; i < n; ++i) EXPECT_EQ(std::abs(w.swap_positions(i, i + 1).length() - w.length()), 1);
}

TEST(Permutation, EmbedAndTrim) {
    auto w = P({2, 1, 3, 4});
    EXPECT_EQ(w.trimmed(), P({2, 1}));
    EXPECT_EQ(Permutation::identity(4).trimmed(), Permutation::identity(1));
    EXPECT_EQ(P({2, 1}).embed(4), w);
}

TEST(Enumeration, CountsAndUniqueness) {
    EXPECT_EQ(enumerate_sn(3).size(), 6u);
    auto s4 = enumerate_sn(4);
    EXPECT_EQ(std::set<Permutation>(s4.begin(), s4.end()).size(), 24u);
    EXPECT_EQ(enumerate_partitions_in_box(2, 2, 2), (std::vector<Partition>{Partition({2}), Partition({1, 1})}));
    EXPECT_EQ(enumerate_partitions_in_box(2, 2, 4), (std::vector<Partition>{Partition({2, 2})}));
    EXPECT_EQ(enumerate_partitions_in_box(2, 3).size(), 10u);
}

TEST(Partition, Basics) {
    Partition p({3, 1, 0});
    EXPECT_EQ(p.length(), 2);
    EXPECT_EQ(p.size(), 4);
    EXPECT_TRUE(p.fits_in(2, 3));
    EXPECT_FALSE(p.fits_in(1, 3));
    EXPECT_FALSE(p.fits_in(2, 2));
    EXPECT_EQ(p.conjugate(), Partition({2, 1, 1}));
    EXPECT_TRUE(Partition().fits_in(0, 0));
    EXPECT_THROW(Partition({1, 2}), ParseError);
    EXPECT_EQ(parse_partition("2,1"), Partition({2, 1}));
    EXPECT_EQ(to_string(Partition({2, 1})), "2,1");
    EXPECT_EQ(HookShape({3, 2}).partition(), Partition({3, 1}));
}

TEST(Grassmannian, Examples) {
    EXPECT_EQ(code_of(P({2, 4, 1, 3}), 2), Partition({2, 1}));
    EXPECT_EQ(code_of(Permutation::identity(4), 2), Partition());
    EXPECT_EQ(code_of(P({3, 1, 2}), 1), Partition({2}));
    EXPECT_EQ(grassmannian_perm(Partition({2, 1}), 2, 4), P({2, 4, 1, 3}));
    EXPECT_EQ(grassmannian_perm(Partition(), 2, 4), Permutation::identity(4));
    EXPECT_EQ(grassmannian_perm(Partition({1}), 1, 2), P({2, 1}));
}

TEST(Grassmannian, Errors) {
    EXPECT_THROW(code_of(P({3, 1, 2}), 2), NotGrassmannian);
    EXPECT_THROW(code_of(P({3, 2, 1}), 1), NotGrassmannian);
    EXPECT_THROW(grassmannian_perm(Partition({3}), 2, 4), DoesNotFit);
    EXPECT_THROW(grassmannian_perm(Partition({1, 1, 1}), 2, 4), DoesNotFit);
}

TEST(Grassmannian, BijectionProperties) {
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& lambda : enumerate_partitions_in_box(k, n - k)) {
                auto w = grassmannian_perm(lambda, k, n);
                EXPECT_EQ(code_of(w, k), lambda);
                EXPECT_EQ(w.length(), lambda.size());
            }
}
