#include <random>
#include <set>

#include <gtest/gtest.h>

#include "gr/core.hpp"
#include "oracle.hpp"

namespace {

using gr::BlockSpec;
using gr::CycleType;
using gr::Permutation;

const char* kRunningExample = "18 17 15 14 13 12 11 9 1 2 3 4 5 6 7 8 10 16";

std::vector<int> images(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

TEST(ParsePermutation, Basics) {
    EXPECT_EQ(images(gr::parse_permutation("2 1")), (std::vector<int>{2, 1}));
    EXPECT_EQ(gr::parse_permutation("1 2 3"), Permutation::identity(3));
    auto p = gr::parse_permutation(kRunningExample);
    EXPECT_EQ(p.size(), 18);
    EXPECT_EQ(p(1), 18);
    EXPECT_EQ(p(18), 16);
}

TEST(ParsePermutation, Errors) {
    EXPECT_THROW(gr::parse_permutation(""), gr::InvalidInput);
    EXPECT_THROW(gr::parse_permutation("   "), gr::InvalidInput);
    EXPECT_THROW(gr::parse_permutation("1 1"), gr::InvalidInput);
    EXPECT_THROW(gr::parse_permutation("1 3"), gr::InvalidInput);
    EXPECT_THROW(gr::parse_permutation("0 1"), gr::InvalidInput);
    EXPECT_THROW(gr::parse_permutation("1 x"), gr::InvalidInput);
    EXPECT_THROW(gr::parse_permutation("1 2.5"), gr::InvalidInput);
}

TEST(ParsePermutation, FormatRoundTripNormalizesWhitespace) {
    EXPECT_EQ(gr::format_permutation(gr::parse_permutation("  3\t1   2\n")), "3 1 2");
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), rng);
        Permutation p(v);
        EXPECT_EQ(gr::parse_permutation(gr::format_permutation(p)), p);
    }
}

TEST(BlockSpec, DerivedBoundaries) {
    BlockSpec b({8, 10}, {1});
    EXPECT_EQ(b.n(), 18);
    EXPECT_EQ(b.k(), 2);
    EXPECT_EQ(b.block_of(8), 1);
    EXPECT_EQ(b.block_of(9), 2);
    EXPECT_EQ(b.start(2), 9);
    EXPECT_TRUE(b.is_descending(1));
    EXPECT_FALSE(b.is_descending(2));
    EXPECT_EQ(b.complemented().descending_set(), std::vector<int>{2});
}

TEST(BlockSpec, RejectsBadInput) {
    EXPECT_THROW(BlockSpec({}), gr::InvalidInput);
    EXPECT_THROW(BlockSpec({2, 0}), gr::InvalidInput);
    EXPECT_THROW(BlockSpec({2, 2}, {3}), gr::InvalidInput);
    EXPECT_THROW(BlockSpec({2, 2}, {0}), gr::InvalidInput);
}

TEST(BlockSpec, PermutedCarriesDirection) {
    BlockSpec b({2, 1, 3}, {1});
    std::vector<int> sigma{3, 1, 2};
    BlockSpec moved = b.permuted(sigma);
    EXPECT_EQ(std::vector<int>(moved.lengths().begin(), moved.lengths().end()), (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(moved.descending_set(), std::vector<int>{2});
}

TEST(CycleDecomposition, Examples) {
    using Cycles = std::vector<gr::Cycle>;
    EXPECT_EQ(gr::cycle_decomposition(Permutation::identity(3)), (Cycles{{1}, {2}, {3}}));
    EXPECT_EQ(gr::cycle_decomposition(Permutation({2, 1, 3})), (Cycles{{1, 2}, {3}}));
    auto p = gr::parse_permutation(kRunningExample);
    EXPECT_EQ(gr::cycle_decomposition(p),
              (Cycles{{1, 18, 16, 8, 9}, {2, 17, 10}, {3, 15, 7, 11}, {4, 14, 6, 12}, {5, 13}}));
    EXPECT_EQ(gr::format_cycles(gr::cycle_decomposition(p)), "(1 18 16 8 9)(2 17 10)(3 15 7 11)(4 14 6 12)(5 13)");
}

TEST(CycleType, Examples) {
    EXPECT_EQ(gr::cycle_type(gr::parse_permutation(kRunningExample)), CycleType({5, 4, 4, 3, 2}));
    EXPECT_EQ(gr::cycle_type(Permutation::identity(4)), CycleType({1, 1, 1, 1}));
    EXPECT_EQ(gr::cycle_type(Permutation({2, 1, 3})), CycleType({2, 1}));
    EXPECT_EQ(CycleType({1, 3, 2}).to_string(), "(3,2,1)");
}

TEST(CycleType, ComplementSymmetry) {
    EXPECT_TRUE(CycleType({4, 1}).is_complement_symmetric());
    EXPECT_TRUE(CycleType({5, 3, 1}).is_complement_symmetric());
    EXPECT_FALSE(CycleType({2}).is_complement_symmetric());
    EXPECT_FALSE(CycleType({1, 1}).is_complement_symmetric());
    EXPECT_FALSE(CycleType({6, 1}).is_complement_symmetric());
    EXPECT_TRUE(CycleType({4, 4, 1}).is_complement_symmetric());
}

TEST(Partitions, CountsMatchPartitionNumbers) {
    const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 1; n < 10; ++n) EXPECT_EQ(gr::partitions_of(n).size(), p[n]) << n;
}

TEST(Classify, Examples) {
    auto c = gr::classify(gr::parse_permutation(kRunningExample), BlockSpec({8, 10}, {1}));
    EXPECT_TRUE(c.is_as);
    EXPECT_TRUE(c.is_derangement);
    EXPECT_FALSE(c.is_involution);

    c = gr::classify(Permutation::identity(5), BlockSpec({2, 3}));
    EXPECT_TRUE(c.is_as);
    EXPECT_FALSE(c.is_derangement);
    EXPECT_TRUE(c.is_involution);

    c = gr::classify(Permutation({2, 1, 4, 3}), BlockSpec({2, 2}, {1, 2}));
    EXPECT_TRUE(c.is_as);
    EXPECT_TRUE(c.is_derangement);
    EXPECT_TRUE(c.is_involution);

    EXPECT_THROW(gr::classify(Permutation::identity(3), BlockSpec({2, 2})), gr::InvalidInput);
}

TEST(EnumerateAS, Examples) {
    EXPECT_EQ(gr::as_permutations(BlockSpec({2})), std::vector<Permutation>{Permutation({1, 2})});
    EXPECT_EQ(gr::as_permutations(BlockSpec({1, 1})), (std::vector<Permutation>{Permutation({1, 2}), Permutation({2, 1})}));

    std::vector<Permutation> expected;
    for (auto s : {"2 1 4 3", "3 1 4 2", "4 1 3 2", "3 2 4 1", "4 2 3 1", "4 3 2 1"})
        expected.push_back(gr::parse_permutation(s));
    EXPECT_EQ(gr::as_permutations(BlockSpec({2, 2}, {1, 2})), expected);
}

TEST(EnumerateAS, LimitExceeded) {
    EXPECT_THROW(gr::as_permutations(BlockSpec({13})), gr::LimitExceeded);
    EXPECT_THROW(gr::as_permutations(BlockSpec({3, 3}), 5), gr::LimitExceeded);
}

// Stream length equals the multinomial for every composition up to n = 8,
// and membership agrees with classify.
TEST(EnumerateAS, MatchesOracleExhaustively) {
    for (int n = 1; n <= 8; ++n) {
        for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
            std::vector<int> a{1};
            for (int i = 0; i < n - 1; ++i) {
                if (cuts & (1u << i))
                    a.push_back(1);
                else
                    ++a.back();
            }
            const int k = static_cast<int>(a.size());
            // every S up to n = 6, one S per composition above that
            for (unsigned smask = 0; smask < (1u << k); ++smask) {
                if (n > 6 && smask != (cuts * 2654435761u) % (1u << k)) continue;
                std::set<int> s;
                std::vector<int> sv;
                for (int i = 0; i < k; ++i)
                    if (smask & (1u << i)) {
                        s.insert(i + 1);
                        sv.push_back(i + 1);
                    }
                BlockSpec b(a, sv);
                std::set<std::vector<int>> got;
                gr::for_each_as_permutation(b, [&](const Permutation& p) {
                    EXPECT_TRUE(gr::classify(p, b).is_as);
                    got.insert(images(p));
                });
                std::set<std::vector<int>> want;
                oracle::for_each_as(a, s, [&](const oracle::Images& p) { want.insert(p); });
                EXPECT_EQ(got, want) << b.to_string();
                EXPECT_EQ(got.size(), oracle::multinomial(a)) << b.to_string();
            }
        }
    }
}

TEST(Classify, AgreesWithDefinitionOverS4) {
    BlockSpec b({1, 3}, {2});
    oracle::for_each_permutation(4, [&](const oracle::Images& p) {
        EXPECT_EQ(gr::classify(Permutation(p), b).is_as, oracle::is_as(p, {1, 3}, {2}));
    });
}

TEST(CycleType, InvariantUnderConjugation) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<int> v(n), w(n);
        std::iota(v.begin(), v.end(), 1);
        std::iota(w.begin(), w.end(), 1);
        std::shuffle(v.begin(), v.end(), rng);
        std::shuffle(w.begin(), w.end(), rng);
        Permutation p(v), sigma(w);
        EXPECT_EQ(gr::cycle_type(sigma * p * sigma.inverse()), gr::cycle_type(p));
    }
}

}  // namespace
