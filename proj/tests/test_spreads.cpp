#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "flagcode/companion.hpp"
#include "flagcode/spreads.hpp"
#include "oracle.hpp"

using namespace flagcode;

namespace {

// Every nonzero vector lies in exactly one member, counted over explicit spans.
void expect_partition(const Spread& s) {
    oracle::OField o(*s.field());
    std::map<std::uint64_t, int> hits;
    for (const auto& g : s.generators())
        for (auto v : oracle::span(o, g)) ++hits[v];
    const auto total = oracle::ipow(o.q, s.n());
    EXPECT_EQ(hits.size(), total);
    for (const auto& [v, c] : hits) {
        if (v == 0) continue;
        ASSERT_EQ(c, 1) << "vector " << v;
    }
}

}  // namespace

TEST(BuildSpread, PlanarF2MembersInOrder) {
    auto f = Field::create(2, 1);
    Matrix M = companion_matrix(f, Poly{1, 1, 1});
    Matrix I = Matrix::identity(f, 2), Z(f, 2, 2);
    auto s = build_spread(f, 2, 4);
    ASSERT_EQ(s.size(), 5u);
    const std::vector<Matrix> expected = {hconcat(I, M), hconcat(I, power(M, 2)), hconcat(I, I), hconcat(I, Z),
                                          hconcat(Z, I)};
    EXPECT_EQ(s.generators(), expected);
    EXPECT_EQ(power(M, 3), I);
}

TEST(BuildSpread, ProjectiveLine) {
    auto f = Field::create(2, 1);
    auto s = build_spread(f, 1, 2);
    EXPECT_EQ(s.size(), 3u);
    EXPECT_TRUE(verify_spread(s).ok());
}

TEST(BuildSpread, F2Dimension3In6) {
    auto f = Field::create(2, 1);
    auto s = build_spread(f, 3, 6);
    EXPECT_EQ(s.size(), 9u);
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) EXPECT_EQ(intersection_dim(s.members()[a], s.members()[b]), 0u);
    expect_partition(s);
}

TEST(BuildSpread, NonPlanarSpreads) {
    auto f = Field::create(2, 1);
    for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {1, 4}, {2, 6}, {1, 5}}) {
        auto s = build_spread(f, k, n);
        EXPECT_EQ(s.size(), partial_spread_bound(2, k, n));
        EXPECT_TRUE(verify_spread(s).ok()) << k << " in " << n;
        expect_partition(s);
    }
}

TEST(BuildSpread, RejectsNonDivisors) {
    auto f = Field::create(2, 1);
    for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 5}, {0, 4}, {4, 4}, {3, 4}}) {
        try {
            build_spread(f, k, n);
            FAIL() << k << " " << n;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NotDivisor);
        }
    }
}

TEST(VerifySpread, PassesAndReportsViolation) {
    auto f = Field::create(2, 1);
    auto s = build_spread(f, 2, 4);
    auto ok = verify_spread(s);
    EXPECT_TRUE(ok.ok());
    EXPECT_TRUE(ok.coverage_checked);

    // replace the last member by a plane meeting the first in a line
    Matrix overlap = fixtures::unit_rows(f, 4, {{0, 3}, {2}});
    auto broken = verify_spread(s.with_generator(4, overlap));
    EXPECT_FALSE(broken.ok());
    bool found = false;
    for (const auto& v : broken.violations)
        if (v.kind == SpreadViolation::Kind::NontrivialIntersection && v.first == 0 && v.second == 4) found = true;
    EXPECT_TRUE(found);
    EXPECT_FALSE(broken.violations.front().describe().empty());
}

TEST(VerifySpread, F3Planar) {
    auto f = Field::create(3, 1);
    auto s = build_spread(f, 2, 4);
    EXPECT_EQ(s.size(), 10u);
    EXPECT_TRUE(verify_spread(s).ok());
    expect_partition(s);
}

TEST(VerifySpread, ExtensionFieldPlanar) {
    auto f = Field::create(2, 2);
    auto s = build_spread(f, 2, 4);
    EXPECT_EQ(s.size(), 17u);
    EXPECT_TRUE(verify_spread(s).ok());
}

TEST(PartialSpreadBound, Values) {
    EXPECT_EQ(partial_spread_bound(2, 2, 4), 5u);
    EXPECT_EQ(partial_spread_bound(2, 2, 5), 10u);
    for (std::uint64_t q : {2u, 3u, 4u})
        for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(partial_spread_bound(q, 1, n), (oracle::ipow(q, n) - 1) / (q - 1));
}

TEST(SpreadsProperty, ExhaustiveCoverage) {
    auto f2 = Field::create(2, 1);
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t k = 1; k < n; ++k) {
            if (n % k) continue;
            auto s = build_spread(f2, k, n);
            EXPECT_EQ(s.size(), partial_spread_bound(2, k, n));
            for (const auto& g : s.generators()) EXPECT_EQ(rank(g), k);
            auto counts = cover_counts(s);
            for (std::size_t i = 1; i < counts.size(); ++i) ASSERT_EQ(counts[i], 1u) << k << "|" << n;
            EXPECT_EQ(counts[0], s.size());
        }
    auto f3 = Field::create(3, 1);
    for (std::size_t k : {1u, 2u}) {
        auto s = build_spread(f3, k, 4);
        EXPECT_TRUE(verify_spread(s).ok());
        expect_partition(s);
    }
}
