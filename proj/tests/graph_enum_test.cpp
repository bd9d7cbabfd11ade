#include <gtest/gtest.h>

#include "distinct_congruence/graph_enum.hpp"
#include "distinct_congruence/series.hpp"
#include "support/brute.hpp"

namespace dc = distinct_congruence;
using dc::ExactInt;
using dc::GraphCountTable;
using dc::Rational;

namespace {

const brute::GraphCensus& census5() {
    static const auto c = brute::census(5);
    return c;
}

long long census_connected(int e, int k) {
    auto it = census5().connected.find({e, k});
    return it == census5().connected.end() ? 0 : it->second;
}

long long census_components(int c, int e, int k) {
    auto it = census5().by_components.find({c, e, k});
    return it == census5().by_components.end() ? 0 : it->second;
}

}  // namespace

TEST(ConnectedCounts, Examples) {
    ASSERT_EQ(census_connected(2, 3), 3);
    ASSERT_EQ(census_connected(3, 3), 1);
    const auto t = GraphCountTable::connected_counts(4);
    EXPECT_EQ(t.gprime(2, 3), 3);
    EXPECT_EQ(t.gprime(3, 3), 1);
    EXPECT_EQ(t.gprime(0, 1), 1);
    EXPECT_FALSE(t.has_components());
    EXPECT_THROW(t.g(1, 0, 1), dc::UsageError);
}

TEST(ConnectedCounts, RangeChecks) {
    EXPECT_THROW(GraphCountTable::connected_counts(0), dc::UsageError);
    EXPECT_THROW(GraphCountTable::connected_counts(31), dc::UsageError);
    EXPECT_THROW(GraphCountTable::connected_counts(5, 4), dc::UsageError);
    const auto t = GraphCountTable::connected_counts(3);
    EXPECT_THROW(t.gprime(0, 4), dc::UsageError);
    EXPECT_THROW(t.gprime(0, 0), dc::UsageError);
}

TEST(ConnectedCounts, ZeroOutsideTreeToCompleteRange) {
    const auto t = GraphCountTable::connected_counts(7);
    for (int k = 1; k <= 7; ++k) {
        for (int e = -1; e < k - 1; ++e) EXPECT_EQ(t.gprime(e, k), 0);
        EXPECT_EQ(t.gprime(static_cast<std::int64_t>(GraphCountTable::max_edges(k)) + 1, k), 0);
        EXPECT_GT(t.gprime(k - 1, k), 0);
    }
}

TEST(ConnectedCounts, TreesFollowCayley) {
    const auto t = GraphCountTable::connected_counts(9);
    for (int k = 2; k <= 9; ++k) {
        EXPECT_EQ(t.gprime(k - 1, k), boost::multiprecision::pow(ExactInt(k), k - 2));
    }
}

TEST(ComponentCounts, Examples) {
    ASSERT_EQ(census_components(2, 1, 3), 3);
    const auto t = GraphCountTable::component_counts(4);
    EXPECT_EQ(t.g(2, 1, 3), 3);
    EXPECT_EQ(t.g(3, 0, 3), 1);
    for (int e = 0; e <= 6; ++e) EXPECT_EQ(t.g(1, e, 4), t.gprime(e, 4));
}

TEST(ComponentCounts, MatchEdgeSubsetEnumeration) {
    const auto t = GraphCountTable::component_counts(5);
    for (int k = 1; k <= 5; ++k) {
        const int top = static_cast<int>(GraphCountTable::max_edges(k));
        for (int e = 0; e <= top; ++e) {
            ASSERT_EQ(t.gprime(e, k), census_connected(e, k)) << "e=" << e << " k=" << k;
            for (int c = 1; c <= k; ++c)
                ASSERT_EQ(t.g(c, e, k), census_components(c, e, k)) << c << "," << e << "," << k;
        }
    }
}

TEST(ComponentCounts, RowSumsArePowersOfTwo) {
    const auto t = GraphCountTable::component_counts(9);
    for (int k = 1; k <= 9; ++k) {
        ExactInt total = 0;
        for (int c = 1; c <= k; ++c)
            for (std::uint64_t e = 0; e <= GraphCountTable::max_edges(k); ++e)
                total += t.g(c, static_cast<std::int64_t>(e), k);
        EXPECT_EQ(total, ExactInt(1) << GraphCountTable::max_edges(k));
    }
}

TEST(ComponentCounts, ConnectedTotals) {
    const long long expected[] = {1, 1, 4, 38, 728};
    const auto t = GraphCountTable::connected_counts(5);
    for (int k = 1; k <= 5; ++k) {
        long long census_total = 0;
        ExactInt table_total = 0;
        for (int e = 0; e <= static_cast<int>(GraphCountTable::max_edges(k)); ++e) {
            census_total += census_connected(e, k);
            table_total += t.gprime(e, k);
        }
        EXPECT_EQ(census_total, expected[k - 1]);
        EXPECT_EQ(table_total, expected[k - 1]);
    }
}

TEST(AltSumConnected, Examples) {
    const auto t = GraphCountTable::connected_counts(4);
    EXPECT_EQ(dc::alt_sum_connected(t, 1), 1);
    EXPECT_EQ(dc::alt_sum_connected(t, 3), 2);
    EXPECT_EQ(dc::alt_sum_connected(t, 4), -6);
    EXPECT_THROW(dc::alt_sum_connected(t, 5), dc::UsageError);
}

TEST(AltSumConnected, ClosedForm) {
    const auto t = GraphCountTable::connected_counts(12);
    for (int k = 2; k <= 12; ++k) {
        EXPECT_EQ(dc::alt_sum_connected(t, k), dc::sign_pow(k + 1) * dc::factorial(k - 1)) << k;
    }
}

TEST(AltSumAll, Examples) {
    const auto t = GraphCountTable::component_counts(3);
    EXPECT_EQ(dc::alt_sum_all(t, 2, 5), 20);
    EXPECT_EQ(dc::alt_sum_all(t, 1, 7), 7);
    EXPECT_EQ(dc::alt_sum_all(t, 3, 3), 6);
    EXPECT_THROW(dc::alt_sum_all(t, 4, 3), dc::UsageError);
    EXPECT_THROW(dc::alt_sum_all(t, 2, 0), dc::UsageError);
}

TEST(AltSumAll, ClosedForm) {
    const auto t = GraphCountTable::component_counts(10);
    for (int k = 1; k <= 10; ++k)
        for (int n = 1; n <= 12; ++n)
            EXPECT_EQ(dc::alt_sum_all(t, k, n), dc::factorial(k) * dc::binomial(n, k)) << k << "," << n;
}

// log F(z, 1+y) and F(z, 1+y)^t read as exponential generating functions.
TEST(GeneratingFunctions, BivariateIdentitiesThroughOrderSix) {
    constexpr int K = 6;
    const auto t = GraphCountTable::component_counts(K);
    const auto f = dc::deformed_exp_shifted(K);
    const auto log_f = dc::series_log(f);
    for (int k = 1; k <= K; ++k) {
        const Rational kfact(dc::factorial(k));
        for (std::uint64_t e = 0; e <= f.y_order(); ++e) {
            EXPECT_EQ(log_f.at(e, k) * kfact, Rational(t.gprime(static_cast<std::int64_t>(e), k)));
        }
    }
    for (std::uint64_t power = 1; power <= 4; ++power) {
        const auto fp = dc::series_pow(f, power);
        for (int k = 1; k <= K; ++k) {
            const Rational kfact(dc::factorial(k));
            for (std::uint64_t e = 0; e <= f.y_order(); ++e) {
                ExactInt expected = 0;
                ExactInt tc = 1;
                for (int c = 1; c <= k; ++c) {
                    tc *= power;
                    expected += tc * t.g(c, static_cast<std::int64_t>(e), k);
                }
                EXPECT_EQ(fp.at(e, k) * kfact, Rational(expected)) << power << "," << e << "," << k;
            }
        }
    }
}
