#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "fibdens/enumeration.hpp"
#include "fibdens/fib_core.hpp"
#include "fibdens/statistics.hpp"
#include "oracle.hpp"

using namespace fibdens;

namespace {

constexpr double kBulk = 0.2763932022;

}  // namespace

// --- densities --------------------------------------------------------------

TEST(DensityFib, Examples)
{
    EXPECT_EQ(density_fib(3, 2), rational(1, 5));
    EXPECT_EQ(density_fib(3, 1), rational(2, 5));
    EXPECT_EQ(density_fib(1, 1), rational(1, 2));
    EXPECT_THROW(density_fib(3, 0), std::domain_error);
    EXPECT_THROW(density_fib(3, 4), std::domain_error);
}

TEST(DensityFib, MatchesEnumeration)
{
    for (std::int64_t n = 1; n <= 18; ++n) {
        for (std::int64_t i = 1; i <= n; ++i) {
            ASSERT_EQ(density_fib(n, i), brute_density(DeviceSpec::linear(n), i)) << n << ", " << i;
        }
    }
}

TEST(DensityFib, PalindromeAndBounds)
{
    for (std::int64_t n = 1; n <= 60; ++n) {
        for (std::int64_t i = 1; i <= n; ++i) {
            const Rational d = density_fib(n, i);
            EXPECT_EQ(d, density_fib(n, n + 1 - i));
            EXPECT_GE(d, Rational(0));
            EXPECT_LE(d, rational(1, 2));
        }
    }
}

TEST(DensityFibFloat, Examples)
{
    EXPECT_NEAR(density_fib_float(3, 2), 0.2, 1e-12);
    EXPECT_NEAR(density_fib_float(1, 1), 0.5, 1e-12);
    EXPECT_NEAR(density_fib_float(80, 40), density_fib(80, 40).to_double(), 1e-9);
    EXPECT_THROW(density_fib_float(kBinetMaxIndex, 1), std::range_error);
    EXPECT_NO_THROW(density_fib_float(kBinetMaxIndex - 2, 1));
}

TEST(DensityFibFloat, AgreesWithExactPath)
{
    for (std::int64_t n = 1; n <= 70; ++n) {
        for (std::int64_t i = 1; i <= n; ++i) {
            ASSERT_NEAR(density_fib_float(n, i), density_fib(n, i).to_double(), 1e-9) << n << ", " << i;
        }
        ASSERT_NEAR(density_lucas_float(n), density_lucas(n).to_double(), 1e-9) << n;
    }
}

TEST(LimitDensity, CellOneIsInverseAlphaSquared)
{
    // Fixed-i limit of F(i) F(n-i+1) / F(n+2); cell 1 tends to 1/alpha^2.
    EXPECT_NEAR(limit_density_cell(1), 0.381966011250105, 1e-12);
    EXPECT_NEAR(limit_density_cell(1), density_fib(60, 1).to_double(), 1e-12);
}

TEST(LimitDensity, MatchesExactLongDevice)
{
    for (std::int64_t i = 1; i <= 10; ++i) {
        EXPECT_NEAR(limit_density_cell(i), density_fib(60, i).to_double(), 1e-12) << i;
    }
}

TEST(LimitDensity, OscillatesAroundBulk)
{
    const double bulk = bulk_limit_density();
    for (std::int64_t i = 1; i <= 30; ++i) {
        const double diff = limit_density_cell(i) - bulk;
        EXPECT_EQ(diff > 0, i % 2 == 1) << i;
    }
    EXPECT_NEAR(limit_density_cell(200), kBulk, 1e-9);
    EXPECT_NEAR(limit_density_cell(200), bulk, 1e-12);
    EXPECT_THROW(limit_density_cell(0), std::domain_error);
}

TEST(BulkDensity, Value)
{
    EXPECT_NEAR(bulk_limit_density(), kBulk, 1e-9);
    const double s5 = std::sqrt(5.0);
    EXPECT_NEAR(bulk_limit_density(), (s5 - 1.0) / (2.0 * s5), 1e-12);
    EXPECT_NEAR(bulk_limit_density(), 0.5 - 0.5 / s5, 1e-12);
}

TEST(DensityLucas, Examples)
{
    EXPECT_EQ(density_lucas(4), rational(2, 7));
    EXPECT_EQ(density_lucas(1), Rational(0));
    EXPECT_EQ(density_lucas(10), rational(34, 123));
    EXPECT_EQ(density_lucas(10), brute_density(DeviceSpec::circular(10), 7));
    EXPECT_THROW(density_lucas(0), std::domain_error);
}

TEST(DensityLucas, MatchesEnumerationEveryCell)
{
    for (std::int64_t n = 1; n <= 18; ++n) {
        for (std::int64_t i = 1; i <= n; ++i) {
            ASSERT_EQ(density_lucas(n), brute_density(DeviceSpec::circular(n), i)) << n << ", " << i;
        }
    }
}

TEST(DensityLucasFloat, Examples)
{
    EXPECT_NEAR(density_lucas_float(4), 2.0 / 7.0, 1e-12);
    EXPECT_NEAR(density_lucas_float(200), kBulk, 1e-9);
    EXPECT_NEAR(density_lucas_float(1), 0.0, 1e-12);
    EXPECT_THROW(density_lucas_float(kBinetMaxIndex + 1), std::range_error);
}

// --- linear correlations ------------------------------------------------------

TEST(FibPairCounts, Examples)
{
    EXPECT_EQ(fib_pair_counts(3, 1, 2), (PairCounts{2, 1, 2, 0}));
    const PairCounts c = fib_pair_counts(6, 2, 5);
    EXPECT_EQ(c, (PairCounts{12, 4, 4, 1}));
    EXPECT_EQ(c.total(), fib(8));
    for (std::int64_t n = 2; n <= 20; ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            EXPECT_EQ(fib_pair_counts(n, k, k + 1).n11, 0);
        }
    }
    EXPECT_THROW(fib_pair_counts(5, 3, 3), std::domain_error);
    EXPECT_THROW(fib_pair_counts(5, 4, 2), std::domain_error);
    EXPECT_THROW(fib_pair_counts(5, 1, 6), std::domain_error);
}

TEST(FibPairCounts, MatchesEnumeration)
{
    for (std::int64_t n = 2; n <= 16; ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            for (std::int64_t l = k + 1; l <= n; ++l) {
                ASSERT_EQ(fib_pair_counts(n, k, l), brute_pair_counts(DeviceSpec::linear(n), k, l))
                    << n << ", " << k << ", " << l;
            }
        }
    }
}

TEST(CorrFib, Examples)
{
    const auto r = corr_fib(3, 1, 2);
    EXPECT_EQ(r.exact, rational(-1, 5));
    EXPECT_DOUBLE_EQ(r.approx, -0.2);
    EXPECT_EQ(r.counts, (PairCounts{2, 1, 2, 0}));
    EXPECT_EQ(corr_fib(10, 3, 4).exact, rational(-1, 8));
    EXPECT_EQ(corr_fib(7, 4, 4).exact, Rational(1));
    EXPECT_THROW(corr_fib(5, 3, 2), std::domain_error);
    EXPECT_THROW(corr_fib(5, 0, 2), std::domain_error);
}

TEST(CorrFib, MatchesEnumeration)
{
    for (std::int64_t n = 1; n <= 16; ++n) {
        for (std::int64_t k = 1; k <= n; ++k) {
            for (std::int64_t l = k; l <= n; ++l) {
                const auto r = corr_fib(n, k, l);
                ASSERT_EQ(r.exact, brute_correlation(DeviceSpec::linear(n), k, l)) << n << ", " << k << ", " << l;
                ASSERT_EQ(r.exact, Rational(r.counts.agreement(), fib(n + 2)));
                ASSERT_GE(r.exact, Rational(-1));
                ASSERT_LE(r.exact, Rational(1));
            }
        }
    }
}

TEST(CorrFib, SelfCorrelationIsOne)
{
    for (std::int64_t n = 1; n <= 30; ++n) {
        for (std::int64_t k = 1; k <= n; ++k) {
            const auto r = corr_fib(n, k, k);
            ASSERT_EQ(r.exact, Rational(1));
            ASSERT_EQ(r.counts.n01, 0);
            ASSERT_EQ(r.counts.n10, 0);
        }
    }
}

TEST(CorrFibAdjacent, Examples)
{
    EXPECT_EQ(corr_fib_adjacent(3, 1), rational(-1, 5));
    EXPECT_EQ(corr_fib_adjacent(10, 3), rational(-1, 8));
    EXPECT_EQ(corr_fib_adjacent(2, 1), rational(-1, 3));
    EXPECT_THROW(corr_fib_adjacent(5, 5), std::domain_error);
}

TEST(CorrFibAdjacent, NonPositiveAndZeroOnlyInTheMiddleOfFourCells)
{
    // F(k) F(n-k) = F(k-1) F(n-k-1) only when k = n - k = 2.
    EXPECT_EQ(corr_fib_adjacent(4, 2), Rational(0));
    EXPECT_EQ(brute_correlation(DeviceSpec::linear(4), 2, 3), Rational(0));
    for (std::int64_t n = 2; n <= 30; ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            const Rational c = corr_fib_adjacent(n, k);
            ASSERT_EQ(c, corr_fib(n, k, k + 1).exact) << n << ", " << k;
            if (n == 4 && k == 2) {
                continue;
            }
            ASSERT_LT(c, Rational(0)) << n << ", " << k;
        }
    }
}

TEST(CorrFibReflect, Symmetry)
{
    EXPECT_EQ(corr_fib_reflect(5, 1, 3), corr_fib(5, 1, 3).exact);
    EXPECT_EQ(corr_fib(5, 1, 3).exact, corr_fib(5, 3, 5).exact);
    EXPECT_EQ(corr_fib(3, 1, 2).exact, rational(-1, 5));
    EXPECT_EQ(corr_fib(3, 2, 3).exact, rational(-1, 5));
    EXPECT_EQ(corr_fib_reflect(5, 2, 4), corr_fib(5, 2, 4).exact);
    for (std::int64_t n = 1; n <= 16; ++n) {
        for (std::int64_t k = 1; k <= n; ++k) {
            for (std::int64_t l = k; l <= n; ++l) {
                ASSERT_EQ(corr_fib_reflect(n, k, l), corr_fib(n, k, l).exact) << n << ", " << k << ", " << l;
            }
        }
    }
}

// --- ring correlations --------------------------------------------------------

TEST(LucasPairCounts, Examples)
{
    EXPECT_EQ(lucas_pair_counts(4, 2), (PairCounts{3, 2, 2, 0}));
    const PairCounts c = lucas_pair_counts(7, 4);
    EXPECT_EQ(c, (PairCounts{15, 6, 6, 2}));
    EXPECT_EQ(c.total(), lucas(7));
    for (std::int64_t n = 2; n <= 20; ++n) {
        EXPECT_EQ(lucas_pair_counts(n, 2).n11, 0);
    }
    EXPECT_THROW(lucas_pair_counts(7, 1), std::domain_error);
    EXPECT_THROW(lucas_pair_counts(7, 5), std::domain_error);
    EXPECT_NO_THROW(lucas_pair_counts(8, 5));
}

TEST(LucasPairCounts, MatchesEnumeration)
{
    for (std::int64_t n = 2; n <= 18; ++n) {
        for (std::int64_t k = 2; k <= lucas_half_range(n); ++k) {
            ASSERT_EQ(lucas_pair_counts(n, k), brute_pair_counts(DeviceSpec::circular(n), 1, k)) << n << ", " << k;
        }
    }
}

TEST(CorrLucas, Examples)
{
    EXPECT_EQ(corr_lucas(4, 2).exact, rational(-1, 7));
    EXPECT_EQ(corr_lucas(5, 3).exact, rational(3, 11));
    EXPECT_EQ(corr_lucas(10, 3).exact, rational(13, 41));
    EXPECT_EQ(corr_lucas(10, 3).counts, (PairCounts{68, 21, 21, 13}));
    EXPECT_THROW(corr_lucas(5, 6), std::domain_error);
    EXPECT_THROW(corr_lucas(5, 0), std::domain_error);
}

TEST(CorrLucas, MatchesEnumerationIncludingFoldedCells)
{
    for (std::int64_t n = 1; n <= 18; ++n) {
        for (std::int64_t k = 1; k <= n; ++k) {
            const auto r = corr_lucas(n, k);
            ASSERT_EQ(r.exact, brute_correlation(DeviceSpec::circular(n), 1, k)) << n << ", " << k;
            ASSERT_EQ(r.counts.total(), lucas(n));
        }
    }
}

TEST(CorrLucas, SelfCorrelationIsOne)
{
    for (std::int64_t n = 1; n <= 30; ++n) {
        EXPECT_EQ(corr_lucas(n, 1).exact, Rational(1)) << n;
    }
}

TEST(CorrLucasNamed, ExamplesAndSigns)
{
    EXPECT_EQ(corr_lucas_nn(4), rational(-1, 7));
    EXPECT_EQ(corr_lucas_nnn(5), rational(3, 11));
    EXPECT_EQ(corr_lucas_nnn(6), rational(1, 3));
    EXPECT_EQ(corr_lucas_nnn(6), brute_correlation(DeviceSpec::circular(6), 1, 3));
    EXPECT_THROW(corr_lucas_nn(3), std::domain_error);
    EXPECT_THROW(corr_lucas_nnn(4), std::domain_error);
    for (std::int64_t n = 5; n <= 30; ++n) {
        EXPECT_LT(corr_lucas_nn(n), Rational(0)) << n;
        EXPECT_GT(corr_lucas_nnn(n), Rational(0)) << n;
        EXPECT_EQ(corr_lucas_nn(n), corr_lucas(n, 2).exact) << n;
        EXPECT_EQ(corr_lucas_nnn(n), corr_lucas(n, 3).exact) << n;
    }
}

// --- profiles -------------------------------------------------------------------

TEST(DensityProfile, FigureOneShape)
{
    const auto profile = density_profile(80, Topology::Linear);
    ASSERT_EQ(profile.rows.size(), 80U);
    const double bulk = bulk_limit_density();
    for (std::int64_t i = 1; i <= 80; ++i) {
        const auto& row = profile.rows[static_cast<std::size_t>(i - 1)];
        EXPECT_EQ(row.cell, i);
        EXPECT_EQ(row.exact, density_fib(80, i));
        EXPECT_NEAR(row.approx, row.exact.to_double(), 1e-9);
        EXPECT_EQ(row.exact, profile.rows[static_cast<std::size_t>(80 - i)].exact);
        if (i >= 20 && i <= 60) {
            EXPECT_NEAR(row.approx, kBulk, 1e-6);
        }
        if (i <= 10) {
            EXPECT_EQ(row.approx - bulk > 0, i % 2 == 1) << i;
        }
    }
}

TEST(DensityProfile, RingRowsAreIdentical)
{
    const auto profile = density_profile(4, Topology::Circular);
    ASSERT_EQ(profile.rows.size(), 4U);
    for (const auto& row : profile.rows) {
        EXPECT_EQ(row.exact, rational(2, 7));
        EXPECT_NEAR(row.approx, 2.0 / 7.0, 1e-12);
    }
}

TEST(DensityProfile, BeyondBinetRangeFallsBackToExact)
{
    const auto profile = density_profile(1500, Topology::Linear);
    EXPECT_EQ(profile.rows.size(), 1500U);
    EXPECT_NEAR(profile.rows[749].approx, kBulk, 1e-9);
}
