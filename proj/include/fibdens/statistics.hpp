#pragma once

#include <cstdint>
#include <vector>

#include "fibdens/enumeration.hpp"
#include "fibdens/rational.hpp"

namespace fibdens {

// Closed-form occupation densities and pair correlations. Every exact
// result is a reduced Rational; the *_float variants evaluate the same
// quantities through Binet powers of the golden ratio and are advisory.
// Cells are 1-indexed.

/// Occupation density of cell i on a linear device: F(i) F(n-i+1) / F(n+2).
Rational density_fib(std::int64_t n, std::int64_t i);
/// Binet form of density_fib. Throws std::range_error when n + 2 > kBinetMaxIndex.
double density_fib_float(std::int64_t n, std::int64_t i);

/// Density of cell i as n grows without bound:
/// (1 - (beta/alpha)^i) / (alpha sqrt5). Cell 1 tends to 1/alpha^2.
double limit_density_cell(std::int64_t i);
/// 1 / (alpha sqrt5) = 0.2763932022...
double bulk_limit_density();

/// Density of every cell of a ring: F(n-1) / L(n).
Rational density_lucas(std::int64_t n);
double density_lucas_float(std::int64_t n);

/// Closed-form pair counts (sigma_k, sigma_l) on a linear device, k < l.
PairCounts fib_pair_counts(std::int64_t n, std::int64_t k, std::int64_t l);

struct CorrelationResult {
    Rational exact;
    double approx = 0.0;  // exact.to_double()
    PairCounts counts;     // closed-form, not enumerated
};

/// Correlation of cells k <= l on a linear device. k == l yields exactly 1
/// through F(-1) = 1; k > l is rejected.
CorrelationResult corr_fib(std::int64_t n, std::int64_t k, std::int64_t l);
/// Nearest-neighbour form -(F(k) F(n-k) - F(k-1) F(n-k-1)) / F(n+2), 1 <= k < n.
Rational corr_fib_adjacent(std::int64_t n, std::int64_t k);
/// corr_fib evaluated on the mirrored pair (n+1-l, n+1-k).
Rational corr_fib_reflect(std::int64_t n, std::int64_t k, std::int64_t l);

/// Largest k that the ring formulas take directly: ceil((n+1)/2).
std::int64_t lucas_half_range(std::int64_t n);

/// Closed-form pair counts (sigma_1, sigma_k) on a ring, 2 <= k <= ceil((n+1)/2).
PairCounts lucas_pair_counts(std::int64_t n, std::int64_t k);
/// Correlation of cell 1 with cell k on a ring, any 1 <= k <= n. Cells past
/// the half range are folded back with k -> n + 2 - k.
CorrelationResult corr_lucas(std::int64_t n, std::int64_t k);
/// (F(n-2) - F(n-1)) / L(n), n >= 4.
Rational corr_lucas_nn(std::int64_t n);
/// 3 F(n-3) / L(n), n >= 5.
Rational corr_lucas_nnn(std::int64_t n);

struct DensityRow {
    std::int64_t cell;
    Rational exact;
    double approx;
};

struct DensityProfile {
    std::int64_t n;
    Topology topology;
    std::vector<DensityRow> rows;  // ascending cell index
};

/// Per-cell density table. The approx column is the Binet evaluation while
/// n fits double range and the rounded exact value beyond that.
DensityProfile density_profile(std::int64_t n, Topology topology);

}  // namespace fibdens
