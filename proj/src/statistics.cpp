#include "fibdens/statistics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fibdens/fib_core.hpp"

namespace fibdens {

namespace {

void require_length(std::int64_t n)
{
    if (n < 1) {
        throw std::domain_error("device length must be at least 1, got " + std::to_string(n));
    }
}

void require_cell(std::int64_t n, std::int64_t i)
{
    require_length(n);
    if (i < 1 || i > n) {
        throw std::domain_error("cell index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
}

// Binet difference alpha^m - beta^m without the 1/sqrt5 factor.
double binet_diff(std::int64_t m)
{
    const auto& g = golden();
    const auto e = static_cast<double>(m);
    return std::pow(g.alpha, e) - std::pow(g.beta, e);
}

void require_binet(std::int64_t top, const char* what)
{
    if (top > kBinetMaxIndex) {
        throw std::range_error(std::string(what) + ": Binet powers overflow double beyond index " +
                               std::to_string(kBinetMaxIndex));
    }
}

// Counts for (sigma_1, sigma_k) on a ring, valid for 1 <= k <= ceil((n+1)/2).
PairCounts ring_counts(std::int64_t n, std::int64_t k)
{
    PairCounts c;
    c.n00 = fib(n - k + 2) * fib(k);
    c.n11 = fib(n - k) * fib(k - 2);
    c.n01 = fib(n - k + 1) * fib(k - 1);
    c.n10 = c.n01;
    return c;
}

// Counts for (sigma_k, sigma_l) on a chain, valid for 1 <= k <= l <= n.
PairCounts chain_counts(std::int64_t n, std::int64_t k, std::int64_t l)
{
    PairCounts c;
    c.n00 = fib(k + 1) * fib(l - k + 1) * fib(n - l + 2);
    c.n11 = fib(k) * fib(l - k - 1) * fib(n - l + 1);
    c.n01 = fib(k + 1) * fib(l - k) * fib(n - l + 1);
    c.n10 = fib(k) * fib(l - k) * fib(n - l + 2);
    return c;
}

CorrelationResult make_result(PairCounts counts, const BigInt& total)
{
    CorrelationResult r;
    r.exact = Rational(counts.agreement(), total);
    r.approx = r.exact.to_double();
    r.counts = std::move(counts);
    return r;
}

}  // namespace

Rational density_fib(std::int64_t n, std::int64_t i)
{
    require_cell(n, i);
    return Rational(fib(i) * fib(n - i + 1), fib(n + 2));
}

double density_fib_float(std::int64_t n, std::int64_t i)
{
    require_cell(n, i);
    require_binet(n + 2, "density_fib_float");
    return binet_diff(i) * binet_diff(n - i + 1) / (golden().sqrt5 * binet_diff(n + 2));
}

double limit_density_cell(std::int64_t i)
{
    if (i < 1) {
        throw std::domain_error("limit_density_cell: cell index must be at least 1");
    }
    const auto& g = golden();
    return (1.0 - std::pow(g.beta / g.alpha, static_cast<double>(i))) / (g.alpha * g.sqrt5);
}

double bulk_limit_density()
{
    const auto& g = golden();
    return 1.0 / (g.alpha * g.sqrt5);
}

Rational density_lucas(std::int64_t n)
{
    require_length(n);
    return Rational(fib(n - 1), lucas(n));
}

double density_lucas_float(std::int64_t n)
{
    require_length(n);
    require_binet(n, "density_lucas_float");
    return binet_diff(n - 1) / (golden().sqrt5 * lucas_float(n));
}

PairCounts fib_pair_counts(std::int64_t n, std::int64_t k, std::int64_t l)
{
    require_cell(n, k);
    require_cell(n, l);
    if (k >= l) {
        throw std::domain_error("fib_pair_counts: requires k < l, got k = " + std::to_string(k) +
                                ", l = " + std::to_string(l));
    }
    return chain_counts(n, k, l);
}

CorrelationResult corr_fib(std::int64_t n, std::int64_t k, std::int64_t l)
{
    require_cell(n, k);
    require_cell(n, l);
    if (k > l) {
        throw std::domain_error("corr_fib: requires k <= l, got k = " + std::to_string(k) +
                                ", l = " + std::to_string(l));
    }
    return make_result(chain_counts(n, k, l), fib(n + 2));
}

Rational corr_fib_adjacent(std::int64_t n, std::int64_t k)
{
    require_cell(n, k);
    if (k == n) {
        throw std::domain_error("corr_fib_adjacent: cell " + std::to_string(k) + " has no right neighbour");
    }
    return Rational(fib(k - 1) * fib(n - k - 1) - fib(k) * fib(n - k), fib(n + 2));
}

Rational corr_fib_reflect(std::int64_t n, std::int64_t k, std::int64_t l)
{
    require_cell(n, k);
    require_cell(n, l);
    return corr_fib(n, n + 1 - l, n + 1 - k).exact;
}

std::int64_t lucas_half_range(std::int64_t n)
{
    return (n + 2) / 2;
}

PairCounts lucas_pair_counts(std::int64_t n, std::int64_t k)
{
    require_length(n);
    if (k < 2 || k > lucas_half_range(n)) {
        throw std::domain_error("lucas_pair_counts: k = " + std::to_string(k) + " outside 2.." +
                                std::to_string(lucas_half_range(n)));
    }
    return ring_counts(n, k);
}

CorrelationResult corr_lucas(std::int64_t n, std::int64_t k)
{
    require_cell(n, k);
    const std::int64_t folded = k > lucas_half_range(n) ? n + 2 - k : k;
    return make_result(ring_counts(n, folded), lucas(n));
}

Rational corr_lucas_nn(std::int64_t n)
{
    if (n < 4) {
        throw std::domain_error("corr_lucas_nn: requires n >= 4");
    }
    return Rational(fib(n - 2) - fib(n - 1), lucas(n));
}

Rational corr_lucas_nnn(std::int64_t n)
{
    if (n < 5) {
        throw std::domain_error("corr_lucas_nnn: requires n >= 5");
    }
    return Rational(3 * fib(n - 3), lucas(n));
}

DensityProfile density_profile(std::int64_t n, Topology topology)
{
    require_length(n);
    DensityProfile profile{n, topology, {}};
    profile.rows.reserve(static_cast<std::size_t>(n));
    const bool binet = (topology == Topology::Linear ? n + 2 : n) <= kBinetMaxIndex;
    if (topology == Topology::Circular) {
        const Rational exact = density_lucas(n);
        const double approx = binet ? density_lucas_float(n) : exact.to_double();
        for (std::int64_t i = 1; i <= n; ++i) {
            profile.rows.push_back({i, exact, approx});
        }
        return profile;
    }
    for (std::int64_t i = 1; i <= n; ++i) {
        Rational exact = density_fib(n, i);
        const double approx = binet ? density_fib_float(n, i) : exact.to_double();
        profile.rows.push_back({i, std::move(exact), approx});
    }
    return profile;
}

}  // namespace fibdens
