#pragma once

#include <cstdint>
#include <utility>

#include "fibdens/rational.hpp"

namespace fibdens {

/// Index into the Fibonacci sequence. The only negative index admitted is
/// -1, with F(-1) = 1 so that F(1) = F(0) + F(-1) keeps holding.
class FibIndex {
public:
    FibIndex(std::int64_t value);  // NOLINT(google-explicit-constructor); throws std::domain_error below -1
    std::int64_t value() const { return value_; }

private:
    std::int64_t value_;
};

/// Largest n for which the Binet evaluations stay inside double range.
inline constexpr std::int64_t kBinetMaxIndex = 1400;

struct GoldenConstants {
    double sqrt5;
    double alpha;  // (1 + sqrt5) / 2
    double beta;   // (1 - sqrt5) / 2
};

const GoldenConstants& golden();

/// F(n) by fast doubling.
BigInt fib(FibIndex n);

/// (F(n), F(n+1)) for n >= 0.
std::pair<BigInt, BigInt> fib_pair(std::int64_t n);

/// L(n) for n >= 0, with L(0) = 2, L(1) = 1.
BigInt lucas(std::int64_t n);

/// Binet evaluation (alpha^n - beta^n) / sqrt5. Throws std::range_error
/// above kBinetMaxIndex and std::domain_error for negative n.
double fib_float(std::int64_t n);

/// alpha^n + beta^n, same domain as fib_float.
double lucas_float(std::int64_t n);

}  // namespace fibdens
