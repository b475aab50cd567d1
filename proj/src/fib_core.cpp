#include "fibdens/fib_core.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fibdens {

FibIndex::FibIndex(std::int64_t value) : value_(value)
{
    if (value < -1) {
        throw std::domain_error("fib: index " + std::to_string(value) + " is below -1");
    }
}

const GoldenConstants& golden()
{
    static const GoldenConstants constants = [] {
        const double s = std::sqrt(5.0);
        return GoldenConstants{s, (1.0 + s) / 2.0, (1.0 - s) / 2.0};
    }();
    return constants;
}

std::pair<BigInt, BigInt> fib_pair(std::int64_t n)
{
    if (n < 0) {
        throw std::domain_error("fib_pair: negative index");
    }
    // Walk the bits of n from the top:
    //   F(2k)   = F(k) * (2 F(k+1) - F(k))
    //   F(2k+1) = F(k)^2 + F(k+1)^2
    BigInt a = 0;  // F(k)
    BigInt b = 1;  // F(k+1)
    const auto bits = static_cast<std::uint64_t>(n);
    for (int shift = std::bit_width(bits) - 1; shift >= 0; --shift) {
        BigInt even = a * (2 * b - a);
        BigInt odd = a * a + b * b;
        if ((bits >> shift) & 1U) {
            a = std::move(odd);
            b = even + a;
        } else {
            a = std::move(even);
            b = std::move(odd);
        }
    }
    return {std::move(a), std::move(b)};
}

BigInt fib(FibIndex n)
{
    if (n.value() == -1) {
        return 1;
    }
    return fib_pair(n.value()).first;
}

BigInt lucas(std::int64_t n)
{
    if (n < 0) {
        throw std::domain_error("lucas: negative index " + std::to_string(n));
    }
    auto [f, f_next] = fib_pair(n);
    return 2 * f_next - f;
}

namespace {

void check_binet_index(std::int64_t n, const char* what)
{
    if (n < 0) {
        throw std::domain_error(std::string(what) + ": negative index");
    }
    if (n > kBinetMaxIndex) {
        throw std::range_error(std::string(what) + ": index " + std::to_string(n) +
                               " overflows double (max " + std::to_string(kBinetMaxIndex) + ")");
    }
}

}  // namespace

double fib_float(std::int64_t n)
{
    check_binet_index(n, "fib_float");
    const auto& g = golden();
    const auto e = static_cast<double>(n);
    return (std::pow(g.alpha, e) - std::pow(g.beta, e)) / g.sqrt5;
}

double lucas_float(std::int64_t n)
{
    check_binet_index(n, "lucas_float");
    const auto& g = golden();
    const auto e = static_cast<double>(n);
    return std::pow(g.alpha, e) + std::pow(g.beta, e);
}

}  // namespace fibdens
