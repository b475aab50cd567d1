#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fibdens/enumeration.hpp"
#include "fibdens/statistics.hpp"

namespace fibdens::cli {

inline constexpr std::int64_t kVerifyDefaultMaxN = 18;
inline constexpr std::int64_t kVerifyMaxN = 25;

/// The closed forms under test. Defaults to the library implementations;
/// tests swap members out to check that a broken formula is caught.
struct ClosedForms {
    std::function<BigInt(const DeviceSpec&)> count_states = fibdens::count_states;
    std::function<Rational(std::int64_t, std::int64_t)> density_fib = fibdens::density_fib;
    std::function<Rational(std::int64_t)> density_lucas = fibdens::density_lucas;
    std::function<PairCounts(std::int64_t, std::int64_t, std::int64_t)> fib_pair_counts = fibdens::fib_pair_counts;
    std::function<CorrelationResult(std::int64_t, std::int64_t, std::int64_t)> corr_fib = fibdens::corr_fib;
    std::function<Rational(std::int64_t, std::int64_t)> corr_fib_adjacent = fibdens::corr_fib_adjacent;
    std::function<PairCounts(std::int64_t, std::int64_t)> lucas_pair_counts = fibdens::lucas_pair_counts;
    std::function<CorrelationResult(std::int64_t, std::int64_t)> corr_lucas = fibdens::corr_lucas;
    std::function<Rational(std::int64_t)> corr_lucas_nn = fibdens::corr_lucas_nn;
    std::function<Rational(std::int64_t)> corr_lucas_nnn = fibdens::corr_lucas_nnn;
};

struct FamilyResult {
    std::string family;
    std::uint64_t checks = 0;
    std::optional<std::string> first_failure;  // "(n, indices): closed vs brute"

    bool passed() const { return !first_failure.has_value(); }
};

struct VerifyReport {
    std::int64_t max_n = 0;
    std::vector<FamilyResult> families;

    bool passed() const;
};

/// Compares every closed form against exhaustive enumeration for all
/// 1 <= n <= max_n. Throws ResourceError above kVerifyMaxN and
/// std::domain_error below 1.
VerifyReport run_verification(std::int64_t max_n, const ClosedForms& forms = {});

}  // namespace fibdens::cli
