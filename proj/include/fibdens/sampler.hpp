#pragma once

#include <cstdint>
#include <utility>

#include "fibdens/enumeration.hpp"

namespace fibdens {

/// Largest device the sampler will unrank into.
inline constexpr std::int64_t kSamplingLimit = 10000;

struct SampleConfig {
    DeviceSpec spec;
    std::uint64_t sample_count = 1;
    std::uint64_t seed = 0;
};

/// Mean of a +/-1 or 0/1 observable with its standard error
/// (sample standard deviation / sqrt(count)). A single draw reports a
/// standard error of 0.
struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t sample_count = 0;
};

/// Counter-based random stream: SplitMix64 whose starting state is
/// mix64(seed) ^ mix64(draw + 0x9E3779B97F4A7C15). Each draw owns an
/// independent stream, so draw d of a configuration is the same value no
/// matter how the draws are split across workers or in which order they
/// run. The algorithm is part of the reproducibility contract.
class DrawStream {
public:
    DrawStream(std::uint64_t seed, std::uint64_t draw);
    std::uint64_t next();

private:
    std::uint64_t state_;
};

/// Uniform integer in [0, bound) by rejection over the smallest number of
/// whole 64-bit blocks covering bound - 1, with the top block masked.
BigInt uniform_below(const BigInt& bound, DrawStream& stream);

/// Exact uniform sampler over the admissible states of one device.
class Sampler {
public:
    explicit Sampler(const SampleConfig& config);  // throws ResourceError above kSamplingLimit

    const SampleConfig& config() const { return config_; }

    /// Position in enumeration order of draw number `draw`.
    BigInt draw_rank(std::uint64_t draw) const;
    StateWord draw_state(std::uint64_t draw) const;
    bool draw_cell(std::uint64_t draw, std::int64_t cell) const;
    std::pair<bool, bool> draw_cells(std::uint64_t draw, std::int64_t k, std::int64_t l) const;

private:
    SampleConfig config_;
    Unranker unranker_;
};

void validate(const SampleConfig& config);

StateWord sample_state(const SampleConfig& config, std::uint64_t draw);

/// Sample mean of sigma_i over config.sample_count draws.
Estimate estimate_density(const SampleConfig& config, std::int64_t i);
/// Sample mean of +1 (cells agree) / -1 (cells differ).
Estimate estimate_correlation(const SampleConfig& config, std::int64_t k, std::int64_t l);

/// Estimate of a 0/1 (or, with `signed_values`, -1/+1) observable from the
/// number of draws that came out 1 / +1.
Estimate estimate_from_hits(std::uint64_t hits, std::uint64_t count, bool signed_values);

}  // namespace fibdens
