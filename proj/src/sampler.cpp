#include "fibdens/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fibdens {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

DrawStream::DrawStream(std::uint64_t seed, std::uint64_t draw)
    : state_(mix64(seed) ^ mix64(draw + kGamma))
{
}

std::uint64_t DrawStream::next()
{
    state_ += kGamma;
    return mix64(state_);
}

BigInt uniform_below(const BigInt& bound, DrawStream& stream)
{
    if (sgn(bound) <= 0) {
        throw std::domain_error("uniform_below: bound must be positive");
    }
    if (bound == 1) {
        return 0;
    }
    const BigInt top = bound - 1;
    const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
    const std::size_t blocks = (bits + 63) / 64;
    const std::size_t top_bits = bits - (blocks - 1) * 64;
    const std::uint64_t top_mask = top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;

    BigInt candidate;
    for (;;) {
        candidate = stream.next() & top_mask;
        for (std::size_t b = 1; b < blocks; ++b) {
            candidate <<= 64;
            candidate += static_cast<unsigned long>(stream.next());
        }
        if (candidate < bound) {
            return candidate;
        }
    }
}

void validate(const SampleConfig& config)
{
    if (config.sample_count < 1) {
        throw std::domain_error("sample_count must be at least 1");
    }
    if (config.spec.length() > kSamplingLimit) {
        throw ResourceError("sampling is limited to n <= " + std::to_string(kSamplingLimit) +
                            ", got n = " + std::to_string(config.spec.length()));
    }
}

Sampler::Sampler(const SampleConfig& config)
    : config_((validate(config), config)), unranker_(config.spec)
{
}

BigInt Sampler::draw_rank(std::uint64_t draw) const
{
    DrawStream stream(config_.seed, draw);
    return uniform_below(unranker_.count(), stream);
}

StateWord Sampler::draw_state(std::uint64_t draw) const
{
    return unranker_.unrank(draw_rank(draw));
}

bool Sampler::draw_cell(std::uint64_t draw, std::int64_t cell) const
{
    return unranker_.cell(draw_rank(draw), cell);
}

std::pair<bool, bool> Sampler::draw_cells(std::uint64_t draw, std::int64_t k, std::int64_t l) const
{
    return unranker_.cell_pair(draw_rank(draw), k, l);
}

StateWord sample_state(const SampleConfig& config, std::uint64_t draw)
{
    return Sampler(config).draw_state(draw);
}

Estimate estimate_from_hits(std::uint64_t hits, std::uint64_t count, bool signed_values)
{
    if (count == 0) {
        throw std::domain_error("estimate_from_hits: no draws");
    }
    const auto n = static_cast<double>(count);
    const double p = static_cast<double>(hits) / n;
    Estimate e;
    e.sample_count = count;
    // x in {0,1}: mean p, sum of squared deviations n p (1-p).
    // x in {-1,1}: x = 2y - 1, so mean 2p - 1 and four times the spread.
    e.mean = signed_values ? 2.0 * p - 1.0 : p;
    if (count > 1) {
        const double scale = signed_values ? 4.0 : 1.0;
        const double variance = scale * n * p * (1.0 - p) / (n - 1.0);
        e.std_error = std::sqrt(variance / n);
    }
    return e;
}

Estimate estimate_density(const SampleConfig& config, std::int64_t i)
{
    const Sampler sampler(config);
    config.spec.check_cell(i);
    std::uint64_t hits = 0;
    for (std::uint64_t d = 0; d < config.sample_count; ++d) {
        hits += sampler.draw_cell(d, i) ? 1U : 0U;
    }
    return estimate_from_hits(hits, config.sample_count, false);
}

Estimate estimate_correlation(const SampleConfig& config, std::int64_t k, std::int64_t l)
{
    const Sampler sampler(config);
    config.spec.check_cell(k);
    config.spec.check_cell(l);
    if (k == l) {
        return estimate_from_hits(config.sample_count, config.sample_count, true);
    }
    std::uint64_t agree = 0;
    for (std::uint64_t d = 0; d < config.sample_count; ++d) {
        const auto [a, b] = sampler.draw_cells(d, k, l);
        agree += a == b ? 1U : 0U;
    }
    return estimate_from_hits(agree, config.sample_count, true);
}

}  // namespace fibdens
