#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibdens/rational.hpp"

namespace fibdens {

enum class Topology { Linear, Circular };

std::string_view to_string(Topology topology);

/// A request larger than a documented resource guard.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of cells plus the boundary condition. Linear devices forbid
/// adjacent ones along the chain; circular devices also forbid the pair
/// (cell n, cell 1).
class DeviceSpec {
public:
    DeviceSpec(std::int64_t length, Topology topology);  // throws std::domain_error if length < 1

    static DeviceSpec linear(std::int64_t length) { return {length, Topology::Linear}; }
    static DeviceSpec circular(std::int64_t length) { return {length, Topology::Circular}; }

    std::int64_t length() const { return length_; }
    Topology topology() const { return topology_; }

    /// Throws std::domain_error unless 1 <= cell <= length.
    void check_cell(std::int64_t cell) const;

    friend bool operator==(const DeviceSpec&, const DeviceSpec&) = default;

private:
    std::int64_t length_;
    Topology topology_;
};

/// One 0/1 configuration, cells numbered from 1. Ordering matches the
/// numeric order of the word read with cell 1 as the most significant bit.
class StateWord {
public:
    StateWord() = default;
    explicit StateWord(std::size_t length);

    /// Bit (length - i) of `packed` is cell i.
    static StateWord from_packed(std::uint64_t packed, std::size_t length);
    static StateWord from_string(std::string_view bits);

    std::size_t length() const { return length_; }
    bool cell(std::size_t i) const;
    void set(std::size_t i, bool value);
    std::size_t ones() const;

    /// Requires length() <= 64.
    std::uint64_t packed() const;
    std::string to_string() const;

    friend bool operator==(const StateWord&, const StateWord&) = default;
    friend std::strong_ordering operator<=>(const StateWord& a, const StateWord& b);

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;  // cell i lives at bit (i-1) % 64 of word (i-1) / 64
};

bool is_admissible(const StateWord& state, Topology topology);

struct PairCounts {
    BigInt n00 = 0;
    BigInt n01 = 0;
    BigInt n10 = 0;
    BigInt n11 = 0;

    BigInt total() const { return n00 + n01 + n10 + n11; }
    /// n00 + n11 - n01 - n10.
    BigInt agreement() const { return n00 + n11 - n01 - n10; }

    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// Largest device that exhaustive enumeration accepts.
inline constexpr std::int64_t kEnumerationLimit = 40;

/// F(n+2) for linear devices, L(n) for circular ones.
BigInt count_states(const DeviceSpec& spec);

void check_enumerable(const DeviceSpec& spec);

namespace detail {

template <typename Visit>
void visit_linear(std::uint64_t prefix, int remaining, bool last_one, bool forbid_last, Visit& visit)
{
    if (remaining == 0) {
        visit(prefix);
        return;
    }
    visit_linear(prefix << 1, remaining - 1, false, forbid_last, visit);
    if (!last_one && !(remaining == 1 && forbid_last)) {
        visit_linear((prefix << 1) | 1U, remaining - 1, true, forbid_last, visit);
    }
}

}  // namespace detail

/// Calls `visit(std::uint64_t packed)` once per admissible state, in
/// increasing numeric order. Backtracks over prefixes, so the work is
/// proportional to the number of states rather than 2^n.
template <typename Visit>
void for_each_state(const DeviceSpec& spec, Visit&& visit)
{
    check_enumerable(spec);
    const int n = static_cast<int>(spec.length());
    const bool ring = spec.topology() == Topology::Circular;
    // Cell 1 = 0: cells 2..n are unconstrained by the wrap.
    detail::visit_linear(0, n - 1, false, false, visit);
    // Cell 1 = 1: cell 2 must be 0 and, on a ring, cell n too.
    if (ring && n == 1) {
        return;
    }
    if (n == 1) {
        visit(std::uint64_t{1});
        return;
    }
    detail::visit_linear(std::uint64_t{2}, n - 2, false, ring, visit);
}

std::vector<StateWord> enumerate_states(const DeviceSpec& spec);

/// Precomputed prefix counts for O(n) unranking and ranking of one device.
class Unranker {
public:
    explicit Unranker(const DeviceSpec& spec);

    const DeviceSpec& spec() const { return spec_; }
    const BigInt& count() const { return count_; }

    /// The state at position `index` in enumeration order.
    StateWord unrank(const BigInt& index) const;
    /// Value of one cell of unrank(index) without materializing the state.
    bool cell(const BigInt& index, std::int64_t i) const;
    /// Cells k and l of unrank(index).
    std::pair<bool, bool> cell_pair(const BigInt& index, std::int64_t k, std::int64_t l) const;
    /// Position of an admissible state in enumeration order.
    BigInt rank(const StateWord& state) const;

private:
    template <typename Emit>
    void walk(BigInt index, std::int64_t stop, Emit&& emit) const;

    DeviceSpec spec_;
    BigInt count_;
    std::vector<BigInt> fib_;  // F(0) .. F(n+1)
};

StateWord unrank_state(const DeviceSpec& spec, const BigInt& index);
BigInt rank_state(const DeviceSpec& spec, const StateWord& state);

/// Fraction of admissible states with cell i occupied, by exhaustive count.
Rational brute_density(const DeviceSpec& spec, std::int64_t i);
PairCounts brute_pair_counts(const DeviceSpec& spec, std::int64_t k, std::int64_t l);
/// State average of +1 (cells k and l agree) / -1 (they differ).
Rational brute_correlation(const DeviceSpec& spec, std::int64_t k, std::int64_t l);

}  // namespace fibdens
