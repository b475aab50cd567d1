#include "fibdens/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "fibdens/fib_core.hpp"

namespace fibdens {

std::string_view to_string(Topology topology)
{
    return topology == Topology::Linear ? "linear" : "circular";
}

DeviceSpec::DeviceSpec(std::int64_t length, Topology topology) : length_(length), topology_(topology)
{
    if (length < 1) {
        throw std::domain_error("device length must be at least 1, got " + std::to_string(length));
    }
}

void DeviceSpec::check_cell(std::int64_t cell) const
{
    if (cell < 1 || cell > length_) {
        throw std::domain_error("cell index " + std::to_string(cell) + " outside 1.." +
                                std::to_string(length_));
    }
}

// ---------------------------------------------------------------------------
// StateWord

StateWord::StateWord(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

StateWord StateWord::from_packed(std::uint64_t packed, std::size_t length)
{
    if (length > 64) {
        throw std::domain_error("from_packed: length exceeds 64");
    }
    StateWord s(length);
    for (std::size_t i = 1; i <= length; ++i) {
        s.set(i, ((packed >> (length - i)) & 1U) != 0);
    }
    return s;
}

StateWord StateWord::from_string(std::string_view bits)
{
    StateWord s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw std::invalid_argument("state word must contain only 0 and 1");
        }
        s.set(i + 1, bits[i] == '1');
    }
    return s;
}

bool StateWord::cell(std::size_t i) const
{
    return ((words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1U) != 0;
}

void StateWord::set(std::size_t i, bool value)
{
    const std::uint64_t mask = std::uint64_t{1} << ((i - 1) % 64);
    auto& word = words_[(i - 1) / 64];
    word = value ? (word | mask) : (word & ~mask);
}

std::size_t StateWord::ones() const
{
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::uint64_t StateWord::packed() const
{
    if (length_ > 64) {
        throw std::domain_error("packed: length exceeds 64");
    }
    std::uint64_t out = 0;
    for (std::size_t i = 1; i <= length_; ++i) {
        out = (out << 1) | (cell(i) ? 1U : 0U);
    }
    return out;
}

std::string StateWord::to_string() const
{
    std::string out(length_, '0');
    for (std::size_t i = 1; i <= length_; ++i) {
        if (cell(i)) {
            out[i - 1] = '1';
        }
    }
    return out;
}

std::strong_ordering operator<=>(const StateWord& a, const StateWord& b)
{
    if (a.length_ != b.length_) {
        return a.length_ <=> b.length_;
    }
    for (std::size_t i = 1; i <= a.length_; ++i) {
        if (a.cell(i) != b.cell(i)) {
            return a.cell(i) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

bool is_admissible(const StateWord& state, Topology topology)
{
    const std::size_t n = state.length();
    for (std::size_t i = 1; i < n; ++i) {
        if (state.cell(i) && state.cell(i + 1)) {
            return false;
        }
    }
    // On a ring of one cell the wrap pairs the cell with itself.
    return !(topology == Topology::Circular && n >= 1 && state.cell(n) && state.cell(1));
}

// ---------------------------------------------------------------------------
// Counting and enumeration

BigInt count_states(const DeviceSpec& spec)
{
    return spec.topology() == Topology::Linear ? fib(spec.length() + 2) : lucas(spec.length());
}

void check_enumerable(const DeviceSpec& spec)
{
    if (spec.length() > kEnumerationLimit) {
        throw ResourceError("exhaustive enumeration is limited to n <= " +
                            std::to_string(kEnumerationLimit) + ", got n = " +
                            std::to_string(spec.length()));
    }
}

std::vector<StateWord> enumerate_states(const DeviceSpec& spec)
{
    std::vector<StateWord> out;
    const auto n = static_cast<std::size_t>(spec.length());
    for_each_state(spec, [&](std::uint64_t packed) { out.push_back(StateWord::from_packed(packed, n)); });
    return out;
}

// ---------------------------------------------------------------------------
// Unranking

Unranker::Unranker(const DeviceSpec& spec) : spec_(spec), count_(count_states(spec))
{
    const auto n = static_cast<std::size_t>(spec.length());
    fib_.reserve(n + 2);
    fib_.emplace_back(0);
    fib_.emplace_back(1);
    while (fib_.size() < n + 2) {
        fib_.push_back(fib_[fib_.size() - 1] + fib_[fib_.size() - 2]);
    }
}

// Visits cells in order, calling emit(cell, bit) for every decided cell
// until cell `stop` has been emitted. A linear run of m free cells has
// F(m+1) completions starting with 0 and F(m) starting with 1.
template <typename Emit>
void Unranker::walk(BigInt index, std::int64_t stop, Emit&& emit) const
{
    if (sgn(index) < 0 || index >= count_) {
        throw std::domain_error("unrank: index " + index.get_str() + " outside [0, " +
                                count_.get_str() + ")");
    }
    const std::int64_t n = spec_.length();
    std::int64_t cell = 1;
    std::int64_t run = n;  // free cells remaining in the current linear run
    std::int64_t last = n;  // last cell covered by the run

    if (spec_.topology() == Topology::Circular) {
        const auto& zero_first = fib_[static_cast<std::size_t>(n + 1)];
        if (index < zero_first) {
            emit(1, false);
            cell = 2;
            run = n - 1;
        } else {
            index -= zero_first;
            emit(1, true);
            emit(2, false);
            cell = 3;
            run = n - 3;
            last = n - 1;
        }
        if (stop < cell) {
            return;
        }
    }

    while (run > 0) {
        const auto& zero_first = fib_[static_cast<std::size_t>(run + 1)];
        if (index < zero_first) {
            emit(cell, false);
            if (cell >= stop) {
                return;
            }
            cell += 1;
            run -= 1;
        } else {
            index -= zero_first;
            emit(cell, true);
            if (cell >= stop) {
                return;
            }
            if (run >= 2) {
                emit(cell + 1, false);
                if (cell + 1 >= stop) {
                    return;
                }
            }
            cell += 2;
            run -= 2;
        }
    }
    // Ring with cell 1 occupied: cell n is forced empty.
    if (last < n && n >= 3) {
        emit(n, false);
    }
}

StateWord Unranker::unrank(const BigInt& index) const
{
    StateWord out(static_cast<std::size_t>(spec_.length()));
    walk(index, spec_.length(), [&](std::int64_t c, bool bit) {
        out.set(static_cast<std::size_t>(c), bit);
    });
    return out;
}

bool Unranker::cell(const BigInt& index, std::int64_t i) const
{
    spec_.check_cell(i);
    bool value = false;
    walk(index, i, [&](std::int64_t c, bool bit) {
        if (c == i) {
            value = bit;
        }
    });
    return value;
}

std::pair<bool, bool> Unranker::cell_pair(const BigInt& index, std::int64_t k, std::int64_t l) const
{
    spec_.check_cell(k);
    spec_.check_cell(l);
    std::pair<bool, bool> value{false, false};
    walk(index, std::max(k, l), [&](std::int64_t c, bool bit) {
        if (c == k) {
            value.first = bit;
        }
        if (c == l) {
            value.second = bit;
        }
    });
    return value;
}

BigInt Unranker::rank(const StateWord& state) const
{
    const std::int64_t n = spec_.length();
    if (static_cast<std::int64_t>(state.length()) != n || !is_admissible(state, spec_.topology())) {
        throw std::domain_error("rank: state " + state.to_string() + " is not admissible for this device");
    }
    BigInt index = 0;
    std::int64_t cell = 1;
    std::int64_t run = n;
    if (spec_.topology() == Topology::Circular) {
        if (state.cell(1)) {
            index += fib_[static_cast<std::size_t>(n + 1)];
            cell = 3;
            run = n - 3;
        } else {
            cell = 2;
            run = n - 1;
        }
    }
    while (run > 0) {
        if (state.cell(static_cast<std::size_t>(cell))) {
            index += fib_[static_cast<std::size_t>(run + 1)];
            cell += 2;
            run -= 2;
        } else {
            cell += 1;
            run -= 1;
        }
    }
    return index;
}

StateWord unrank_state(const DeviceSpec& spec, const BigInt& index)
{
    return Unranker(spec).unrank(index);
}

BigInt rank_state(const DeviceSpec& spec, const StateWord& state)
{
    return Unranker(spec).rank(state);
}

// ---------------------------------------------------------------------------
// Brute-force averages

Rational brute_density(const DeviceSpec& spec, std::int64_t i)
{
    spec.check_cell(i);
    check_enumerable(spec);
    const auto shift = static_cast<unsigned>(spec.length() - i);
    std::uint64_t occupied = 0;
    std::uint64_t total = 0;
    for_each_state(spec, [&](std::uint64_t packed) {
        occupied += (packed >> shift) & 1U;
        ++total;
    });
    return Rational(BigInt(static_cast<unsigned long>(occupied)), BigInt(static_cast<unsigned long>(total)));
}

PairCounts brute_pair_counts(const DeviceSpec& spec, std::int64_t k, std::int64_t l)
{
    spec.check_cell(k);
    spec.check_cell(l);
    check_enumerable(spec);
    const auto shift_k = static_cast<unsigned>(spec.length() - k);
    const auto shift_l = static_cast<unsigned>(spec.length() - l);
    std::uint64_t tally[2][2] = {{0, 0}, {0, 0}};
    for_each_state(spec, [&](std::uint64_t packed) {
        ++tally[(packed >> shift_k) & 1U][(packed >> shift_l) & 1U];
    });
    auto big = [](std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); };
    return PairCounts{big(tally[0][0]), big(tally[0][1]), big(tally[1][0]), big(tally[1][1])};
}

Rational brute_correlation(const DeviceSpec& spec, std::int64_t k, std::int64_t l)
{
    const PairCounts counts = brute_pair_counts(spec, k, l);
    return Rational(counts.agreement(), counts.total());
}

}  // namespace fibdens
