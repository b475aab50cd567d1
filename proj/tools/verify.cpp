#include "verify.hpp"

#include <sstream>
#include <stdexcept>

namespace fibdens::cli {

bool VerifyReport::passed() const
{
    for (const auto& f : families) {
        if (!f.passed()) {
            return false;
        }
    }
    return true;
}

namespace {

std::string show(const BigInt& v) { return v.get_str(); }
std::string show(const Rational& v) { return v.to_string(); }
std::string show(const PairCounts& c)
{
    return "(" + c.n00.get_str() + ", " + c.n01.get_str() + ", " + c.n10.get_str() + ", " + c.n11.get_str() + ")";
}

class Family {
public:
    explicit Family(std::string name) { result_.family = std::move(name); }

    template <typename T>
    void check(const std::string& locus, const T& closed, const T& brute)
    {
        ++result_.checks;
        if (!result_.first_failure && !(closed == brute)) {
            result_.first_failure = locus + ": closed form " + show(closed) + ", enumeration " + show(brute);
        }
    }

    FamilyResult take() { return std::move(result_); }

private:
    FamilyResult result_;
};

std::string locus(std::int64_t n, const char* a = nullptr, std::int64_t va = 0,
                  const char* b = nullptr, std::int64_t vb = 0)
{
    std::ostringstream os;
    os << "n=" << n;
    if (a) {
        os << " " << a << "=" << va;
    }
    if (b) {
        os << " " << b << "=" << vb;
    }
    return os.str();
}

}  // namespace

VerifyReport run_verification(std::int64_t max_n, const ClosedForms& forms)
{
    if (max_n < 1) {
        throw std::domain_error("verify: max n must be at least 1");
    }
    if (max_n > kVerifyMaxN) {
        throw ResourceError("verify: max n is capped at " + std::to_string(kVerifyMaxN) + ", got " +
                            std::to_string(max_n));
    }

    Family counting("count_states");
    Family dens_fib("density_fib");
    Family dens_lucas("density_lucas");
    Family pairs_fib("fib_pair_counts");
    Family corr_f("corr_fib");
    Family adjacent("corr_fib_adjacent");
    Family pairs_lucas("lucas_pair_counts");
    Family corr_l("corr_lucas");
    Family nn("corr_lucas_nn");
    Family nnn("corr_lucas_nnn");

    for (std::int64_t n = 1; n <= max_n; ++n) {
        const auto chain = DeviceSpec::linear(n);
        const auto ring = DeviceSpec::circular(n);

        for (const auto& spec : {chain, ring}) {
            std::uint64_t tally = 0;
            for_each_state(spec, [&](std::uint64_t) { ++tally; });
            counting.check(locus(n) + " " + std::string(to_string(spec.topology())), forms.count_states(spec),
                           BigInt(static_cast<unsigned long>(tally)));
        }

        for (std::int64_t i = 1; i <= n; ++i) {
            dens_fib.check(locus(n, "i", i), forms.density_fib(n, i), brute_density(chain, i));
            dens_lucas.check(locus(n, "i", i), forms.density_lucas(n), brute_density(ring, i));
        }

        for (std::int64_t k = 1; k <= n; ++k) {
            for (std::int64_t l = k; l <= n; ++l) {
                const PairCounts brute = brute_pair_counts(chain, k, l);
                if (k < l) {
                    pairs_fib.check(locus(n, "k", k, "l", l), forms.fib_pair_counts(n, k, l), brute);
                }
                corr_f.check(locus(n, "k", k, "l", l), forms.corr_fib(n, k, l).exact,
                             Rational(brute.agreement(), brute.total()));
            }
            if (k < n) {
                adjacent.check(locus(n, "k", k), forms.corr_fib_adjacent(n, k),
                               brute_correlation(chain, k, k + 1));
            }
        }

        for (std::int64_t k = 1; k <= n; ++k) {
            const PairCounts brute = brute_pair_counts(ring, 1, k);
            if (k >= 2 && k <= lucas_half_range(n)) {
                pairs_lucas.check(locus(n, "k", k), forms.lucas_pair_counts(n, k), brute);
            }
            corr_l.check(locus(n, "k", k), forms.corr_lucas(n, k).exact, Rational(brute.agreement(), brute.total()));
        }
        if (n >= 4) {
            nn.check(locus(n), forms.corr_lucas_nn(n), brute_correlation(ring, 1, 2));
        }
        if (n >= 5) {
            nnn.check(locus(n), forms.corr_lucas_nnn(n), brute_correlation(ring, 1, 3));
        }
    }

    VerifyReport report;
    report.max_n = max_n;
    for (Family* f : {&counting, &dens_fib, &dens_lucas, &pairs_fib, &corr_f, &adjacent, &pairs_lucas, &corr_l,
                      &nn, &nnn}) {
        report.families.push_back(f->take());
    }
    return report;
}

}  // namespace fibdens::cli
