#include "cli.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibdens/fib_core.hpp"
#include "fibdens/sampler.hpp"
#include "fibdens/statistics.hpp"
#include "render.hpp"
#include "verify.hpp"

namespace fibdens::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct DeviceArgs {
    bool linear = false;
    bool circular = false;
    std::int64_t n = 0;

    Topology topology() const
    {
        if (linear == circular) {
            throw UsageError("exactly one of --linear or --circular is required");
        }
        return linear ? Topology::Linear : Topology::Circular;
    }
};

void add_device_options(CLI::App& cmd, DeviceArgs& args)
{
    auto* lin = cmd.add_flag("--linear", args.linear, "Fibonacci device (open chain)");
    auto* circ = cmd.add_flag("--circular", args.circular, "Lucas device (ring)");
    lin->excludes(circ);
    cmd.add_option("-n", args.n, "Number of cells")->required();
}

// JSON numbers carry the same 12 significant digits as the text formats.
ordered_json json_float(double value)
{
    return std::stod(format_float(value));
}

void emit_json(std::ostream& out, const ordered_json& doc)
{
    out << doc.dump(2) << "\n";
}

double approx_density_fib(std::int64_t n, std::int64_t i, const Rational& exact)
{
    return n + 2 <= kBinetMaxIndex ? density_fib_float(n, i) : exact.to_double();
}

double approx_density_lucas(std::int64_t n, const Rational& exact)
{
    return n <= kBinetMaxIndex ? density_lucas_float(n) : exact.to_double();
}

// ---------------------------------------------------------------------------

struct DensityArgs {
    DeviceArgs device;
    std::optional<std::int64_t> cell;
};

void cmd_density(const DensityArgs& args, OutputFormat format, std::ostream& out)
{
    const Topology topology = args.device.topology();
    const std::int64_t n = args.device.n;
    const DeviceSpec spec(n, topology);
    if (args.cell) {
        spec.check_cell(*args.cell);
    }

    ordered_json inputs{{"topology", to_string(topology)}, {"n", n}};
    if (args.cell) {
        inputs["i"] = *args.cell;
    }

    // A single value: one cell, or the shared density of a ring.
    if (args.cell || topology == Topology::Circular) {
        Rational exact;
        double approx = 0.0;
        if (topology == Topology::Linear) {
            exact = density_fib(n, *args.cell);
            approx = approx_density_fib(n, *args.cell, exact);
        } else {
            exact = density_lucas(n);
            approx = approx_density_lucas(n, exact);
        }
        switch (format) {
        case OutputFormat::Table:
            out << render_columns({{exact.to_string(), format_float(approx)}});
            break;
        case OutputFormat::Csv: {
            CsvTable t;
            if (args.cell) {
                t.header = {"n", "i", "exact", "approx"};
                t.rows.push_back({std::to_string(n), std::to_string(*args.cell), exact.to_string(), format_float(approx)});
            } else {
                t.header = {"n", "exact", "approx"};
                t.rows.push_back({std::to_string(n), exact.to_string(), format_float(approx)});
            }
            out << t.render();
            break;
        }
        case OutputFormat::Json:
            emit_json(out, {{"command", "density"}, {"inputs", inputs}, {"exact", exact.to_string()},
                            {"approx", json_float(approx)}});
            break;
        }
        return;
    }

    const DensityProfile profile = density_profile(n, topology);
    const std::string title = "fibonacci device with " + std::to_string(n) + " cells";
    switch (format) {
    case OutputFormat::Table: {
        std::vector<std::vector<std::string>> rows{{"i", "exact", "approx"}};
        for (const auto& r : profile.rows) {
            rows.push_back({std::to_string(r.cell), r.exact.to_string(), format_float(r.approx)});
        }
        out << "# " << title << "\n" << render_columns(rows);
        break;
    }
    case OutputFormat::Csv: {
        CsvTable t;
        t.comments = {title};
        t.header = {"i", "exact", "approx"};
        for (const auto& r : profile.rows) {
            t.rows.push_back({std::to_string(r.cell), r.exact.to_string(), format_float(r.approx)});
        }
        out << t.render();
        break;
    }
    case OutputFormat::Json: {
        ordered_json rows = ordered_json::array();
        for (const auto& r : profile.rows) {
            rows.push_back({{"i", r.cell}, {"exact", r.exact.to_string()}, {"approx", json_float(r.approx)}});
        }
        emit_json(out, {{"command", "density"}, {"inputs", inputs}, {"rows", rows}});
        break;
    }
    }
}

// ---------------------------------------------------------------------------

struct CorrArgs {
    DeviceArgs device;
    std::int64_t k = 0;
    std::optional<std::int64_t> l;
};

void cmd_corr(const CorrArgs& args, OutputFormat format, std::ostream& out)
{
    const Topology topology = args.device.topology();
    const std::int64_t n = args.device.n;
    ordered_json inputs{{"topology", to_string(topology)}, {"n", n}, {"k", args.k}};

    CorrelationResult result;
    if (topology == Topology::Linear) {
        if (!args.l) {
            throw UsageError("corr --linear needs both -k and -l");
        }
        inputs["l"] = *args.l;
        result = corr_fib(n, args.k, *args.l);
    } else {
        if (args.l) {
            throw UsageError("corr --circular correlates cell 1 with cell k; -l is not accepted");
        }
        result = corr_lucas(n, args.k);
    }
    const auto& c = result.counts;

    switch (format) {
    case OutputFormat::Table:
        out << render_columns({{result.exact.to_string(), format_float(result.approx)}});
        out << "N00=" << c.n00.get_str() << "  N01=" << c.n01.get_str() << "  N10=" << c.n10.get_str()
            << "  N11=" << c.n11.get_str() << "\n";
        break;
    case OutputFormat::Csv: {
        CsvTable t;
        std::vector<std::string> row{std::to_string(n), std::to_string(args.k)};
        t.header = {"n", "k"};
        if (args.l) {
            t.header.push_back("l");
            row.push_back(std::to_string(*args.l));
        }
        t.header.insert(t.header.end(), {"exact", "approx", "n00", "n01", "n10", "n11"});
        row.insert(row.end(), {result.exact.to_string(), format_float(result.approx), c.n00.get_str(),
                               c.n01.get_str(), c.n10.get_str(), c.n11.get_str()});
        t.rows.push_back(std::move(row));
        out << t.render();
        break;
    }
    case OutputFormat::Json:
        emit_json(out, {{"command", "corr"},
                        {"inputs", inputs},
                        {"exact", result.exact.to_string()},
                        {"approx", json_float(result.approx)},
                        {"counts",
                         {{"n00", c.n00.get_str()},
                          {"n01", c.n01.get_str()},
                          {"n10", c.n10.get_str()},
                          {"n11", c.n11.get_str()}}}});
        break;
    }
}

// ---------------------------------------------------------------------------

void cmd_states(const DeviceArgs& args, OutputFormat format, std::ostream& out)
{
    const DeviceSpec spec(args.n, args.topology());
    check_enumerable(spec);
    const BigInt count = count_states(spec);
    const std::string identity =
        spec.topology() == Topology::Linear ? "F_" + std::to_string(args.n + 2) : "L_" + std::to_string(args.n);
    const std::string count_line = "count = " + count.get_str() + " = " + identity;
    const auto width = static_cast<std::size_t>(args.n);

    switch (format) {
    case OutputFormat::Table: {
        std::string word(width, '0');
        for_each_state(spec, [&](std::uint64_t packed) {
            for (std::size_t c = 0; c < width; ++c) {
                word[c] = ((packed >> (width - 1 - c)) & 1U) ? '1' : '0';
            }
            out << word << "\n";
        });
        out << count_line << "\n";
        break;
    }
    case OutputFormat::Csv: {
        CsvTable t;
        t.comments = {count_line};
        t.header = {"index", "state"};
        std::uint64_t index = 0;
        for_each_state(spec, [&](std::uint64_t packed) {
            t.rows.push_back({std::to_string(index++), StateWord::from_packed(packed, width).to_string()});
        });
        out << t.render();
        break;
    }
    case OutputFormat::Json: {
        ordered_json states = ordered_json::array();
        for_each_state(spec, [&](std::uint64_t packed) {
            states.push_back(StateWord::from_packed(packed, width).to_string());
        });
        emit_json(out, {{"command", "states"},
                        {"inputs", {{"topology", to_string(spec.topology())}, {"n", args.n}}},
                        {"states", states},
                        {"count", count.get_str()},
                        {"identity", identity}});
        break;
    }
    }
}

// ---------------------------------------------------------------------------

struct SampleArgs {
    DeviceArgs device;
    std::optional<std::int64_t> cell;
    std::vector<std::int64_t> pair;
    std::uint64_t count = 100000;
    std::uint64_t seed = 0;
};

// Exact value of the sampled observable, when the Binet column is in range.
std::optional<std::pair<Rational, double>> exact_for_sample(const SampleArgs& args, Topology topology)
{
    const std::int64_t n = args.device.n;
    if (n + 2 > kBinetMaxIndex) {
        return std::nullopt;
    }
    if (args.cell) {
        if (topology == Topology::Linear) {
            Rational e = density_fib(n, *args.cell);
            const double a = density_fib_float(n, *args.cell);
            return std::pair{std::move(e), a};
        }
        Rational e = density_lucas(n);
        const double a = density_lucas_float(n);
        return std::pair{std::move(e), a};
    }
    const auto k = std::min(args.pair[0], args.pair[1]);
    const auto l = std::max(args.pair[0], args.pair[1]);
    CorrelationResult r = topology == Topology::Linear ? corr_fib(n, k, l) : corr_lucas(n, l - k + 1);
    return std::pair{std::move(r.exact), r.approx};
}

void cmd_sample(const SampleArgs& args, OutputFormat format, std::ostream& out)
{
    const Topology topology = args.device.topology();
    if (args.cell.has_value() == !args.pair.empty()) {
        throw UsageError("sample needs exactly one of -i CELL or --pair K L");
    }
    const SampleConfig config{DeviceSpec(args.device.n, topology), args.count, args.seed};
    validate(config);

    ordered_json inputs{{"topology", to_string(topology)}, {"n", args.device.n}};
    std::string observable;
    Estimate est;
    if (args.cell) {
        inputs["i"] = *args.cell;
        observable = "density i=" + std::to_string(*args.cell);
        config.spec.check_cell(*args.cell);
        est = estimate_density(config, *args.cell);
    } else {
        inputs["k"] = args.pair[0];
        inputs["l"] = args.pair[1];
        observable = "correlation k=" + std::to_string(args.pair[0]) + " l=" + std::to_string(args.pair[1]);
        config.spec.check_cell(args.pair[0]);
        config.spec.check_cell(args.pair[1]);
        est = estimate_correlation(config, args.pair[0], args.pair[1]);
    }
    inputs["count"] = args.count;
    inputs["seed"] = args.seed;
    const auto exact = exact_for_sample(args, topology);

    switch (format) {
    case OutputFormat::Table: {
        std::vector<std::vector<std::string>> rows{
            {"observable", observable},
            {"mean", format_float(est.mean)},
            {"std_error", format_float(est.std_error)},
            {"count", std::to_string(est.sample_count)},
            {"seed", std::to_string(args.seed)},
        };
        if (exact) {
            rows.push_back({"exact", exact->first.to_string(), format_float(exact->second)});
        }
        out << render_columns(rows);
        break;
    }
    case OutputFormat::Csv: {
        CsvTable t;
        t.comments = {observable};
        t.header = {"n", "mean", "std_error", "count", "seed", "exact", "approx"};
        t.rows.push_back({std::to_string(args.device.n), format_float(est.mean), format_float(est.std_error),
                          std::to_string(est.sample_count), std::to_string(args.seed),
                          exact ? exact->first.to_string() : "", exact ? format_float(exact->second) : ""});
        out << t.render();
        break;
    }
    case OutputFormat::Json: {
        ordered_json doc{{"command", "sample"},
                         {"inputs", inputs},
                         {"mean", json_float(est.mean)},
                         {"std_error", json_float(est.std_error)},
                         {"count", est.sample_count}};
        if (exact) {
            doc["exact"] = exact->first.to_string();
            doc["approx"] = json_float(exact->second);
        }
        emit_json(out, doc);
        break;
    }
    }
}

// ---------------------------------------------------------------------------

int cmd_verify(std::int64_t max_n, OutputFormat format, std::ostream& out, std::ostream& err)
{
    const VerifyReport report = run_verification(max_n);
    switch (format) {
    case OutputFormat::Table: {
        std::vector<std::vector<std::string>> rows{{"family", "checks", "result"}};
        for (const auto& f : report.families) {
            rows.push_back({f.family, std::to_string(f.checks), f.passed() ? "PASS" : "FAIL"});
        }
        out << "# closed forms vs enumeration, n = 1.." << max_n << "\n" << render_columns(rows);
        break;
    }
    case OutputFormat::Csv: {
        CsvTable t;
        t.comments = {"closed forms vs enumeration, n = 1.." + std::to_string(max_n)};
        t.header = {"family", "checks", "result"};
        for (const auto& f : report.families) {
            t.rows.push_back({f.family, std::to_string(f.checks), f.passed() ? "PASS" : "FAIL"});
        }
        out << t.render();
        break;
    }
    case OutputFormat::Json: {
        ordered_json families = ordered_json::array();
        for (const auto& f : report.families) {
            ordered_json entry{{"family", f.family}, {"checks", f.checks}, {"passed", f.passed()}};
            if (f.first_failure) {
                entry["first_failure"] = *f.first_failure;
            }
            families.push_back(entry);
        }
        emit_json(out, {{"command", "verify"},
                        {"inputs", {{"max_n", max_n}}},
                        {"passed", report.passed()},
                        {"families", families}});
        break;
    }
    }
    for (const auto& f : report.families) {
        if (f.first_failure) {
            err << "verify: " << f.family << " mismatch at " << *f.first_failure << "\n";
            return kVerificationFailed;
        }
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact densities and pair correlations of binary strings without adjacent ones", "fibdens"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_name = "table";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    DensityArgs density;
    auto* density_cmd = app.add_subcommand("density", "Occupation density of one cell or the whole device");
    add_device_options(*density_cmd, density.device);
    density_cmd->add_option("-i", density.cell, "Cell index (1-based); omit for the full profile");

    CorrArgs corr;
    auto* corr_cmd = app.add_subcommand("corr", "Pair correlation; rings correlate cell 1 with cell k");
    add_device_options(*corr_cmd, corr.device);
    corr_cmd->add_option("-k", corr.k, "First cell (1-based)")->required();
    corr_cmd->add_option("-l", corr.l, "Second cell (linear devices)");

    DeviceArgs states;
    auto* states_cmd = app.add_subcommand("states", "List every admissible state");
    add_device_options(*states_cmd, states);

    SampleArgs sample;
    auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo estimate from exact uniform sampling");
    add_device_options(*sample_cmd, sample.device);
    sample_cmd->add_option("-i", sample.cell, "Cell whose density is estimated");
    sample_cmd->add_option("--pair", sample.pair, "Two cells whose correlation is estimated")->expected(2);
    sample_cmd->add_option("--count", sample.count, "Number of draws")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", sample.seed, "Generator seed");

    std::int64_t verify_max_n = kVerifyDefaultMaxN;
    auto* verify_cmd = app.add_subcommand("verify", "Check every closed form against enumeration");
    verify_cmd->add_option("--max-n", verify_max_n, "Largest device size swept");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        const OutputFormat format = parse_format(format_name);
        if (*density_cmd) {
            cmd_density(density, format, out);
        } else if (*corr_cmd) {
            cmd_corr(corr, format, out);
        } else if (*states_cmd) {
            cmd_states(states, format, out);
        } else if (*sample_cmd) {
            cmd_sample(sample, format, out);
        } else if (*verify_cmd) {
            return cmd_verify(verify_max_n, format, out, err);
        }
    } catch (const ResourceError& e) {
        err << "fibdens: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const std::logic_error& e) {  // domain_error, invalid_argument
        err << "fibdens: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::range_error& e) {
        err << "fibdens: " << e.what() << "\n";
        return kUsageError;
    }
    return kOk;
}

}  // namespace fibdens::cli
