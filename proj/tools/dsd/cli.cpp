#include "dsd/cli.hpp"

#include "dsd/manifest.hpp"
#include "dsd/report.hpp"
#include "dsd/table.hpp"

#include <dsd/dataset.hpp>
#include <dsd/decomposition.hpp>
#include <dsd/engine.hpp>
#include <dsd/error.hpp>
#include <dsd/factor_state.hpp>
#include <dsd/fixtures.hpp>
#include <dsd/metrics.hpp>
#include <dsd/oracle.hpp>
#include <dsd/units.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

namespace dsd::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::string_view kFixturePrefix = "fixture:";
constexpr const char* kFixtureEnv = "DSD_SEED_FIXTURES";

/// Bad flag values detected after parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string units;
    std::optional<int> from;
    std::optional<int> to;
    std::size_t segments = 16000;
    std::string slack = "uniform";
    std::string mode = "chain";
    std::string format = "csv";
    std::string out_dir;
    std::vector<int> breaks;
    std::string scales;
    std::string negative = "all";
    std::optional<int> year;
    std::vector<std::string> shifts;
};

struct Input {
    Dataset data;  // interpolated, gap-free
    std::size_t interpolated = 0;
    std::string label;
    std::string digest;
};

struct Context {
    const Options& opt;
    std::string command;
    std::ostream& out;
    std::ostream& err;
};

bool fixtures_enabled() {
    const char* v = std::getenv(kFixtureEnv);
    return v != nullptr && std::string_view(v) == "1";
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Input load_input(const Options& opt) {
    if (opt.input.empty()) throw UsageError("--input is required");
    Input in;
    in.label = opt.input;
    Dataset raw;
    if (opt.input.rfind(kFixturePrefix, 0) == 0) {
        if (!fixtures_enabled()) {
            throw InputError("bundled fixtures are disabled; set " + std::string(kFixtureEnv) + "=1 to use " +
                             opt.input);
        }
        const auto name = opt.input.substr(kFixturePrefix.size());
        auto fixture = fixtures::by_name(name);
        if (!fixture) throw InputError("unknown fixture '" + name + "'");
        raw = std::move(*fixture);
        std::ostringstream ss;
        write_dataset(ss, raw);
        in.digest = sha256_hex(ss.str());
    } else {
        const auto bytes = read_file(opt.input);
        in.digest = sha256_hex(bytes);
        const UnitConfig units = opt.units.empty() ? UnitConfig::base() : UnitConfig::from_file(opt.units);
        std::istringstream ss(bytes);
        try {
            raw = load_dataset(ss, units, fs::path(opt.input).stem().string());
        } catch (const InputError& ex) {
            throw InputError(opt.input + ": " + ex.what());
        }
    }
    if (raw.records.size() >= 2) {
        in.data = interpolate_years(raw);
        in.interpolated = in.data.records.size() - raw.records.size();
    } else {
        in.data = std::move(raw);
    }
    return in;
}

IntegrationSettings settings_of(const Options& opt) {
    if (opt.segments < 1) throw UsageError("--segments must be at least 1");
    return IntegrationSettings{opt.segments, *parse_slack(opt.slack)};
}

std::pair<int, int> year_range(const Options& opt, const Dataset& ds) {
    return {opt.from.value_or(ds.first_year()), opt.to.value_or(ds.last_year())};
}

RunManifest manifest_of(const Context& ctx, const Input& in, std::optional<std::pair<int, int>> range) {
    RunManifest m;
    m.command = ctx.command;
    m.input = in.label;
    m.units = ctx.opt.units.empty() ? "base" : ctx.opt.units;
    m.settings = IntegrationSettings{ctx.opt.segments, parse_slack(ctx.opt.slack).value_or(SlackScheme::Uniform)};
    m.mode = parse_mode(ctx.opt.mode).value_or(DecompositionMode::Chain);
    if (range) {
        m.from = range->first;
        m.to = range->second;
    }
    m.input_digest = in.digest;
    return m;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path.string());
    return f;
}

/// Write tables to stdout or under --out. CSV gets one file per table; JSON
/// one document per command.
void emit(const Context& ctx, const RunManifest& manifest, const std::vector<const Table*>& tables) {
    const auto doc = manifest.to_json();
    const bool json = ctx.opt.format == "json";
    if (ctx.opt.out_dir.empty()) {
        if (json) {
            write_json(ctx.out, tables, doc);
            return;
        }
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (i) ctx.out << '\n';
            write_csv(ctx.out, *tables[i], doc);
        }
        return;
    }
    fs::create_directories(ctx.opt.out_dir);
    if (json) {
        auto f = open_output(fs::path(ctx.opt.out_dir) / (ctx.command + ".json"));
        write_json(f, tables, doc);
        return;
    }
    for (const Table* t : tables) {
        auto f = open_output(fs::path(ctx.opt.out_dir) / (t->name + ".csv"));
        write_csv(f, *t, doc);
    }
}

std::vector<Scale> parse_scales(const std::string& list) {
    std::vector<Scale> scales;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto s = parse_scale(item);
        if (!s) throw UsageError("unknown scale '" + item + "' in --scales");
        scales.push_back(*s);
    }
    return scales;
}

EndUseArray<double> parse_shifts(const std::vector<std::string>& shifts) {
    EndUseArray<double> out;
    for (const auto& s : shifts) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("--shift expects USE=DELTA, got '" + s + "'");
        const auto use = parse_end_use(s.substr(0, eq));
        if (!use) throw UsageError("unknown end use '" + s.substr(0, eq) + "' in --shift");
        const std::string value = s.substr(eq + 1);
        std::size_t used = 0;
        double delta = 0.0;
        try {
            delta = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size()) throw UsageError("cannot parse shift '" + value + "'");
        out[*use] += delta;
    }
    return out;
}

MetricsOptions metrics_options(const Options& opt) {
    MetricsOptions m;
    m.drivers = *parse_negative_drivers(opt.negative);
    m.scales = parse_scales(opt.scales);
    m.stage_breaks = opt.breaks;
    return m;
}

const std::vector<std::string> kDefinitionNotes = {
    "decarbonization D_t = sum of |negative driver contributions| (kgCO2/household) x households, reconstructed "
    "definition",
    "efficiency = D_t / (C_t + D_t), reconstructed definition",
};

// Subcommands -----------------------------------------------------------------

int cmd_validate(const Context& ctx) {
    const auto in = load_input(ctx.opt);
    derive_factor_states(in.data);  // surfaces degenerate records
    ctx.out << fmt::format("ok: {}: {} records ({}-{}), {} interpolated, active uses: {}, floor area: {}\n",
                           in.label, in.data.records.size(), in.data.first_year(), in.data.last_year(),
                           in.interpolated, in.data.active_uses.to_string(),
                           in.data.has_floor_area() ? "yes" : "no");
    return kOk;
}

int cmd_factors(const Context& ctx) {
    const auto in = load_input(ctx.opt);
    const auto states = derive_factor_states(in.data);
    const auto table = factors_table(in.data, states);
    emit(ctx, manifest_of(ctx, in, std::nullopt), {&table});
    return kOk;
}

int cmd_decompose(const Context& ctx) {
    const auto in = load_input(ctx.opt);
    const auto [from, to] = year_range(ctx.opt, in.data);
    const auto r = decompose(in.data, from, to, settings_of(ctx.opt), *parse_mode(ctx.opt.mode));
    const auto table = driver_table(r);
    emit(ctx, manifest_of(ctx, in, std::pair{from, to}), {&table});
    return kOk;
}

int cmd_chain(const Context& ctx) {
    const auto in = load_input(ctx.opt);
    const auto [from, to] = year_range(ctx.opt, in.data);
    const auto chain = chain_yearly(in.data, from, to, settings_of(ctx.opt));
    const auto table = interval_table(chain, "chain");
    emit(ctx, manifest_of(ctx, in, std::pair{from, to}), {&table});
    return kOk;
}

std::vector<int> breaks_of(const Options& opt, int from, int to) {
    return opt.breaks.empty() ? default_stage_breaks(from, to) : opt.breaks;
}

int cmd_stages(const Context& ctx) {
    const auto in = load_input(ctx.opt);
    const auto [from, to] = year_range(ctx.opt, in.data);
    const auto chain = chain_yearly(in.data, from, to, settings_of(ctx.opt));
    const auto stages = aggregate_stages(chain, breaks_of(ctx.opt, from, to));
    const auto table = interval_table(stages, "stages");
    const auto rates = rates_table(stages);
    emit(ctx, manifest_of(ctx, in, std::pair{from, to}), {&table, &rates});
    return kOk;
}

int cmd_enduse(const Context& ctx) {
    const auto in = load_input(ctx.opt);
    const auto [from, to] = year_range(ctx.opt, in.data);
    const auto settings = settings_of(ctx.opt);
    const auto chain = chain_yearly(in.data, from, to, settings);
    auto results = aggregate_stages(chain, breaks_of(ctx.opt, from, to));
    results.push_back(decompose(in.data, from, to, settings, *parse_mode(ctx.opt.mode)));
    const auto table = enduse_table(results);
    emit(ctx, manifest_of(ctx, in, std::pair{from, to}), {&table});
    return kOk;
}

int cmd_metrics(const Context& ctx) {
    const auto in = load_input(ctx.opt);
    const auto [from, to] = year_range(ctx.opt, in.data);
    const auto options = metrics_options(ctx.opt);
    const auto chain = chain_yearly(in.data, from, to, settings_of(ctx.opt));
    const auto series = scale_series(chain, in.data, options);
    const auto table = metrics_table(series);
    const auto shares = stage_share_table(series);
    auto manifest = manifest_of(ctx, in, std::pair{from, to});
    manifest.notes = kDefinitionNotes;
    manifest.notes.push_back("negative drivers: " + std::string(to_string(options.drivers)));
    emit(ctx, manifest, {&table, &shares});
    return kOk;
}

int cmd_scenario(const Context& ctx) {
    if (!ctx.opt.year) throw UsageError("scenario needs --year");
    if (ctx.opt.shifts.empty()) throw UsageError("scenario needs at least one --shift USE=DELTA");
    const auto shifts = parse_shifts(ctx.opt.shifts);
    const auto in = load_input(ctx.opt);
    const auto states = derive_factor_states(in.data);
    const auto* rec = &in.data.at(*ctx.opt.year);
    const auto& state = states[static_cast<std::size_t>(rec - in.data.records.data())];
    const auto settings = settings_of(ctx.opt);

    auto r = counterfactual_share_shift(state, shifts, settings);
    r.start_year = r.end_year = *ctx.opt.year;
    const auto after = shifted_shares(state, shifts, settings);

    const auto table = driver_table(r, "scenario");
    Table shares{"scenario_shares", {"end_use", "shift", "share_before", "share_after"}, {}};
    for (EndUse u : kAllEndUses) {
        shares.add({std::string(to_string(u)), shifts[u], state.share[u], after[u]});
    }
    auto manifest = manifest_of(ctx, in, std::pair{*ctx.opt.year, *ctx.opt.year});
    for (const auto& s : ctx.opt.shifts) manifest.notes.push_back("shift " + s);
    emit(ctx, manifest, {&table, &shares});
    return kOk;
}

int cmd_crosscheck(const Context& ctx) {
    const auto in = load_input(ctx.opt);
    const auto [from, to] = year_range(ctx.opt, in.data);
    const auto settings = settings_of(ctx.opt);
    const auto states = derive_factor_states(in.data);
    const auto& start = states[static_cast<std::size_t>(&in.data.at(from) - in.data.records.data())];
    const auto& end = states[static_cast<std::size_t>(&in.data.at(to) - in.data.records.data())];

    const auto dsd = run_dsd(start, end, settings);
    const auto ref = oracle::fine_step_reference(start, end, settings.segments * oracle::kReferenceFactor,
                                                 settings.slack);
    const auto lmdi = oracle::lmdi_decompose(start, end);

    Table t{"crosscheck", {"driver", "dsd", "reference", "lmdi", "dsd_reference_rel_diff"}, {}};
    auto rel = [](double a, double b) -> Cell {
        if (b == 0.0) return a == 0.0 ? Cell{0.0} : Cell{};
        return std::abs(a - b) / std::abs(b);
    };
    double dsd_w = 0.0, ref_w = 0.0, lmdi_w = 0.0;
    for (DriverId d : kAllDrivers) {
        const double a = at(dsd.contributions, d), b = at(ref.contributions, d), c = at(lmdi, d);
        t.add({d.name(), a, b, c, rel(a, b)});
        if (d.kind() == DriverKind::ShareShift) {
            dsd_w += a;
            ref_w += b;
            lmdi_w += c;
        }
    }
    t.add({std::string("structure_total"), dsd_w, ref_w, lmdi_w, rel(dsd_w, ref_w)});
    double lmdi_sum = 0.0;
    for (double c : lmdi) lmdi_sum += c;
    t.add({std::string("delta_c"), dsd.delta_c, ref.delta_c, lmdi_sum, rel(dsd.delta_c, ref.delta_c)});

    auto manifest = manifest_of(ctx, in, std::pair{from, to});
    manifest.mode = DecompositionMode::Endpoint;
    manifest.notes.push_back(fmt::format("reference segments: {}", ref.settings.segments));
    emit(ctx, manifest, {&t});
    return kOk;
}

int cmd_report(const Context& ctx) {
    const auto in = load_input(ctx.opt);
    const auto [from, to] = year_range(ctx.opt, in.data);
    const auto settings = settings_of(ctx.opt);
    const auto mode = *parse_mode(ctx.opt.mode);
    auto options = metrics_options(ctx.opt);

    const auto chain = chain_yearly(in.data, from, to, settings);
    const auto breaks = breaks_of(ctx.opt, from, to);
    options.stage_breaks = breaks;
    const auto stages = aggregate_stages(chain, breaks);
    const auto total = mode == DecompositionMode::Chain ? sum_results(chain) : decompose_endpoint(in.data, from, to, settings);
    const auto series = scale_series(chain, in.data, options);

    std::vector<DecompositionResult> rated = stages;
    rated.push_back(total);

    const auto t_chain = interval_table(chain, "chain");
    const auto t_stages = interval_table(stages, "stages");
    const auto t_total = driver_table(total, "total");
    const auto t_rates = rates_table(rated);
    const auto t_enduse = enduse_table(rated);
    const auto t_metrics = metrics_table(series);
    const auto t_shares = stage_share_table(series);
    const auto f1 = fig_intensity_drivers(in.data, chain, stages);
    const auto f2 = fig_enduse_emission_factor(stages, total);
    const auto f3 = fig_decarbonization(series);
    const auto f4 = fig_scales(series);

    auto manifest = manifest_of(ctx, in, std::pair{from, to});
    manifest.notes = kDefinitionNotes;
    manifest.notes.push_back("negative drivers: " + std::string(to_string(options.drivers)));

    Options file_opt = ctx.opt;
    if (file_opt.out_dir.empty()) file_opt.out_dir = "report";
    const Context file_ctx{file_opt, ctx.command, ctx.out, ctx.err};
    emit(file_ctx, manifest,
         {&t_chain, &t_stages, &t_total, &t_rates, &t_enduse, &t_metrics, &t_shares, &f1, &f2, &f3, &f4});
    if (file_opt.format == "json") {
        // Plot-ready files are always long-format CSV.
        Options csv_opt = file_opt;
        csv_opt.format = "csv";
        emit(Context{csv_opt, ctx.command, ctx.out, ctx.err}, manifest, {&f1, &f2, &f3, &f4});
    }
    auto mf = open_output(fs::path(file_opt.out_dir) / "manifest.json");
    mf << manifest.to_json().dump(2) << '\n';
    ctx.out << "report written to " << file_opt.out_dir << '\n';
    return kOk;
}

// Wiring ------------------------------------------------------------------------

enum Flag : unsigned {
    kInput = 1u << 0,
    kRange = 1u << 1,
    kEngine = 1u << 2,
    kMode = 1u << 3,
    kOutput = 1u << 4,
    kBreaks = 1u << 5,
    kMetrics = 1u << 6,
    kScenario = 1u << 7,
};

void add_flags(CLI::App* sub, Options& opt, unsigned flags) {
    if (flags & kInput) {
        sub->add_option("--input", opt.input, "Dataset CSV (or fixture:NAME with DSD_SEED_FIXTURES=1)")->required();
        sub->add_option("--units", opt.units, "Unit declaration JSON (default: base units)");
    }
    if (flags & kRange) {
        sub->add_option("--from", opt.from, "First year (default: first year in data)");
        sub->add_option("--to", opt.to, "Last year (default: last year in data)");
    }
    if (flags & kEngine) {
        sub->add_option("--segments", opt.segments, "Euler segments per interval")->capture_default_str();
        sub->add_option("--slack", opt.slack, "Slack scheme")
            ->check(CLI::IsMember({"uniform", "proportional"}))
            ->capture_default_str();
    }
    if (flags & kMode) {
        sub->add_option("--mode", opt.mode, "Total over the range: chained yearly runs or one endpoint run")
            ->check(CLI::IsMember({"chain", "endpoint"}))
            ->capture_default_str();
    }
    if (flags & kOutput) {
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--out", opt.out_dir, "Write files into this directory instead of stdout");
    }
    if (flags & kBreaks) {
        sub->add_option("--breaks", opt.breaks, "Stage break years (default: every five years)")->delimiter(',');
    }
    if (flags & kMetrics) {
        sub->add_option("--scales", opt.scales,
                        "Comma list of total,efficiency,household,capita,floor_area,expenditure");
        sub->add_option("--negative-drivers", opt.negative, "Drivers counted as decarbonization")
            ->check(CLI::IsMember({"all", "intensity-factor"}))
            ->capture_default_str();
    }
    if (flags & kScenario) {
        sub->add_option("--year", opt.year, "Year whose state is shifted");
        sub->add_option("--shift", opt.shifts, "USE=DELTA share shift (repeatable)")->allow_extra_args(false);
    }
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Decompose residential carbon-intensity changes into drivers"};
    app.name(args.empty() ? "dsd" : fs::path(args.front()).filename().string());
    app.require_subcommand(1);

    using Handler = int (*)(const Context&);
    struct Command {
        const char* name;
        const char* help;
        unsigned flags;
        Handler handler;
    };
    const unsigned run = kInput | kRange | kEngine | kOutput;
    const Command commands[] = {
        {"validate", "Load and validate a dataset", kInput, cmd_validate},
        {"factors", "Print the factor identity state for every year", kInput | kOutput, cmd_factors},
        {"decompose", "Per-driver contributions over --from..--to", run | kMode, cmd_decompose},
        {"chain", "Yearly chained decomposition", run, cmd_chain},
        {"stages", "Stage aggregates of the yearly chain", run | kBreaks, cmd_stages},
        {"enduse", "Per-end-use emission-factor and structure effects", run | kMode | kBreaks, cmd_enduse},
        {"metrics", "Six decarbonization scales", run | kBreaks | kMetrics, cmd_metrics},
        {"scenario", "Counterfactual end-use share shift", kInput | kEngine | kOutput | kScenario, cmd_scenario},
        {"crosscheck", "Engine vs fine-step reference vs LMDI", kInput | kRange | kEngine | kOutput, cmd_crosscheck},
        {"report", "Full bundle of tables and plot-ready files", run | kMode | kBreaks | kMetrics, cmd_report},
    };
    for (const auto& c : commands) add_flags(app.add_subcommand(c.name, c.help), opt, c.flags);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("dsd");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& ex) {
        err << "usage error: " << ex.what() << '\n' << "run with --help for usage\n";
        return kUsageError;
    }

    for (const auto& c : commands) {
        if (!app.got_subcommand(c.name)) continue;
        const Context ctx{opt, c.name, out, err};
        try {
            return c.handler(ctx);
        } catch (const UsageError& ex) {
            err << "usage error: " << ex.what() << '\n';
            return kUsageError;
        } catch (const NumericError& ex) {
            err << "numeric error: " << ex.what() << '\n';
            return kNumericError;
        } catch (const Error& ex) {
            err << "error: " << ex.what() << '\n';
            return kInputError;
        } catch (const std::exception& ex) {
            err << "error: " << ex.what() << '\n';
            return kInputError;
        }
    }
    return kUsageError;
}

}  // namespace dsd::cli
