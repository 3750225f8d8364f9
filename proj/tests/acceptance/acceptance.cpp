// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include "generators.hpp"

#include <dsd/cli.hpp>
#include <dsd/dataset.hpp>
#include <dsd/decomposition.hpp>
#include <dsd/engine.hpp>
#include <dsd/factor_state.hpp>
#include <dsd/fixtures.hpp>
#include <dsd/metrics.hpp>
#include <dsd/oracle.hpp>
#include <dsd/units.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace dsd;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects failures of one criterion; `detail` is printed either way.
struct Check {
    bool ok = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (failures.size() < 5) failures.push_back(what);
        }
    }
};

double abs_sum(const DriverVector& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

/// Relative difference measured against the larger magnitude, or `floor` if
/// that is larger still.
double rel(double a, double b, double floor) {
    const double scale = std::max({std::abs(a), std::abs(b), floor});
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::vector<std::pair<std::string, Dataset>> all_fixtures() {
    std::vector<std::pair<std::string, Dataset>> out;
    for (auto name : fixtures::names()) out.emplace_back(std::string(name), *fixtures::by_name(name));
    return out;
}

std::pair<FactorState, FactorState> endpoint_states(const Dataset& ds, int from, int to) {
    const auto states = derive_factor_states(ds);
    auto index = [&](int y) { return static_cast<std::size_t>(&ds.at(y) - ds.records.data()); };
    return {states[index(from)], states[index(to)]};
}

// 1 ----------------------------------------------------------------------------

void additivity(Check& c) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240601);
    double worst = 0.0;
    std::size_t intervals = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto ds = testing::random_dataset(rng, {.years = 4, .zero_year_probability = 0.05});
        for (auto slack : {SlackScheme::Uniform, SlackScheme::Proportional}) {
            for (const auto& r : chain_yearly(ds, ds.first_year(), ds.last_year(), {.slack = slack})) {
                const double err = std::abs(r.contribution_sum() - r.delta_c) / std::max(1.0, std::abs(r.delta_c));
                worst = std::max(worst, err);
                ++intervals;
            }
        }
    }
    const double secs = seconds_since(t0);
    c.expect(worst <= 1e-9, "additivity error " + std::to_string(worst));
    c.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
    c.detail << "1000 datasets, " << intervals << " intervals, max scaled error " << worst << ", " << secs << " s";
}

// 2 ----------------------------------------------------------------------------

void analytic_oracle(Check& c) {
    double worst = 0.0;
    auto run_toy = [&](const oracle::ToyIdentity& toy, const std::vector<double>& expected) {
        const auto [start, end] = oracle::embed_toy(toy);
        const auto r = run_dsd(start, end, {.segments = 16000});
        const auto exact = oracle::analytic_line_integral(toy);
        for (std::size_t i = 0; i < expected.size(); ++i) {
            const double got = at(r.contributions, oracle::toy_driver(i));
            worst = std::max(worst, std::abs(got - expected[i]));
            c.expect(std::abs(exact[i] - expected[i]) <= 1e-12, "closed form disagrees with the frozen value");
        }
    };
    run_toy({{1, 1}, {2, 3}}, {2.0, 3.0});
    run_toy({{1, 1, 1}, {2, 2, 2}}, {7.0 / 3.0, 7.0 / 3.0, 7.0 / 3.0});
    c.expect(worst <= 1e-3, "toy error " + std::to_string(worst));
    c.detail << "c = g*s and symmetric three-factor toys at N=16000, max abs error " << worst;
}

// 3 ----------------------------------------------------------------------------

void convergence(Check& c) {
    constexpr std::size_t kN = 16000;
    constexpr std::size_t kReference = 1024000;
    double worst = 0.0;
    std::size_t runs = 0;
    for (const auto& [name, ds] : all_fixtures()) {
        auto compare = [&](const FactorState& a, const FactorState& b, const std::string& where) {
            const auto engine = run_dsd(a, b, {.segments = kN});
            const auto ref = oracle::fine_step_reference(a, b, kReference);
            for (DriverId d : kAllDrivers) {
                const double e = rel(at(engine.contributions, d), at(ref.contributions, d), 0.0);
                worst = std::max(worst, e);
                c.expect(e <= 1e-4, name + " " + where + " " + d.name() + " rel " + std::to_string(e));
            }
            ++runs;
        };
        const auto states = derive_factor_states(ds);
        for (std::size_t i = 0; i + 1 < states.size(); ++i) {
            compare(states[i], states[i + 1], std::to_string(ds.records[i].year));
        }
        const auto [a, b] = endpoint_states(ds, ds.first_year(), ds.last_year());
        compare(a, b, "endpoint");
    }

    // Toys with known exact values: the error must shrink at first order.
    double worst_ratio = 0.0;
    for (const oracle::ToyIdentity& toy :
         {oracle::ToyIdentity{{1, 1}, {2, 3}}, oracle::ToyIdentity{{1, 1, 2}, {2, 0.5, 3}},
          oracle::ToyIdentity{{1.5, 0.8, 2, 1}, {0.9, 1.7, 2.5, 1.3}}}) {
        const auto exact = oracle::analytic_line_integral(toy);
        const auto [start, end] = oracle::embed_toy(toy);
        auto error = [&](std::size_t n) {
            const auto r = run_dsd(start, end, {.segments = n});
            double e = 0.0;
            for (std::size_t i = 0; i < exact.size(); ++i) {
                e = std::max(e, std::abs(at(r.contributions, oracle::toy_driver(i)) - exact[i]));
            }
            return e;
        };
        const double coarse = error(kN), fine = error(2 * kN);
        const double ratio = coarse > 0.0 ? fine / coarse : 0.0;
        worst_ratio = std::max(worst_ratio, ratio);
        c.expect(ratio <= 0.6, "error ratio " + std::to_string(ratio));
    }
    c.detail << runs << " fixture intervals vs N=" << kReference << " reference, max rel " << worst
             << "; worst toy error ratio err(2N)/err(N) = " << worst_ratio;
}

// 4 ----------------------------------------------------------------------------

void closure(Check& c) {
    double worst_sum = 0.0, worst_slack = 0.0;
    std::size_t segments = 0;
    auto observe = [&](const SegmentTrace& t) {
        worst_sum = std::max(worst_sum, std::abs(t.share_change_sum));
        worst_slack = std::max(worst_slack, std::abs(t.slack));
        ++segments;
    };
    for (const auto& [name, ds] : all_fixtures()) {
        const auto states = derive_factor_states(ds);
        for (auto slack : {SlackScheme::Uniform, SlackScheme::Proportional}) {
            for (std::size_t i = 0; i + 1 < states.size(); ++i) {
                run_dsd(states[i], states[i + 1], {.segments = 16000, .slack = slack}, observe);
            }
        }
    }
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20; ++i) {
        const auto active = i % 2 ? EndUseSet::all() : EndUseSet{EndUse::Lighting, EndUse::Cooking, EndUse::SpaceHeating};
        run_dsd(testing::random_state(rng, active), testing::random_state(rng, active), {.segments = 16000}, observe);
    }
    c.expect(worst_sum <= 1e-12, "share change sum " + std::to_string(worst_sum));
    c.expect(worst_slack <= 1e-12, "slack " + std::to_string(worst_slack));
    c.detail << segments << " segments, max |sum dw| " << worst_sum << ", max |F| " << worst_slack;
}

// 5 ----------------------------------------------------------------------------

/// A random path where every factor moves in one direction. Share moves are
/// a single transfer from one use to another whose emission factor is higher
/// at both ends, so the structure effect has a definite sign as well.
std::pair<FactorState, FactorState> monotone_pair(std::mt19937_64& rng) {
    const auto start = testing::random_state(rng, EndUseSet::all());
    auto move = [&](double v) { return v * std::exp(testing::uniform(rng, -0.4, 0.4)); };
    EndUseArray<double> k;
    for (EndUse u : kAllEndUses) k[u] = move(start.emission_factor[u]);

    std::uniform_int_distribution<std::size_t> pick(0, kEndUseCount - 1);
    EndUse from = kAllEndUses[pick(rng)], to = from;
    while (to == from) to = kAllEndUses[pick(rng)];
    if (start.emission_factor[to] < start.emission_factor[from]) std::swap(from, to);
    k[to] = std::max(k[to], 1.1 * k[from]);  // dominate at the end as well
    EndUseArray<double> w = start.share;
    const double moved = w[from] * testing::uniform(rng, 0.05, 0.6);
    w[from] -= moved;
    w[to] += moved;
    const auto end = make_factor_state(start.active, move(start.energy_intensity), move(start.household_size),
                                       move(start.gdp_per_capita), move(start.expenditure_index), k, w);
    return {start, end};
}

/// The entries both methods define in the same way: e, p, g, s, each k_u and
/// the total structure effect. Per-use structure terms are not comparable:
/// LMDI books each gross share move, the slack-netted terms here measure each
/// move against the slack-weighted mean emission factor.
struct Comparable {
    std::vector<std::string> names;
    std::vector<double> values;
};

Comparable comparable(const DriverVector& v) {
    Comparable out;
    double structure = 0.0;
    for (DriverId d : kAllDrivers) {
        if (d.kind() == DriverKind::ShareShift) {
            structure += at(v, d);
        } else {
            out.names.push_back(d.name());
            out.values.push_back(at(v, d));
        }
    }
    out.names.push_back("structure_total");
    out.values.push_back(structure);
    return out;
}

void lmdi_crosscheck(Check& c) {
    double worst_total = 0.0;
    std::size_t sign_checks = 0;
    std::mt19937_64 rng(991);
    for (int i = 0; i < 200; ++i) {
        const auto [start, end] = monotone_pair(rng);
        const auto r = run_dsd(start, end);
        const auto l = oracle::lmdi_decompose(start, end);
        double lsum = 0.0;
        for (double x : l) lsum += x;
        const double scale = std::max(1.0, std::abs(r.delta_c));
        worst_total = std::max({worst_total, std::abs(lsum - r.delta_c) / scale,
                                std::abs(r.contribution_sum() - r.delta_c) / scale});
        const double negligible = 1e-9 * abs_sum(l);
        const auto ca = comparable(r.contributions), cb = comparable(l);
        // The LMDI structure weights mix in the emission-factor moves, so its
        // structure sign is only pinned down when the shares move alone.
        for (std::size_t j = 0; j + 1 < ca.values.size(); ++j) {
            const double a = ca.values[j], b = cb.values[j];
            if (std::abs(a) <= negligible && std::abs(b) <= negligible) continue;
            c.expect((a > 0) == (b > 0), "sign disagreement on " + ca.names[j]);
            ++sign_checks;
        }
        const auto shares_only = make_factor_state(start.active, start.energy_intensity, start.household_size,
                                                   start.gdp_per_capita, start.expenditure_index,
                                                   start.emission_factor, end.share);
        const double a = comparable(run_dsd(start, shares_only).contributions).values.back();
        const double b = comparable(oracle::lmdi_decompose(start, shares_only)).values.back();
        c.expect(a > 0 && b > 0, "structure sign on a share-only transfer");
        ++sign_checks;
    }
    c.expect(worst_total <= 1e-9, "totals differ by " + std::to_string(worst_total));

    // Smooth national-scale paths, compared interval by interval over the
    // chained years.
    double worst_rel = 0.0;
    const auto ds = fixtures::smooth();
    const auto states = derive_factor_states(ds);
    for (std::size_t i = 0; i + 1 < states.size(); ++i) {
        const auto r = run_dsd(states[i], states[i + 1]);
        const auto l = oracle::lmdi_decompose(states[i], states[i + 1]);
        const auto ca = comparable(r.contributions), cb = comparable(l);
        for (std::size_t j = 0; j < ca.values.size(); ++j) {
            const double e = rel(ca.values[j], cb.values[j], 0.0);
            worst_rel = std::max(worst_rel, e);
            c.expect(e <= 0.05, "smooth " + std::to_string(ds.records[i].year) + " " + ca.names[j] + " rel " +
                                    std::to_string(e));
        }
    }
    c.detail << "200 monotone paths, max total gap " << worst_total << ", " << sign_checks
             << " sign checks; smooth fixture yearly max rel " << worst_rel;
}

// 6 ----------------------------------------------------------------------------

EndUse rotate(EndUse u) { return static_cast<EndUse>((index_of(u) + 2) % kEndUseCount); }

template <class T>
EndUseArray<T> rotated(const EndUseArray<T>& a) {
    EndUseArray<T> out;
    for (EndUse u : kAllEndUses) out[rotate(u)] = a[u];
    return out;
}

void invariance(Check& c) {
    std::mt19937_64 rng(4242);
    double worst_perm = 0.0, worst_units = 0.0, worst_single = 0.0;

    for (int i = 0; i < 25; ++i) {
        const auto ds = testing::random_dataset(rng, {.years = 3});

        // End-use relabelling.
        std::vector<YearRecord> recs = ds.records;
        for (auto& r : recs) {
            r.energy = rotated(r.energy);
            r.emissions = rotated(r.emissions);
        }
        const auto perm = make_dataset("rotated", recs);
        const auto a = chain_yearly(ds, 2000, 2002);
        const auto b = chain_yearly(perm, 2000, 2002);
        for (std::size_t t = 0; t < a.size(); ++t) {
            for (DriverId d : kAllDrivers) {
                DriverId mapped = d;
                if (d.kind() == DriverKind::EmissionFactor) mapped = DriverId::emission_factor(rotate(*d.end_use()));
                if (d.kind() == DriverKind::ShareShift) mapped = DriverId::share_shift(rotate(*d.end_use()));
                const double e = rel(at(a[t].contributions, d), at(b[t].contributions, mapped), 0.0);
                worst_perm = std::max(worst_perm, e);
            }
        }

        // Energy in TJ, currency in billions, emissions in tCO2.
        std::vector<YearRecord> scaled = ds.records;
        for (auto& r : scaled) {
            r.gdp *= 1e-3;
            r.hce *= 1e-3;
            for (EndUse u : kAllEndUses) {
                r.energy[u] *= 1e3;
                r.emissions[u] *= 1e3;
            }
        }
        std::ostringstream csv;
        write_dataset(csv, make_dataset("scaled", scaled));
        std::istringstream units(R"({"population": "persons", "households": "households",
            "gdp": "billion_currency", "hce": "billion_currency", "floor_area": "m2", "energy": "TJ",
            "emissions": "tCO2"})");
        std::istringstream in(csv.str());
        const auto reloaded = load_dataset(in, UnitConfig::parse(units));
        const auto u = chain_yearly(reloaded, 2000, 2002);
        for (std::size_t t = 0; t < a.size(); ++t) {
            for (DriverId d : kAllDrivers) {
                worst_units = std::max(worst_units, rel(at(a[t].contributions, d), at(u[t].contributions, d), 0.0));
            }
        }

        // The same change of units applied to the factors directly: e and k
        // trade a factor for energy, e and g for currency.
        const auto [s0, s1] = endpoint_states(ds, 2000, 2002);
        auto rescale = [](const FactorState& s, double energy, double currency) {
            EndUseArray<double> k = s.emission_factor;
            for (double& x : k) x /= energy;
            return make_factor_state(s.active, s.energy_intensity * energy / currency, s.household_size,
                                     s.gdp_per_capita * currency, s.expenditure_index, k, s.share);
        };
        const auto base = run_dsd(s0, s1);
        const auto other = run_dsd(rescale(s0, 3.6, 7.0), rescale(s1, 3.6, 7.0));
        for (DriverId d : kAllDrivers) {
            worst_units = std::max(worst_units, rel(at(base.contributions, d), at(other.contributions, d), 0.0));
        }

        // Single moving driver among e, p, g, s and k_u.
        FactorState moved = s0;
        const DriverId d = DriverId::from_index(static_cast<std::size_t>(i) % (kScalarDriverCount + kEndUseCount));
        double e = s0.energy_intensity, p = s0.household_size, g = s0.gdp_per_capita, sx = s0.expenditure_index;
        EndUseArray<double> k = s0.emission_factor;
        const double f = 1.0 + testing::uniform(rng, -0.3, 0.3);
        switch (d.kind()) {
            case DriverKind::EnergyIntensity: e *= f; break;
            case DriverKind::HouseholdSize: p *= f; break;
            case DriverKind::GdpPerCapita: g *= f; break;
            case DriverKind::ExpenditureShare: sx *= f; break;
            default: {
                const auto use = *d.end_use();
                if (!s0.active.contains(use)) continue;
                k[use] *= f;
            }
        }
        moved = make_factor_state(s0.active, e, p, g, sx, k, s0.share);
        const auto single = run_dsd(s0, moved);
        for (DriverId other_driver : kAllDrivers) {
            const double v = at(single.contributions, other_driver);
            if (other_driver == d) {
                worst_single = std::max(worst_single, rel(v, single.delta_c, 0.0));
            } else {
                c.expect(v == 0.0, "single-driver run leaked into " + other_driver.name());
            }
        }
    }
    c.expect(worst_perm <= 1e-9, "permutation rel " + std::to_string(worst_perm));
    c.expect(worst_units <= 1e-9, "unit rescaling rel " + std::to_string(worst_units));
    c.expect(worst_single <= 1e-12, "single driver rel " + std::to_string(worst_single));
    c.detail << "permutation max rel " << worst_perm << ", unit rescaling max rel " << worst_units
             << ", single-driver max rel " << worst_single;
}

// 7 ----------------------------------------------------------------------------

void metrics_consistency(Check& c) {
    const auto ds = fixtures::paper_shaped();
    const auto states = derive_factor_states(ds);
    c.expect(std::abs(states.front().carbon_intensity - 1125.0) <= 1e-9, "2000 intensity");
    c.expect(std::abs(states.back().carbon_intensity - 1492.0) <= 1e-9, "2020 intensity");

    const auto chain = chain_yearly(ds, 2000, 2020);
    const auto series = scale_series(chain, ds);
    double worst = 0.0;
    auto cmp = [&](double got, double want, const std::string& what) {
        const double e = rel(got, want, 0.0);
        worst = std::max(worst, e);
        c.expect(e <= 1e-6, what + " rel " + std::to_string(e));
    };

    // Spreadsheet-style: one row per year, columns computed from raw records.
    double cumulative = 0.0;
    std::vector<double> d_col, hh_col, cap_col, area_col, exp_col;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto& row = ds.records[i + 1];
        double negative_kg_per_household = 0.0;
        for (double x : chain[i].contributions) negative_kg_per_household += x < 0.0 ? -x : 0.0;
        const double d_kg = negative_kg_per_household * row.households;
        const double d_mt = d_kg / 1e9;
        double emissions_kt = 0.0;
        for (double x : row.emissions) emissions_kt += x;
        const double emissions_mt = emissions_kt / 1e3;
        cumulative += d_mt;

        const auto& y = series.years[i];
        c.expect(y.year == row.year, "year alignment");
        cmp(y.decarbonization, d_mt, "D");
        cmp(y.emissions, emissions_mt, "C");
        cmp(y.efficiency, d_mt / (emissions_mt + d_mt), "efficiency");
        cmp(y.per_household, d_kg / row.households, "per household");
        cmp(y.per_capita, d_kg / row.population, "per capita");
        cmp(y.per_floor_area.value_or(-1.0), d_kg / *row.floor_area, "per floor area");
        cmp(y.per_expenditure, d_kg / (row.hce * 1e3), "per expenditure");
        cmp(y.cumulative, cumulative, "cumulative");
        d_col.push_back(d_mt);
        hh_col.push_back(d_kg / row.households);
        cap_col.push_back(d_kg / row.population);
        area_col.push_back(d_kg / *row.floor_area);
        exp_col.push_back(d_kg / (row.hce * 1e3));
    }

    auto stage_percent = [](const std::vector<double>& col, int from, int to) {
        double part = 0.0, whole = 0.0;
        for (std::size_t i = 0; i < col.size(); ++i) {
            const int year = 2001 + static_cast<int>(i);
            whole += col[i];
            if (year > from && year <= to) part += col[i];
        }
        return 100.0 * part / whole;
    };
    double sums[5] = {};
    for (const auto& s : series.stages) {
        cmp(s.share, stage_percent(d_col, s.start_year, s.end_year), "stage share");
        cmp(s.per_household_share, stage_percent(hh_col, s.start_year, s.end_year), "stage household share");
        cmp(s.per_capita_share, stage_percent(cap_col, s.start_year, s.end_year), "stage capita share");
        cmp(s.per_floor_area_share.value_or(-1.0), stage_percent(area_col, s.start_year, s.end_year),
            "stage floor area share");
        cmp(s.per_expenditure_share, stage_percent(exp_col, s.start_year, s.end_year), "stage expenditure share");
        sums[0] += s.share;
        sums[1] += s.per_household_share;
        sums[2] += s.per_capita_share;
        sums[3] += s.per_floor_area_share.value_or(0.0);
        sums[4] += s.per_expenditure_share;
    }
    for (double s : sums) c.expect(std::abs(s - 100.0) <= 1e-9, "stage shares sum to " + std::to_string(s));
    c.detail << "paper-shaped 1125 -> 1492, " << series.years.size() << " years, " << series.stages.size()
             << " stages, max rel " << worst << ", cumulative " << cumulative << " Mt";
}

// 8 ----------------------------------------------------------------------------

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "dsd");
    std::ostringstream out, err;
    const int code = cli::execute(args, out, err);
    return {code, out.str()};
}

std::string read_file(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void cli_contract(Check& c) {
    const fs::path data = DSD_TEST_DATA_DIR;
    const fs::path golden = DSD_GOLDEN_DIR;
    // Golden files record paths relative to the tests directory.
    const auto cwd = fs::current_path();
    fs::current_path(data.parent_path());

    std::size_t goldens = 0;
    for (const char* cmd : {"decompose", "chain", "stages", "enduse", "metrics"}) {
        const std::vector<std::string> args{cmd,          "--input",    "data/sample.csv", "--units",
                                            "data/sample_units.json", "--segments", "4000"};
        const auto first = cli(args);
        const auto second = cli(args);
        c.expect(first.code == 0, std::string(cmd) + " exit " + std::to_string(first.code));
        c.expect(first.out == second.out, std::string(cmd) + " differs across runs");
        c.expect(first.out == read_file(golden / ("sample_" + std::string(cmd) + ".csv")),
                 std::string(cmd) + " differs from the golden file");
        ++goldens;
    }

    const int validation = cli({"decompose", "--input", "data/negative_energy.csv"}).code;
    const int missing = cli({"decompose", "--input", "data/missing_households.csv"}).code;
    const int usage = cli({"decompose", "--input", "data/sample.csv", "--segmets", "100"}).code;
    const int numeric = cli({"scenario", "--input", "data/sample.csv", "--units", "data/sample_units.json", "--year",
                             "2000", "--shift", "cooking=0.9"})
                            .code;
    fs::current_path(cwd);
    c.expect(validation == 1, "validation exit " + std::to_string(validation));
    c.expect(missing == 1, "schema exit " + std::to_string(missing));
    c.expect(usage == 2, "usage exit " + std::to_string(usage));
    c.expect(numeric == 3, "numeric exit " + std::to_string(numeric));

    ::setenv("DSD_SEED_FIXTURES", "1", 1);
    const auto t0 = Clock::now();
    const auto chain = cli({"chain", "--input", "fixture:paper-shaped", "--from", "2000", "--to", "2020",
                            "--segments", "16000"});
    const double secs = seconds_since(t0);
    ::unsetenv("DSD_SEED_FIXTURES");
    c.expect(chain.code == 0, "chain exit " + std::to_string(chain.code));
    c.expect(secs < 5.0, "chain took " + std::to_string(secs) + " s");
    c.detail << goldens << " golden outputs byte-identical, exit codes " << validation << "/" << usage << "/"
             << numeric << ", 2000-2020 chain at N=16000 in " << secs << " s";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"additivity", additivity},
        {"analytic oracle", analytic_oracle},
        {"convergence", convergence},
        {"closure", closure},
        {"LMDI cross-check", lmdi_crosscheck},
        {"invariance", invariance},
        {"metrics self-consistency", metrics_consistency},
        {"CLI contract", cli_contract},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (c.ok ? "PASS" : "FAIL") << " - "
                  << c.detail.str() << '\n';
        for (const auto& f : c.failures) std::cout << "    " << f << '\n';
        std::cout.flush();
        if (!c.ok) ++failed;
    }
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
