#include "dsd/report.hpp"

#include <dsd/driver.hpp>

#include <algorithm>

namespace dsd::cli {

namespace {

Cell year(int y) { return static_cast<std::int64_t>(y); }

Cell rate_or_empty(const std::optional<DriverVector>& rates, std::size_t j) {
    if (!rates) return std::monostate{};
    return (*rates)[j];
}

const char* kGroupNames[] = {"energy_intensity", "household_size", "gdp_per_capita",
                             "expenditure_share", "emission_factor", "structure"};

std::array<double, 6> groups(const DecompositionResult& r) {
    const auto g = group_contributions(r);
    return {g.energy_intensity, g.household_size, g.gdp_per_capita,
            g.expenditure_share, g.emission_factor, g.structure};
}

}  // namespace

Table driver_table(const DecompositionResult& r, std::string name) {
    Table t{std::move(name), {"driver", "contribution", "rate_percent"}, {}};
    const auto rates = contribution_rates(r);
    for (DriverId d : kAllDrivers) {
        t.add({d.name(), at(r.contributions, d), rate_or_empty(rates, d.index())});
    }
    t.add({std::string("delta_c"), r.delta_c, rates ? Cell{100.0} : Cell{}});
    return t;
}

Table interval_table(std::span<const DecompositionResult> results, std::string name) {
    Table t{std::move(name), {"start_year", "end_year", "delta_c"}, {}};
    for (DriverId d : kAllDrivers) t.columns.push_back(d.name());
    for (const auto& r : results) {
        std::vector<Cell> row{year(r.start_year), year(r.end_year), r.delta_c};
        for (double c : r.contributions) row.emplace_back(c);
        t.add(std::move(row));
    }
    return t;
}

Table rates_table(std::span<const DecompositionResult> results) {
    Table t{"rates", {"start_year", "end_year", "driver", "contribution", "rate_percent"}, {}};
    for (const auto& r : results) {
        const auto rates = contribution_rates(r);
        for (DriverId d : kAllDrivers) {
            t.add({year(r.start_year), year(r.end_year), d.name(), at(r.contributions, d),
                   rate_or_empty(rates, d.index())});
        }
    }
    return t;
}

Table factors_table(const Dataset& ds, std::span<const FactorState> states) {
    Table t{"factors", {"year", "carbon_intensity", "energy_intensity", "household_size", "gdp_per_capita",
                        "expenditure_index"},
            {}};
    for (EndUse u : kAllEndUses) t.columns.push_back("k:" + std::string(to_string(u)));
    for (EndUse u : kAllEndUses) t.columns.push_back("w:" + std::string(to_string(u)));
    for (EndUse u : kAllEndUses) t.columns.push_back("e:" + std::string(to_string(u)));
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& s = states[i];
        std::vector<Cell> row{year(ds.records[i].year), s.carbon_intensity, s.energy_intensity, s.household_size,
                              s.gdp_per_capita, s.expenditure_index};
        for (EndUse u : kAllEndUses) row.emplace_back(s.emission_factor[u]);
        for (EndUse u : kAllEndUses) row.emplace_back(s.share[u]);
        for (EndUse u : kAllEndUses) row.emplace_back(s.use_intensity[u]);
        t.add(std::move(row));
    }
    return t;
}

Table enduse_table(std::span<const DecompositionResult> results) {
    Table t{"enduse", {"start_year", "end_year", "end_use", "dk", "dw", "dk_rate_percent"}, {}};
    for (const auto& r : results) {
        const auto b = enduse_breakdown(r);
        const auto rates = contribution_rates(r);
        for (EndUse u : kAllEndUses) {
            t.add({year(r.start_year), year(r.end_year), std::string(to_string(u)), b.dk[u], b.dw[u],
                   rate_or_empty(rates, DriverId::emission_factor(u).index())});
        }
    }
    return t;
}

Table metrics_table(const DecarbSeries& series) {
    auto has = [&](Scale s) {
        return std::find(series.scales.begin(), series.scales.end(), s) != series.scales.end();
    };
    Table t{"metrics", {"year"}, {}};
    if (has(Scale::Total)) {
        t.columns.push_back("decarbonization_mt");
        t.columns.push_back("cumulative_mt");
    }
    if (has(Scale::Efficiency)) t.columns.push_back("efficiency");
    if (has(Scale::PerHousehold)) t.columns.push_back("per_household_kg");
    if (has(Scale::PerCapita)) t.columns.push_back("per_capita_kg");
    if (has(Scale::PerFloorArea)) t.columns.push_back("per_floor_area_kg_m2");
    if (has(Scale::PerExpenditure)) t.columns.push_back("per_expenditure_kg_per_thousand");
    for (const auto& y : series.years) {
        std::vector<Cell> row{year(y.year)};
        if (has(Scale::Total)) {
            row.emplace_back(y.decarbonization);
            row.emplace_back(y.cumulative);
        }
        if (has(Scale::Efficiency)) row.emplace_back(y.efficiency);
        if (has(Scale::PerHousehold)) row.emplace_back(y.per_household);
        if (has(Scale::PerCapita)) row.emplace_back(y.per_capita);
        if (has(Scale::PerFloorArea)) row.emplace_back(y.per_floor_area.value_or(0.0));
        if (has(Scale::PerExpenditure)) row.emplace_back(y.per_expenditure);
        t.add(std::move(row));
    }
    return t;
}

Table stage_share_table(const DecarbSeries& series) {
    Table t{"stage_shares",
            {"start_year", "end_year", "decarbonization_mt", "share_percent", "per_household_share_percent",
             "per_capita_share_percent", "per_floor_area_share_percent", "per_expenditure_share_percent"},
            {}};
    for (const auto& s : series.stages) {
        t.add({year(s.start_year), year(s.end_year), s.decarbonization, s.share, s.per_household_share,
               s.per_capita_share, s.per_floor_area_share ? Cell{*s.per_floor_area_share} : Cell{},
               s.per_expenditure_share});
    }
    return t;
}

Table fig_intensity_drivers(const Dataset& ds, std::span<const DecompositionResult> chain,
                            std::span<const DecompositionResult> stages) {
    Table t{"fig1_intensity_drivers", {"year", "series", "value"}, {}};
    if (!chain.empty()) {
        const auto states = derive_factor_states(ds);
        for (std::size_t i = 0; i < ds.records.size(); ++i) {
            const int y = ds.records[i].year;
            if (y < chain.front().start_year || y > chain.back().end_year) continue;
            t.add({year(y), std::string("carbon_intensity"), states[i].carbon_intensity});
        }
    }
    for (const auto& r : chain) {
        const auto g = groups(r);
        for (std::size_t i = 0; i < g.size(); ++i) t.add({year(r.end_year), std::string(kGroupNames[i]), g[i]});
    }
    for (const auto& r : stages) {
        const auto g = groups(r);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const Cell rate = r.delta_c != 0.0 && contribution_rates(r) ? Cell{100.0 * g[i] / r.delta_c} : Cell{};
            t.add({year(r.end_year), "stage_rate:" + std::string(kGroupNames[i]), rate});
        }
    }
    return t;
}

Table fig_enduse_emission_factor(std::span<const DecompositionResult> stages, const DecompositionResult& total) {
    Table t{"fig2_enduse_emission_factor", {"year", "series", "value"}, {}};
    auto emit = [&](const DecompositionResult& r, const std::string& prefix) {
        const auto b = enduse_breakdown(r);
        const auto rates = contribution_rates(r);
        for (EndUse u : kAllEndUses) {
            const auto name = std::string(to_string(u));
            t.add({year(r.end_year), prefix + "dk:" + name, b.dk[u]});
            t.add({year(r.end_year), prefix + "rate:" + name,
                   rate_or_empty(rates, DriverId::emission_factor(u).index())});
        }
    };
    for (const auto& r : stages) emit(r, "stage_");
    emit(total, "total_");
    return t;
}

Table fig_decarbonization(const DecarbSeries& series) {
    Table t{"fig3_decarbonization", {"year", "series", "value"}, {}};
    for (const auto& y : series.years) {
        t.add({year(y.year), std::string("decarbonization_mt"), y.decarbonization});
        t.add({year(y.year), std::string("cumulative_mt"), y.cumulative});
        t.add({year(y.year), std::string("efficiency"), y.efficiency});
    }
    for (const auto& s : series.stages) t.add({year(s.end_year), std::string("stage_share_percent"), s.share});
    return t;
}

Table fig_scales(const DecarbSeries& series) {
    Table t{"fig4_scales", {"year", "series", "value"}, {}};
    for (const auto& y : series.years) {
        t.add({year(y.year), std::string("per_household_kg"), y.per_household});
        t.add({year(y.year), std::string("per_capita_kg"), y.per_capita});
        if (y.per_floor_area) t.add({year(y.year), std::string("per_floor_area_kg_m2"), *y.per_floor_area});
        t.add({year(y.year), std::string("per_expenditure_kg_per_thousand"), y.per_expenditure});
    }
    return t;
}

}  // namespace dsd::cli
