#include "dsd/metrics.hpp"

#include "dsd/decomposition.hpp"
#include "dsd/error.hpp"
#include "dsd/factor_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dsd {

namespace {

constexpr double kKgPerMt = 1e9;

bool counts(DriverId d, NegativeDrivers drivers) {
    if (drivers == NegativeDrivers::All) return true;
    return d.kind() == DriverKind::EnergyIntensity || d.kind() == DriverKind::EmissionFactor;
}

bool wants(const std::vector<Scale>& scales, Scale s) {
    return std::find(scales.begin(), scales.end(), s) != scales.end();
}

double percent(double part, double whole) { return whole > 0.0 ? 100.0 * part / whole : 0.0; }

}  // namespace

std::string_view to_string(NegativeDrivers n) noexcept {
    return n == NegativeDrivers::All ? "all" : "intensity-factor";
}

std::optional<NegativeDrivers> parse_negative_drivers(std::string_view name) noexcept {
    if (name == "all") return NegativeDrivers::All;
    if (name == "intensity-factor") return NegativeDrivers::IntensityFactor;
    return std::nullopt;
}

std::string_view to_string(Scale s) noexcept {
    switch (s) {
        case Scale::Total: return "total";
        case Scale::Efficiency: return "efficiency";
        case Scale::PerHousehold: return "household";
        case Scale::PerCapita: return "capita";
        case Scale::PerFloorArea: return "floor_area";
        case Scale::PerExpenditure: return "expenditure";
    }
    return "?";
}

std::optional<Scale> parse_scale(std::string_view name) noexcept {
    for (Scale s : kAllScales) {
        if (to_string(s) == name) return s;
    }
    return std::nullopt;
}

double annual_decarbonization(const DecompositionResult& yearly, const YearRecord& record_end,
                              NegativeDrivers drivers) {
    if (yearly.end_year != record_end.year) {
        throw DomainError("step ending " + std::to_string(yearly.end_year) + " paired with record of year " +
                          std::to_string(record_end.year));
    }
    double avoided = 0.0;  // kgCO2 per household
    for (DriverId d : kAllDrivers) {
        const double c = at(yearly.contributions, d);
        if (c < 0.0 && counts(d, drivers)) avoided += -c;
    }
    return avoided * record_end.households / kKgPerMt;
}

double decarbonization_efficiency(double decarbonization_mt, double emissions_mt) {
    if (!(emissions_mt > 0.0)) throw DomainError("efficiency needs positive emissions");
    if (decarbonization_mt < 0.0) throw DomainError("decarbonization cannot be negative");
    return decarbonization_mt / (emissions_mt + decarbonization_mt);
}

DecarbSeries scale_series(std::span<const DecompositionResult> chain, const Dataset& ds,
                          const MetricsOptions& options) {
    if (chain.empty()) throw DomainError("metrics need at least one yearly result");
    const Dataset full = ds.gap_free() || ds.records.size() < 2 ? ds : interpolate_years(ds);

    DecarbSeries out;
    out.drivers = options.drivers;
    bool floor_area_available = true;
    for (const auto& r : chain) {
        if (!full.at(r.end_year).floor_area) floor_area_available = false;
    }
    if (options.scales.empty()) {
        for (Scale s : kAllScales) {
            if (s != Scale::PerFloorArea || floor_area_available) out.scales.push_back(s);
        }
    } else {
        out.scales = options.scales;
        if (wants(out.scales, Scale::PerFloorArea) && !floor_area_available) {
            throw UnsupportedScaleError("per-floor-area scale requested but floor_area is missing");
        }
    }
    const bool with_area = wants(out.scales, Scale::PerFloorArea);

    for (const auto& r : chain) {
        const auto& rec = full.at(r.end_year);
        DecarbYear y;
        y.year = r.end_year;
        y.decarbonization = annual_decarbonization(r, rec, options.drivers);
        y.emissions = rec.total_emissions() / 1e3;
        y.efficiency = decarbonization_efficiency(y.decarbonization, y.emissions);
        const double kg = y.decarbonization * kKgPerMt;
        y.per_household = kg / rec.households;
        y.per_capita = kg / rec.population;
        if (with_area) y.per_floor_area = kg / *rec.floor_area;
        y.per_expenditure = kg / (rec.hce * 1e3);
        out.cumulative += y.decarbonization;
        y.cumulative = out.cumulative;
        out.years.push_back(y);
    }

    const auto breaks = options.stage_breaks.empty()
                            ? default_stage_breaks(chain.front().start_year, chain.back().end_year)
                            : options.stage_breaks;
    // Validates breaks against the chain.
    const auto stage_results = aggregate_stages(chain, breaks);

    double sum_household = 0.0, sum_capita = 0.0, sum_area = 0.0, sum_expenditure = 0.0;
    for (const auto& y : out.years) {
        sum_household += y.per_household;
        sum_capita += y.per_capita;
        sum_area += y.per_floor_area.value_or(0.0);
        sum_expenditure += y.per_expenditure;
    }
    for (const auto& st : stage_results) {
        StageShare share;
        share.start_year = st.start_year;
        share.end_year = st.end_year;
        double household = 0.0, capita = 0.0, area = 0.0, expenditure = 0.0;
        for (const auto& y : out.years) {
            if (y.year <= st.start_year || y.year > st.end_year) continue;
            share.decarbonization += y.decarbonization;
            household += y.per_household;
            capita += y.per_capita;
            area += y.per_floor_area.value_or(0.0);
            expenditure += y.per_expenditure;
        }
        share.share = percent(share.decarbonization, out.cumulative);
        share.per_household_share = percent(household, sum_household);
        share.per_capita_share = percent(capita, sum_capita);
        if (with_area) share.per_floor_area_share = percent(area, sum_area);
        share.per_expenditure_share = percent(expenditure, sum_expenditure);
        out.stages.push_back(share);
    }
    return out;
}

}  // namespace dsd
