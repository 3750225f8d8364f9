#pragma once

#include "dsd/end_use.hpp"
#include "dsd/units.hpp"

#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsd {

/// One country-year of observations, held in base units: persons,
/// households, million constant currency, square metres, PJ, ktCO2.
struct YearRecord {
    int year = 0;
    double population = 0.0;
    double households = 0.0;
    double gdp = 0.0;
    double hce = 0.0;
    std::optional<double> floor_area;
    EndUseArray<double> energy;
    EndUseArray<double> emissions;

    double total_energy() const noexcept;
    double total_emissions() const noexcept;

    friend bool operator==(const YearRecord&, const YearRecord&) = default;
};

struct Dataset {
    std::string country;
    std::vector<YearRecord> records;  // strictly increasing years
    UnitConfig units;                 // units the data was declared in
    EndUseSet active_uses;

    const YearRecord* find(int year) const noexcept;
    /// Throws DomainError when the year is absent.
    const YearRecord& at(int year) const;

    int first_year() const;
    int last_year() const;
    bool gap_free() const noexcept;
    /// True when every record carries a floor area.
    bool has_floor_area() const noexcept;
};

/// CSV header, in canonical order.
inline constexpr std::array<std::string_view, 18> kCsvColumns = {
    "year",
    "population",
    "households",
    "gdp",
    "hce",
    "floor_area",
    "energy_space_cooling",
    "energy_space_heating",
    "energy_lighting",
    "energy_water_heating",
    "energy_cooking",
    "energy_appliances_others",
    "emis_space_cooling",
    "emis_space_heating",
    "emis_lighting",
    "emis_water_heating",
    "emis_cooking",
    "emis_appliances_others",
};

std::string energy_column(EndUse u);
std::string emissions_column(EndUse u);

/// Parse a dataset CSV and normalize it to base units.
///
/// Column order is free but the column set must match kCsvColumns exactly.
/// Blank lines and lines starting with '#' are skipped. Throws SchemaError,
/// ParseError, ValidationError or UnitError.
Dataset load_dataset(std::istream& source, const UnitConfig& units, std::string country = {});

/// Write a dataset in base units with shortest round-trip number formatting,
/// so that reloading with UnitConfig::base() reproduces every value exactly.
void write_dataset(std::ostream& out, const Dataset& ds);

/// Check the per-record invariants. `row` is only used in the message.
void validate_record(const YearRecord& r, std::optional<std::size_t> row = std::nullopt);

/// Uses with nonzero energy in at least one record.
EndUseSet infer_active_uses(std::span<const YearRecord> records);

/// Validate, sort by year and infer active uses for programmatically built
/// records. Duplicate years are rejected.
Dataset make_dataset(std::string country, std::vector<YearRecord> records,
                     UnitConfig units = UnitConfig::base());

/// Fill missing interior years by linear interpolation of each raw column.
/// Floor area is interpolated only when both neighbours carry it.
Dataset interpolate_years(const Dataset& ds);

}  // namespace dsd
