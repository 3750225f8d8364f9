#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace dsd {

enum class Dimension { Persons, Households, Currency, Area, Energy, Emissions };

std::string_view to_string(Dimension d) noexcept;

/// An accepted input unit and its multiplier into the base unit of its
/// dimension. Base units: persons, households, million constant currency,
/// square metres, petajoules, kilotonnes CO2.
struct Unit {
    std::string_view name;
    Dimension dimension;
    double to_base;
};

std::span<const Unit> unit_table() noexcept;
std::optional<Unit> find_unit(std::string_view name) noexcept;

/// Dimension of a dataset column, or nullopt for dimensionless columns (year).
std::optional<Dimension> column_dimension(std::string_view column) noexcept;

/// Declared input unit for every dimensional column of the dataset CSV.
///
/// The sidecar file is a flat JSON object mapping column names to unit names.
/// Two group keys are accepted as defaults: "energy" covers every energy_*
/// column and "emissions" every emis_* column. An explicit column entry wins
/// over its group.
///
///     {"population": "persons", "households": "thousand_households",
///      "gdp": "billion_currency", "hce": "billion_currency",
///      "floor_area": "million_m2", "energy": "Mtce", "emissions": "MtCO2"}
class UnitConfig {
public:
    UnitConfig() = default;

    /// Every column declared in its base unit.
    static UnitConfig base();

    static UnitConfig parse(std::istream& in);
    static UnitConfig from_file(const std::filesystem::path& path);

    /// Declare the unit of a column or group key. Throws UnitError for unknown
    /// keys, unknown units, or units of the wrong dimension.
    void declare(const std::string& key, const std::string& unit);

    /// Resolved unit of a column. Throws UnitError when undeclared.
    Unit unit_for(std::string_view column) const;

    /// Multiplier from the declared unit into the base unit.
    double factor(std::string_view column) const { return unit_for(column).to_base; }

    const std::map<std::string, std::string>& declarations() const noexcept { return declared_; }

    std::string to_json() const;

private:
    std::map<std::string, std::string> declared_;
};

}  // namespace dsd
