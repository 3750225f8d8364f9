#include "dsd/units.hpp"

#include "dsd/error.hpp"

#include <array>
#include <fstream>

#include <json.hpp>

namespace dsd {

namespace {

// Energy conversions use 1 tce = 29.3076 GJ and 1 toe = 41.868 GJ.
constexpr std::array kUnits = {
    Unit{"persons", Dimension::Persons, 1.0},
    Unit{"thousand_persons", Dimension::Persons, 1e3},
    Unit{"million_persons", Dimension::Persons, 1e6},

    Unit{"households", Dimension::Households, 1.0},
    Unit{"thousand_households", Dimension::Households, 1e3},
    Unit{"million_households", Dimension::Households, 1e6},

    Unit{"currency", Dimension::Currency, 1e-6},
    Unit{"thousand_currency", Dimension::Currency, 1e-3},
    Unit{"million_currency", Dimension::Currency, 1.0},
    Unit{"billion_currency", Dimension::Currency, 1e3},
    Unit{"trillion_currency", Dimension::Currency, 1e6},

    Unit{"m2", Dimension::Area, 1.0},
    Unit{"thousand_m2", Dimension::Area, 1e3},
    Unit{"million_m2", Dimension::Area, 1e6},
    Unit{"billion_m2", Dimension::Area, 1e9},
    Unit{"km2", Dimension::Area, 1e6},

    Unit{"GJ", Dimension::Energy, 1e-6},
    Unit{"TJ", Dimension::Energy, 1e-3},
    Unit{"PJ", Dimension::Energy, 1.0},
    Unit{"EJ", Dimension::Energy, 1e3},
    Unit{"MWh", Dimension::Energy, 3.6e-6},
    Unit{"GWh", Dimension::Energy, 3.6e-3},
    Unit{"TWh", Dimension::Energy, 3.6},
    Unit{"ktce", Dimension::Energy, 29.3076e-3},
    Unit{"Mtce", Dimension::Energy, 29.3076},
    Unit{"ktoe", Dimension::Energy, 41.868e-3},
    Unit{"Mtoe", Dimension::Energy, 41.868},

    Unit{"kgCO2", Dimension::Emissions, 1e-6},
    Unit{"tCO2", Dimension::Emissions, 1e-3},
    Unit{"ktCO2", Dimension::Emissions, 1.0},
    Unit{"MtCO2", Dimension::Emissions, 1e3},
    Unit{"GtCO2", Dimension::Emissions, 1e6},
};

constexpr std::string_view kEnergyGroup = "energy";
constexpr std::string_view kEmissionsGroup = "emissions";

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
}

std::optional<Dimension> key_dimension(std::string_view key) {
    if (key == kEnergyGroup) return Dimension::Energy;
    if (key == kEmissionsGroup) return Dimension::Emissions;
    return column_dimension(key);
}

}  // namespace

std::string_view to_string(Dimension d) noexcept {
    switch (d) {
        case Dimension::Persons: return "persons";
        case Dimension::Households: return "households";
        case Dimension::Currency: return "currency";
        case Dimension::Area: return "area";
        case Dimension::Energy: return "energy";
        case Dimension::Emissions: return "emissions";
    }
    return "?";
}

std::span<const Unit> unit_table() noexcept { return kUnits; }

std::optional<Unit> find_unit(std::string_view name) noexcept {
    for (const Unit& u : kUnits) {
        if (u.name == name) return u;
    }
    return std::nullopt;
}

std::optional<Dimension> column_dimension(std::string_view column) noexcept {
    if (column == "population") return Dimension::Persons;
    if (column == "households") return Dimension::Households;
    if (column == "gdp" || column == "hce") return Dimension::Currency;
    if (column == "floor_area") return Dimension::Area;
    if (starts_with(column, "energy_")) return Dimension::Energy;
    if (starts_with(column, "emis_")) return Dimension::Emissions;
    return std::nullopt;
}

UnitConfig UnitConfig::base() {
    UnitConfig cfg;
    cfg.declare("population", "persons");
    cfg.declare("households", "households");
    cfg.declare("gdp", "million_currency");
    cfg.declare("hce", "million_currency");
    cfg.declare("floor_area", "m2");
    cfg.declare(std::string(kEnergyGroup), "PJ");
    cfg.declare(std::string(kEmissionsGroup), "ktCO2");
    return cfg;
}

void UnitConfig::declare(const std::string& key, const std::string& unit) {
    const auto dim = key_dimension(key);
    if (!dim) throw UnitError("unit declaration for unknown column '" + key + "'");
    const auto found = find_unit(unit);
    if (!found) throw UnitError("unknown unit '" + unit + "' declared for '" + key + "'");
    if (found->dimension != *dim) {
        throw UnitError("unit '" + unit + "' is a " + std::string(to_string(found->dimension)) +
                        " unit and cannot convert column '" + key + "' (" +
                        std::string(to_string(*dim)) + ")");
    }
    declared_[key] = unit;
}

Unit UnitConfig::unit_for(std::string_view column) const {
    const auto dim = column_dimension(column);
    if (!dim) throw UnitError("column '" + std::string(column) + "' carries no unit");
    auto it = declared_.find(std::string(column));
    if (it == declared_.end()) {
        if (*dim == Dimension::Energy) it = declared_.find(std::string(kEnergyGroup));
        if (*dim == Dimension::Emissions) it = declared_.find(std::string(kEmissionsGroup));
    }
    if (it == declared_.end()) {
        throw UnitError("no unit declared for column '" + std::string(column) + "'");
    }
    return *find_unit(it->second);
}

UnitConfig UnitConfig::parse(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& ex) {
        throw UnitError(std::string("unit declaration is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw UnitError("unit declaration must be a JSON object");
    UnitConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_string()) throw UnitError("unit for '" + key + "' must be a string");
        cfg.declare(key, value.get<std::string>());
    }
    return cfg;
}

UnitConfig UnitConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UnitError("cannot open unit declaration " + path.string());
    return parse(in);
}

std::string UnitConfig::to_json() const {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [key, unit] : declared_) doc[key] = unit;
    return doc.dump();
}

}  // namespace dsd
