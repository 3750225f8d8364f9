#include "dsd/driver.hpp"

namespace dsd {

std::string DriverId::name() const {
    switch (kind()) {
        case DriverKind::EnergyIntensity: return "energy_intensity";
        case DriverKind::HouseholdSize: return "household_size";
        case DriverKind::GdpPerCapita: return "gdp_per_capita";
        case DriverKind::ExpenditureShare: return "expenditure_share";
        case DriverKind::EmissionFactor: return "emission_factor:" + std::string(to_string(*end_use()));
        case DriverKind::ShareShift: return "share_shift:" + std::string(to_string(*end_use()));
    }
    return {};
}

std::optional<DriverId> parse_driver(std::string_view name) {
    for (DriverId d : kAllDrivers) {
        if (d.name() == name) return d;
    }
    return std::nullopt;
}

}  // namespace dsd
