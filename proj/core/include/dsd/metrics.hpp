#pragma once

#include "dsd/dataset.hpp"
#include "dsd/result.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dsd {

// Decarbonization here means avoided emissions: the intensity reductions of
// drivers with negative contributions, scaled by the households of the year.
// Efficiency is the avoided share of the no-decarbonization total,
// D / (C + D). Both definitions are reconstructions and are flagged as such
// in every output.

/// Which negative contributions count as decarbonization.
enum class NegativeDrivers {
    All,              // every driver with a negative contribution
    IntensityFactor,  // energy intensity and the per-use emission factors only
};

std::string_view to_string(NegativeDrivers n) noexcept;
std::optional<NegativeDrivers> parse_negative_drivers(std::string_view name) noexcept;

enum class Scale { Total, Efficiency, PerHousehold, PerCapita, PerFloorArea, PerExpenditure };

inline constexpr Scale kAllScales[] = {Scale::Total,     Scale::Efficiency,   Scale::PerHousehold,
                                       Scale::PerCapita, Scale::PerFloorArea, Scale::PerExpenditure};

std::string_view to_string(Scale s) noexcept;
std::optional<Scale> parse_scale(std::string_view name) noexcept;

/// Avoided emissions of one yearly step, in MtCO2. Throws DomainError if the
/// step does not end at `record_end.year`.
double annual_decarbonization(const DecompositionResult& yearly, const YearRecord& record_end,
                              NegativeDrivers drivers = NegativeDrivers::All);

/// D / (C + D). Throws DomainError if emissions <= 0 or decarbonization < 0.
double decarbonization_efficiency(double decarbonization_mt, double emissions_mt);

struct DecarbYear {
    int year = 0;
    double decarbonization = 0.0;  // MtCO2
    double emissions = 0.0;        // MtCO2, actual
    double efficiency = 0.0;       // fraction
    double per_household = 0.0;    // kgCO2 / household
    double per_capita = 0.0;       // kgCO2 / person
    std::optional<double> per_floor_area;  // kgCO2 / m2
    double per_expenditure = 0.0;          // kgCO2 / thousand currency
    double cumulative = 0.0;               // MtCO2 since the first step
};

/// Percent of each cumulative scale that falls within a stage.
struct StageShare {
    int start_year = 0;
    int end_year = 0;
    double decarbonization = 0.0;  // MtCO2 within the stage
    double share = 0.0;            // of cumulative decarbonization
    double per_household_share = 0.0;
    double per_capita_share = 0.0;
    std::optional<double> per_floor_area_share;
    double per_expenditure_share = 0.0;
};

struct DecarbSeries {
    std::vector<DecarbYear> years;
    std::vector<StageShare> stages;
    std::vector<Scale> scales;  // scales carried by this series
    NegativeDrivers drivers = NegativeDrivers::All;
    double cumulative = 0.0;  // MtCO2
};

struct MetricsOptions {
    NegativeDrivers drivers = NegativeDrivers::All;
    /// Requested scales; empty means every scale the data supports.
    std::vector<Scale> scales;
    /// Stage breaks; empty means five-year stages over the chain.
    std::vector<int> stage_breaks;
};

/// Six decarbonization scales for each year step of a chain. Household,
/// population, floor area and expenditure are taken at the end year of each
/// step. Throws UnsupportedScaleError if per-floor-area is requested and
/// floor area is missing for any step.
DecarbSeries scale_series(std::span<const DecompositionResult> chain, const Dataset& ds,
                          const MetricsOptions& options = {});

}  // namespace dsd
