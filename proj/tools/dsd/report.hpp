#pragma once

#include "dsd/table.hpp"

#include <dsd/dataset.hpp>
#include <dsd/decomposition.hpp>
#include <dsd/factor_state.hpp>
#include <dsd/metrics.hpp>
#include <dsd/result.hpp>

#include <span>
#include <vector>

namespace dsd::cli {

/// driver, contribution, rate_percent; 16 driver rows then a delta_c row.
Table driver_table(const DecompositionResult& r, std::string name = "decomposition");

/// One row per result: start_year, end_year, delta_c, then one column per driver.
Table interval_table(std::span<const DecompositionResult> results, std::string name);

/// Long rates: start_year, end_year, driver, contribution, rate_percent.
Table rates_table(std::span<const DecompositionResult> results);

Table factors_table(const Dataset& ds, std::span<const FactorState> states);

/// start_year, end_year, end_use, dk, dw, dk_rate_percent.
Table enduse_table(std::span<const DecompositionResult> results);

Table metrics_table(const DecarbSeries& series);
Table stage_share_table(const DecarbSeries& series);

/// Plot-ready long tables (year, series, value).
Table fig_intensity_drivers(const Dataset& ds, std::span<const DecompositionResult> chain,
                            std::span<const DecompositionResult> stages);
Table fig_enduse_emission_factor(std::span<const DecompositionResult> stages, const DecompositionResult& total);
Table fig_decarbonization(const DecarbSeries& series);
Table fig_scales(const DecarbSeries& series);

}  // namespace dsd::cli
