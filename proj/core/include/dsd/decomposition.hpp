#pragma once

#include "dsd/dataset.hpp"
#include "dsd/result.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dsd {

enum class DecompositionMode { Chain, Endpoint };

std::string_view to_string(DecompositionMode m) noexcept;
std::optional<DecompositionMode> parse_mode(std::string_view name) noexcept;

/// One run over [from, to] between the two endpoint years.
DecompositionResult decompose_endpoint(const Dataset& ds, int from, int to, const IntegrationSettings& settings = {});

/// One run per consecutive year pair in [from, to]. Missing years are filled
/// by interpolation first. Throws DomainError when from >= to or a year is
/// outside the dataset.
std::vector<DecompositionResult> chain_yearly(const Dataset& ds, int from, int to,
                                              const IntegrationSettings& settings = {});

/// Total over [from, to]: the summed chain, or a single endpoint run.
DecompositionResult decompose(const Dataset& ds, int from, int to, const IntegrationSettings& settings,
                              DecompositionMode mode);

/// Elementwise sum of contiguous results. Throws DomainError if empty or not
/// contiguous.
DecompositionResult sum_results(std::span<const DecompositionResult> results);

/// Breaks every five years from `from`, always ending at `to`.
std::vector<int> default_stage_breaks(int from, int to);

/// Sum chain results within each stage [breaks[i], breaks[i+1]]. Every break
/// must fall on an interval boundary of the chain.
std::vector<DecompositionResult> aggregate_stages(std::span<const DecompositionResult> chain,
                                                  std::span<const int> breaks);

/// Percent of delta_c per driver, or nullopt when delta_c is negligible next to
/// the contributions (|delta_c| <= 1e-9 * sum |contribution|).
std::optional<DriverVector> contribution_rates(const DecompositionResult& r);

/// Per-use emission-factor and structure effects.
struct EndUseBreakdown {
    EndUseArray<double> dk;
    EndUseArray<double> dw;

    double total_dk() const noexcept;
    double total_dw() const noexcept;
};

EndUseBreakdown enduse_breakdown(const DecompositionResult& r);

/// Contributions grouped as in the driver-level identity
/// delta_c = de + dp + dg + ds + dk + dw.
struct DriverGroups {
    double energy_intensity = 0.0;
    double household_size = 0.0;
    double gdp_per_capita = 0.0;
    double expenditure_share = 0.0;
    double emission_factor = 0.0;
    double structure = 0.0;
};

DriverGroups group_contributions(const DecompositionResult& r);

}  // namespace dsd
