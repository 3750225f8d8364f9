#pragma once

#include "dsd/driver.hpp"
#include "dsd/end_use.hpp"

#include <cstddef>
#include <optional>
#include <string_view>

namespace dsd {

/// How the slack component spreads over shares: dw_u = dF_u + sigma_u * dF
/// with sigma_u = 1 (uniform) or sigma_u = w_u (proportional).
enum class SlackScheme { Uniform, Proportional };

std::string_view to_string(SlackScheme s) noexcept;
std::optional<SlackScheme> parse_slack(std::string_view name) noexcept;

struct IntegrationSettings {
    std::size_t segments = 16000;
    SlackScheme slack = SlackScheme::Uniform;

    friend bool operator==(const IntegrationSettings&, const IntegrationSettings&) = default;
};

/// Per-driver contributions to the change in carbon intensity over an
/// interval, in kgCO2 per household.
struct DecompositionResult {
    int start_year = 0;
    int end_year = 0;
    double delta_c = 0.0;
    DriverVector contributions{};
    IntegrationSettings settings;
    EndUseSet active_uses;
    /// delta_c minus the raw Euler sum, before it was spread over drivers.
    double integration_residual = 0.0;

    double contribution_sum() const noexcept;

    friend bool operator==(const DecompositionResult&, const DecompositionResult&) = default;
};

}  // namespace dsd
