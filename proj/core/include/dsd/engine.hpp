#pragma once

#include "dsd/driver.hpp"
#include "dsd/factor_state.hpp"
#include "dsd/result.hpp"

#include <array>
#include <cstddef>
#include <functional>

namespace dsd {

/// Linearized system A * dy = B * dz at one point of the path.
///
/// Endogenous y = (c, F) with F the slack variable; exogenous z ordered as
/// DriverId. Row 1 is the total differential of c; row 2 is the share
/// closure sum_u dw_u = 0.
struct SystemMatrices {
    std::array<std::array<double, 2>, 2> a{};
    std::array<DriverVector, 2> b{};
};

SystemMatrices build_system_matrices(const FactorState& state, SlackScheme slack);

/// Observer hook called after every Euler segment.
struct SegmentTrace {
    std::size_t segment;      // 1-based
    double share_change_sum;  // sum over active uses of dw_u in this segment
    double slack;             // accumulated slack variable F
    double carbon_intensity;  // integrated c
};

using SegmentObserver = std::function<void(const SegmentTrace&)>;

/// Decompose the change from `start` to `end` with the N-segment Euler
/// recursion. Every driver moves linearly; share shifts are identified with
/// the observed share changes (dF_u = dw_u), so the slack stays at zero.
///
/// The raw Euler sum differs from end.c - start.c by a first-order term. That
/// residual is spread over drivers in proportion to |contribution| so that
/// contributions add up to delta_c; its size is kept in the result.
///
/// Throws DomainError when the active sets differ or a state is invalid and
/// NumericError (with segment) when the path turns singular or non-finite.
DecompositionResult run_dsd(const FactorState& start, const FactorState& end,
                            const IntegrationSettings& settings = {},
                            const SegmentObserver& observer = {});

/// Integrate a pure share-shift scenario: only F_u move, by `shifts` in
/// total, and the slack reallocates so that shares keep summing to one.
/// Throws ShareRangeError when a share leaves [0, 1] along the path.
DecompositionResult counterfactual_share_shift(const FactorState& state, const EndUseArray<double>& shifts,
                                               const IntegrationSettings& settings = {},
                                               const SegmentObserver& observer = {});

/// Shares at the end of a counterfactual path, integrated with the same
/// recursion as counterfactual_share_shift.
EndUseArray<double> shifted_shares(const FactorState& state, const EndUseArray<double>& shifts,
                                   const IntegrationSettings& settings = {});

/// Spread `residual` over contributions in proportion to their magnitude.
void distribute_residual(DriverVector& contributions, double residual) noexcept;

}  // namespace dsd
