#pragma once

#include "dsd/dataset.hpp"
#include "dsd/end_use.hpp"

#include <vector>

namespace dsd {

/// Grams of CO2 bookkeeping: emissions are stored in kt, intensities are
/// reported in kg.
inline constexpr double kKgPerKt = 1e6;

/// The identity state c = e * p * g * s * sum_u k_u * w_u at one point.
///
/// Units follow from base-unit records: energy intensities in GJ per currency
/// unit, emission factors in kgCO2/GJ, GDP per capita in currency per person,
/// carbon intensity in kgCO2 per household. Inactive uses hold zeros.
struct FactorState {
    EndUseSet active;
    EndUseArray<double> use_intensity;  // e_u = E_u / S
    double energy_intensity = 0.0;      // e = sum of e_u
    EndUseArray<double> emission_factor;  // k_u = C_u / E_u
    EndUseArray<double> share;            // w_u = E_u / E
    double household_size = 0.0;          // p = P / H
    double gdp_per_capita = 0.0;          // g = G / P
    double expenditure_index = 0.0;       // s = S / G
    double carbon_intensity = 0.0;        // c = C / H

    /// e * p * g * s * sum_u k_u * w_u, evaluated from the factors.
    double identity_product() const noexcept;

    friend bool operator==(const FactorState&, const FactorState&) = default;
};

/// Ratios of one record. An active use with zero energy in this record gets
/// w = 0 and k = 0; derive_factor_states() fills such k from neighbours.
/// Throws ValidationError when the active uses carry no energy at all.
FactorState derive_factor_state(const YearRecord& r, const EndUseSet& active);

/// Factor states for every record of a dataset, aligned with ds.records.
/// Emission factors of active uses with zero energy in a record are carried
/// from the nearest record (earlier wins ties) where that use has energy.
std::vector<FactorState> derive_factor_states(const Dataset& ds);

/// Build a state from factor values, e.g. for synthetic identities. Computes
/// e_u = e * w_u and c from the identity. Values of inactive uses are zeroed.
FactorState make_factor_state(const EndUseSet& active, double energy_intensity, double household_size,
                              double gdp_per_capita, double expenditure_index,
                              const EndUseArray<double>& emission_factor, const EndUseArray<double>& share);

/// Throws DomainError if any FactorState invariant fails.
void check_invariants(const FactorState& state);

}  // namespace dsd
