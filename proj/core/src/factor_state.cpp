#include "dsd/factor_state.hpp"

#include "dsd/error.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>

namespace dsd {

namespace {

constexpr double kIdentityTolerance = 1e-9;

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

double FactorState::identity_product() const noexcept {
    double kw = 0.0;
    for (EndUse u : kAllEndUses) {
        if (active.contains(u)) kw += emission_factor[u] * share[u];
    }
    return energy_intensity * household_size * gdp_per_capita * expenditure_index * kw;
}

FactorState derive_factor_state(const YearRecord& r, const EndUseSet& active) {
    if (active.empty()) throw DomainError("factor state needs at least one active end use");
    double energy = 0.0;
    double emissions = 0.0;
    for (EndUse u : active.members()) {
        energy += r.energy[u];
        emissions += r.emissions[u];
    }
    if (!(energy > 0.0)) {
        throw ValidationError(std::nullopt, "",
                              "year " + std::to_string(r.year) + ": active end uses have zero total energy");
    }

    FactorState st;
    st.active = active;
    for (EndUse u : active.members()) {
        st.use_intensity[u] = r.energy[u] / r.hce;
        st.share[u] = r.energy[u] / energy;
        st.emission_factor[u] = r.energy[u] > 0.0 ? r.emissions[u] / r.energy[u] : 0.0;
    }
    st.energy_intensity = energy / r.hce;
    st.household_size = r.population / r.households;
    st.gdp_per_capita = r.gdp * 1e6 / r.population;
    st.expenditure_index = r.hce / r.gdp;
    st.carbon_intensity = emissions * kKgPerKt / r.households;
    return st;
}

std::vector<FactorState> derive_factor_states(const Dataset& ds) {
    std::vector<FactorState> states;
    states.reserve(ds.records.size());
    for (const auto& r : ds.records) states.push_back(derive_factor_state(r, ds.active_uses));

    for (EndUse u : ds.active_uses.members()) {
        for (std::size_t i = 0; i < ds.records.size(); ++i) {
            if (ds.records[i].energy[u] > 0.0) continue;
            std::optional<std::size_t> best;
            int best_gap = 0;
            for (std::size_t j = 0; j < ds.records.size(); ++j) {
                if (!(ds.records[j].energy[u] > 0.0)) continue;
                const int gap = std::abs(ds.records[j].year - ds.records[i].year);
                if (!best || gap < best_gap) {
                    best = j;
                    best_gap = gap;
                }
            }
            // An active use has energy in at least one record.
            states[i].emission_factor[u] = states[*best].emission_factor[u];
        }
    }
    return states;
}

FactorState make_factor_state(const EndUseSet& active, double energy_intensity, double household_size,
                              double gdp_per_capita, double expenditure_index,
                              const EndUseArray<double>& emission_factor, const EndUseArray<double>& share) {
    FactorState st;
    st.active = active;
    st.energy_intensity = energy_intensity;
    st.household_size = household_size;
    st.gdp_per_capita = gdp_per_capita;
    st.expenditure_index = expenditure_index;
    for (EndUse u : active.members()) {
        st.emission_factor[u] = emission_factor[u];
        st.share[u] = share[u];
        st.use_intensity[u] = energy_intensity * share[u];
    }
    st.carbon_intensity = st.identity_product();
    return st;
}

void check_invariants(const FactorState& st) {
    auto fail = [](const std::string& what) { throw DomainError("invalid factor state: " + what); };
    if (st.active.empty()) fail("no active end use");
    const double scalars[] = {st.energy_intensity, st.household_size, st.gdp_per_capita, st.expenditure_index};
    for (double v : scalars) {
        if (!std::isfinite(v) || !(v > 0.0)) fail("scalar factors must be finite and positive");
    }
    if (!std::isfinite(st.carbon_intensity) || st.carbon_intensity < 0.0) fail("carbon intensity");

    double share_sum = 0.0;
    for (EndUse u : kAllEndUses) {
        const bool on = st.active.contains(u);
        for (double v : {st.share[u], st.emission_factor[u], st.use_intensity[u]}) {
            if (!std::isfinite(v) || v < 0.0) fail("per-use values must be finite and nonnegative");
            if (!on && v != 0.0) fail("inactive use " + std::string(to_string(u)) + " carries a value");
        }
        if (on) {
            share_sum += st.share[u];
            if (!close_rel(st.energy_intensity * st.share[u], st.use_intensity[u], kIdentityTolerance)) {
                fail("e * w_u != e_u for " + std::string(to_string(u)));
            }
        }
    }
    if (std::abs(share_sum - 1.0) > kIdentityTolerance) fail("shares do not sum to one");
    if (std::abs(st.carbon_intensity - st.identity_product()) > kIdentityTolerance * std::abs(st.carbon_intensity)) {
        fail("c differs from e*p*g*s*sum(k*w)");
    }
}

}  // namespace dsd
