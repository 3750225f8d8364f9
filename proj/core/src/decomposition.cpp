#include "dsd/decomposition.hpp"

#include "dsd/engine.hpp"
#include "dsd/error.hpp"
#include "dsd/factor_state.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace dsd {

namespace {

void check_range(const Dataset& ds, int from, int to) {
    if (from >= to) {
        throw DomainError("decomposition needs from < to, got " + std::to_string(from) + " and " + std::to_string(to));
    }
    if (ds.records.empty()) throw DomainError("dataset is empty");
    if (from < ds.first_year() || to > ds.last_year()) {
        throw DomainError("years " + std::to_string(from) + "-" + std::to_string(to) + " outside dataset range " +
                          std::to_string(ds.first_year()) + "-" + std::to_string(ds.last_year()));
    }
}

std::size_t index_of_year(const Dataset& ds, int year) {
    const auto* r = &ds.at(year);
    return static_cast<std::size_t>(r - ds.records.data());
}

}  // namespace

std::string_view to_string(DecompositionMode m) noexcept { return m == DecompositionMode::Chain ? "chain" : "endpoint"; }

std::optional<DecompositionMode> parse_mode(std::string_view name) noexcept {
    if (name == "chain") return DecompositionMode::Chain;
    if (name == "endpoint") return DecompositionMode::Endpoint;
    return std::nullopt;
}

DecompositionResult decompose_endpoint(const Dataset& ds, int from, int to, const IntegrationSettings& settings) {
    check_range(ds, from, to);
    const Dataset full = ds.gap_free() ? ds : interpolate_years(ds);
    const auto states = derive_factor_states(full);
    auto r = run_dsd(states[index_of_year(full, from)], states[index_of_year(full, to)], settings);
    r.start_year = from;
    r.end_year = to;
    return r;
}

std::vector<DecompositionResult> chain_yearly(const Dataset& ds, int from, int to, const IntegrationSettings& settings) {
    check_range(ds, from, to);
    const Dataset full = ds.gap_free() ? ds : interpolate_years(ds);
    const auto states = derive_factor_states(full);
    const std::size_t first = index_of_year(full, from);
    const std::size_t last = index_of_year(full, to);

    std::vector<DecompositionResult> chain;
    chain.reserve(last - first);
    for (std::size_t i = first; i < last; ++i) {
        auto r = run_dsd(states[i], states[i + 1], settings);
        r.start_year = full.records[i].year;
        r.end_year = full.records[i + 1].year;
        chain.push_back(r);
    }
    return chain;
}

DecompositionResult decompose(const Dataset& ds, int from, int to, const IntegrationSettings& settings,
                              DecompositionMode mode) {
    if (mode == DecompositionMode::Endpoint) return decompose_endpoint(ds, from, to, settings);
    const auto chain = chain_yearly(ds, from, to, settings);
    return sum_results(chain);
}

DecompositionResult sum_results(std::span<const DecompositionResult> results) {
    if (results.empty()) throw DomainError("cannot sum an empty list of results");
    DecompositionResult total;
    total.start_year = results.front().start_year;
    total.end_year = results.back().end_year;
    total.settings = results.front().settings;
    total.active_uses = results.front().active_uses;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        if (i > 0 && r.start_year != results[i - 1].end_year) {
            throw DomainError("results are not contiguous at year " + std::to_string(r.start_year));
        }
        total.delta_c += r.delta_c;
        total.integration_residual += r.integration_residual;
        for (std::size_t j = 0; j < kDriverCount; ++j) total.contributions[j] += r.contributions[j];
    }
    return total;
}

std::vector<int> default_stage_breaks(int from, int to) {
    if (from >= to) throw DomainError("stage breaks need from < to");
    std::vector<int> breaks;
    for (int y = from; y < to; y += 5) breaks.push_back(y);
    breaks.push_back(to);
    return breaks;
}

std::vector<DecompositionResult> aggregate_stages(std::span<const DecompositionResult> chain,
                                                  std::span<const int> breaks) {
    if (chain.empty()) throw DomainError("no yearly results to aggregate");
    if (breaks.size() < 2) throw DomainError("stage aggregation needs at least two breaks");
    for (std::size_t i = 1; i < breaks.size(); ++i) {
        if (breaks[i] == breaks[i - 1]) {
            throw DomainError("empty stage at break " + std::to_string(breaks[i]));
        }
        if (breaks[i] < breaks[i - 1]) throw DomainError("stage breaks must be increasing");
    }
    if (breaks.front() < chain.front().start_year || breaks.back() > chain.back().end_year) {
        throw DomainError("stage breaks " + std::to_string(breaks.front()) + "-" + std::to_string(breaks.back()) +
                          " outside chain coverage " + std::to_string(chain.front().start_year) + "-" +
                          std::to_string(chain.back().end_year));
    }

    std::vector<DecompositionResult> stages;
    std::size_t pos = 0;
    while (pos < chain.size() && chain[pos].start_year < breaks.front()) ++pos;
    if (pos == chain.size() || chain[pos].start_year != breaks.front()) {
        throw DomainError("break " + std::to_string(breaks.front()) + " is not a chain boundary");
    }
    for (std::size_t s = 1; s < breaks.size(); ++s) {
        const std::size_t begin = pos;
        while (pos < chain.size() && chain[pos].end_year <= breaks[s]) ++pos;
        if (pos == begin || chain[pos - 1].end_year != breaks[s]) {
            throw DomainError("break " + std::to_string(breaks[s]) + " is not a chain boundary");
        }
        stages.push_back(sum_results(chain.subspan(begin, pos - begin)));
    }
    return stages;
}

std::optional<DriverVector> contribution_rates(const DecompositionResult& r) {
    double magnitude = 0.0;
    for (double c : r.contributions) magnitude += std::abs(c);
    if (!(std::abs(r.delta_c) > 1e-9 * magnitude)) return std::nullopt;
    DriverVector rates{};
    for (std::size_t j = 0; j < kDriverCount; ++j) rates[j] = 100.0 * r.contributions[j] / r.delta_c;
    return rates;
}

double EndUseBreakdown::total_dk() const noexcept { return std::accumulate(dk.begin(), dk.end(), 0.0); }
double EndUseBreakdown::total_dw() const noexcept { return std::accumulate(dw.begin(), dw.end(), 0.0); }

EndUseBreakdown enduse_breakdown(const DecompositionResult& r) {
    EndUseBreakdown b;
    for (EndUse u : kAllEndUses) {
        if (!r.active_uses.contains(u)) continue;
        b.dk[u] = at(r.contributions, DriverId::emission_factor(u));
        b.dw[u] = at(r.contributions, DriverId::share_shift(u));
    }
    return b;
}

DriverGroups group_contributions(const DecompositionResult& r) {
    const auto b = enduse_breakdown(r);
    DriverGroups g;
    g.energy_intensity = at(r.contributions, DriverId::energy_intensity());
    g.household_size = at(r.contributions, DriverId::household_size());
    g.gdp_per_capita = at(r.contributions, DriverId::gdp_per_capita());
    g.expenditure_share = at(r.contributions, DriverId::expenditure_share());
    g.emission_factor = b.total_dk();
    g.structure = b.total_dw();
    return g;
}

}  // namespace dsd
