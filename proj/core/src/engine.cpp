#include "dsd/engine.hpp"

#include "dsd/error.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace dsd {

namespace {

constexpr double kDetGuard = 1e-12;
constexpr double kShareSlack = 1e-12;

double sigma(const FactorState& st, EndUse u, SlackScheme slack) {
    return slack == SlackScheme::Uniform ? 1.0 : st.share[u];
}

/// Rows of A^-1 * B.
std::array<DriverVector, 2> reduced_form(const SystemMatrices& sys, std::size_t segment) {
    const auto& a = sys.a;
    const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (!(std::abs(det) > kDetGuard)) {
        throw NumericError("singular system matrix (det = " + std::to_string(det) + ") at segment " +
                               std::to_string(segment),
                           segment);
    }
    const double i00 = a[1][1] / det;
    const double i01 = -a[0][1] / det;
    const double i10 = -a[1][0] / det;
    const double i11 = a[0][0] / det;
    std::array<DriverVector, 2> m{};
    for (std::size_t j = 0; j < kDriverCount; ++j) {
        m[0][j] = i00 * sys.b[0][j] + i01 * sys.b[1][j];
        m[1][j] = i10 * sys.b[0][j] + i11 * sys.b[1][j];
    }
    return m;
}

struct PathOutcome {
    FactorState last;
    DriverVector raw{};
    double slack = 0.0;
};

PathOutcome integrate(const FactorState& start, const DriverVector& total, const IntegrationSettings& settings,
                      const SegmentObserver& observer, bool check_share_range) {
    if (settings.segments < 1) throw DomainError("integration needs at least one segment");
    const double n = static_cast<double>(settings.segments);
    DriverVector dz{};
    for (std::size_t j = 0; j < kDriverCount; ++j) dz[j] = total[j] / n;

    const auto uses = start.active.members();
    PathOutcome out{start, {}, 0.0};
    FactorState& x = out.last;

    for (std::size_t seg = 1; seg <= settings.segments; ++seg) {
        const auto m = reduced_form(build_system_matrices(x, settings.slack), seg);
        double dc = 0.0;
        double dslack = 0.0;
        for (std::size_t j = 0; j < kDriverCount; ++j) {
            const double d = m[0][j] * dz[j];
            out.raw[j] += d;
            dc += d;
            dslack += m[1][j] * dz[j];
        }

        double dw_sum = 0.0;
        for (EndUse u : uses) {
            const double dw = dz[DriverId::share_shift(u).index()] + sigma(x, u, settings.slack) * dslack;
            x.share[u] += dw;
            dw_sum += dw;
            x.emission_factor[u] += dz[DriverId::emission_factor(u).index()];
        }
        x.energy_intensity += dz[DriverId::energy_intensity().index()];
        x.household_size += dz[DriverId::household_size().index()];
        x.gdp_per_capita += dz[DriverId::gdp_per_capita().index()];
        x.expenditure_index += dz[DriverId::expenditure_share().index()];
        for (EndUse u : uses) x.use_intensity[u] = x.energy_intensity * x.share[u];
        x.carbon_intensity += dc;
        out.slack += dslack;

        if (!std::isfinite(x.carbon_intensity) || !std::isfinite(out.slack) || !std::isfinite(dw_sum)) {
            throw NumericError("non-finite state at segment " + std::to_string(seg), seg);
        }
        if (check_share_range) {
            for (EndUse u : uses) {
                if (x.share[u] < -kShareSlack || x.share[u] > 1.0 + kShareSlack) {
                    throw ShareRangeError("share of " + std::string(to_string(u)) + " left [0, 1] (" +
                                              std::to_string(x.share[u]) + ") at segment " + std::to_string(seg),
                                          seg, std::string(to_string(u)));
                }
            }
        }
        if (observer) observer(SegmentTrace{seg, dw_sum, out.slack, x.carbon_intensity});
    }
    return out;
}

double sum(const DriverVector& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

std::string_view to_string(SlackScheme s) noexcept {
    return s == SlackScheme::Uniform ? "uniform" : "proportional";
}

std::optional<SlackScheme> parse_slack(std::string_view name) noexcept {
    if (name == "uniform") return SlackScheme::Uniform;
    if (name == "proportional") return SlackScheme::Proportional;
    return std::nullopt;
}

double DecompositionResult::contribution_sum() const noexcept { return sum(contributions); }

SystemMatrices build_system_matrices(const FactorState& st, SlackScheme slack) {
    const double e = st.energy_intensity;
    const double p = st.household_size;
    const double g = st.gdp_per_capita;
    const double s = st.expenditure_index;
    const double pgs = p * g * s;

    double kw = 0.0;
    double sigma_sum = 0.0;
    double weighted_k = 0.0;
    for (EndUse u : st.active.members()) {
        const double sg = sigma(st, u, slack);
        kw += st.emission_factor[u] * st.share[u];
        sigma_sum += sg;
        weighted_k += st.emission_factor[u] * sg;
    }

    SystemMatrices sys;
    sys.a[0][0] = 1.0;
    sys.a[0][1] = -e * pgs * weighted_k;
    sys.a[1][0] = 0.0;
    sys.a[1][1] = sigma_sum;

    auto& row = sys.b[0];
    row[DriverId::energy_intensity().index()] = kw * pgs;
    row[DriverId::household_size().index()] = e * kw * g * s;
    row[DriverId::gdp_per_capita().index()] = e * kw * p * s;
    row[DriverId::expenditure_share().index()] = e * kw * p * g;
    for (EndUse u : st.active.members()) {
        row[DriverId::emission_factor(u).index()] = e * st.share[u] * pgs;
        row[DriverId::share_shift(u).index()] = e * st.emission_factor[u] * pgs;
        sys.b[1][DriverId::share_shift(u).index()] = -1.0;
    }
    return sys;
}

void distribute_residual(DriverVector& contributions, double residual) noexcept {
    double weight = 0.0;
    for (double c : contributions) weight += std::abs(c);
    if (!(weight > 0.0)) return;
    for (double& c : contributions) c += residual * (std::abs(c) / weight);
}

DecompositionResult run_dsd(const FactorState& start, const FactorState& end, const IntegrationSettings& settings,
                            const SegmentObserver& observer) {
    if (!(start.active == end.active)) {
        throw DomainError("active end uses differ between endpoints (" + start.active.to_string() + " vs " +
                          end.active.to_string() + ")");
    }
    check_invariants(start);
    check_invariants(end);

    DriverVector total{};
    at(total, DriverId::energy_intensity()) = end.energy_intensity - start.energy_intensity;
    at(total, DriverId::household_size()) = end.household_size - start.household_size;
    at(total, DriverId::gdp_per_capita()) = end.gdp_per_capita - start.gdp_per_capita;
    at(total, DriverId::expenditure_share()) = end.expenditure_index - start.expenditure_index;
    for (EndUse u : start.active.members()) {
        at(total, DriverId::emission_factor(u)) = end.emission_factor[u] - start.emission_factor[u];
        at(total, DriverId::share_shift(u)) = end.share[u] - start.share[u];
    }

    const auto path = integrate(start, total, settings, observer, false);

    DecompositionResult r;
    r.delta_c = end.carbon_intensity - start.carbon_intensity;
    r.contributions = path.raw;
    r.settings = settings;
    r.active_uses = start.active;
    r.integration_residual = r.delta_c - sum(path.raw);
    distribute_residual(r.contributions, r.integration_residual);
    return r;
}

DecompositionResult counterfactual_share_shift(const FactorState& state, const EndUseArray<double>& shifts,
                                               const IntegrationSettings& settings,
                                               const SegmentObserver& observer) {
    check_invariants(state);
    DriverVector total{};
    for (EndUse u : kAllEndUses) {
        if (shifts[u] == 0.0) continue;
        if (!state.active.contains(u)) {
            throw DomainError("cannot shift inactive end use " + std::string(to_string(u)));
        }
        if (!std::isfinite(shifts[u])) throw DomainError("shift must be finite");
        at(total, DriverId::share_shift(u)) = shifts[u];
    }

    const auto path = integrate(state, total, settings, observer, true);

    // All scalar factors are frozen and c is linear in w, so the identity at
    // the integrated shares is the analytic endpoint.
    FactorState end = path.last;
    end.carbon_intensity = end.identity_product();

    DecompositionResult r;
    r.delta_c = end.carbon_intensity - state.carbon_intensity;
    r.contributions = path.raw;
    r.settings = settings;
    r.active_uses = state.active;
    r.integration_residual = r.delta_c - sum(path.raw);
    distribute_residual(r.contributions, r.integration_residual);
    return r;
}

EndUseArray<double> shifted_shares(const FactorState& state, const EndUseArray<double>& shifts,
                                   const IntegrationSettings& settings) {
    DriverVector total{};
    for (EndUse u : state.active.members()) at(total, DriverId::share_shift(u)) = shifts[u];
    return integrate(state, total, settings, {}, true).last.share;
}

}  // namespace dsd
