#include "dsd/oracle.hpp"

#include "dsd/error.hpp"

#include <cmath>
#include <string>

namespace dsd::oracle {

namespace {

/// Neumaier compensated sum.
class Accumulator {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void check_toy(const ToyIdentity& toy) {
    if (toy.start.size() != toy.end.size()) throw DomainError("toy identity start/end sizes differ");
    if (toy.start.empty() || toy.start.size() > kMaxToyFactors) {
        throw DomainError("toy identity supports 1 to 4 factors, got " + std::to_string(toy.start.size()));
    }
}

}  // namespace

std::vector<double> analytic_line_integral(const ToyIdentity& toy) {
    check_toy(toy);
    const std::size_t m = toy.start.size();
    std::vector<double> out(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        // Coefficients in t of prod_{j != i} (start_j + delta_j * t).
        std::vector<double> poly{1.0};
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            const double a = toy.start[j];
            const double b = toy.end[j] - toy.start[j];
            std::vector<double> next(poly.size() + 1, 0.0);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k] += a * poly[k];
                next[k + 1] += b * poly[k];
            }
            poly = std::move(next);
        }
        double integral = 0.0;
        for (std::size_t k = 0; k < poly.size(); ++k) integral += poly[k] / static_cast<double>(k + 1);
        out[i] = integral * (toy.end[i] - toy.start[i]);
    }
    return out;
}

DriverId toy_driver(std::size_t i) {
    if (i >= kMaxToyFactors) throw DomainError("toy factor index out of range");
    return DriverId::from_index(i);
}

std::pair<FactorState, FactorState> embed_toy(const ToyIdentity& toy) {
    check_toy(toy);
    auto make = [](const std::vector<double>& v) {
        double x[kMaxToyFactors] = {1.0, 1.0, 1.0, 1.0};
        for (std::size_t i = 0; i < v.size(); ++i) x[i] = v[i];
        EndUseArray<double> one;
        one[EndUse::SpaceCooling] = 1.0;
        return make_factor_state(EndUseSet{EndUse::SpaceCooling}, x[0], x[1], x[2], x[3], one, one);
    };
    return {make(toy.start), make(toy.end)};
}

DecompositionResult fine_step_reference(const FactorState& start, const FactorState& end, std::size_t segments,
                                        SlackScheme slack) {
    if (!(start.active == end.active)) throw DomainError("active end uses differ between endpoints");
    if (segments < 1) throw DomainError("reference needs at least one segment");
    check_invariants(start);
    check_invariants(end);

    const auto uses = start.active.members();
    const double n = static_cast<double>(segments);
    const double de = (end.energy_intensity - start.energy_intensity) / n;
    const double dp = (end.household_size - start.household_size) / n;
    const double dg = (end.gdp_per_capita - start.gdp_per_capita) / n;
    const double ds = (end.expenditure_index - start.expenditure_index) / n;
    EndUseArray<double> dk, dshift;
    for (EndUse u : uses) {
        dk[u] = (end.emission_factor[u] - start.emission_factor[u]) / n;
        dshift[u] = (end.share[u] - start.share[u]) / n;
    }

    double e = start.energy_intensity, p = start.household_size, g = start.gdp_per_capita,
           s = start.expenditure_index;
    EndUseArray<double> k = start.emission_factor, w = start.share;

    Accumulator acc_e, acc_p, acc_g, acc_s;
    EndUseArray<Accumulator> acc_k, acc_f;

    for (std::size_t seg = 1; seg <= segments; ++seg) {
        double kw = 0.0, sigma_sum = 0.0, sigma_k = 0.0, shift_sum = 0.0;
        for (EndUse u : uses) {
            const double sigma = slack == SlackScheme::Uniform ? 1.0 : w[u];
            kw += k[u] * w[u];
            sigma_sum += sigma;
            sigma_k += sigma * k[u];
            shift_sum += dshift[u];
        }
        if (!(std::abs(sigma_sum) > 1e-12)) throw NumericError("singular slack closure", seg);
        const double k_bar = sigma_k / sigma_sum;
        const double pgs = p * g * s;

        acc_e.add(kw * pgs * de);
        acc_p.add(e * kw * g * s * dp);
        acc_g.add(e * kw * p * s * dg);
        acc_s.add(e * kw * p * g * ds);
        const double dslack = -shift_sum / sigma_sum;
        EndUseArray<double> sigma_now;
        for (EndUse u : uses) {
            acc_k[u].add(e * w[u] * pgs * dk[u]);
            acc_f[u].add(e * pgs * (k[u] - k_bar) * dshift[u]);
            sigma_now[u] = slack == SlackScheme::Uniform ? 1.0 : w[u];
        }
        for (EndUse u : uses) {
            w[u] += dshift[u] + sigma_now[u] * dslack;
            k[u] += dk[u];
        }
        e += de;
        p += dp;
        g += dg;
        s += ds;
        if (!std::isfinite(e * p * g * s * kw)) throw NumericError("non-finite reference state", seg);
    }

    DecompositionResult r;
    r.settings = IntegrationSettings{segments, slack};
    r.active_uses = start.active;
    r.delta_c = end.carbon_intensity - start.carbon_intensity;
    at(r.contributions, DriverId::energy_intensity()) = acc_e.value();
    at(r.contributions, DriverId::household_size()) = acc_p.value();
    at(r.contributions, DriverId::gdp_per_capita()) = acc_g.value();
    at(r.contributions, DriverId::expenditure_share()) = acc_s.value();
    for (EndUse u : uses) {
        at(r.contributions, DriverId::emission_factor(u)) = acc_k[u].value();
        at(r.contributions, DriverId::share_shift(u)) = acc_f[u].value();
    }

    Accumulator raw, weight;
    for (double c : r.contributions) {
        raw.add(c);
        weight.add(std::abs(c));
    }
    r.integration_residual = r.delta_c - raw.value();
    if (weight.value() > 0.0) {
        for (double& c : r.contributions) c += r.integration_residual * std::abs(c) / weight.value();
    }
    return r;
}

double logarithmic_mean(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("logarithmic mean needs positive arguments");
    if (a == b) return a;
    return (a - b) / (std::log(a) - std::log(b));
}

DriverVector lmdi_decompose(const FactorState& start, const FactorState& end) {
    if (!(start.active == end.active)) throw DomainError("active end uses differ between endpoints");
    auto positive = [](double v, const std::string& what) {
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("LMDI needs positive " + what);
    };
    for (const FactorState* st : {&start, &end}) {
        positive(st->energy_intensity, "energy intensity");
        positive(st->household_size, "household size");
        positive(st->gdp_per_capita, "GDP per capita");
        positive(st->expenditure_index, "expenditure index");
        for (EndUse u : st->active.members()) {
            positive(st->share[u], "share of " + std::string(to_string(u)));
            positive(st->emission_factor[u], "emission factor of " + std::string(to_string(u)));
        }
    }

    auto use_intensity = [](const FactorState& st, EndUse u) {
        return st.energy_intensity * st.share[u] * st.emission_factor[u] * st.household_size *
               st.gdp_per_capita * st.expenditure_index;
    };

    DriverVector out{};
    for (EndUse u : start.active.members()) {
        const double weight = logarithmic_mean(use_intensity(end, u), use_intensity(start, u));
        auto term = [&](double x1, double x0) { return weight * std::log(x1 / x0); };
        at(out, DriverId::energy_intensity()) += term(end.energy_intensity, start.energy_intensity);
        at(out, DriverId::household_size()) += term(end.household_size, start.household_size);
        at(out, DriverId::gdp_per_capita()) += term(end.gdp_per_capita, start.gdp_per_capita);
        at(out, DriverId::expenditure_share()) += term(end.expenditure_index, start.expenditure_index);
        at(out, DriverId::emission_factor(u)) += term(end.emission_factor[u], start.emission_factor[u]);
        at(out, DriverId::share_shift(u)) += term(end.share[u], start.share[u]);
    }
    return out;
}

}  // namespace dsd::oracle
