#include "dsd/fixtures.hpp"

#include "dsd/factor_state.hpp"

#include <cmath>
#include <numeric>

namespace dsd::fixtures {

namespace {

constexpr int kFirstYear = 2000;
constexpr int kLastYear = 2020;

struct Geometric {
    double start;
    double end;
    double at(double t) const { return start * std::pow(end / start, t); }
};

/// Quadratic carbon-intensity target through (0, c0), (1, c1) with its
/// extremum at `peak` (fraction of the horizon).
struct IntensityTarget {
    double c0;
    double c1;
    double peak;
    double at(double t) const {
        // c(t) = c0 + a t + b t^2, c'(peak) = 0.
        const double b = (c1 - c0) / (1.0 - 2.0 * peak);
        const double a = -2.0 * b * peak;
        return c0 + a * t + b * t * t;
    }
};

struct Shape {
    std::string country;
    Geometric population;
    Geometric household_size;
    Geometric gdp;                // million currency
    Geometric expenditure_index;  // S / G
    Geometric energy_intensity;   // GJ per currency unit (PJ per million)
    std::optional<Geometric> floor_area_per_person;
    EndUseArray<std::optional<Geometric>> share_weight;  // nullopt: use inactive
    EndUseArray<Geometric> emission_factor;              // kgCO2/GJ
    std::optional<IntensityTarget> target;
};

Dataset build(const Shape& shape) {
    std::vector<YearRecord> records;
    for (int year = kFirstYear; year <= kLastYear; ++year) {
        const double t = static_cast<double>(year - kFirstYear) / (kLastYear - kFirstYear);
        YearRecord r;
        r.year = year;
        r.population = shape.population.at(t);
        r.households = r.population / shape.household_size.at(t);
        r.gdp = shape.gdp.at(t);
        r.hce = r.gdp * shape.expenditure_index.at(t);
        if (shape.floor_area_per_person) r.floor_area = r.population * shape.floor_area_per_person->at(t);

        double weight_sum = 0.0;
        for (EndUse u : kAllEndUses) {
            if (shape.share_weight[u]) weight_sum += shape.share_weight[u]->at(t);
        }
        const double energy = shape.energy_intensity.at(t) * r.hce;
        double emissions = 0.0;
        for (EndUse u : kAllEndUses) {
            if (!shape.share_weight[u]) continue;
            r.energy[u] = energy * shape.share_weight[u]->at(t) / weight_sum;
            r.emissions[u] = r.energy[u] * shape.emission_factor[u].at(t);
            emissions += r.emissions[u];
        }
        if (shape.target) {
            const double wanted = shape.target->at(t) * r.households / kKgPerKt;
            for (double& c : r.emissions) c *= wanted / emissions;
        }
        records.push_back(r);
    }
    return make_dataset(shape.country, std::move(records));
}

}  // namespace

Dataset paper_shaped() {
    Shape s;
    s.country = "paper-shaped";
    s.population = {1.267e9, 1.412e9};
    s.household_size = {3.62, 2.86};
    s.gdp = {2.77e6, 1.47e7};
    s.expenditure_index = {0.46, 0.38};
    s.energy_intensity = {7.9e-3, 2.5e-3};
    s.floor_area_per_person = Geometric{24.0, 41.8};
    s.share_weight[EndUse::SpaceCooling] = Geometric{0.02, 0.06};
    s.share_weight[EndUse::SpaceHeating] = Geometric{0.30, 0.32};
    s.share_weight[EndUse::Lighting] = Geometric{0.04, 0.05};
    s.share_weight[EndUse::WaterHeating] = Geometric{0.14, 0.16};
    s.share_weight[EndUse::Cooking] = Geometric{0.40, 0.24};
    s.share_weight[EndUse::AppliancesOthers] = Geometric{0.10, 0.17};
    s.emission_factor[EndUse::SpaceCooling] = {200.0, 150.0};
    s.emission_factor[EndUse::SpaceHeating] = {60.0, 45.0};
    s.emission_factor[EndUse::Lighting] = {200.0, 150.0};
    s.emission_factor[EndUse::WaterHeating] = {40.0, 35.0};
    s.emission_factor[EndUse::Cooking] = {30.0, 25.0};
    s.emission_factor[EndUse::AppliancesOthers] = {200.0, 150.0};
    s.target = IntensityTarget{1125.0, 1492.0, 0.6};
    return build(s);
}

Dataset india_like() {
    Shape s;
    s.country = "india-like";
    s.population = {1.057e9, 1.380e9};
    s.household_size = {5.5, 4.75};
    s.gdp = {9.1e5, 2.67e6};
    s.expenditure_index = {0.64, 0.60};
    s.energy_intensity = {6.9e-3, 4.9e-3};
    s.floor_area_per_person = Geometric{12.0, 19.0};
    s.share_weight[EndUse::SpaceCooling] = Geometric{0.03, 0.09};
    s.share_weight[EndUse::Lighting] = Geometric{0.10, 0.08};
    s.share_weight[EndUse::WaterHeating] = Geometric{0.12, 0.13};
    s.share_weight[EndUse::Cooking] = Geometric{0.65, 0.50};
    s.share_weight[EndUse::AppliancesOthers] = Geometric{0.10, 0.20};
    s.emission_factor[EndUse::SpaceCooling] = {250.0, 210.0};
    s.emission_factor[EndUse::SpaceHeating] = {1.0, 1.0};
    s.emission_factor[EndUse::Lighting] = {180.0, 200.0};
    s.emission_factor[EndUse::WaterHeating] = {70.0, 66.0};
    s.emission_factor[EndUse::Cooking] = {65.0, 62.0};
    s.emission_factor[EndUse::AppliancesOthers] = {250.0, 215.0};
    s.target = IntensityTarget{744.0, 1216.0, 0.9};
    return build(s);
}

Dataset smooth() {
    Shape s;
    s.country = "smooth";
    s.population = {1.0e8, 1.2e8};
    s.household_size = {3.2, 2.7};
    s.gdp = {1.0e6, 2.4e6};
    s.expenditure_index = {0.55, 0.50};
    s.energy_intensity = {5.0e-3, 3.4e-3};
    s.share_weight[EndUse::SpaceCooling] = Geometric{0.05, 0.09};
    s.share_weight[EndUse::SpaceHeating] = Geometric{0.35, 0.30};
    s.share_weight[EndUse::Lighting] = Geometric{0.06, 0.05};
    s.share_weight[EndUse::WaterHeating] = Geometric{0.15, 0.16};
    s.share_weight[EndUse::Cooking] = Geometric{0.27, 0.22};
    s.share_weight[EndUse::AppliancesOthers] = Geometric{0.12, 0.18};
    s.emission_factor[EndUse::SpaceCooling] = {180.0, 140.0};
    s.emission_factor[EndUse::SpaceHeating] = {75.0, 60.0};
    s.emission_factor[EndUse::Lighting] = {180.0, 140.0};
    s.emission_factor[EndUse::WaterHeating] = {55.0, 50.0};
    s.emission_factor[EndUse::Cooking] = {60.0, 52.0};
    s.emission_factor[EndUse::AppliancesOthers] = {180.0, 140.0};
    return build(s);
}

std::vector<std::string_view> names() { return {"paper-shaped", "india-like", "smooth"}; }

std::optional<Dataset> by_name(std::string_view name) {
    if (name == "paper-shaped") return paper_shaped();
    if (name == "india-like") return india_like();
    if (name == "smooth") return smooth();
    return std::nullopt;
}

}  // namespace dsd::fixtures
