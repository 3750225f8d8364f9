#include "dsd/end_use.hpp"

namespace dsd {

namespace {

constexpr std::array<std::string_view, kEndUseCount> kLabels = {
    "space_cooling", "space_heating", "lighting", "water_heating", "cooking", "appliances_others",
};

}  // namespace

std::string_view to_string(EndUse u) noexcept { return kLabels[index_of(u)]; }

std::optional<EndUse> parse_end_use(std::string_view label) noexcept {
    for (EndUse u : kAllEndUses) {
        if (kLabels[index_of(u)] == label) return u;
    }
    return std::nullopt;
}

std::vector<EndUse> EndUseSet::members() const {
    std::vector<EndUse> out;
    for (EndUse u : kAllEndUses) {
        if (contains(u)) out.push_back(u);
    }
    return out;
}

std::string EndUseSet::to_string() const {
    std::string out;
    for (EndUse u : members()) {
        if (!out.empty()) out += ';';
        out += dsd::to_string(u);
    }
    return out;
}

}  // namespace dsd
