#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dsd {

/// Residential end uses. The enumerator order is the column order of every
/// table the toolkit reads or writes.
enum class EndUse : std::size_t {
    SpaceCooling = 0,
    SpaceHeating,
    Lighting,
    WaterHeating,
    Cooking,
    AppliancesOthers,
};

inline constexpr std::size_t kEndUseCount = 6;

inline constexpr std::array<EndUse, kEndUseCount> kAllEndUses = {
    EndUse::SpaceCooling, EndUse::SpaceHeating, EndUse::Lighting,
    EndUse::WaterHeating, EndUse::Cooking,      EndUse::AppliancesOthers,
};

constexpr std::size_t index_of(EndUse u) noexcept { return static_cast<std::size_t>(u); }

std::string_view to_string(EndUse u) noexcept;
std::optional<EndUse> parse_end_use(std::string_view label) noexcept;

/// One value per end use, indexed by EndUse.
template <typename T>
struct EndUseArray {
    std::array<T, kEndUseCount> values{};

    constexpr T& operator[](EndUse u) noexcept { return values[index_of(u)]; }
    constexpr const T& operator[](EndUse u) const noexcept { return values[index_of(u)]; }

    constexpr auto begin() noexcept { return values.begin(); }
    constexpr auto end() noexcept { return values.end(); }
    constexpr auto begin() const noexcept { return values.begin(); }
    constexpr auto end() const noexcept { return values.end(); }

    friend bool operator==(const EndUseArray&, const EndUseArray&) = default;
};

/// Subset of end uses, e.g. the uses with nonzero energy somewhere in a dataset.
class EndUseSet {
public:
    EndUseSet() = default;
    EndUseSet(std::initializer_list<EndUse> uses) {
        for (EndUse u : uses) insert(u);
    }

    static EndUseSet all() noexcept {
        EndUseSet s;
        s.bits_.set();
        return s;
    }

    void insert(EndUse u) noexcept { bits_.set(index_of(u)); }
    void erase(EndUse u) noexcept { bits_.reset(index_of(u)); }
    bool contains(EndUse u) const noexcept { return bits_.test(index_of(u)); }
    std::size_t size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }

    std::vector<EndUse> members() const;
    std::string to_string() const;

    friend bool operator==(const EndUseSet&, const EndUseSet&) = default;

private:
    std::bitset<kEndUseCount> bits_;
};

}  // namespace dsd
