#pragma once

#include "dsd/end_use.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace dsd {

enum class DriverKind {
    EnergyIntensity,   // e
    HouseholdSize,     // p
    GdpPerCapita,      // g
    ExpenditureShare,  // s
    EmissionFactor,    // k_u
    ShareShift,        // F_u
};

inline constexpr std::size_t kScalarDriverCount = 4;
inline constexpr std::size_t kDriverCount = kScalarDriverCount + 2 * kEndUseCount;

/// One of the 16 exogenous drivers. Column order: e, p, g, s, then k_u for
/// each end use, then F_u for each end use.
class DriverId {
public:
    static constexpr DriverId energy_intensity() noexcept { return DriverId(0); }
    static constexpr DriverId household_size() noexcept { return DriverId(1); }
    static constexpr DriverId gdp_per_capita() noexcept { return DriverId(2); }
    static constexpr DriverId expenditure_share() noexcept { return DriverId(3); }
    static constexpr DriverId emission_factor(EndUse u) noexcept {
        return DriverId(kScalarDriverCount + index_of(u));
    }
    static constexpr DriverId share_shift(EndUse u) noexcept {
        return DriverId(kScalarDriverCount + kEndUseCount + index_of(u));
    }
    static constexpr DriverId from_index(std::size_t i) noexcept { return DriverId(i); }

    constexpr std::size_t index() const noexcept { return index_; }

    constexpr DriverKind kind() const noexcept {
        if (index_ < kScalarDriverCount) return static_cast<DriverKind>(index_);
        return index_ < kScalarDriverCount + kEndUseCount ? DriverKind::EmissionFactor : DriverKind::ShareShift;
    }

    /// End use of a per-use driver.
    constexpr std::optional<EndUse> end_use() const noexcept {
        if (index_ < kScalarDriverCount) return std::nullopt;
        return static_cast<EndUse>((index_ - kScalarDriverCount) % kEndUseCount);
    }

    /// Stable label, e.g. "gdp_per_capita" or "emission_factor:lighting".
    std::string name() const;

    friend constexpr bool operator==(DriverId, DriverId) = default;

private:
    constexpr explicit DriverId(std::size_t i) noexcept : index_(i) {}
    std::size_t index_;
};

std::optional<DriverId> parse_driver(std::string_view name);

/// One value per driver.
using DriverVector = std::array<double, kDriverCount>;

inline double& at(DriverVector& v, DriverId d) noexcept { return v[d.index()]; }
inline double at(const DriverVector& v, DriverId d) noexcept { return v[d.index()]; }

namespace detail {
template <std::size_t... I>
constexpr std::array<DriverId, kDriverCount> make_driver_list(std::index_sequence<I...>) noexcept {
    return {DriverId::from_index(I)...};
}
}  // namespace detail

/// All drivers in column order.
inline constexpr std::array<DriverId, kDriverCount> kAllDrivers =
    detail::make_driver_list(std::make_index_sequence<kDriverCount>{});

}  // namespace dsd
