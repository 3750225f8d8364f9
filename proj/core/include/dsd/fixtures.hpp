#pragma once

#include "dsd/dataset.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace dsd::fixtures {

/// Closed-form synthetic national datasets in base units, 2000-2020. They are
/// deterministic and exercise every code path without external data.

/// China-shaped: six active uses, floor area present, carbon intensity runs
/// from 1125 (2000) through an interior peak to 1492 (2020) kgCO2/household.
Dataset paper_shaped();

/// India-shaped: space heating inactive, intensity 744 -> 1216 with a late
/// peak, floor area present.
Dataset india_like();

/// Every factor moves geometrically and monotonically; no floor area.
Dataset smooth();

std::vector<std::string_view> names();
std::optional<Dataset> by_name(std::string_view name);

}  // namespace dsd::fixtures
