#pragma once

#include <dsd/decomposition.hpp>
#include <dsd/result.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace dsd::cli {

/// Provenance stamped into every output artifact. Contains nothing
/// time-dependent, so identical runs give identical bytes.
struct RunManifest {
    std::string command;
    std::string input;
    std::string units;
    IntegrationSettings settings;
    DecompositionMode mode = DecompositionMode::Chain;
    std::optional<int> from;
    std::optional<int> to;
    std::string input_digest;  // sha256 of the input bytes
    std::vector<std::string> notes;

    nlohmann::ordered_json to_json() const;
};

std::string sha256_hex(std::string_view bytes);

}  // namespace dsd::cli
