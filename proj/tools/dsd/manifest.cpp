#include "dsd/manifest.hpp"

#include <dsd/version.hpp>

#include <array>

#include <fmt/format.h>
#include <openssl/evp.h>

namespace dsd::cli {

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["input"] = input;
    j["units"] = units;
    j["segments"] = settings.segments;
    j["slack"] = std::string(to_string(settings.slack));
    j["mode"] = std::string(to_string(mode));
    if (from) j["from"] = *from;
    if (to) j["to"] = *to;
    j["version"] = kVersion;
    j["input_sha256"] = input_digest;
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr);
    std::string hex;
    for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

}  // namespace dsd::cli
