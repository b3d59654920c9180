#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "starsat/saturation.hpp"

namespace starsat {

// "0x" followed by 16 lowercase hex digits.
std::string hash_hex(std::uint64_t h);
std::uint64_t parse_hash_hex(const std::string& s);

// {"n", "r", "host_hash", "edges": [[u, v], ...], "verdict"}
nlohmann::json certificate_to_json(const SaturationCertificate& cert);

// Reads the stored fields as-is; re-run check_certificate to trust the verdict.
// Throws ParseError on missing or mistyped fields.
SaturationCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const KIndependentWitness& w);

}  // namespace starsat
