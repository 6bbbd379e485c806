#pragma once

#include <json.hpp>

#include "a1deg/gw.hpp"

namespace a1deg {

// {"rank": r, "disc": "...", "signature": s|null, "hasse": {"inf": 1, ...}|null,
//  "presentation": "m*H + <d1,...>"|null}; keys sorted, square classes canonical.
nlohmann::json gw_class_json(const SymmetricForm& q);
nlohmann::json gram_json(const SymmetricForm& q);
std::string gw_class_pretty(const SymmetricForm& q);

}  // namespace a1deg
