#pragma once

#include <json.hpp>

#include "mzv/relations.hpp"
#include "mzv/zeta.hpp"

namespace mzv {

// Canonical serializations used by the CLI's --json mode.
nlohmann::ordered_json to_json(const Certificate& cert);
nlohmann::ordered_json to_json(const IdentityReport& report);
nlohmann::ordered_json to_json(const EvalResult& result);

}  // namespace mzv
