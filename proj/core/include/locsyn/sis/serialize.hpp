#pragma once

#include <nlohmann/json.hpp>

#include "locsyn/sis/kernel.hpp"

namespace locsyn::sis {

// {"N": int, "block_dims": [p, q], "infinite": bool, "entries": {"m": matrix}}
void to_json(nlohmann::json& j, const ConvKernel& k);
void from_json(const nlohmann::json& j, ConvKernel& k);

}  // namespace locsyn::sis
