#include "locsyn/sis/serialize.hpp"

#include <string>

#include "locsyn/error.hpp"
#include "locsyn/ratfun/serialize.hpp"

namespace locsyn::sis {

void to_json(nlohmann::json& j, const ConvKernel& k) {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [m, g] : k.entries()) entries[std::to_string(m)] = g;
  j = nlohmann::json{{"N", k.ring_size()},
                     {"block_dims", {k.rows(), k.cols()}},
                     {"infinite", k.infinite()},
                     {"entries", entries}};
}

void from_json(const nlohmann::json& j, ConvKernel& k) {
  if (!j.contains("N") || !j.contains("block_dims") || !j.contains("entries"))
    fail(ErrorCode::ConfigError, "kernel needs N, block_dims and entries");
  const auto dims = j.at("block_dims").get<std::vector<int>>();
  if (dims.size() != 2) fail(ErrorCode::ConfigError, "block_dims must have two entries");
  const bool infinite = j.value("infinite", false);
  k = ConvKernel(j.at("N").get<int>(), dims[0], dims[1], infinite);
  for (const auto& [key, val] : j.at("entries").items()) {
    int m = 0;
    try {
      m = std::stoi(key);
    } catch (const std::exception&) {
      fail(ErrorCode::ConfigError, "kernel offset '" + key + "' is not an integer");
    }
    k.add(m, val.get<ratfun::RatMatrix>());
  }
}

}  // namespace locsyn::sis
