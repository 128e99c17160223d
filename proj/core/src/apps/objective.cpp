#include "locsyn/apps/objective.hpp"

#include "locsyn/error.hpp"

namespace locsyn::apps {

std::string to_string(App a) { return a == App::Consensus ? "consensus" : "platoon"; }

std::string to_string(Metric m) { return m == Metric::LocalError ? "local_error" : "deviation_from_average"; }

App app_from_string(const std::string& s) {
  if (s == "consensus") return App::Consensus;
  if (s == "platoon") return App::Platoon;
  fail(ErrorCode::ConfigError, "unknown app '" + s + "'");
}

Metric metric_from_string(const std::string& s) {
  if (s == "local_error" || s == "LE") return Metric::LocalError;
  if (s == "deviation_from_average" || s == "Ave") return Metric::DeviationFromAverage;
  fail(ErrorCode::ConfigError, "unknown metric '" + s + "'");
}

void Objective::validate() const {
  if (schema_version != kObjectiveSchema)
    fail(ErrorCode::ConfigError, "unsupported schema_version " + std::to_string(schema_version));
  if (!(gamma > 0.0)) fail(ErrorCode::ConfigError, "gamma must be positive");
  if (N < 3 || N % 2 == 0) fail(ErrorCode::ConfigError, "N must be odd and at least 3");
  if (M < 0 || 2 * M >= N) fail(ErrorCode::ConfigError, "band size must satisfy M < N/2");
}

void to_json(nlohmann::json& j, const Objective& o) {
  j = nlohmann::json{{"schema_version", o.schema_version},
                     {"app", to_string(o.app)},
                     {"metric", to_string(o.metric)},
                     {"gamma", o.gamma},
                     {"N", o.N},
                     {"M", o.M}};
}

void from_json(const nlohmann::json& j, Objective& o) {
  try {
    o.schema_version = j.value("schema_version", kObjectiveSchema);
    o.app = app_from_string(j.at("app").get<std::string>());
    o.metric = metric_from_string(j.at("metric").get<std::string>());
    o.gamma = j.at("gamma").get<double>();
    o.N = j.at("N").get<int>();
    o.M = j.value("M", 1);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ConfigError, std::string("objective: ") + e.what());
  }
}

}  // namespace locsyn::apps
