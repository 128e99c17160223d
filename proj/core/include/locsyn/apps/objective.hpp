#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "locsyn/h2/model_matching.hpp"

namespace locsyn::apps {

enum class App { Consensus, Platoon };
// For platoons both metrics act on the position component.
enum class Metric { LocalError, DeviationFromAverage };

std::string to_string(App a);
std::string to_string(Metric m);
App app_from_string(const std::string& s);
Metric metric_from_string(const std::string& s);

inline constexpr int kObjectiveSchema = 1;

struct Objective {
  int schema_version = kObjectiveSchema;
  App app = App::Consensus;
  Metric metric = Metric::LocalError;
  double gamma = 1.0;
  int N = 21;
  int M = 1;

  // Throws ConfigError.
  void validate() const;
};

void to_json(nlohmann::json& j, const Objective& o);
void from_json(const nlohmann::json& j, Objective& o);

// Plant, performance output z = C1 x + D12 u, disturbance input B1 and
// the matching parameterization.
struct ProblemData {
  param::PlantSpec plant;
  sis::ConvKernel C1;
  sis::ConvKernel D12;
  sis::ConvKernel B1;
  param::ParamFamily family;
};

// Spatial kernel of the scalar metric: {0: 1, 1: -1} or the averaging
// annihilator with band (N-1)/2.
sis::ConvKernel metric_kernel(Metric metric, int N);

ProblemData build_consensus(const Objective& obj);
ProblemData build_platoon(const Objective& obj);
ProblemData build(const Objective& obj);

h2::ModelMatchProblem model_matching(const Objective& obj, const ProblemData& data, int M, int j = 0);
inline h2::ModelMatchProblem model_matching(const Objective& obj) {
  return model_matching(obj, build(obj), obj.M);
}

}  // namespace locsyn::apps
