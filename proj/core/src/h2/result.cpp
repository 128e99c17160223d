#include "locsyn/h2/synthesis.hpp"
#include "locsyn/ratfun/serialize.hpp"
#include "locsyn/sis/serialize.hpp"

namespace locsyn::h2 {

void to_json(nlohmann::json& j, const Diagnostics& d) {
  j = nlohmann::json{{"basis_size", d.basis_size},
                     {"nodes", d.nodes},
                     {"inner_defect", d.inner_defect},
                     {"quadrature_cost", d.quadrature_cost},
                     {"check_cost", d.check_cost},
                     {"regularized", d.regularized},
                     {"warnings", d.warnings}};
}

void to_json(nlohmann::json& j, const SynthesisResult& r) {
  j = nlohmann::json{{"solver", to_string(r.solver)},
                     {"reducible_cost", r.reducible_cost},
                     {"full_cost", r.full_cost},
                     {"complement_cost", r.complement_cost},
                     {"wall_ms", r.wall_ms},
                     {"diagnostics", r.diagnostics},
                     {"theta", r.theta},
                     {"Phix", r.Phix},
                     {"Phiu", r.Phiu}};
}

}  // namespace locsyn::h2
