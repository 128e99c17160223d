#pragma once

#include <nlohmann/json.hpp>

#include "locsyn/ratfun/ratmatrix.hpp"
#include "locsyn/ratfun/statespace.hpp"

namespace locsyn::ratfun {

// {"num": [...], "den": [...]} with ascending coefficients.
void to_json(nlohmann::json& j, const RationalFn& g);
void from_json(const nlohmann::json& j, RationalFn& g);

// Row-major nested arrays of rational functions.
void to_json(nlohmann::json& j, const RatMatrix& m);
void from_json(const nlohmann::json& j, RatMatrix& m);

// {"A": [[...]], "B": ..., "C": ..., "D": ...}
void to_json(nlohmann::json& j, const StateSpace& sys);

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_json(const nlohmann::json& j);

}  // namespace locsyn::ratfun
