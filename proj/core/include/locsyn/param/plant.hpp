#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "locsyn/sis/kernel.hpp"

namespace locsyn::param {

enum class PlantKind {
  SiFirstOrder,
  SiNthOrder,
  VaryingFirstOrder,
  VaryingNthOrder,
  CoupledStable,
  CoupledB2Invertible,
};

std::string to_string(PlantKind kind);
PlantKind plant_kind_from_string(const std::string& s);

// Plant data for x' = A x + B1 w + B2 u. Only the fields of the active kind
// are meaningful.
struct PlantSpec {
  PlantKind kind = PlantKind::SiFirstOrder;
  int N = 1;
  bool infinite = false;

  double a = 0.0;                              // SiFirstOrder
  Eigen::MatrixXd A, B2;                       // SiNthOrder, per site
  std::vector<double> a_sites, b_sites;        // VaryingFirstOrder
  std::vector<Eigen::MatrixXd> A_sites, B2_sites;  // VaryingNthOrder
  sis::ConvKernel A_kernel, B2_kernel;         // Coupled*

  std::optional<sis::ConvKernel> B1, C1, D12;

  // State and input operators as static kernels (spatially-invariant kinds).
  sis::ConvKernel state_kernel() const;
  sis::ConvKernel input_kernel() const;
  // Block-diagonal matrices (varying kinds).
  Eigen::MatrixXd state_matrix() const;
  Eigen::MatrixXd input_matrix() const;
  bool spatially_invariant() const;
};

void to_json(nlohmann::json& j, const PlantSpec& p);
void from_json(const nlohmann::json& j, PlantSpec& p);

}  // namespace locsyn::param
