#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "locsyn/h2/inner_outer.hpp"

namespace locsyn::h2 {

enum class Solver { Exact, NumericLS };

std::string to_string(Solver s);

struct Diagnostics {
  int basis_size = 0;
  int nodes = 0;
  double inner_defect = 0.0;      // max |Ui~Ui - I| on the grid
  double quadrature_cost = 0.0;   // objective under the solver's own quadrature
  double check_cost = 0.0;        // objective on a denser independent grid
  bool regularized = false;
  std::vector<std::string> warnings;
};

struct SynthesisResult {
  ConvKernel theta;
  ConvKernel Phix;
  ConvKernel Phiu;
  RatMatrix vartheta;
  double reducible_cost = 0.0;
  double full_cost = 0.0;
  double complement_cost = 0.0;
  Solver solver = Solver::Exact;
  Diagnostics diagnostics;
  double wall_ms = 0.0;
};

SynthesisResult solve_exact(const ModelMatchProblem& p);

struct NumericOptions {
  int basis_size = 24;
  int nodes = 512;
  int check_nodes = 2048;
};

// Least squares over span{1/(s+1)^k, k = 1..K}, using the orthonormal
// Laguerre functions sqrt(2)(s-1)^(k-1)/(s+1)^k as coordinates.
SynthesisResult solve_numeric(const ModelMatchProblem& p, const NumericOptions& opt = {});

// Laguerre function k >= 1 at s.
ratfun::cplx laguerre(int k, ratfun::cplx s);
// sum_k c_k laguerre(k) as one rational function over (s+1)^K.
RationalFn laguerre_sum(const std::vector<double>& c);

// Unconstrained per-site optimum (1/N) sum_k tr(B1_k^* P_k B1_k) from the
// per-frequency algebraic Riccati equations.
struct BaselineResult {
  double cost = 0.0;
  std::vector<double> per_frequency;
  std::vector<std::string> warnings;
};

BaselineResult riccati_baseline(const param::PlantSpec& plant, const ConvKernel& C1, const ConvKernel& D12,
                                const ConvKernel& B1);

// Stabilizing solution of A^* P + P A - (P B + S) R^-1 (B^* P + S^*) + Q = 0.
Eigen::MatrixXcd care(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, const Eigen::MatrixXcd& Q,
                      const Eigen::MatrixXcd& R, const Eigen::MatrixXcd& S);

void to_json(nlohmann::json& j, const Diagnostics& d);
void to_json(nlohmann::json& j, const SynthesisResult& r);

}  // namespace locsyn::h2
