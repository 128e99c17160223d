#pragma once

#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "locsyn/param/families.hpp"
#include "locsyn/ratfun/statespace.hpp"

namespace locsyn::realize {

using ratfun::cplx;
using ratfun::StateSpace;
using sis::ConvKernel;

// v = PhixTilde v + x, u = PhiuTilde v.
struct ControllerImpl {
  double p = 1.0;
  ConvKernel PhixTilde;  // I - (s+p) Phix, strictly proper
  ConvKernel PhiuTilde;  // (s+p) Phiu, proper
  int M = 0;
};

// Throws NotAchievable when (Phix, Phiu) violate the affine constraint.
ControllerImpl make_impl(const param::PlantSpec& plant, const ConvKernel& Phix, const ConvKernel& Phiu,
                         double p = 1.0);

// Dense block circulant of a kernel at s.
Eigen::MatrixXcd dense_eval(const ConvKernel& K, cplx s);

// Dense controller K(s) = PhiuTilde (I - PhixTilde)^{-1} on the ring.
Eigen::MatrixXcd controller_response(const ControllerImpl& impl, cplx s);

// psi_n' = sum_i A[i] psi_{n-i} + B[i] x_{n-i}, u_n = sum_i C[i] psi_{n-i} + D[i] x_{n-i}.
struct StructuredRealization {
  int M = 0;
  int state_dim = 0;  // per site
  int xi_dim = 0;     // block realizing PhixTilde
  int zeta_dim = 0;   // block realizing PhiuTilde
  std::map<int, Eigen::MatrixXd> A, B, C, D;
  // Row realizations of [PhixTilde_{-M} .. PhixTilde_M] and of PhiuTilde.
  StateSpace xi_block;
  StateSpace zeta_block;
};

inline constexpr int kMaxRealizedBand = 3;

StructuredRealization structured_realization(const ControllerImpl& impl);

// max relative error between the block realizations and the kernels.
double block_transfer_error(const StructuredRealization& r, const ControllerImpl& impl, int points = 64);
// max relative error between the assembled x -> u network on N sites and
// the dense controller response.
double network_transfer_error(const StructuredRealization& r, const ControllerImpl& impl, int points = 64);
// Largest |K_{ab}(s)| over entries with circular site distance > M.
double controller_off_band(const ControllerImpl& impl, cplx s);

// Controller network on N sites: input x (all sites), output u.
StateSpace network(const StructuredRealization& r, int N, int nx, int nu);

void to_json(nlohmann::json& j, const StructuredRealization& r);

}  // namespace locsyn::realize
