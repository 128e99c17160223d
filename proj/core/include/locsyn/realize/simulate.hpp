#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "locsyn/realize/controller.hpp"

namespace locsyn::realize {

// Plant on N sites closed with the controller network. State order is
// [x (all sites); psi (all sites)].
struct ClosedLoop {
  int N = 0;
  int nx = 0;   // plant states per site
  int nu = 0;   // inputs per site
  int npsi = 0; // controller states per site
  int nw = 0;   // disturbance channels per site
  Eigen::MatrixXd A;   // closed-loop dynamics
  Eigen::MatrixXd Bw;  // disturbance input
  Eigen::MatrixXd Cu;  // u from the state
  Eigen::MatrixXd Cz;  // performance output from the state

  int states() const { return static_cast<int>(A.rows()); }
};

ClosedLoop closed_loop(const param::PlantSpec& plant, const StructuredRealization& r, const ConvKernel& C1,
                       const ConvKernel& D12, const ConvKernel& B1);

// Dense w -> x transfer from the closed loop at s.
Eigen::MatrixXcd disturbance_to_state(const ClosedLoop& cl, cplx s);

enum class Disturbance { Impulse, WhiteNoise, None };

struct SimOptions {
  Disturbance disturbance = Disturbance::Impulse;
  double T = 30.0;
  double dt = 0.0;  // 0 picks 0.02 / max |eig|
  int site = 0;
  std::uint64_t seed = 1;
  int record_every = 0;  // 0 records nothing
  double warmup = 0.0;   // energy accumulates for t >= warmup
  Eigen::VectorXd initial;  // optional full initial state
};

struct Trajectory {
  double dt = 0.0;
  std::vector<double> t;
  std::vector<Eigen::VectorXd> state;
  double energy = 0.0;          // integral of |z|^2 over [warmup, T]
  double max_outside_band = 0.0;  // max |x_n| at circular distance > band from site
  double final_norm = 0.0;
};

double default_step(const ClosedLoop& cl);

// Fixed-step RK4. Throws StepTooLarge on blowup.
Trajectory simulate(const ClosedLoop& cl, const SimOptions& opt, int band = -1);

struct MonteCarloResult {
  double estimate = 0.0;   // per-site mean of |z|^2
  double std_error = 0.0;
  int runs = 0;
};

// Independent unit-intensity white noise at every site; run r uses seed + r.
MonteCarloResult monte_carlo_h2(const ClosedLoop& cl, int runs, double T, double warmup, std::uint64_t seed,
                                double dt = 0.0, int threads = 0);

// CSV with header t,site,x0..,u0..,psi0..
void write_trajectory_csv(std::ostream& os, const ClosedLoop& cl, const Trajectory& tr);

}  // namespace locsyn::realize
