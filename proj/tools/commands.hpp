#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "locsyn/apps/objective.hpp"

namespace locsyn::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kConfigError = 2, kSolverError = 3 };

struct RunConfig {
  apps::Objective objective;
  std::vector<int> sweep;
  std::string solver = "exact";
  int basis = 24;
  int nodes = 512;
  std::uint64_t seed = 1;
  std::filesystem::path out = ".";

  std::string disturbance = "impulse";
  double T = 30.0;
  double dt = 0.0;
  int site = 0;
  int runs = 1;
  int record_every = 10;
  double warmup = 0.0;
  std::optional<std::filesystem::path> synthesis;
};

struct Overrides {
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> solver;
  std::optional<int> basis;
};

// Throws Error(ConfigError).
RunConfig load_config(const Overrides& ov);

int cmd_synthesize(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg);
int cmd_simulate(const RunConfig& cfg);
int cmd_oracle_check(const RunConfig& cfg);

}  // namespace locsyn::cli
