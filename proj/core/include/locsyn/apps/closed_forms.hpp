#pragma once

#include <map>
#include <string>
#include <vector>

#include "locsyn/apps/objective.hpp"

namespace locsyn::apps {

enum class FormSource {
  Literature,  // expressions as published, typos included
  Rederived,   // per-mode scalar LQR on the eigenbasis of the constrained Gram
};

struct AnalyticOracle {
  std::map<int, ratfun::RationalFn> theta;  // kernel offsets -M..M
  double reducible_cost = 0.0;
  double full_cost = 0.0;  // NaN for Literature
};

// Consensus optimum under band M. Literature supports (LE, 1), (LE, 2),
// (Ave, 1), (Ave, 2); Rederived supports any 2M+1 <= N.
AnalyticOracle analytic_oracle(Metric metric, int M, double gamma, int N, FormSource src = FormSource::Literature);

// Published closed loops for (LE, M = 1).
struct LiteratureClosedLoops {
  ratfun::RationalFn Phix0, Phix1, Phiu0, Phiu1;
};
LiteratureClosedLoops literature_closed_loops(double gamma);

// Published per-site realization blocks for (LE, M = 1): Ax, Cx and the
// input columns for offsets (1, 0, 1) of Bx and Bu.
struct LiteratureRealization {
  Eigen::MatrixXd Ax, Bx, Bu, Cx;
};
LiteratureRealization literature_realization(double gamma);

struct OracleRecord {
  std::string name;
  double value = 0.0;
  double reference = 0.0;
  double error = 0.0;  // relative
  double tol = 0.0;
  bool pass = false;
  bool literature = false;  // comparison against a published expression
};

// Exact solver against the closed forms on the consensus fixtures.
std::vector<OracleRecord> oracle_regression();

}  // namespace locsyn::apps
