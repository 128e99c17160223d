#include <cmath>

#include "locsyn/apps/closed_forms.hpp"
#include "locsyn/h2/synthesis.hpp"

namespace locsyn::apps {

namespace {

std::string tag(Metric m, int M, double gamma, int N) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s M=%d gamma=%g N=%d", m == Metric::LocalError ? "LE" : "Ave", M, gamma, N);
  return buf;
}

OracleRecord scalar(std::string name, double value, double ref, double tol, bool lit) {
  const double err = std::abs(value - ref) / std::max(std::abs(ref), 1e-300);
  return {std::move(name), value, ref, err, tol, err <= tol, lit};
}

}  // namespace

std::vector<OracleRecord> oracle_regression() {
  std::vector<OracleRecord> out;
  struct Case {
    Metric metric;
    int M;
    std::vector<int> Ns;
  };
  const std::vector<Case> cases = {{Metric::LocalError, 1, {21}},
                                   {Metric::LocalError, 2, {21}},
                                   {Metric::DeviationFromAverage, 1, {7, 21, 71}},
                                   {Metric::DeviationFromAverage, 2, {7, 21, 71}}};
  for (const auto& c : cases)
    for (int N : c.Ns)
      for (double gamma : {0.5, 1.0, 3.0}) {
        Objective obj;
        obj.metric = c.metric;
        obj.gamma = gamma;
        obj.N = N;
        obj.M = c.M;
        const auto res = h2::solve_exact(model_matching(obj));
        const std::string t = tag(c.metric, c.M, gamma, N);
        for (auto src : {FormSource::Literature, FormSource::Rederived}) {
          const bool lit = src == FormSource::Literature;
          const std::string which = lit ? "literature" : "rederived";
          const AnalyticOracle orc = analytic_oracle(c.metric, c.M, gamma, N, src);
          out.push_back(scalar(t + " reducible_cost vs " + which, res.reducible_cost, orc.reducible_cost, 1e-9, lit));
          for (const auto& [k, th] : orc.theta) {
            const double err = ratfun::grid_distance(res.theta.at(k)(0, 0), th);
            out.push_back({t + " theta_" + std::to_string(k) + " vs " + which, err, 0.0, err, 1e-7, err <= 1e-7, lit});
          }
        }
        if (c.metric == Metric::LocalError && c.M == 1) {
          const auto cl = literature_closed_loops(gamma);
          const std::pair<const char*, std::pair<ratfun::RationalFn, ratfun::RationalFn>> loops[] = {
              {"Phix_0", {res.Phix.at(0)(0, 0), cl.Phix0}},
              {"Phix_1", {res.Phix.at(1)(0, 0), cl.Phix1}},
              {"Phiu_0", {res.Phiu.at(0)(0, 0), cl.Phiu0}},
              {"Phiu_1", {res.Phiu.at(1)(0, 0), cl.Phiu1}}};
          for (const auto& [name, pr] : loops) {
            const double err = ratfun::grid_distance(pr.first, pr.second);
            out.push_back({t + " " + name + " vs literature", err, 0.0, err, 1e-7, err <= 1e-7, true});
          }
        }
      }
  return out;
}

}  // namespace locsyn::apps
