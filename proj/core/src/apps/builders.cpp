#include "locsyn/apps/objective.hpp"

#include "locsyn/error.hpp"

namespace locsyn::apps {

namespace {

using Eigen::MatrixXd;

std::map<int, double> metric_weights(Metric metric, int N) {
  std::map<int, double> w;
  if (metric == Metric::LocalError) {
    w[0] = 1.0;
    w[1] = -1.0;
  } else {
    const int half = (N - 1) / 2;
    for (int m = -half; m <= half; ++m) w[m] = m == 0 ? (N - 1.0) / N : -1.0 / N;
  }
  return w;
}

// z = [y; gamma u] with y = sum_m c_m (row x)_{n-m}.
ProblemData assemble_data(const Objective& obj, param::PlantSpec plant, const MatrixXd& selector,
                          const MatrixXd& B1, param::ParamFamily family) {
  const int N = obj.N;
  const auto states = selector.cols();
  std::map<int, MatrixXd> c1;
  for (const auto& [m, c] : metric_weights(obj.metric, N)) {
    MatrixXd blk = MatrixXd::Zero(2, states);
    blk.row(0) = c * selector;
    c1[m] = blk;
  }
  MatrixXd d = MatrixXd::Zero(2, 1);
  d(1, 0) = obj.gamma;
  ProblemData out;
  out.plant = std::move(plant);
  out.C1 = sis::ConvKernel::from_constants(N, c1);
  out.D12 = sis::ConvKernel::from_constants(N, {{0, d}});
  out.B1 = sis::ConvKernel::from_constants(N, {{0, B1}});
  out.family = std::move(family);
  return out;
}

}  // namespace

sis::ConvKernel metric_kernel(Metric metric, int N) {
  std::map<int, MatrixXd> k;
  for (const auto& [m, c] : metric_weights(metric, N)) k[m] = MatrixXd::Constant(1, 1, c);
  return sis::ConvKernel::from_constants(N, k);
}

ProblemData build_consensus(const Objective& obj) {
  obj.validate();
  param::PlantSpec plant;
  plant.kind = param::PlantKind::SiFirstOrder;
  plant.N = obj.N;
  plant.a = 0.0;
  return assemble_data(obj, plant, MatrixXd::Ones(1, 1), MatrixXd::Ones(1, 1), param::family_first_order(0.0, 1.0));
}

ProblemData build_platoon(const Objective& obj) {
  obj.validate();
  param::PlantSpec plant;
  plant.kind = param::PlantKind::SiNthOrder;
  plant.N = obj.N;
  plant.A = (MatrixXd(2, 2) << 1.0, -1.0, 1.0, -1.0).finished();
  plant.B2 = (MatrixXd(2, 1) << 1.0, 0.0).finished();
  const MatrixXd selector = (MatrixXd(1, 2) << 0.0, 1.0).finished();
  return assemble_data(obj, plant, selector, plant.B2, param::family_nth_order(plant.A, plant.B2, 1.0));
}

ProblemData build(const Objective& obj) {
  return obj.app == App::Consensus ? build_consensus(obj) : build_platoon(obj);
}

h2::ModelMatchProblem model_matching(const Objective& obj, const ProblemData& data, int M, int j) {
  Objective o = obj;
  o.M = M;
  o.validate();
  const std::string desc = to_string(obj.app) + "/" + to_string(obj.metric) + " N=" + std::to_string(obj.N) +
                           " M=" + std::to_string(M) + " gamma=" + std::to_string(obj.gamma);
  return h2::assemble(data.plant, data.C1, data.D12, data.B1, data.family, M, j, obj.gamma, desc);
}

}  // namespace locsyn::apps
