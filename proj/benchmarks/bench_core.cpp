#include <random>

#include <benchmark/benchmark.h>

#include "locsyn/apps/objective.hpp"
#include "locsyn/h2/inner_outer.hpp"
#include "locsyn/h2/synthesis.hpp"
#include "locsyn/ratfun/norms.hpp"
#include "locsyn/realize/controller.hpp"
#include "locsyn/realize/simulate.hpp"

using namespace locsyn;

namespace {

apps::Objective objective(apps::App app, apps::Metric metric, double gamma, int N, int M) {
  apps::Objective o;
  o.app = app;
  o.metric = metric;
  o.gamma = gamma;
  o.N = N;
  o.M = M;
  return o;
}

ratfun::RationalFn random_stable(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> pole(-3.0, -0.3), coef(-1.0, 1.0);
  std::vector<ratfun::cplx> roots;
  for (int i = 0; i < degree; ++i) roots.emplace_back(pole(rng));
  std::vector<double> num(static_cast<std::size_t>(degree));
  for (double& c : num) c = coef(rng);
  return ratfun::RationalFn(ratfun::Poly(num), ratfun::Poly::from_roots(roots));
}

void BM_RationalProductSum(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto a = random_stable(rng, static_cast<int>(state.range(0)));
  const auto b = random_stable(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b + b);
}
BENCHMARK(BM_RationalProductSum)->Arg(2)->Arg(4)->Arg(8);

void BM_H2Norm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto g = random_stable(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ratfun::h2_norm_sq(g));
}
BENCHMARK(BM_H2Norm)->Arg(2)->Arg(8)->Arg(16);

void BM_InnerOuterConsensus(benchmark::State& state) {
  const auto p = apps::model_matching(
      objective(apps::App::Consensus, apps::Metric::LocalError, 1.0, 21, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(h2::inner_outer(p.U));
}
BENCHMARK(BM_InnerOuterConsensus)->Arg(1)->Arg(2)->Arg(4);

void BM_SolveExactConsensus(benchmark::State& state) {
  const auto p = apps::model_matching(
      objective(apps::App::Consensus, apps::Metric::DeviationFromAverage, 1.0, 21, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(h2::solve_exact(p));
}
BENCHMARK(BM_SolveExactConsensus)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SolveNumericPlatoon(benchmark::State& state) {
  const auto obj = objective(apps::App::Platoon, apps::Metric::LocalError, 3.0, 71, static_cast<int>(state.range(0)));
  const auto data = apps::build(obj);
  const auto p = apps::model_matching(obj, data, obj.M);
  for (auto _ : state) benchmark::DoNotOptimize(h2::solve_numeric(p));
}
BENCHMARK(BM_SolveNumericPlatoon)->Arg(1)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_RiccatiBaseline(benchmark::State& state) {
  const auto data = apps::build(objective(apps::App::Platoon, apps::Metric::LocalError, 3.0,
                                          static_cast<int>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(h2::riccati_baseline(data.plant, data.C1, data.D12, data.B1));
}
BENCHMARK(BM_RiccatiBaseline)->Arg(21)->Arg(71)->Unit(benchmark::kMillisecond);

void BM_StructuredRealization(benchmark::State& state) {
  const auto obj = objective(apps::App::Consensus, apps::Metric::LocalError, 1.0, 21, static_cast<int>(state.range(0)));
  const auto data = apps::build(obj);
  const auto r = h2::solve_exact(apps::model_matching(obj, data, obj.M));
  const auto impl = realize::make_impl(data.plant, r.Phix, r.Phiu);
  for (auto _ : state) benchmark::DoNotOptimize(realize::structured_realization(impl));
}
BENCHMARK(BM_StructuredRealization)->Arg(1)->Arg(2)->Arg(3);

void BM_ImpulseSimulation(benchmark::State& state) {
  const auto obj = objective(apps::App::Consensus, apps::Metric::LocalError, 1.0, static_cast<int>(state.range(0)), 1);
  const auto data = apps::build(obj);
  const auto r = h2::solve_exact(apps::model_matching(obj, data, 1));
  const auto impl = realize::make_impl(data.plant, r.Phix, r.Phiu);
  const auto cl =
      realize::closed_loop(data.plant, realize::structured_realization(impl), data.C1, data.D12, data.B1);
  realize::SimOptions opt;
  opt.T = 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(realize::simulate(cl, opt, 1));
}
BENCHMARK(BM_ImpulseSimulation)->Arg(11)->Arg(21)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
