#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "locsyn/apps/closed_forms.hpp"
#include "locsyn/apps/objective.hpp"
#include "locsyn/error.hpp"
#include "locsyn/h2/inner_outer.hpp"
#include "locsyn/h2/synthesis.hpp"
#include "locsyn/ratfun/norms.hpp"
#include "support/oracles.hpp"

using namespace locsyn;
using namespace locsyn::h2;
using ratfun::cplx;
using ratfun::Poly;

namespace {

apps::Objective consensus(apps::Metric metric, double gamma, int N, int M) {
  apps::Objective o;
  o.app = apps::App::Consensus;
  o.metric = metric;
  o.gamma = gamma;
  o.N = N;
  o.M = M;
  return o;
}

RationalFn over_s1(double c) { return RationalFn(Poly{c}, Poly{1.0, 1.0}); }

bool rows_match(const RatMatrix& H, const RatMatrix& U, int r, const std::vector<RationalFn>& ref) {
  if (!ratfun::equal(H(r, 0), ref[0])) return false;
  for (int c = 0; c < U.cols(); ++c)
    if (!ratfun::equal(U(r, c), ref[c + 1])) return false;
  return true;
}

}  // namespace

TEST_SUITE("h2") {
  TEST_CASE("local-error assembly matches the literature 7x3 layout up to row order") {
    const double gamma = 1.7;
    const auto p = apps::model_matching(consensus(apps::Metric::LocalError, gamma, 21, 1));
    REQUIRE(p.U.rows() == 7);
    REQUIRE(p.U.cols() == 3);
    const RationalFn z, gs(Poly{0.0, gamma}, Poly{1.0, 1.0});
    std::vector<std::vector<RationalFn>> ref = {
        {over_s1(1), over_s1(-1), over_s1(1), z}, {over_s1(-1), z, over_s1(-1), over_s1(1)},
        {z, z, z, over_s1(-1)},                   {z, over_s1(1), z, z},
        {over_s1(-gamma), z, gs, z},              {z, gs, z, z},
        {z, z, z, gs}};
    std::vector<bool> used(7, false);
    int matched = 0;
    for (const auto& row : ref)
      for (int r = 0; r < 7; ++r)
        if (!used[r] && rows_match(p.H, p.U, r, row)) {
          used[r] = true;
          ++matched;
          break;
        }
    CHECK(matched == 7);
  }

  TEST_CASE("averaging assembly support at M = 0") {
    const auto p = apps::model_matching(consensus(apps::Metric::DeviationFromAverage, 1.0, 3, 0));
    int nonzero = 0;
    for (int r = 0; r < p.H.rows(); ++r) nonzero += p.H(r, 0).is_zero() ? 0 : 1;
    CHECK(nonzero == 4);
    CHECK(p.U.cols() == 1);
  }

  TEST_CASE("assembly rejects oversized bands and round-trips theta") {
    CHECK_THROWS_AS(apps::model_matching(consensus(apps::Metric::LocalError, 1.0, 5, 3)), Error);
    const auto p = apps::model_matching(consensus(apps::Metric::LocalError, 1.0, 11, 2));
    std::mt19937_64 rng(61);
    const ConvKernel th = testing::random_kernel(rng, 11, 2);
    CHECK(sis::equal(theta_from_vartheta(p, vartheta_from_theta(p, th)), th));
  }

  TEST_CASE("inner-outer factorization") {
    const auto p = apps::model_matching(consensus(apps::Metric::LocalError, 1.0, 21, 1));
    const InnerOuter io = inner_outer(p.U);
    std::vector<double> lam;
    for (const auto& f : io.f) lam.push_back(std::norm(f.eval(cplx(0.0, 0.0))));
    std::sort(lam.begin(), lam.end());
    CHECK(lam[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-10));
    CHECK(lam[1] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(lam[2] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-10));
    for (const auto& f : io.f) {
      const double l = std::norm(f.eval(cplx(0.0, 0.0)));
      CHECK(ratfun::equal(f, RationalFn(Poly{std::sqrt(l), 1.0}, Poly{1.0, 1.0})));
    }
    CHECK(inner_defect(io) < 1e-8);
    const RatMatrix UiUo = io.Ui * io.Uo;
    for (double w : {0.01, 0.3, 1.0, 4.0, 50.0}) {
      const Eigen::MatrixXcd ref = p.U.eval(cplx(0.0, w));
      CHECK((UiUo.eval(cplx(0.0, w)) - ref).norm() <= 1e-9 * ref.norm());
    }

    const InnerOuter sc = inner_outer(RatMatrix::scalar(over_s1(1.0)));
    CHECK(ratfun::equal(sc.Ui(0, 0), RationalFn(1.0)));
    CHECK(ratfun::equal(sc.Uo(0, 0), over_s1(1.0)));
  }

  TEST_CASE("exact solve on the local-error fixtures") {
    for (double gamma : {0.5, 1.0, 3.0}) {
      const auto p = apps::model_matching(consensus(apps::Metric::LocalError, gamma, 21, 1));
      const SynthesisResult r = solve_exact(p);
      const double a = std::sqrt(2.0 - std::sqrt(2.0)), b = std::sqrt(2.0 + std::sqrt(2.0));
      CHECK(r.reducible_cost == doctest::Approx(gamma / 4.0 * (a + b)).epsilon(1e-9));
      CHECK(r.full_cost == doctest::Approx(r.reducible_cost + r.complement_cost).epsilon(1e-9));
      CHECK(param::kernel_in_rh2(r.theta));
      CHECK(param::kernel_in_rh2(r.Phix));
      CHECK(param::kernel_in_rh2(r.Phiu));
      CHECK(param::is_negligible(param::affine_residual(apps::build(consensus(apps::Metric::LocalError, gamma, 21, 1)).plant,
                                                        r.Phix, r.Phiu, 1.0)));
    }
    const auto p2 = apps::model_matching(consensus(apps::Metric::LocalError, 1.0, 21, 2));
    const double r1 = std::sqrt(2.0 - std::sqrt(3.0)), r2 = std::sqrt(2.0 + std::sqrt(3.0));
    CHECK(solve_exact(p2).reducible_cost == doctest::Approx((r1 + std::sqrt(2.0) + r2) / 6.0).epsilon(1e-9));
    const auto pa = apps::model_matching(consensus(apps::Metric::DeviationFromAverage, 1.0, 7, 1));
    CHECK(solve_exact(pa).reducible_cost == doctest::Approx(1.0 / 3.0 + std::sqrt(1.0 - 3.0 / 7.0) / 6.0).epsilon(1e-9));
  }

  TEST_CASE("local-error theta_0 is the negation of the printed expression") {
    const auto r = solve_exact(apps::model_matching(consensus(apps::Metric::LocalError, 1.0, 21, 1)));
    const double a = std::sqrt(2.0 - std::sqrt(2.0)), b = std::sqrt(2.0 + std::sqrt(2.0));
    const RationalFn printed(Poly{2.0 * std::sqrt(2.0) - (a + b), (a + b) - 2.0}, 2.0 * Poly{a, 1.0} * Poly{b, 1.0});
    CHECK(ratfun::grid_distance(r.theta.at(0)(0, 0), -printed) < 1e-9);
    CHECK(ratfun::grid_distance(r.theta.at(0)(0, 0), printed) > 0.5);
  }

  TEST_CASE("numeric solve agrees with the exact path and improves with K") {
    const auto p = apps::model_matching(consensus(apps::Metric::LocalError, 1.0, 21, 1));
    const SynthesisResult ex = solve_exact(p);
    const SynthesisResult nu = solve_numeric(p);
    CHECK(std::abs(nu.full_cost - ex.full_cost) <= 1e-3 * ex.full_cost);
    for (int k = -1; k <= 1; ++k)
      CHECK(ratfun::grid_distance(nu.theta.at(k)(0, 0), ex.theta.at(k)(0, 0)) < 1e-3);
    NumericOptions one;
    one.basis_size = 1;
    const SynthesisResult k1 = solve_numeric(p, one);
    CHECK(nu.full_cost <= k1.full_cost + 1e-12);
    one.basis_size = 0;
    CHECK_THROWS_AS(solve_numeric(p, one), Error);
  }

  TEST_CASE("full band numeric cost approaches the unconstrained optimum") {
    const auto obj = consensus(apps::Metric::LocalError, 1.0, 9, 4);
    const auto data = apps::build(obj);
    const auto nu = solve_numeric(apps::model_matching(obj, data, 4));
    const auto base = riccati_baseline(data.plant, data.C1, data.D12, data.B1);
    CHECK(std::abs(nu.full_cost - base.cost) <= 1e-2 * base.cost);
    CHECK(nu.full_cost >= base.cost - 1e-9);
    CHECK_THROWS_AS(solve_exact(apps::model_matching(obj, data, 4)), Error);
  }

  TEST_CASE("riccati baseline") {
    const double gamma = 2.0;
    const int N = 11;
    const auto obj = consensus(apps::Metric::LocalError, gamma, N, 1);
    const auto data = apps::build(obj);
    const auto base = riccati_baseline(data.plant, data.C1, data.D12, data.B1);
    REQUIRE(static_cast<int>(base.per_frequency.size()) == N);
    double mean = 0.0;
    for (int k = 0; k < N; ++k) {
      const double ref = gamma * std::abs(1.0 - std::exp(cplx(0.0, -2.0 * std::numbers::pi * k / N)));
      CHECK(base.per_frequency[k] == doctest::Approx(ref).epsilon(1e-9));
      mean += ref / N;
    }
    CHECK(base.cost == doctest::Approx(mean).epsilon(1e-9));
    for (int M = 1; M <= 3; ++M) CHECK(base.cost <= solve_exact(apps::model_matching(obj, data, M)).full_cost);

    const auto zero = riccati_baseline(data.plant, sis::ConvKernel(N, 2, 1), data.D12, data.B1);
    CHECK(zero.cost == doctest::Approx(0.0));
  }

  TEST_CASE("care solves the scalar equation") {
    Eigen::MatrixXcd A(1, 1), B(1, 1), Q(1, 1), R(1, 1), S(1, 1);
    A << 1.0;
    B << 1.0;
    Q << 3.0;
    R << 1.0;
    S << 0.0;
    const auto P = care(A, B, Q, R, S);
    CHECK(P(0, 0).real() == doctest::Approx(3.0).epsilon(1e-10));
  }

  TEST_CASE("cost decomposition is theta independent") {
    const auto p = apps::model_matching(consensus(apps::Metric::LocalError, 1.0, 21, 1));
    const InnerOuter io = inner_outer(p.U);
    const SynthesisResult ex = solve_exact(p);
    const double ref = objective_value(p, ex.vartheta) - projected_value(io, p.H, ex.vartheta);
    std::mt19937_64 rng(67);
    for (int t = 0; t < 5; ++t) {
      const RatMatrix X = vartheta_from_theta(p, testing::random_kernel(rng, 21, 1));
      CHECK(std::abs(objective_value(p, X) - projected_value(io, p.H, X) - ref) < 1e-6);
      CHECK(objective_value(p, X) >= ex.full_cost - 1e-9);
    }
  }

  TEST_CASE("costs are nonincreasing in the band") {
    const auto obj = consensus(apps::Metric::DeviationFromAverage, 1.0, 15, 1);
    const auto data = apps::build(obj);
    double prev = INFINITY;
    for (int M = 0; M <= 4; ++M) {
      const double c = solve_exact(apps::model_matching(obj, data, M)).full_cost;
      CHECK(c <= prev + 1e-9);
      prev = c;
    }
  }

  TEST_CASE("laguerre helpers") {
    const RationalFn l = laguerre_sum({0.0, 1.0});
    const cplx s(0.3, 0.7);
    CHECK(std::abs(l.eval(s) - laguerre(2, s)) < 1e-12);
    CHECK(ratfun::h2_norm_sq(l) == doctest::Approx(1.0).epsilon(1e-10));
  }
}
