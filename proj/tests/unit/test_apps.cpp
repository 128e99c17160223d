#include <cmath>
#include <numbers>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "locsyn/apps/closed_forms.hpp"
#include "locsyn/apps/objective.hpp"
#include "locsyn/error.hpp"
#include "locsyn/h2/synthesis.hpp"

using namespace locsyn;
using namespace locsyn::apps;
using ratfun::cplx;

namespace {

Objective make(App app, Metric metric, double gamma, int N, int M) {
  Objective o;
  o.app = app;
  o.metric = metric;
  o.gamma = gamma;
  o.N = N;
  o.M = M;
  return o;
}

}  // namespace

TEST_SUITE("apps") {
  TEST_CASE("metric kernels") {
    const auto le = metric_kernel(Metric::LocalError, 9);
    CHECK(le.band() == 1);
    CHECK(le.at(0)(0, 0).eval(0.0) == 1.0);
    CHECK(le.at(1)(0, 0).eval(0.0) == -1.0);
    CHECK(le.at(-1)(0, 0).is_zero());

    const auto av = metric_kernel(Metric::DeviationFromAverage, 3);
    CHECK(av.at(0)(0, 0).eval(0.0) == doctest::Approx(2.0 / 3.0));
    CHECK(av.at(1)(0, 0).eval(0.0) == doctest::Approx(-1.0 / 3.0));
    CHECK(av.at(-1)(0, 0).eval(0.0) == doctest::Approx(-1.0 / 3.0));

    const auto av9 = metric_kernel(Metric::DeviationFromAverage, 9);
    CHECK(av9.band() == 4);
    CHECK(std::abs(av9.static_symbol(0)(0, 0)) < 1e-12);
    for (int k = 1; k < 9; ++k) CHECK(std::abs(le.static_symbol(k)(0, 0)) > 1e-3);
    CHECK(std::abs(le.static_symbol(0)(0, 0)) < 1e-12);
  }

  TEST_CASE("platoon data") {
    const auto d = build_platoon(make(App::Platoon, Metric::LocalError, 3.0, 11, 1));
    const auto form = param::detect_canonical(d.plant.A, d.plant.B2);
    REQUIRE(form.has_value());
    CHECK(form->coeffs[0] == doctest::Approx(-2.0));
    CHECK(form->coeffs[1] == doctest::Approx(1.0));
    CHECK(ratfun::equal(d.family.chi(0, 0), ratfun::RationalFn(ratfun::Poly{0, 0, 1}, ratfun::Poly{1, 2, 1})));
    const auto p = model_matching(make(App::Platoon, Metric::LocalError, 3.0, 11, 1), d, 1);
    CHECK(p.U.cols() == 3);
    CHECK(p.q() == 1);
  }

  TEST_CASE("objective validation and json") {
    Objective o = make(App::Consensus, Metric::LocalError, 1.0, 21, 10);
    CHECK_NOTHROW(o.validate());
    o.M = 11;
    CHECK_THROWS_AS(o.validate(), Error);
    o.M = 1;
    o.N = 20;
    CHECK_THROWS_AS(o.validate(), Error);
    o.N = 21;
    o.gamma = 0.0;
    CHECK_THROWS_AS(o.validate(), Error);
    o.gamma = 2.0;
    const nlohmann::json j = o;
    CHECK(j.at("metric") == "local_error");
    const Objective back = j.get<Objective>();
    CHECK(back.gamma == 2.0);
    CHECK(nlohmann::json::parse(R"({"app":"platoon","metric":"Ave","gamma":1,"N":7})").get<Objective>().metric ==
          Metric::DeviationFromAverage);
    CHECK_THROWS_AS(nlohmann::json::parse(R"({"app":"boat","metric":"LE","gamma":1,"N":7})").get<Objective>(), Error);
  }

  TEST_CASE("literature oracle coverage and formula properties") {
    CHECK_THROWS_AS(analytic_oracle(Metric::LocalError, 3, 1.0, 21), Error);
    CHECK_NOTHROW(analytic_oracle(Metric::LocalError, 3, 1.0, 21, FormSource::Rederived));

    const auto ave2 = analytic_oracle(Metric::DeviationFromAverage, 2, 1.3, 21);
    CHECK(ratfun::equal(ave2.theta.at(2), ave2.theta.at(1)));
    CHECK(ratfun::equal(ave2.theta.at(-2), ave2.theta.at(1)));

    const auto le2 = analytic_oracle(Metric::LocalError, 2, 1.0, 21);
    const double r1 = std::sqrt(2.0 - std::sqrt(3.0)), r2 = std::sqrt(2.0 + std::sqrt(3.0));
    for (const auto& [k, th] : le2.theta) {
      bool has1 = false, has2 = false;
      for (const auto& z : th.poles()) {
        has1 |= std::abs(z + r1) < 1e-8;
        has2 |= std::abs(z + r2) < 1e-8;
      }
      CHECK((has1 && has2));
    }

    double prev = 0.0;
    for (int N : {7, 9, 21, 71, 301, 2001}) {
      const double c = analytic_oracle(Metric::DeviationFromAverage, 1, 1.0, N).reducible_cost;
      CHECK(c > prev);
      prev = c;
    }
    CHECK(std::abs(prev - 0.5) < 1e-3);
  }

  TEST_CASE("rederived forms match the exact solver") {
    for (auto metric : {Metric::LocalError, Metric::DeviationFromAverage})
      for (int M : {1, 2, 3}) {
        const Objective o = make(App::Consensus, metric, 1.4, 15, M);
        const auto r = h2::solve_exact(model_matching(o));
        const auto orc = analytic_oracle(metric, M, 1.4, 15, FormSource::Rederived);
        CHECK(r.reducible_cost == doctest::Approx(orc.reducible_cost).epsilon(1e-9));
        CHECK(r.full_cost == doctest::Approx(orc.full_cost).epsilon(1e-9));
        for (const auto& [k, th] : orc.theta) CHECK(ratfun::grid_distance(r.theta.at(k)(0, 0), th) < 1e-7);
      }
  }

  TEST_CASE("literature closed forms are stable and strictly proper") {
    for (auto metric : {Metric::LocalError, Metric::DeviationFromAverage})
      for (int M : {1, 2}) {
        const auto orc = analytic_oracle(metric, M, 2.0, 21);
        for (const auto& [k, th] : orc.theta) {
          CHECK(th.is_stable());
          CHECK(th.is_strictly_proper());
        }
      }
  }
}
