#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <algorithm>
#include <iostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "locsyn/apps/closed_forms.hpp"
#include "locsyn/error.hpp"
#include "locsyn/h2/synthesis.hpp"
#include "locsyn/realize/controller.hpp"
#include "locsyn/realize/simulate.hpp"
#include "locsyn/sis/serialize.hpp"

namespace locsyn::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) fail(ErrorCode::ConfigError, "cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::ConfigError, p.string() + ": " + e.what());
  }
}

void write_json(const fs::path& p, const json& j) {
  std::ofstream out(p);
  if (!out) fail(ErrorCode::ConfigError, "cannot write " + p.string());
  out << j.dump(2) << '\n';
}

void check_solver(const std::string& s) {
  if (s != "exact" && s != "numeric" && s != "both")
    fail(ErrorCode::ConfigError, "solver must be exact, numeric or both");
}

std::vector<int> parse_sweep(const json& j) {
  std::vector<int> out;
  if (j.is_array()) {
    for (const auto& v : j) out.push_back(v.get<int>());
  } else if (j.is_object()) {
    const int step = j.value("step", 1);
    if (step < 1) fail(ErrorCode::ConfigError, "sweep step must be positive");
    for (int M = j.at("from").get<int>(); M <= j.at("to").get<int>(); M += step) out.push_back(M);
  } else {
    fail(ErrorCode::ConfigError, "sweep must be a list or {from, to, step}");
  }
  return out;
}

std::vector<h2::SynthesisResult> solve(const RunConfig& cfg, const h2::ModelMatchProblem& p) {
  std::vector<h2::SynthesisResult> out;
  if (cfg.solver == "exact" || cfg.solver == "both") out.push_back(h2::solve_exact(p));
  if (cfg.solver == "numeric" || cfg.solver == "both") {
    h2::NumericOptions opt;
    opt.basis_size = cfg.basis;
    opt.nodes = cfg.nodes;
    out.push_back(h2::solve_numeric(p, opt));
  }
  return out;
}

json error_json(const std::string& stage, const std::exception& e) {
  json j{{"stage", stage}, {"message", e.what()}};
  if (const auto* le = dynamic_cast<const Error*>(&e)) j["code"] = std::string(to_string(le->code()));
  return j;
}

std::string objective_name(const apps::Objective& o) { return to_string(o.app) + "_" + to_string(o.metric); }

}  // namespace

RunConfig load_config(const Overrides& ov) {
  RunConfig cfg;
  if (ov.config) {
    const json j = read_json(*ov.config);
    try {
      const json& obj = j.contains("objective") ? j.at("objective") : j;
      cfg.objective = obj.get<apps::Objective>();
      if (j.contains("schema_version")) cfg.objective.schema_version = j.at("schema_version").get<int>();
      if (j.contains("sweep")) cfg.sweep = parse_sweep(j.at("sweep"));
      cfg.solver = j.value("solver", cfg.solver);
      cfg.basis = j.value("basis", cfg.basis);
      cfg.nodes = j.value("nodes", cfg.nodes);
      cfg.seed = j.value("seed", cfg.seed);
      if (j.contains("simulation")) {
        const json& s = j.at("simulation");
        cfg.disturbance = s.value("disturbance", cfg.disturbance);
        cfg.T = s.value("T", cfg.T);
        cfg.dt = s.value("dt", cfg.dt);
        cfg.site = s.value("site", cfg.site);
        cfg.runs = s.value("runs", cfg.runs);
        cfg.record_every = s.value("record_every", cfg.record_every);
        cfg.warmup = s.value("warmup", cfg.warmup);
      }
      if (j.contains("synthesis")) {
        fs::path p = j.at("synthesis").get<std::string>();
        if (p.is_relative()) p = fs::path(*ov.config).parent_path() / p;
        cfg.synthesis = p;
      }
    } catch (const json::exception& e) {
      fail(ErrorCode::ConfigError, std::string("config: ") + e.what());
    }
  }
  if (ov.out) cfg.out = *ov.out;
  if (ov.seed) cfg.seed = *ov.seed;
  if (ov.solver) cfg.solver = *ov.solver;
  if (ov.basis) cfg.basis = *ov.basis;

  cfg.objective.validate();
  check_solver(cfg.solver);
  if (cfg.basis < 1) fail(ErrorCode::ConfigError, "basis size must be at least 1");
  if (cfg.sweep.empty()) cfg.sweep.push_back(cfg.objective.M);
  for (int M : cfg.sweep)
    if (M < 0 || 2 * M >= cfg.objective.N) fail(ErrorCode::ConfigError, "sweep value M=" + std::to_string(M) + " is not below N/2");
  if (cfg.disturbance != "impulse" && cfg.disturbance != "noise" && cfg.disturbance != "none")
    fail(ErrorCode::ConfigError, "disturbance must be impulse, noise or none");
  if (cfg.site < 0 || cfg.site >= cfg.objective.N) fail(ErrorCode::ConfigError, "site out of range");
  if (cfg.runs < 1) fail(ErrorCode::ConfigError, "runs must be at least 1");
  return cfg;
}

int cmd_synthesize(const RunConfig& cfg) {
  fs::create_directories(cfg.out);
  const apps::ProblemData data = apps::build(cfg.objective);
  json result{{"objective", cfg.objective}, {"solver", cfg.solver}};
  std::vector<h2::SynthesisResult> res;
  try {
    res = solve(cfg, apps::model_matching(cfg.objective, data, cfg.objective.M));
  } catch (const std::exception& e) {
    write_json(cfg.out / "error.json", error_json("synthesis", e));
    std::cerr << "synthesis failed: " << e.what() << '\n';
    return kSolverError;
  }
  const auto base = h2::riccati_baseline(data.plant, data.C1, data.D12, data.B1);
  result["baseline"] = base.cost;
  result["baseline_warnings"] = base.warnings;
  result["results"] = res;
  write_json(cfg.out / "result.json", result);

  const h2::SynthesisResult& primary = res.front();
  write_json(cfg.out / "theta.json", json{{"objective", cfg.objective}, {"solver", to_string(primary.solver)},
                                          {"theta", primary.theta}});
  try {
    const auto impl = realize::make_impl(data.plant, primary.Phix, primary.Phiu);
    const auto sr = realize::structured_realization(impl);
    json rj = sr;
    rj["block_transfer_error"] = realize::block_transfer_error(sr, impl);
    write_json(cfg.out / "realization.json", rj);
  } catch (const std::exception& e) {
    write_json(cfg.out / "realization.json", json{{"skipped", e.what()}});
  }
  std::cout << std::setprecision(10);
  for (const auto& r : res)
    std::cout << to_string(r.solver) << ": reducible_cost=" << r.reducible_cost << " full_cost=" << r.full_cost
              << " baseline=" << base.cost << '\n';
  return kOk;
}

int cmd_sweep(const RunConfig& cfg) {
  fs::create_directories(cfg.out);
  const apps::ProblemData data = apps::build(cfg.objective);
  const double baseline = h2::riccati_baseline(data.plant, data.C1, data.D12, data.B1).cost;
  const int n = static_cast<int>(cfg.sweep.size());
  std::vector<std::vector<std::string>> rows(n);
  std::vector<json> failures(n);
  const int pool = std::min(n, static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));

  auto row = [&](int M, const std::string& solver, int K, double red, double full, double ms) {
    std::ostringstream os;
    os << std::setprecision(12) << cfg.objective.N << ',' << M << ',' << cfg.objective.gamma << ','
       << objective_name(cfg.objective) << ',' << red << ',' << full << ',' << baseline << ',' << solver << ','
       << K << ',' << std::setprecision(6) << ms;
    return os.str();
  };
  auto worker = [&](int first) {
    for (int i = first; i < n; i += pool) {
      const int M = cfg.sweep[i];
      try {
        for (const auto& r : solve(cfg, apps::model_matching(cfg.objective, data, M)))
          rows[i].push_back(row(M, to_string(r.solver), r.diagnostics.basis_size, r.reducible_cost, r.full_cost,
                                r.wall_ms));
      } catch (const std::exception& e) {
        rows[i].push_back(row(M, cfg.solver, cfg.solver == "exact" ? 0 : cfg.basis, std::nan(""), std::nan(""), 0.0));
        failures[i] = error_json("M=" + std::to_string(M), e);
      }
    }
  };
  if (pool <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> ts;
    for (int i = 0; i < pool; ++i) ts.emplace_back(worker, i);
    for (auto& t : ts) t.join();
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cfg.sweep[a] < cfg.sweep[b]; });
  std::ofstream csv(cfg.out / "sweep.csv");
  csv << "N,M,gamma,objective,reducible_cost,full_cost,baseline,solver,K,wall_ms\n";
  json diag = json::array();
  for (int i : order) {
    for (const auto& r : rows[i]) {
      csv << r << '\n';
      std::cout << r << '\n';
    }
    if (!failures[i].is_null()) diag.push_back(failures[i]);
  }
  if (!diag.empty()) write_json(cfg.out / "sweep_errors.json", diag);
  return kOk;
}

int cmd_simulate(const RunConfig& cfg) {
  fs::create_directories(cfg.out);
  apps::Objective obj = cfg.objective;
  sis::ConvKernel theta;
  if (cfg.synthesis) {
    if (!fs::exists(*cfg.synthesis)) {
      std::cerr << "synthesis artifact not found: " << cfg.synthesis->string() << '\n';
      write_json(cfg.out / "error.json", json{{"stage", "load"}, {"message", "missing " + cfg.synthesis->string()}});
      return kConfigError;
    }
    const json art = read_json(*cfg.synthesis);
    try {
      obj = art.at("objective").get<apps::Objective>();
      theta = art.at("theta").get<sis::ConvKernel>();
    } catch (const std::exception& e) {
      fail(ErrorCode::ConfigError, std::string("synthesis artifact: ") + e.what());
    }
  }
  const apps::ProblemData data = apps::build(obj);
  try {
    if (!cfg.synthesis) {
      RunConfig one = cfg;
      if (one.solver == "both") one.solver = "exact";
      theta = solve(one, apps::model_matching(obj, data, obj.M)).front().theta;
    }
    const auto [Phix, Phiu] = param::phis_from_theta(data.family, theta);
    const auto impl = realize::make_impl(data.plant, Phix, Phiu);
    const auto sr = realize::structured_realization(impl);
    const auto cl = realize::closed_loop(data.plant, sr, data.C1, data.D12, data.B1);

    realize::SimOptions opt;
    opt.disturbance = cfg.disturbance == "impulse" ? realize::Disturbance::Impulse
                      : cfg.disturbance == "noise" ? realize::Disturbance::WhiteNoise
                                                   : realize::Disturbance::None;
    opt.T = cfg.T;
    opt.dt = cfg.dt;
    opt.site = cfg.site;
    opt.seed = cfg.seed;
    opt.record_every = cfg.record_every;
    opt.warmup = cfg.warmup;
    const auto tr = realize::simulate(cl, opt, impl.M);
    std::ofstream csv(cfg.out / "trajectory.csv");
    realize::write_trajectory_csv(csv, cl, tr);

    json report{{"objective", obj},
                {"disturbance", cfg.disturbance},
                {"T", cfg.T},
                {"dt", tr.dt},
                {"site", cfg.site},
                {"band", impl.M},
                {"max_outside_band", tr.max_outside_band},
                {"energy", tr.energy},
                {"seed", cfg.seed}};
    if (opt.disturbance == realize::Disturbance::WhiteNoise && cfg.runs > 1) {
      const auto mc = realize::monte_carlo_h2(cl, cfg.runs, cfg.T, cfg.warmup, cfg.seed, cfg.dt);
      report["monte_carlo"] = {{"runs", mc.runs}, {"estimate", mc.estimate}, {"std_error", mc.std_error}};
    }
    write_json(cfg.out / "simulation.json", report);
    std::cout << "max |x| outside band " << impl.M << ": " << tr.max_outside_band << '\n';
  } catch (const Error& e) {
    write_json(cfg.out / "error.json", error_json("simulate", e));
    std::cerr << "simulation failed: " << e.what() << '\n';
    return kSolverError;
  }
  return kOk;
}

int cmd_oracle_check(const RunConfig& cfg) {
  fs::create_directories(cfg.out);
  const auto records = apps::oracle_regression();
  json arr = json::array();
  bool ok = true;
  int flags = 0;
  for (const auto& r : records) {
    const char* status = r.pass ? "PASS" : (r.literature ? "FLAG" : "FAIL");
    if (!r.pass && !r.literature) ok = false;
    if (!r.pass && r.literature) ++flags;
    std::cout << status << "  " << r.name << "  err=" << std::setprecision(3) << r.error << " tol=" << r.tol << '\n';
    arr.push_back({{"name", r.name},
                   {"value", r.value},
                   {"reference", r.reference},
                   {"error", r.error},
                   {"tol", r.tol},
                   {"pass", r.pass},
                   {"literature", r.literature}});
  }
  write_json(cfg.out / "oracle_check.json", arr);
  std::cout << (ok ? "all rederived checks pass" : "rederived checks FAILED") << "; " << flags
            << " literature mismatches flagged\n";
  return ok ? kOk : kFailure;
}

}  // namespace locsyn::cli
