#include "symmp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "symmp/errors.hpp"
#include "symmp/gf2_algebra.hpp"
#include "symmp/harness.hpp"

namespace symmp::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<double> x, z, p, l;
  int n = 2;
  std::size_t samples = 0;
  std::string format = "json";
  std::string out_path;
  double membership_tol = kDefaultTolerances.membership;
  double arithmetic_tol = kDefaultTolerances.arithmetic;
  std::uint64_t seed = 0;
  std::string suite;
  std::string space = "torus";
  bool inject_fault = false;
  std::string map = "one-pi-star";
  // 0 means the top degree of the source
  int max_m = 0;
};

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t value) {
  if (flag->count() > 0) return value;
  const char* env = std::getenv("SYMM_MP_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::string s(env);
  std::size_t used = 0;
  std::uint64_t seed = 0;
  try {
    seed = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.front() == '-') throw UsageError("SYMM_MP_SEED must be a non-negative integer, got '" + s + "'");
  return seed;
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + cfg.out_path + "' for writing");
  f << text;
}

Tolerances tolerances(const Config& cfg) { return {cfg.membership_tol, cfg.arithmetic_tol}; }

void add_tolerance_flags(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--tol", cfg.membership_tol, "Membership tolerance")->check(CLI::Range(1e-14, 1e-6));
  cmd->add_option("--arith-tol", cfg.arithmetic_tol, "Arithmetic tolerance")->check(CLI::Range(1e-14, 1e-6));
}

TorusPoint torus_point(const std::vector<double>& v, const char* flag) {
  if (v.size() != 2) throw UsageError(std::string(flag) + " needs two angles a,b");
  return TorusPoint::from_radians(v[0], v[1]);
}

int plan_torus(const Config& cfg, std::ostream& out) {
  TorusQuery q{torus_point(cfg.x, "--x"), project<TorusSpace>(torus_point(cfg.z, "--z"))};
  TorusPlanReport r = plan(q, tolerances(cfg));
  std::size_t samples = cfg.samples == 0 ? 17 : cfg.samples;
  if (cfg.format == "csv") {
    emit(cfg, samples_csv(r.path, samples), out);
  } else {
    const TorusLabel& label = r.classification.label;
    Json j{{"space", "torus"},
           {"x", point_to_json(q.x)},
           {"z", point_to_json(q.z.representative())},
           {"domain", external_name(label.domain)},
           {"internal_domain", internal_name(label.domain)}};
    if (label.where != TorusCase::none) j["case"] = case_name(label.where);
    j["lift"] = point_to_json(r.classification.lift);
    j["path"] = path_to_json(r.path, samples);
    j["start_error"] = r.start_error;
    j["endpoint_error"] = r.endpoint_error;
    j["start_ok"] = r.start_ok;
    j["endpoint_ok"] = r.endpoint_ok;
    emit(cfg, j.dump(2) + "\n", out);
  }
  return r.start_ok && r.endpoint_ok ? kExitOk : kExitFailed;
}

int plan_sphere(const Config& cfg, std::ostream& out) {
  if (cfg.p.size() != static_cast<std::size_t>(cfg.n) + 1 || cfg.l.size() != cfg.p.size())
    throw UsageError("--p and --l need n+1 = " + std::to_string(cfg.n + 1) + " coordinates");
  Frame f = Frame::make(cfg.n);
  SphereQuery q{SpherePoint(cfg.p), project<SphereSpace>(SpherePoint(cfg.l))};
  SpherePlanReport r = plan_sphere(f, q, tolerances(cfg));
  std::size_t samples = cfg.samples == 0 ? 17 : cfg.samples;
  if (cfg.format == "csv") {
    emit(cfg, samples_csv(r.path, samples), out);
  } else {
    Json j{{"space", "sphere"},
           {"n", cfg.n},
           {"p", point_to_json(q.p)},
           {"l", point_to_json(q.l.representative())},
           {"domain_index", r.classification.index},
           {"domain_count", domain_count(f)},
           {"lift", point_to_json(r.classification.lift)},
           {"omega", r.omega},
           {"path", path_to_json(r.path, samples)},
           {"start_error", r.start_error},
           {"endpoint_error", r.endpoint_error},
           {"start_ok", r.start_ok},
           {"endpoint_ok", r.endpoint_ok}};
    emit(cfg, j.dump(2) + "\n", out);
  }
  return r.start_ok && r.endpoint_ok ? kExitOk : kExitFailed;
}

harness::SuiteOptions suite_options(const Config& cfg, std::size_t default_samples) {
  harness::SuiteOptions opt;
  opt.space = cfg.space == "sphere" ? harness::SpaceKind::sphere : harness::SpaceKind::torus;
  opt.n = cfg.n;
  opt.samples = cfg.samples == 0 ? default_samples : cfg.samples;
  opt.seed = cfg.seed;
  opt.tol = tolerances(cfg);
  opt.inject_fault = cfg.inject_fault;
  if (opt.space == harness::SpaceKind::sphere) Frame::make(opt.n);
  return opt;
}

int report(const Config& cfg, const harness::Report& r, std::ostream& out, std::ostream& err) {
  emit(cfg, r.serialize(), out);
  if (!r.passed) err << r.json.at("suite").get<std::string>() << ": " << r.json.at("failure_count").get<std::size_t>()
                     << " failure(s)\n";
  return r.passed ? kExitOk : kExitFailed;
}

gf2::AlgebraMap named_map(const std::string& name) {
  if (name == "one-pi-star") return gf2::one_pi_star();
  if (name == "pi-star") return gf2::pi_star();
  return gf2::torus_to_point();
}

int cuplength(const Config& cfg, std::ostream& out) {
  gf2::AlgebraMap m = named_map(cfg.map);
  const int top = m.source().top_degree();
  if (cfg.max_m > top) throw UsageError("--max may not exceed the top degree " + std::to_string(top));
  const int max_m = cfg.max_m > 0 ? cfg.max_m : top;
  gf2::CupLengthResult r = gf2::kernel_cup_length(m, max_m);
  Json dims = Json::array();
  for (int d = 0; d <= m.source().top_degree(); ++d) dims.push_back(gf2::kernel(m, d).size());
  Json witness = Json::array();
  for (const auto& w : r.witness) witness.push_back(w.to_string());
  Json j{{"map", cfg.map},
         {"source", m.source().name()},
         {"target", m.target().name()},
         {"max", max_m},
         {"length", r.length},
         {"witness", witness},
         {"product", r.product ? Json(r.product->to_string()) : Json(nullptr)},
         {"kernel_dims", dims}};
  emit(cfg, j.dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Effectual motion planners on the torus and spheres, with their verification suites"};
  app.name("symmp");
  app.require_subcommand(1);
  Config cfg;

  auto* plan_cmd = app.add_subcommand("plan", "Plan a path from a point to an orbit");
  plan_cmd->require_subcommand(1);
  auto* torus_cmd = plan_cmd->add_subcommand("torus", "Four-domain planner on T x K");
  torus_cmd->add_option("--x", cfg.x, "Start point a,b (radians)")->delimiter(',')->required();
  torus_cmd->add_option("--z", cfg.z, "Any lift a,b of the target Klein bottle point")->delimiter(',')->required();
  auto* sphere_cmd = plan_cmd->add_subcommand("sphere", "First-hit planner on S^n x P^n");
  sphere_cmd->add_option("--n", cfg.n, "Sphere dimension")->check(CLI::PositiveNumber);
  sphere_cmd->add_option("--p", cfg.p, "Start point c0,...,cn")->delimiter(',')->required();
  sphere_cmd->add_option("--l", cfg.l, "Any lift c0,...,cn of the target line")->delimiter(',')->required();
  for (auto* cmd : {torus_cmd, sphere_cmd}) {
    cmd->add_option("--samples", cfg.samples, "Number of path samples in the output");
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", cfg.out_path, "Write output to a file");
    add_tolerance_flags(cmd, cfg);
  }

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and write its JSON report");
  verify_cmd->add_option("--suite", cfg.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"partition", "sections", "continuity", "identities"}));
  verify_cmd->add_option("--samples", cfg.samples, "Queries, pairs per stratum, or broken paths");
  auto* verify_seed = verify_cmd->add_option("--seed", cfg.seed, "Random seed (default 0, or SYMM_MP_SEED)");
  verify_cmd->add_option("--out", cfg.out_path, "Report path");
  verify_cmd->add_flag("--inject-fault", cfg.inject_fault, "Corrupt the run; the suite must then fail");
  add_tolerance_flags(verify_cmd, cfg);

  auto* identities_cmd = app.add_subcommand("identities", "Check the broken-path identities");
  identities_cmd->add_option("--count", cfg.samples, "Number of random broken paths");
  auto* identities_seed = identities_cmd->add_option("--seed", cfg.seed, "Random seed (default 0, or SYMM_MP_SEED)");
  identities_cmd->add_option("--out", cfg.out_path, "Report path");
  identities_cmd->add_flag("--inject-fault", cfg.inject_fault, "Corrupt the run; the suite must then fail");
  add_tolerance_flags(identities_cmd, cfg);

  for (auto* cmd : {verify_cmd, identities_cmd}) {
    cmd->add_option("--space", cfg.space, "torus or sphere")->check(CLI::IsMember({"torus", "sphere"}));
    cmd->add_option("--n", cfg.n, "Sphere dimension")->check(CLI::PositiveNumber);
  }

  auto* cup_cmd = app.add_subcommand("cuplength", "Kernel cup-length of a cohomology map");
  cup_cmd->add_option("--map", cfg.map, "one-pi-star, pi-star or torus-to-point")
      ->check(CLI::IsMember({"one-pi-star", "pi-star", "torus-to-point"}));
  cup_cmd->add_option("--max", cfg.max_m, "Largest product length to search (default: top degree of the source)")->check(CLI::PositiveNumber);
  cup_cmd->add_option("--out", cfg.out_path, "Write output to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*torus_cmd) return plan_torus(cfg, out);
    if (*sphere_cmd) return plan_sphere(cfg, out);
    if (*cup_cmd) return cuplength(cfg, out);
    if (*verify_cmd) {
      cfg.seed = resolve_seed(verify_seed, cfg.seed);
      return report(cfg, harness::run_suite(cfg.suite, suite_options(cfg, 1000)), out, err);
    }
    if (*identities_cmd) {
      cfg.seed = resolve_seed(identities_seed, cfg.seed);
      return report(cfg, harness::run_identity_suite(suite_options(cfg, 1000)), out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const InvalidDimension& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace symmp::cli
