#include "symmp/harness.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace symmp::harness {

namespace {

constexpr std::size_t kMaxListedFailures = 20;
constexpr std::size_t kPathProbes = 257;
constexpr std::size_t kIdentityProbes = 100;
constexpr double kCorruption = 0.1;
constexpr double kDecay = 0.2;

class FailureLog {
 public:
  void add(Json entry) {
    if (listed_.size() < kMaxListedFailures) listed_.push_back(std::move(entry));
    ++count_;
  }
  std::size_t count() const noexcept { return count_; }
  Json json() const { return listed_; }

 private:
  std::size_t count_ = 0;
  Json listed_ = Json::array();
};

Json header(std::string_view suite, const SuiteOptions& opt) {
  Json j;
  j["suite"] = suite;
  j["space"] = space_name(opt.space);
  if (opt.space == SpaceKind::sphere) j["n"] = opt.n;
  j["seed"] = opt.seed;
  j["samples"] = opt.samples;
  j["tolerances"] = {{"membership", opt.tol.membership}, {"arithmetic", opt.tol.arithmetic}};
  j["inject_fault"] = opt.inject_fault;
  return j;
}

Report finish(Json j, const FailureLog& log, bool control_detected) {
  j["failure_count"] = log.count();
  j["failures"] = log.json();
  bool passed = log.count() == 0 && control_detected;
  j["passed"] = passed;
  return {std::move(j), passed};
}

std::size_t per_stratum(const SuiteOptions& opt) { return std::max<std::size_t>(1, opt.samples / 10); }

std::string label_name(const TorusLabel& l) {
  std::string s(internal_name(l.domain));
  if (l.where != TorusCase::none) s += "/" + std::string(case_name(l.where));
  return s;
}

// ------------------------------------------------------------ corruptions

TorusPath corrupt(const TorusPath& p) {
  return concat(p, TorusPath::segment(TorusRotate(1, kCorruption, p.end())));
}

SpherePath corrupt(const SpherePath& p) {
  const SpherePoint& e = p.end();
  std::size_t j = 0;
  for (std::size_t i = 1; i < e.coords().size(); ++i)
    if (std::abs(e[i]) < std::abs(e[j])) j = i;
  std::vector<double> u(e.coords().size(), 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = (i == j ? 1.0 : 0.0) - e[j] * e[i];
  double nu = 0.0;
  for (double c : u) nu += c * c;
  nu = std::sqrt(nu);
  std::vector<double> moved(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) moved[i] = std::cos(kCorruption) * e[i] + std::sin(kCorruption) * u[i] / nu;
  return concat(p, SpherePath::segment(SphereGeodesic(e, SpherePoint(std::move(moved)))));
}

// ------------------------------------------------------------ torus partition

struct TorusCheck {
  bool ok;
  std::string reason;
};

TorusCheck check_torus_label(const TorusQuery& q, const TorusClassification& c, double tol) {
  using namespace torus_predicates;
  if (membership_count(q, tol) != 1) return {false, "query satisfies " + std::to_string(membership_count(q, tol)) + " domain predicates"};
  if (!in_domain(c.label.domain, q, tol)) return {false, "label predicate fails"};
  if (orbit_distance<TorusSpace>(c.lift, q.z) > tol) return {false, "lift does not project to z"};
  switch (c.label.domain) {
    case TorusDomain::D1:
      if (!in_m_minus_a(q.x, c.lift, tol)) return {false, "lift outside M_x minus A_x"};
      if (in_m_minus_a(q.x, sigma(c.lift), tol)) return {false, "both lifts in M_x minus A_x"};
      break;
    case TorusDomain::D2:
    case TorusDomain::D32:
      if (!in_a_minus_ci(q.x, c.lift, tol)) return {false, "lift outside A_x minus C_x^I"};
      if (in_a_minus_ci(q.x, sigma(c.lift), tol)) return {false, "both lifts in A_x minus C_x^I"};
      break;
    case TorusDomain::D31:
    case TorusDomain::D4:
      break;
  }
  return {true, {}};
}

TorusClassification faulty(TorusClassification c) {
  if (c.label.domain == TorusDomain::D31) c.label = {TorusDomain::D32, TorusCase::on_cx};
  return c;
}

Report torus_partition(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  const double tol = opt.tol.membership;
  FailureLog log;
  std::map<std::string, std::size_t> uniform_counts;
  Json strata = Json::array();

  auto run = [&](const TorusQuery& q, const std::string& stratum, const TorusLabel& expected) {
    TorusClassification c = classify(q, opt.tol);
    if (opt.inject_fault) c = faulty(c);
    TorusCheck check = check_torus_label(q, c, tol);
    bool match = c.label == expected;
    if (!check.ok || !match) {
      Json f = to_json(q);
      f["stratum"] = stratum;
      f["expected"] = label_name(expected);
      f["got"] = label_name(c.label);
      f["reason"] = check.ok ? "unexpected label" : check.reason;
      log.add(std::move(f));
    }
    return c.label;
  };

  for (std::size_t i = 0; i < opt.samples; ++i) {
    TorusPoint x = random_torus_point(rng);
    TorusQuery q{x, project<TorusSpace>(random_torus_point(rng))};
    ++uniform_counts[label_name(run(q, "uniform", {TorusDomain::D1}))];
  }
  for (const TorusStratum& s : torus_strata()) {
    std::size_t hits = 0;
    const std::size_t count = per_stratum(opt);
    for (std::size_t i = 0; i < count; ++i) {
      TorusSample t = sample_stratum(s, rng);
      if (run(t.query, s.name, s.expected) == s.expected) ++hits;
    }
    strata.push_back({{"stratum", s.name}, {"expected", label_name(s.expected)}, {"queries", count}, {"matched", hits}});
  }

  // Negative control: a z = [a_x] query relabelled into D32 must fail the predicates.
  Rng control_rng(opt.seed ^ 0x5a5a5a5aULL);
  const TorusStratum& d31 = torus_strata()[3];
  TorusQuery cq = sample_stratum(d31, control_rng).query;
  TorusCheck control = check_torus_label(cq, faulty(classify(cq, opt.tol)), tol);

  Json j = header("partition", opt);
  j["domain_count"] = torus_domain_count();
  j["uniform_labels"] = uniform_counts;
  j["strata"] = std::move(strata);
  j["negative_control"] = {{"case", "z = [a_x] query relabelled D32"}, {"detected", !control.ok}};
  return finish(std::move(j), log, !control.ok);
}

// ------------------------------------------------------------ sphere partition

int expected_domain_count(int n) { return (n == 1 || n == 3 || n == 7) ? n + 1 : n + 2; }

struct SphereCheck {
  bool ok;
  std::string reason;
};

SphereCheck check_sphere_label(const Frame& f, const SphereQuery& q, const SphereClassification& c, double tol) {
  if (c.index < 0 || c.index > f.k()) return {false, "index out of range"};
  if (orbit_distance<SphereSpace>(c.lift, q.l) > tol) return {false, "lift does not project to l"};
  for (int j = 0; j < c.index; ++j)
    if (std::abs(dot(c.lift, f.vector(q.p, j))) > tol) return {false, "nonzero inner product before the hit"};
  if (!(dot(c.lift, f.vector(q.p, c.index)) > tol)) return {false, "inner product at the hit is not positive"};
  return {true, {}};
}

Report sphere_partition(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  const Frame f = Frame::make(opt.n);
  const double tol = opt.tol.membership;
  FailureLog log;
  std::map<std::string, std::size_t> uniform_counts;
  Json strata = Json::array();
  std::size_t rank_failures = 0;
  double worst_orthonormality = 0.0;
  double worst_det = 0.0;
  const bool parallel = f.kind() != FrameKind::canonical;

  auto run = [&](const SphereQuery& q, const std::string& stratum, int expected) {
    SphereClassification c = classify_sphere(f, q, opt.tol);
    if (opt.inject_fault) c.index = (c.index + 1) % (f.k() + 1);
    SphereCheck check = check_sphere_label(f, q, c, tol);
    if (!check.ok || (expected >= 0 && c.index != expected)) {
      Json e = to_json(q);
      e["stratum"] = stratum;
      e["expected"] = expected;
      e["got"] = c.index;
      e["reason"] = check.ok ? "unexpected index" : check.reason;
      log.add(std::move(e));
    }
    return c.index;
  };

  for (std::size_t i = 0; i < opt.samples; ++i) {
    SpherePoint p = random_sphere_point(rng, f.n());
    SphereQuery q{p, project<SphereSpace>(random_sphere_point(rng, f.n()))};

    auto vs = f.vectors(p);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(vs.size()), f.n() + 1);
    for (std::size_t r = 0; r < vs.size(); ++r)
      for (int c = 0; c <= f.n(); ++c) m(static_cast<Eigen::Index>(r), c) = vs[r][static_cast<std::size_t>(c)];
    if (Eigen::FullPivLU<Eigen::MatrixXd>(m).rank() != f.n() + 1) {
      ++rank_failures;
      Json e = to_json(q);
      e["stratum"] = "frame";
      e["reason"] = "frame does not span";
      log.add(std::move(e));
    }
    if (parallel) {
      Eigen::MatrixXd sq = m.topRows(f.n() + 1);
      Eigen::MatrixXd gram = sq * sq.transpose();
      double off = (gram - Eigen::MatrixXd::Identity(f.n() + 1, f.n() + 1)).cwiseAbs().maxCoeff();
      double det = std::abs(std::abs(sq.determinant()) - 1.0);
      worst_orthonormality = std::max(worst_orthonormality, off);
      worst_det = std::max(worst_det, det);
      if (off > 1e-9 || det > 1e-9) {
        Json e = to_json(q);
        e["stratum"] = "frame";
        e["reason"] = "frame is not orthonormal";
        log.add(std::move(e));
      }
    }
    ++uniform_counts[std::to_string(run(q, "uniform", -1))];
  }
  for (int i = 0; i <= f.k(); ++i) {
    std::size_t hits = 0;
    const std::size_t count = per_stratum(opt);
    for (std::size_t s = 0; s < count; ++s)
      if (run(sample_sphere_stratum(f, i, rng).query, "index " + std::to_string(i), i) == i) ++hits;
    strata.push_back({{"stratum", "index " + std::to_string(i)}, {"queries", count}, {"matched", hits}});
  }

  const int dc = domain_count(f);
  if (dc != expected_domain_count(f.n())) log.add({{"reason", "domain count"}, {"got", dc}});

  Rng control_rng(opt.seed ^ 0x5a5a5a5aULL);
  SphereSample cs = sample_sphere_stratum(f, 0, control_rng);
  SphereClassification cc = classify_sphere(f, cs.query, opt.tol);
  cc.index = (cc.index + 1) % (f.k() + 1);
  bool detected = !check_sphere_label(f, cs.query, cc, tol).ok;

  Json j = header("partition", opt);
  j["frame"] = {{"k", f.k()}, {"parallelizable", parallel}};
  j["domain_count"] = dc;
  j["frame_rank_failures"] = rank_failures;
  if (parallel) {
    j["max_orthonormality_error"] = worst_orthonormality;
    j["max_det_error"] = worst_det;
  }
  j["uniform_labels"] = uniform_counts;
  j["strata"] = std::move(strata);
  j["negative_control"] = {{"case", "first-hit index shifted by one"}, {"detected", detected}};
  return finish(std::move(j), log, detected);
}

// ------------------------------------------------------------ sections

struct ErrorStats {
  std::size_t count = 0;
  double max_start = 0.0;
  double max_endpoint = 0.0;
};

Report torus_sections(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  FailureLog log;
  ErrorStats all;
  Json strata = Json::array();

  auto run = [&](const TorusQuery& q, const std::string& stratum, ErrorStats& st) {
    TorusPath path = section(q, opt.tol);
    if (opt.inject_fault) path = corrupt(path);
    double start = torus_distance(path.eval(0.0), q.x);
    double endpoint = orbit_distance<TorusSpace>(path.eval(1.0), q.z);
    for (ErrorStats* s : {&st, &all}) {
      ++s->count;
      s->max_start = std::max(s->max_start, start);
      s->max_endpoint = std::max(s->max_endpoint, endpoint);
    }
    if (!(start <= opt.tol.arithmetic && endpoint <= opt.tol.membership)) {
      Json f = to_json(q);
      f["stratum"] = stratum;
      f["start_error"] = start;
      f["endpoint_error"] = endpoint;
      f["path"] = path_to_json(path)["node"];
      log.add(std::move(f));
    }
  };

  ErrorStats uniform;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    TorusPoint x = random_torus_point(rng);
    run({x, project<TorusSpace>(random_torus_point(rng))}, "uniform", uniform);
  }
  strata.push_back({{"stratum", "uniform"}, {"queries", uniform.count}, {"max_start_error", uniform.max_start},
                    {"max_endpoint_error", uniform.max_endpoint}});
  for (const TorusStratum& s : torus_strata()) {
    ErrorStats st;
    for (std::size_t i = 0; i < per_stratum(opt); ++i) run(sample_stratum(s, rng).query, s.name, st);
    strata.push_back({{"stratum", s.name}, {"queries", st.count}, {"max_start_error", st.max_start},
                      {"max_endpoint_error", st.max_endpoint}});
  }

  Rng control_rng(opt.seed ^ 0x5a5a5a5aULL);
  TorusQuery cq{random_torus_point(control_rng), project<TorusSpace>(random_torus_point(control_rng))};
  bool detected = orbit_distance<TorusSpace>(corrupt(section(cq, opt.tol)).end(), cq.z) > opt.tol.membership;

  Json j = header("sections", opt);
  j["queries"] = all.count;
  j["max_start_error"] = all.max_start;
  j["max_endpoint_error"] = all.max_endpoint;
  j["strata"] = std::move(strata);
  j["negative_control"] = {{"case", "extra first-coordinate rotation by 0.1"}, {"detected", detected}};
  return finish(std::move(j), log, detected);
}

Report sphere_sections(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  const Frame f = Frame::make(opt.n);
  FailureLog log;
  ErrorStats all;
  Json strata = Json::array();

  auto run = [&](const SphereQuery& q, const std::string& stratum, ErrorStats& st) {
    SpherePath path = section_sphere(f, q, opt.tol);
    if (opt.inject_fault) path = corrupt(path);
    double start = sphere_distance(path.eval(0.0), q.p);
    double endpoint = orbit_distance<SphereSpace>(path.eval(1.0), q.l);
    for (ErrorStats* s : {&st, &all}) {
      ++s->count;
      s->max_start = std::max(s->max_start, start);
      s->max_endpoint = std::max(s->max_endpoint, endpoint);
    }
    if (!(start <= opt.tol.arithmetic && endpoint <= opt.tol.membership)) {
      Json e = to_json(q);
      e["stratum"] = stratum;
      e["start_error"] = start;
      e["endpoint_error"] = endpoint;
      log.add(std::move(e));
    }
  };

  ErrorStats uniform;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    SpherePoint p = random_sphere_point(rng, f.n());
    run({p, project<SphereSpace>(random_sphere_point(rng, f.n()))}, "uniform", uniform);
  }
  strata.push_back({{"stratum", "uniform"}, {"queries", uniform.count}, {"max_start_error", uniform.max_start},
                    {"max_endpoint_error", uniform.max_endpoint}});
  for (int i = 0; i <= f.k(); ++i) {
    ErrorStats st;
    std::string name = "index " + std::to_string(i);
    for (std::size_t s = 0; s < per_stratum(opt); ++s) run(sample_sphere_stratum(f, i, rng).query, name, st);
    strata.push_back({{"stratum", name}, {"queries", st.count}, {"max_start_error", st.max_start},
                      {"max_endpoint_error", st.max_endpoint}});
  }

  Rng control_rng(opt.seed ^ 0x5a5a5a5aULL);
  SphereQuery cq{random_sphere_point(control_rng, f.n()), project<SphereSpace>(random_sphere_point(control_rng, f.n()))};
  bool detected = orbit_distance<SphereSpace>(corrupt(section_sphere(f, cq, opt.tol)).end(), cq.l) > opt.tol.membership;

  Json j = header("sections", opt);
  j["queries"] = all.count;
  j["max_start_error"] = all.max_start;
  j["max_endpoint_error"] = all.max_endpoint;
  j["strata"] = std::move(strata);
  j["negative_control"] = {{"case", "extra geodesic of length 0.1 appended"}, {"detected", detected}};
  return finish(std::move(j), log, detected);
}

// ------------------------------------------------------------ continuity

struct DeltaStats {
  std::size_t kept = 0;
  double max_sup = 0.0;
  double max_query = 0.0;
};

/// Rows for one stratum plus bound and decay checks; returns false on failure.
bool continuity_rows(const std::string& stratum, const std::vector<double>& deltas, const std::vector<DeltaStats>& st,
                     double bound, Json& table, FailureLog& log) {
  bool ok = true;
  for (std::size_t d = 0; d < deltas.size(); ++d) {
    Json row{{"stratum", stratum},
             {"delta", deltas[d]},
             {"pairs", st[d].kept},
             {"max_query_distance", st[d].max_query},
             {"max_sup_distance", st[d].max_sup},
             {"ratio", st[d].max_sup / deltas[d]},
             {"bound", bound}};
    bool within = st[d].kept > 0 && st[d].max_sup <= bound * deltas[d];
    row["within_bound"] = within;
    if (d > 0) {
      double previous = st[d - 1].max_sup;
      double decay = previous > 0 ? st[d].max_sup / previous : 0.0;
      bool decays = previous > 0 ? decay <= kDecay : st[d].max_sup == 0.0;
      row["decay"] = decay;
      row["decays"] = decays;
      if (!decays) {
        ok = false;
        log.add({{"stratum", stratum}, {"delta", deltas[d]}, {"reason", "sup-distance does not decay"}, {"decay", decay}});
      }
    }
    if (!within) {
      ok = false;
      log.add({{"stratum", stratum}, {"delta", deltas[d]}, {"reason", "sup-distance above bound"},
               {"max_sup_distance", st[d].max_sup}, {"pairs", st[d].kept}});
    }
    table.push_back(std::move(row));
  }
  return ok;
}

void require_deltas(const std::vector<double>& deltas) {
  if (deltas.empty()) throw std::invalid_argument("continuity needs at least one delta");
  for (double d : deltas)
    if (!(d > 0)) throw std::invalid_argument("continuity deltas must be positive");
}

Report torus_continuity(const SuiteOptions& opt, const std::vector<double>& deltas) {
  require_deltas(deltas);
  Rng rng(opt.seed);
  const double bound = continuity_constant(SpaceKind::torus);
  FailureLog log;
  Json table = Json::array();

  for (const TorusStratum& s : torus_strata()) {
    std::vector<DeltaStats> st(deltas.size());
    for (std::size_t i = 0; i < opt.samples; ++i) {
      TorusSample base = sample_stratum(s, rng);
      std::normal_distribution<double> g;
      std::vector<double> dir(base.params.size());
      double norm = 0.0;
      for (double& c : dir) {
        c = g(rng);
        norm += c * c;
      }
      norm = std::sqrt(norm);
      TorusPath path = section(base.query, opt.tol);
      for (std::size_t d = 0; d < deltas.size(); ++d) {
        std::vector<double> u = base.params;
        for (std::size_t c = 0; c < u.size(); ++c) u[c] += deltas[d] / 4 * dir[c] / norm;
        TorusQuery q = s.build(u, base.variant);
        double qd = query_distance(base.query, q);
        if (qd > deltas[d]) continue;
        TorusClassification c = classify(q, opt.tol);
        if (!(c.label == s.expected)) {
          log.add({{"stratum", s.name}, {"reason", "perturbation left the stratum"}, {"query", to_json(q)}});
          continue;
        }
        TorusPath other = section(q, c);
        if (opt.inject_fault) other = corrupt(other);
        ++st[d].kept;
        st[d].max_query = std::max(st[d].max_query, qd);
        st[d].max_sup = std::max(st[d].max_sup, sup_distance(path, other, kPathProbes));
      }
    }
    continuity_rows(s.name, deltas, st, bound, table, log);
  }

  // Across the D1/D2 boundary the sections are not expected to agree.
  Json across = Json::array();
  for (double delta : deltas) {
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(opt.samples, 100); ++i) {
      TorusSample base = sample_stratum(torus_strata()[1], rng);
      TorusPoint y = base.query.z.representative();
      TorusPoint nudged{y.a, y.b + Angle::from_radians(delta / 2)};
      TorusQuery q{base.query.x, project<TorusSpace>(nudged)};
      worst = std::max(worst, sup_distance(section(base.query, opt.tol), section(q, opt.tol), kPathProbes));
    }
    across.push_back({{"boundary", "D1/D2"}, {"delta", delta}, {"max_sup_distance", worst}, {"expected_discontinuity", true}});
  }

  Rng control_rng(opt.seed ^ 0x5a5a5a5aULL);
  TorusQuery cq = sample_stratum(torus_strata()[0], control_rng).query;
  TorusPath cp = section(cq, opt.tol);
  bool detected = sup_distance(cp, corrupt(cp), kPathProbes) > bound * deltas.front();

  Json j = header("continuity", opt);
  j["deltas"] = deltas;
  j["bound_constant"] = bound;
  j["continuity"] = std::move(table);
  j["across_boundaries"] = std::move(across);
  j["negative_control"] = {{"case", "perturbed section with an extra rotation by 0.1"}, {"detected", detected}};
  return finish(std::move(j), log, detected);
}

Report sphere_continuity(const SuiteOptions& opt, const std::vector<double>& deltas) {
  require_deltas(deltas);
  Rng rng(opt.seed);
  const Frame f = Frame::make(opt.n);
  const double bound = continuity_constant(SpaceKind::sphere);
  FailureLog log;
  Json table = Json::array();

  for (int index = 0; index <= f.k(); ++index) {
    const std::string name = "index " + std::to_string(index);
    std::vector<DeltaStats> st(deltas.size());
    for (std::size_t i = 0; i < opt.samples; ++i) {
      SphereSample base = sample_sphere_stratum(f, index, rng);
      SpherePath path = section_sphere(f, base.query, opt.tol);
      std::uint64_t direction_seed = rng();
      for (std::size_t d = 0; d < deltas.size(); ++d) {
        // Same perturbation directions at every delta.
        Rng local(direction_seed);
        SphereSample moved = perturb_sphere_sample(f, index, base, deltas[d] / 4, local);
        double qd = query_distance(base.query, moved.query);
        if (qd > deltas[d]) continue;
        SphereClassification c = classify_sphere(f, moved.query, opt.tol);
        if (c.index != index) {
          log.add({{"stratum", name}, {"reason", "perturbation left the stratum"}, {"query", to_json(moved.query)}});
          continue;
        }
        SpherePath other = section_sphere(moved.query, c);
        if (opt.inject_fault) other = corrupt(other);
        ++st[d].kept;
        st[d].max_query = std::max(st[d].max_query, qd);
        st[d].max_sup = std::max(st[d].max_sup, sup_distance(path, other, kPathProbes));
      }
    }
    continuity_rows(name, deltas, st, bound, table, log);
  }

  Json across = Json::array();
  for (double delta : deltas) {
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(opt.samples, 100); ++i) {
      SphereSample base = sample_sphere_stratum(f, 1, rng);
      std::vector<double> c(base.lift.coords().begin(), base.lift.coords().end());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] -= delta / 2 * base.query.p[k];
      SphereQuery q{base.query.p, project<SphereSpace>(SpherePoint(std::move(c)))};
      worst = std::max(worst, sup_distance(section_sphere(f, base.query, opt.tol), section_sphere(f, q, opt.tol), kPathProbes));
    }
    across.push_back({{"boundary", "index 0/1"}, {"delta", delta}, {"max_sup_distance", worst}, {"expected_discontinuity", true}});
  }

  Rng control_rng(opt.seed ^ 0x5a5a5a5aULL);
  SphereQuery cq = sample_sphere_stratum(f, 0, control_rng).query;
  SpherePath cp = section_sphere(f, cq, opt.tol);
  bool detected = sup_distance(cp, corrupt(cp), kPathProbes) > bound * deltas.front();

  Json j = header("continuity", opt);
  j["deltas"] = deltas;
  j["bound_constant"] = bound;
  j["continuity"] = std::move(table);
  j["across_boundaries"] = std::move(across);
  j["negative_control"] = {{"case", "perturbed section with an extra geodesic of length 0.1"}, {"detected", detected}};
  return finish(std::move(j), log, detected);
}

// ------------------------------------------------------------ identities

struct IdentityStat {
  std::string name;
  double tolerance;
  std::size_t checked = 0;
  std::size_t failed = 0;
  double max_error = 0.0;
};

class IdentityLedger {
 public:
  IdentityLedger(double exact, double orbit) {
    const std::pair<const char*, double> rows[] = {
        {"retract(iota(bp)) = bp", 0.0},
        {"e_{k+1}(iota(bp)) = e_k(bp)", exact},
        {"e_k(f_k(bp)) = e_{k+1}(bp)", exact},
        {"twisted_eval(phi(bp)) = e_2(bp)", exact},
        {"e_k(forget_jumps(bp)) = e_k(bp)", exact},
        {"phi_inv(phi(bp)) = bp", exact},
        {"phi(phi_inv(alpha, g)) = (alpha, g)", exact},
        {"q(bp) = first component of phi(bp)", exact},
        {"(1 x pi)(e_2(bp)) = effectual_eval(q(bp))", orbit},
        {"e_01(P pi(gamma)) = (pi x 1)(effectual_eval(gamma))", orbit},
    };
    for (const auto& [name, tol] : rows) stats_.push_back({name, tol});
  }

  /// Records one check; `error` is NaN for a structural or thrown failure.
  void record(std::size_t id, double error, FailureLog& log, const Json& context) {
    IdentityStat& s = stats_[id];
    ++s.checked;
    bool ok = error <= s.tolerance;
    if (ok) {
      s.max_error = std::max(s.max_error, error);
      return;
    }
    ++s.failed;
    if (std::isfinite(error)) s.max_error = std::max(s.max_error, error);
    Json f{{"identity", s.name}, {"error", std::isfinite(error) ? Json(error) : Json("structural")}};
    f["broken_path"] = context;
    log.add(std::move(f));
  }

  Json json() const {
    Json out = Json::array();
    for (const auto& s : stats_)
      out.push_back({{"identity", s.name}, {"tolerance", s.tolerance}, {"checked", s.checked}, {"failed", s.failed},
                     {"max_error", s.max_error}, {"passed", s.failed == 0 && s.checked > 0}});
    return out;
  }

 private:
  std::vector<IdentityStat> stats_;
};

template <class Space>
Json broken_json(const BrokenPath<Space>& bp) {
  Json paths = Json::array();
  for (const auto& p : bp.paths()) paths.push_back(path_to_json(p)["node"]);
  Json jumps = Json::array();
  for (Z2 g : bp.jumps()) jumps.push_back(g.name());
  return {{"paths", paths}, {"jumps", jumps}};
}

template <class Space>
double pair_distance(const std::pair<typename Space::Point, typename Space::Point>& a,
                     const std::pair<typename Space::Point, typename Space::Point>& b) {
  return std::max(Space::distance(a.first, b.first), Space::distance(a.second, b.second));
}

/// phi^{-1} that forgets to translate the second half. Throws on a nontrivial jump.
template <class Space>
BrokenPath<Space> broken_phi_inv(const Path<Space>& alpha, Z2 g) {
  auto [first, second] = split_half(alpha);
  return BrokenPath<Space>({first, second}, {g});
}

template <class Space>
double broken_distance(const BrokenPath<Space>& a, const BrokenPath<Space>& b) {
  if (a.stages() != b.stages() || a.jumps() != b.jumps()) return std::numeric_limits<double>::quiet_NaN();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.stages(); ++i)
    worst = std::max(worst, sup_distance(a.paths()[i], b.paths()[i], kIdentityProbes));
  return worst;
}

template <class Space, class MakeBroken>
Report identities(const SuiteOptions& opt, MakeBroken make) {
  Rng rng(opt.seed);
  FailureLog log;
  IdentityLedger ledger(opt.tol.arithmetic, opt.tol.membership);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  using Broken = BrokenPath<Space>;

  auto inverse = [&](const Path<Space>& alpha, Z2 g) {
    return opt.inject_fault ? broken_phi_inv(alpha, g) : phi_inv(alpha, g);
  };

  for (std::size_t i = 0; i < opt.samples; ++i) {
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    Broken bp = make(rng, k);
    Broken bp2 = make(rng, 2);
    Json ctx = broken_json(bp);
    Json ctx2 = broken_json(bp2);

    Broken up = iota(bp);
    Broken back = retract(up);
    bool same = back.stages() == bp.stages() && back.jumps() == bp.jumps();
    for (std::size_t s = 0; same && s < bp.stages(); ++s) same = structurally_equal(back.paths()[s], bp.paths()[s]);
    ledger.record(0, same ? 0.0 : nan, log, ctx);

    ledger.record(1, pair_distance<Space>(eval_ek(up), eval_ek(bp)), log, ctx);
    if (bp.stages() >= 3) ledger.record(2, pair_distance<Space>(eval_ek(stabilize_f(bp)), eval_ek(bp)), log, ctx);
    ledger.record(4, pair_distance<Space>(eval_ek(forget_jumps(bp)), eval_ek(bp)), log, ctx);

    auto [joined, g] = phi(bp2);
    ledger.record(3, pair_distance<Space>(twisted_eval(joined, g), eval_ek(bp2)), log, ctx2);
    try {
      ledger.record(5, broken_distance(inverse(joined, g), bp2), log, ctx2);
    } catch (const Error&) {
      ledger.record(5, nan, log, ctx2);
    }

    Path<Space> alpha = bp.paths().front();
    Z2 h = random_jump(rng);
    try {
      auto [again, h2] = phi(inverse(alpha, h));
      ledger.record(6, h2 == h ? sup_distance(again, alpha, kIdentityProbes) : nan, log, ctx);
    } catch (const Error&) {
      ledger.record(6, nan, log, ctx);
    }

    Path<Space> qp = q_map(bp2);
    ledger.record(7, sup_distance(qp, joined, kIdentityProbes), log, ctx2);

    auto [start, end] = eval_ek(bp2);
    auto [q0, q1] = effectual_eval(qp);
    ledger.record(8, std::max(Space::distance(start, q0), orbit_distance<Space>(project<Space>(end), q1)), log, ctx2);

    auto [e0, e1] = project_path(alpha).endpoints();
    auto [g0, g1] = effectual_eval(alpha);
    ledger.record(9, std::max(orbit_distance<Space>(project<Space>(g0), e0), orbit_distance<Space>(g1, e1)), log, ctx);
  }

  // Negative control: a translated jump without translating the path must be caught.
  Rng control_rng(opt.seed ^ 0x5a5a5a5aULL);
  Broken cbp = make(control_rng, 1);
  bool detected = false;
  try {
    Broken bad = broken_phi_inv(cbp.paths().front(), Z2::sigma());
    detected = !(broken_distance(bad, phi_inv(cbp.paths().front(), Z2::sigma())) <= opt.tol.arithmetic);
  } catch (const GluingViolation&) {
    detected = true;
  }

  Json j = header("identities", opt);
  j["identities"] = ledger.json();
  j["negative_control"] = {{"case", "phi_inv without translating the second half"}, {"detected", detected}};
  return finish(std::move(j), log, detected);
}

}  // namespace

std::string Report::serialize() const { return json.dump(2) + "\n"; }

Report check_partition(const SuiteOptions& opt) {
  return opt.space == SpaceKind::torus ? torus_partition(opt) : sphere_partition(opt);
}

Report check_sections(const SuiteOptions& opt) {
  return opt.space == SpaceKind::torus ? torus_sections(opt) : sphere_sections(opt);
}

Report probe_continuity(const SuiteOptions& opt, const std::vector<double>& deltas) {
  return opt.space == SpaceKind::torus ? torus_continuity(opt, deltas) : sphere_continuity(opt, deltas);
}

Report run_identity_suite(const SuiteOptions& opt) {
  if (opt.space == SpaceKind::torus)
    return identities<TorusSpace>(opt, [](Rng& rng, std::size_t k) { return random_broken_torus(rng, k); });
  const int n = opt.n;
  return identities<SphereSpace>(opt, [n](Rng& rng, std::size_t k) { return random_broken_sphere(rng, n, k); });
}

Report run_suite(std::string_view suite, const SuiteOptions& opt) {
  if (suite == "partition") return check_partition(opt);
  if (suite == "sections") return check_sections(opt);
  if (suite == "continuity") return probe_continuity(opt);
  if (suite == "identities") return run_identity_suite(opt);
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace symmp::harness
