#include <cmath>
#include <optional>

#include "symmp/harness.hpp"

namespace symmp::harness {

namespace {

constexpr double kStratumMargin = 0.05;
constexpr double kSphereMargin = 0.1;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

bool coin(Rng& rng) { return std::bernoulli_distribution(0.5)(rng); }

Angle ang(double radians) { return Angle::from_radians(radians); }

KleinPoint lift_choice(const TorusPoint& y, int variant) { return project<TorusSpace>((variant & 1) ? sigma(y) : y); }

/// b in (margin, pi - margin) with the sign taken from bit 1 of the variant.
Angle off_circle_b(double b, int variant) { return ang((variant & 2) ? -b : b); }

/// 0 or pi from bit 1 of the variant.
Angle on_circle_b(int variant) { return (variant & 2) ? Angle::half_turn() : Angle::zero(); }

std::vector<TorusStratum> make_torus_strata() {
  const double m = kStratumMargin;
  const double h = kPi / 2;
  std::vector<TorusStratum> out;

  out.push_back({"D1",
                 {TorusDomain::D1},
                 [=](Rng& rng, std::vector<double>& u, int& v) {
                   u = {random_angle(rng), random_angle(rng), uniform(rng, -h + m, h - m), uniform(rng, -kPi + m, kPi - m)};
                   v = coin(rng) ? 1 : 0;
                 },
                 [](std::span<const double> u, int v) {
                   TorusPoint x{ang(u[0]), ang(u[1])};
                   TorusPoint y{x.a + ang(u[2]), x.b + ang(u[3])};
                   return TorusQuery{x, lift_choice(y, v)};
                 }});

  auto off_circle_sample = [=](bool with_offset, double lo, double hi) {
    return [=](Rng& rng, std::vector<double>& u, int& v) {
      u = {random_angle(rng), uniform(rng, m, kPi - m)};
      if (with_offset) u.push_back(uniform(rng, lo, hi));
      v = (coin(rng) ? 1 : 0) | (coin(rng) ? 2 : 0);
    };
  };
  auto on_circle_sample = [=](bool with_offset, double lo, double hi) {
    return [=](Rng& rng, std::vector<double>& u, int& v) {
      u = {random_angle(rng)};
      if (with_offset) u.push_back(uniform(rng, lo, hi));
      v = (coin(rng) ? 1 : 0) | (coin(rng) ? 2 : 0);
    };
  };

  out.push_back({"D2/OnCx",
                 {TorusDomain::D2, TorusCase::on_cx},
                 off_circle_sample(true, -h + m, h - m),
                 [](std::span<const double> u, int v) {
                   TorusPoint x{ang(u[0]), off_circle_b(u[1], v)};
                   TorusPoint y{x.a + ang(u[2]), x.b + Angle::half_turn()};
                   return TorusQuery{x, lift_choice(y, v)};
                 }});
  out.push_back({"D2/OnCxD",
                 {TorusDomain::D2, TorusCase::on_cxd},
                 off_circle_sample(true, m, kTwoPi - m),
                 [](std::span<const double> u, int v) {
                   TorusPoint x{ang(u[0]), off_circle_b(u[1], v)};
                   TorusPoint ax = torus_loci::a_x(x);
                   TorusPoint y{ax.a, ax.b + ang(u[2])};
                   return TorusQuery{x, lift_choice(y, v)};
                 }});
  out.push_back({"D31",
                 {TorusDomain::D31},
                 off_circle_sample(false, 0, 0),
                 [](std::span<const double> u, int v) {
                   TorusPoint x{ang(u[0]), off_circle_b(u[1], v)};
                   return TorusQuery{x, lift_choice(torus_loci::a_x(x), v)};
                 }});
  out.push_back({"D32/OnCx",
                 {TorusDomain::D32, TorusCase::on_cx},
                 on_circle_sample(true, -h + m, h - m),
                 [](std::span<const double> u, int v) {
                   TorusPoint x{ang(u[0]), on_circle_b(v)};
                   TorusPoint y{x.a + ang(u[1]), x.b + Angle::half_turn()};
                   return TorusQuery{x, lift_choice(y, v)};
                 }});
  out.push_back({"D32/OnCxD",
                 {TorusDomain::D32, TorusCase::on_cxd},
                 on_circle_sample(true, m, kTwoPi - m),
                 [](std::span<const double> u, int v) {
                   TorusPoint x{ang(u[0]), on_circle_b(v)};
                   TorusPoint ax = torus_loci::a_x(x);
                   TorusPoint y{ax.a, ax.b + ang(u[1])};
                   return TorusQuery{x, lift_choice(y, v)};
                 }});
  out.push_back({"D4",
                 {TorusDomain::D4},
                 on_circle_sample(false, 0, 0),
                 [](std::span<const double> u, int v) {
                   TorusPoint x{ang(u[0]), on_circle_b(v)};
                   return TorusQuery{x, lift_choice(torus_loci::a_x(x), v)};
                 }});
  return out;
}

std::vector<double> gaussian(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  std::vector<double> w(dim);
  for (double& c : w) c = g(rng);
  return w;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(double s, const std::vector<double>& x, std::vector<double>& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

bool pinned(const Frame& f, int index) { return f.kind() == FrameKind::canonical && index == f.n() + 1; }

/// Unit vector from w orthogonal to v_0(p) .. v_{index-1}(p), signed so that
/// <q, v_index(p)> >= margin. Empty if w is too close to the constraint span.
std::optional<SpherePoint> lift_in_stratum(const Frame& f, int index, const SpherePoint& p, std::vector<double> w,
                                          double margin = kSphereMargin) {
  std::vector<std::vector<double>> basis;
  for (int j = 0; j < index; ++j) {
    SpherePoint vj = f.vector(p, j);
    std::vector<double> v(vj.coords().begin(), vj.coords().end());
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) axpy(-dot(b, v), b, v);
    double nv = std::sqrt(dot(v, v));
    if (nv < 1e-9) continue;
    for (double& c : v) c /= nv;
    basis.push_back(std::move(v));
  }
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) axpy(-dot(b, w), b, w);
  if (std::sqrt(dot(w, w)) < 1e-6) return std::nullopt;
  SpherePoint q(std::move(w));
  double s = symmp::dot(q, f.vector(p, index));
  if (std::abs(s) < margin) return std::nullopt;
  return s > 0 ? q : antipode(q);
}

SpherePoint random_stratum_base(const Frame& f, int index, Rng& rng) {
  for (;;) {
    std::vector<double> c = gaussian(rng, static_cast<std::size_t>(f.n()) + 1);
    if (pinned(f, index)) c.back() = 0.0;
    if (std::sqrt(dot(c, c)) > 1e-3) return SpherePoint(std::move(c));
  }
}

}  // namespace

std::string_view space_name(SpaceKind s) noexcept { return s == SpaceKind::torus ? "torus" : "sphere"; }

double continuity_constant(SpaceKind s) noexcept { return s == SpaceKind::torus ? 64.0 : 16.0; }

double random_angle(Rng& rng) {
  std::uniform_int_distribution<std::int64_t> ticks(-Angle::kHalfTurn + 1, Angle::kHalfTurn);
  return Angle::from_ticks(ticks(rng)).radians();
}

TorusPoint random_torus_point(Rng& rng) {
  double a = random_angle(rng);
  double b = random_angle(rng);
  return {ang(a), ang(b)};
}

SpherePoint random_sphere_point(Rng& rng, int n) {
  for (;;) {
    std::vector<double> c = gaussian(rng, static_cast<std::size_t>(n) + 1);
    if (std::sqrt(dot(c, c)) > 1e-6) return SpherePoint(std::move(c));
  }
}

Z2 random_jump(Rng& rng) { return coin(rng) ? Z2::sigma() : Z2::identity(); }

const std::vector<TorusStratum>& torus_strata() {
  static const std::vector<TorusStratum> strata = make_torus_strata();
  return strata;
}

TorusSample sample_stratum(const TorusStratum& s, Rng& rng) {
  std::vector<double> params;
  int variant = 0;
  s.sample(rng, params, variant);
  TorusQuery q = s.build(params, variant);
  return {q, std::move(params), variant};
}

SphereSample sample_sphere_stratum(const Frame& f, int index, Rng& rng) {
  for (;;) {
    SpherePoint p = random_stratum_base(f, index, rng);
    auto q = lift_in_stratum(f, index, p, gaussian(rng, static_cast<std::size_t>(f.n()) + 1));
    if (!q) continue;
    ProjectivePoint l = project<SphereSpace>(coin(rng) ? *q : antipode(*q));
    return {{p, l}, *q};
  }
}

SphereSample perturb_sphere_sample(const Frame& f, int index, const SphereSample& s, double size, Rng& rng) {
  const std::size_t dim = static_cast<std::size_t>(f.n()) + 1;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> u = gaussian(rng, dim);
    if (pinned(f, index)) u.back() = 0.0;
    double nu = std::sqrt(dot(u, u));
    if (nu < 1e-6) continue;
    std::vector<double> pc(s.query.p.coords().begin(), s.query.p.coords().end());
    axpy(size / nu, u, pc);
    SpherePoint p(std::move(pc));

    std::vector<double> w = gaussian(rng, dim);
    double nw = std::sqrt(dot(w, w));
    std::vector<double> qc(s.lift.coords().begin(), s.lift.coords().end());
    axpy(size / nw, w, qc);
    auto q = lift_in_stratum(f, index, p, std::move(qc), kSphereMargin / 2);
    if (!q) continue;
    bool same_sign = symmp::dot(s.query.l.representative(), s.lift) > 0;
    return {{p, project<SphereSpace>(same_sign ? *q : antipode(*q))}, *q};
  }
  throw NumericallyDegenerate("no in-stratum perturbation found");
}

double query_distance(const TorusQuery& a, const TorusQuery& b) {
  return torus_distance(a.x, b.x) + orbit_distance<TorusSpace>(a.z, b.z);
}

double query_distance(const SphereQuery& a, const SphereQuery& b) {
  return sphere_distance(a.p, b.p) + orbit_distance<SphereSpace>(a.l, b.l);
}

TorusPath random_torus_path(Rng& rng, const TorusPoint& start) {
  int segments = std::uniform_int_distribution<int>(1, 3)(rng);
  std::vector<TorusPath> pieces;
  TorusPoint at = start;
  for (int i = 0; i < segments; ++i) {
    int coord = coin(rng) ? 1 : 2;
    pieces.push_back(TorusPath::segment(TorusRotate(coord, uniform(rng, -kPi, kPi), at)));
    at = pieces.back().end();
  }
  TorusPath acc = pieces.back();
  for (auto it = pieces.rbegin() + 1; it != pieces.rend(); ++it) acc = concat(*it, acc);
  return acc;
}

SpherePath random_sphere_path(Rng& rng, const SpherePoint& start) {
  int segments = std::uniform_int_distribution<int>(1, 3)(rng);
  std::vector<SpherePath> pieces;
  SpherePoint at = start;
  for (int i = 0; i < segments; ++i) {
    SpherePoint to = random_sphere_point(rng, at.dim());
    while (symmp::dot(at, to) < -0.9) to = random_sphere_point(rng, at.dim());
    pieces.push_back(SpherePath::segment(SphereGeodesic(at, to)));
    at = pieces.back().end();
  }
  SpherePath acc = pieces.back();
  for (auto it = pieces.rbegin() + 1; it != pieces.rend(); ++it) acc = concat(*it, acc);
  return acc;
}

namespace {

template <class Space, class MakePath>
BrokenPath<Space> random_broken(Rng& rng, std::size_t k, typename Space::Point start, MakePath make) {
  std::vector<Path<Space>> paths;
  std::vector<Z2> jumps;
  typename Space::Point at = start;
  for (std::size_t i = 0; i < k; ++i) {
    paths.push_back(make(rng, at));
    if (i + 1 < k) {
      jumps.push_back(random_jump(rng));
      at = Space::act(jumps.back(), paths.back().end());
    }
  }
  return BrokenPath<Space>(std::move(paths), std::move(jumps));
}

}  // namespace

BrokenPath<TorusSpace> random_broken_torus(Rng& rng, std::size_t k) {
  TorusPoint start = random_torus_point(rng);
  return random_broken<TorusSpace>(rng, k, start, random_torus_path);
}

BrokenPath<SphereSpace> random_broken_sphere(Rng& rng, int n, std::size_t k) {
  SpherePoint start = random_sphere_point(rng, n);
  return random_broken<SphereSpace>(rng, k, start, random_sphere_path);
}

Json to_json(const TorusQuery& q) {
  return Json{{"x", point_to_json(q.x)}, {"z", point_to_json(q.z.representative())}};
}

Json to_json(const SphereQuery& q) {
  return Json{{"p", point_to_json(q.p)}, {"l", point_to_json(q.l.representative())}};
}

}  // namespace symmp::harness
