#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "symmp/orbit.hpp"
#include "symmp/path.hpp"
#include "symmp/path_json.hpp"
#include "symmp/sphere.hpp"
#include "symmp/torus.hpp"

using namespace symmp;

namespace {

using TP = Path<TorusSpace>;
using SP = Path<SphereSpace>;

TorusPoint tp(double a, double b) { return TorusPoint::from_radians(a, b); }

bool near(double x, double y, double tol = 1e-12) { return std::abs(x - y) <= tol; }

// slerp with Omega = arccos<p,q>, written independently of the library
std::vector<double> slerp_oracle(const SpherePoint& p, const SpherePoint& q, double t) {
  double c = 0;
  for (std::size_t i = 0; i < p.coords().size(); ++i) c += p[i] * q[i];
  double om = std::acos(std::clamp(c, -1.0, 1.0));
  std::vector<double> out(p.coords().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (std::sin((1 - t) * om) * p[i] + std::sin(t * om) * q[i]) / std::sin(om);
  return out;
}

}  // namespace

TEST_CASE("angles normalize into (-pi, pi] with +pi kept") {
  CHECK(Angle::from_radians(kPi).radians() == doctest::Approx(kPi));
  CHECK(Angle::from_radians(-kPi).radians() == doctest::Approx(kPi));
  CHECK(Angle::from_radians(3 * kPi).ticks() == Angle::kHalfTurn);
  CHECK(Angle::from_radians(kTwoPi).ticks() == 0);
  CHECK(near(Angle::from_radians(-0.5).radians(), -0.5, 1e-14));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    double a = u(rng);
    double n = normalize_angle(a);
    CHECK(n > -kPi);
    CHECK(n <= kPi);
    CHECK(normalize_angle(n) == n);
    CHECK(std::abs(std::remainder(a - n, kTwoPi)) < 1e-12);
  }
}

TEST_CASE("ticks round-trip exactly through radians") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> t(-Angle::kHalfTurn + 1, Angle::kHalfTurn);
  for (int i = 0; i < 1000; ++i) {
    Angle a = Angle::from_ticks(t(rng));
    CHECK(Angle::from_radians(a.radians()) == a);
  }
}

TEST_CASE("sigma on the torus") {
  TorusPoint s = sigma(tp(0, 0));
  CHECK(s.a.radians() == doctest::Approx(kPi));
  CHECK(s.b.radians() == 0.0);

  TorusPoint s2 = sigma(tp(kPi / 2, kPi / 3));
  CHECK(s2.a.radians() == doctest::Approx(-kPi / 2));
  CHECK(s2.b.radians() == doctest::Approx(-kPi / 3));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 1000; ++i) {
    TorusPoint x = tp(u(rng), u(rng));
    CHECK(sigma(sigma(x)) == x);
    CHECK(!(sigma(x) == x));
  }
}

TEST_CASE("torus distance wraps") {
  CHECK(torus_distance(tp(kPi - 0.1, 0), tp(-kPi + 0.1, 0)) == doctest::Approx(0.2));
  CHECK(torus_distance(tp(0, 0), tp(0.3, 0.4)) == doctest::Approx(0.5));
  CHECK(torus_distance(tp(1, 2), tp(1, 2)) == 0.0);
}

TEST_CASE("sphere points normalize and negate exactly") {
  SpherePoint p({3.0, 4.0});
  CHECK(p[0] == doctest::Approx(0.6));
  CHECK(p.dim() == 1);
  CHECK_THROWS_AS(SpherePoint({0.0, 0.0}), NumericallyDegenerate);
  CHECK_THROWS_AS(SpherePoint(std::vector<double>{1.0}), InvalidDimension);

  CHECK(antipode(SpherePoint{1.0, 0.0}) == SpherePoint{-1.0, 0.0});
  CHECK(antipode(SpherePoint{0.0, 0.0, 1.0}) == SpherePoint{0.0, 0.0, -1.0});

  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  for (int i = 0; i < 200; ++i) {
    SpherePoint q({g(rng), g(rng), g(rng), g(rng)});
    CHECK(std::abs(dot(q, q) - 1.0) < 1e-12);
    CHECK(dot(q, antipode(q)) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(antipode(antipode(q)) == q);
  }
}

TEST_CASE("projection and lifts") {
  CHECK(same_orbit<TorusSpace>(project<TorusSpace>(tp(0, 0)), project<TorusSpace>(tp(kPi, 0)), 1e-12));
  CHECK(same_orbit<SphereSpace>(project<SphereSpace>(SpherePoint{0, 1}), project<SphereSpace>(SpherePoint{0, -1}), 1e-12));
  CHECK(!same_orbit<TorusSpace>(project<TorusSpace>(tp(0, 0)), project<TorusSpace>(tp(0.3, 0)), 1e-9));

  auto [y0, y1] = project<TorusSpace>(tp(0.4, 1.0)).lifts();
  CHECK(y0 == tp(0.4, 1.0));
  CHECK(y1 == tp(0.4 + kPi, -1.0));

  auto [s0, s1] = project<SphereSpace>(SpherePoint{0, 0, 1}).lifts();
  CHECK(s0 == SpherePoint{0, 0, 1});
  CHECK(s1 == SpherePoint{0, 0, -1});

  // canonical is the same for both lifts
  OrbitPoint<TorusSpace> z = project<TorusSpace>(tp(0.4, 1.0));
  CHECK(z.canonical() == project<TorusSpace>(sigma(tp(0.4, 1.0))).canonical());
}

TEST_CASE("orbit equality is an equivalence on well separated samples") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  const double tol = 1e-9;
  for (int i = 0; i < 10000; ++i) {
    TorusPoint y = tp(u(rng), u(rng));
    OrbitPoint<TorusSpace> a = project<TorusSpace>(y);
    OrbitPoint<TorusSpace> b = project<TorusSpace>(sigma(y));
    OrbitPoint<TorusSpace> c = project<TorusSpace>(tp(u(rng), u(rng)));
    CHECK(same_orbit<TorusSpace>(a, a, tol));
    CHECK(same_orbit<TorusSpace>(a, b, tol) == same_orbit<TorusSpace>(b, a, tol));
    if (orbit_distance<TorusSpace>(a, c) > 10 * tol) {
      CHECK(!same_orbit<TorusSpace>(a, c, tol));
      CHECK(!same_orbit<TorusSpace>(b, c, tol));
    }
  }
}

TEST_CASE("path evaluation") {
  TP r = TP::segment(TorusRotate(2, kPi / 2, tp(0, 0)));
  CHECK(r.eval(1.0) == tp(0, kPi / 2));
  CHECK(r.eval(0.0) == tp(0, 0));
  CHECK_THROWS_AS(r.eval(1.5), std::domain_error);
  CHECK_THROWS_AS(r.eval(-0.1), std::domain_error);
  CHECK_THROWS_AS(TorusRotate(3, 0.1, tp(0, 0)), std::invalid_argument);

  TP c = TP::constant(tp(1, 0));
  for (double t : {0.0, 0.3, 1.0}) CHECK(c.eval(t) == tp(1, 0));

  TP a = TP::segment(TorusRotate(1, 0.7, tp(0.2, 0.1)));
  TP b = TP::segment(TorusRotate(2, -1.1, a.end()));
  TP ab = concat(a, b);
  CHECK(ab.eval(0.25) == a.eval(0.5));
  CHECK(ab.eval(0.75) == b.eval(0.5));
  CHECK(ab.start() == a.start());
  CHECK(ab.end() == b.end());
}

TEST_CASE("rotation and geodesic leaves match closed forms on a 1000-point grid") {
  TorusPoint s = tp(2.9, -3.0);
  TP r = TP::segment(TorusRotate(1, 2.5, s));
  std::mt19937_64 rng(6);
  std::normal_distribution<double> g;
  SpherePoint p({g(rng), g(rng), g(rng)});
  SpherePoint q({g(rng), g(rng), g(rng)});
  SP geo = SP::segment(SphereGeodesic(p, q));
  for (int i = 0; i <= 1000; ++i) {
    double t = i / 1000.0;
    TorusPoint e = r.eval(t);
    CHECK(std::abs(std::remainder(e.a.radians() - (2.9 + 2.5 * t), kTwoPi)) < 1e-12);
    CHECK(e.b == s.b);
    auto want = slerp_oracle(p, q, t);
    SpherePoint got = geo.eval(t);
    for (std::size_t k = 0; k < want.size(); ++k) CHECK(near(got[k], want[k]));
  }
}

TEST_CASE("geodesic rejects antipodes and handles the quarter circle") {
  CHECK_THROWS_AS(SphereGeodesic(SpherePoint{1, 0}, SpherePoint{-1, 0}), AntipodalEndpoints);
  CHECK_THROWS_AS(SphereGeodesic(SpherePoint{1, 0}, SpherePoint{1, 0, 0}), DimensionMismatch);
  SphereGeodesic quarter(SpherePoint{1, 0}, SpherePoint{0, 1});
  CHECK(quarter.omega() == doctest::Approx(kPi / 2));
  SpherePoint mid = quarter.eval(0.5);
  CHECK(near(mid[0], std::sqrt(0.5)));
  CHECK(near(mid[1], std::sqrt(0.5)));
  SphereGeodesic still(SpherePoint{1, 0}, SpherePoint{1, 0});
  CHECK(still.eval(0.3) == SpherePoint{1, 0});
}

TEST_CASE("concat gluing and split_half inverse law") {
  TP a = TP::segment(TorusRotate(1, 0.5, tp(0, 0)));
  TP far = TP::segment(TorusRotate(2, 0.5, tp(1, 1)));
  CHECK_THROWS_AS(concat(a, far), EndpointMismatch);

  TP b = TP::segment(TorusRotate(2, 0.5, a.end()));
  auto [l, r] = split_half(concat(a, b));
  CHECK(l.same_node(a));
  CHECK(r.same_node(b));

  auto [h1, h2] = split_half(a);
  CHECK(sup_distance(concat(h1, h2), a, 100) == 0.0);
  CHECK(concat(h1, h2).same_node(a));
  for (int i = 0; i <= 100; ++i) {
    double t = i / 100.0;
    CHECK(h1.eval(t) == a.eval(t / 2));
    CHECK(torus_distance(h2.eval(t), a.eval((1 + t) / 2)) == 0.0);
  }

  TP padded = concat(a, TP::constant(a.end()));
  for (int i = 0; i <= 100; ++i) {
    double t = i / 100.0;
    CHECK(padded.eval(t / 2) == a.eval(t));
  }
}

TEST_CASE("act_path") {
  TP a = TP::segment(TorusRotate(1, 0.5, tp(0.1, 0.2)));
  CHECK(act_path(Z2::identity(), a).same_node(a));
  TP c = act_path(Z2::sigma(), TP::constant(tp(0.3, 0.4)));
  CHECK(c.kind() == TP::Kind::constant);
  CHECK(c.as_constant() == sigma(tp(0.3, 0.4)));
  TP twice = act_path(Z2::sigma(), act_path(Z2::sigma(), a));
  CHECK(sup_distance(twice, a, 100) == 0.0);
  TP once = act_path(Z2::sigma(), a);
  for (int i = 0; i <= 20; ++i) CHECK(once.eval(i / 20.0) == sigma(a.eval(i / 20.0)));
}

TEST_CASE("probe times nest and sup_distance is monotone") {
  CHECK(probe_time(0) == 0.0);
  CHECK(probe_time(1) == 1.0);
  CHECK(probe_time(2) == 0.5);
  CHECK(probe_time(3) == 0.25);
  CHECK(probe_time(4) == 0.75);
  CHECK(probe_time(5) == 0.125);

  TP a = TP::segment(TorusRotate(1, 2.0, tp(0, 0)));
  TP b = TP::segment(TorusRotate(2, 1.0, tp(0, 0)));
  double prev = 0.0;
  for (std::size_t n = 1; n < 300; n += 7) {
    double d = sup_distance(a, b, n);
    CHECK(d >= prev);
    prev = d;
  }
  CHECK(sup_distance(a, a, 100) == 0.0);
  CHECK(sup_distance(a, b, 100) == sup_distance(b, a, 100));
  CHECK(sup_distance(TP::constant(tp(0, 0)), TP::constant(tp(0.3, 0.4)), 10) == doctest::Approx(0.5));
}

TEST_CASE("path JSON round trip is bit-exact") {
  TP a = TP::segment(TorusRotate(1, 0.123456789, tp(0.4, -2.2)));
  TP b = TP::segment(TorusRotate(2, -3.0, a.end()));
  TP tree = concat(act_path(Z2::sigma(), concat(a, b)), TP::constant(sigma(b.end())));
  auto halves = split_half(a);
  TP with_restrict = concat(halves.second, TP::constant(a.end()));
  for (const TP& p : {tree, with_restrict}) {
    Json j = path_to_json(p, 5);
    CHECK(j["space"] == "torus");
    CHECK(j["samples"].size() == 5);
    TP back = path_from_json<TorusSpace>(Json::parse(j.dump()));
    CHECK(structurally_equal(back, p));
    CHECK(path_to_json(back).dump() == path_to_json(p).dump());
  }

  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  SpherePoint p({g(rng), g(rng), g(rng), g(rng)});
  SpherePoint q({g(rng), g(rng), g(rng), g(rng)});
  SP s = concat(SP::segment(SphereGeodesic(p, q)), SP::constant(q));
  SP back = path_from_json<SphereSpace>(Json::parse(path_to_json(s).dump()));
  CHECK(structurally_equal(back, s));

  CHECK_THROWS_AS(path_from_json<SphereSpace>(path_to_json(tree)), ParseError);
  CHECK_THROWS_AS(path_from_json<TorusSpace>(Json::parse(R"({"space":"torus","node":{"kind":"spiral"}})")), ParseError);
  CHECK_THROWS_AS(path_from_json<TorusSpace>(Json::parse(R"({"space":"torus"})")), ParseError);
}

TEST_CASE("CSV samples have a header and increasing t") {
  SP s = SP::segment(SphereGeodesic(SpherePoint{1, 0, 0}, SpherePoint{0, 0, 1}));
  std::istringstream in(samples_csv(s, 9));
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,c0,c1,c2");
  double prev = -1;
  int rows = 0;
  while (std::getline(in, line)) {
    double t = std::stod(line.substr(0, line.find(',')));
    CHECK(t > prev);
    prev = t;
    ++rows;
  }
  CHECK(rows == 9);
  CHECK(prev == 1.0);
}
