#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symmp/broken_path.hpp"
#include "symmp/harness.hpp"

using namespace symmp;

namespace {

using TP = Path<TorusSpace>;
using TB = BrokenPath<TorusSpace>;

TorusPoint tp(double a, double b) { return TorusPoint::from_radians(a, b); }

const Z2 e = Z2::identity();
const Z2 s = Z2::sigma();

bool same_structure(const TB& a, const TB& b) {
  if (a.stages() != b.stages() || a.jumps() != b.jumps()) return false;
  for (std::size_t i = 0; i < a.stages(); ++i)
    if (!structurally_equal(a.paths()[i], b.paths()[i])) return false;
  return true;
}

double pointwise_gap(const TB& a, const TB& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.stages(); ++i) worst = std::max(worst, sup_distance(a.paths()[i], b.paths()[i], 100));
  return worst;
}

}  // namespace

TEST_CASE("make_broken") {
  TP a = TP::segment(TorusRotate(1, 0.5, tp(0.1, 0.2)));
  CHECK(make_broken<TorusSpace>({a}, {}).stages() == 1);

  TP b = TP::segment(TorusRotate(2, 0.3, sigma(a.end())));
  TB ok = make_broken<TorusSpace>({a, b}, {s});
  CHECK(ok.stages() == 2);

  TP bad = TP::segment(TorusRotate(2, 0.3, a.end()));
  try {
    make_broken<TorusSpace>({a, bad}, {s});
    FAIL("expected GluingViolation");
  } catch (const GluingViolation& g) {
    CHECK(g.index() == 1);
  }
  try {
    make_broken<TorusSpace>({a, b, bad}, {s, e});
    FAIL("expected GluingViolation");
  } catch (const GluingViolation& g) {
    CHECK(g.index() == 2);
  }
  CHECK_THROWS(make_broken<TorusSpace>({a, b}, {}));
}

TEST_CASE("iota and retract") {
  TP a = TP::segment(TorusRotate(1, 0.5, tp(0.1, 0.2)));
  TB bare(a);
  TB up = iota(bare);
  CHECK(up.stages() == 2);
  CHECK(up.jumps().front() == e);
  CHECK(up.paths().back().kind() == TP::Kind::constant);
  CHECK(up.paths().back().as_constant() == a.end());
  CHECK(eval_ek(up) == eval_ek(bare));
  CHECK(same_structure(retract(up), bare));
  CHECK_THROWS_AS(retract(bare), TooShort);

  TP b = TP::segment(TorusRotate(2, 0.3, sigma(a.end())));
  TB two = make_broken<TorusSpace>({a, b}, {s});
  TB first = retract(two);
  CHECK(first.stages() == 1);
  CHECK(first.paths().front().same_node(a));
}

TEST_CASE("stabilize_f") {
  TP a = TP::segment(TorusRotate(1, 0.5, tp(0.1, 0.2)));
  TP b = TP::segment(TorusRotate(2, 0.3, sigma(a.end())));
  TP c = TP::segment(TorusRotate(1, -0.7, b.end()));
  TB three = make_broken<TorusSpace>({a, b, c}, {s, e});
  TB f = stabilize_f(three);
  CHECK(f.stages() == 2);
  CHECK(f.jumps() == std::vector<Z2>{s});
  CHECK(f.paths().front().same_node(a));
  CHECK(sup_distance(f.paths().back(), concat(b, c), 100) == 0.0);
  CHECK(eval_ek(f) == eval_ek(three));

  TB three_s = make_broken<TorusSpace>({a, b, TP::constant(sigma(b.end()))}, {s, s});
  TB f2 = stabilize_f(three_s);
  CHECK(f2.jumps() == std::vector<Z2>{e});
  CHECK(eval_ek(f2) == eval_ek(three_s));

  CHECK_THROWS_AS(stabilize_f(make_broken<TorusSpace>({a, b}, {s})), TooShort);
  CHECK_THROWS_AS(stabilize_f(TB(a)), TooShort);
}

TEST_CASE("phi and its inverse") {
  TP a = TP::segment(TorusRotate(1, 0.5, tp(0.1, 0.2)));
  TP b = TP::segment(TorusRotate(2, 0.3, a.end()));
  auto [path, g] = phi(make_broken<TorusSpace>({a, b}, {e}));
  CHECK(g == e);
  CHECK(sup_distance(path, concat(a, b), 100) == 0.0);

  TB back = phi_inv(TP::constant(tp(1, 1)), s);
  CHECK(back.stages() == 2);
  CHECK(back.jumps().front() == s);
  CHECK(back.paths()[0].eval(0.5) == tp(1, 1));
  CHECK(back.paths()[1].eval(0.5) == sigma(tp(1, 1)));

  CHECK_THROWS_AS(phi(TB(a)), TooShort);
  TP c = TP::constant(b.end());
  CHECK_THROWS_AS(phi(make_broken<TorusSpace>({a, b, c}, {e, e})), TooLong);
  CHECK_THROWS_AS(q_map(TB(a)), TooShort);
}

TEST_CASE("evaluations, diagonal and translation") {
  TorusPoint x = tp(0.4, -1.3);
  CHECK(twisted_eval<TorusSpace>(TP::constant(x), s) == std::pair{x, sigma(x)});
  TP a = TP::segment(TorusRotate(1, 0.5, x));
  CHECK(twisted_eval<TorusSpace>(a, e) == std::pair{a.start(), a.end()});
  CHECK(saturated_diagonal<TorusSpace>(x, e) == std::pair{x, x});
  CHECK(saturated_diagonal<TorusSpace>(x, s) == std::pair{x, sigma(x)});
  CHECK(twisted_eval<TorusSpace>(TP::constant(x), s) == saturated_diagonal<TorusSpace>(x, s));

  CHECK(translation_tau<TorusSpace>(x, x) == e);
  CHECK(translation_tau<TorusSpace>(x, sigma(x)) == s);
  CHECK_THROWS_AS(translation_tau<TorusSpace>(x, tp(0.5, -1.3)), NotInOrbit);

  SpherePoint p{0.0, 0.6, 0.8};
  CHECK(translation_tau<SphereSpace>(p, antipode(p)) == s);

  auto [x0, zx] = effectual_eval<TorusSpace>(TP::constant(x));
  CHECK(x0 == x);
  CHECK(same_orbit<TorusSpace>(zx, project<TorusSpace>(x), 0.0));
}

TEST_CASE("forget_jumps") {
  TP a = TP::segment(TorusRotate(1, 0.5, tp(0.1, 0.2)));
  TB bare(a);
  CHECK(forget_jumps(bare).paths().front().same_node(a));
  TP b = TP::segment(TorusRotate(2, 0.3, sigma(a.end())));
  auto ob = forget_jumps(make_broken<TorusSpace>({a, b}, {s}));
  CHECK(ob.stages() == 2);
  // only orbit-level gluing survives
  CHECK(!(ob.paths()[0].end() == ob.paths()[1].start()));
  CHECK(eval_ek(ob) == eval_ek(make_broken<TorusSpace>({a, b}, {s})));
}

TEST_CASE("identities over random torus broken paths") {
  harness::Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    std::size_t k = 1 + i % 8;
    TB bp = harness::random_broken_torus(rng, k);
    CHECK(bp.stages() == k);
    CHECK(same_structure(retract(iota(bp)), bp));
    CHECK(eval_ek(iota(bp)) == eval_ek(bp));
    CHECK(eval_ek(forget_jumps(bp)) == eval_ek(bp));
    if (k >= 3) CHECK(eval_ek(stabilize_f(bp)) == eval_ek(bp));
    if (k == 2) {
      auto [path, g] = phi(bp);
      CHECK(twisted_eval<TorusSpace>(path, g) == eval_ek(bp));
      CHECK(pointwise_gap(phi_inv(path, g), bp) == 0.0);
      TP qp = q_map(bp);
      CHECK(sup_distance(qp, path, 100) == 0.0);
      auto [start, orbit] = effectual_eval(qp);
      auto [e0, e1] = eval_ek(bp);
      CHECK(start == e0);
      CHECK(same_orbit<TorusSpace>(orbit, project<TorusSpace>(e1), 1e-9));
      auto ends = project_path(qp).endpoints();
      CHECK(same_orbit<TorusSpace>(ends.first, project<TorusSpace>(start), 1e-9));
      CHECK(same_orbit<TorusSpace>(ends.second, orbit, 1e-9));
    }
    TP single = harness::random_torus_path(rng, harness::random_torus_point(rng));
    Z2 g = harness::random_jump(rng);
    auto [back, h] = phi(phi_inv(single, g));
    CHECK(h == g);
    CHECK(sup_distance(back, single, 100) == 0.0);
  }
}

TEST_CASE("identities over random S^3 broken paths") {
  harness::Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    std::size_t k = 1 + i % 8;
    auto bp = harness::random_broken_sphere(rng, 3, k);
    CHECK(eval_ek(iota(bp)) == eval_ek(bp));
    CHECK(eval_ek(forget_jumps(bp)) == eval_ek(bp));
    if (k >= 3) CHECK(eval_ek(stabilize_f(bp)) == eval_ek(bp));
    if (k == 2) {
      auto [path, g] = phi(bp);
      CHECK(twisted_eval<SphereSpace>(path, g) == eval_ek(bp));
      auto inv = phi_inv(path, g);
      for (std::size_t j = 0; j < 2; ++j) CHECK(sup_distance(inv.paths()[j], bp.paths()[j], 100) == 0.0);
    }
  }
}
