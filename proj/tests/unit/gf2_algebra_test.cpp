#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <set>

#include "symmp/errors.hpp"
#include "symmp/gf2_algebra.hpp"

using namespace symmp;
using namespace symmp::gf2;

namespace {

std::vector<GradedElement> all_elements(const GradedAlgebra& a) {
  std::vector<GradedElement> out;
  for (int i = 0; i < a.total_dim(); ++i) out.push_back(a.basis(i));
  return out;
}

// every element of degree d, zero included
std::vector<GradedElement> degree_part(const GradedAlgebra& a, int d) {
  std::vector<GradedElement> out;
  for (std::uint64_t b = 0; b < (1ULL << a.dim(d)); ++b) out.push_back(a.from_bits(d, b));
  return out;
}

}  // namespace

TEST_CASE("torus and Klein bottle tables") {
  GradedAlgebra t = torus_ring();
  auto al = t.basis("alpha"), be = t.basis("beta"), ga = t.basis("gamma");
  CHECK(al * be == ga);
  CHECK(be * al == ga);
  CHECK((al * al).is_zero());
  CHECK((be * be).is_zero());
  CHECK(t.top_degree() == 2);

  GradedAlgebra k = klein_ring();
  auto ka = k.basis("kappa"), la = k.basis("lambda"), mu = k.basis("mu");
  CHECK(ka * ka == mu);
  CHECK(la * la == mu);
  CHECK((ka * la).is_zero());
  CHECK((la * ka).is_zero());

  for (const GradedAlgebra& a : {t, k}) {
    for (const auto& x : all_elements(a)) CHECK(a.one() * x == x);
    CHECK(a.basis(0) == a.one());
    CHECK(a.degree_of(0) == 0);
  }
  CHECK(ga.degree() == 2);
  CHECK((al + be).to_string() == "alpha + beta");
  CHECK(t.zero().to_string() == "0");
}

TEST_CASE("tensor product") {
  GradedAlgebra tk = tensor(torus_ring(), klein_ring());
  std::vector<int> dims;
  for (int d = 0; d <= tk.top_degree(); ++d) dims.push_back(tk.dim(d));
  CHECK(dims == std::vector<int>{1, 4, 6, 4, 1});
  CHECK(tk.name() == "H*(T)⊗H*(K)");
  CHECK(tk.basis("alpha⊗1") * tk.basis("1⊗lambda") == tk.basis("alpha⊗lambda"));
  auto top = tk.basis("gamma⊗mu");
  for (int i = 1; i < tk.total_dim(); ++i) CHECK((top * tk.basis(i)).is_zero());
}

TEST_CASE("products are associative, commutative and degree additive") {
  for (const GradedAlgebra& a : {torus_ring(), klein_ring(), tensor(torus_ring(), klein_ring())}) {
    auto el = all_elements(a);
    for (std::size_t i = 0; i < el.size(); ++i) {
      for (std::size_t j = 0; j < el.size(); ++j) {
        auto xy = el[i] * el[j];
        CHECK(xy == el[j] * el[i]);
        int d = a.degree_of(static_cast<int>(i)) + a.degree_of(static_cast<int>(j));
        if (!xy.is_zero()) CHECK(xy.degree() == d);
        for (std::size_t l = 0; l < el.size(); ++l) CHECK((el[i] * el[j]) * el[l] == el[i] * (el[j] * el[l]));
      }
    }
  }
}

TEST_CASE("build rejects a non-additive table") {
  using B = GradedAlgebra::BasisSpec;
  CHECK_THROWS_AS(GradedAlgebra::build("bad", {{"1", 0, {}}, {"x", 1, {0}}, {"y", 2, {}}}, {1}, {{1, 1, {1}}}),
                  std::invalid_argument);
  CHECK_NOTHROW(GradedAlgebra::build("ok", {B{"1", 0, {}}, B{"x", 1, {0}}, B{"y", 2, {0, 0}}}, {1}, {{1, 1, {2}}}));
}

TEST_CASE("pi star and (1, pi) star") {
  AlgebraMap p = pi_star();
  GradedAlgebra t = torus_ring();
  GradedAlgebra k = klein_ring();
  auto ab = t.basis("alpha") + t.basis("beta");
  CHECK(p(k.basis("kappa")) == ab);
  CHECK(p(k.basis("lambda")) == ab);
  CHECK(p(k.basis("mu")).is_zero());
  CHECK(p(k.basis("kappa") * k.basis("lambda")) == p(k.basis("kappa")) * p(k.basis("lambda")));
  CHECK((ab * ab).is_zero());

  AlgebraMap m = one_pi_star();
  GradedAlgebra tk = m.source();
  CHECK(m(tk.basis("alpha⊗1") + tk.basis("beta⊗1") + tk.basis("1⊗lambda")).is_zero());
  CHECK(m(tk.basis("1⊗mu")).is_zero());
  CHECK(m(tk.basis("alpha⊗1")) == t.basis("alpha"));
  CHECK(m(tk.basis("beta⊗kappa")) == t.basis("gamma"));

  // multiplicative on all pairs of elements of degree 1
  for (const auto& x : degree_part(tk, 1))
    for (const auto& y : degree_part(tk, 1)) CHECK(m(x * y) == m(x) * m(y));
}

TEST_CASE("generator images that break a relation are rejected") {
  GradedAlgebra t = torus_ring();
  // kappa lambda = 0 but alpha beta = gamma
  CHECK_THROWS_AS(AlgebraMap(klein_ring(), t, {t.basis("alpha"), t.basis("beta")}), RelationViolated);
  // kappa, lambda -> alpha, alpha respects every relation
  CHECK_NOTHROW(AlgebraMap(klein_ring(), t, {t.basis("alpha"), t.basis("alpha")}));
  // degree mismatch
  CHECK_THROWS_AS(AlgebraMap(klein_ring(), t, {t.basis("gamma"), t.basis("alpha")}), RelationViolated);
}

TEST_CASE("kernel matches brute force") {
  for (const AlgebraMap& m : {one_pi_star(), pi_star(), torus_to_point()}) {
    const GradedAlgebra& src = m.source();
    for (int d = 0; d <= src.top_degree(); ++d) {
      auto basis = kernel(m, d);
      std::set<std::uint64_t> brute;
      for (const auto& x : degree_part(src, d))
        if (m(x).is_zero()) brute.insert(x.bits(d));
      CHECK(brute.size() == (1ULL << basis.size()));
      // span of the basis is exactly the brute-force kernel
      std::set<std::uint64_t> span;
      for (std::uint64_t c = 0; c < (1ULL << basis.size()); ++c) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
          if (c >> i & 1) v ^= basis[i].bits(d);
        span.insert(v);
      }
      CHECK(span == brute);
      for (const auto& b : basis) {
        CHECK(!b.is_zero());
        CHECK(m(b).is_zero());
      }
    }
  }
  CHECK(kernel(one_pi_star(), 0).empty());
  CHECK(kernel(one_pi_star(), 1).size() == 2);
}

TEST_CASE("cup length of ker (1, pi) star") {
  auto t0 = std::chrono::steady_clock::now();
  CupLengthResult r = kernel_cup_length(one_pi_star(), 4);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 1.0);
  CHECK(r.length == 3);
  REQUIRE(r.witness.size() == 3);
  REQUIRE(r.product.has_value());
  GradedAlgebra tk = one_pi_star().source();
  auto target = tk.basis("alpha⊗mu") + tk.basis("beta⊗mu");
  CHECK(*r.product == target);
  CHECK(r.witness[0] * r.witness[1] * r.witness[2] == target);
  for (const auto& w : r.witness) CHECK(one_pi_star()(w).is_zero());

  auto lam = tk.basis("alpha⊗1") + tk.basis("beta⊗1") + tk.basis("1⊗lambda");
  CHECK(lam * lam * lam == target);

  // every 4-fold product of kernel elements is zero: degree 4 forces four degree-1 factors
  auto k1 = kernel(one_pi_star(), 1);
  std::vector<GradedElement> span1;
  for (std::uint64_t c = 1; c < (1ULL << k1.size()); ++c) {
    auto v = tk.zero();
    for (std::size_t i = 0; i < k1.size(); ++i)
      if (c >> i & 1) v = v + k1[i];
    span1.push_back(v);
  }
  for (const auto& a : span1)
    for (const auto& b : span1)
      for (const auto& c : span1)
        for (const auto& d : span1) CHECK((a * b * c * d).is_zero());
  CHECK(kernel_cup_length(one_pi_star(), 3).length == 3);
}

TEST_CASE("cup length of the point map is 2") {
  CupLengthResult r = kernel_cup_length(torus_to_point(), 2);
  CHECK(r.length == 2);
  REQUIRE(r.product.has_value());
  CHECK(*r.product == torus_ring().basis("gamma"));
}

TEST_CASE("cup length is monotone in the ideal") {
  AlgebraMap m = one_pi_star();
  const GradedAlgebra& tk = m.source();
  std::vector<std::vector<GradedElement>> full(tk.top_degree() + 1);
  for (int d = 1; d <= tk.top_degree(); ++d) full[d] = kernel(m, d);
  int whole = ideal_cup_length(tk, full, 4).length;

  std::vector<std::vector<GradedElement>> deg1_only(tk.top_degree() + 1);
  deg1_only[1] = full[1];
  std::vector<std::vector<GradedElement>> one_gen(tk.top_degree() + 1);
  one_gen[1] = {full[1][0]};
  std::vector<std::vector<GradedElement>> none(tk.top_degree() + 1);

  int l1 = ideal_cup_length(tk, deg1_only, 4).length;
  int l2 = ideal_cup_length(tk, one_gen, 4).length;
  int l3 = ideal_cup_length(tk, none, 4).length;
  CHECK(whole >= l1);
  CHECK(l1 >= l2);
  CHECK(l2 >= l3);
  CHECK(l3 == 0);
}
