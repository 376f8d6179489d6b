#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pezzo/pluecker.hpp"
#include "pezzo/rng.hpp"
#include "test_util.hpp"

using namespace pezzo;
using namespace pezzo::testutil;

TEST_CASE("pair tables") {
  CHECK(ambient_pairs().size() == 10);
  CHECK(fiber_pairs().size() == 6);
  CHECK(ambient_pair_index(0, 1) == 0);
  CHECK(ambient_pair_index(3, 4) == 9);
  CHECK(fiber_pair_index(1, 2) == 3);
  CHECK_THROWS_AS(fiber_pair_index(2, 1), std::invalid_argument);
}

TEST_CASE("wedge of coordinate vectors") {
  ExteriorVector w = wedge2(chart_ring(), rat_vec({1, 0, 0, 0, 0}),
                            rat_vec({0, 1, 0, 0, 0}));
  for (int i = 0; i < 10; ++i)
    CHECK(w.c[i].as_constant() == (i == 0 ? Rational(1) : Rational(0)));
}

TEST_CASE("wedge of the pencil lines") {
  Ring ring = chart_ring();
  Polynomial t = Polynomial::variable(ring, "t");
  Polynomial one = Polynomial::constant(ring, Rational(1));
  Polynomial zero = Polynomial::zero(ring);
  // (e0 + t e1 - t^2 e4) ^ (e2 + t e3)
  std::vector<Polynomial> u = {one, t, zero, zero, -(t * t)};
  std::vector<Polynomial> v = {zero, zero, one, t, zero};
  ExteriorVector w = wedge2(u, v);
  CHECK(w.c[ambient_pair_index(0, 2)] == one);
  CHECK(w.c[ambient_pair_index(0, 3)] == t);
  CHECK(w.c[ambient_pair_index(1, 2)] == t);
  CHECK(w.c[ambient_pair_index(1, 3)] == t * t);
  CHECK(w.c[ambient_pair_index(2, 4)] == t * t);
  CHECK(w.c[ambient_pair_index(3, 4)] == t * t * t);
  CHECK(w.c[ambient_pair_index(0, 1)].is_zero());
  CHECK(w.c[ambient_pair_index(0, 4)].is_zero());
  CHECK(w.c[ambient_pair_index(1, 4)].is_zero());
  CHECK(w.c[ambient_pair_index(2, 3)].is_zero());

  ExteriorVector self = wedge2(u, u);
  CHECK(self.is_zero());
}

TEST_CASE("row space minors") {
  PolyMat top = poly_mat_from_rat(
      chart_ring(), rat_mat(2, 5, {1, 0, 0, 0, 0, 0, 1, 0, 0, 0}));
  auto minors = plucker_of_rowspace(top);
  REQUIRE(minors.size() == 10);
  for (int i = 0; i < 10; ++i)
    CHECK(minors[i].as_constant() == (i == 0 ? Rational(1) : Rational(0)));

  CHECK_THROWS_AS(
      plucker_of_rowspace(poly_mat_from_rat(chart_ring(), RatMatrix(3, 2))),
      std::invalid_argument);
}

TEST_CASE("random row spaces satisfy the quadratic relations") {
  SampleRng rng(31);
  for (int t = 0; t < 100; ++t) {
    RatMatrix m = rng.mat(2, 5);
    ExteriorVector w = wedge2(chart_ring(), m.row(0), m.row(1));
    for (const auto& rel : gr25_relations(w)) CHECK(rel.is_zero());
  }
}

TEST_CASE("minor vectors match the cross product up to fixed signs") {
  SampleRng rng(32);
  for (int t = 0; t < 100; ++t) {
    RatMatrix m = rng.mat(2, 3);
    auto minors = plucker_of_rowspace(poly_mat_from_rat(chart_ring(), m));
    RatVector cp = cross3(m.row(0), m.row(1));
    CHECK(minors[0].as_constant() == cp[2]);
    CHECK(minors[1].as_constant() == -cp[1]);
    CHECK(minors[2].as_constant() == cp[0]);
  }
}

TEST_CASE("cauchy-binet") {
  RatMatrix a = rat_mat(2, 3, {1, 0, 0, 0, 1, 0});
  CHECK(cauchy_binet_det(a, a.transpose()) == 1);

  RatMatrix rep = rat_mat(2, 3, {2, 3, 5, 2, 3, 5});
  SampleRng rng(33);
  CHECK(cauchy_binet_det(rep, rng.mat(3, 2)) == 0);

  for (int t = 0; t < 200; ++t) {
    RatMatrix x = rng.mat(2, 3), y = rng.mat(3, 2);
    CHECK(cauchy_binet_det(x, y) == det(x.mul(y)));
  }

  CHECK_THROWS_AS(cauchy_binet_det(rat_mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}),
                                   rat_mat(3, 2, {1, 0, 0, 1, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("decomposability relation on fiber vectors") {
  SampleRng rng(34);
  Ring ring = chart_ring();
  for (int t = 0; t < 50; ++t) {
    RatVector u = rng.vec(4), v = rng.vec(4);
    ExteriorVector fib;
    for (auto [i, j] : fiber_pairs())
      fib.c.push_back(Polynomial::constant(ring, u[i] * v[j] - u[j] * v[i]));
    CHECK(plucker_relation_ok(fib));
  }
  ExteriorVector bad;
  for (int i = 0; i < 6; ++i)
    bad.c.push_back(Polynomial::constant(
        ring, (i == 0 || i == 5) ? Rational(1) : Rational(0)));
  CHECK(!plucker_relation_ok(bad));
  ExteriorVector zero;
  for (int i = 0; i < 6; ++i) zero.c.push_back(Polynomial::zero(ring));
  CHECK(plucker_relation_ok(zero));
}

TEST_CASE("pivot-normalized row reduction fixes the minor vector") {
  SampleRng rng(35);
  Ring ring = chart_ring();
  for (int t = 0; t < 50; ++t) {
    RatMatrix m = rng.full_rank_mat(2, 5);
    RatMatrix mixed(2, 5);
    // random invertible row mix
    RatMatrix g(2, 2);
    do {
      g = rng.mat(2, 2, 3);
    } while (det(g) == 0);
    mixed = g.mul(m);

    RatMatrix red_a = rref(m), red_b = rref(mixed);
    auto pa = plucker_of_rowspace(poly_mat_from_rat(ring, red_a));
    auto pb = plucker_of_rowspace(poly_mat_from_rat(ring, red_b));
    for (int i = 0; i < 10; ++i) CHECK(pa[i] == pb[i]);

    // unreduced minors differ by the single scalar det(g)
    auto raw_a = plucker_of_rowspace(poly_mat_from_rat(ring, m));
    auto raw_b = plucker_of_rowspace(poly_mat_from_rat(ring, mixed));
    Rational scale = det(g);
    for (int i = 0; i < 10; ++i)
      CHECK(raw_b[i] == raw_a[i].scaled(scale));
  }
}

TEST_CASE("wedge2 is bilinear and alternating") {
  SampleRng rng(36);
  Ring ring = chart_ring();
  for (int t = 0; t < 100; ++t) {
    RatVector u = rng.vec(5), v = rng.vec(5), w = rng.vec(5);
    Rational lam = rng.rational();
    RatVector mix(5);
    for (int i = 0; i < 5; ++i) mix[i] = lam * u[i] + w[i];
    ExteriorVector lhs = wedge2(ring, mix, v);
    ExteriorVector uv = wedge2(ring, u, v), wv = wedge2(ring, w, v);
    for (int i = 0; i < 10; ++i)
      CHECK(lhs.c[i] == uv.c[i].scaled(lam) + wv.c[i]);
    ExteriorVector vu = wedge2(ring, v, u);
    for (int i = 0; i < 10; ++i) CHECK(uv.c[i] == -vu.c[i]);
    CHECK(wedge2(ring, u, u).is_zero());
  }
}

TEST_CASE("wedges satisfy the relations identically in a parameter") {
  Ring ring = chart_ring();
  Polynomial t = Polynomial::variable(ring, "t");
  Polynomial one = Polynomial::constant(ring, Rational(1));
  Polynomial zero = Polynomial::zero(ring);
  std::vector<Polynomial> u = {one, t, zero, zero, -(t * t)};
  std::vector<Polynomial> v = {zero, zero, one, t, zero};
  for (const auto& rel : gr25_relations(wedge2(u, v))) CHECK(rel.is_zero());
}

TEST_CASE("poly determinants expand exactly") {
  Ring ring = chart_ring();
  PolyMat m = {{P("a"), P("b")}, {P("c"), P("d")}};
  CHECK(poly_det(m) == P("a*d-b*c"));
  PolyMat singular = {{P("a"), P("b")}, {P("a"), P("b")}};
  CHECK(poly_det(singular).is_zero());
}
