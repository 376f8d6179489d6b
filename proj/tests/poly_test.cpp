#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pezzo/poly.hpp"
#include "pezzo/rng.hpp"
#include "test_util.hpp"

using namespace pezzo;
using namespace pezzo::testutil;

TEST_CASE("chart ring layout") {
  Ring r = chart_ring();
  CHECK(r->size() == 18);
  CHECK(r->name(0) == "a");
  CHECK(r->name(12) == "m");
  CHECK(r->find("al") == 13);
  CHECK(r->find("t") == 17);
  CHECK(r->find("q01") == -1);
  CHECK_THROWS_AS(make_ring({"x", "x"}), std::invalid_argument);
}

TEST_CASE("parsing the displayed generators") {
  Polynomial p = P("-f*c+e+a");
  Polynomial q = Polynomial::variable(chart_ring(), "e") +
                 Polynomial::variable(chart_ring(), "a") -
                 Polynomial::variable(chart_ring(), "f") *
                     Polynomial::variable(chart_ring(), "c");
  CHECK(p == q);

  CHECK(P("0").is_zero());
  CHECK(P("c^2") == P("c") * P("c"));
  CHECK(P("h-c^2") == P("h") - P("c") * P("c"));
  CHECK(P("1/2*a+1/2*a") == P("a"));
  CHECK(P("(a+b)*(a-b)") == P("a^2-b^2"));
  CHECK(P("-(a+b)") == -P("a+b"));
  CHECK(P("2") * P("1/2") == Polynomial::constant(chart_ring(), Rational(1)));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(P("x+1"), ParseError);       // unknown variable
  CHECK_THROWS_AS(P("a+"), ParseError);        // dangling operator
  CHECK_THROWS_AS(P("a b"), ParseError);       // implicit multiplication
  CHECK_THROWS_AS(P("2a"), ParseError);        // implicit multiplication
  CHECK_THROWS_AS(P("(a"), ParseError);        // unbalanced parenthesis
  CHECK_THROWS_AS(P(""), ParseError);          // empty
  CHECK_THROWS_AS(P("1/0"), ParseError);       // zero denominator
  bool threw = false;
  try {
    P("a+q+b");
  } catch (const ParseError& e) {
    threw = true;
    CHECK(e.position == 2);
  }
  CHECK(threw);
}

TEST_CASE("print-parse round trip is the identity on canonical forms") {
  SampleRng rng(11);
  Ring ring = chart_ring();
  for (int t = 0; t < 100; ++t) {
    std::vector<Polynomial::Term> terms;
    int nt = static_cast<int>(rng.int_in(0, 5));
    for (int i = 0; i < nt; ++i) {
      Monomial m = Monomial::one(ring->size());
      for (int k = 0; k < 3; ++k)
        m.e[static_cast<std::size_t>(rng.int_in(0, 17))] +=
            static_cast<uint32_t>(rng.int_in(0, 2));
      terms.emplace_back(m, rng.rational());
    }
    Polynomial p = Polynomial::from_terms(ring, terms);
    std::string s = p.to_string();
    CHECK(Polynomial::parse(s, ring) == p);
    CHECK(Polynomial::parse(s, ring).to_string() == s);
  }
}

TEST_CASE("substitution matches the chart evaluations") {
  Ring ring = make_ring({"a", "b", "c", "d", "q01", "q02", "q03", "q12", "q13",
                         "q23", "e", "f", "g"});
  Polynomial form = Polynomial::parse("-a*q01-q02+c*q12+d*q13", ring);
  std::map<int, Polynomial> row{
      {ring->find("q01"), Polynomial::constant(ring, Rational(1))},
      {ring->find("q02"), Polynomial::variable(ring, "e")},
      {ring->find("q03"), Polynomial::zero(ring)},
      {ring->find("q12"), Polynomial::variable(ring, "f")},
      {ring->find("q13"), Polynomial::zero(ring)},
      {ring->find("q23"), Polynomial::variable(ring, "g")}};
  CHECK(form.substitute(row) == Polynomial::parse("-a-e+c*f", ring));
}

TEST_CASE("substituting zero drops the variable") {
  Polynomial p = P("a*b+b^2+c");
  std::map<int, Polynomial> kill{{chart_ring()->find("b"),
                                  Polynomial::zero(chart_ring())}};
  CHECK(p.substitute(kill) == P("c"));
}

TEST_CASE("parameter substitution mirrors the solved containment system") {
  // beta = -alpha*c - a and gamma = 0 turn e - beta into e + alpha*c + a.
  Ring ring = chart_ring();
  std::map<int, Polynomial> assign{
      {ring->find("be"), P("-al*c-a")},
      {ring->find("ga"), Polynomial::zero(ring)}};
  CHECK(P("e-be").substitute(assign) == P("e+al*c+a"));
}

TEST_CASE("monomial orders") {
  Ring xy = make_ring({"x", "y"});
  MonomialOrder grev = MonomialOrder::grevlex();
  auto mono = [&](uint32_t ex, uint32_t ey) {
    Monomial m = Monomial::one(2);
    m.e[0] = ex;
    m.e[1] = ey;
    return m;
  };
  CHECK(grev.compare(mono(2, 0), mono(1, 1)) > 0);   // x^2 > xy
  CHECK(grev.compare(mono(1, 1), mono(0, 2)) > 0);   // xy > y^2
  CHECK(grev.compare(mono(0, 2), mono(1, 0)) > 0);   // y^2 > x
  CHECK(grev.compare(mono(1, 0), mono(0, 1)) > 0);   // x > y
  CHECK(grev.compare(mono(0, 1), mono(0, 0)) > 0);   // y > 1

  MonomialOrder lex = MonomialOrder::lex();
  CHECK(lex.compare(mono(1, 0), mono(0, 2)) > 0);    // a > b^2

  Ring ring = chart_ring();
  MonomialOrder block = MonomialOrder::block(
      {ring->find("al"), ring->find("be"), ring->find("ga")}, ring->size());
  Monomial al_e = Monomial::one(ring->size());
  al_e.e[static_cast<std::size_t>(ring->find("al"))] = 1;
  al_e.e[static_cast<std::size_t>(ring->find("e"))] = 1;
  Monomial e3 = Monomial::one(ring->size());
  e3.e[static_cast<std::size_t>(ring->find("e"))] = 3;
  CHECK(block.compare(al_e, e3) > 0);  // eliminated variables dominate
}

TEST_CASE("any order: 1 minimal, divisibility is monotone") {
  SampleRng rng(12);
  Ring ring = chart_ring();
  auto orders = {MonomialOrder::lex(), MonomialOrder::grevlex(),
                 MonomialOrder::block({13, 14, 15, 16}, ring->size())};
  for (const auto& ord : orders) {
    for (int t = 0; t < 100; ++t) {
      Monomial m = Monomial::one(ring->size());
      for (int k = 0; k < 4; ++k)
        m.e[static_cast<std::size_t>(rng.int_in(0, 17))] +=
            static_cast<uint32_t>(rng.int_in(0, 2));
      Monomial divisor = m;
      for (auto& e : divisor.e)
        if (e > 0) e -= static_cast<uint32_t>(rng.int_in(0, 1));
      if (!m.is_one()) CHECK(ord.compare(m, Monomial::one(ring->size())) > 0);
      CHECK(mono_divides(divisor, m));
      if (!(divisor == m)) CHECK(ord.compare(divisor, m) < 0);
    }
  }
}

TEST_CASE("ring axioms hold exactly") {
  SampleRng rng(13);
  Ring ring = chart_ring();
  auto random_poly = [&]() {
    std::vector<Polynomial::Term> terms;
    int nt = static_cast<int>(rng.int_in(1, 4));
    for (int i = 0; i < nt; ++i) {
      Monomial m = Monomial::one(ring->size());
      for (int k = 0; k < 2; ++k)
        m.e[static_cast<std::size_t>(rng.int_in(0, 17))] +=
            static_cast<uint32_t>(rng.int_in(0, 2));
      terms.emplace_back(m, rng.rational());
    }
    return Polynomial::from_terms(ring, terms);
  };
  for (int t = 0; t < 300; ++t) {
    Polynomial p = random_poly(), q = random_poly(), r = random_poly();
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK(p - p == Polynomial::zero(ring));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  SampleRng rng(14);
  Ring ring = chart_ring();
  auto random_poly = [&]() {
    std::vector<Polynomial::Term> terms;
    int nt = static_cast<int>(rng.int_in(1, 3));
    for (int i = 0; i < nt; ++i) {
      Monomial m = Monomial::one(ring->size());
      m.e[static_cast<std::size_t>(rng.int_in(0, 5))] +=
          static_cast<uint32_t>(rng.int_in(0, 2));
      terms.emplace_back(m, rng.rational());
    }
    return Polynomial::from_terms(ring, terms);
  };
  for (int t = 0; t < 200; ++t) {
    Polynomial p = random_poly(), q = random_poly();
    std::map<int, Polynomial> assign{{0, random_poly()}, {2, random_poly()}};
    CHECK((p * q).substitute(assign) ==
          p.substitute(assign) * q.substitute(assign));
    CHECK((p + q).substitute(assign) ==
          p.substitute(assign) + q.substitute(assign));
  }
}
