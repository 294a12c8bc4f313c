#include <random>

#include "doctest.h"
#include "logdiv/error.hpp"
#include "logdiv/polynomial.hpp"

using namespace logdiv;

namespace {

RingPtr xyz() { return PolyRing::standard({"x", "y", "z"}); }

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Polynomial random_poly(std::mt19937& rng, const RingPtr& r, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-9, 9), exp(0, maxdeg);
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (int i = 0; i < r->nvars(); ++i) m[i] = static_cast<std::uint16_t>(exp(rng));
    t.push_back({m, Rational(coef(rng))});
  }
  return Polynomial(r, std::move(t));
}

// homogeneous of weighted degree d: random monomials filtered by degree
Polynomial random_weighted_homogeneous(std::mt19937& rng, const RingPtr& r, long d) {
  std::vector<Term> t;
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<Monomial> all;
  Monomial m;
  const auto& w = r->weights();
  std::function<void(int, long)> rec = [&](int i, long left) {
    if (i == r->nvars()) {
      if (left == 0) all.push_back(m);
      return;
    }
    for (long e = 0; e * w[static_cast<std::size_t>(i)] <= left; ++e) {
      m[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e * w[static_cast<std::size_t>(i)]);
    }
    m[i] = 0;
  };
  rec(0, d);
  for (const auto& mono : all) t.push_back({mono, Rational(coef(rng))});
  return Polynomial(r, std::move(t));
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(6, 4);
  CHECK(a.num() == 3);
  CHECK(a.den() == 2);
  Rational b(-1, -3);
  CHECK(b.to_string() == "1/3");
  CHECK((a + b).to_string() == "11/6");
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
}

TEST_CASE("parse examples") {
  auto r = xyz();
  Polynomial f = P("x*y*(x+y)*(x+z*y)", r);
  CHECK(f.size() == 4);
  CHECK(f == P("x^3*y + x^2*y^2 + x^2*y^2*z + x*y^3*z", r));
  CHECK(P("0", r).is_zero());
  CHECK(P("0", r).terms().empty());
  CHECK(P("(x+y)^2 - x^2 - 2*x*y", r) == P("y^2", r));
  CHECK(P("1/2*x - 1/2*x", r).is_zero());
}

TEST_CASE("parse errors carry offsets") {
  auto r = xyz();
  try {
    P("x + w", r);
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(P("2x", r), ParseError);
  CHECK_THROWS_AS(P("x y", r), ParseError);
  CHECK_THROWS_AS(P("x^99999", r), ParseError);
  CHECK_THROWS_AS(P("x^40000*x^40000", r), BudgetExhausted);
  CHECK_THROWS_AS(P("(x+", r), ParseError);
  CHECK_THROWS_AS(P("", r), ParseError);
}

TEST_CASE("print then parse is a fixpoint") {
  std::mt19937 rng(7);
  auto r = xyz();
  for (int k = 0; k < 50; ++k) {
    Polynomial f = random_poly(rng, r, 6, 3) * Rational(1, 1 + k % 5);
    CHECK(P(f.to_string(), r) == f);
  }
  CHECK(P("-3/4*x^2*y + 1", r).to_string() == "-3/4*x^2*y + 1");
}

TEST_CASE("partial derivatives") {
  auto r = xyz();
  CHECK(partial(P("x^2*y^3*z", r), 0) == P("2*x*y^3*z", r));
  CHECK(partial(P("z*x^4+x*y^4+y^5", r), 2) == P("x^4", r));
  auto r4 = PolyRing::standard({"x", "y", "z", "w"});
  CHECK(partial(P("x^2", r4), 3).is_zero());
}

TEST_CASE("weighted degree") {
  auto r = xyz();
  CHECK(P("x^2*y^3*z", r).weighted_degree() == 6);
  auto w = PolyRing::make({"x", "y"}, {3, 2});
  CHECK(P("x^2+y^3", w).weighted_degree() == 6);
  auto s = PolyRing::standard({"x", "y"});
  CHECK_FALSE(P("x+y^2", s).weighted_degree().has_value());
  CHECK_FALSE(P("0", s).weighted_degree().has_value());
}

TEST_CASE("evaluation") {
  auto r = xyz();
  std::vector<Rational> one{1, 1, 1};
  CHECK(P("x+y", r).evaluate(one) == Rational(2));
  std::vector<Rational> p{0, 1, 1};
  CHECK(P("x*y*z", r).evaluate(p) == Rational(0));
  CHECK(P("2*x+y+z", r).evaluate(one) == Rational(4));
}

TEST_CASE("ring laws and Leibniz on random polynomials") {
  std::mt19937 rng(11);
  auto r = xyz();
  for (int k = 0; k < 40; ++k) {
    Polynomial f = random_poly(rng, r, 5, 3), g = random_poly(rng, r, 5, 3), h = random_poly(rng, r, 4, 2);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f - f).is_zero());
    for (int i = 0; i < 3; ++i) {
      CHECK(partial(f * g, i) == partial(f, i) * g + f * partial(g, i));
      CHECK(partial(f + Rational(3) * g, i) == partial(f, i) + Rational(3) * partial(g, i));
    }
  }
}

TEST_CASE("Euler identity on 100 random weighted-homogeneous polynomials") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> wdist(1, 4), ddist(1, 9);
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    auto r = PolyRing::make({"a", "b", "c"}, {wdist(rng), wdist(rng), wdist(rng)}, OrderKind::WeightedGRevLex);
    long d = ddist(rng);
    Polynomial f = random_weighted_homogeneous(rng, r, d);
    Polynomial e(r);
    for (int i = 0; i < 3; ++i)
      e += Rational(r->weights()[static_cast<std::size_t>(i)]) * Polynomial::variable(r, i) * partial(f, i);
    CHECK(e == Rational(d) * f);
    CHECK(euler_operator(f) == Rational(d) * f);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("division") {
  auto r = xyz();
  auto [q, rem] = divide(P("x^2*y + y", r), P("x*y", r));
  CHECK(q == P("x", r));
  CHECK(rem == P("y", r));
  CHECK(divide_exact(P("x^2-y^2", r), P("x+y", r)) == P("x-y", r));
  CHECK_THROWS_AS(divide_exact(P("x^2+1", r), P("x+y", r)), InputError);
}

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(PolyRing::standard({"x", "x"}), InputError);
  CHECK_THROWS_AS(PolyRing::make({"x", "y"}, {1, 0}), InputError);
}
