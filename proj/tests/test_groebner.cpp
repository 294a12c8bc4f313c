#include <algorithm>
#include <random>

#include "doctest.h"
#include "logdiv/error.hpp"
#include "logdiv/groebner.hpp"

using namespace logdiv;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Submodule I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto s : gens) g.push_back(P(s, r));
  return Submodule::ideal(r, g);
}

std::vector<std::string> gb_text(const Submodule& s) {
  std::vector<std::string> out;
  for (const auto& g : groebner(s).gb()) out.push_back(g.to_string());
  return out;
}

}  // namespace

TEST_CASE("twisted cubic in lex") {
  auto r = PolyRing::make({"z", "y", "x"}, {}, OrderKind::Lex);
  Submodule i = groebner(I(r, {"y-x^2", "z-x^3"}));
  CHECK(contains(i, P("z^2-y^3", r)));
  CHECK(contains(i, P("z-x*y", r)));
  CHECK_FALSE(contains(i, P("z-y", r)));
  auto polys = i.gb_polys();
  CHECK(std::find(polys.begin(), polys.end(), P("y-x^2", r)) != polys.end());
  CHECK(std::find(polys.begin(), polys.end(), P("z-x^3", r)) != polys.end());
}

TEST_CASE("already reduced bases") {
  auto r = PolyRing::standard({"x", "y", "z"});
  CHECK(gb_text(I(r, {"x", "y"})) == std::vector<std::string>{"[y]", "[x]"});
  Submodule j = groebner(I(r, {"2*x*y^3*z", "3*x^2*y^2*z", "x^2*y^3"}));
  CHECK(j.gb().size() == 3);
  CHECK(same_submodule(j, I(r, {"x*y^3*z", "x^2*y^2*z", "x^2*y^3"})));
}

TEST_CASE("normal forms") {
  auto r = PolyRing::standard({"x", "y"});
  auto f1 = FreeModule::make(r, 1);
  CHECK(normal_form(ModuleElement::of(f1, P("x^2", r)), I(r, {"x"})).is_zero());
  CHECK(normal_form(ModuleElement::of(f1, P("x+y", r)), I(r, {"x-y"}))[0] == P("2*y", r));
  Submodule j = groebner(I(r, {"x^2-y", "x*y-1"}));
  for (const auto& g : j.gb()) CHECK(normal_form(g, j).is_zero());
  auto reduced = ModuleElement::of(f1, P("1/3*y^2+5/2*y", r));
  CHECK(normal_form(reduced, I(r, {"x"})) == reduced);
  auto v = ModuleElement::of(f1, P("2/3*x^2+1/7*y", r));
  auto nv = normal_form(v, I(r, {"x^2-y"}));
  CHECK(nv[0] == P("17/21*y", r));
  CHECK(normal_form(nv, I(r, {"x^2-y"})) == nv);
}

TEST_CASE("syzygies") {
  auto r = PolyRing::standard({"x", "y", "z"});
  Submodule s = syzygies(std::vector<Polynomial>{P("x", r), P("y", r)});
  REQUIRE(s.generators().size() == 1);
  auto g = s.generators()[0];
  CHECK(((g[0] == P("y", r) && g[1] == P("-x", r)) || (g[0] == P("-y", r) && g[1] == P("x", r))));

  Polynomial f = P("x^2*y^3*z", r);
  std::vector<Polynomial> d{partial(f, 0), partial(f, 1), partial(f, 2)};
  Submodule t = syzygies(d);
  CHECK(t.generators().size() == 2);
  auto f3 = t.module();
  Submodule expected(f3, {ModuleElement(f3, {P("3*x", r), P("-2*y", r), P("0", r)}),
                          ModuleElement(f3, {P("x", r), P("0", r), P("-2*z", r)})});
  CHECK(same_submodule(t, expected));

  Submodule single = syzygies(std::vector<Polynomial>{P("x*y+z^2", r)});
  CHECK(single.is_zero());
}

TEST_CASE("colon, saturation, intersection") {
  auto r = PolyRing::standard({"x", "y", "z"});
  CHECK(same_submodule(colon(I(r, {"x^2", "x*y"}), P("x", r)), I(r, {"x", "y"})));
  CHECK(same_submodule(colon(I(r, {"x^2", "x*y"}), P("1", r)), I(r, {"x^2", "x*y"})));
  CHECK(same_submodule(colon(I(r, {"x"}), P("y", r)), I(r, {"x"})));
  CHECK(same_submodule(colon(I(r, {"x^2", "x*y"}), P("x+y", r)), I(r, {"x"})));

  Submodule m = I(r, {"x", "y"});
  CHECK(same_submodule(saturate(I(r, {"x^2", "x*y"}), m), I(r, {"x"})));
  CHECK(same_submodule(saturate_by_colon_iteration(I(r, {"x^2", "x*y"}), m), I(r, {"x"})));
  CHECK(saturate(I(r, {"x", "y"}), I(r, {"x", "y"})).is_unit());
  CHECK(saturate(I(r, {"x^2", "y^3", "z", "x*y"}), I(r, {"x", "y", "z"})).is_unit());
  CHECK(same_submodule(saturate(I(r, {"x*y-z^2"}), P("x", r)), I(r, {"x*y-z^2"})));
  CHECK(same_submodule(saturate(I(r, {"x^2*y", "x*z"}), P("x+1", r)), I(r, {"x^2*y", "x*z"})));

  Submodule a = I(r, {"x", "y"}), b = I(r, {"y", "z"});
  CHECK(same_submodule(intersect(a, b), I(r, {"y", "x*z"})));
}

TEST_CASE("saturation properties") {
  auto r = PolyRing::standard({"x", "y", "z"});
  Submodule i = I(r, {"x^3*y", "x^2*y^2*z", "y^4"});
  Submodule m = I(r, {"x", "y", "z"});
  Submodule s = saturate(i, m);
  CHECK(is_subset(i, s));
  CHECK(same_submodule(saturate(s, m), s));
  CHECK(same_submodule(s, saturate_by_colon_iteration(i, m)));
}

TEST_CASE("krull dimension") {
  auto r = PolyRing::standard({"x", "y", "z"});
  CHECK(krull_dimension(I(r, {"x", "y"})) == 1);
  CHECK(krull_dimension(I(r, {"x", "1+x"})) == -1);
  auto r2 = PolyRing::standard({"x", "y"});
  CHECK(krull_dimension(I(r2, {"x*y"})) == 1);
  CHECK(krull_dimension(I(r, {"x*y-z^2", "x^3-y*z"})) == 1);
}

TEST_CASE("GB determinism under generator permutation") {
  auto r = PolyRing::standard({"x", "y", "z", "w"});
  std::vector<Polynomial> g{P("x^2*y-z^3", r), P("x*w-y*z+w^2", r), P("y^3-x*z*w", r), P("x*y*z-w^3", r)};
  std::string ref;
  std::mt19937 rng(5);
  for (int k = 0; k < 6; ++k) {
    std::shuffle(g.begin(), g.end(), rng);
    std::vector<Polynomial> scaled;
    for (std::size_t i = 0; i < g.size(); ++i) scaled.push_back(Rational(long(i) + 1, 3) * g[i]);
    std::string s;
    for (const auto& e : groebner(Submodule::ideal(r, scaled)).gb()) s += e.to_string() + ";";
    if (k == 0) ref = s;
    CHECK(s == ref);
  }
}

TEST_CASE("budget exhaustion is explicit") {
  auto r = PolyRing::standard({"x", "y", "z", "w"});
  Budget b;
  b.max_pairs = 1;
  CHECK_THROWS_AS(groebner(I(r, {"x^2*y-z^3", "x*w-y*z+w^2", "y^3-x*z*w"}), b), BudgetExhausted);
}

TEST_CASE("module GB with shifts and minimal generators") {
  auto r = PolyRing::standard({"x", "y"});
  auto f = FreeModule::make(r, 2, {0, 1});
  Submodule m(f, {ModuleElement(f, {P("x^2", r), P("y", r)}), ModuleElement(f, {P("x*y", r), P("0", r)}),
                  ModuleElement(f, {P("x^3*y", r), P("x*y^2", r)})});
  Submodule g = groebner(m);
  REQUIRE(g.has_min_generators());
  CHECK(g.min_generators().size() == 2);
  for (const auto& v : m.generators()) CHECK(contains(g, v));
}
