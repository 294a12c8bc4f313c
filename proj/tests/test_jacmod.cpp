#include "doctest.h"
#include "logdiv/arrange.hpp"
#include "logdiv/error.hpp"
#include "logdiv/groebner.hpp"
#include "logdiv/jacmod.hpp"

using namespace logdiv;

namespace {

RingPtr xyz() { return PolyRing::standard({"x", "y", "z"}); }
Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

const char* kDegenerate = "(2*x+y+z)*(x+y+z)*(2*x+3*y+4*z)*z*(x+3*z)*y*(2*x+3*y+z)*x*(x+2*y+3*z)";

Rational q_at(const QRow& p) {
  return 2 * p[0] * p[0] + 3 * p[0] * p[1] + 7 * p[0] * p[2] + 3 * p[1] * p[2] + 3 * p[2] * p[2];
}

}  // namespace

TEST_CASE("degenerate forms: six triple points on q") {
  auto a = ziegler_degenerate();
  CHECK(a.polynomial(xyz()) == P(kDegenerate, xyz()));
  for (const auto& p : ziegler_points(a)) CHECK(q_at(p).is_zero());
  // the cubic c lies in no line's ideal; it is a genuine cubic
  auto c = P("20*x^3+68*x^2*y+73*x*y^2+24*y^3+60*x^2*z+130*x*y*z+65*y^2*z+51*x*z^2+54*y*z^2+13*z^3", xyz());
  CHECK(c.degree() == 3);
}

TEST_CASE("generic instance: P6 off q, same incidence shape") {
  auto a = ziegler_generic();
  auto pts = ziegler_points(a);
  for (int i = 0; i < 5; ++i) CHECK(q_at(pts[static_cast<std::size_t>(i)]).is_zero());
  CHECK_FALSE(q_at(pts[5]).is_zero());
  int triples = 0;
  for (const auto& w : intersection_lattice(a).flats) {
    if (w.rank != 2) continue;
    CHECK(w.hyperplanes.size() <= 3);
    triples += w.hyperplanes.size() == 3;
  }
  CHECK(triples == 6);
}

TEST_CASE("jacobian module of the degenerate nine-line arrangement") {
  auto f = ziegler_degenerate().polynomial(xyz());
  auto r = milnor_window_report(f);
  CHECK(r.series.to_string() == "T^8+4T^9+6T^10+6T^11+4T^12+T^13");
  CHECK(r.reduced);
  bool found = false;
  for (const auto& [k, deg, dim] : r.window)
    if (deg == 8) {
      found = true;
      CHECK(k == 2);
      CHECK(dim == 1);
    }
  CHECK(found);
  CHECK(gorenstein_symmetry_check(f).verdict == Verdict::Holds);
}

TEST_CASE("jacobian module of the generic nine-line arrangement") {
  auto f = ziegler_generic().polynomial(xyz());
  auto m = jacobian_module(f);
  CHECK(m.series.to_string() == "4T^9+6T^10+6T^11+4T^12");
  CHECK(m.series.coefficient(8) == 0);
  CHECK(gorenstein_symmetry_check(f).verdict == Verdict::Holds);
}

TEST_CASE("isolated singularities: the whole Milnor algebra") {
  auto m = jacobian_module(P("x^2+y^2+z^2", xyz()));
  CHECK(m.series.to_string() == "1");
  CHECK(jacobian_module(P("x^3+y^3+z^3", xyz())).series.to_string() == "1+3T+3T^2+T^3");
  auto cusp = jacobian_module(P("x^3+y^2*z", xyz()));
  CHECK(cusp.series.is_polynomial());
  CHECK_THROWS_AS(gorenstein_symmetry_check(P("x^3+y^3+z^3", xyz())), HypothesisError);
}

TEST_CASE("jacobian ideal basics") {
  auto r = PolyRing::standard({"x", "y"});
  auto j = jacobian_ideal(P("x^2+y^2", r));
  CHECK(same_submodule(j, Submodule::ideal(r, {P("x", r), P("y", r)})));
  auto f = P("x*y*(x+y)*z", xyz());
  CHECK(jacobian_module(f).series.to_string() == jacobian_module(Rational(5) * f).series.to_string());
  CHECK(is_squarefree(f));
  CHECK_FALSE(is_squarefree(P("x^2*y", xyz())));
}
