#include <random>

#include "doctest.h"
#include "logdiv/error.hpp"
#include "logdiv/liouville_check.hpp"

using namespace logdiv;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

bool all_zero(const SparseQMatrix& m) { return m.is_zero(); }

SparseQMatrix add(const SparseQMatrix& a, const SparseQMatrix& b) {
  SparseQMatrix s(a.rows(), a.cols());
  for (long r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) s.add(r, c, v);
    for (const auto& [c, v] : b.row(r)) s.add(r, c, v);
  }
  return s;
}

}  // namespace

TEST_CASE("window modules") {
  auto r = PolyRing::standard({"x", "y"});
  auto f = P("x^2*y", r);
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 2; ++b) CHECK(lc_module_basis(f, 0, a, b).vectors.empty());
  // lowest piece of C^1: x-degree 1 coefficients, spanned by f_red df / f
  CHECK(lc_module_basis(f, 1, 1, 0).vectors.empty());
  auto low = lc_module_basis(f, 1, 2, 0);
  REQUIRE(low.vectors.size() == 1);
  auto s = low.to_strings({"x", "y"})[0];
  CHECK((s == "x dy + 2*y dx" || s == "2*y dx + x dy" || s == "-x dy - 2*y dx" || s == "-2*y dx - x dy"));
  // free over R[y]: dimension of C^1_(a,b) = dim R_(a-2) * dim k[y]_b
  CHECK(lc_module_basis(f, 1, 4, 2).vectors.size() == 3 * 3);
  auto line = PolyRing::standard({"x"});
  CHECK(FormSpace(1, 2, 3, 1).size() == 0);
  CHECK(lc_module_basis(P("x", line), 1, 1, 0).vectors.size() == 1);
}

TEST_CASE("window maps form a double complex") {
  auto r = PolyRing::standard({"x", "y", "z"});
  auto f = P("x*y*z*(x+y+z)", r);
  long d = 4;
  for (int i = 0; i + 2 <= 3; ++i)
    for (long a = i; a <= i + 2; ++a)
      for (long b = 0; b <= 1; ++b) {
        FormSpace v0(3, i, a, b), v1df(3, i + 1, a + d, b), v1y(3, i + 1, a + 1, b + 1);
        FormSpace v2dfdf(3, i + 2, a + 2 * d, b), v2yy(3, i + 2, a + 2, b + 2), v2mix(3, i + 2, a + d + 1, b + 1);
        CHECK(all_zero(lc_df_matrix(f, v1df, v2dfdf) * lc_df_matrix(f, v0, v1df)));
        CHECK(all_zero(lc_ydx_matrix(v1y, v2yy) * lc_ydx_matrix(v0, v1y)));
        auto a1 = lc_df_matrix(f, v1y, v2mix) * lc_ydx_matrix(v0, v1y);
        auto a2 = lc_ydx_matrix(v1df, v2mix) * lc_df_matrix(f, v0, v1df);
        CHECK(all_zero(add(a1, a2)));
      }
}

TEST_CASE("cohomology: xy") {
  auto r = PolyRing::standard({"x", "y"});
  auto t = lc_cohomology(P("x*y", r));
  CHECK(t.intermediate_vanish);
  CHECK(t.terminal_match);
  CHECK_FALSE(t.terminal.empty());
  for (const auto& e : t.entries)
    if (e.position == 1) CHECK(e.h == 0);
}

TEST_CASE("cohomology: normal crossing monomial") {
  auto r = PolyRing::standard({"x", "y", "z"});
  auto t = lc_cohomology(P("x^2*y^3*z", r), {8, 2});
  CHECK(t.intermediate_vanish);
  CHECK(t.terminal_match);
  // L_f is the complete intersection (y Y_y - 3 z Y_z, x Y_x - 2 z Y_z):
  // bigraded Hilbert function of a CI of two (1,1) forms in 6 variables
  auto binom = [](long n, long k) {
    if (k < 0 || n < k) return 0L;
    long c = 1;
    for (long j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return c;
  };
  auto h = [&](long p, long b) {
    auto dim = [&](long pp, long bb) { return pp < 0 || bb < 0 ? 0 : binom(pp + 2, 2) * binom(bb + 2, 2); };
    return dim(p, b) - 2 * dim(p - 1, b - 1) + dim(p - 2, b - 2);
  };
  for (const auto& e : t.terminal) CHECK(e.expected == h(e.a - 3, e.b));
}

TEST_CASE("cohomology: four generic planes") {
  auto r = PolyRing::standard({"x", "y", "z"});
  auto t = lc_cohomology(P("x*y*z*(x+y+z)", r), {-1, 2});
  CHECK(t.intermediate_vanish);
  CHECK(t.terminal_match);
}

TEST_CASE("f and its powers give the same tables") {
  auto r = PolyRing::standard({"x", "y"});
  auto f = P("x*y*(x+y)", r);
  auto t1 = lc_cohomology(f, {7, 2});
  auto t2 = lc_cohomology(f.pow(2), {7, 2});
  REQUIRE(t1.entries.size() == t2.entries.size());
  for (std::size_t k = 0; k < t1.entries.size(); ++k) CHECK(t1.entries[k].h == t2.entries[k].h);
}

TEST_CASE("window hypotheses") {
  auto r = PolyRing::standard({"x", "y"});
  CHECK_THROWS_AS(lc_cohomology(P("x+y^2", r)), HypothesisError);
  CHECK_THROWS_AS(lc_module_basis(P("x*y", r), 1, 40, 3, 100), BudgetExhausted);
}
