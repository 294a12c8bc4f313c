#include "logdiv/jacmod.hpp"

#include "logdiv/error.hpp"
#include "logdiv/groebner.hpp"

namespace logdiv {

using nlohmann::json;

Submodule jacobian_ideal(const Polynomial& f, const Budget& budget) {
  if (f.is_constant()) throw InputError("expected a nonconstant polynomial");
  std::vector<Polynomial> g;
  for (int i = 0; i < f.ring()->nvars(); ++i) g.push_back(partial(f, i));
  return groebner(Submodule::ideal(f.ring(), g), budget);
}

JacobianModule jacobian_module(const Polynomial& f, const Budget& budget) {
  if (!f.ring()->standard_graded()) throw HypothesisError("the Jacobian module needs the standard grading");
  if (!f.weighted_degree()) throw HypothesisError("the Jacobian module needs a homogeneous f");
  JacobianModule j;
  j.jacobian = jacobian_ideal(f, budget);
  std::vector<Polynomial> m;
  for (int i = 0; i < f.ring()->nvars(); ++i) m.push_back(Polynomial::variable(f.ring(), i));
  j.saturation = groebner(saturate(j.jacobian, Submodule::ideal(f.ring(), m), budget), budget);
  if (!is_subset(j.jacobian, j.saturation)) throw std::logic_error("saturation does not contain the ideal");
  HilbertSeries quotient = hilbert_series(j.jacobian), saturated = hilbert_series(j.saturation);
  j.series = subquotient_series(j.saturation, j.jacobian);
  if (!(j.series == quotient - saturated)) throw std::logic_error("Hilbert series difference identity failed");
  if (!j.series.is_polynomial()) throw std::logic_error("Jacobian module is not of finite length");
  for (const auto& [k, v] : j.series.reduced().first)
    if (v < 0) throw std::logic_error("negative Hilbert function value");
  return j;
}

bool is_squarefree(const Polynomial& f, const Budget& budget) {
  if (f.is_constant()) return true;
  std::vector<Polynomial> g{f};
  for (int i = 0; i < f.ring()->nvars(); ++i) g.push_back(partial(f, i));
  return krull_dimension(Submodule::ideal(f.ring(), g), budget) <= f.ring()->nvars() - 2;
}

json series_json(const HilbertSeries& h) {
  json out = json::array();
  auto [num, e] = h.reduced();
  if (e != 0) throw std::logic_error("series is not a polynomial");
  for (const auto& [k, v] : num) out.push_back({k, v.get_str()});
  return out;
}

json JacobianModuleReport::to_json() const {
  json w = json::array();
  for (const auto& [k, deg, dim] : window) w.push_back({k, deg, dim.get_str()});
  return json{{"f", f.to_string()},
              {"d", d},
              {"n", n},
              {"series", series_json(series)},
              {"series_text", series.to_string()},
              {"window", w},
              {"flags", {{"reduced", reduced}, {"isolated_projective_singularities", isolated}}},
              {"warnings", warnings},
              {"annotation", "dim [H^0_m(R/Jac f)]_{d-n+k} bounds the lambda = exp(2 pi i k/d) part of the Milnor fiber cohomology"}};
}

JacobianModuleReport milnor_window_report(const Polynomial& f, const Budget& budget) {
  JacobianModuleReport r;
  r.f = f;
  r.n = f.ring()->nvars();
  if (r.n < 2) throw HypothesisError("the Milnor window needs at least two variables");
  auto d = f.weighted_degree();
  if (!d) throw HypothesisError("the Milnor window needs a homogeneous f");
  r.d = *d;
  JacobianModule j = jacobian_module(f, budget);
  r.series = j.series;
  r.reduced = is_squarefree(f, budget);
  r.isolated = krull_dimension(j.jacobian, budget) <= 1;
  if (!r.reduced) r.warnings.push_back("f is not reduced");
  if (!r.isolated) r.warnings.push_back("V(f) has non-isolated singularities in projective space");
  for (long k = 1; k <= r.d; ++k) {
    long deg = r.d - r.n + k;
    r.window.emplace_back(k, deg, r.series.coefficient(deg));
  }
  return r;
}

Certificate gorenstein_symmetry_check(const Polynomial& f, const Budget& budget) {
  Certificate c{"gorenstein-symmetry", Verdict::Inconclusive, json::object(), budget_json(budget)};
  if (f.ring()->nvars() != 3) throw HypothesisError("symmetry check needs n = 3");
  auto d = f.weighted_degree();
  if (!d) throw HypothesisError("symmetry check needs a homogeneous f");
  if (!is_squarefree(f, budget)) throw HypothesisError("symmetry check needs a reduced f");
  JacobianModule j = jacobian_module(f, budget);
  if (krull_dimension(j.jacobian, budget) != 1) throw HypothesisError("symmetry check needs dim Jac(f) = 1");
  long total = 3 * *d - 6;
  c.witness["center_times_two"] = total;
  c.witness["series"] = series_json(j.series);
  c.verdict = Verdict::Holds;
  for (const auto& [t, v] : j.series.reduced().first)
    if (j.series.coefficient(total - t) != v) {
      c.verdict = Verdict::Fails;
      c.witness["asymmetric_degree"] = t;
      break;
    }
  return c;
}

}  // namespace logdiv
