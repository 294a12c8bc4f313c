#pragma once

#include "json.hpp"
#include "logdiv/hilbert.hpp"
#include "logdiv/logder.hpp"

namespace logdiv {

/// (f_1, ..., f_n) with its Groebner basis.
Submodule jacobian_ideal(const Polynomial& f, const Budget& budget = {});

/// H^0_m(R/Jac f) = (Jac f : m^inf) / Jac f.
struct JacobianModule {
  Submodule jacobian;
  Submodule saturation;
  HilbertSeries series;
};

/// Standard grading only. Checks that the series is a polynomial with
/// nonnegative coefficients and equals HS(R/Jac) - HS(R/sat) termwise.
JacobianModule jacobian_module(const Polynomial& f, const Budget& budget = {});

/// No repeated factor: dim V(f, Jac f) <= n - 2.
bool is_squarefree(const Polynomial& f, const Budget& budget = {});

struct JacobianModuleReport {
  Polynomial f;
  long d = 0;
  int n = 0;
  HilbertSeries series;
  /// (k, degree d - n + k, dimension) for k = 1..d.
  std::vector<std::tuple<long, long, Integer>> window;
  bool reduced = false;
  bool isolated = false;
  std::vector<std::string> warnings;

  nlohmann::json to_json() const;
};

JacobianModuleReport milnor_window_report(const Polynomial& f, const Budget& budget = {});
/// h(t) = h(3d - 6 - t) for the Hilbert function of H^0_m(R_3/Jac f).
Certificate gorenstein_symmetry_check(const Polynomial& f, const Budget& budget = {});

/// "T^8+4T^9+..." series as [[degree, dim], ...].
nlohmann::json series_json(const HilbertSeries& h);

}  // namespace logdiv
