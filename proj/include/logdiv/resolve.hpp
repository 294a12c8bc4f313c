#pragma once

#include <map>
#include <string>
#include <vector>

#include "logdiv/hilbert.hpp"
#include "logdiv/module.hpp"

namespace logdiv {

/// What a resolution resolves: the quotient F/M or the submodule M itself.
enum class Resolved { Quotient, Submodule };

/// Graded free complex ... -> F_2 -> F_1 -> F_0, stored with the ambient
/// free module at index 0: maps[i] lists the images of the basis of
/// modules[i+1] in modules[i]. For Resolved::Submodule, maps[0] is the
/// augmentation onto the generators of M and modules[0] is not part of
/// the resolution.
struct GradedResolution {
  Resolved kind = Resolved::Quotient;
  std::vector<FreeModulePtr> modules;
  std::vector<std::vector<ModuleElement>> maps;
  Submodule resolved;
  /// False when the homological cutoff was reached with a nonzero module
  /// still to resolve.
  bool complete = true;

  /// Free modules of the resolution proper (F_0, F_1, ...).
  std::vector<FreeModulePtr> free_modules() const;
  /// Number of nonzero free modules minus one.
  int length() const;
};

struct ResolutionOptions {
  Budget budget;
  /// Maximal homological index computed; negative means the number of
  /// variables (enough by the syzygy theorem).
  int max_length = -1;
  /// Start from the reduced Groebner basis instead of minimal generators,
  /// then minimize. Slower; used to exercise the minimization.
  bool schreyer_from_gb = false;
};

GradedResolution free_resolution(const Submodule& m, Resolved kind, const ResolutionOptions& opt = {});
/// Cancels unit entries (degree-preserving Gaussian elimination).
GradedResolution minimize(GradedResolution res);

using BettiTable = std::map<std::pair<int, long>, long>;
BettiTable betti_table(const GradedResolution& res);
std::vector<long> betti_ranks(const GradedResolution& res);
int pdim(const GradedResolution& res);
/// {"betti": [[i, j, count], ...], "pdim": p}
std::string betti_json(const GradedResolution& res);

/// d o d = 0 at every step.
bool is_complex(const GradedResolution& res);
/// Alternating sum of the free modules' series equals `expected`, and at
/// every step HS(F_i) = HS(im d_i) + HS(im d_{i+1}) (which together with
/// d o d = 0 forces exactness).
bool euler_characteristic_check(const GradedResolution& res, const HilbertSeries& expected);
/// Independent series of the resolved module.
HilbertSeries resolved_series(const GradedResolution& res);

}  // namespace logdiv
