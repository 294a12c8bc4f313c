#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "logdiv/module.hpp"
#include "logdiv/resolve.hpp"

namespace logdiv {

/// Vector field sum_i a_i d_i.
struct Derivation {
  RingPtr ring;
  std::vector<Polynomial> coeffs;

  Polynomial apply(const Polynomial& g) const;
  /// deg a_i - w_i when this is the same for every nonzero coefficient.
  std::optional<long> degree() const;
  bool is_zero() const;
  std::string to_string() const;
};

/// The weighted Euler field sum_i w_i x_i d_i.
Derivation euler_field(const RingPtr& ring);

/// A diagonal field sum_i v_i x_i d_i with E(f) = f, when f is
/// quasi-homogeneous for some rational (possibly zero) weights v.
std::optional<Derivation> diagonal_euler_field(const Polynomial& f);

enum class LogFlavor { Log, Log0 };

struct LogDerModule {
  Polynomial f;
  LogFlavor flavor = LogFlavor::Log0;
  std::vector<Derivation> generators;
  /// The same generators as a graded submodule of R^n; basis vector i has
  /// shift -w_i so that element degrees are derivation degrees.
  Submodule module;
};

/// {delta : delta(f) = 0}, minimal generators when f is weighted homogeneous.
LogDerModule der_log0(const Polynomial& f, const Budget& budget = {});
/// {delta : delta(f) in (f)}. When f has a diagonal Euler field the
/// generators are those of der_log0 followed by that field.
LogDerModule der_log(const Polynomial& f, const Budget& budget = {});

/// Numerators of f * Omega^i(log f): {eta in R^C(n,i) : df ^ eta = 0 mod f}.
/// Basis forms dx_J are ordered lexicographically by index set, shift w(J).
Submodule omega_log(const Polynomial& f, int i, const Budget& budget = {});
/// {eta in R^C(n,i) : df ^ eta = 0}, the forms of Omega^i(log_0 f) times f.
Submodule omega_log0(const Polynomial& f, int i, const Budget& budget = {});
/// E-contractions of omega_log0(f, i + 1): the complement of
/// omega_log0(f, i) in omega_log(f, i) for weighted homogeneous f, and
/// isomorphic to omega_log0(f, i + 1).
Submodule omega_log_e(const Polynomial& f, int i, const Budget& budget = {});
/// Index sets of size i in lexicographic order, as used by omega_log.
std::vector<std::vector<int>> form_basis(int n, int i);

enum class Verdict { Holds, Fails, Inconclusive };
std::string to_string(Verdict v);

struct Certificate {
  std::string property;
  Verdict verdict = Verdict::Inconclusive;
  nlohmann::json witness = nlohmann::json::object();
  nlohmann::json budget = nlohmann::json::object();

  nlohmann::json to_json() const;
};

nlohmann::json budget_json(const Budget& b);

/// pdim Omega^i(log f) <= i for i = 1..n-1; graded method, so f must be
/// weighted homogeneous (inconclusive otherwise).
Certificate tameness(const Polynomial& f, const Budget& budget = {});
/// Der(-log f) free; witness includes the Saito determinant.
Certificate freeness(const Polynomial& f, const Budget& budget = {});
/// Jac(f) : f; its zero set is where f is not Euler-homogeneous.
Submodule euler_locus(const Polynomial& f, const Budget& budget = {});
Certificate strong_euler_at(const Polynomial& f, const std::vector<Rational>& point,
                            const Budget& budget = {});
/// Rank-<=k loci of the coefficient matrix of Der(-log f) have dimension <= k.
Certificate holonomicity(const Polynomial& f, const Budget& budget = {});

/// Ideal in R[x, Y] (Y_i the symbol of d_i).
struct LiouvilleIdeal {
  Polynomial f;
  RingPtr ring;
  Submodule ideal;
  bool tilde = false;
  /// Index of Y_1 in `ring`; x variables come first.
  int y_offset = 0;
  /// (x-degree, Y-degree) of each generator.
  std::vector<std::pair<long, long>> bidegrees;
};

/// Doubled ring: the variables of `ring` followed by one symbol variable per
/// variable. Symbol i gets weight max(w) + 1 - w_i, so that symbols of
/// homogeneous derivations are homogeneous.
RingPtr doubled_ring(const RingPtr& ring);
LiouvilleIdeal liouville_ideal(const Polynomial& f, const Budget& budget = {});
/// L_f plus the symbol of a diagonal Euler field.
LiouvilleIdeal tilde_liouville(const Polynomial& f, const Budget& budget = {});
/// Whether R[x,Y]/L is Cohen-Macaulay of the expected dimension (n + 1,
/// or n for the tilde ideal). A dimension mismatch fails outright;
/// otherwise CM iff pdim = codim, with the graded resolution cut off one
/// step past the codimension.
Certificate liouville_dimension_cm(const LiouvilleIdeal& l, const Budget& budget = {});
Certificate liouville_dimension_cm(const Polynomial& f, const Budget& budget = {});

/// Tame, Saito-holonomic and strongly Euler-homogeneous at the origin
/// (the only zero-dimensional stratum candidate for weighted homogeneous f).
Certificate order_one_generation_certificate(const Polynomial& f, const Budget& budget = {});

/// Determinant of a square polynomial matrix (Laplace expansion).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);
/// All k x k minors.
std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& m, int k);

}  // namespace logdiv
