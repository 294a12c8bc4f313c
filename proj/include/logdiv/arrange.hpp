#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "logdiv/linalg.hpp"
#include "logdiv/logder.hpp"

namespace logdiv {

using QRow = std::vector<Rational>;

struct Hyperplane {
  QRow normal;
  int multiplicity = 1;
};

/// Central arrangement: linear forms with multiplicities, normals pairwise
/// non-proportional.
class Arrangement {
 public:
  Arrangement() = default;
  /// Merges proportional normals (summing multiplicities, with a warning);
  /// rejects zero normals and wrong lengths.
  Arrangement(int n, std::vector<Hyperplane> hyperplanes);

  int dim() const { return n_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hs_; }
  int size() const { return static_cast<int>(hs_.size()); }
  long degree() const;
  int rank() const;
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Default variable names x, y, z, w for n <= 4, else x0, x1, ...
  RingPtr default_ring() const;
  Polynomial linear_form(int i, const RingPtr& ring) const;
  /// prod L_i^{m_i}
  Polynomial polynomial(const RingPtr& ring) const;
  Polynomial polynomial() const { return polynomial(default_ring()); }

 private:
  int n_ = 0;
  std::vector<Hyperplane> hs_;
  std::vector<std::string> warnings_;
};

/// Line-oriented format: header "vars n", then "c_1 ... c_n : m" per
/// hyperplane (": m" optional), '#' comments.
Arrangement parse_arrangement(const std::string& text);
/// Linear factors with multiplicities from a product of linear forms.
Arrangement arrangement_from_forms(const std::vector<Polynomial>& forms, const std::vector<int>& mult = {});

struct Flat {
  std::vector<int> hyperplanes;
  int rank = 0;
  long N = 0;
  /// RREF rows spanning the normals.
  QMatrix normal_span;
};

struct IntersectionLattice {
  std::vector<Flat> flats;  // sorted by rank, then hyperplane set
  std::vector<std::pair<int, int>> covers;  // (lower, upper) indices
  std::vector<long> mobius;  // mu(bottom, W)

  int index_of(const std::vector<int>& hyperplanes) const;
  nlohmann::json to_json() const;
};

IntersectionLattice intersection_lattice(const Arrangement& a);
/// Hyperplanes through W, written in coordinates of a basis of W's normal
/// span (so the result is essential of rank r_W).
Arrangement full_subarrangement(const Arrangement& a, const Flat& w);
Arrangement essentialize(const Arrangement& a);

/// Degree-zero derivations x^T B d killing f_A (after essentialization);
/// indecomposable iff none. Witness derivation when decomposable.
Certificate is_indecomposable(const Arrangement& a);
/// Der(-log_0 f_A) has no elements of degree <= 0; predicts -rank/d.
/// Inconclusive with "applicable": false for decomposable input.
Certificate nd_check(const Arrangement& a);

struct NdCandidate {
  Rational value;
  std::vector<std::vector<int>> flats;
};
/// -r_W / N_W over flats with indecomposable localization, grouped by
/// value, ascending.
std::vector<NdCandidate> nd_candidates(const Arrangement& a);
nlohmann::json to_json(const std::vector<NdCandidate>& c);

/// Rational function in s with denominator prod (a s + b)^e, (a, b) coprime
/// integers with a > 0.
class ZetaFunction {
 public:
  using Factor = std::pair<long, long>;
  /// Adds c / prod factors; factors need not be primitive.
  void add_term(const Rational& c, const std::vector<Factor>& factors);
  /// Brings everything over the common denominator and cancels.
  void normalize();

  const QRow& numerator() const { return num_; }
  const std::map<Factor, int>& denominator() const { return den_; }
  Rational evaluate(const Rational& s) const;
  long numerator_degree() const { return static_cast<long>(num_.size()) - 1; }
  long denominator_degree() const;
  /// Poles -b/a with their orders.
  std::vector<std::pair<Rational, int>> poles() const;

  /// "(2-s)/((s+1)(3s+2))"
  std::string to_string() const;
  nlohmann::json to_json() const;
  friend bool operator==(const ZetaFunction& a, const ZetaFunction& b);

 private:
  std::vector<std::pair<Rational, std::vector<Factor>>> terms_;
  QRow num_;
  std::map<Factor, int> den_;
};

enum class ZetaModel { Minimal, BlowUpOrigin };
/// Topological zeta function for central arrangements of rank <= 3.
/// Minimal skips the blow-up of the origin for normal crossing (Boolean)
/// arrangements; both models must agree.
ZetaFunction zeta_topological(const Arrangement& a, ZetaModel model = ZetaModel::Minimal);

struct PoleReport {
  ZetaFunction zeta;
  struct Pole {
    Rational value;
    int order;
    std::vector<std::vector<int>> matching_flats;
  };
  std::vector<Pole> poles;
  bool all_matched = true;
  nlohmann::json to_json() const;
};
PoleReport zeta_pole_analysis(const Arrangement& a);

/// Linear subspace of the ambient space as RREF rows.
struct Subspace {
  QMatrix rows;
  int dim() const { return static_cast<int>(rows.rows()); }
  std::string key() const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.key() == b.key(); }
};
Subspace span_of(const std::vector<QRow>& vectors, int n);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
/// Flat W as a subspace of the ambient space (common zeros of its forms).
Subspace flat_subspace(const Arrangement& a, const Flat& w);

struct SyzygeticElement {
  Subspace space;
  std::vector<Subspace> witness;
  int level = 0;
};

struct SyzygeticOptions {
  int max_rounds = 4;
  long max_elements = 5000;
  /// Seed the iteration with the flats of rank >= 2 whose localization is
  /// not normal crossing instead of the whole lattice.
  bool seed_dependent_flats = true;
};

struct SyzygeticLattice {
  std::vector<std::vector<Subspace>> levels;
  std::vector<SyzygeticElement> syzygetic;
  bool capped = false;
  nlohmann::json to_json() const;
  bool contains_syzygetic(const Subspace& v) const;
};
SyzygeticLattice syzygetic_lattice(const Arrangement& a, const SyzygeticOptions& opt = {});

/// Nine-line arrangements: the degenerate instance (six triple
/// points on the quadric q) and a generic one with P6 moved off q.
Arrangement ziegler_degenerate();
Arrangement ziegler_generic();
/// The six triple points P1..P6 of a ziegler instance, in order.
std::vector<QRow> ziegler_points(const Arrangement& a);
Polynomial ziegler_quadric(const RingPtr& ring);

/// For each of the 60 hexagons on six points (starting at the first, up to
/// reversal): the three intersections of opposite sides.
struct Hexagon {
  std::array<int, 6> order;
  std::array<Subspace, 3> points;
};
std::vector<Hexagon> hexagon_opposite_points(const std::vector<QRow>& six);

}  // namespace logdiv
