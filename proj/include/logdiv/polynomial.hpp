#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logdiv/monomial.hpp"
#include "logdiv/rational.hpp"

namespace logdiv {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Polynomial ring Q[x_1..x_n] with a positive grading and a monomial order.
class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> names, std::vector<int> weights = {},
                      OrderKind kind = OrderKind::GRevLex, int elim_block = 0);
  /// Standard-graded grevlex ring in the given variables.
  static RingPtr standard(std::vector<std::string> names) { return make(std::move(names)); }

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  OrderKind order_kind() const { return order_.kind(); }

  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;
  long degree(const Monomial& m) const { return weighted_degree(m, weights_); }
  bool standard_graded() const;

  /// Same variables and weights, different order.
  RingPtr with_order(OrderKind kind, int elim_block = 0) const;
  /// Stable textual identity used for hashing and equality.
  std::string signature() const;

  friend bool same_ring(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_ && a.order_ == b.order_;
  }

 private:
  PolyRing() = default;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Exact multivariate polynomial over Q. Terms are kept strictly decreasing
/// in the ring order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Takes arbitrary terms; sorts and merges them.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = Rational(1));

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Rational& lead_coeff() const { return terms_.front().coeff; }
  Rational coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Highest weighted degree of a term (requires nonzero).
  long degree() const;
  /// Smallest weighted degree of a term (requires nonzero).
  long low_degree() const;
  bool is_homogeneous() const;
  /// Common weighted degree of all terms; nullopt when inhomogeneous or zero.
  std::optional<long> weighted_degree() const;
  /// Homogeneity with respect to explicit weights (possibly zero or negative).
  std::optional<long> weighted_degree(std::span<const int> weights) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Divides by the content so that coefficients are coprime integers with a
  /// positive leading coefficient.
  Polynomial primitive() const;
  /// Scales to leading coefficient 1.
  Polynomial monic() const;
  /// Re-expresses the polynomial in `target`, sending variable i to
  /// variable var_map[i] of the target ring.
  Polynomial map_to(const RingPtr& target, std::span<const int> var_map) const;
  /// Same variables, possibly different order on `target`.
  Polynomial in_ring(const RingPtr& target) const;

  /// Canonical text: terms in ring order, explicit '*', '^', coefficients p/q.
  std::string to_string() const;

 private:
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial partial(const Polynomial& f, int i);
/// Sum of w_i x_i d_i(f).
Polynomial euler_operator(const Polynomial& f);
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Exact division f / g; throws InputError if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);
/// Multivariate division with remainder by a single polynomial.
std::pair<Polynomial, Polynomial> divide(const Polynomial& f, const Polynomial& g);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace logdiv
