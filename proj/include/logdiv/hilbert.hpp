#pragma once

#include <map>
#include <string>
#include <vector>

#include "logdiv/module.hpp"

namespace logdiv {

/// Hilbert series numerator(T) / prod_i (1 - T^{w_i}), numerator an integer
/// Laurent polynomial. Series of the same ring share the denominator, so
/// arithmetic is done on numerators.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  explicit HilbertSeries(std::vector<int> denominator_weights) : den_(std::move(denominator_weights)) {}
  HilbertSeries(std::map<long, Integer> numerator, std::vector<int> denominator_weights);

  const std::map<long, Integer>& numerator() const { return num_; }
  const std::vector<int>& denominator_weights() const { return den_; }

  /// Numerator and exponent e after cancelling factors (1 - T) when every
  /// denominator weight is 1; otherwise the raw data with e = #weights.
  std::pair<std::map<long, Integer>, int> reduced() const;
  /// True when the series is a Laurent polynomial (finite length module).
  bool is_polynomial() const { return reduced().second == 0; }
  /// Coefficient of T^k in the power series expansion.
  Integer coefficient(long k) const;

  HilbertSeries& operator+=(const HilbertSeries& o);
  HilbertSeries& operator-=(const HilbertSeries& o);
  friend HilbertSeries operator+(HilbertSeries a, const HilbertSeries& b) { return a += b; }
  friend HilbertSeries operator-(HilbertSeries a, const HilbertSeries& b) { return a -= b; }
  HilbertSeries shifted(long k) const;
  HilbertSeries scaled(long c) const;
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);

  /// "T^8+4T^9+T^10" style; rational series get "/(1-T)^e".
  std::string to_string() const;

 private:
  void prune();
  std::map<long, Integer> num_;
  std::vector<int> den_;
};

/// Numerator of R/(monomials) over prod (1 - T^{w_i}).
std::map<long, Integer> monomial_ideal_numerator(std::vector<Monomial> gens, const std::vector<int>& weights);

HilbertSeries hilbert_series(const FreeModulePtr& f);
/// Series of F/M from the lead terms of a Groebner basis; M homogeneous.
HilbertSeries hilbert_series(const Submodule& m);
/// Series of M itself.
HilbertSeries submodule_series(const Submodule& m);
/// Series of N/M for M contained in N (both in the same free module).
HilbertSeries subquotient_series(const Submodule& n, const Submodule& m);

}  // namespace logdiv
