#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace logdiv {

/// Upper bound on ring variables; every targeted computation (including the
/// doubled ring R[x,y] plus one auxiliary elimination variable) fits.
inline constexpr int kMaxVars = 16;

/// Dense exponent vector. Entries past the ring's variable count stay zero,
/// so equality and hashing need no ring context.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  std::uint16_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  std::uint16_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }

  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
long weighted_degree(const Monomial& m, std::span<const int> weights);

/// Bit mask of the variables occurring in m (fast divisibility rejection).
std::uint32_t support_mask(const Monomial& m);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind { GRevLex, Lex, WeightedGRevLex };

/// Monomial order on a fixed number of variables. Optionally an elimination
/// block order: the first `elim_block` variables form a block compared
/// first (by degree, then reverse lexicographically inside the block),
/// the remaining variables are compared afterwards with the base order.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<int> weights, int elim_block = 0);

  OrderKind kind() const { return kind_; }
  int nvars() const { return static_cast<int>(weights_.size()); }
  int elim_block() const { return elim_block_; }
  const std::vector<int>& degree_weights() const { return weights_; }
  bool degree_compatible() const { return kind_ != OrderKind::Lex && elim_block_ == 0; }

  /// Three-way comparison; `shift_a`/`shift_b` are added to the degree of the
  /// (second) block and model graded free-module twists.
  int compare(const Monomial& a, const Monomial& b, long shift_a = 0, long shift_b = 0) const;

  long degree(const Monomial& m) const { return weighted_degree(m, weights_); }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  int compare_range(const Monomial& a, const Monomial& b, int lo, int hi, long sa, long sb) const;

  OrderKind kind_ = OrderKind::GRevLex;
  std::vector<int> weights_;
  int elim_block_ = 0;
};

}  // namespace logdiv
