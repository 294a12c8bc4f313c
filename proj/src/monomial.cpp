#include "logdiv/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "logdiv/error.hpp"

namespace logdiv {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    if (s > 0xffffu) throw BudgetExhausted("exponent overflow in monomial product");
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(b[i] - a[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

long weighted_degree(const Monomial& m, std::span<const int> weights) {
  long d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += long(weights[i]) * m.e[i];
  return d;
}

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (m[i]) mask |= 1u << i;
  return mask;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : m.e) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> weights, int elim_block)
    : kind_(kind), weights_(std::move(weights)), elim_block_(elim_block) {
  if (nvars() > kMaxVars) throw InputError("too many variables (max 16)");
  if (elim_block_ < 0 || elim_block_ > nvars()) throw InputError("bad elimination block");
  for (int w : weights_)
    if (w < 0) throw InputError("negative variable weight");
  if (kind_ == OrderKind::GRevLex)
    for (auto& w : weights_) w = 1;
}

int MonomialOrder::compare_range(const Monomial& a, const Monomial& b, int lo, int hi, long sa,
                                 long sb) const {
  if (kind_ == OrderKind::Lex) {
    for (int i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  // The elimination block is graded by plain total degree so that a block
  // variable of grading weight zero still dominates everything after it.
  const bool unit = hi == elim_block_;
  long da = sa, db = sb;
  for (int i = lo; i < hi; ++i) {
    da += (unit ? 1L : long(weights_[i])) * a[i];
    db += (unit ? 1L : long(weights_[i])) * b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, long shift_a, long shift_b) const {
  if (elim_block_ > 0) {
    int c = compare_range(a, b, 0, elim_block_, 0, 0);
    if (c) return c;
  }
  return compare_range(a, b, elim_block_, nvars(), shift_a, shift_b);
}

}  // namespace logdiv
