#pragma once

// Internal Buchberger engine on integer-coefficient module vectors.

#include <chrono>
#include <vector>

#include "logdiv/module.hpp"

namespace logdiv::engine {

struct ITerm {
  Monomial m;
  int comp = 0;
  Integer c;
};

/// Module vector with integer coefficients, terms strictly decreasing in the
/// module order.
struct IVec {
  std::vector<ITerm> t;
  bool empty() const { return t.empty(); }
  const ITerm& lead() const { return t.front(); }
};

class ModOrder {
 public:
  ModOrder(const MonomialOrder& mono, std::vector<long> shift, std::vector<int> block, bool pot)
      : mono_(&mono), shift_(std::move(shift)), block_(std::move(block)), pot_(pot) {}

  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
    auto ua = static_cast<std::size_t>(ca), ub = static_cast<std::size_t>(cb);
    if (block_[ua] != block_[ub]) return block_[ua] < block_[ub] ? 1 : -1;
    if (pot_ && ca != cb) return ca < cb ? 1 : -1;
    int c = mono_->compare(a, b, shift_[ua], shift_[ub]);
    if (c) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int compare(const ITerm& a, const ITerm& b) const { return compare(a.m, a.comp, b.m, b.comp); }

  const MonomialOrder& mono() const { return *mono_; }
  long shift(int c) const { return shift_[static_cast<std::size_t>(c)]; }
  int block(int c) const { return block_[static_cast<std::size_t>(c)]; }
  int rank() const { return static_cast<int>(shift_.size()); }

 private:
  const MonomialOrder* mono_;
  std::vector<long> shift_;
  std::vector<int> block_;
  bool pot_;
};

struct GbInput {
  std::vector<IVec> gens;
  const ModOrder* order = nullptr;
  std::vector<int> weights;  // grading weights (may contain zeros)
  Budget budget;
  bool want_mingens = false;
  bool ideal = false;  // rank one: enables the product criterion
};

struct GbOutput {
  std::vector<IVec> basis;  // reduced, primitive, sorted by increasing lead term
  std::vector<IVec> mingens;
  bool has_mingens = false;
};

GbOutput buchberger(GbInput in);

/// Fully reduces v modulo a basis. Returns r with
/// scale * v = r + (combination of basis).
IVec reduce(const IVec& v, const std::vector<IVec>& basis, const ModOrder& order, Rational* scale);

void sort_terms(IVec& v, const ModOrder& order);
void make_primitive(IVec& v);
long term_degree(const ITerm& t, const std::vector<int>& weights, const ModOrder& order);
bool is_homogeneous(const IVec& v, const std::vector<int>& weights, const ModOrder& order);

// Conversions between the public Rational representation and IVec.
IVec to_ivec(const ModuleElement& v, const ModOrder& order);
ModuleElement to_element(const IVec& v, const FreeModulePtr& module);
ModOrder order_for(const FreeModule& f);

}  // namespace logdiv::engine
