#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "logdiv/polynomial.hpp"

namespace logdiv {

enum class ModuleOrderKind { TermOverPosition, PositionOverTerm };

class FreeModule;
using FreeModulePtr = std::shared_ptr<const FreeModule>;

/// Graded free module R(-s_1) + ... + R(-s_r): basis element i has degree
/// shifts[i].
class FreeModule {
 public:
  static FreeModulePtr make(RingPtr ring, int rank, std::vector<long> shifts = {},
                            ModuleOrderKind order = ModuleOrderKind::TermOverPosition);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(shifts_.size()); }
  const std::vector<long>& shifts() const { return shifts_; }
  long shift(int i) const { return shifts_[static_cast<std::size_t>(i)]; }
  ModuleOrderKind order() const { return order_; }

  /// Same rank and shifts over another ring (for instance a re-ordered copy).
  FreeModulePtr over(RingPtr ring) const { return make(std::move(ring), rank(), shifts_, order_); }

  friend bool same_module(const FreeModule& a, const FreeModule& b) {
    return same_ring(*a.ring_, *b.ring_) && a.shifts_ == b.shifts_ && a.order_ == b.order_;
  }

 private:
  FreeModule() = default;
  RingPtr ring_;
  std::vector<long> shifts_;
  ModuleOrderKind order_ = ModuleOrderKind::TermOverPosition;
};

/// Element of a free module: one polynomial per basis vector.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(FreeModulePtr module);
  ModuleElement(FreeModulePtr module, std::vector<Polynomial> components);
  static ModuleElement basis(FreeModulePtr module, int i);
  /// Rank-one convenience: wraps a polynomial as an element of R^1.
  static ModuleElement of(FreeModulePtr module, const Polynomial& p);

  const FreeModulePtr& module() const { return module_; }
  const RingPtr& ring() const { return module_->ring(); }
  int rank() const { return static_cast<int>(comps_.size()); }
  const std::vector<Polynomial>& components() const { return comps_; }
  const Polynomial& operator[](int i) const { return comps_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  /// Degree including the basis twists, when every term agrees.
  std::optional<long> degree() const;
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(const Polynomial& p, const ModuleElement& v);
  friend bool operator==(const ModuleElement& a, const ModuleElement& b);

  std::string to_string() const;

 private:
  FreeModulePtr module_;
  std::vector<Polynomial> comps_;
};

/// Resource bounds for Groebner computations. Negative values mean
/// "unbounded"; exceeding a bound throws BudgetExhausted.
struct Budget {
  long max_degree = -1;
  long max_pairs = -1;
  double seconds = -1;
};

namespace detail {
struct GbCache;
}

/// Finitely generated submodule of a free module, with an optional cached
/// reduced Groebner basis (and minimal generators in the graded case).
class Submodule {
 public:
  Submodule() = default;
  Submodule(FreeModulePtr module, std::vector<ModuleElement> generators);
  static Submodule ideal(const RingPtr& ring, const std::vector<Polynomial>& generators);

  const FreeModulePtr& module() const { return module_; }
  const RingPtr& ring() const { return module_->ring(); }
  const std::vector<ModuleElement>& generators() const& { return gens_; }
  std::vector<ModuleElement> generators() && { return std::move(gens_); }
  bool is_ideal() const { return module_->rank() == 1; }
  bool is_homogeneous() const;

  bool has_gb() const { return cache_ != nullptr; }
  /// Reduced Groebner basis, primitive integer coefficients, sorted by
  /// increasing lead term. Requires has_gb().
  const std::vector<ModuleElement>& gb() const&;
  std::vector<ModuleElement> gb() && { return gb(); }
  /// Minimal homogeneous generators (graded case only; empty otherwise).
  const std::vector<ModuleElement>& min_generators() const&;
  std::vector<ModuleElement> min_generators() && { return min_generators(); }
  bool has_min_generators() const;

  /// Rank-one helpers.
  std::vector<Polynomial> generator_polys() const;
  std::vector<Polynomial> gb_polys() const;

  /// True when the GB is {unit} in some component set covering everything;
  /// for ideals: 1 is in the ideal.
  bool is_unit() const;
  bool is_zero() const;

  const std::shared_ptr<const detail::GbCache>& cache() const { return cache_; }
  Submodule with_cache(std::shared_ptr<const detail::GbCache> cache) const;

 private:
  FreeModulePtr module_;
  std::vector<ModuleElement> gens_;
  std::shared_ptr<const detail::GbCache> cache_;
};

namespace detail {
struct GbCache {
  std::vector<ModuleElement> gb;
  std::vector<ModuleElement> mingens;
  bool has_mingens = false;
};
}  // namespace detail

}  // namespace logdiv
