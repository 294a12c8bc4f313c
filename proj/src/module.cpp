#include "logdiv/module.hpp"

#include <algorithm>

#include "logdiv/error.hpp"
#include "logdiv/groebner.hpp"

namespace logdiv {

FreeModulePtr FreeModule::make(RingPtr ring, int rank, std::vector<long> shifts,
                               ModuleOrderKind order) {
  if (!ring) throw InputError("free module needs a ring");
  if (rank < 0) throw InputError("negative module rank");
  if (shifts.empty()) shifts.assign(static_cast<std::size_t>(rank), 0);
  if (static_cast<int>(shifts.size()) != rank) throw InputError("shift count differs from rank");
  auto f = std::shared_ptr<FreeModule>(new FreeModule());
  f->ring_ = std::move(ring);
  f->shifts_ = std::move(shifts);
  f->order_ = order;
  return f;
}

ModuleElement::ModuleElement(FreeModulePtr module) : module_(std::move(module)) {
  comps_.assign(static_cast<std::size_t>(module_->rank()), Polynomial(module_->ring()));
}

ModuleElement::ModuleElement(FreeModulePtr module, std::vector<Polynomial> components)
    : module_(std::move(module)), comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != module_->rank())
    throw InputError("component count differs from module rank");
  for (auto& c : comps_) {
    if (!c.ring()) c = Polynomial(module_->ring());
    else if (c.ring().get() != module_->ring().get() && !same_ring(*c.ring(), *module_->ring()))
      throw InputError("module element component lives in a different ring");
  }
}

ModuleElement ModuleElement::basis(FreeModulePtr module, int i) {
  ModuleElement v(module);
  v.comps_.at(static_cast<std::size_t>(i)) = Polynomial::constant(module->ring(), Rational(1));
  return v;
}

ModuleElement ModuleElement::of(FreeModulePtr module, const Polynomial& p) {
  if (module->rank() != 1) throw InputError("ModuleElement::of needs a rank-one module");
  return ModuleElement(std::move(module), {p});
}

bool ModuleElement::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<long> ModuleElement::degree() const {
  std::optional<long> d;
  for (int i = 0; i < rank(); ++i) {
    const auto& p = comps_[static_cast<std::size_t>(i)];
    if (p.is_zero()) continue;
    auto di = p.weighted_degree();
    if (!di) return std::nullopt;
    long v = *di + module_->shift(i);
    if (d && *d != v) return std::nullopt;
    d = v;
  }
  return d;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (!module_) return *this = o;
  if (rank() != o.rank()) throw InputError("adding elements of different free modules");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  if (!module_) {
    *this = ModuleElement(o.module_);
  }
  if (rank() != o.rank()) throw InputError("subtracting elements of different free modules");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

ModuleElement operator*(const Polynomial& p, const ModuleElement& v) {
  ModuleElement r = v;
  for (auto& c : r.comps_) c = p * c;
  return r;
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  return a.comps_ == b.comps_;
}

std::string ModuleElement::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += ", ";
    s += comps_[i].to_string();
  }
  return s + "]";
}

Submodule::Submodule(FreeModulePtr module, std::vector<ModuleElement> generators)
    : module_(std::move(module)), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.rank() != module_->rank()) throw InputError("generator rank differs from module rank");
}

Submodule Submodule::ideal(const RingPtr& ring, const std::vector<Polynomial>& generators) {
  auto f = FreeModule::make(ring, 1);
  std::vector<ModuleElement> gens;
  gens.reserve(generators.size());
  for (const auto& p : generators) gens.push_back(ModuleElement::of(f, p.ring() ? p : Polynomial(ring)));
  return Submodule(f, std::move(gens));
}

bool Submodule::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const ModuleElement& g) { return g.is_homogeneous(); });
}

const std::vector<ModuleElement>& Submodule::gb() const& {
  if (!cache_) throw std::logic_error("Submodule::gb() called before groebner()");
  return cache_->gb;
}

const std::vector<ModuleElement>& Submodule::min_generators() const& {
  if (!cache_) throw std::logic_error("Submodule::min_generators() called before groebner()");
  return cache_->mingens;
}

bool Submodule::has_min_generators() const { return cache_ && cache_->has_mingens; }

std::vector<Polynomial> Submodule::generator_polys() const {
  std::vector<Polynomial> out;
  for (const auto& g : gens_) out.push_back(g[0]);
  return out;
}

std::vector<Polynomial> Submodule::gb_polys() const {
  std::vector<Polynomial> out;
  for (const auto& g : gb()) out.push_back(g[0]);
  return out;
}

bool Submodule::is_unit() const {
  Submodule s = groebner(*this);
  std::vector<bool> covered(static_cast<std::size_t>(module_->rank()), false);
  for (const auto& g : s.gb()) {
    for (int c = 0; c < g.rank(); ++c) {
      if (g[c].is_zero()) continue;
      bool unit = g[c].is_constant();
      for (int o = 0; o < g.rank() && unit; ++o)
        if (o != c && !g[o].is_zero()) unit = false;
      if (unit) covered[static_cast<std::size_t>(c)] = true;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool Submodule::is_zero() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const ModuleElement& g) { return g.is_zero(); });
}

Submodule Submodule::with_cache(std::shared_ptr<const detail::GbCache> cache) const {
  Submodule s = *this;
  s.cache_ = std::move(cache);
  return s;
}

}  // namespace logdiv
