#include "logdiv/groebner.hpp"

#include <algorithm>
#include <bit>

#include "gb_engine.hpp"
#include "logdiv/error.hpp"

namespace logdiv {

namespace {

using engine::IVec;

std::vector<IVec> to_ivecs(const std::vector<ModuleElement>& v, const engine::ModOrder& ord) {
  std::vector<IVec> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(engine::to_ivec(e, ord));
  return out;
}

std::vector<ModuleElement> to_elements(const std::vector<IVec>& v, const FreeModulePtr& f) {
  std::vector<ModuleElement> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(engine::to_element(e, f));
  return out;
}

std::vector<int> shift_map(int n, int by) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i + by;
  return m;
}

struct Elim {
  RingPtr base, ext;
  FreeModulePtr fbase, fext;
  std::vector<int> up, down;
  Polynomial t;

  explicit Elim(const FreeModulePtr& f) : base(f->ring()), fbase(f) {
    ext = ring_with_elimination_variable(base);
    fext = FreeModule::make(ext, f->rank(), f->shifts(), ModuleOrderKind::TermOverPosition);
    up = shift_map(base->nvars(), 1);
    down = shift_map(ext->nvars(), -1);
    t = Polynomial::variable(ext, 0);
  }
  Polynomial lift(const Polynomial& p) const { return p.map_to(ext, up); }
  ModuleElement lift(const ModuleElement& v) const {
    std::vector<Polynomial> c;
    for (const auto& p : v.components()) c.push_back(lift(p));
    return ModuleElement(fext, std::move(c));
  }
  // Elements of the ext-GB that do not involve t, mapped back to the base.
  std::vector<ModuleElement> eliminate(std::vector<ModuleElement> gens, const Budget& budget) const {
    Submodule s = groebner(Submodule(fext, std::move(gens)), budget);
    std::vector<ModuleElement> out;
    for (const auto& g : s.gb()) {
      bool free_of_t = true;
      for (const auto& p : g.components())
        for (const auto& term : p.terms())
          if (term.mono[0]) free_of_t = false;
      if (!free_of_t) continue;
      std::vector<Polynomial> c;
      for (const auto& p : g.components()) c.push_back(p.map_to(base, down));
      out.emplace_back(fbase, std::move(c));
    }
    return out;
  }
};

Polynomial one(const RingPtr& r) { return Polynomial::constant(r, Rational(1)); }

// Bayer-Stillman: M : x_i^infinity for homogeneous M via a revlex order with
// x_i last.
Submodule saturate_variable(const Submodule& m, int var, const Budget& budget) {
  const RingPtr& r = m.ring();
  const int n = r->nvars();
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<int> to_new(static_cast<std::size_t>(n)), to_old(static_cast<std::size_t>(n));
  for (int i = 0, k = 0; i < n; ++i) {
    if (i == var) continue;
    names.push_back(r->name(i));
    weights.push_back(r->weights()[static_cast<std::size_t>(i)]);
    to_new[static_cast<std::size_t>(i)] = k;
    to_old[static_cast<std::size_t>(k)] = i;
    ++k;
  }
  names.push_back(r->name(var));
  weights.push_back(r->weights()[static_cast<std::size_t>(var)]);
  to_new[static_cast<std::size_t>(var)] = n - 1;
  to_old[static_cast<std::size_t>(n - 1)] = var;
  RingPtr rr = PolyRing::make(names, weights, OrderKind::WeightedGRevLex);
  auto fr = FreeModule::make(rr, m.module()->rank(), m.module()->shifts(),
                             ModuleOrderKind::TermOverPosition);
  std::vector<ModuleElement> gens;
  for (const auto& g : m.generators()) {
    std::vector<Polynomial> c;
    for (const auto& p : g.components()) c.push_back(p.map_to(rr, to_new));
    gens.emplace_back(fr, std::move(c));
  }
  Submodule s = groebner(Submodule(fr, std::move(gens)), budget);
  std::vector<ModuleElement> out;
  for (const auto& g : s.gb()) {
    int k = 0xffff;
    for (const auto& p : g.components())
      for (const auto& term : p.terms()) k = std::min<int>(k, term.mono[n - 1]);
    std::vector<Polynomial> c;
    for (const auto& p : g.components()) {
      std::vector<Term> terms;
      for (auto term : p.terms()) {
        term.mono[n - 1] = static_cast<std::uint16_t>(term.mono[n - 1] - k);
        terms.push_back(std::move(term));
      }
      c.push_back(Polynomial(rr, std::move(terms)).map_to(r, to_old));
    }
    out.emplace_back(m.module(), std::move(c));
  }
  return Submodule(m.module(), std::move(out));
}

}  // namespace

Submodule groebner(const Submodule& m, const Budget& budget) {
  if (m.has_gb()) return m;
  const auto& f = m.module();
  engine::ModOrder ord = engine::order_for(*f);
  engine::GbInput in;
  in.gens = to_ivecs(m.generators(), ord);
  in.order = &ord;
  in.weights = f->ring()->weights();
  in.budget = budget;
  in.want_mingens = true;
  in.ideal = f->rank() == 1;
  engine::GbOutput out = engine::buchberger(std::move(in));
  auto cache = std::make_shared<detail::GbCache>();
  cache->gb = to_elements(out.basis, f);
  cache->has_mingens = out.has_mingens;
  if (out.has_mingens) cache->mingens = to_elements(out.mingens, f);
  return m.with_cache(std::move(cache));
}

ModuleElement normal_form(const ModuleElement& v, const Submodule& m) {
  Submodule g = groebner(m);
  engine::ModOrder ord = engine::order_for(*m.module());
  Rational scale;
  IVec r = engine::reduce(engine::to_ivec(v, ord), to_ivecs(g.gb(), ord), ord, &scale);
  ModuleElement out = engine::to_element(r, m.module());
  if (r.empty()) return out;
  Integer den = 1;
  for (const auto& p : v.components())
    for (const auto& t : p.terms()) den = lcm(den, t.coeff.den());
  Polynomial inv = Polynomial::constant(m.ring(), (scale * Rational(den)).inverse());
  return inv * out;
}

bool contains(const Submodule& m, const ModuleElement& v) { return normal_form(v, m).is_zero(); }

bool contains(const Submodule& ideal, const Polynomial& p) {
  return contains(ideal, ModuleElement::of(ideal.module(), p));
}

bool is_subset(const Submodule& inner, const Submodule& outer) {
  Submodule g = groebner(outer);
  engine::ModOrder ord = engine::order_for(*outer.module());
  std::vector<IVec> basis = to_ivecs(g.gb(), ord);
  for (const auto& v : inner.generators())
    if (!engine::reduce(engine::to_ivec(v, ord), basis, ord, nullptr).empty()) return false;
  return true;
}

bool same_submodule(const Submodule& a, const Submodule& b) {
  return is_subset(a, b) && is_subset(b, a);
}

Submodule syzygies(const std::vector<ModuleElement>& vectors, const Budget& budget) {
  if (vectors.empty()) throw InputError("syzygies of an empty list");
  const FreeModulePtr& f = vectors.front().module();
  const RingPtr& ring = f->ring();
  const int r = f->rank();
  const int k = static_cast<int>(vectors.size());
  bool homogeneous = true;
  std::vector<long> deg(static_cast<std::size_t>(k), 0);
  for (int j = 0; j < k; ++j) {
    const auto& v = vectors[static_cast<std::size_t>(j)];
    if (v.rank() != r) throw InputError("syzygies: vectors live in different free modules");
    if (v.is_zero()) continue;
    auto d = v.degree();
    if (!d) homogeneous = false;
    else deg[static_cast<std::size_t>(j)] = *d;
  }
  if (!homogeneous) std::fill(deg.begin(), deg.end(), 0);
  auto target = FreeModule::make(ring, k, deg);

  std::vector<long> shifts = f->shifts();
  shifts.insert(shifts.end(), deg.begin(), deg.end());
  std::vector<int> block(static_cast<std::size_t>(r), 0);
  block.resize(static_cast<std::size_t>(r + k), 1);
  auto combined = FreeModule::make(ring, r + k, shifts);
  engine::ModOrder ord(ring->order(), shifts, block, false);

  engine::GbInput in;
  for (int j = 0; j < k; ++j) {
    std::vector<Polynomial> c = vectors[static_cast<std::size_t>(j)].components();
    for (int i = 0; i < k; ++i) c.push_back(i == j ? one(ring) : Polynomial(ring));
    in.gens.push_back(engine::to_ivec(ModuleElement(combined, std::move(c)), ord));
  }
  in.order = &ord;
  in.weights = ring->weights();
  in.budget = budget;
  engine::GbOutput out = engine::buchberger(std::move(in));

  std::vector<ModuleElement> syz;
  for (auto& e : out.basis) {
    if (e.lead().comp < r) continue;
    for (auto& term : e.t) term.comp -= r;
    syz.push_back(engine::to_element(e, target));
  }
  Submodule s(target, syz);
  if (homogeneous) {
    s = groebner(s, budget);
    s = Submodule(target, s.min_generators()).with_cache(s.cache());
  } else {
    auto cache = std::make_shared<detail::GbCache>();
    cache->gb = syz;
    s = s.with_cache(std::move(cache));
  }
  for (const auto& g : s.generators()) {
    ModuleElement acc(f);
    for (int j = 0; j < k; ++j) acc += g[j] * vectors[static_cast<std::size_t>(j)];
    if (!acc.is_zero()) throw std::logic_error("syzygy verification failed");
  }
  return s;
}

Submodule syzygies(const std::vector<Polynomial>& polys, const Budget& budget) {
  if (polys.empty()) throw InputError("syzygies of an empty list");
  auto f = FreeModule::make(polys.front().ring(), 1);
  std::vector<ModuleElement> v;
  for (const auto& p : polys) v.push_back(ModuleElement::of(f, p));
  return syzygies(v, budget);
}

Submodule colon(const Submodule& m, const Polynomial& g, const Budget& budget) {
  if (g.is_zero()) throw InputError("colon by the zero polynomial");
  if (g.is_constant()) return Submodule(m.module(), m.generators());
  Elim e(m.module());
  const Polynomial tg = e.lift(g);
  const Polynomial u = one(e.ext) - e.t;
  std::vector<ModuleElement> gens;
  for (const auto& v : m.generators()) gens.push_back(e.t * e.lift(v));
  for (int c = 0; c < m.module()->rank(); ++c)
    gens.push_back((u * tg) * ModuleElement::basis(e.fext, c));
  std::vector<ModuleElement> out;
  for (const auto& v : e.eliminate(std::move(gens), budget)) {
    std::vector<Polynomial> c;
    for (const auto& p : v.components()) c.push_back(p.is_zero() ? p : divide_exact(p, g));
    out.emplace_back(m.module(), std::move(c));
  }
  return Submodule(m.module(), std::move(out));
}

Submodule saturate(const Submodule& m, const Polynomial& g, const Budget& budget) {
  if (g.is_zero()) throw InputError("saturation by the zero polynomial");
  if (g.is_constant()) return Submodule(m.module(), m.generators());
  if (g.size() == 1 && m.is_homogeneous()) {
    Submodule s(m.module(), m.generators());
    for (int i = 0; i < g.ring()->nvars(); ++i)
      if (g.lead_monomial()[i]) s = saturate_variable(s, i, budget);
    return s;
  }
  Elim e(m.module());
  const Polynomial u = one(e.ext) - e.t * e.lift(g);
  std::vector<ModuleElement> gens;
  for (const auto& v : m.generators()) gens.push_back(e.lift(v));
  for (int c = 0; c < m.module()->rank(); ++c) gens.push_back(u * ModuleElement::basis(e.fext, c));
  return Submodule(m.module(), e.eliminate(std::move(gens), budget));
}

Submodule saturate(const Submodule& m, const Submodule& j, const Budget& budget) {
  if (!j.is_ideal()) throw InputError("saturation needs an ideal");
  std::vector<Polynomial> gens;
  for (const auto& p : j.generator_polys())
    if (!p.is_zero()) gens.push_back(p);
  if (gens.empty()) throw InputError("saturation by the zero ideal");
  Submodule acc = saturate(m, gens.front(), budget);
  for (std::size_t i = 1; i < gens.size(); ++i) acc = intersect(acc, saturate(m, gens[i], budget), budget);
  return acc;
}

Submodule saturate_by_colon_iteration(const Submodule& m, const Submodule& j, const Budget& budget) {
  if (!j.is_ideal()) throw InputError("saturation needs an ideal");
  std::vector<Polynomial> gens;
  for (const auto& p : j.generator_polys())
    if (!p.is_zero()) gens.push_back(p);
  if (gens.empty()) throw InputError("saturation by the zero ideal");
  Submodule cur = groebner(m, budget);
  for (;;) {
    Submodule next = colon(cur, gens.front(), budget);
    for (std::size_t i = 1; i < gens.size(); ++i) next = intersect(next, colon(cur, gens[i], budget), budget);
    next = groebner(next, budget);
    if (is_subset(next, cur)) return next;
    cur = next;
  }
}

Submodule intersect(const Submodule& a, const Submodule& b, const Budget& budget) {
  if (a.is_zero() || b.is_zero()) return Submodule(a.module(), {});
  Elim e(a.module());
  const Polynomial u = one(e.ext) - e.t;
  std::vector<ModuleElement> gens;
  for (const auto& v : a.generators()) gens.push_back(e.t * e.lift(v));
  for (const auto& v : b.generators()) gens.push_back(u * e.lift(v));
  return Submodule(a.module(), e.eliminate(std::move(gens), budget));
}

Submodule sum(const Submodule& a, const Submodule& b) {
  std::vector<ModuleElement> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Submodule(a.module(), std::move(g));
}

Submodule ideal_sum(const Submodule& a, const std::vector<Polynomial>& more) {
  std::vector<ModuleElement> g = a.generators();
  for (const auto& p : more) g.push_back(ModuleElement::of(a.module(), p));
  return Submodule(a.module(), std::move(g));
}

int lead_component(const ModuleElement& v) {
  engine::ModOrder ord = engine::order_for(*v.module());
  IVec iv = engine::to_ivec(v, ord);
  if (iv.empty()) throw InputError("lead component of the zero vector");
  return iv.lead().comp;
}

int krull_dimension(const Submodule& ideal, const Budget& budget) {
  if (!ideal.is_ideal()) throw InputError("krull_dimension needs an ideal");
  Submodule s = groebner(ideal, budget);
  const int n = ideal.ring()->nvars();
  std::vector<std::uint32_t> masks;
  for (const auto& g : s.gb()) {
    const auto& p = g[0];
    if (p.is_zero()) continue;
    std::uint32_t mk = support_mask(p.lead_monomial());
    if (mk == 0) return -1;
    masks.push_back(mk);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  int best = 0;
  const std::uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1);
  for (std::uint32_t set = 0;; ++set) {
    int size = std::popcount(set);
    if (size > best) {
      bool independent = true;
      for (auto mk : masks)
        if ((mk & ~set) == 0) {
          independent = false;
          break;
        }
      if (independent) best = size;
    }
    if (set == full) break;
  }
  return best;
}

Submodule change_ring(const Submodule& m, const RingPtr& ring) {
  auto f = m.module()->over(ring);
  std::vector<ModuleElement> gens;
  for (const auto& g : m.generators()) {
    std::vector<Polynomial> c;
    for (const auto& p : g.components()) c.push_back(p.in_ring(ring));
    gens.emplace_back(f, std::move(c));
  }
  return Submodule(f, std::move(gens));
}

RingPtr ring_with_elimination_variable(const RingPtr& ring) {
  std::string name = "t";
  while (ring->index_of(name) >= 0) name += "_";
  std::vector<std::string> names{name};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  std::vector<int> weights{0};
  weights.insert(weights.end(), ring->weights().begin(), ring->weights().end());
  OrderKind kind = ring->order_kind() == OrderKind::Lex ? OrderKind::Lex : OrderKind::WeightedGRevLex;
  return PolyRing::make(std::move(names), std::move(weights), kind, 1);
}

}  // namespace logdiv
