#include "gb_engine.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "logdiv/error.hpp"

namespace logdiv::engine {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(double seconds) : enabled_(seconds >= 0) {
    if (enabled_)
      end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds));
  }
  void check() const {
    if (enabled_ && Clock::now() > end_) throw BudgetExhausted("wall-clock budget exhausted");
  }

 private:
  bool enabled_;
  Clock::time_point end_;
};

// a*qa*f - b*qb*g, merged in module order.
IVec combine(const Integer& a, const Monomial& qa, const IVec& f, const Integer& b,
             const Monomial& qb, const IVec& g, const ModOrder& ord) {
  const bool ta = qa.is_one(), tb = qb.is_one();
  IVec out;
  out.t.reserve(f.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  ITerm x, y;
  auto load_f = [&] {
    x.m = ta ? f.t[i].m : f.t[i].m * qa;
    x.comp = f.t[i].comp;
  };
  auto load_g = [&] {
    y.m = tb ? g.t[j].m : g.t[j].m * qb;
    y.comp = g.t[j].comp;
  };
  if (i < f.t.size()) load_f();
  if (j < g.t.size()) load_g();
  while (i < f.t.size() && j < g.t.size()) {
    int c = ord.compare(x.m, x.comp, y.m, y.comp);
    if (c > 0) {
      out.t.push_back({x.m, x.comp, a * f.t[i].c});
      if (++i < f.t.size()) load_f();
    } else if (c < 0) {
      out.t.push_back({y.m, y.comp, -(b * g.t[j].c)});
      if (++j < g.t.size()) load_g();
    } else {
      Integer s = a * f.t[i].c - b * g.t[j].c;
      if (s != 0) out.t.push_back({x.m, x.comp, std::move(s)});
      if (++i < f.t.size()) load_f();
      if (++j < g.t.size()) load_g();
    }
  }
  for (; i < f.t.size(); ++i) out.t.push_back({ta ? f.t[i].m : f.t[i].m * qa, f.t[i].comp, a * f.t[i].c});
  for (; j < g.t.size(); ++j)
    out.t.push_back({tb ? g.t[j].m : g.t[j].m * qb, g.t[j].comp, -(b * g.t[j].c)});
  return out;
}

Integer content(const IVec& v) {
  Integer g = 0;
  for (const auto& t : v.t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

struct Reducer {
  Monomial m;
  int comp;
  std::uint32_t mask;
  std::size_t len;
  const IVec* v;
};

class ReducerSet {
 public:
  void add(const IVec& v) {
    const auto& lt = v.lead();
    items_.push_back({lt.m, lt.comp, support_mask(lt.m), v.t.size(), &v});
  }
  void clear() { items_.clear(); }
  const Reducer* find(const ITerm& t, const IVec* skip = nullptr) const {
    std::uint32_t mask = support_mask(t.m);
    const Reducer* best = nullptr;
    for (const auto& r : items_) {
      if (r.comp != t.comp || (r.mask & ~mask) || r.v == skip) continue;
      if (!divides(r.m, t.m)) continue;
      if (!best || r.len < best->len) best = &r;
    }
    return best;
  }

 private:
  std::vector<Reducer> items_;
};

// Full reduction; scale tracks the rational factor with scale * input = out + ...
IVec reduce_with(IVec f, const ReducerSet& rs, const ModOrder& ord, Rational* scale,
                 const Deadline* deadline, const IVec* skip = nullptr, std::size_t start = 0) {
  std::size_t pos = start;
  unsigned steps = 0;
  Integer sc_num = 1, sc_den = 1;
  while (pos < f.t.size()) {
    const Reducer* r = rs.find(f.t[pos], skip);
    if (!r) {
      ++pos;
      continue;
    }
    const ITerm& ft = f.t[pos];
    const Integer& lc = r->v->lead().c;
    Integer g = gcd(ft.c, lc);
    Integer a = lc / g, b = ft.c / g;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    Monomial q = quotient(ft.m, r->m);
    f = combine(a, Monomial{}, f, b, q, *r->v, ord);
    sc_num *= a;
    if (++steps % 8 == 0) {
      if (deadline) deadline->check();
      Integer c = content(f);
      if (c > 1) {
        for (auto& t : f.t) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        sc_den *= c;
      }
    }
  }
  if (!f.t.empty()) {
    Integer c = content(f);
    if (f.lead().c < 0) c = -c;
    if (c != 1) {
      for (auto& t : f.t) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
      sc_den *= c;
    }
  }
  if (scale) *scale = Rational(sc_num, sc_den);
  return f;
}

struct Elem {
  IVec v;
  long sugar;
  bool active = true;
};

struct Pair {
  int i, j;
  Monomial lcm;
  int comp;
  long sugar;
};

class Engine {
 public:
  explicit Engine(GbInput in)
      : in_(std::move(in)), ord_(*in_.order), deadline_(in_.budget.seconds) {}

  GbOutput run() {
    GbOutput out;
    bool positive = std::all_of(in_.weights.begin(), in_.weights.end(), [](int w) { return w > 0; });
    std::vector<IVec> gens;
    for (auto& g : in_.gens)
      if (!g.empty()) gens.push_back(std::move(g));
    bool homogeneous = std::all_of(gens.begin(), gens.end(), [&](const IVec& v) {
      return is_homogeneous(v, in_.weights, ord_);
    });
    std::vector<long> gdeg;
    for (const auto& g : gens) gdeg.push_back(sugar_of(g));
    std::vector<std::size_t> idx(gens.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return gdeg[a] < gdeg[b]; });

    const bool track = homogeneous && positive && in_.want_mingens;
    std::size_t next = 0;
    if (!homogeneous) {
      for (; next < idx.size(); ++next) add_generator(gens[idx[next]], gdeg[idx[next]]);
    }
    long pairs_done = 0;
    while (!pairs_.empty() || next < idx.size()) {
      deadline_.check();
      std::size_t best = select();
      long dp = best < pairs_.size() ? pairs_[best].sugar : LONG_MAX;
      long dg = next < idx.size() ? gdeg[idx[next]] : LONG_MAX;
      long d = std::min(dp, dg);
      if (in_.budget.max_degree >= 0 && d > in_.budget.max_degree)
        throw BudgetExhausted("degree budget exhausted at degree " + std::to_string(d));
      if (dp <= dg) {
        Pair p = pairs_[best];
        pairs_[best] = pairs_.back();
        pairs_.pop_back();
        if (in_.budget.max_pairs >= 0 && ++pairs_done > in_.budget.max_pairs)
          throw BudgetExhausted("pair budget exhausted");
        process_pair(p);
      } else {
        const IVec& g = gens[idx[next]];
        bool minimal = add_generator(g, gdeg[idx[next]]);
        if (track && minimal) out.mingens.push_back(g);
        ++next;
      }
    }
    out.has_mingens = track;
    out.basis = finish();
    for (auto& m : out.mingens) make_primitive(m);
    return out;
  }

 private:
  long sugar_of(const IVec& v) const {
    long s = LONG_MIN;
    for (const auto& t : v.t) s = std::max(s, term_degree(t, in_.weights, ord_));
    return s;
  }

  void rebuild_reducers() {
    reducers_.clear();
    for (const auto& e : elems_)
      if (e.active) reducers_.add(e.v);
  }

  // Returns true when g has a nonzero remainder (and was added).
  bool add_generator(const IVec& g, long sugar) {
    IVec r = reduce_with(g, reducers_, ord_, nullptr, &deadline_);
    if (r.empty()) return false;
    insert(std::move(r), sugar);
    return true;
  }

  void process_pair(const Pair& p) {
    const IVec& f = elems_[static_cast<std::size_t>(p.i)].v;
    const IVec& g = elems_[static_cast<std::size_t>(p.j)].v;
    const Integer& lf = f.lead().c;
    const Integer& lg = g.lead().c;
    Integer c = gcd(lf, lg);
    Integer a = lg / c, b = lf / c;
    IVec s = combine(a, quotient(p.lcm, f.lead().m), f, b, quotient(p.lcm, g.lead().m), g, ord_);
    IVec r = reduce_with(std::move(s), reducers_, ord_, nullptr, &deadline_);
    if (r.empty()) return;
    insert(std::move(r), p.sugar);
  }

  long pair_sugar(int i, int j, const Monomial& l) const {
    const Elem& a = elems_[static_cast<std::size_t>(i)];
    const Elem& b = elems_[static_cast<std::size_t>(j)];
    long da = a.sugar + weighted_degree(quotient(l, a.v.lead().m), in_.weights);
    long db = b.sugar + weighted_degree(quotient(l, b.v.lead().m), in_.weights);
    return std::max(da, db);
  }

  void insert(IVec h, long sugar) {
    int hi = static_cast<int>(elems_.size());
    const Monomial hm = h.lead().m;
    const int hc = h.lead().comp;
    long hs = std::max(sugar, sugar_of(h));
    elems_.push_back({std::move(h), hs, true});

    // new pairs
    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < hi; ++i) {
      const Elem& e = elems_[static_cast<std::size_t>(i)];
      if (!e.active || e.v.lead().comp != hc) continue;
      cands.push_back({i, lcm(e.v.lead().m, hm), in_.ideal && coprime(e.v.lead().m, hm)});
    }
    // chain criterion among new pairs
    for (auto& c : cands) {
      for (const auto& o : cands) {
        if (&o == &c) continue;
        if (divides(o.lcm, c.lcm) && !(o.lcm == c.lcm)) {
          c.keep = false;
          break;
        }
      }
    }
    // equal lcm classes: keep one unless a coprime pair is present
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].keep) continue;
      bool any_coprime = cands[a].coprime;
      for (std::size_t b = a + 1; b < cands.size(); ++b)
        if (cands[b].keep && cands[b].lcm == cands[a].lcm) {
          any_coprime = any_coprime || cands[b].coprime;
          cands[b].keep = false;
        }
      if (any_coprime) cands[a].keep = false;
    }
    // old pairs
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.comp != hc || !divides(hm, p.lcm)) return false;
      Monomial li = lcm(elems_[static_cast<std::size_t>(p.i)].v.lead().m, hm);
      Monomial lj = lcm(elems_[static_cast<std::size_t>(p.j)].v.lead().m, hm);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (const auto& c : cands)
      if (c.keep) pairs_.push_back({c.i, hi, c.lcm, hc, pair_sugar(c.i, hi, c.lcm)});
    for (int i = 0; i < hi; ++i) {
      Elem& e = elems_[static_cast<std::size_t>(i)];
      if (e.active && e.v.lead().comp == hc && divides(hm, e.v.lead().m)) e.active = false;
    }
    rebuild_reducers();
  }

  std::size_t select() const {
    std::size_t best = pairs_.size();
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (best == pairs_.size()) {
        best = k;
        continue;
      }
      const Pair& p = pairs_[k];
      const Pair& q = pairs_[best];
      if (p.sugar != q.sugar) {
        if (p.sugar < q.sugar) best = k;
        continue;
      }
      int c = ord_.compare(p.lcm, p.comp, q.lcm, q.comp);
      if (c < 0 || (c == 0 && std::pair(p.j, p.i) < std::pair(q.j, q.i))) best = k;
    }
    return best;
  }

  std::vector<IVec> finish() {
    std::vector<IVec> basis;
    for (auto& e : elems_)
      if (e.active) basis.push_back(std::move(e.v));
    std::sort(basis.begin(), basis.end(), [&](const IVec& a, const IVec& b) {
      return ord_.compare(a.lead(), b.lead()) < 0;
    });
    ReducerSet rs;
    for (const auto& b : basis) rs.add(b);
    std::vector<IVec> reduced;
    reduced.reserve(basis.size());
    for (const auto& b : basis) {
      IVec r = reduce_with(b, rs, ord_, nullptr, &deadline_, &b, 1);
      make_primitive(r);
      reduced.push_back(std::move(r));
    }
    return reduced;
  }

  GbInput in_;
  const ModOrder& ord_;
  Deadline deadline_;
  std::vector<Elem> elems_;
  std::vector<Pair> pairs_;
  ReducerSet reducers_;
};

}  // namespace

GbOutput buchberger(GbInput in) { return Engine(std::move(in)).run(); }

IVec reduce(const IVec& v, const std::vector<IVec>& basis, const ModOrder& order, Rational* scale) {
  ReducerSet rs;
  for (const auto& b : basis)
    if (!b.empty()) rs.add(b);
  return reduce_with(v, rs, order, scale, nullptr);
}

void sort_terms(IVec& v, const ModOrder& order) {
  std::sort(v.t.begin(), v.t.end(), [&](const ITerm& a, const ITerm& b) { return order.compare(a, b) > 0; });
  std::vector<ITerm> out;
  out.reserve(v.t.size());
  for (auto& t : v.t) {
    if (!out.empty() && out.back().m == t.m && out.back().comp == t.comp)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (out.back().c == 0) out.pop_back();
  }
  v.t = std::move(out);
}

void make_primitive(IVec& v) {
  if (v.t.empty()) return;
  Integer c = content(v);
  if (v.lead().c < 0) c = -c;
  if (c == 1) return;
  for (auto& t : v.t) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
}

long term_degree(const ITerm& t, const std::vector<int>& weights, const ModOrder& order) {
  return weighted_degree(t.m, weights) + order.shift(t.comp);
}

bool is_homogeneous(const IVec& v, const std::vector<int>& weights, const ModOrder& order) {
  if (v.t.empty()) return true;
  long d = term_degree(v.t[0], weights, order);
  return std::all_of(v.t.begin(), v.t.end(),
                     [&](const ITerm& t) { return term_degree(t, weights, order) == d; });
}

IVec to_ivec(const ModuleElement& v, const ModOrder& order) {
  Integer den = 1;
  for (const auto& p : v.components())
    for (const auto& t : p.terms()) den = lcm(den, t.coeff.den());
  IVec out;
  for (int c = 0; c < v.rank(); ++c)
    for (const auto& t : v[c].terms()) {
      Rational s = t.coeff * Rational(den);
      out.t.push_back({t.mono, c, s.num()});
    }
  sort_terms(out, order);
  return out;
}

ModuleElement to_element(const IVec& v, const FreeModulePtr& module) {
  std::vector<std::vector<Term>> comps(static_cast<std::size_t>(module->rank()));
  for (const auto& t : v.t) comps[static_cast<std::size_t>(t.comp)].push_back({t.m, Rational(t.c)});
  std::vector<Polynomial> polys;
  polys.reserve(comps.size());
  for (auto& c : comps) polys.emplace_back(module->ring(), std::move(c));
  return ModuleElement(module, std::move(polys));
}

ModOrder order_for(const FreeModule& f) {
  return ModOrder(f.ring()->order(), f.shifts(), std::vector<int>(static_cast<std::size_t>(f.rank()), 0),
                  f.order() == ModuleOrderKind::PositionOverTerm);
}

}  // namespace logdiv::engine
