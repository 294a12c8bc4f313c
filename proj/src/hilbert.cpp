#include "logdiv/hilbert.hpp"

#include <algorithm>

#include "logdiv/error.hpp"
#include "logdiv/groebner.hpp"

namespace logdiv {

namespace {

using Num = std::map<long, Integer>;

void add_into(Num& a, const Num& b, long shift, const Integer& c) {
  for (const auto& [k, v] : b) a[k + shift] += c * v;
}

Num product(const Num& a, const Num& b) {
  Num out;
  for (const auto& [i, u] : a)
    for (const auto& [j, v] : b) out[i + j] += u * v;
  return out;
}

void drop_zeros(Num& a) { std::erase_if(a, [](const auto& kv) { return kv.second == 0; }); }

std::vector<Monomial> minimalize(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.e < b.e;
  });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool redundant = false;
    for (const auto& o : out)
      if (divides(o, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

Num numerator_rec(std::vector<Monomial> g, const std::vector<int>& w) {
  g = minimalize(std::move(g));
  if (g.empty()) return {{0, 1}};
  for (const auto& m : g)
    if (m.is_one()) return {};
  std::uint32_t seen = 0;
  bool disjoint = true;
  for (const auto& m : g) {
    std::uint32_t s = support_mask(m);
    if (s & seen) disjoint = false;
    seen |= s;
  }
  if (disjoint) {
    Num out{{0, 1}};
    for (const auto& m : g) out = product(out, Num{{0, 1}, {weighted_degree(m, w), -1}});
    drop_zeros(out);
    return out;
  }
  // pivot on the variable occurring in most generators, with median exponent
  int best = -1, count = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    int c = 0;
    for (const auto& m : g)
      if (m[i]) ++c;
    if (c > count) {
      count = c;
      best = i;
    }
  }
  std::vector<int> exps;
  int pure = 0xffff;
  for (const auto& m : g) {
    if (!m[best]) continue;
    exps.push_back(m[best]);
    if (support_mask(m) == (1u << best)) pure = m[best];
  }
  std::sort(exps.begin(), exps.end());
  Monomial p;
  p[best] = static_cast<std::uint16_t>(std::min(exps[exps.size() / 2], pure - 1));
  std::vector<Monomial> plus = g;
  plus.push_back(p);
  std::vector<Monomial> colon;
  for (const auto& m : g) colon.push_back(quotient(m, gcd(m, p)));
  Num out = numerator_rec(std::move(plus), w);
  add_into(out, numerator_rec(std::move(colon), w), weighted_degree(p, w), 1);
  drop_zeros(out);
  return out;
}

void check_homogeneous(const Submodule& m) {
  if (!m.is_homogeneous()) throw HypothesisError("Hilbert series needs a homogeneous presentation");
}

}  // namespace

HilbertSeries::HilbertSeries(std::map<long, Integer> numerator, std::vector<int> denominator_weights)
    : num_(std::move(numerator)), den_(std::move(denominator_weights)) {
  prune();
}

void HilbertSeries::prune() { drop_zeros(num_); }

std::pair<std::map<long, Integer>, int> HilbertSeries::reduced() const {
  Num n = num_;
  int e = static_cast<int>(den_.size());
  if (!std::all_of(den_.begin(), den_.end(), [](int w) { return w == 1; })) return {n, e};
  // divide by (1 - T) while the numerator vanishes at T = 1
  while (e > 0 && !n.empty()) {
    Integer at_one = 0;
    for (const auto& [k, v] : n) at_one += v;
    if (at_one != 0) break;
    // synthetic division: q_k = sum_{j <= k} n_j
    Num q;
    Integer acc = 0;
    long lo = n.begin()->first, hi = n.rbegin()->first;
    for (long k = lo; k < hi; ++k) {
      auto it = n.find(k);
      if (it != n.end()) acc += it->second;
      if (acc != 0) q[k] = acc;
    }
    n = std::move(q);
    --e;
  }
  if (n.empty()) e = 0;
  return {n, e};
}

Integer HilbertSeries::coefficient(long k) const {
  if (num_.empty()) return 0;
  long lo = num_.begin()->first;
  if (k < lo) return 0;
  // power series of 1/prod(1 - T^w) up to degree k - lo
  std::size_t len = static_cast<std::size_t>(k - lo + 1);
  std::vector<Integer> series(len, 0);
  series[0] = 1;
  for (int w : den_) {
    if (w <= 0) throw HypothesisError("Hilbert function needs positive weights");
    for (std::size_t i = static_cast<std::size_t>(w); i < len; ++i) series[i] += series[i - static_cast<std::size_t>(w)];
  }
  Integer sum = 0;
  for (const auto& [j, v] : num_)
    if (j <= k) sum += v * series[static_cast<std::size_t>(k - j)];
  return sum;
}

HilbertSeries& HilbertSeries::operator+=(const HilbertSeries& o) {
  if (den_ != o.den_) throw std::logic_error("Hilbert series with different denominators");
  add_into(num_, o.num_, 0, 1);
  prune();
  return *this;
}

HilbertSeries& HilbertSeries::operator-=(const HilbertSeries& o) {
  if (den_ != o.den_) throw std::logic_error("Hilbert series with different denominators");
  add_into(num_, o.num_, 0, -1);
  prune();
  return *this;
}

HilbertSeries HilbertSeries::shifted(long k) const {
  HilbertSeries h(den_);
  for (const auto& [d, v] : num_) h.num_[d + k] = v;
  return h;
}

HilbertSeries HilbertSeries::scaled(long c) const {
  HilbertSeries h = *this;
  for (auto& [d, v] : h.num_) v *= c;
  h.prune();
  return h;
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::string HilbertSeries::to_string() const {
  auto [n, e] = reduced();
  std::string s;
  if (n.empty()) s = "0";
  for (const auto& [k, v] : n) {
    Integer c = v;
    bool neg = c < 0;
    if (neg) c = -c;
    if (!s.empty()) s += neg ? "-" : "+";
    else if (neg) s += "-";
    std::string mono = k == 0 ? "" : (k == 1 ? "T" : "T^" + std::to_string(k));
    if (mono.empty()) s += c.get_str();
    else if (c == 1) s += mono;
    else s += c.get_str() + mono;
  }
  if (e == 0) return s;
  bool standard = std::all_of(den_.begin(), den_.end(), [](int w) { return w == 1; });
  s = "(" + s + ")/";
  if (standard) return s + (e == 1 ? "(1-T)" : "(1-T)^" + std::to_string(e));
  for (int w : den_) s += "(1-T" + (w == 1 ? std::string() : "^" + std::to_string(w)) + ")";
  return s;
}

std::map<long, Integer> monomial_ideal_numerator(std::vector<Monomial> gens, const std::vector<int>& weights) {
  return numerator_rec(std::move(gens), weights);
}

HilbertSeries hilbert_series(const FreeModulePtr& f) {
  Num n;
  for (long s : f->shifts()) n[s] += 1;
  return HilbertSeries(std::move(n), f->ring()->weights());
}

HilbertSeries hilbert_series(const Submodule& m) {
  check_homogeneous(m);
  Submodule g = groebner(m);
  const auto& f = m.module();
  const auto& w = f->ring()->weights();
  std::vector<std::vector<Monomial>> leads(static_cast<std::size_t>(f->rank()));
  for (const auto& v : g.gb()) {
    int best = lead_component(v);
    leads[static_cast<std::size_t>(best)].push_back(v[best].lead_monomial());
  }
  Num n;
  for (int c = 0; c < f->rank(); ++c)
    add_into(n, numerator_rec(leads[static_cast<std::size_t>(c)], w), f->shift(c), 1);
  return HilbertSeries(std::move(n), w);
}

HilbertSeries submodule_series(const Submodule& m) { return hilbert_series(m.module()) - hilbert_series(m); }

HilbertSeries subquotient_series(const Submodule& n, const Submodule& m) {
  return hilbert_series(m) - hilbert_series(n);
}

}  // namespace logdiv
