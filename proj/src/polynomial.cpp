#include "logdiv/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "logdiv/error.hpp"

namespace logdiv {

// ---------------------------------------------------------------- PolyRing

RingPtr PolyRing::make(std::vector<std::string> names, std::vector<int> weights, OrderKind kind,
                       int elim_block) {
  if (static_cast<int>(names.size()) > kMaxVars)
    throw InputError("too many variables (max " + std::to_string(kMaxVars) + ")");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError("empty variable name");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) throw InputError("weight count differs from variable count");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    bool block = static_cast<int>(i) < elim_block;
    if (weights[i] < 0 || (weights[i] == 0 && !block))
      throw InputError("variable weights must be positive");
  }
  auto r = std::shared_ptr<PolyRing>(new PolyRing());
  r->names_ = std::move(names);
  r->weights_ = weights;
  r->order_ = MonomialOrder(kind, std::move(weights), elim_block);
  return r;
}

int PolyRing::index_of(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

bool PolyRing::standard_graded() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

RingPtr PolyRing::with_order(OrderKind kind, int elim_block) const {
  return make(names_, weights_, kind, elim_block);
}

std::string PolyRing::signature() const {
  std::ostringstream os;
  os << "vars[";
  for (int i = 0; i < nvars(); ++i) os << (i ? "," : "") << names_[i] << ":" << weights_[i];
  os << "]order[";
  switch (order_.kind()) {
    case OrderKind::GRevLex: os << "grevlex"; break;
    case OrderKind::Lex: os << "lex"; break;
    case OrderKind::WeightedGRevLex: os << "wgrevlex"; break;
  }
  os << "/" << order_.elim_block() << "]";
  return os.str();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  const auto& ord = ring_->order();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (out.back().coeff.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw InputError("variable index out of range");
  Monomial m;
  m[i] = 1;
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Rational(0);
}

namespace {

template <class Op>
std::vector<Term> merge_terms(const MonomialOrder& ord, const std::vector<Term>& a,
                              const std::vector<Term>& b, Op op) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, op(Rational(0), b[j].coeff)});
      ++j;
    } else {
      Rational s = op(a[i].coeff, b[j].coeff);
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, op(Rational(0), b[j].coeff)});
  return out;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring().get() != b.ring().get() && !same_ring(*a.ring(), *b.ring()))
    throw InputError("polynomials live in different rings");
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!ring_) ring_ = o.ring_;
  check_same_ring(*this, o);
  terms_ = merge_terms(ring_->order(), terms_, o.terms_,
                       [](const Rational& x, const Rational& y) { return x + y; });
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (!ring_) ring_ = o.ring_;
  check_same_ring(*this, o);
  terms_ = merge_terms(ring_->order(), terms_, o.terms_,
                       [](const Rational& x, const Rational& y) { return x - y; });
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  return Polynomial(a.ring_, std::move(terms));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;  // multiplication by a monomial preserves the order
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i] == b.terms_[i])) return false;
  return true;
}

long Polynomial::degree() const {
  long d = ring_->degree(terms_.at(0).mono);
  for (const auto& t : terms_) d = std::max(d, ring_->degree(t.mono));
  return d;
}

long Polynomial::low_degree() const {
  long d = ring_->degree(terms_.at(0).mono);
  for (const auto& t : terms_) d = std::min(d, ring_->degree(t.mono));
  return d;
}

bool Polynomial::is_homogeneous() const { return is_zero() || weighted_degree().has_value(); }

std::optional<long> Polynomial::weighted_degree() const {
  return weighted_degree(ring_ ? std::span<const int>(ring_->weights()) : std::span<const int>());
}

std::optional<long> Polynomial::weighted_degree(std::span<const int> weights) const {
  if (terms_.empty()) return std::nullopt;
  long d = logdiv::weighted_degree(terms_[0].mono, weights);
  for (const auto& t : terms_)
    if (logdiv::weighted_degree(t.mono, weights) != d) return std::nullopt;
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != ring_->nvars())
    throw InputError("evaluation point has wrong length");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (int i = 0; i < ring_->nvars(); ++i)
      for (int k = 0; k < t.mono[i]; ++k) v *= point[static_cast<std::size_t>(i)];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    num_gcd = gcd(num_gcd, t.coeff.num());
    den_lcm = lcm(den_lcm, t.coeff.den());
  }
  Rational scale(den_lcm, num_gcd);
  if (lead_coeff().sign() < 0) scale = -scale;
  return *this * scale;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * lead_coeff().inverse();
}

Polynomial Polynomial::map_to(const RingPtr& target, std::span<const int> var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < ring_->nvars(); ++i)
      if (t.mono[i]) m[var_map[static_cast<std::size_t>(i)]] = t.mono[i];
    out.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->nvars() != ring_->nvars()) throw InputError("in_ring: variable count differs");
  return Polynomial(target, terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty())
      out += c.to_string();
    else if (c.is_one())
      out += mono;
    else
      out += c.to_string() + "*" + mono;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// --------------------------------------------------------------- calculus

Polynomial partial(const Polynomial& f, int i) {
  if (i < 0 || i >= f.ring()->nvars()) throw InputError("partial: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (!t.mono[i]) continue;
    Monomial m = t.mono;
    Rational c = t.coeff * Rational(static_cast<long>(m[i]));
    m[i] -= 1;
    out.push_back({m, std::move(c)});
  }
  return Polynomial(f.ring(), std::move(out));
}

Polynomial euler_operator(const Polynomial& f) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    long d = f.ring()->degree(t.mono);
    if (d) out.push_back({t.mono, t.coeff * Rational(d)});
  }
  return Polynomial(f.ring(), std::move(out));
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InputError("division by zero polynomial");
  Polynomial q(f.ring()), r(f.ring()), p = f;
  const Monomial& lg = g.lead_monomial();
  Rational inv = g.lead_coeff().inverse();
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.lead();
    if (divides(lg, lt.mono)) {
      Monomial m = quotient(lt.mono, lg);
      Rational c = lt.coeff * inv;
      q += Polynomial::monomial(f.ring(), m, c);
      p -= g.mul_term(m, c);
    } else {
      rem.push_back(lt);
      p -= Polynomial::monomial(f.ring(), lt.mono, lt.coeff);
    }
  }
  return {q, Polynomial(f.ring(), std::move(rem))};
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  auto [q, r] = divide(f, g);
  if (!r.is_zero()) throw InputError("divide_exact: remainder is nonzero");
  return q;
}

}  // namespace logdiv
