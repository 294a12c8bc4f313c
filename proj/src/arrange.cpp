#include "logdiv/arrange.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "logdiv/error.hpp"

namespace logdiv {

namespace {

QMatrix rows_matrix(const std::vector<QRow>& rows, int n) {
  QMatrix m(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  return m;
}

/// Nonzero rows of the RREF.
QMatrix row_basis(QMatrix m) {
  auto piv = rref(m);
  return m.topRows(static_cast<Eigen::Index>(piv.size())).eval();
}

std::vector<Eigen::Index> pivots_of(const QMatrix& rref_rows) {
  std::vector<Eigen::Index> p;
  for (Eigen::Index i = 0; i < rref_rows.rows(); ++i) {
    Eigen::Index j = 0;
    while (rref_rows(i, j).is_zero()) ++j;
    p.push_back(j);
  }
  return p;
}

bool in_row_span(const QMatrix& basis, const QRow& v) {
  QMatrix m(basis.rows() + 1, basis.cols());
  m.topRows(basis.rows()) = basis;
  for (Eigen::Index j = 0; j < basis.cols(); ++j) m(basis.rows(), j) = v[static_cast<std::size_t>(j)];
  return rank(m) == basis.rows();
}

QRow scaled_canonical(QRow v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& c) { return !c.is_zero(); });
  Rational inv = it->inverse();
  for (auto& c : v) c *= inv;
  return v;
}

QRow cross(const QRow& a, const QRow& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Linear system for degree-zero derivations x^T B d with (x^T B d)(f) = 0.
QMatrix degree_zero_killers(const Polynomial& f, int n) {
  std::vector<Polynomial> parts;
  for (int j = 0; j < n; ++j) parts.push_back(partial(f, j));
  std::unordered_map<Monomial, Eigen::Index, MonomialHash> rows;
  std::vector<std::vector<std::pair<Eigen::Index, Rational>>> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial t = Polynomial::variable(f.ring(), i) * parts[static_cast<std::size_t>(j)];
      for (const auto& term : t.terms()) {
        auto [it, fresh] = rows.try_emplace(term.mono, static_cast<Eigen::Index>(rows.size()));
        if (fresh) entries.emplace_back();
        entries[static_cast<std::size_t>(it->second)].emplace_back(i * n + j, term.coeff);
      }
    }
  QMatrix m = QMatrix::Zero(static_cast<Eigen::Index>(entries.size()), n * n);
  for (std::size_t r = 0; r < entries.size(); ++r)
    for (const auto& [c, v] : entries[r]) m(static_cast<Eigen::Index>(r), c) += v;
  return kernel(m);
}

QMatrix constant_killers(const Polynomial& f, int n) {
  std::unordered_map<Monomial, Eigen::Index, MonomialHash> rows;
  std::vector<std::vector<std::pair<Eigen::Index, Rational>>> entries;
  for (int j = 0; j < n; ++j)
    for (const auto& term : partial(f, j).terms()) {
      auto [it, fresh] = rows.try_emplace(term.mono, static_cast<Eigen::Index>(rows.size()));
      if (fresh) entries.emplace_back();
      entries[static_cast<std::size_t>(it->second)].emplace_back(j, term.coeff);
    }
  QMatrix m = QMatrix::Zero(static_cast<Eigen::Index>(entries.size()), n);
  for (std::size_t r = 0; r < entries.size(); ++r)
    for (const auto& [c, v] : entries[r]) m(static_cast<Eigen::Index>(r), c) += v;
  return kernel(m);
}

std::string poly_in_s(const QRow& c) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    Rational a = c[k].abs();
    if (!out.empty() || c[k].sign() < 0) out += c[k].sign() < 0 ? "-" : "+";
    std::string coef = a.is_integer() ? a.to_string() : "(" + a.to_string() + ")";
    if (k == 0) out += coef;
    else {
      if (!a.is_one()) out += coef;
      out += "s";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::string factor_string(long a, long b) {
  std::string s = "(";
  if (a != 1) s += std::to_string(a);
  s += "s";
  if (b > 0) s += "+" + std::to_string(b);
  else if (b < 0) s += std::to_string(b);
  return s + ")";
}

QRow poly_mul(const QRow& p, const QRow& q) {
  if (p.empty() || q.empty()) return {};
  QRow r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

void poly_trim(QRow& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Rational poly_eval(const QRow& p, const Rational& s) {
  Rational v;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * s + *it;
  return v;
}

/// Exact division by (a s + b), assuming -b/a is a root.
QRow divide_linear(const QRow& p, long a, long b) {
  QRow q(p.size() - 1);
  Rational carry;
  for (std::size_t k = p.size() - 1; k >= 1; --k) {
    Rational c = (p[k] - carry) / Rational(a);
    q[k - 1] = c;
    carry = c * Rational(b);
  }
  return q;
}

}  // namespace

Arrangement::Arrangement(int n, std::vector<Hyperplane> hyperplanes) : n_(n) {
  if (n < 0) throw InputError("negative ambient dimension");
  std::map<QRow, std::size_t> seen;
  for (std::size_t k = 0; k < hyperplanes.size(); ++k) {
    auto& h = hyperplanes[k];
    if (static_cast<int>(h.normal.size()) != n)
      throw InputError("hyperplane " + std::to_string(k + 1) + " has " + std::to_string(h.normal.size()) +
                       " coefficients, expected " + std::to_string(n));
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& c) { return c.is_zero(); }))
      throw InputError("hyperplane " + std::to_string(k + 1) + " has zero normal");
    if (h.multiplicity < 1) throw InputError("multiplicity must be positive");
    auto key = scaled_canonical(h.normal);
    auto it = seen.find(key);
    if (it != seen.end()) {
      hs_[it->second].multiplicity += h.multiplicity;
      warnings_.push_back("hyperplane " + std::to_string(k + 1) + " is proportional to hyperplane " +
                          std::to_string(it->second + 1) + "; multiplicities merged");
      continue;
    }
    seen.emplace(key, hs_.size());
    hs_.push_back(std::move(h));
  }
}

long Arrangement::degree() const {
  long d = 0;
  for (const auto& h : hs_) d += h.multiplicity;
  return d;
}

int Arrangement::rank() const {
  if (hs_.empty()) return 0;
  std::vector<QRow> rows;
  for (const auto& h : hs_) rows.push_back(h.normal);
  return static_cast<int>(logdiv::rank(rows_matrix(rows, n_)));
}

RingPtr Arrangement::default_ring() const {
  std::vector<std::string> names;
  if (n_ <= 4) {
    const char* base[] = {"x", "y", "z", "w"};
    for (int i = 0; i < n_; ++i) names.emplace_back(base[i]);
  } else {
    for (int i = 0; i < n_; ++i) names.push_back("x" + std::to_string(i));
  }
  return PolyRing::standard(names);
}

Polynomial Arrangement::linear_form(int i, const RingPtr& ring) const {
  if (ring->nvars() != n_) throw InputError("ring does not match the arrangement dimension");
  Polynomial l(ring);
  const auto& v = hs_[static_cast<std::size_t>(i)].normal;
  for (int j = 0; j < n_; ++j)
    if (!v[static_cast<std::size_t>(j)].is_zero()) l += Polynomial::variable(ring, j) * v[static_cast<std::size_t>(j)];
  return l;
}

Polynomial Arrangement::polynomial(const RingPtr& ring) const {
  Polynomial f = Polynomial::constant(ring, 1);
  for (int i = 0; i < size(); ++i)
    f = f * linear_form(i, ring).pow(static_cast<unsigned>(hs_[static_cast<std::size_t>(i)].multiplicity));
  return f;
}

Arrangement parse_arrangement(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<Hyperplane> hs;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t here = offset;
    offset += line.size() + 1;
    if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (n < 0) {
      std::istringstream hdr(line);
      std::string word;
      long v = -1;
      if (!(hdr >> word >> v) || word != "vars" || v < 1 || v > 16) throw ParseError("expected header 'vars n'", here);
      std::string rest;
      if (hdr >> rest) throw ParseError("trailing text after header", here);
      n = static_cast<int>(v);
      continue;
    }
    Hyperplane h;
    std::string coeffs = line, mult;
    if (auto c = line.find(':'); c != std::string::npos) {
      coeffs = line.substr(0, c);
      mult = line.substr(c + 1);
    }
    std::istringstream cs(coeffs);
    std::string tok;
    while (cs >> tok) {
      try {
        h.normal.push_back(Rational::parse(tok));
      } catch (const std::exception&) {
        throw ParseError("bad coefficient '" + tok + "'", here);
      }
    }
    if (static_cast<int>(h.normal.size()) != n)
      throw ParseError("expected " + std::to_string(n) + " coefficients, got " + std::to_string(h.normal.size()), here);
    if (!mult.empty()) {
      std::istringstream ms(mult);
      long m = 0;
      std::string extra;
      if (!(ms >> m) || m < 1 || (ms >> extra)) throw ParseError("multiplicity must be a positive integer", here);
      h.multiplicity = static_cast<int>(m);
    }
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& c) { return c.is_zero(); }))
      throw ParseError("zero normal", here);
    hs.push_back(std::move(h));
  }
  if (n < 0) throw InputError("empty arrangement file");
  return Arrangement(n, std::move(hs));
}

Arrangement arrangement_from_forms(const std::vector<Polynomial>& forms, const std::vector<int>& mult) {
  if (forms.empty()) throw InputError("no linear forms");
  if (!mult.empty() && mult.size() != forms.size()) throw InputError("multiplicity count mismatch");
  int n = forms.front().ring()->nvars();
  std::vector<Hyperplane> hs;
  for (std::size_t k = 0; k < forms.size(); ++k) {
    Hyperplane h;
    h.normal.assign(static_cast<std::size_t>(n), Rational());
    if (forms[k].is_zero()) throw InputError("zero form");
    for (const auto& t : forms[k].terms()) {
      if (t.mono.total_degree() != 1) throw InputError("not a homogeneous linear form: " + forms[k].to_string());
      for (int j = 0; j < n; ++j)
        if (t.mono[j] == 1) h.normal[static_cast<std::size_t>(j)] = t.coeff;
    }
    h.multiplicity = mult.empty() ? 1 : mult[k];
    hs.push_back(std::move(h));
  }
  return Arrangement(n, std::move(hs));
}

int IntersectionLattice::index_of(const std::vector<int>& hyperplanes) const {
  for (std::size_t i = 0; i < flats.size(); ++i)
    if (flats[i].hyperplanes == hyperplanes) return static_cast<int>(i);
  return -1;
}

nlohmann::json IntersectionLattice::to_json() const {
  nlohmann::json fl = nlohmann::json::array();
  for (std::size_t i = 0; i < flats.size(); ++i)
    fl.push_back({{"index", i},
                  {"rank", flats[i].rank},
                  {"hyperplanes", flats[i].hyperplanes},
                  {"N", flats[i].N},
                  {"mobius", mobius[i]}});
  nlohmann::json cv = nlohmann::json::array();
  for (auto [a, b] : covers) cv.push_back({a, b});
  return {{"flats", fl}, {"covers", cv}};
}

IntersectionLattice intersection_lattice(const Arrangement& a) {
  IntersectionLattice lat;
  const auto& hs = a.hyperplanes();
  auto make_flat = [&](const std::vector<int>& gens) {
    std::vector<QRow> rows;
    for (int i : gens) rows.push_back(hs[static_cast<std::size_t>(i)].normal);
    Flat f;
    f.normal_span = row_basis(rows_matrix(rows, a.dim()));
    f.rank = static_cast<int>(f.normal_span.rows());
    for (int i = 0; i < a.size(); ++i)
      if (std::find(gens.begin(), gens.end(), i) != gens.end() ||
          in_row_span(f.normal_span, hs[static_cast<std::size_t>(i)].normal))
        f.hyperplanes.push_back(i);
    for (int i : f.hyperplanes) f.N += hs[static_cast<std::size_t>(i)].multiplicity;
    return f;
  };
  Flat bottom;
  bottom.normal_span = QMatrix(0, a.dim());
  lat.flats.push_back(bottom);
  std::map<std::vector<int>, int> index{{{}, 0}};
  std::vector<std::pair<int, int>> covers;
  std::size_t frontier_begin = 0;
  while (frontier_begin < lat.flats.size()) {
    std::size_t frontier_end = lat.flats.size();
    std::vector<Flat> next;
    std::map<std::vector<int>, int> next_index;
    std::vector<std::pair<int, std::vector<int>>> pending;
    for (std::size_t f = frontier_begin; f < frontier_end; ++f) {
      const auto hp = lat.flats[f].hyperplanes;
      for (int j = 0; j < a.size(); ++j) {
        if (std::binary_search(hp.begin(), hp.end(), j)) continue;
        auto gens = hp;
        gens.push_back(j);
        Flat g = make_flat(gens);
        auto key = g.hyperplanes;
        if (!next_index.count(key)) {
          next_index.emplace(key, static_cast<int>(next.size()));
          next.push_back(std::move(g));
        }
        pending.emplace_back(static_cast<int>(f), std::move(key));
      }
    }
    std::sort(next.begin(), next.end(), [](const Flat& x, const Flat& y) { return x.hyperplanes < y.hyperplanes; });
    for (auto& g : next) {
      index.emplace(g.hyperplanes, static_cast<int>(lat.flats.size()));
      lat.flats.push_back(std::move(g));
    }
    for (auto& [lo, hyp] : pending) covers.emplace_back(lo, index.at(hyp));
    frontier_begin = frontier_end;
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  lat.covers = std::move(covers);
  lat.mobius.assign(lat.flats.size(), 0);
  lat.mobius[0] = 1;
  for (std::size_t w = 1; w < lat.flats.size(); ++w) {
    long s = 0;
    const auto& hw = lat.flats[w].hyperplanes;
    for (std::size_t u = 0; u < w; ++u) {
      const auto& hu = lat.flats[u].hyperplanes;
      if (hu.size() < hw.size() && std::includes(hw.begin(), hw.end(), hu.begin(), hu.end())) s += lat.mobius[u];
    }
    lat.mobius[w] = -s;
  }
  return lat;
}

Arrangement full_subarrangement(const Arrangement& a, const Flat& w) {
  auto piv = pivots_of(w.normal_span);
  std::vector<Hyperplane> out;
  for (int i : w.hyperplanes) {
    const auto& h = a.hyperplanes()[static_cast<std::size_t>(i)];
    Hyperplane e;
    for (auto p : piv) e.normal.push_back(h.normal[static_cast<std::size_t>(p)]);
    e.multiplicity = h.multiplicity;
    out.push_back(std::move(e));
  }
  return Arrangement(w.rank, std::move(out));
}

Arrangement essentialize(const Arrangement& a) {
  if (a.size() == 0) return Arrangement(0, {});
  std::vector<QRow> rows;
  Flat top;
  for (int i = 0; i < a.size(); ++i) {
    rows.push_back(a.hyperplanes()[static_cast<std::size_t>(i)].normal);
    top.hyperplanes.push_back(i);
  }
  top.normal_span = row_basis(rows_matrix(rows, a.dim()));
  top.rank = static_cast<int>(top.normal_span.rows());
  return full_subarrangement(a, top);
}

Certificate is_indecomposable(const Arrangement& a) {
  Certificate c;
  c.property = "indecomposable";
  Arrangement e = essentialize(a);
  int r = e.dim();
  if (r == 0) {
    c.verdict = Verdict::Holds;
    c.witness = {{"rank", 0}, {"killer_dimension", 0}};
    return c;
  }
  RingPtr ring = e.default_ring();
  QMatrix k = degree_zero_killers(e.polynomial(ring), r);
  c.witness = {{"rank", r}, {"killer_dimension", k.cols()}};
  if (k.cols() == 0) {
    c.verdict = Verdict::Holds;
    return c;
  }
  c.verdict = Verdict::Fails;
  QVector v = k.col(0);
  Eigen::Index first = 0;
  while (v(first).is_zero()) ++first;
  if (v(first).sign() < 0) v = -v;
  Derivation d{ring, {}};
  for (int j = 0; j < r; ++j) {
    Polynomial cj(ring);
    for (int i = 0; i < r; ++i)
      if (!v(i * r + j).is_zero()) cj += Polynomial::variable(ring, i) * v(i * r + j);
    d.coeffs.push_back(cj);
  }
  c.witness["derivation"] = d.to_string();
  c.witness["coordinates"] = ring->names();
  return c;
}

Certificate nd_check(const Arrangement& a) {
  Certificate c;
  c.property = "nd";
  Certificate dec = is_indecomposable(a);
  if (dec.verdict != Verdict::Holds) {
    c.verdict = Verdict::Inconclusive;
    c.witness = {{"applicable", false}, {"decomposition", dec.witness}};
    return c;
  }
  Arrangement e = essentialize(a);
  int r = e.dim();
  RingPtr ring = e.default_ring();
  Polynomial f = e.polynomial(ring);
  auto km1 = constant_killers(f, r).cols();
  auto k0 = degree_zero_killers(f, r).cols();
  c.verdict = (km1 == 0 && k0 == 0) ? Verdict::Holds : Verdict::Fails;
  Rational cand = Rational(-r) / Rational(e.degree());
  c.witness = {{"applicable", true},
               {"rank", r},
               {"degree", e.degree()},
               {"killers_degree_minus_one", km1},
               {"killers_degree_zero", k0},
               {"candidate", cand.to_string()}};
  return c;
}

std::vector<NdCandidate> nd_candidates(const Arrangement& a) {
  auto lat = intersection_lattice(a);
  std::map<Rational, std::vector<std::vector<int>>> byval;
  for (const auto& w : lat.flats) {
    if (w.rank == 0) continue;
    if (is_indecomposable(full_subarrangement(a, w)).verdict != Verdict::Holds) continue;
    byval[Rational(-w.rank) / Rational(w.N)].push_back(w.hyperplanes);
  }
  std::vector<NdCandidate> out;
  for (auto& [v, fl] : byval) out.push_back({v, std::move(fl)});
  return out;
}

nlohmann::json to_json(const std::vector<NdCandidate>& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : c) out.push_back({{"value", x.value.to_string()}, {"flats", x.flats}});
  return out;
}

void ZetaFunction::add_term(const Rational& c, const std::vector<Factor>& factors) {
  if (c.is_zero()) return;
  Rational scale = c;
  std::vector<Factor> primitive;
  for (auto [a, b] : factors) {
    if (a <= 0) throw std::invalid_argument("zeta factor must have a > 0");
    long g = std::gcd(a, b);
    scale /= Rational(g);
    primitive.emplace_back(a / g, b / g);
  }
  terms_.emplace_back(scale, std::move(primitive));
}

void ZetaFunction::normalize() {
  std::map<Factor, int> emax;
  std::vector<std::map<Factor, int>> counts;
  for (const auto& [c, fs] : terms_) {
    std::map<Factor, int> m;
    for (const auto& f : fs) ++m[f];
    for (const auto& [f, e] : m) emax[f] = std::max(emax[f], e);
    counts.push_back(std::move(m));
  }
  for (const auto& [f, e] : den_) emax[f] = std::max(emax[f], e);
  QRow num;
  auto accumulate = [&](const QRow& p) {
    if (num.size() < p.size()) num.resize(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) num[k] += p[k];
  };
  auto lift = [&](QRow p, const std::map<Factor, int>& have) {
    for (const auto& [f, e] : emax) {
      auto it = have.find(f);
      int missing = e - (it == have.end() ? 0 : it->second);
      for (int k = 0; k < missing; ++k) p = poly_mul(p, {Rational(f.second), Rational(f.first)});
    }
    return p;
  };
  accumulate(lift(num_, den_));
  for (std::size_t t = 0; t < terms_.size(); ++t) accumulate(lift({terms_[t].first}, counts[t]));
  terms_.clear();
  poly_trim(num);
  den_.clear();
  if (num.empty()) {
    num_.clear();
    return;
  }
  for (auto [f, e] : emax) {
    Rational root = Rational(-f.second) / Rational(f.first);
    while (e > 0 && poly_eval(num, root).is_zero()) {
      num = divide_linear(num, f.first, f.second);
      --e;
    }
    if (e > 0) den_[f] = e;
  }
  num_ = std::move(num);
}

Rational ZetaFunction::evaluate(const Rational& s) const {
  Rational d(1);
  for (auto [f, e] : den_)
    for (int k = 0; k < e; ++k) d *= Rational(f.first) * s + Rational(f.second);
  if (d.is_zero()) throw InputError("zeta function evaluated at a pole");
  return poly_eval(num_, s) / d;
}

long ZetaFunction::denominator_degree() const {
  long d = 0;
  for (auto [f, e] : den_) d += e;
  return d;
}

std::vector<std::pair<Rational, int>> ZetaFunction::poles() const {
  std::vector<std::pair<Rational, int>> out;
  for (auto [f, e] : den_) out.emplace_back(Rational(-f.second) / Rational(f.first), e);
  std::sort(out.begin(), out.end());
  return out;
}

std::string ZetaFunction::to_string() const {
  std::size_t nz = static_cast<std::size_t>(std::count_if(num_.begin(), num_.end(), [](const Rational& c) { return !c.is_zero(); }));
  std::string num = poly_in_s(num_);
  if (den_.empty()) return num;
  if (nz > 1) num = "(" + num + ")";
  std::string den;
  for (auto [f, e] : den_) {
    den += factor_string(f.first, f.second);
    if (e > 1) den += "^" + std::to_string(e);
  }
  if (den_.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

nlohmann::json ZetaFunction::to_json() const {
  nlohmann::json num = nlohmann::json::array();
  for (const auto& c : num_) num.push_back(c.to_string());
  QRow den{Rational(1)};
  nlohmann::json factors = nlohmann::json::array();
  for (auto [f, e] : den_) {
    factors.push_back({{"N", f.first}, {"nu", f.second}, {"exponent", e}});
    for (int k = 0; k < e; ++k) den = poly_mul(den, {Rational(f.second), Rational(f.first)});
  }
  nlohmann::json dc = nlohmann::json::array();
  for (const auto& c : den) dc.push_back(c.to_string());
  return {{"zeta", to_string()}, {"numerator", num}, {"denominator", dc}, {"denominator_factors", factors}};
}

bool operator==(const ZetaFunction& a, const ZetaFunction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

ZetaFunction zeta_topological(const Arrangement& a, ZetaModel model) {
  Arrangement e = essentialize(a);
  int r = e.dim();
  if (r > 3) throw HypothesisError("topological zeta function is only implemented for rank <= 3");
  ZetaFunction z;
  const auto& hs = e.hyperplanes();
  auto m = [&](int i) { return static_cast<long>(hs[static_cast<std::size_t>(i)].multiplicity); };
  long d = e.degree();
  std::vector<ZetaFunction::Factor> none;
  if (r == 0) {
    z.add_term(1, none);
  } else if (model == ZetaModel::Minimal && e.size() == r) {
    std::vector<ZetaFunction::Factor> fs;
    for (int i = 0; i < r; ++i) fs.emplace_back(m(i), 1);
    z.add_term(1, fs);
  } else if (r == 1) {
    z.add_term(1, {{m(0), 1}});
  } else if (r == 2) {
    ZetaFunction::Factor e0{d, 2};
    z.add_term(2 - e.size(), {e0});
    for (int i = 0; i < e.size(); ++i) z.add_term(1, {e0, {m(i), 1}});
  } else {
    auto lat = intersection_lattice(e);
    ZetaFunction::Factor e0{d, 3};
    long nlines = e.size(), ntriple = 0, ndouble = 0, incidences = 0;
    std::vector<long> multiple_on(static_cast<std::size_t>(e.size()), 0);
    for (const auto& w : lat.flats) {
      if (w.rank != 2) continue;
      for (int i : w.hyperplanes) ++multiple_on[static_cast<std::size_t>(i)];
      if (w.hyperplanes.size() == 2) {
        ++ndouble;
        z.add_term(1, {e0, {m(w.hyperplanes[0]), 1}, {m(w.hyperplanes[1]), 1}});
      } else {
        ++ntriple;
        long t = static_cast<long>(w.hyperplanes.size());
        incidences += t;
        ZetaFunction::Factor ep{w.N, 2};
        z.add_term(2 - t, {e0, ep});
        for (int i : w.hyperplanes) z.add_term(1, {e0, ep, {m(i), 1}});
      }
    }
    long chi0 = 3 + ntriple - (2 * (nlines + ntriple) - ndouble - incidences);
    z.add_term(chi0, {e0});
    for (int i = 0; i < e.size(); ++i) z.add_term(2 - multiple_on[static_cast<std::size_t>(i)], {e0, {m(i), 1}});
  }
  z.normalize();
  return z;
}

nlohmann::json PoleReport::to_json() const {
  nlohmann::json ps = nlohmann::json::array();
  for (const auto& p : poles)
    ps.push_back({{"pole", p.value.to_string()}, {"order", p.order}, {"matching_flats", p.matching_flats},
                  {"matched", !p.matching_flats.empty()}});
  return {{"zeta", zeta.to_json()}, {"poles", ps}, {"all_matched", all_matched}};
}

PoleReport zeta_pole_analysis(const Arrangement& a) {
  PoleReport rep;
  rep.zeta = zeta_topological(a);
  auto cands = nd_candidates(a);
  for (auto [v, order] : rep.zeta.poles()) {
    PoleReport::Pole p{v, order, {}};
    for (const auto& c : cands)
      if (c.value == v) p.matching_flats = c.flats;
    if (p.matching_flats.empty()) rep.all_matched = false;
    rep.poles.push_back(std::move(p));
  }
  return rep;
}

std::string Subspace::key() const {
  std::string s = std::to_string(rows.cols()) + ":";
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    for (Eigen::Index j = 0; j < rows.cols(); ++j) s += rows(i, j).to_string() + ",";
  return s;
}

Subspace span_of(const std::vector<QRow>& vectors, int n) {
  if (vectors.empty()) return {QMatrix(0, n)};
  return {row_basis(rows_matrix(vectors, n))};
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  QMatrix m(a.rows.rows() + b.rows.rows(), a.rows.cols());
  m << a.rows, b.rows;
  return {row_basis(m)};
}

namespace {

QMatrix annihilator(const Subspace& v) {
  QMatrix k = kernel(v.rows);
  return k.transpose();
}

}  // namespace

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  QMatrix aa = annihilator(a), ab = annihilator(b);
  QMatrix m(aa.rows() + ab.rows(), a.rows.cols());
  m << aa, ab;
  return {row_basis(kernel(m).transpose())};
}

Subspace flat_subspace(const Arrangement& a, const Flat& w) {
  return {row_basis(kernel(w.normal_span.rows() ? w.normal_span : QMatrix(0, a.dim())).transpose())};
}

nlohmann::json SyzygeticLattice::to_json() const {
  auto rows_json = [](const Subspace& v) {
    nlohmann::json r = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.rows.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < v.rows.cols(); ++j) row.push_back(v.rows(i, j).to_string());
      r.push_back(row);
    }
    return r;
  };
  nlohmann::json lv = nlohmann::json::array();
  for (const auto& l : levels) lv.push_back(l.size());
  nlohmann::json s = nlohmann::json::array();
  for (const auto& e : syzygetic) {
    nlohmann::json w = nlohmann::json::array();
    long total = 0;
    for (const auto& v : e.witness) {
      w.push_back(rows_json(v));
      total += v.dim();
    }
    s.push_back({{"level", e.level}, {"basis", rows_json(e.space)}, {"dim", e.space.dim()}, {"witness", w},
                 {"witness_dim_sum", total}});
  }
  return {{"level_sizes", lv}, {"syzygetic", s}, {"capped", capped}};
}

bool SyzygeticLattice::contains_syzygetic(const Subspace& v) const {
  auto k = v.key();
  return std::any_of(syzygetic.begin(), syzygetic.end(), [&](const SyzygeticElement& e) { return e.space.key() == k; });
}

SyzygeticLattice syzygetic_lattice(const Arrangement& a, const SyzygeticOptions& opt) {
  SyzygeticLattice out;
  int n = a.dim();
  auto nontrivial = [n](const Subspace& v) { return v.dim() > 0 && v.dim() < n; };
  auto lat = intersection_lattice(a);
  std::vector<Subspace> level;
  std::set<std::string> keys;
  for (const auto& w : lat.flats) {
    if (opt.seed_dependent_flats && (w.rank < 2 || static_cast<int>(w.hyperplanes.size()) == w.rank)) continue;
    Subspace v = flat_subspace(a, w);
    if (nontrivial(v) && keys.insert(v.key()).second) level.push_back(std::move(v));
  }
  out.levels.push_back(level);
  std::set<std::string> found;
  for (int round = 1; round <= opt.max_rounds; ++round) {
    const auto& prev = out.levels.back();
    std::set<std::string> prev_keys;
    for (const auto& v : prev) prev_keys.insert(v.key());
    auto record = [&](Subspace v, std::vector<Subspace> witness) {
      long total = 0;
      for (const auto& w : witness) total += w.dim();
      Subspace check = witness.front();
      for (std::size_t k = 1; k < witness.size(); ++k) check = subspace_sum(check, witness[k]);
      if (!(check == v) || v.dim() >= total) throw std::logic_error("syzygetic witness failed verification");
      if (found.insert(v.key()).second) out.syzygetic.push_back({std::move(v), std::move(witness), round});
    };
    std::vector<std::size_t> points;
    for (std::size_t i = 0; i < prev.size(); ++i) {
      if (prev[i].dim() == 1) points.push_back(i);
      for (std::size_t j = i + 1; j < prev.size(); ++j) {
        Subspace s = subspace_sum(prev[i], prev[j]);
        if (!nontrivial(s) || prev_keys.count(s.key())) continue;
        if (s.dim() < prev[i].dim() + prev[j].dim() && s.dim() > std::max(prev[i].dim(), prev[j].dim()))
          record(s, {prev[i], prev[j]});
      }
    }
    std::map<std::string, std::pair<Subspace, std::vector<std::size_t>>> lines;
    for (std::size_t x = 0; x < points.size(); ++x)
      for (std::size_t y = x + 1; y < points.size(); ++y) {
        Subspace s = subspace_sum(prev[points[x]], prev[points[y]]);
        if (!nontrivial(s) || prev_keys.count(s.key())) continue;
        auto& slot = lines.try_emplace(s.key(), s, std::vector<std::size_t>{}).first->second;
        for (auto p : {points[x], points[y]})
          if (std::find(slot.second.begin(), slot.second.end(), p) == slot.second.end()) slot.second.push_back(p);
      }
    for (auto& [k, entry] : lines) {
      if (entry.second.size() < 3) continue;
      std::sort(entry.second.begin(), entry.second.end());
      record(entry.first, {prev[entry.second[0]], prev[entry.second[1]], prev[entry.second[2]]});
    }

    std::vector<Subspace> next = prev;
    std::set<std::string> next_keys = prev_keys;
    std::vector<Subspace> sums;
    std::set<std::string> sum_keys;
    bool over = false;
    for (std::size_t i = 0; i < prev.size() && !over; ++i)
      for (std::size_t j = i + 1; j < prev.size(); ++j) {
        Subspace s = subspace_sum(prev[i], prev[j]);
        if (!nontrivial(s) || !sum_keys.insert(s.key()).second) continue;
        sums.push_back(s);
        if (next_keys.insert(s.key()).second) next.push_back(s);
        if (static_cast<long>(next.size()) > opt.max_elements) {
          over = true;
          break;
        }
      }
    for (std::size_t i = 0; i < sums.size() && !over; ++i)
      for (std::size_t j = i + 1; j < sums.size(); ++j) {
        Subspace s = subspace_intersection(sums[i], sums[j]);
        if (!nontrivial(s) || !next_keys.insert(s.key()).second) continue;
        next.push_back(std::move(s));
        if (static_cast<long>(next.size()) > opt.max_elements) {
          over = true;
          break;
        }
      }
    if (over) {
      out.capped = true;
      break;
    }
    if (next.size() == prev.size()) break;
    out.levels.push_back(std::move(next));
    if (round == opt.max_rounds) out.capped = true;
  }
  return out;
}

namespace {

const char* kZieglerForms[9][3] = {{"2", "1", "1"}, {"1", "1", "1"}, {"2", "3", "4"},
                                   {"0", "0", "1"}, {"1", "0", "3"}, {"0", "1", "0"},
                                   {"2", "3", "1"}, {"1", "0", "0"}, {"1", "2", "3"}};
// Lines through each P_i among G12, G23, G34, G45, G56, G61, G14, G25, G36.
const int kZieglerIncidence[6][3] = {{0, 5, 6}, {0, 1, 7}, {1, 2, 8}, {2, 3, 6}, {3, 4, 7}, {4, 5, 8}};

Rational quadric_at(const QRow& p) {
  const auto &x = p[0], &y = p[1], &z = p[2];
  return Rational(2) * x * x + Rational(3) * x * y + Rational(7) * x * z + Rational(3) * y * z + Rational(3) * z * z;
}

bool ziegler_shape(const Arrangement& a) {
  if (a.size() != 9) return false;
  auto lat = intersection_lattice(a);
  std::set<std::vector<int>> triples;
  for (const auto& w : lat.flats) {
    if (w.rank != 2) continue;
    if (w.hyperplanes.size() > 3) return false;
    if (w.hyperplanes.size() == 3) triples.insert(w.hyperplanes);
  }
  std::set<std::vector<int>> want;
  for (const auto& t : kZieglerIncidence) want.insert({t[0], t[1], t[2]});
  return triples == want;
}

}  // namespace

Arrangement ziegler_degenerate() {
  std::vector<Hyperplane> hs;
  for (const auto& f : kZieglerForms) hs.push_back({{Rational::parse(f[0]), Rational::parse(f[1]), Rational::parse(f[2])}, 1});
  return Arrangement(3, std::move(hs));
}

std::vector<QRow> ziegler_points(const Arrangement& a) {
  std::vector<QRow> pts;
  for (const auto& t : kZieglerIncidence)
    pts.push_back(cross(a.hyperplanes()[static_cast<std::size_t>(t[0])].normal,
                        a.hyperplanes()[static_cast<std::size_t>(t[1])].normal));
  return pts;
}

Arrangement ziegler_generic() {
  Arrangement deg = ziegler_degenerate();
  auto p = ziegler_points(deg);
  const QRow dirs[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  for (long t = 1; t < 50; ++t)
    for (const auto& v : dirs) {
      QRow p6 = p[5];
      for (int k = 0; k < 3; ++k) p6[static_cast<std::size_t>(k)] += Rational(t) * v[static_cast<std::size_t>(k)];
      if (quadric_at(p6).is_zero()) continue;
      auto pts = p;
      pts[5] = p6;
      bool general = true;
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
          for (std::size_t k = j + 1; k < 6; ++k) {
            auto c = cross(pts[i], pts[j]);
            Rational det = c[0] * pts[k][0] + c[1] * pts[k][1] + c[2] * pts[k][2];
            general = general && !det.is_zero();
          }
      if (!general) continue;
      std::vector<Hyperplane> hs = deg.hyperplanes();
      hs[4].normal = cross(p[4], p6);
      hs[5].normal = cross(p6, p[0]);
      hs[8].normal = cross(p[2], p6);
      bool ok = true;
      for (const auto& h : hs)
        ok = ok && std::any_of(h.normal.begin(), h.normal.end(), [](const Rational& c) { return !c.is_zero(); });
      if (!ok) continue;
      for (auto& h : hs) {
        Integer l = 1, g = 0;
        for (const auto& c : h.normal) l = lcm(l, c.den());
        for (const auto& c : h.normal) g = gcd(g, (c * Rational(l)).num());
        for (auto& c : h.normal) c = c * Rational(l) / Rational(g);
      }
      Arrangement cand(3, hs);
      if (cand.warnings().empty() && ziegler_shape(cand)) return cand;
    }
  throw std::logic_error("no generic perturbation found");
}

std::vector<Hexagon> hexagon_opposite_points(const std::vector<QRow>& six) {
  if (six.size() != 6) throw InputError("need six points");
  std::vector<Hexagon> out;
  std::array<int, 5> rest{1, 2, 3, 4, 5};
  do {
    if (rest[0] > rest[4]) continue;
    Hexagon h;
    h.order = {0, rest[0], rest[1], rest[2], rest[3], rest[4]};
    auto side = [&](int k) {
      return span_of({six[static_cast<std::size_t>(h.order[static_cast<std::size_t>(k % 6)])],
                      six[static_cast<std::size_t>(h.order[static_cast<std::size_t>((k + 1) % 6)])]},
                     3);
    };
    for (int k = 0; k < 3; ++k) h.points[static_cast<std::size_t>(k)] = subspace_intersection(side(k), side(k + 3));
    out.push_back(std::move(h));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

Polynomial ziegler_quadric(const RingPtr& ring) {
  auto x = Polynomial::variable(ring, 0), y = Polynomial::variable(ring, 1), z = Polynomial::variable(ring, 2);
  return Rational(2) * x * x + Rational(3) * x * y + Rational(7) * x * z + Rational(3) * y * z + Rational(3) * z * z;
}

}  // namespace logdiv
