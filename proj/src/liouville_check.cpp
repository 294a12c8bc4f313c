#include "logdiv/liouville_check.hpp"

#include <bit>
#include <chrono>

#include "logdiv/error.hpp"
#include "logdiv/groebner.hpp"

namespace logdiv {

namespace {

void monomials_of_degree(int n, long deg, std::vector<Monomial>& out, Monomial cur = {}, int var = 0) {
  if (var == n - 1) {
    cur[var] = static_cast<std::uint16_t>(deg);
    out.push_back(cur);
    return;
  }
  for (long e = deg; e >= 0; --e) {
    cur[var] = static_cast<std::uint16_t>(e);
    monomials_of_degree(n, deg - e, out, cur, var + 1);
  }
}

std::vector<Monomial> monomials(int n, long deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  if (n == 0) {
    if (deg == 0) out.emplace_back();
    return out;
  }
  monomials_of_degree(n, deg, out);
  return out;
}

std::vector<int> exps(const Monomial& m, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = m[i];
  return v;
}

/// Sign of dx_j ^ dx_I relative to the sorted wedge of I + {j}.
int wedge_sign(unsigned subset, int j) {
  return std::popcount(subset & ((1u << j) - 1u)) % 2 ? -1 : 1;
}

void require_graded(const Polynomial& f) {
  if (f.is_constant()) throw HypothesisError("f must be nonconstant");
  if (!f.ring()->standard_graded() || !f.is_homogeneous())
    throw HypothesisError("window checks need f homogeneous in the standard grading");
  if (f.ring()->nvars() > 8) throw HypothesisError("at most 8 variables");
}

}  // namespace

FormSpace::FormSpace(int n, int i, long a, long b) : n_(n), i_(i), a_(a), b_(b) {
  if (i < 0 || i > n) return;
  auto xs = monomials(n, a - i);
  auto ys = monomials(n, b);
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != i) continue;
    for (const auto& x : xs)
      for (const auto& y : ys) {
        index_.emplace(std::make_tuple(exps(x, n), s, exps(y, n)), static_cast<long>(elems_.size()));
        elems_.push_back({x, s, y});
      }
  }
}

long FormSpace::index_of(const Monomial& x, unsigned subset, const Monomial& y) const {
  auto it = index_.find(std::make_tuple(exps(x, n_), subset, exps(y, n_)));
  return it == index_.end() ? -1 : it->second;
}

std::string FormSpace::to_string(const std::map<long, Rational>& v, const std::vector<std::string>& names) const {
  std::string out;
  for (const auto& [k, c] : v) {
    const auto& e = elems_[static_cast<std::size_t>(k)];
    std::string mono;
    for (int j = 0; j < n_; ++j) {
      if (e.x[j] == 0) continue;
      mono += (mono.empty() ? "" : "*") + names[static_cast<std::size_t>(j)];
      if (e.x[j] > 1) mono += "^" + std::to_string(e.x[j]);
    }
    for (int j = 0; j < n_; ++j) {
      if (e.y[j] == 0) continue;
      mono += (mono.empty() ? "" : "*") + std::string("y") + names[static_cast<std::size_t>(j)];
      if (e.y[j] > 1) mono += "^" + std::to_string(e.y[j]);
    }
    std::string form;
    for (int j = 0; j < n_; ++j)
      if (e.subset & (1u << j)) form += (form.empty() ? "" : "^") + std::string("d") + names[static_cast<std::size_t>(j)];
    Rational a = c.abs();
    std::string term = a.is_one() && !mono.empty() ? mono : (mono.empty() ? a.to_string() : a.to_string() + "*" + mono);
    if (!form.empty()) term += " " + form;
    out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    out += term;
  }
  return out.empty() ? "0" : out;
}

SparseQMatrix lc_df_matrix(const Polynomial& f, const FormSpace& from, const FormSpace& to) {
  int n = from.n();
  SparseQMatrix m(to.size(), from.size());
  std::vector<Polynomial> parts;
  for (int j = 0; j < n; ++j) parts.push_back(partial(f, j));
  for (long k = 0; k < from.size(); ++k) {
    const auto& e = from[k];
    for (int j = 0; j < n; ++j) {
      if (e.subset & (1u << j)) continue;
      int sign = wedge_sign(e.subset, j);
      for (const auto& t : parts[static_cast<std::size_t>(j)].terms()) {
        long r = to.index_of(t.mono * e.x, e.subset | (1u << j), e.y);
        if (r < 0) throw std::logic_error("df target outside window");
        m.add(r, k, sign > 0 ? t.coeff : -t.coeff);
      }
    }
  }
  return m;
}

SparseQMatrix lc_ydx_matrix(const FormSpace& from, const FormSpace& to) {
  int n = from.n();
  SparseQMatrix m(to.size(), from.size());
  for (long k = 0; k < from.size(); ++k) {
    const auto& e = from[k];
    for (int j = 0; j < n; ++j) {
      if (e.subset & (1u << j)) continue;
      Monomial y = e.y;
      ++y[j];
      long r = to.index_of(e.x, e.subset | (1u << j), y);
      if (r < 0) throw std::logic_error("y dx target outside window");
      m.add(r, k, Rational(wedge_sign(e.subset, j)));
    }
  }
  return m;
}

std::vector<std::string> LcBasis::to_strings(const std::vector<std::string>& names) const {
  std::vector<std::string> out;
  for (const auto& v : vectors) out.push_back(space.to_string(v, names));
  return out;
}

LcBasis lc_module_basis(const Polynomial& f, int i, long a, long b, long max_columns) {
  require_graded(f);
  int n = f.ring()->nvars();
  long d = *f.weighted_degree();
  FormSpace from(n, i, a, b);
  if (from.size() > max_columns) throw BudgetExhausted("window bidegree too large for dense linear algebra");
  FormSpace to(n, i + 1, a + d, b);
  return {from, kernel(lc_df_matrix(f, from, to))};
}

nlohmann::json CohomologyTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) rows.push_back({{"position", e.position}, {"bidegree", {e.a, e.b}}, {"h", e.h}});
  nlohmann::json term = nlohmann::json::array();
  for (const auto& t : terminal)
    term.push_back({{"bidegree", {t.a, t.b}}, {"h", t.h}, {"hilbert_function", t.expected}});
  return {{"window", {{"max_a", window.max_a}, {"max_b", window.max_b}}},
          {"cohomology", rows},
          {"terminal", term},
          {"intermediate_vanish", intermediate_vanish},
          {"terminal_match", terminal_match}};
}

CohomologyTable lc_cohomology(const Polynomial& f, LcWindow window, const Budget& budget) {
  require_graded(f);
  auto start = std::chrono::steady_clock::now();
  int n = f.ring()->nvars();
  long d = *f.weighted_degree();
  if (window.max_a < 0) window.max_a = 2 * d + n;
  CohomologyTable table;
  table.window = window;

  auto check_budget = [&](long cols) {
    if (cols > window.max_columns) throw BudgetExhausted("window bidegree too large for dense linear algebra");
    if (budget.seconds > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget.seconds)
      throw BudgetExhausted("time budget exhausted");
  };
  // rank of df^ and of [df^; y dx^] on Omega^i[y]_(a,b)
  std::map<std::tuple<int, long, long>, std::pair<long, long>> cache;
  auto ranks = [&](int i, long a, long b) -> std::pair<long, long> {
    if (i < 0 || i >= n || a < i || b < 0) return {0, 0};
    auto key = std::make_tuple(i, a, b);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    FormSpace from(n, i, a, b);
    check_budget(from.size());
    FormSpace df_to(n, i + 1, a + d, b), y_to(n, i + 1, a + 1, b + 1);
    SparseQMatrix df = lc_df_matrix(f, from, df_to);
    SparseQMatrix ydx = lc_ydx_matrix(from, y_to);
    SparseQMatrix s(df.rows() + ydx.rows(), from.size());
    for (long r = 0; r < df.rows(); ++r)
      for (const auto& [c, v] : df.row(r)) s.add(r, c, v);
    for (long r = 0; r < ydx.rows(); ++r)
      for (const auto& [c, v] : ydx.row(r)) s.add(df.rows() + r, c, v);
    auto res = std::make_pair(rank(df), rank(s));
    cache.emplace(key, res);
    return res;
  };

  for (int i = 0; i <= n; ++i)
    for (long b = 0; b <= window.max_b; ++b)
      for (long a = i; a <= window.max_a; ++a) {
        long dim = FormSpace(n, i, a, b).size();
        if (dim == 0) continue;
        long kernel_y = dim - (i == n ? 0 : ranks(i, a, b).second);
        auto [rdf, rs] = ranks(i - 1, a - 1, b - 1);
        long image = rs - rdf;
        long h = kernel_y - image;
        table.entries.push_back({i, a, b, h});
        if (i < n && h != 0) table.intermediate_vanish = false;
      }

  LiouvilleIdeal l = liouville_ideal(f, budget);
  Submodule gb = groebner(l.ideal, budget);
  std::vector<Monomial> leads;
  for (const auto& g : gb.gb_polys()) leads.push_back(g.lead_monomial());
  for (long b = 0; b <= window.max_b; ++b)
    for (long a = n; a <= window.max_a; ++a) {
      long expected = 0;
      auto ys = monomials(n, b);
      for (const auto& x : monomials(n, a - n))
        for (const auto& y : ys) {
          Monomial m = x;
          for (int j = 0; j < n; ++j) m[l.y_offset + j] = y[j];
          if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& g) { return divides(g, m); })) ++expected;
        }
      long h = 0;
      for (const auto& e : table.entries)
        if (e.position == n && e.a == a && e.b == b) h = e.h;
      table.terminal.push_back({a, b, h, expected});
      if (h != expected) table.terminal_match = false;
    }
  return table;
}

}  // namespace logdiv
