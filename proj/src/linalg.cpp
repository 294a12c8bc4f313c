#include "logdiv/linalg.hpp"

#include <stdexcept>

namespace logdiv {

std::vector<Eigen::Index> rref(QMatrix& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.row(p).swap(a.row(row));
    Rational inv = a(row, col).inverse();
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Rational c = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= c * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Eigen::Index rank(QMatrix a) { return static_cast<Eigen::Index>(rref(a).size()); }

QMatrix kernel(const QMatrix& a) {
  QMatrix r = a;
  auto piv = rref(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
  QMatrix k = QMatrix::Zero(a.cols(), a.cols() - static_cast<Eigen::Index>(piv.size()));
  Eigen::Index out = 0;
  for (Eigen::Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(f, out) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], out) = -r(static_cast<Eigen::Index>(i), f);
    ++out;
  }
  return k;
}

void SparseQMatrix::add(long r, long c, const Rational& v) {
  if (r < 0 || r >= rows() || c < 0 || c >= cols_) throw std::out_of_range("sparse matrix index");
  if (v.is_zero()) return;
  auto& row = rows_[static_cast<std::size_t>(r)];
  auto [it, fresh] = row.try_emplace(c, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  }
}

QMatrix SparseQMatrix::dense() const {
  QMatrix m = QMatrix::Zero(rows(), cols_);
  for (long r = 0; r < rows(); ++r)
    for (const auto& [c, v] : row(r)) m(r, c) = v;
  return m;
}

SparseQMatrix SparseQMatrix::operator*(const SparseQMatrix& b) const {
  if (cols_ != b.rows()) throw std::invalid_argument("sparse product: shape mismatch");
  SparseQMatrix out(rows(), b.cols());
  for (long r = 0; r < rows(); ++r)
    for (const auto& [k, v] : row(r))
      for (const auto& [c, w] : b.row(k)) out.add(r, c, v * w);
  return out;
}

bool SparseQMatrix::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

namespace {

using Row = SparseQMatrix::Row;

// row -= c * pivot
void axpy(Row& row, const Rational& c, const Row& pivot) {
  for (const auto& [col, v] : pivot) {
    auto [it, fresh] = row.try_emplace(col, -(c * v));
    if (!fresh) {
      it->second -= c * v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

// echelon form keyed by pivot column; each stored row has leading entry 1
std::map<long, Row> echelon(const SparseQMatrix& a) {
  std::map<long, Row> piv;
  for (long r = 0; r < a.rows(); ++r) {
    Row row = a.row(r);
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = piv.find(lead->first);
      if (it == piv.end()) break;
      Rational c = lead->second;
      axpy(row, c, it->second);
    }
    if (row.empty()) continue;
    Rational inv = row.begin()->second.inverse();
    for (auto& [c, v] : row) v *= inv;
    long col = row.begin()->first;
    piv.emplace(col, std::move(row));
  }
  return piv;
}

}  // namespace

long rank(const SparseQMatrix& a) { return static_cast<long>(echelon(a).size()); }

std::vector<std::map<long, Rational>> kernel(const SparseQMatrix& a) {
  auto piv = echelon(a);
  // back substitution to reduced form, highest pivot first
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    for (auto jt = std::next(it); jt != piv.rend(); ++jt) {
      auto hit = jt->second.find(it->first);
      if (hit != jt->second.end()) {
        Rational c = hit->second;
        axpy(jt->second, c, it->second);
      }
    }
  }
  std::vector<std::map<long, Rational>> out;
  for (long f = 0; f < a.cols(); ++f) {
    if (piv.count(f)) continue;
    std::map<long, Rational> v{{f, Rational(1)}};
    for (const auto& [pc, row] : piv) {
      auto hit = row.find(f);
      if (hit != row.end()) v[pc] = -hit->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace logdiv
