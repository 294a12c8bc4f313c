#pragma once

#include <map>
#include <vector>

#include <Eigen/Core>

#include "logdiv/rational.hpp"

namespace logdiv {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<Eigen::Index> rref(QMatrix& a);
Eigen::Index rank(QMatrix a);
/// Basis of {v : a v = 0}, one column per basis vector.
QMatrix kernel(const QMatrix& a);

/// Sparse matrix with rows stored as column -> value maps. Used for the
/// large, very sparse window matrices where a dense copy would not fit.
class SparseQMatrix {
 public:
  using Row = std::map<long, Rational>;
  SparseQMatrix() = default;
  SparseQMatrix(long rows, long cols) : rows_(static_cast<std::size_t>(rows)), cols_(cols) {}

  long rows() const { return static_cast<long>(rows_.size()); }
  long cols() const { return cols_; }
  void add(long r, long c, const Rational& v);
  const Row& row(long r) const { return rows_[static_cast<std::size_t>(r)]; }

  QMatrix dense() const;
  SparseQMatrix operator*(const SparseQMatrix& b) const;
  bool is_zero() const;

 private:
  std::vector<Row> rows_;
  long cols_ = 0;
};

long rank(const SparseQMatrix& a);
/// Basis of the kernel as sparse column vectors (each a map index -> value).
std::vector<std::map<long, Rational>> kernel(const SparseQMatrix& a);

}  // namespace logdiv
