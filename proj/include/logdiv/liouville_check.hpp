#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "logdiv/linalg.hpp"
#include "logdiv/logder.hpp"

namespace logdiv {

/// Basis of Omega^i[y] in bidegree (a, b): a = x-degree of the
/// coefficient plus i, b = y-degree.
class FormSpace {
 public:
  FormSpace(int n, int i, long a, long b);

  struct Element {
    Monomial x;  // exponents in slots 0..n-1
    unsigned subset = 0;  // bitmask of dx's
    Monomial y;  // exponents in slots 0..n-1
  };

  int n() const { return n_; }
  int degree() const { return i_; }
  long a() const { return a_; }
  long b() const { return b_; }
  long size() const { return static_cast<long>(elems_.size()); }
  const Element& operator[](long k) const { return elems_[static_cast<std::size_t>(k)]; }
  /// -1 when absent.
  long index_of(const Monomial& x, unsigned subset, const Monomial& y) const;
  std::string to_string(const std::map<long, Rational>& v, const std::vector<std::string>& names) const;

 private:
  int n_, i_;
  long a_, b_;
  std::vector<Element> elems_;
  std::map<std::tuple<std::vector<int>, unsigned, std::vector<int>>, long> index_;
};

/// df^ : Omega^i[y]_(a,b) -> Omega^{i+1}[y]_(a+d,b), f homogeneous of degree d.
SparseQMatrix lc_df_matrix(const Polynomial& f, const FormSpace& from, const FormSpace& to);
/// y dx ^ : Omega^i[y]_(a,b) -> Omega^{i+1}[y]_(a+1,b+1).
SparseQMatrix lc_ydx_matrix(const FormSpace& from, const FormSpace& to);

struct LcBasis {
  FormSpace space;
  std::vector<std::map<long, Rational>> vectors;
  std::vector<std::string> to_strings(const std::vector<std::string>& names) const;
};
/// (C^i_f)_(a,b) = ker df^ on Omega^i[y]_(a,b).
LcBasis lc_module_basis(const Polynomial& f, int i, long a, long b, long max_columns = 20000);

struct LcWindow {
  long max_a = -1;  // default 2d + n
  long max_b = 3;
  long max_columns = 20000;
};

struct CohomologyTable {
  struct Entry {
    int position;
    long a, b;
    long h;
  };
  struct Terminal {
    long a, b;
    long h;
    long expected;
  };
  std::vector<Entry> entries;
  std::vector<Terminal> terminal;
  bool intermediate_vanish = true;
  bool terminal_match = true;
  LcWindow window;
  nlohmann::json to_json() const;
};

/// Cohomology of the Liouville complex on the window, from ranks only; the
/// terminal column is compared with the bigraded Hilbert function of
/// R[x,y]/L_f computed from a Groebner basis.
CohomologyTable lc_cohomology(const Polynomial& f, LcWindow window = {}, const Budget& budget = {});

}  // namespace logdiv
