#include "genus2/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace genus2 {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  int n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

IntMatrix IntMatrix::inverse_unimodular() const {
  Int det = determinant();
  if (det != 1 && det != -1) throw std::invalid_argument("inverse_unimodular: determinant not +-1");
  int n = rows_;
  IntMatrix inv(n, n);
  // adjugate; cofactor determinants stay exact
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(mr, mc) = at(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = minor.determinant();
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(i, j) = cof * det;  // det^2 = 1, so adj/det = adj*det
    }
  }
  return inv;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

struct SnfWorker {
  IntMatrix a, u, v;

  explicit SnfWorker(const IntMatrix& m)
      : a(m), u(IntMatrix::identity(m.rows())), v(IntMatrix::identity(m.cols())) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(int dst, int src, const Int& factor) {  // row_dst += factor * row_src
    for (int c = 0; c < a.cols(); ++c) a.at(dst, c) += factor * a.at(src, c);
    for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += factor * u.at(src, c);
  }
  void add_col(int dst, int src, const Int& factor) {
    for (int r = 0; r < a.rows(); ++r) a.at(r, dst) += factor * a.at(r, src);
    for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += factor * v.at(r, src);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }

  bool find_pivot(int t, int& pi, int& pj) const {
    bool found = false;
    Int best;
    for (int i = t; i < a.rows(); ++i)
      for (int j = t; j < a.cols(); ++j) {
        const Int& x = a.at(i, j);
        if (x == 0) continue;
        Int ax = abs_int(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    int n = std::min(a.rows(), a.cols());
    for (int t = 0; t < n; ++t) {
      for (;;) {
        int pi, pj;
        if (!find_pivot(t, pi, pj)) return;  // remaining block is zero
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool dirty = false;
        for (int i = t + 1; i < a.rows(); ++i) {
          if (a.at(i, t) == 0) continue;
          Int q = a.at(i, t) / a.at(t, t);
          if (q != 0) add_row(i, t, -q);
          if (a.at(i, t) != 0) dirty = true;  // remainder becomes a smaller pivot
        }
        for (int j = t + 1; j < a.cols(); ++j) {
          if (a.at(t, j) == 0) continue;
          Int q = a.at(t, j) / a.at(t, t);
          if (q != 0) add_col(j, t, -q);
          if (a.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;

        // pivot must divide every remaining entry for the divisor chain
        int bad_row = -1;
        for (int i = t + 1; i < a.rows() && bad_row < 0; ++i)
          for (int j = t + 1; j < a.cols(); ++j)
            if (a.at(i, j) % a.at(t, t) != 0) {
              bad_row = i;
              break;
            }
        if (bad_row >= 0) {
          add_row(t, bad_row, 1);
          continue;
        }
        break;
      }
      if (a.at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SnfWorker w(m);
  w.run();
  SmithResult out;
  int n = std::min(m.rows(), m.cols());
  out.d.reserve(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) out.d.push_back(w.a.at(t, t));
  out.U = std::move(w.u);
  out.V = std::move(w.v);
  return out;
}

AbelianGroup cokernel(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  AbelianGroup g;
  int nonzero = 0;
  for (const Int& x : s.d) {
    if (x != 0) ++nonzero;
    if (x > 1) g.torsion.push_back(x);
  }
  g.rank = m.cols() - nonzero;
  return g;
}

std::string to_string(const AbelianGroup& g) {
  if (g.rank == 0 && g.torsion.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < g.rank; ++i) {
    out << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (const Int& t : g.torsion) {
    out << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return out.str();
}

}  // namespace genus2
