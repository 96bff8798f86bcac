#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace genus2 {

using Int = boost::multiprecision::cpp_int;

// Dense matrix of arbitrary-precision integers. Row/column counts may be
// zero (a presentation with no relators produces a 0 x n exponent matrix).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
  const Int& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }

  bool is_identity() const;
  bool is_diagonal() const;

  // Fraction-free (Bareiss) determinant; exact.
  Int determinant() const;

  // Inverse of a matrix with determinant +-1 (integer adjugate route).
  IntMatrix inverse_unimodular() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

struct SmithResult {
  std::vector<Int> d;  // min(rows, cols) diagonal entries, nonnegative, d[i] | d[i+1]
  IntMatrix U;         // rows x rows, unimodular
  IntMatrix V;         // cols x cols, unimodular
};

// U * m * V = diag(d). Pivot choice: smallest nonzero absolute value,
// row-major tie break, so results are deterministic.
SmithResult smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
  int rank = 0;
  std::vector<Int> torsion;  // each >= 2, each dividing the next

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// "0", "Z/2 + Z/2", "Z + Z/5", ...
std::string to_string(const AbelianGroup& g);

// Cokernel of the matrix acting on Z^cols: rank = cols - rank(m), torsion
// from the invariant factors > 1.
AbelianGroup cokernel(const IntMatrix& m);

}  // namespace genus2
