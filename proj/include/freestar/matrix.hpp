#ifndef FREESTAR_MATRIX_HPP
#define FREESTAR_MATRIX_HPP

#include <optional>
#include <vector>

#include "freestar/poly.hpp"
#include "freestar/scalar.hpp"

namespace freestar {

// Dense exact matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_hermitian() const;

  Matrix conj_transpose() const;
  Scalar trace() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& c) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v);

// Exact determinant (Gaussian elimination with exact division, row swaps
// tracked by sign).
Scalar det(const Matrix& m);

// All leading principal minors det(M_1), ..., det(M_n), each computed
// exactly. The first k come from a single fraction-free Bareiss sweep; if a
// pivot vanishes mid-sweep the remaining minors are evaluated per submatrix.
std::vector<Scalar> leading_principal_minors(const Matrix& m);

// Hermitian positive definiteness, certified by exact positivity of every
// leading principal minor. Throws on non-hermitian input.
bool is_positive_definite(const Matrix& m);

// Solves A X = B for square invertible A. Throws PreconditionError when
// singular.
Matrix solve(const Matrix& a, const Matrix& b);

// Canonical reduced row echelon form (pivots = leftmost nonzero columns,
// monic, eliminated above and below). Returns pivot column indices.
std::vector<int> rref_in_place(Matrix& m);

// Canonical basis of the right kernel {x : M x = 0}.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

// Incremental reduced echelon basis for spans of polynomials; pivot of each
// row is its leading word, rows are monic and mutually interreduced. Used
// for vanishing ideals, the two-sided-core computation and the span oracle.
class PolyEchelon {
 public:
  // Reduces p against the rows; inserts the remainder if nonzero. Returns
  // true when the rank grew.
  bool insert(Polynomial p);

  // The canonical residue of p modulo the span.
  Polynomial reduce(Polynomial p) const;
  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }

  size_t rank() const { return rows_.size(); }
  // Rows in ascending order of pivot word.
  std::vector<Polynomial> basis() const;

 private:
  std::map<Word, Polynomial, WordLess> rows_;  // pivot (leading word) -> monic row
};

}  // namespace freestar

#endif
