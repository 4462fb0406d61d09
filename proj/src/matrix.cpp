#include "freestar/matrix.hpp"

namespace freestar {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_hermitian() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (at(i, j) != at(j, i).conj()) return false;
  return true;
}

Matrix Matrix::conj_transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

Scalar Matrix::trace() const {
  Scalar t(0);
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix out(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = -a_[k];
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
  return out;
}

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v) {
  if (m.cols() != static_cast<int>(v.size())) throw PreconditionError("matrix/vector shape mismatch");
  std::vector<Scalar> out(m.rows(), Scalar(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) out[i] += m.at(i, j) * v[j];
  return out;
}

Scalar det(const Matrix& m) {
  if (!m.is_square()) throw PreconditionError("det of non-square matrix");
  int n = m.rows();
  Matrix a = m;
  Scalar result(1);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!a.at(i, k).is_zero()) { pivot = i; break; }
    if (pivot < 0) return Scalar(0);
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      result = -result;
    }
    result *= a.at(k, k);
    Scalar inv = Scalar(1) / a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_zero()) continue;
      Scalar f = a.at(i, k) * inv;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return result;
}

// Bareiss sweep without row swaps; pivots after step k are the leading
// principal minors. Falls back to per-submatrix determinants past a zero
// pivot (needed only for degenerate reporting).
std::vector<Scalar> leading_principal_minors(const Matrix& m) {
  if (!m.is_square()) throw PreconditionError("minors of non-square matrix");
  int n = m.rows();
  std::vector<Scalar> minors;
  minors.reserve(n);
  Matrix a = m;
  Scalar prev(1);
  for (int k = 0; k < n; ++k) {
    Scalar piv = a.at(k, k);
    minors.push_back(piv);
    if (piv.is_zero()) {
      // remaining minors computed directly
      for (int j = k + 1; j < n; ++j) {
        Matrix sub(j + 1, j + 1);
        for (int r = 0; r <= j; ++r)
          for (int c = 0; c <= j; ++c) sub.at(r, c) = m.at(r, c);
        minors.push_back(det(sub));
      }
      return minors;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (piv * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
    prev = piv;
  }
  return minors;
}

namespace {

// Fraction-free Bareiss over the (Gaussian) integers after a symmetric
// congruence scaling D·M·D clearing denominators; the congruence preserves
// minor signs. Exact divisions use mpz_divexact, avoiding per-operation
// gcd canonicalization.
bool bareiss_positive_definite(const Matrix& m) {
  int n = m.rows();
  std::vector<mpz_class> scale(static_cast<size_t>(n), 1);
  for (int i = 0; i < n; ++i) {
    mpz_class l(1);
    for (int j = 0; j < n; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).re().raw().get_den().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).im().raw().get_den().get_mpz_t());
    }
    scale[static_cast<size_t>(i)] = l;
  }
  bool real_only = true;
  for (int i = 0; i < n && real_only; ++i)
    for (int j = 0; j < n; ++j)
      if (!m.at(i, j).is_real()) { real_only = false; break; }

  auto scaled_int = [&](const Rational& q, int i, int j) -> mpz_class {
    mpz_class v = q.raw().get_num() * (scale[size_t(i)] / q.raw().get_den());
    return v * scale[size_t(j)];
  };

  if (real_only) {
    std::vector<mpz_class> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[size_t(i) * n + j] = scaled_int(m.at(i, j).re(), i, j);
    mpz_class prev(1), t1, t2;
    for (int k = 0; k < n; ++k) {
      const mpz_class& piv = a[size_t(k) * n + k];
      if (sgn(piv) <= 0) return false;
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) {
          mpz_class& e = a[size_t(i) * n + j];
          t1 = piv * e;
          t2 = a[size_t(i) * n + k] * a[size_t(k) * n + j];
          t1 -= t2;
          mpz_divexact(e.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
        }
      prev = piv;
    }
    return true;
  }

  // Gaussian-integer entries as (re, im) pairs
  std::vector<mpz_class> re(static_cast<size_t>(n) * n), im(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      re[size_t(i) * n + j] = scaled_int(m.at(i, j).re(), i, j);
      im[size_t(i) * n + j] = scaled_int(m.at(i, j).im(), i, j);
    }
  mpz_class prev(1), tr, ti, u;
  for (int k = 0; k < n; ++k) {
    const mpz_class& pr = re[size_t(k) * n + k];
    if (sgn(im[size_t(k) * n + k]) != 0)
      throw std::logic_error("hermitian minor with nonzero imaginary part");
    if (sgn(pr) <= 0) return false;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        size_t ij = size_t(i) * n + j, ik = size_t(i) * n + k, kj = size_t(k) * n + j;
        tr = pr * re[ij] - (re[ik] * re[kj] - im[ik] * im[kj]);
        ti = pr * im[ij] - (re[ik] * im[kj] + im[ik] * re[kj]);
        mpz_divexact(u.get_mpz_t(), tr.get_mpz_t(), prev.get_mpz_t());
        re[ij] = u;
        mpz_divexact(u.get_mpz_t(), ti.get_mpz_t(), prev.get_mpz_t());
        im[ij] = u;
      }
    prev = pr;
  }
  return true;
}

}  // namespace

bool is_positive_definite(const Matrix& m) {
  if (!m.is_hermitian()) throw PreconditionError("positive-definiteness test on non-hermitian matrix");
  return bareiss_positive_definite(m);
}

Matrix solve(const Matrix& a0, const Matrix& b0) {
  if (!a0.is_square() || a0.rows() != b0.rows())
    throw PreconditionError("solve: shape mismatch");
  int n = a0.rows(), m = b0.cols();
  Matrix a = a0, b = b0;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!a.at(i, k).is_zero()) { pivot = i; break; }
    if (pivot < 0) throw PreconditionError("solve: singular matrix");
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      for (int j = 0; j < m; ++j) std::swap(b.at(k, j), b.at(pivot, j));
    }
    Scalar inv = Scalar(1) / a.at(k, k);
    for (int j = 0; j < n; ++j) a.at(k, j) *= inv;
    for (int j = 0; j < m; ++j) b.at(k, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == k || a.at(i, k).is_zero()) continue;
      Scalar f = a.at(i, k);
      for (int j = 0; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      for (int j = 0; j < m; ++j) b.at(i, j) -= f * b.at(k, j);
    }
  }
  return b;
}

std::vector<int> rref_in_place(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
    Scalar inv = Scalar(1) / m.at(r, c);
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m0) {
  Matrix m = m0;
  std::vector<int> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[c] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), c);
    out.push_back(std::move(v));
  }
  return out;
}

bool PolyEchelon::insert(Polynomial p) {
  p = reduce(std::move(p));
  if (p.is_zero()) return false;
  auto [lw, lc] = leading_term(p);
  Polynomial row = p.scaled(Scalar(1) / lc);
  // eliminate the new pivot from existing rows
  for (auto& [piv, r] : rows_) {
    Scalar c = r.coeff(lw);
    if (!c.is_zero()) r -= row.scaled(c);
  }
  rows_.emplace(lw, std::move(row));
  return true;
}

Polynomial PolyEchelon::reduce(Polynomial p) const {
  Polynomial out(p.g(), p.field());
  while (!p.is_zero()) {
    auto [lw, lc] = leading_term(p);
    auto it = rows_.find(lw);
    if (it == rows_.end()) {
      out.add_term(lw, lc);
      p.add_term(lw, -lc);
    } else {
      p -= it->second.scaled(lc);
    }
  }
  return out;
}

std::vector<Polynomial> PolyEchelon::basis() const {
  std::vector<Polynomial> out;
  out.reserve(rows_.size());
  for (const auto& [piv, r] : rows_) out.push_back(r);
  return out;
}

}  // namespace freestar
