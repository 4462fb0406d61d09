#include "freestar/repvar.hpp"

#include <algorithm>

namespace freestar {

namespace {

// words of degree <= D in ascending monomial order, plus the evaluation of
// each at X (built incrementally along prefixes)
std::vector<Word> words_upto(int g, int D) {
  std::vector<Word> all{Word::one()};
  std::vector<Word> level{Word::one()};
  for (int k = 1; k <= D; ++k) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (int idx = 1; idx <= g; ++idx)
        for (bool st : {false, true}) next.push_back(w.append(Letter(static_cast<uint32_t>(idx), st)));
    std::sort(next.begin(), next.end());
    for (const auto& w : next) all.push_back(w);
    level = std::move(next);
  }
  return all;
}

// incremental echelon over flattened vectors, used for span growth
class VecEchelon {
 public:
  bool insert(std::vector<Scalar> v) {
    for (const auto& [piv, row] : rows_) {
      Scalar c = v[static_cast<size_t>(piv)];
      if (c.is_zero()) continue;
      for (size_t k = 0; k < v.size(); ++k) v[k] -= c * row[k];
    }
    int piv = -1;
    for (size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) { piv = static_cast<int>(k); break; }
    if (piv < 0) return false;
    Scalar inv = Scalar(1) / v[static_cast<size_t>(piv)];
    for (auto& c : v) c *= inv;
    rows_.emplace(piv, std::move(v));
    return true;
  }
  size_t rank() const { return rows_.size(); }

 private:
  std::map<int, std::vector<Scalar>> rows_;
};

std::vector<Scalar> flatten(const Matrix& m) {
  std::vector<Scalar> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

void check_tuple(const MatrixTuple& X) {
  if (static_cast<int>(X.X.size()) != X.g) throw PreconditionError("tuple size mismatch");
  for (const auto& m : X.X)
    if (m.rows() != X.n || m.cols() != X.n) throw PreconditionError("tuple matrix shape mismatch");
}

void check_match(const Polynomial& p, const MatrixTuple& X) {
  check_tuple(X);
  if (p.g() != X.g || p.field() != X.field)
    throw PreconditionError("polynomial/tuple mismatched variable count or field");
}

}  // namespace

Matrix evaluate_word_at(const Word& w, const MatrixTuple& X) {
  Matrix m = Matrix::identity(X.n);
  for (const auto& l : w.letters()) {
    const Matrix& xi = X.X[l.index - 1];
    m = m * (l.starred ? xi.conj_transpose() : xi);
  }
  return m;
}

Matrix evaluate_at(const Polynomial& p, const MatrixTuple& X) {
  check_match(p, X);
  Matrix out(X.n, X.n);
  for (const auto& [w, c] : p.terms()) out += evaluate_word_at(w, X).scaled(c);
  return out;
}

ZeroClass zero_class(const Polynomial& p, const MatrixTuple& X) {
  Matrix m = evaluate_at(p, X);
  if (m.is_zero()) return ZeroClass::hard;
  if (det(m).is_zero()) return ZeroClass::soft_only;
  return ZeroClass::nonzero;
}

namespace {

std::vector<Polynomial> kernel_to_polys(const Matrix& constraints,
                                        const std::vector<Word>& words, int g,
                                        FieldMode field) {
  PolyEchelon ech;
  for (const auto& v : kernel_basis(constraints)) {
    Polynomial p(g, field);
    for (size_t k = 0; k < words.size(); ++k) p.add_term(words[k], v[k]);
    ech.insert(std::move(p));
  }
  return ech.basis();
}

}  // namespace

std::vector<Polynomial> vanishing_ideal(const std::vector<MatrixTuple>& S, int D) {
  if (S.empty()) throw PreconditionError("empty tuple set");
  int g = S.front().g;
  FieldMode field = S.front().field;
  for (const auto& X : S) {
    check_tuple(X);
    if (X.g != g || X.field != field) throw PreconditionError("mixed tuple set");
  }
  std::vector<Word> words = words_upto(g, D);
  int rows = 0;
  for (const auto& X : S) rows += X.n * X.n;
  Matrix constraints(rows, static_cast<int>(words.size()));
  int row0 = 0;
  for (const auto& X : S) {
    for (size_t k = 0; k < words.size(); ++k) {
      Matrix val = evaluate_word_at(words[k], X);
      for (int i = 0; i < X.n; ++i)
        for (int j = 0; j < X.n; ++j)
          constraints.at(row0 + i * X.n + j, static_cast<int>(k)) = val.at(i, j);
    }
    row0 += X.n * X.n;
  }
  return kernel_to_polys(constraints, words, g, field);
}

std::vector<Polynomial> left_vanishing_ideal(const MatrixTuple& X,
                                             const std::vector<Scalar>& v, int D) {
  check_tuple(X);
  if (static_cast<int>(v.size()) != X.n) throw PreconditionError("vector length mismatch");
  bool nonzero = false;
  for (const auto& c : v)
    if (!c.is_zero()) nonzero = true;
  if (!nonzero) throw PreconditionError("zero vector");
  std::vector<Word> words = words_upto(X.g, D);
  Matrix constraints(X.n, static_cast<int>(words.size()));
  for (size_t k = 0; k < words.size(); ++k) {
    std::vector<Scalar> col = mat_vec(evaluate_word_at(words[k], X), v);
    for (int i = 0; i < X.n; ++i) constraints.at(i, static_cast<int>(k)) = col[i];
  }
  return kernel_to_polys(constraints, words, X.g, X.field);
}

std::vector<Matrix> generated_algebra_basis(const MatrixTuple& X) {
  check_tuple(X);
  std::vector<Matrix> gens;
  for (const auto& m : X.X) gens.push_back(m);
  for (const auto& m : X.X) gens.push_back(m.conj_transpose());

  std::vector<Matrix> basis;
  VecEchelon ech;
  std::vector<Matrix> frontier;
  Matrix id = Matrix::identity(X.n);
  if (ech.insert(flatten(id))) {
    basis.push_back(id);
    frontier.push_back(id);
  }
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& b : frontier)
      for (const auto& gmat : gens) {
        Matrix prod = b * gmat;
        if (ech.insert(flatten(prod))) {
          basis.push_back(prod);
          next.push_back(prod);
        }
      }
    frontier = std::move(next);
  }
  return basis;
}

namespace {

// Real dimension of {T in span(basis) : T = T^H}. Hermitian-ness is only
// conjugate-linear, so over the Gaussian rationals the span is treated as a
// real space with basis {B_k, i·B_k} and the system is split into real and
// imaginary parts.
int hermitian_span_dim(const std::vector<Matrix>& basis, int n, FieldMode field) {
  if (basis.empty()) return 0;
  if (field == FieldMode::Rational) {
    Matrix constraints(n * n, static_cast<int>(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k) {
      Matrix diff = basis[k] - basis[k].conj_transpose();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          constraints.at(i * n + j, static_cast<int>(k)) = diff.at(i, j);
    }
    return static_cast<int>(kernel_basis(constraints).size());
  }
  int m = static_cast<int>(basis.size());
  Matrix constraints(2 * n * n, 2 * m);
  Scalar iu = Scalar::i();
  for (int k = 0; k < m; ++k) {
    Matrix d0 = basis[static_cast<size_t>(k)] - basis[static_cast<size_t>(k)].conj_transpose();
    Matrix bi = basis[static_cast<size_t>(k)].scaled(iu);
    Matrix d1 = bi - bi.conj_transpose();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int row = i * n + j;
        constraints.at(row, 2 * k) = Scalar(d0.at(i, j).re());
        constraints.at(n * n + row, 2 * k) = Scalar(d0.at(i, j).im());
        constraints.at(row, 2 * k + 1) = Scalar(d1.at(i, j).re());
        constraints.at(n * n + row, 2 * k + 1) = Scalar(d1.at(i, j).im());
      }
  }
  return static_cast<int>(kernel_basis(constraints).size());
}

}  // namespace

CommutantType commutant_type(const MatrixTuple& X) {
  check_tuple(X);
  int n = X.n;
  std::vector<Matrix> gens;
  for (const auto& m : X.X) gens.push_back(m);
  for (const auto& m : X.X) gens.push_back(m.conj_transpose());

  // commutant: {T : T A = A T for every generator A}
  Matrix constraints(static_cast<int>(gens.size()) * n * n, n * n);
  int row0 = 0;
  for (const auto& a : gens) {
    // (TA - AT)_{ij} = sum_k T_{ik} A_{kj} - A_{ik} T_{kj}
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          constraints.at(row0 + i * n + j, i * n + k) += a.at(k, j);
          constraints.at(row0 + i * n + j, k * n + j) -= a.at(i, k);
        }
      }
    row0 += n * n;
  }
  auto comm_kernel = kernel_basis(constraints);

  CommutantType out;
  out.commutant_dim = static_cast<int>(comm_kernel.size());

  std::vector<Matrix> algebra = generated_algebra_basis(X);
  out.algebra_dim = static_cast<int>(algebra.size());

  // hermitian part of the commutant
  std::vector<Matrix> comm_basis;
  for (const auto& v : comm_kernel) {
    Matrix t(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.at(i, j) = v[static_cast<size_t>(i * n + j)];
    comm_basis.push_back(std::move(t));
  }
  out.hermitian_commutant_dim = hermitian_span_dim(comm_basis, n, X.field);

  // cyclic-subspace scan for a reducibility witness
  for (int j = 0; j < n; ++j) {
    VecEchelon ech;
    std::vector<std::vector<Scalar>> frontier;
    std::vector<Scalar> e(static_cast<size_t>(n), Scalar(0));
    e[static_cast<size_t>(j)] = Scalar(1);
    ech.insert(e);
    frontier.push_back(e);
    while (!frontier.empty() && ech.rank() < static_cast<size_t>(n)) {
      std::vector<std::vector<Scalar>> next;
      for (const auto& v : frontier)
        for (const auto& a : gens) {
          std::vector<Scalar> av = mat_vec(a, v);
          if (ech.insert(av)) next.push_back(std::move(av));
        }
      frontier = std::move(next);
    }
    if (ech.rank() < static_cast<size_t>(n)) {
      out.invariant_witness = j;
      break;
    }
  }

  if (X.field == FieldMode::GaussianRational) {
    if (out.commutant_dim == 1) {
      out.label = CommutantLabel::full_complex;
      if (out.algebra_dim != n * n)
        throw std::logic_error("scalar commutant without full image algebra");
    } else {
      out.label = CommutantLabel::reducible;
    }
    return out;
  }

  if (out.hermitian_commutant_dim == 1) {
    switch (out.commutant_dim) {
      case 1:
        out.label = CommutantLabel::full_real;
        if (out.algebra_dim != n * n)
          throw std::logic_error("trivial commutant without full image algebra");
        break;
      case 2: out.label = CommutantLabel::complex_type; break;
      case 4: out.label = CommutantLabel::quaternion_type; break;
      default:
        throw std::logic_error("irreducible real tuple with unexpected commutant dimension");
    }
  } else {
    out.label = CommutantLabel::reducible;
  }
  return out;
}

bool soft_equals_hard(const MatrixTuple& X) {
  CommutantType ct = commutant_type(X);
  if (ct.label == CommutantLabel::reducible)
    throw PreconditionError("soft/hard comparison needs an irreducible tuple");
  if (X.field == FieldMode::GaussianRational) return X.n == 1;
  // division image algebra <=> hermitian part of the image is the scalars
  return hermitian_span_dim(generated_algebra_basis(X), X.n, X.field) == 1;
}

SoftCheckReport soft_condition_check(const Polynomial& p,
                                     const std::vector<MatrixTuple>& reps) {
  SoftCheckReport rep;
  for (size_t k = 0; k < reps.size(); ++k) {
    const MatrixTuple& X = reps[k];
    CommutantType ct = commutant_type(X);
    if (ct.label == CommutantLabel::reducible)
      throw PreconditionError("soft condition check needs irreducible representations");
    SoftCheckEntry e;
    e.rep_index = static_cast<int>(k);
    ZeroClass z = zero_class(p, X);
    e.is_soft_zero = z != ZeroClass::nonzero;
    if (e.is_soft_zero) {
      e.soft_equals_hard_holds = soft_equals_hard(X);
      e.hard_zero = z == ZeroClass::hard;
      rep.division_image_everywhere = rep.division_image_everywhere && e.soft_equals_hard_holds;
      rep.soft_zeros_are_hard = rep.soft_zeros_are_hard && e.hard_zero;
    }
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace freestar
