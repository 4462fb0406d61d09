#include "freestar/gns.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace freestar {

IdealPresentation truncate_ideal(const IdealPresentation& I, int d) {
  if (!I.analytic_generated || !I.homogeneous)
    throw PreconditionError("truncation needs a homogeneous analytic-generated ideal");
  if (d < 0) throw PreconditionError("negative truncation degree");
  std::vector<Polynomial> gens = I.generators;
  // all analytic monomials of degree d+1
  std::vector<Word> level{Word::one()};
  for (int k = 0; k <= d; ++k) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (int idx = 1; idx <= I.g; ++idx)
        next.push_back(w.append(Letter(static_cast<uint32_t>(idx), false)));
    level = std::move(next);
  }
  for (const auto& w : level)
    gens.push_back(Polynomial::monomial(I.g, I.field, w));
  return IdealPresentation::from_generators(star_ideal_generators(gens));
}

std::vector<Scalar> GNSWitness::coords_of(const Polynomial& p) const {
  std::vector<Scalar> out(basis.size(), Scalar(0));
  for (const auto& [w, c] : p.terms()) {
    auto it = class_coords.find(w);
    if (it == class_coords.end())
      throw PreconditionError("polynomial leaves the witness span");
    for (size_t k = 0; k < out.size(); ++k) out[k] += c * it->second[k];
  }
  return out;
}

namespace {

// Whether w admits a factorization (analytic of degree <= d)·(degree <= d).
bool is_spanning_word(const Word& w, int d) {
  int n = w.degree();
  if (n > 2 * d) return false;
  int analytic_prefix = 0;
  while (analytic_prefix < n && !w.at(analytic_prefix).starred) ++analytic_prefix;
  int lo = std::max(0, n - d);
  int hi = std::min(d, analytic_prefix);
  return lo <= hi;
}

}  // namespace

GNSWitness build_witness(const IdealPresentation& I, int d, CSearchPolicy policy) {
  if (!I.analytic_generated || !I.homogeneous)
    throw PreconditionError("witness needs a homogeneous analytic-generated ideal");
  if (d < 0) throw PreconditionError("negative witness degree");

  IdealPresentation trunc = truncate_ideal(I, d);
  int gb_degree = std::max(1, 4 * d);
  for (const auto& p : trunc.generators) gb_degree = std::max(gb_degree, p.degree());
  GroebnerBasis gb = complete(trunc, gb_degree);
  if (gb.collapsed()) throw PreconditionError("witness over an improper ideal");

  GNSWitness w;
  w.d = d;
  w.g = I.g;
  w.field = I.field;
  w.gb = gb;
  w.functional = build_functional(gb, 2 * d, policy);
  const MomentFunctional& L = w.functional;

  // spanning classes [a·b], deduplicated as concatenated words, in order
  std::set<Word, WordLess> cand_set;
  {
    std::vector<Word> analytic{Word::one()}, frontier{Word::one()};
    for (int k = 1; k <= d; ++k) {
      std::vector<Word> next;
      for (const auto& a : frontier)
        for (int idx = 1; idx <= I.g; ++idx)
          next.push_back(a.append(Letter(static_cast<uint32_t>(idx), false)));
      for (const auto& a : next) analytic.push_back(a);
      frontier = std::move(next);
    }
    std::vector<Word> any{Word::one()};
    frontier = {Word::one()};
    for (int k = 1; k <= d; ++k) {
      std::vector<Word> next;
      for (const auto& b : frontier)
        for (int idx = 1; idx <= I.g; ++idx)
          for (bool st : {false, true})
            next.push_back(b.append(Letter(static_cast<uint32_t>(idx), st)));
      for (const auto& b : next) any.push_back(b);
      frontier = std::move(next);
    }
    for (const auto& a : analytic)
      for (const auto& b : any) cand_set.insert(a.concat(b));
  }
  std::vector<Word> candidates(cand_set.begin(), cand_set.end());

  auto pair_value = [&](const Word& u, const Word& v) {
    return L.evaluate(Polynomial::monomial(I.g, I.field, v.star().concat(u)));
  };

  // greedy exact Gram-rank selection in monomial order
  for (const auto& cand : candidates) {
    int k = w.dim();
    std::vector<Scalar> t(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) t[static_cast<size_t>(j)] = pair_value(cand, w.basis[static_cast<size_t>(j)]);
    Scalar diag = pair_value(cand, cand);
    Scalar schur = diag;
    if (k > 0) {
      Matrix rhs(k, 1);
      for (int j = 0; j < k; ++j) rhs.at(j, 0) = t[static_cast<size_t>(j)];
      Matrix y = solve(w.gram, rhs);
      for (int j = 0; j < k; ++j) schur -= t[static_cast<size_t>(j)].conj() * y.at(j, 0);
    }
    if (!schur.is_real() || schur.re().sign() < 0)
      throw std::logic_error("Gram form not positive semidefinite on the span");
    if (schur.is_zero()) continue;
    Matrix grown(k + 1, k + 1);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) grown.at(i, j) = w.gram.at(i, j);
    for (int j = 0; j < k; ++j) {
      grown.at(k, j) = t[static_cast<size_t>(j)].conj();
      grown.at(j, k) = t[static_cast<size_t>(j)];
    }
    grown.at(k, k) = diag;
    w.gram = std::move(grown);
    w.basis.push_back(cand);
  }
  if (!is_positive_definite(w.gram))
    throw std::logic_error("selected Gram matrix not positive definite");

  // coordinates of every spanning class in the selected basis
  int n = w.dim();
  for (const auto& cand : candidates) {
    Matrix rhs(n, 1);
    for (int j = 0; j < n; ++j) rhs.at(j, 0) = pair_value(cand, w.basis[static_cast<size_t>(j)]);
    Matrix y = solve(w.gram, rhs);
    std::vector<Scalar> coords(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) coords[static_cast<size_t>(j)] = y.at(j, 0);
    w.class_coords.emplace(cand, std::move(coords));
  }

  // left multiplication; analytic words of degree d+1 die in the ideal
  for (int i = 1; i <= I.g; ++i) {
    Matrix X(n, n);
    for (int j = 0; j < n; ++j) {
      Word u = w.basis[static_cast<size_t>(j)].prepend(Letter(static_cast<uint32_t>(i), false));
      if (is_spanning_word(u, d)) {
        const auto& coords = w.class_coords.at(u);
        for (int r = 0; r < n; ++r) X.at(r, j) = coords[static_cast<size_t>(r)];
      } else if (!gb.reduce(Polynomial::monomial(I.g, I.field, u)).is_zero()) {
        throw std::logic_error("left multiplication left the span on a nonzero class");
      }
    }
    w.Xop.push_back(std::move(X));
  }
  for (int i = 0; i < I.g; ++i)
    w.Xadj.push_back(solve(w.gram, w.Xop[static_cast<size_t>(i)].conj_transpose() * w.gram));
  return w;
}

Matrix evaluate_with_adjoints(const Polynomial& p, const std::vector<Matrix>& Xop,
                              const std::vector<Matrix>& Xadj) {
  if (Xop.empty()) throw PreconditionError("empty operator tuple");
  int n = Xop.front().rows();
  Matrix out(n, n);
  for (const auto& [w, c] : p.terms()) {
    Matrix m = Matrix::identity(n);
    for (const auto& l : w.letters()) {
      const Matrix& x = l.starred ? Xadj[l.index - 1] : Xop[l.index - 1];
      m = m * x;
    }
    out += m.scaled(c);
  }
  return out;
}

Matrix evaluate_witness(const Polynomial& p, const GNSWitness& w) {
  if (p.g() != w.g || p.field() != w.field)
    throw PreconditionError("polynomial/witness mismatch");
  return evaluate_with_adjoints(p, w.Xop, w.Xadj);
}

WitnessReport verify_witness(const GNSWitness& w, const IdealPresentation& I,
                             const std::vector<Polynomial>& probes) {
  for (const auto& q : probes)
    if (q.degree() > w.d) throw PreconditionError("probe degree exceeds the witness degree");

  WitnessReport rep;
  rep.generators_vanish = true;
  for (const auto& gen : star_ideal_generators(I.generators))
    if (!evaluate_witness(gen, w).is_zero()) { rep.generators_vanish = false; break; }

  rep.probes_separate = true;
  std::vector<Scalar> one_coords = w.coords_of(Polynomial::constant(w.g, w.field, Scalar(1)));
  for (const auto& q : probes) {
    if (w.gb.member(q) == Membership::member) {
      // vanishing branch: the class of q is zero
      bool zero = true;
      for (const auto& c : w.coords_of(q))
        if (!c.is_zero()) { zero = false; break; }
      if (!zero) { rep.probes_separate = false; break; }
      continue;
    }
    Matrix qX = evaluate_witness(q, w);
    std::vector<Scalar> lhs = mat_vec(qX, one_coords);
    std::vector<Scalar> rhs = w.coords_of(q);
    bool nonzero = false;
    for (const auto& c : rhs)
      if (!c.is_zero()) { nonzero = true; break; }
    if (!nonzero || lhs != rhs) { rep.probes_separate = false; break; }
  }

  rep.adjoint_identity = true;
  for (int i = 0; i < w.g; ++i)
    if (w.gram * w.Xop[static_cast<size_t>(i)] !=
        w.Xadj[static_cast<size_t>(i)].conj_transpose() * w.gram) {
      rep.adjoint_identity = false;
      break;
    }
  return rep;
}

std::vector<std::vector<std::vector<double>>> orthonormal_display(const GNSWitness& w) {
  int n = w.dim();
  // Cholesky of the Gram matrix in doubles: G ~= C^T C, C upper triangular.
  // (Real entries suffice for display; Gaussian imaginary parts are dropped
  // after the exact machinery has already certified everything.)
  std::vector<std::vector<double>> c(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = w.gram.at(i, j).re().to_double();
      for (int k = 0; k < i; ++k) s -= c[static_cast<size_t>(k)][static_cast<size_t>(i)] * c[static_cast<size_t>(k)][static_cast<size_t>(j)];
      if (i == j)
        c[static_cast<size_t>(i)][static_cast<size_t>(i)] = std::sqrt(s);
      else
        c[static_cast<size_t>(i)][static_cast<size_t>(j)] = s / c[static_cast<size_t>(i)][static_cast<size_t>(i)];
    }
  // invert the triangular factor by back substitution
  std::vector<std::vector<double>> cinv(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int j = n - 1; j >= 0; --j) {
    cinv[static_cast<size_t>(j)][static_cast<size_t>(j)] = 1.0 / c[static_cast<size_t>(j)][static_cast<size_t>(j)];
    for (int i = j - 1; i >= 0; --i) {
      double s = 0.0;
      for (int k = i + 1; k <= j; ++k) s += c[static_cast<size_t>(i)][static_cast<size_t>(k)] * cinv[static_cast<size_t>(k)][static_cast<size_t>(j)];
      cinv[static_cast<size_t>(i)][static_cast<size_t>(j)] = -s / c[static_cast<size_t>(i)][static_cast<size_t>(i)];
    }
  }
  std::vector<std::vector<std::vector<double>>> out;
  for (const auto& X : w.Xop) {
    std::vector<std::vector<double>> m(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
    // C · X · C^-1
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
          double xk = 0.0;
          for (int l = 0; l < n; ++l)
            xk += X.at(k, l).re().to_double() * cinv[static_cast<size_t>(l)][static_cast<size_t>(j)];
          s += c[static_cast<size_t>(i)][static_cast<size_t>(k)] * xk;
        }
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
      }
    out.push_back(std::move(m));
  }
  return out;
}

Rational witness_norm_bound(const GNSWitness& w, int i) {
  Matrix m = w.Xadj[static_cast<size_t>(i)] * w.Xop[static_cast<size_t>(i)];
  Rational best(0);
  for (int r = 0; r < m.rows(); ++r) {
    Rational row(0);
    for (int c = 0; c < m.cols(); ++c) row += m.at(r, c).abs_bound();
    if (row > best) best = row;
  }
  return Rational::sqrt_upper_bound(best);
}

std::vector<ScaledWitness> bounded_family(const IdealPresentation& I, int d_max) {
  std::vector<ScaledWitness> out;
  for (int d = 1; d <= d_max; ++d) {
    ScaledWitness sw;
    sw.witness = build_witness(I, d);
    Rational s(0);
    for (int i = 0; i < sw.witness.g; ++i) {
      Rational b = witness_norm_bound(sw.witness, i);
      if (b > s) s = b;
    }
    if (s.is_zero() || s < Rational(1)) s = Rational(1);
    sw.scale = Rational(1) / s;
    Scalar lambda{sw.scale};
    for (auto& X : sw.witness.Xop) X = X.scaled(lambda);
    for (auto& X : sw.witness.Xadj) X = X.scaled(lambda);
    Rational post(0);
    for (int i = 0; i < sw.witness.g; ++i) {
      Rational b = witness_norm_bound(sw.witness, i);
      if (b > post) post = b;
    }
    sw.norm_bound = post;
    out.push_back(std::move(sw));
  }
  return out;
}

}  // namespace freestar
