#include "freestar/quotients.hpp"

namespace freestar {

Matrix FiniteQuotient::left_mult_poly(const Polynomial& p) const {
  Matrix out(dim, dim);
  for (const auto& [w, c] : p.terms()) {
    Matrix m = Matrix::identity(dim);
    for (const auto& l : w.letters()) m = m * left_mult(l);
    out += m.scaled(c);
  }
  return out;
}

FiniteQuotient regular_representation(const GroebnerBasis& gb) {
  CodimResult cr = finite_codimension(gb);
  if (cr.verdict != CodimVerdict::finite || !cr.codim)
    throw PreconditionError("regular representation needs certified finite codimension");
  if (gb.collapsed()) throw PreconditionError("regular representation of an improper ideal");

  FiniteQuotient Q;
  Q.g = gb.g();
  Q.field = gb.field();
  // longest standard word is shorter than the total count
  int bound = static_cast<int>(*cr.codim);
  Q.basis = standard_monomials(gb, bound);
  Q.dim = static_cast<int>(Q.basis.size());
  if (static_cast<long long>(Q.dim) != *cr.codim)
    throw std::logic_error("standard monomial count disagrees with the automaton");
  for (size_t k = 0; k < Q.basis.size(); ++k) Q.index.emplace(Q.basis[k], static_cast<int>(k));

  for (bool st : {false, true})
    for (int i = 1; i <= Q.g; ++i) {
      Matrix m(Q.dim, Q.dim);
      for (int j = 0; j < Q.dim; ++j) {
        Word lw = Q.basis[static_cast<size_t>(j)].prepend(Letter(static_cast<uint32_t>(i), st));
        Polynomial nf = gb.reduce(Polynomial::monomial(Q.g, Q.field, lw));
        for (const auto& [w, c] : nf.terms()) m.at(Q.index.at(w), j) = c;
      }
      Q.letter_action.push_back(std::move(m));
    }
  // letter_action was filled x1..xg then x1*..xg*
  return Q;
}

FiniteQuotient quotient_from_left_basis(const std::vector<Polynomial>& left_basis, int D) {
  if (left_basis.empty()) throw PreconditionError("empty left-ideal basis");
  int g = left_basis.front().g();
  FieldMode field = left_basis.front().field();
  PolyEchelon span;
  for (const auto& p : left_basis) {
    if (p.degree() > D) throw PreconditionError("left-ideal basis element above the degree bound");
    span.insert(p);
  }
  std::map<Word, bool, WordLess> pivot;
  for (const auto& row : span.basis()) pivot[leading_term(row).first] = true;
  if (pivot.count(Word::one()))
    throw PreconditionError("left ideal contains 1");

  FiniteQuotient Q;
  Q.g = g;
  Q.field = field;
  // non-pivot words of degree <= D
  std::vector<Word> level{Word::one()};
  std::vector<Word> all{Word::one()};
  for (int k = 1; k <= D; ++k) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (int idx = 1; idx <= g; ++idx)
        for (bool st : {false, true}) next.push_back(w.append(Letter(static_cast<uint32_t>(idx), st)));
    std::sort(next.begin(), next.end());
    for (const auto& w : next) all.push_back(w);
    level = std::move(next);
  }
  for (const auto& w : all)
    if (!pivot.count(w)) Q.basis.push_back(w);
  Q.dim = static_cast<int>(Q.basis.size());
  for (const auto& w : Q.basis)
    if (w.degree() >= D)
      throw PreconditionError(
          "quotient not stabilized below the bound; increase the truncation degree");
  for (size_t k = 0; k < Q.basis.size(); ++k) Q.index.emplace(Q.basis[k], static_cast<int>(k));

  for (bool st : {false, true})
    for (int i = 1; i <= g; ++i) {
      Matrix m(Q.dim, Q.dim);
      for (int j = 0; j < Q.dim; ++j) {
        Word lw = Q.basis[static_cast<size_t>(j)].prepend(Letter(static_cast<uint32_t>(i), st));
        Polynomial nf = span.reduce(Polynomial::monomial(g, field, lw));
        for (const auto& [w, c] : nf.terms()) {
          auto it = Q.index.find(w);
          if (it == Q.index.end())
            throw std::logic_error("left action left the quotient basis");
          m.at(it->second, j) = c;
        }
      }
      Q.letter_action.push_back(std::move(m));
    }
  return Q;
}

std::vector<Polynomial> z_ideal(const std::vector<Polynomial>& left_basis, int D) {
  PolyEchelon span;
  int g = 1;
  FieldMode field = FieldMode::Rational;
  if (!left_basis.empty()) {
    g = left_basis.front().g();
    field = left_basis.front().field();
  }
  for (const auto& p : left_basis) span.insert(p);

  // elements of the span of degree <= D-1 (echelon rows have degree =
  // pivot degree, so the low-degree slice is spanned by the low-pivot rows)
  std::vector<Polynomial> low;
  for (const auto& row : span.basis())
    if (row.degree() <= D - 1) low.push_back(row);
  if (low.empty()) return {};

  // letters of both kinds
  std::vector<Word> letters;
  for (int idx = 1; idx <= g; ++idx)
    for (bool st : {false, true}) letters.push_back(Word::letter(static_cast<uint32_t>(idx), st));

  // residues of b_k·l modulo the span; theta = sum t_k b_k is in Z iff all
  // residues cancel
  std::vector<Polynomial> residues;  // rows: per (letter, k)
  for (const auto& l : letters)
    for (const auto& b : low) residues.push_back(span.reduce(word_times(Word::one(), b, l)));

  // collect the support of all residues into columns
  std::map<Word, int, WordLess> col;
  for (const auto& r : residues)
    for (const auto& [w, c] : r.terms())
      if (!col.count(w)) {
        int next = static_cast<int>(col.size());
        col.emplace(w, next);
      }
  size_t m = low.size(), nl = letters.size();
  Matrix constraints(static_cast<int>(col.size() * nl), static_cast<int>(m));
  for (size_t li = 0; li < nl; ++li)
    for (size_t k = 0; k < m; ++k) {
      const Polynomial& r = residues[li * m + k];
      for (const auto& [w, c] : r.terms())
        constraints.at(static_cast<int>(li * col.size()) + col.at(w), static_cast<int>(k)) = c;
    }

  PolyEchelon out;
  for (const auto& t : kernel_basis(constraints)) {
    Polynomial theta(g, field);
    for (size_t k = 0; k < m; ++k) theta += low[k].scaled(t[k]);
    out.insert(std::move(theta));
  }
  return out.basis();
}

bool hat_member(const Polynomial& p, const FiniteQuotient& Q) {
  if (p.g() != Q.g || p.field() != Q.field)
    throw PreconditionError("polynomial/quotient mismatch");
  return det(Q.left_mult_poly(p)).is_zero();
}

Polynomial toeplitz_canon(const Polynomial& p) {
  if (p.g() != 1) throw PreconditionError("Toeplitz canonical form needs one variable");
  // single confluent rule x'x -> 1
  Polynomial rel = Polynomial::constant(1, p.field(), Scalar(1));
  rel.add_term(Word::letter(1, true).concat(Word::letter(1, false)), Scalar(-1));
  IdealPresentation I = IdealPresentation::from_generators({rel});
  GroebnerBasis gb = complete(I, std::max(2, p.degree()));
  return gb.reduce(p);
}

QWeylSystem make_qweyl(const Rational& q, int D) {
  if (!(Rational(0) < q && q < Rational(1)))
    throw PreconditionError("q must satisfy 0 < q < 1");
  QWeylSystem S;
  S.q = q;
  FieldMode field = FieldMode::Rational;
  Word a = QWeylSystem::letter_a(false), as = QWeylSystem::letter_a(true);
  Word x = QWeylSystem::letter_x(false), xs = QWeylSystem::letter_x(true);

  Polynomial rel1(2, field);  // a*a - q·aa*
  rel1.add_term(as.concat(a), Scalar(1));
  rel1.add_term(a.concat(as), Scalar(-Rational(q)));
  Polynomial rel2(2, field);  // xx* + aa* - 1
  rel2.add_term(x.concat(xs), Scalar(1));
  rel2.add_term(a.concat(as), Scalar(1));
  rel2.add_term(Word::one(), Scalar(-1));

  S.presentation = IdealPresentation::from_generators(star_ideal_generators({rel1, rel2}));
  S.gb = complete(S.presentation, D);
  return S;
}

Polynomial qweyl_canon(const Polynomial& p, const QWeylSystem& S) {
  if (p.g() != 2) throw PreconditionError("q-system polynomials use two variables");
  if (!S.gb.complete() && p.degree() > S.gb.completion_degree())
    throw PreconditionError("degree beyond the system's certified bound");
  return S.gb.reduce(p);
}

QWeylReport verify_qweyl_identities(const QWeylSystem& S, int m_max,
                                    const std::vector<Rational>& k_values) {
  if (m_max > 6) throw PreconditionError("m_max beyond desk scale");
  QWeylReport rep;
  FieldMode field = FieldMode::Rational;
  Word a = QWeylSystem::letter_a(false), as = QWeylSystem::letter_a(true);
  Word x = QWeylSystem::letter_x(false), xs = QWeylSystem::letter_x(true);
  auto mono = [&](const Word& w) { return Polynomial::monomial(2, field, w); };
  Polynomial aas = mono(a.concat(as));   // aa*
  Polynomial asa = mono(as.concat(a));   // a*a
  Polynomial xx = mono(x.concat(xs));    // xx*

  // k(k - aa*) = (k - aa*)^2 + a(k - a*a)a*, expanded in the free algebra
  rep.k_identity_ok = true;
  for (const auto& kv : k_values) {
    Polynomial k = Polynomial::constant(2, field, Scalar(kv));
    Polynomial lhs = k * (k - aas);
    Polynomial rhs = (k - aas) * (k - aas) + mono(a) * (k - asa) * mono(as);
    if (lhs != rhs) { rep.k_identity_ok = false; break; }
  }

  // (a*)^m a^m = q^m - sum q^{m-l} (a*)^l xx* a^l  and
  // a^m (a*)^m = 1 - sum a^l xx* (a*)^l, under reduction
  rep.power_identities_ok = true;
  for (int m = 1; m <= m_max && rep.power_identities_ok; ++m) {
    Word am = Word::one(), asm_ = Word::one();
    for (int i = 0; i < m; ++i) {
      am = am.concat(a);
      asm_ = asm_.concat(as);
    }
    Polynomial lhs1 = mono(asm_.concat(am));
    Polynomial rhs1 = Polynomial::constant(2, field, Scalar(Rational::power_of(1, 0)));
    {
      Rational qm(1);
      for (int i = 0; i < m; ++i) qm *= S.q;
      rhs1 = Polynomial::constant(2, field, Scalar(qm));
      for (int l = 0; l < m; ++l) {
        Rational qc(1);
        for (int i = 0; i < m - l; ++i) qc *= S.q;
        Word al = Word::one(), asl = Word::one();
        for (int i = 0; i < l; ++i) {
          al = al.concat(a);
          asl = asl.concat(as);
        }
        rhs1 -= mono(asl.concat(x).concat(xs).concat(al)).scaled(Scalar(qc));
      }
    }
    Polynomial lhs2 = mono(am.concat(asm_));
    Polynomial rhs2 = Polynomial::constant(2, field, Scalar(1));
    for (int l = 0; l < m; ++l) {
      Word al = Word::one(), asl = Word::one();
      for (int i = 0; i < l; ++i) {
        al = al.concat(a);
        asl = asl.concat(as);
      }
      rhs2 -= mono(al.concat(x).concat(xs).concat(asl));
    }
    if (!qweyl_canon(lhs1 - rhs1, S).is_zero()) rep.power_identities_ok = false;
    if (!qweyl_canon(lhs2 - rhs2, S).is_zero()) rep.power_identities_ok = false;
  }
  return rep;
}

}  // namespace freestar
