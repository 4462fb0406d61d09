#ifndef FREESTAR_QUOTIENTS_HPP
#define FREESTAR_QUOTIENTS_HPP

#include <map>
#include <vector>

#include "freestar/groebner.hpp"
#include "freestar/matrix.hpp"

namespace freestar {

// Finite-dimensional quotient with the action of each generator letter.
// Built either from a Groebner basis of finite codimension (two-sided case)
// or from an explicit degree-truncated left-ideal basis.
struct FiniteQuotient {
  std::vector<Word> basis;  // standard monomials / non-pivot words
  int dim = 0;
  int g = 1;
  FieldMode field = FieldMode::Rational;
  std::map<Word, int, WordLess> index;  // basis word -> position
  std::vector<Matrix> letter_action;    // 2g matrices: x1..xg, x1*..xg*

  const Matrix& left_mult(Letter l) const {
    return letter_action[static_cast<size_t>(l.starred ? g + static_cast<int>(l.index) - 1
                                                       : static_cast<int>(l.index) - 1)];
  }
  // Matrix of left multiplication by p on the quotient.
  Matrix left_mult_poly(const Polynomial& p) const;
};

// The left regular representation on A/I for finite-codimension gb.
FiniteQuotient regular_representation(const GroebnerBasis& gb);

// Quotient of the degree-<=D slice by the span of a left-ideal basis; every
// non-pivot word must have degree < D so that the letter action closes.
FiniteQuotient quotient_from_left_basis(const std::vector<Polynomial>& left_basis, int D);

// Degree-truncated largest two-sided subideal of a left ideal: elements of
// the span of degree <= D-1 whose right multiples by every letter stay in
// the span. Echelonized canonical basis.
std::vector<Polynomial> z_ideal(const std::vector<Polynomial>& left_basis, int D);

// Membership in the hat ideal: left multiplication by p on the quotient is
// singular.
bool hat_member(const Polynomial& p, const FiniteQuotient& Q);

// Canonical form modulo the isometry relation x'x -> 1 (one variable).
Polynomial toeplitz_canon(const Polynomial& p);

// The two-variable q-deformed system; letters a = x2, x = x1, so the
// rewriting happens along a*a -> q - q·xx* and aa* -> 1 - xx* exactly as in
// the canonical forms of the quotient, plus the derived rules completion
// finds (leading words a*xx* and axx*).
struct QWeylSystem {
  Rational q;
  GroebnerBasis gb;
  IdealPresentation presentation;

  static Word letter_a(bool starred) { return Word::letter(2, starred); }
  static Word letter_x(bool starred) { return Word::letter(1, starred); }
};

QWeylSystem make_qweyl(const Rational& q, int D);

// reduce(p, S.gb); exact modulo the ideal whenever the system is complete.
Polynomial qweyl_canon(const Polynomial& p, const QWeylSystem& S);

struct QWeylReport {
  bool k_identity_ok = false;       // free-algebra expansion, per k value
  bool power_identities_ok = false; // both m-power families reduce to 0
  bool ok() const { return k_identity_ok && power_identities_ok; }
};

QWeylReport verify_qweyl_identities(const QWeylSystem& S, int m_max,
                                    const std::vector<Rational>& k_values);

}  // namespace freestar

#endif
