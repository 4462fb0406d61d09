#ifndef FREESTAR_REPVAR_HPP
#define FREESTAR_REPVAR_HPP

#include <optional>
#include <vector>

#include "freestar/matrix.hpp"
#include "freestar/poly.hpp"

namespace freestar {

// g square matrices over the exact field; the adjoint of X_i is implicitly
// the conjugate transpose (never stored).
struct MatrixTuple {
  int n = 1;
  int g = 1;
  FieldMode field = FieldMode::Rational;
  std::vector<Matrix> X;
};

// The *-homomorphic evaluation substituting X_j for x_j and X_j^H for x_j*.
Matrix evaluate_at(const Polynomial& p, const MatrixTuple& X);
Matrix evaluate_word_at(const Word& w, const MatrixTuple& X);

enum class ZeroClass { hard, soft_only, nonzero };

// hard if p(X) = 0, soft_only if only det p(X) = 0, else nonzero.
ZeroClass zero_class(const Polynomial& p, const MatrixTuple& X);

// Canonical echelonized basis of {p : deg p <= D, p(X) = 0 for all X in S}.
std::vector<Polynomial> vanishing_ideal(const std::vector<MatrixTuple>& S, int D);

// Same for {p : deg p <= D, p(X)v = 0}.
std::vector<Polynomial> left_vanishing_ideal(const MatrixTuple& X,
                                             const std::vector<Scalar>& v, int D);

enum class CommutantLabel { reducible, full_real, complex_type, quaternion_type, full_complex };

struct CommutantType {
  int commutant_dim = 0;
  CommutantLabel label = CommutantLabel::reducible;
  int algebra_dim = 0;            // dim of the unital algebra of {X_i, X_i^H}
  int hermitian_commutant_dim = 0;
  // index of a standard basis vector generating a proper invariant
  // subspace, when the cyclic scan finds one
  std::optional<int> invariant_witness;
};

// Exact commutant solve plus irreducibility typing. Over R the tuple is
// irreducible iff the hermitian part of the commutant is one-dimensional
// (the projection onto an invariant subspace is a hermitian commutant
// element); commutant dimension 1/2/4 then labels R/C/H type. Over C,
// irreducible iff the commutant is the scalars.
CommutantType commutant_type(const MatrixTuple& X);

// For irreducible X, soft and hard vanishing coincide iff the
// generated algebra is a division algebra. Errors on reducible input.
bool soft_equals_hard(const MatrixTuple& X);

struct SoftCheckEntry {
  int rep_index = 0;
  bool is_soft_zero = false;
  bool soft_equals_hard_holds = false;  // soft set matches hard set on this rep
  bool hard_zero = false;               // p(X) = 0, not merely singular
};

struct SoftCheckReport {
  std::vector<SoftCheckEntry> entries;
  bool division_image_everywhere = true;
  bool soft_zeros_are_hard = true;
};

// Checks the soft-zero two-sidedness conditions on a user-supplied finite
// sample of irreducible representations.
SoftCheckReport soft_condition_check(const Polynomial& p,
                                     const std::vector<MatrixTuple>& reps);

// Basis of the unital algebra generated by {X_i, X_i^H}, by span growth.
std::vector<Matrix> generated_algebra_basis(const MatrixTuple& X);

}  // namespace freestar

#endif
