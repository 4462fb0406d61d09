#ifndef FREESTAR_GNS_HPP
#define FREESTAR_GNS_HPP

#include <vector>

#include "freestar/functional.hpp"

namespace freestar {

// Finite matrix model of the quotient by a homogeneous analytic *-ideal,
// exact through degree d: the span of classes [a·b] (a analytic of degree
// <= d, b of degree <= d) with the Gram inner product <[u],[v]> = L(v*·u).
// Xop are the coordinate matrices of left multiplication; Xadj their
// adjoints with respect to the Gram form, gram^-1 · Xop^H · gram. No
// orthonormalization is ever performed.
struct GNSWitness {
  int d = 0;
  int g = 1;
  FieldMode field = FieldMode::Rational;
  std::vector<Word> basis;
  Matrix gram;                   // hermitian positive definite
  std::vector<Matrix> Xop;       // g coordinate matrices
  std::vector<Matrix> Xadj;      // Gram-adjoints
  std::map<Word, std::vector<Scalar>, WordLess> class_coords;  // every spanning word
  GroebnerBasis gb;              // of the truncated ideal I^(d)
  MomentFunctional functional;

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<Scalar> coords_of(const Polynomial& p) const;
};

// I plus all analytic monomials of degree d+1, star-closed; agrees with I
// up to degree d.
IdealPresentation truncate_ideal(const IdealPresentation& I, int d);

GNSWitness build_witness(const IdealPresentation& I, int d,
                         CSearchPolicy policy = CSearchPolicy::DoublingScan);

// Evaluation substituting Xop for the letters and Xadj for their stars.
Matrix evaluate_witness(const Polynomial& p, const GNSWitness& w);
Matrix evaluate_with_adjoints(const Polynomial& p, const std::vector<Matrix>& Xop,
                              const std::vector<Matrix>& Xadj);

struct WitnessReport {
  bool generators_vanish = false;
  bool probes_separate = false;   // q(X)[1] = [q] != 0 for non-member probes
  bool adjoint_identity = false;  // G·Xop_i = Xadj_i^H·G
  bool ok() const { return generators_vanish && probes_separate && adjoint_identity; }
};

WitnessReport verify_witness(const GNSWitness& w, const IdealPresentation& I,
                             const std::vector<Polynomial>& probes);

struct ScaledWitness {
  GNSWitness witness;   // Xop/Xadj already scaled
  Rational scale;       // the multiplier 1/s_d applied to the operators
  Rational norm_bound;  // certified bound for the scaled operators (<= 1)
};

// Witnesses for d = 1..d_max, each scaled by the reciprocal of an exact
// operator-norm upper bound (square-root ceiling of the max row sum of
// |Xadj_i·Xop_i|); the desk-scale stand-in for the bounded direct sum.
std::vector<ScaledWitness> bounded_family(const IdealPresentation& I, int d_max);

// Exact upper bound for the Gram operator norm of component i.
Rational witness_norm_bound(const GNSWitness& w, int i);

// Display-only floating-point export: the operators conjugated into an
// orthonormal basis via a double-precision Cholesky factor of the Gram
// matrix, so that adjoints become (approximate) conjugate transposes.
// Carries no correctness contract; every exact guarantee lives in the
// coordinate matrices plus the Gram form.
std::vector<std::vector<std::vector<double>>> orthonormal_display(const GNSWitness& w);

}  // namespace freestar

#endif
