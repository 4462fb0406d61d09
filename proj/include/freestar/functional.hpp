#ifndef FREESTAR_FUNCTIONAL_HPP
#define FREESTAR_FUNCTIONAL_HPP

#include <map>
#include <memory>
#include <vector>

#include "freestar/groebner.hpp"
#include "freestar/matrix.hpp"

namespace freestar {

namespace detail {
// Internal: an entry asked for a constant not yet assigned by the search.
struct StageIncompleteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
}  // namespace detail

// How the positive constants c_d are found. DoublingScan walks the
// canonical candidate order 2^0, 2^1, ..., 2^-1, 2^-2, ... linearly;
// BracketBinary brackets the upward range and bisects, then verifies
// canonicality — both return the identical canonical constants.
// PowersOfThree changes the candidate values themselves (3^k) and exists to
// test that the functional's kernel does not depend on the choice.
enum class CSearchPolicy { DoublingScan, BracketBinary, PowersOfThree };

struct MomentMatrix {
  std::vector<Word> words;
  Matrix entries;  // hermitian, entry(u,v) = L(star(u)·v)
};

// The positive hermitian functional of the moment construction:
// L = 1/2·L~ + 1/2·conj(L~ ∘ star), where L~ vanishes on the ideal and
// takes the value c_d on the degree-2d square classes of the quotient.
class MomentFunctional {
 public:
  const GroebnerBasis& gb() const { return *gb_; }
  int max_degree() const { return D_; }
  int max_eval_degree() const { return 2 * D_; }
  const std::vector<Rational>& constants() const { return c_; }

  // L(p); errors when deg(p) exceeds the evaluation bound.
  Scalar evaluate(const Polynomial& p) const;

  // L~ of a single standard word: c_d on a square class, else 0.
  Scalar base_value(const Word& standard_word) const;

  // L(star(u)·v) as a linear form over the constants: class index ->
  // coefficient. The expensive reductions are shared with evaluate()
  // through the same memo; the constant search substitutes candidates into
  // these forms instead of re-deriving entries.
  std::map<int, Scalar> form_of_product(const Word& u, const Word& v) const;

  const std::vector<std::vector<Word>>& standard_by_degree() const { return std_by_deg_; }
  const std::map<Word, int, WordLess>& square_classes() const { return square_class_; }

  friend MomentFunctional build_functional(const GroebnerBasis& gb, int D,
                                           CSearchPolicy policy);
  friend MomentFunctional materialize_functional(const GroebnerBasis& gb, int D,
                                                 std::vector<Rational> constants);

 private:
  Scalar tilde(const Polynomial& p) const;
  // Canonical form of a word, memoized; the memo is filled lazily and is
  // independent of the constants.
  const Polynomial& reduced(const Word& w) const;

  // Standard words, square classes and exactness checks shared by the
  // search and the final functional.
  static MomentFunctional skeleton(const GroebnerBasis& gb, int D);

  std::shared_ptr<const GroebnerBasis> gb_;
  int D_ = 0;
  std::vector<Rational> c_;
  std::map<Word, int, WordLess> square_class_;  // standard word -> degree index
  std::vector<std::vector<Word>> std_by_deg_;   // standard words, degrees 0..2D
  mutable std::map<Word, Polynomial, WordLess> nf_cache_;
};

// Constructs L for the ideal of gb with constants c_0..c_D chosen by a
// deterministic exact-PD search (a Schur-complement argument guarantees a
// solution in the analytic case). Requires the exactness guarantee of
// reduce up to degree 2D and a proper ideal.
MomentFunctional build_functional(const GroebnerBasis& gb, int D,
                                  CSearchPolicy policy = CSearchPolicy::DoublingScan);

// Assembles the functional with caller-supplied constants, bypassing the
// search. Testing hook (regression fixtures use deliberately bad values).
MomentFunctional materialize_functional(const GroebnerBasis& gb, int D,
                                        std::vector<Rational> constants);

inline Scalar evaluate_functional(const MomentFunctional& L, const Polynomial& p) {
  return L.evaluate(p);
}

// Hermitian matrix of L(star(u)·v); every word must be standard.
MomentMatrix moment_matrix(const MomentFunctional& L, const std::vector<Word>& words);

bool is_positive_definite(const MomentMatrix& m);

struct FunctionalReport {
  bool hermitian_ok = false;
  bool vanishes_on_ideal = false;
  bool moment_positive_definite = false;
  std::vector<Scalar> minors;
  bool ok() const { return hermitian_ok && vanishes_on_ideal && moment_positive_definite; }
};

// Certifies the kernel characterization restricted to degree <= d:
// (i) hermitian symmetry on the word basis, (ii) vanishing on a spanning
// set of the ideal up to degree 2d, (iii) exact positive definiteness of
// the moment matrix over the standard monomials of degree <= d.
FunctionalReport verify_functional(const MomentFunctional& L, int d);

}  // namespace freestar

#endif
