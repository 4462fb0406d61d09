#ifndef FREESTAR_GROEBNER_HPP
#define FREESTAR_GROEBNER_HPP

#include <optional>
#include <vector>

#include "freestar/poly.hpp"

namespace freestar {

// A generating set together with structural flags. The flags are always
// recomputed from the generators, never trusted from input.
struct IdealPresentation {
  std::vector<Polynomial> generators;
  bool star_closed = false;
  bool homogeneous = false;
  bool analytic_generated = false;
  int g = 1;
  FieldMode field = FieldMode::Rational;

  static IdealPresentation from_generators(std::vector<Polynomial> gens);

  // The zero ideal; the one presentation allowed an empty generator list.
  static IdealPresentation trivial(int g, FieldMode field) {
    IdealPresentation out;
    out.g = g;
    out.field = field;
    out.star_closed = true;
    out.homogeneous = true;
    out.analytic_generated = true;
    return out;
  }
};

// P together with star(P), deduplicated up to scalar multiples; the
// two-sided ideal of the result is the *-ideal of P.
std::vector<Polynomial> star_ideal_generators(const std::vector<Polynomial>& P);

// One monic rewrite rule: poly = lead + tail, lead word maps to -tail.
struct Rule {
  Word lead;
  Polynomial tail;
  Polynomial poly() const {
    Polynomial p = tail;
    p.add_term(lead, Scalar(1));
    return p;
  }
};

enum class Membership { member, non_member, unknown_beyond_bound };

// Interreduced monic rewrite system truncated at completion_degree.
// complete = true iff the overlap completion reached a fixpoint with no
// obstruction discarded above the bound; for homogeneous ideals all
// questions about degree <= completion_degree stay exact regardless.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const std::vector<Rule>& rules() const { return rules_; }
  int completion_degree() const { return completion_degree_; }
  bool complete() const { return complete_; }
  bool homogeneous() const { return homogeneous_; }
  int g() const { return g_; }
  FieldMode field() const { return field_; }
  const std::vector<Word>& discarded_overlaps() const { return discarded_; }

  // True when some rule is the empty word, i.e. the ideal is everything.
  bool collapsed() const {
    return !rules_.empty() && rules_.front().lead.empty();
  }

  // One recorded rewrite: coeff · left · rules[rule] · right was subtracted.
  struct RewriteStep {
    Word left;
    int rule;
    Word right;
    Scalar coeff;
  };

  // Canonical form: no word of the result contains any rule's leading word
  // as a factor; idempotent, linear, degree-non-increasing.
  Polynomial reduce(Polynomial p) const { return reduce_tracked(std::move(p), nullptr); }

  // Optional cofactor tracking: p - result = sum of the recorded products.
  Polynomial reduce_tracked(Polynomial p, std::vector<RewriteStep>* steps) const;

  Membership member(const Polynomial& p) const;

  // Whether the reduction of polynomials of this degree is certified exact.
  bool exact_at_degree(int deg) const {
    return complete_ || (homogeneous_ && deg <= completion_degree_);
  }

  bool is_standard(const Word& w) const;

  friend GroebnerBasis complete(const IdealPresentation& ideal, int D);

 private:
  std::vector<Rule> rules_;  // sorted by leading word
  int completion_degree_ = 0;
  bool complete_ = false;
  bool homogeneous_ = false;
  int g_ = 1;
  FieldMode field_ = FieldMode::Rational;
  std::vector<Word> discarded_;
};

// Degree-truncated overlap completion into the reduced basis. Obstructions
// are processed in increasing overlap-word order (ties by rule age); the
// result is deterministic for fixed generators and D.
GroebnerBasis complete(const IdealPresentation& ideal, int D);

// All words of degree <= d containing no leading word as a factor, in
// ascending monomial order.
std::vector<Word> standard_monomials(const GroebnerBasis& gb, int d);

enum class CodimVerdict { finite, infinite, unknown };

struct CodimResult {
  CodimVerdict verdict = CodimVerdict::unknown;
  std::optional<long long> codim;
};

// Builds the automaton of factor-avoiding words (states = proper prefixes
// of leading words reached as longest live suffixes) and decides whether
// the accessible part is acyclic. Exact for complete bases; for truncated
// ones an acyclic automaton still forces finiteness (the computed rules are
// genuine ideal members) but the count is withheld.
CodimResult finite_codimension(const GroebnerBasis& gb);

struct SplitCheck {
  bool holds = false;
  std::vector<Polynomial> analytic_part;      // G
  std::vector<Polynomial> antianalytic_part;  // H*
};

// The analytic/antianalytic split of the reduced basis of a *-ideal with
// analytic generators. Errors when the presentation is not
// analytic-generated or a constant rule appears.
SplitCheck star_split_check(const GroebnerBasis& gb, const IdealPresentation& ideal);

}  // namespace freestar

#endif
