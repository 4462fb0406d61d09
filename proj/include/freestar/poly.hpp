#ifndef FREESTAR_POLY_HPP
#define FREESTAR_POLY_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "freestar/scalar.hpp"
#include "freestar/word.hpp"

namespace freestar {

// Raised on violated operation preconditions (the spec's "errors" clauses).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PolyClass { analytic, antianalytic, constant, mixed };

// Element of the free *-algebra on g variables: a finitely supported map
// Word -> Scalar. Zero coefficients are never stored; the term map is
// ordered by the monomial order, so iteration (and every output derived
// from it) is deterministic. degree(0) is the distinguished value -1,
// standing in for "minus infinity".
class Polynomial {
 public:
  using TermMap = std::map<Word, Scalar, WordLess>;

  Polynomial() = default;
  Polynomial(int g, FieldMode field) : g_(g), field_(field) {}

  static Polynomial zero(int g, FieldMode field) { return Polynomial(g, field); }
  static Polynomial constant(int g, FieldMode field, const Scalar& c) {
    Polynomial p(g, field);
    p.add_term(Word::one(), c);
    return p;
  }
  static Polynomial monomial(int g, FieldMode field, const Word& w, const Scalar& c = Scalar(1)) {
    Polynomial p(g, field);
    p.add_term(w, c);
    return p;
  }

  int g() const { return g_; }
  FieldMode field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }

  // -1 encodes degree of the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  Scalar coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    check_word(w);
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.g_ == b.g_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial scaled(const Scalar& c) const;

  void check_compatible(const Polynomial& o) const {
    if (g_ != o.g_ || field_ != o.field_)
      throw PreconditionError("polynomial operands have mismatched variable count or field");
  }

 private:
  void check_word(const Word& w) const {
    for (const auto& l : w.letters())
      if (l.index < 1 || static_cast<int>(l.index) > g_)
        throw PreconditionError("letter index out of range for variable count");
  }

  int g_ = 1;
  FieldMode field_ = FieldMode::Rational;
  TermMap terms_;
};

// Bilinear concatenation product; deg(pq) = deg p + deg q for nonzero inputs.
Polynomial multiply(const Polynomial& p, const Polynomial& q);
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

// The involution: coefficients conjugated, words reversed with flags flipped.
Polynomial involution(const Polynomial& p);

// The order-maximal term of a nonzero polynomial.
std::pair<Word, Scalar> leading_term(const Polynomial& p);

std::map<int, Polynomial> homogeneous_components(const Polynomial& p);
bool is_homogeneous(const Polynomial& p);

PolyClass classify(const Polynomial& p);

// Canonical representative modulo the span of word commutators: every word
// is replaced by the order-least word in its cyclic class. Tr(p(X)) is
// invariant under this map for every matrix tuple X.
Polynomial trace_normal_form(const Polynomial& p);

// Left/right multiplication by plain words.
Polynomial word_times(const Word& u, const Polynomial& p, const Word& v);

}  // namespace freestar

#endif
