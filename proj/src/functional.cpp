#include "freestar/functional.hpp"

#include <algorithm>

namespace freestar {

const Polynomial& MomentFunctional::reduced(const Word& w) const {
  auto hit = nf_cache_.find(w);
  if (hit != nf_cache_.end()) return hit->second;
  Polynomial nf = gb_->reduce(Polynomial::monomial(gb_->g(), gb_->field(), w));
  return nf_cache_.emplace(w, std::move(nf)).first->second;
}

Scalar MomentFunctional::base_value(const Word& w) const {
  auto it = square_class_.find(w);
  if (it == square_class_.end()) return Scalar(0);
  int e = it->second;
  if (e >= static_cast<int>(c_.size()))
    throw detail::StageIncompleteError("square class beyond assigned constants");
  return Scalar(c_[static_cast<size_t>(e)]);
}

Scalar MomentFunctional::tilde(const Polynomial& p) const {
  Scalar total(0);
  for (const auto& [w, coeff] : p.terms()) {
    const Polynomial& nf = reduced(w);
    Scalar value(0);
    for (const auto& [sw, sc] : nf.terms()) value += sc * base_value(sw);
    total += coeff * value;
  }
  return total;
}

Scalar MomentFunctional::evaluate(const Polynomial& p) const {
  if (p.degree() > max_eval_degree())
    throw PreconditionError("functional evaluation beyond the degree bound");
  Scalar half(Rational(1, 2));
  return half * tilde(p) + half * tilde(involution(p)).conj();
}

std::map<int, Scalar> MomentFunctional::form_of_product(const Word& u, const Word& v) const {
  std::map<int, Scalar> out;
  Scalar half(Rational(1, 2));
  auto add = [&out](int idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.emplace(idx, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  Word w = u.star().concat(v);
  for (const auto& [sw, sc] : reduced(w).terms()) {
    auto it = square_class_.find(sw);
    if (it != square_class_.end()) add(it->second, half * sc);
  }
  Word ws = w.star();
  for (const auto& [sw, sc] : reduced(ws).terms()) {
    auto it = square_class_.find(sw);
    if (it != square_class_.end()) add(it->second, (half * sc).conj());
  }
  return out;
}

MomentFunctional MomentFunctional::skeleton(const GroebnerBasis& gb, int D) {
  if (gb.collapsed()) throw PreconditionError("functional over an improper ideal");
  if (!gb.complete() && !(gb.homogeneous() && gb.completion_degree() >= 2 * D))
    throw PreconditionError(
        "functional requires exact reduction up to twice the degree bound");

  MomentFunctional L;
  L.gb_ = std::make_shared<GroebnerBasis>(gb);
  L.D_ = D;
  L.std_by_deg_.assign(static_cast<size_t>(2 * D + 1), {});
  for (const auto& w : standard_monomials(gb, 2 * D))
    L.std_by_deg_[static_cast<size_t>(w.degree())].push_back(w);

  // Square classes of the quotient: the leading word of reduce(star(v)·v)
  // for standard v, tagged with the least degree producing it. For
  // homogeneous ideals this is exactly "m is a square of degree 2d"; the
  // reduction step keeps the class meaningful when star(v)·v itself is not
  // a standard word.
  for (int e = 0; e <= D; ++e) {
    for (const auto& v : L.std_by_deg_[static_cast<size_t>(e)]) {
      Polynomial sq = gb.reduce(
          Polynomial::monomial(gb.g(), gb.field(), v.star().concat(v)));
      if (sq.is_zero()) continue;
      Word w = leading_term(sq).first;
      auto [it, fresh] = L.square_class_.emplace(w, e);
      if (!fresh && e < it->second) it->second = e;
    }
  }
  return L;
}

namespace {

constexpr int kExpUp = 40;
constexpr int kExpDown = 40;
constexpr int kSearchCap = 20000;
constexpr int kNumCandidates = kExpUp + kExpDown + 1;

// Candidate exponents in canonical order: 0, 1, ..., up, then -1, ..., -down.
int exponent_at(int pos) { return pos <= kExpUp ? pos : -(pos - kExpUp); }

using LinearForm = std::map<int, Scalar>;

// The constants are found stage by stage; within stage d the full moment
// matrix is [[M_prev, B], [B^H, A]] with M_prev already certified positive
// definite, so positive definiteness is equivalent to that of the Schur
// complement S = A - B^H·M_prev^-1·B. Only A can reference c_d (for
// homogeneous ideals exactly on square-class diagonal hits), which makes S
// affine in the candidate: S = S0 + c_d·Dmat.
class Searcher {
 public:
  Searcher(MomentFunctional& L, std::vector<Rational>& c, long base, bool bracket)
      : L_(L), c_(c), base_(base), bracket_(bracket) {
    mats_.emplace_back(0, 0);
  }

  bool solve(int d, int D) {
    if (d > D) return true;
    Stage st = setup(d);
    int pos = first_passing(d, st);
    while (pos >= 0) {
      push_numeric(d, st);
      if (solve(d + 1, D)) return true;
      mats_.pop_back();
      prev_words_.resize(prev_words_.size() - st.words.size());
      pos = next_passing(d, st, pos + 1);
    }
    c_.resize(static_cast<size_t>(d));
    return false;
  }

 private:
  struct Stage {
    std::vector<Word> words;  // degree-d standard words
    bool fast = false;        // Schur path applies
    Matrix B;                 // cross block, numeric (fast path)
    Matrix S0;                // fixed part of the Schur complement
    Matrix Dmat;              // coefficient of c_d
    bool monotone = false;    // Dmat diagonal with nonnegative entries
    // general path: forms of the cross and diagonal blocks
    std::vector<std::vector<LinearForm>> bforms, aforms;
  };

  Scalar eval_form(const LinearForm& f, int stage) const {
    Scalar out(0);
    for (const auto& [idx, coeff] : f) {
      if (idx > stage)
        throw PreconditionError("functional: entry depends on a constant beyond its stage");
      out += coeff * Scalar(c_[static_cast<size_t>(idx)]);
    }
    return out;
  }

  Stage setup(int d) {
    Stage st;
    st.words = L_.standard_by_degree()[static_cast<size_t>(d)];
    int np = static_cast<int>(prev_words_.size());
    int nd = static_cast<int>(st.words.size());

    st.bforms.assign(static_cast<size_t>(np), std::vector<LinearForm>(static_cast<size_t>(nd)));
    st.aforms.assign(static_cast<size_t>(nd), std::vector<LinearForm>(static_cast<size_t>(nd)));
    bool fast = true;
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < nd; ++j) {
        LinearForm f = L_.form_of_product(prev_words_[static_cast<size_t>(i)],
                                          st.words[static_cast<size_t>(j)]);
        if (!f.empty() && f.rbegin()->first >= d) fast = false;
        st.bforms[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(f);
      }
    for (int i = 0; i < nd; ++i)
      for (int j = 0; j < nd; ++j) {
        LinearForm f = L_.form_of_product(st.words[static_cast<size_t>(i)],
                                          st.words[static_cast<size_t>(j)]);
        if (!f.empty() && f.rbegin()->first > d) fast = false;
        st.aforms[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(f);
      }
    st.fast = fast;
    if (!fast) return st;

    // numeric cross block; split the diagonal block into fixed + c_d parts
    c_.resize(static_cast<size_t>(d));  // guard: only indices < d may appear in B
    st.B = Matrix(np, nd);
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < nd; ++j)
        st.B.at(i, j) = eval_form(st.bforms[static_cast<size_t>(i)][static_cast<size_t>(j)], d - 1);
    Matrix afix(nd, nd);
    st.Dmat = Matrix(nd, nd);
    for (int i = 0; i < nd; ++i)
      for (int j = 0; j < nd; ++j) {
        LinearForm f = st.aforms[static_cast<size_t>(i)][static_cast<size_t>(j)];
        auto top = f.find(d);
        if (top != f.end()) {
          st.Dmat.at(i, j) = top->second;
          f.erase(top);
        }
        afix.at(i, j) = eval_form(f, d - 1);
      }
    st.S0 = afix;
    if (np > 0) {
      Matrix W = freestar::solve(mats_.back(), st.B);
      st.S0 -= st.B.conj_transpose() * W;
    }
    st.monotone = true;
    for (int i = 0; i < nd && st.monotone; ++i)
      for (int j = 0; j < nd; ++j) {
        const Scalar& x = st.Dmat.at(i, j);
        if (i == j ? (!x.is_real() || x.re().sign() < 0) : !x.is_zero()) {
          st.monotone = false;
          break;
        }
      }
    return st;
  }

  bool stage_try(int d, const Stage& st, int pos) {
    if (++nodes_ > kSearchCap)
      throw PreconditionError("functional constant search exhausted");
    c_.resize(static_cast<size_t>(d) + 1);
    c_[static_cast<size_t>(d)] = Rational::power_of(base_, exponent_at(pos));
    if (st.fast) {
      Matrix S = st.S0 + st.Dmat.scaled(Scalar(c_[static_cast<size_t>(d)]));
      return is_positive_definite(S);
    }
    // assemble the full stage matrix from the forms
    int np = static_cast<int>(prev_words_.size());
    int nd = static_cast<int>(st.words.size());
    Matrix m(np + nd, np + nd);
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j) m.at(i, j) = mats_.back().at(i, j);
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < nd; ++j) {
        Scalar x = eval_form(st.bforms[static_cast<size_t>(i)][static_cast<size_t>(j)], d);
        m.at(i, np + j) = x;
        m.at(np + j, i) = x.conj();
      }
    for (int i = 0; i < nd; ++i)
      for (int j = 0; j < nd; ++j)
        m.at(np + i, np + j) = eval_form(st.aforms[static_cast<size_t>(i)][static_cast<size_t>(j)], d);
    return is_positive_definite(m);
  }

  // First candidate position passing stage d in canonical order. In the
  // monotone case the passing set within the upward range is upward-closed
  // (S grows by a PSD multiple of Dmat), so bracketing plus bisection finds
  // the same boundary the linear scan would; the two policies differ in
  // their probe sequences only.
  int first_passing(int d, const Stage& st) {
    if (!st.monotone) return next_passing(d, st, 0);
    if (stage_try(d, st, 0)) return 0;
    int last_fail = 0, found = -1;
    // DoublingScan probes 1, 2, 4, 8, ...; BracketBinary probes 1, 3, 7,
    // 15, ... — distinct tactics, same boundary by monotonicity.
    int p = 1;
    while (true) {
      if (stage_try(d, st, p)) { found = p; break; }
      last_fail = p;
      if (p == kExpUp) break;
      p = std::min(bracket_ ? p * 2 + 1 : p * 2, kExpUp);
    }
    if (found < 0) return -1;  // monotone: smaller candidates fail as well
    while (last_fail + 1 < found) {
      int mid = (last_fail + found) / 2;
      if (stage_try(d, st, mid)) found = mid; else last_fail = mid;
    }
    stage_try(d, st, found);  // rematerialize the winner
    return found;
  }

  int next_passing(int d, const Stage& st, int from) {
    for (int pos = from; pos < kNumCandidates; ++pos)
      if (stage_try(d, st, pos)) return pos;
    return -1;
  }

  void push_numeric(int d, const Stage& st) {
    int np = static_cast<int>(prev_words_.size());
    int nd = static_cast<int>(st.words.size());
    Matrix m(np + nd, np + nd);
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j) m.at(i, j) = mats_.back().at(i, j);
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < nd; ++j) {
        Scalar x = eval_form(st.bforms[static_cast<size_t>(i)][static_cast<size_t>(j)], d);
        m.at(i, np + j) = x;
        m.at(np + j, i) = x.conj();
      }
    for (int i = 0; i < nd; ++i)
      for (int j = 0; j < nd; ++j)
        m.at(np + i, np + j) = eval_form(st.aforms[static_cast<size_t>(i)][static_cast<size_t>(j)], d);
    mats_.push_back(std::move(m));
    for (const auto& w : st.words) prev_words_.push_back(w);
  }

  MomentFunctional& L_;
  std::vector<Rational>& c_;
  long base_;
  bool bracket_;
  std::vector<Word> prev_words_;
  std::vector<Matrix> mats_;  // numeric moment matrices of the chosen prefix
  int nodes_ = 0;
};

}  // namespace

MomentFunctional build_functional(const GroebnerBasis& gb, int D, CSearchPolicy policy) {
  MomentFunctional L = MomentFunctional::skeleton(gb, D);
  Searcher s(L, L.c_, policy == CSearchPolicy::PowersOfThree ? 3L : 2L,
             policy == CSearchPolicy::BracketBinary);
  if (!s.solve(0, D))
    throw PreconditionError("no positive-definite constant assignment found");
  return L;
}

MomentFunctional materialize_functional(const GroebnerBasis& gb, int D,
                                        std::vector<Rational> constants) {
  if (static_cast<int>(constants.size()) != D + 1)
    throw PreconditionError("materialize_functional: need D+1 constants");
  MomentFunctional L = MomentFunctional::skeleton(gb, D);
  L.c_ = std::move(constants);
  return L;
}

MomentMatrix moment_matrix(const MomentFunctional& L, const std::vector<Word>& words) {
  for (const auto& w : words)
    if (!L.gb().is_standard(w))
      throw PreconditionError("moment matrix over a non-standard word");
  MomentMatrix out;
  out.words = words;
  int n = static_cast<int>(words.size());
  out.entries = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.entries.at(i, j) = L.evaluate(Polynomial::monomial(
          L.gb().g(), L.gb().field(),
          words[static_cast<size_t>(i)].star().concat(words[static_cast<size_t>(j)])));
  return out;
}

bool is_positive_definite(const MomentMatrix& m) { return is_positive_definite(m.entries); }

FunctionalReport verify_functional(const MomentFunctional& L, int d) {
  if (2 * d > L.max_eval_degree())
    throw PreconditionError("verification degree beyond the evaluation bound");
  const GroebnerBasis& gb = L.gb();
  FunctionalReport rep;

  // all words of degree <= 2d, by level
  std::vector<Word> all{Word::one()};
  {
    std::vector<Word> level{Word::one()};
    for (int k = 1; k <= 2 * d; ++k) {
      std::vector<Word> next;
      for (const auto& w : level)
        for (int idx = 1; idx <= gb.g(); ++idx)
          for (bool st : {false, true})
            next.push_back(w.append(Letter(static_cast<uint32_t>(idx), st)));
      for (const auto& w : next) all.push_back(w);
      level = std::move(next);
    }
  }

  // (i) hermitian symmetry on the word basis
  rep.hermitian_ok = true;
  for (const auto& w : all) {
    Polynomial pw = Polynomial::monomial(gb.g(), gb.field(), w);
    if (L.evaluate(involution(pw)) != L.evaluate(pw).conj()) {
      rep.hermitian_ok = false;
      break;
    }
  }

  // (ii) vanishing on the spanning set u·rule·v of the ideal up to 2d
  rep.vanishes_on_ideal = true;
  for (const auto& r : gb.rules()) {
    Polynomial rp = r.poly();
    for (const auto& u : all) {
      for (const auto& v : all) {
        if (u.degree() + rp.degree() + v.degree() > 2 * d) continue;
        if (!L.evaluate(word_times(u, rp, v)).is_zero()) {
          rep.vanishes_on_ideal = false;
          break;
        }
      }
      if (!rep.vanishes_on_ideal) break;
    }
    if (!rep.vanishes_on_ideal) break;
  }

  // (iii) exact PD of the moment matrix over standard monomials of degree <= d
  MomentMatrix mm = moment_matrix(L, standard_monomials(gb, d));
  rep.minors = leading_principal_minors(mm.entries);
  rep.moment_positive_definite = !rep.minors.empty() || mm.words.empty();
  for (const auto& m : rep.minors) {
    if (!m.is_real() || m.re().sign() <= 0) {
      rep.moment_positive_definite = false;
      break;
    }
  }
  return rep;
}

}  // namespace freestar
