#include "freestar/groebner.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace freestar {

namespace {

Polynomial monic(const Polynomial& p) {
  auto [lw, lc] = leading_term(p);
  return p.scaled(Scalar(1) / lc);
}

}  // namespace

IdealPresentation IdealPresentation::from_generators(std::vector<Polynomial> gens) {
  if (gens.empty()) throw PreconditionError("empty generator list");
  IdealPresentation out;
  out.g = gens.front().g();
  out.field = gens.front().field();
  for (const auto& p : gens) {
    if (p.is_zero()) throw PreconditionError("zero generator");
    p.check_compatible(gens.front());
  }
  out.generators = std::move(gens);

  std::vector<Polynomial> normalized, starred;
  for (const auto& p : out.generators) {
    normalized.push_back(monic(p));
    starred.push_back(monic(involution(p)));
  }
  auto in = [](const std::vector<Polynomial>& v, const Polynomial& p) {
    for (const auto& q : v)
      if (q == p) return true;
    return false;
  };
  out.star_closed = true;
  for (const auto& s : starred)
    if (!in(normalized, s)) { out.star_closed = false; break; }

  out.homogeneous = true;
  for (const auto& p : out.generators)
    if (!is_homogeneous(p)) { out.homogeneous = false; break; }

  out.analytic_generated = true;
  for (const auto& p : out.generators) {
    PolyClass c = classify(p);
    if (c == PolyClass::mixed) { out.analytic_generated = false; break; }
  }
  return out;
}

std::vector<Polynomial> star_ideal_generators(const std::vector<Polynomial>& P) {
  if (P.empty()) throw PreconditionError("empty generator list");
  std::vector<Polynomial> out;
  std::vector<Polynomial> keys;  // monic forms, for dedup up to scalar multiples
  auto push_unique = [&out, &keys](const Polynomial& p) {
    Polynomial m = monic(p);
    for (const auto& k : keys)
      if (k == m) return;
    keys.push_back(std::move(m));
    out.push_back(p);
  };
  for (const auto& p : P) {
    if (p.is_zero()) throw PreconditionError("zero generator");
    push_unique(p);
  }
  for (const auto& p : P) push_unique(involution(p));
  return out;
}

// ---------------------------------------------------------------------------
// completion

namespace {

struct LiveRule {
  Word lead;
  Polynomial tail;
  bool alive = true;

  Polynomial poly() const {
    Polynomial p = tail;
    p.add_term(lead, Scalar(1));
    return p;
  }
};

struct CompletionOutcome {
  std::vector<Rule> rules;  // sorted by leading word
  std::vector<Word> discarded;
  bool collapsed = false;
};

// overlap word = lead_i extended on the right by the unmatched part of
// lead_j; lead_i occurs at position 0, lead_j at |lead_i| - shared.
struct Obstruction {
  Word overlap;
  int i, j, shared;
  friend bool operator<(const Obstruction& a, const Obstruction& b) {
    auto c = compare_words(a.overlap, b.overlap);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.shared < b.shared;
  }
};

class Completer {
 public:
  Completer(const IdealPresentation& ideal, int D) : ideal_(ideal), D_(D) {}

  CompletionOutcome run() {
    if (!ideal_.generators.empty()) {
      std::vector<Polynomial> gens = star_ideal_generators(ideal_.generators);
      for (const auto& p : gens)
        if (p.degree() > D_)
          throw PreconditionError("completion degree below a generator degree");
      std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        return compare_words(leading_term(a).first, leading_term(b).first) ==
               std::strong_ordering::less;
      });
      for (auto& p : gens) pending_.push_back(std::move(p));
    }

    while (!collapsed_) {
      if (!pending_.empty()) {
        Polynomial p = std::move(pending_.front());
        pending_.pop_front();
        Polynomial nf = reduce_poly(std::move(p));
        if (!nf.is_zero()) insert_rule(nf);
        continue;
      }
      if (obstructions_.empty()) break;
      Obstruction ob = *obstructions_.begin();
      obstructions_.erase(obstructions_.begin());
      if (!rules_[ob.i].alive || !rules_[ob.j].alive) continue;
      if (ob.overlap.degree() > D_) {
        discarded_.push_back(ob.overlap);
        continue;
      }
      Polynomial s = spoly(ob);
      Polynomial nf = reduce_poly(std::move(s));
      if (!nf.is_zero()) insert_rule(nf);
    }

    return finalize();
  }

 private:
  Polynomial spoly(const Obstruction& ob) const {
    const LiveRule& ri = rules_[ob.i];
    const LiveRule& rj = rules_[ob.j];
    Word v = rj.lead.suffix(rj.lead.degree() - ob.shared);
    Word u = ri.lead.prefix(ri.lead.degree() - ob.shared);
    // (poly_i)·v - u·(poly_j); the leading terms both equal the overlap word
    return word_times(Word::one(), ri.tail, v) - word_times(u, rj.tail, Word::one());
  }

  Polynomial reduce_poly(Polynomial p) const {
    Polynomial out(ideal_.g, ideal_.field);
    if (collapsed_) return out;
    while (!p.is_zero()) {
      auto [w, c] = leading_term(p);
      int hit = -1, pos = -1;
      for (const auto& [lead, idx] : leads_) {
        if (lead.degree() > w.degree()) break;
        int q = w.find_factor(lead);
        if (q >= 0) { hit = idx; pos = q; break; }
      }
      if (hit < 0) {
        out.add_term(w, c);
        p.add_term(w, -c);
        continue;
      }
      const LiveRule& r = rules_[hit];
      Word u = w.prefix(pos);
      Word v = w.suffix(w.degree() - pos - r.lead.degree());
      p.add_term(w, -c);
      p -= word_times(u, r.tail, v).scaled(c);
    }
    return out;
  }

  void insert_rule(const Polynomial& nf) {
    Polynomial p = monic(nf);
    auto [lw, lc] = leading_term(p);
    if (lw.empty()) {
      // nonzero constant in the ideal: everything collapses to (1)
      collapsed_ = true;
      return;
    }
    int idx = static_cast<int>(rules_.size());
    Polynomial tail = p;
    tail.add_term(lw, Scalar(-1));
    rules_.push_back(LiveRule{lw, tail, true});

    // retire rules whose leading word became reducible; their content is
    // re-reduced and re-inserted
    for (auto it = leads_.begin(); it != leads_.end();) {
      if (it->first.contains_factor(lw)) {
        LiveRule& old = rules_[it->second];
        old.alive = false;
        pending_.push_back(old.poly());
        it = leads_.erase(it);
      } else {
        ++it;
      }
    }
    leads_.emplace(lw, idx);

    for (const auto& [lead, jdx] : leads_) {
      enqueue_overlaps(idx, jdx);
      if (jdx != idx) enqueue_overlaps(jdx, idx);
    }
  }

  void enqueue_overlaps(int i, int j) {
    const Word& a = rules_[i].lead;
    const Word& b = rules_[j].lead;
    int maxs = std::min(a.degree(), b.degree()) - 1;
    for (int s = 1; s <= maxs; ++s) {
      if (a.suffix(s) == b.prefix(s)) {
        Word overlap = a.concat(b.suffix(b.degree() - s));
        obstructions_.insert(Obstruction{overlap, i, j, s});
      }
    }
  }

  CompletionOutcome finalize() {
    CompletionOutcome out;
    out.discarded = discarded_;
    out.collapsed = collapsed_;
    if (collapsed_) {
      out.rules.push_back(Rule{Word::one(), Polynomial(ideal_.g, ideal_.field)});
      return out;
    }
    // tail interreduction: leads are already mutually indivisible
    for (const auto& [lead, idx] : leads_)
      rules_[idx].tail = reduce_poly(rules_[idx].tail);
    for (const auto& [lead, idx] : leads_)
      out.rules.push_back(Rule{lead, rules_[idx].tail});
    return out;
  }

  const IdealPresentation& ideal_;
  int D_;
  std::vector<LiveRule> rules_;
  std::map<Word, int, WordLess> leads_;
  std::deque<Polynomial> pending_;
  std::set<Obstruction> obstructions_;
  std::vector<Word> discarded_;
  bool collapsed_ = false;
};

}  // namespace

GroebnerBasis complete(const IdealPresentation& ideal, int D) {
  CompletionOutcome res = Completer(ideal, D).run();
  GroebnerBasis gb;
  gb.g_ = ideal.g;
  gb.field_ = ideal.field;
  gb.homogeneous_ = ideal.homogeneous;
  gb.completion_degree_ = D;
  gb.discarded_ = res.discarded;
  gb.complete_ = res.collapsed || res.discarded.empty();
  gb.rules_ = std::move(res.rules);
  return gb;
}

Polynomial GroebnerBasis::reduce_tracked(Polynomial p,
                                         std::vector<RewriteStep>* steps) const {
  Polynomial out(p.g(), p.field());
  if (collapsed()) {
    // the whole algebra: p itself is the certificate 1·p·1 against rule 0,
    // recorded only when the caller asks
    if (steps && !p.is_zero())
      steps->push_back(RewriteStep{Word::one(), 0, Word::one(), Scalar(1)});
    return out;
  }
  while (!p.is_zero()) {
    auto [w, c] = leading_term(p);
    const Rule* hit = nullptr;
    int pos = -1, rule_idx = -1;
    for (size_t k = 0; k < rules_.size(); ++k) {
      const Rule& r = rules_[k];
      if (r.lead.degree() > w.degree()) break;
      int q = w.find_factor(r.lead);
      if (q >= 0) { hit = &r; pos = q; rule_idx = static_cast<int>(k); break; }
    }
    if (!hit) {
      out.add_term(w, c);
      p.add_term(w, -c);
      continue;
    }
    Word u = w.prefix(pos);
    Word v = w.suffix(w.degree() - pos - hit->lead.degree());
    if (steps) steps->push_back(RewriteStep{u, rule_idx, v, c});
    p.add_term(w, -c);
    p -= word_times(u, hit->tail, v).scaled(c);
  }
  return out;
}

Membership GroebnerBasis::member(const Polynomial& p) const {
  Polynomial nf = reduce(p);
  if (nf.is_zero()) return Membership::member;
  if (exact_at_degree(p.degree())) return Membership::non_member;
  return Membership::unknown_beyond_bound;
}

bool GroebnerBasis::is_standard(const Word& w) const {
  for (const auto& r : rules_) {
    if (r.lead.degree() > w.degree()) break;
    if (w.contains_factor(r.lead)) return false;
  }
  return true;
}

std::vector<Word> standard_monomials(const GroebnerBasis& gb, int d) {
  if (d > gb.completion_degree() && !gb.complete())
    throw PreconditionError("standard monomials above the completion degree of a truncated basis");
  std::vector<Word> out;
  if (gb.collapsed()) return out;
  std::vector<Word> level{Word::one()};
  out.push_back(Word::one());
  for (int k = 1; k <= d; ++k) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (int idx = 1; idx <= gb.g(); ++idx)
        for (bool st : {false, true}) {
          Word cand = w.append(Letter(static_cast<uint32_t>(idx), st));
          bool ok = true;
          for (const auto& r : gb.rules())
            if (cand.has_suffix(r.lead)) { ok = false; break; }
          if (ok) next.push_back(cand);
        }
    }
    // generated with unstarred letters interleaved; restore letter order
    std::sort(next.begin(), next.end());
    for (const auto& w : next) out.push_back(w);
    level = std::move(next);
  }
  return out;
}

CodimResult finite_codimension(const GroebnerBasis& gb) {
  CodimResult res;
  if (gb.collapsed()) {
    res.verdict = gb.complete() ? CodimVerdict::finite : CodimVerdict::unknown;
    if (gb.complete()) res.codim = 0;
    return res;
  }
  std::vector<Word> leads;
  int max_lead = 0;
  for (const auto& r : gb.rules()) {
    leads.push_back(r.lead);
    max_lead = std::max(max_lead, r.lead.degree());
  }

  auto is_live_prefix = [&](const Word& u) {
    for (const auto& l : leads)
      if (u.degree() < l.degree() && l.has_prefix(u)) return true;
    return false;
  };
  auto transition = [&](const Word& s, Letter l) -> std::optional<Word> {
    Word t = s.append(l);
    for (const auto& lead : leads)
      if (t.has_suffix(lead)) return std::nullopt;  // dead
    for (int len = std::min(t.degree(), max_lead - 1); len >= 1; --len) {
      Word u = t.suffix(len);
      if (is_live_prefix(u)) return u;
    }
    return Word::one();
  };

  // explore accessible live states
  std::map<Word, std::vector<Word>, WordLess> edges;
  std::vector<Word> stack{Word::one()};
  edges[Word::one()];
  while (!stack.empty()) {
    Word s = stack.back();
    stack.pop_back();
    for (int idx = 1; idx <= gb.g(); ++idx)
      for (bool st : {false, true}) {
        auto t = transition(s, Letter(static_cast<uint32_t>(idx), st));
        if (!t) continue;
        edges[s].push_back(*t);
        if (edges.find(*t) == edges.end()) {
          edges[*t];
          stack.push_back(*t);
        }
      }
  }

  // cycle detection + path counting over the live automaton
  std::map<Word, int, WordLess> color;  // 0 unvisited, 1 on stack, 2 done
  std::map<Word, long long, WordLess> count;
  bool cyclic = false;
  std::function<long long(const Word&)> visit = [&](const Word& s) -> long long {
    auto c = color.find(s);
    if (c != color.end()) {
      if (c->second == 1) { cyclic = true; return 0; }
      return count[s];
    }
    color[s] = 1;
    long long total = 1;
    for (const auto& t : edges[s]) {
      total += visit(t);
      if (cyclic) break;
    }
    color[s] = 2;
    count[s] = total;
    return total;
  };
  long long total = visit(Word::one());

  if (cyclic) {
    res.verdict = gb.complete() ? CodimVerdict::infinite : CodimVerdict::unknown;
    return res;
  }
  res.verdict = CodimVerdict::finite;
  if (gb.complete()) res.codim = total;
  return res;
}

SplitCheck star_split_check(const GroebnerBasis& gb, const IdealPresentation& ideal) {
  if (!ideal.analytic_generated)
    throw PreconditionError("split check applies only to analytic-generated *-ideals");
  if (gb.collapsed()) throw PreconditionError("split check on an improper ideal");
  SplitCheck out;
  out.holds = true;
  for (const auto& r : gb.rules()) {
    PolyClass c = classify(r.poly());
    if (c == PolyClass::analytic)
      out.analytic_part.push_back(r.poly());
    else if (c == PolyClass::antianalytic)
      out.antianalytic_part.push_back(r.poly());
    else
      out.holds = false;
  }
  return out;
}

}  // namespace freestar
