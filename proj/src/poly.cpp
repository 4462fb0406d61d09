#include "freestar/poly.hpp"

namespace freestar {

Polynomial Polynomial::operator-() const {
  Polynomial out(g_, field_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(g_, field_);
  if (c.is_zero()) return out;
  for (const auto& [w, k] : terms_) out.terms_.emplace(w, k * c);
  return out;
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  p.check_compatible(q);
  Polynomial out(p.g(), p.field());
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) out.add_term(u.concat(v), a * b);
  return out;
}

Polynomial involution(const Polynomial& p) {
  Polynomial out(p.g(), p.field());
  for (const auto& [w, c] : p.terms()) out.add_term(w.star(), c.conj());
  return out;
}

std::pair<Word, Scalar> leading_term(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("leading_term of the zero polynomial");
  auto it = p.terms().rbegin();
  return {it->first, it->second};
}

std::map<int, Polynomial> homogeneous_components(const Polynomial& p) {
  std::map<int, Polynomial> out;
  for (const auto& [w, c] : p.terms()) {
    auto [it, fresh] = out.emplace(w.degree(), Polynomial(p.g(), p.field()));
    it->second.add_term(w, c);
  }
  return out;
}

bool is_homogeneous(const Polynomial& p) {
  return homogeneous_components(p).size() <= 1;
}

PolyClass classify(const Polynomial& p) {
  bool all_plain = true, all_starred = true, all_empty = true;
  for (const auto& [w, c] : p.terms()) {
    if (!w.empty()) all_empty = false;
    if (!w.is_analytic()) all_plain = false;
    if (!w.is_antianalytic()) all_starred = false;
  }
  if (all_empty) return PolyClass::constant;
  if (all_plain) return PolyClass::analytic;
  if (all_starred) return PolyClass::antianalytic;
  return PolyClass::mixed;
}

Polynomial trace_normal_form(const Polynomial& p) {
  Polynomial out(p.g(), p.field());
  for (const auto& [w, c] : p.terms()) out.add_term(least_rotation(w), c);
  return out;
}

Polynomial word_times(const Word& u, const Polynomial& p, const Word& v) {
  Polynomial out(p.g(), p.field());
  for (const auto& [w, c] : p.terms()) out.add_term(u.concat(w).concat(v), c);
  return out;
}

}  // namespace freestar
