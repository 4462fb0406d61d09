#include "freestar/parser.hpp"

#include <cctype>

namespace freestar {

namespace {

class Parser {
 public:
  Parser(const std::string& s, int g, FieldMode field) : s_(s), g_(g), field_(field) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(pos_, "trailing input");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::string nat() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(pos_, "expected a number");
    return s_.substr(start, pos_ - start);
  }

  // small bounded natural, for variable indices and powers
  long small_nat(long cap, const char* what) {
    size_t at = pos_;
    std::string digits = nat();
    if (digits.size() > 9) throw ParseError(at, std::string(what) + " out of range");
    long v = std::stol(digits);
    if (v < 1 || v > cap) throw ParseError(at, std::string(what) + " out of range");
    return v;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial a = atom();
    bool starred = false;
    if (eat('\'')) {
      a = involution(a);
      starred = true;
    }
    if (eat('^')) {
      long n = small_nat(512, "power");
      Polynomial out = a;
      for (long k = 1; k < n; ++k) out = out * a;
      a = std::move(out);
    }
    if (eat('\'')) {
      if (starred) throw ParseError(pos_ - 1, "at most one involution mark per factor");
      a = involution(a);
    }
    return a;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Polynomial inner = expr();
      if (!eat(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (c == 'i') {
      ++pos_;
      if (field_ != FieldMode::GaussianRational)
        throw ParseError(pos_ - 1, "imaginary unit outside Qi mode");
      return Polynomial::constant(g_, field_, Scalar::i());
    }
    if (c == 'x') {
      ++pos_;
      long idx = small_nat(g_, "variable index");
      return Polynomial::monomial(g_, field_, Word::letter(static_cast<uint32_t>(idx)));
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool neg = eat('-');
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError(pos_, "expected digits");
      std::string num = nat();
      std::string lit = (neg ? "-" : "") + num;
      if (eat('/')) {
        std::string den = nat();
        if (Rational::from_string(den).is_zero()) throw ParseError(pos_, "zero denominator");
        lit += "/" + den;
      }
      return Polynomial::constant(g_, field_, Scalar(Rational::from_string(lit)));
    }
    throw ParseError(pos_, "expected an atom");
  }

  const std::string& s_;
  size_t pos_ = 0;
  int g_;
  FieldMode field_;
};

}  // namespace

Polynomial parse_poly(const std::string& s, int g, FieldMode field) {
  return Parser(s, g, field).parse();
}

Scalar parse_scalar(const std::string& s, FieldMode field) {
  Polynomial p = parse_poly(s, 1, field);
  if (p.degree() > 0) throw ParseError(0, "expected a scalar literal");
  return p.coeff(Word::one());
}

std::string format_scalar(const Scalar& c) {
  if (c.is_real()) return c.re().str();
  std::string s = "(" + c.re().str();
  s += c.im().sign() < 0 ? "-" : "+";
  s += c.im().abs().str() + "*i)";
  return s;
}

std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // descending monomial order
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    if (!out.empty()) out += " + ";
    if (w.empty()) {
      out += format_scalar(c);
    } else if (c.is_one()) {
      out += word_str(w);
    } else {
      out += format_scalar(c) + "*" + word_str(w);
    }
  }
  return out;
}

}  // namespace freestar
