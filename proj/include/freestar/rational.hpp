#ifndef FREESTAR_RATIONAL_HPP
#define FREESTAR_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace freestar {

// Arbitrary-precision rational, always kept in canonical form
// (coprime numerator/denominator, denominator > 0).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Accepts "p", "-p", "p/q" with arbitrary-size integers.
  static Rational from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: bad literal '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v.canonicalize();
    return Rational(v);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // 2^k (or base^k), k may be negative.
  static Rational power_of(long base, long k) {
    Rational r(1);
    Rational b = k >= 0 ? Rational(base) : Rational(1, base);
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) r *= b;
    return r;
  }

  // Smallest integer u with u*u >= r (r >= 0); used for exact norm bounds.
  static Rational sqrt_upper_bound(const Rational& r) {
    if (r.sign() < 0) throw std::domain_error("sqrt_upper_bound: negative");
    if (r.is_zero()) return Rational(0);
    // ceil(sqrt(n/d)) = ceil(sqrt(n*d))/d bounded above by (isqrt(n*d)+1)/d.
    mpz_class nd = r.v_.get_num() * r.v_.get_den();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), nd.get_mpz_t());
    if (root * root < nd) root += 1;
    return Rational(mpq_class(root, r.v_.get_den()));
  }

  std::string str() const { return v_.get_str(); }  // "p" or "p/q"
  const mpq_class& raw() const { return v_; }
  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

}  // namespace freestar

#endif
