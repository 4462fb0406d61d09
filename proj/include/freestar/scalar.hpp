#ifndef FREESTAR_SCALAR_HPP
#define FREESTAR_SCALAR_HPP

#include <string>

#include "freestar/rational.hpp"

namespace freestar {

// Coefficient field selector: Q with the identity involution, or Q(i) with
// complex conjugation. Scalars themselves are mode-free Gaussian rationals;
// the mode is enforced at the polynomial / parser level (a Q-mode value
// always has zero imaginary part).
enum class FieldMode { Rational, GaussianRational };

inline const char* field_name(FieldMode m) {
  return m == FieldMode::Rational ? "Q" : "Qi";
}

class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : re_(n) {}
  Scalar(Rational re) : re_(std::move(re)) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Scalar& operator*=(const Scalar& o) {
    // real fast path: Q-mode values never leave it
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ /= o.re_;
      return *this;
    }
    Rational n = o.re_ * o.re_ + o.im_ * o.im_;
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // |re| + |im|: an exact upper bound for the modulus, used in norm bounds.
  Rational abs_bound() const { return re_.abs() + im_.abs(); }

  // Rendering used by the CLI ("p/q" or "(a+b*i)" forms live in the formatter).
  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = "(" + re_.str();
    s += im_.sign() < 0 ? "-" : "+";
    s += im_.abs().str() + "*i)";
    return s;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace freestar

#endif
