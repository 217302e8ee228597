// Field of fractions of a univariate polynomial ring over a finite field,
// kept reduced (gcd 1) with a monic denominator so equality is structural.

#ifndef ORTHO8_FRACTION_HPP_
#define ORTHO8_FRACTION_HPP_

#include <stdexcept>
#include <string>

#include "ortho8/poly.hpp"

namespace ortho8 {
namespace poly {

template <class T>
class Fraction {
 public:
  using P = Poly<T>;

  explicit Fraction(P num) : num_(num), den_(ring_one(num)) {}
  Fraction(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  static Fraction zero(const P& w) { return Fraction(ring_zero(w)); }
  static Fraction one(const P& w) { return Fraction(ring_one(w)); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.deg() == 0; }
  // the underlying polynomial, valid when the denominator is a constant
  P as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("fraction has a nontrivial denominator");
    return num_ * ring_div(ring_one(num_.zero_witness()), den_.coeff(0));
  }

  bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Fraction& o) const { return !(*this == o); }

  Fraction operator+(const Fraction& o) const {
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Fraction operator-(const Fraction& o) const {
    return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Fraction operator-() const {
    Fraction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Fraction operator*(const Fraction& o) const { return Fraction(num_ * o.num_, den_ * o.den_); }
  Fraction operator/(const Fraction& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero fraction");
    return Fraction(num_ * o.den_, den_ * o.num_);
  }

  std::string str(const std::string& var = "a") const {
    if (den_.deg() == 0 && ring_is_zero(den_.coeff(0) - ring_one(den_.coeff(0))))
      return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  P num_, den_;
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = ring_one(num_);
      return;
    }
    P g = poly_gcd(num_, den_);
    if (g.deg() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    T lead_inv = ring_div(ring_one(num_.zero_witness()), den_.lead());
    num_ = num_ * lead_inv;
    den_ = den_ * lead_inv;
  }
};

template <class T>
Fraction<T> ring_zero(const Fraction<T>& w) {
  return Fraction<T>::zero(w.num());
}
template <class T>
Fraction<T> ring_one(const Fraction<T>& w) {
  return Fraction<T>::one(w.num());
}
template <class T>
bool ring_is_zero(const Fraction<T>& x) {
  return x.is_zero();
}
template <class T>
Fraction<T> ring_div(const Fraction<T>& a, const Fraction<T>& b) {
  return a / b;
}
template <class T>
std::string ring_str(const Fraction<T>& x) {
  return x.str();
}

}  // namespace poly
}  // namespace ortho8

#endif  // ORTHO8_FRACTION_HPP_
