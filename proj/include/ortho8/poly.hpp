// Univariate polynomials over an arbitrary commutative coefficient ring,
// low-degree-first coefficient storage.  Nesting Poly<Poly<...>> gives the
// multivariate rings the symbolic identity checks run in.
//
// Every polynomial carries a zero witness of its coefficient ring so that
// the zero polynomial still knows which ring it belongs to.

#ifndef ORTHO8_POLY_HPP_
#define ORTHO8_POLY_HPP_

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ortho8/gf.hpp"

namespace ortho8 {
namespace gf {
// ring trait hooks for the base field
inline Elt ring_zero(const Elt& w) { return Elt(0, w.field); }
inline Elt ring_one(const Elt& w) { return Elt(1, w.field); }
inline bool ring_is_zero(const Elt& x) { return x.is_zero(); }
inline Elt ring_div(const Elt& a, const Elt& b) { return a / b; }
inline std::string ring_str(const Elt& x) { return std::to_string(x.code); }
}  // namespace gf

namespace poly {

// degree of the zero polynomial: a sentinel well below any real degree
constexpr int kZeroDeg = std::numeric_limits<int>::min();

template <class T>
class Poly {
 public:
  explicit Poly(T zero_witness) : zero_(zero_witness) {}
  Poly(T zero_witness, std::vector<T> coeffs) : zero_(zero_witness), c_(std::move(coeffs)) {
    trim();
  }
  static Poly zero(const T& w) { return Poly(ring_zero(w)); }
  static Poly constant(const T& v) {
    Poly r(ring_zero(v));
    r.c_.push_back(v);
    r.trim();
    return r;
  }
  static Poly variable(const T& w) {
    Poly r(ring_zero(w));
    r.c_.push_back(ring_zero(w));
    r.c_.push_back(ring_one(w));
    return r;
  }

  int deg() const { return c_.empty() ? kZeroDeg : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const T& zero_witness() const { return zero_; }
  // coefficient of t^i (zero beyond the stored range)
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const std::vector<T>& coeffs() const { return c_; }
  T lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator+(const Poly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < c_.size() && i < o.c_.size())
        r[i] = c_[i] + o.c_[i];
      else if (i < c_.size())
        r[i] = c_[i];
      else
        r[i] = o.c_[i];
    }
    return Poly(zero_, std::move(r));
  }
  Poly operator-() const {
    std::vector<T> r = c_;
    for (auto& x : r) x = -x;
    return Poly(zero_, std::move(r));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly(zero_);
    std::vector<T> r(c_.size() + o.c_.size() - 1, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (ring_is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(zero_, std::move(r));
  }
  Poly operator*(const T& s) const {
    std::vector<T> r = c_;
    for (auto& x : r) x = x * s;
    return Poly(zero_, std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly r = constant(ring_one(zero_));
    Poly b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  // multiply by t^k
  Poly shifted(std::size_t k) const {
    if (c_.empty()) return *this;
    std::vector<T> r(c_.size() + k, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Poly(zero_, std::move(r));
  }

  T eval(const T& x) const {
    T acc = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  // evaluate into any ring containing the coefficients via a lift functor
  template <class R, class LiftFn>
  R eval_lifted(const R& x, LiftFn lift) const {
    R acc = ring_zero(x);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + lift(c_[i]);
    return acc;
  }

  std::string str(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (ring_is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += ring_str(c_[i]);
      if (i >= 1) s += "*" + var;
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  T zero_;
  std::vector<T> c_;
  void trim() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }
};

template <class T>
Poly<T> ring_zero(const Poly<T>& w) {
  return Poly<T>::zero(w.zero_witness());
}
template <class T>
Poly<T> ring_one(const Poly<T>& w) {
  return Poly<T>::constant(ring_one(w.zero_witness()));
}
template <class T>
bool ring_is_zero(const Poly<T>& x) {
  return x.is_zero();
}
template <class T>
std::string ring_str(const Poly<T>& x) {
  return "(" + x.str() + ")";
}

// Euclidean division, coefficients in a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const T w = a.zero_witness();
  std::vector<T> rem(a.coeffs());
  int db = b.deg();
  T lead_inv = ring_div(ring_one(w), b.lead());
  std::vector<T> quo;
  int da = a.deg();
  if (da < db) return {Poly<T>::zero(w), a};
  quo.assign(da - db + 1, ring_zero(w));
  for (int d = da; d >= db; --d) {
    T top = rem[d];
    if (ring_is_zero(top)) continue;
    T f = top * lead_inv;
    quo[d - db] = f;
    for (int i = 0; i <= db; ++i) rem[d - db + i] = rem[d - db + i] - f * b.coeff(i);
  }
  return {Poly<T>(w, std::move(quo)), Poly<T>(w, std::move(rem))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divrem(a, b).second;
}
template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
  return divrem(a, b).first;
}

// exact division in T[t] for arbitrary ring T with exact-dividable leading
// coefficients; throws if the division does not come out exact
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const T w = a.zero_witness();
  if (a.is_zero()) return a;
  std::vector<T> rem(a.coeffs());
  int db = b.deg();
  int da = a.deg();
  if (da < db) throw std::domain_error("inexact polynomial division");
  std::vector<T> quo(da - db + 1, ring_zero(w));
  for (int d = da; d >= db; --d) {
    T top = rem[d];
    if (ring_is_zero(top)) continue;
    T f = ring_div(top, b.lead());
    quo[d - db] = f;
    for (int i = 0; i <= db; ++i) rem[d - db + i] = rem[d - db + i] - f * b.coeff(i);
  }
  for (const T& x : rem)
    if (!ring_is_zero(x)) throw std::domain_error("inexact polynomial division");
  return Poly<T>(w, std::move(quo));
}

// ring-division hook: polynomial division must come out exact
template <class T>
Poly<T> ring_div(const Poly<T>& a, const Poly<T>& b) {
  return exact_div(a, b);
}

template <class T>
Poly<T> make_monic(const Poly<T>& a) {
  if (a.is_zero()) return a;
  return a * ring_div(ring_one(a.zero_witness()), a.lead());
}

// monic gcd via Euclid; gcd(f, 0) is the monic multiple of f
template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = b;
    b = r;
  }
  return make_monic(a);
}

template <class T>
Poly<T> poly_pow_mod(Poly<T> base, unsigned long long e, const Poly<T>& mod) {
  Poly<T> r = ring_one(base);
  base = base % mod;
  while (e) {
    if (e & 1ull) r = (r * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return r;
}

// Irreducibility over GF(q).  Degree <= 3 reduces to a root search; higher
// degrees use Rabin's criterion with iterated q-power Frobenius.
inline bool poly_irreducible(const Poly<gf::Elt>& f0) {
  using gf::Elt;
  int n = f0.deg();
  if (n <= 0) return false;
  if (n == 1) return true;
  const gf::Field* F = f0.zero_witness().field;
  if (n <= 3) {
    for (std::uint32_t v = 0; v < F->q; ++v)
      if (f0.eval(Elt(v, F)).is_zero()) return false;
    return true;
  }
  Poly<Elt> f = make_monic(f0);
  Poly<Elt> t = Poly<Elt>::variable(f.zero_witness());
  // frob[m] = t^(q^m) mod f, built by repeated q-th powers
  Poly<Elt> g = poly_pow_mod(t, F->q, f);
  std::vector<Poly<Elt>> frob{t, g};
  for (int m = 2; m <= n; ++m) frob.push_back(poly_pow_mod(frob.back(), F->q, f));
  if (!(frob[n] == t % f)) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0 || !gf::is_prime_u64(r)) continue;
    Poly<Elt> d = poly_gcd(frob[n / r] - t, f);
    if (d.deg() != 0) return false;
  }
  return true;
}

}  // namespace poly
}  // namespace ortho8

#endif  // ORTHO8_POLY_HPP_
