// Finite fields GF(p^f), q <= 2^20, with deterministic construction.
//
// Elements are stored as integer codes: the digit vector (c0,...,c_{f-1})
// of the polynomial-basis representation, read as a base-p number with c0
// least significant.  The defining polynomial is the lexicographically
// smallest monic irreducible of degree f over GF(p), coefficients compared
// low-degree-first, so codes are reproducible across runs.

#ifndef ORTHO8_GF_HPP_
#define ORTHO8_GF_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ortho8 {
namespace gf {

constexpr std::uint64_t kMaxFieldOrder = 1u << 20;

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// An element of GF(p^f), tagged with its ambient field.
struct Elt {
  std::uint32_t code = 0;
  const Field* field = nullptr;

  Elt() = default;
  Elt(std::uint32_t c, const Field* F) : code(c), field(F) {}

  bool is_zero() const { return code == 0; }
  bool operator==(const Elt& o) const { return code == o.code && field == o.field; }
  bool operator!=(const Elt& o) const { return !(*this == o); }
  bool operator<(const Elt& o) const { return code < o.code; }

  Elt operator+(const Elt& o) const;
  Elt operator-(const Elt& o) const;
  Elt operator-() const;
  Elt operator*(const Elt& o) const;
  Elt operator/(const Elt& o) const;
  Elt inv() const;
  Elt pow(long long e) const;
  Elt& operator+=(const Elt& o) { return *this = *this + o; }
  Elt& operator-=(const Elt& o) { return *this = *this - o; }
  Elt& operator*=(const Elt& o) { return *this = *this * o; }
};

class Field {
 public:
  std::uint32_t p;
  std::uint32_t f;
  std::uint32_t q;
  // defining polynomial, low degree first, length f+1, monic
  std::vector<std::uint32_t> defining_poly;

  Elt zero() const { return Elt(0, this); }
  Elt one() const { return Elt(1, this); }
  Elt elt(std::uint32_t code) const {
    if (code >= q) throw std::invalid_argument("element code out of range");
    return Elt(code, this);
  }
  // the integer n reduced into the prime subfield
  Elt from_int(long long n) const {
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += p;
    return Elt(static_cast<std::uint32_t>(r), this);
  }
  // class of t in GF(p)[t]/(defining_poly); equals 0 for f = 1 fields
  // (whose defining polynomial is t itself)
  Elt gen() const { return Elt(f == 1 ? 0u : p, this); }

  std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    std::uint32_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
      std::uint32_t s = a % p + b % p;
      if (s >= p) s -= p;
      r += s * mul;
      a /= p;
      b /= p;
      mul *= p;
    }
    return r;
  }
  std::uint32_t neg_code(std::uint32_t a) const {
    if (p == 2) return a;
    std::uint32_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
      std::uint32_t d = a % p;
      r += (d ? p - d : 0) * mul;
      a /= p;
      mul *= p;
    }
    return r;
  }
  std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv_code(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[q - 1 - log_[a]];
  }
  std::uint32_t pow_code(std::uint32_t a, long long e) const {
    if (a == 0) {
      if (e <= 0) throw std::domain_error("0 raised to nonpositive power");
      return 0;
    }
    long long m = q - 1;
    long long r = (static_cast<long long>(log_[a]) * (e % m)) % m;
    if (r < 0) r += m;
    return exp_[r];
  }
  std::uint32_t log(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
  }
  // a fixed multiplicative generator (the one the tables were built with)
  Elt primitive_element() const { return Elt(q == 2 ? 1 : exp_[1], this); }

  Elt frobenius(const Elt& a) const { return Elt(pow_code(a.code, p), this); }
  // absolute trace down to GF(p), returned as an integer in [0, p)
  std::uint32_t abs_trace(const Elt& a) const {
    Elt s = a, x = a;
    for (std::uint32_t i = 1; i < f; ++i) {
      x = frobenius(x);
      s = s + x;
    }
    return s.code;  // lies in the prime subfield
  }
  bool is_square(const Elt& a) const {
    if (p == 2) return true;
    if (a.code == 0) return true;
    return log_[a.code] % 2 == 0;
  }
  // square root when it exists (odd q); both roots +-r, the caller picks
  Elt sqrt(const Elt& a) const {
    if (a.code == 0) return zero();
    std::uint32_t l = log_[a.code];
    if (l % 2 != 0) throw std::domain_error("not a square");
    return Elt(exp_[l / 2], this);
  }
  // smallest s with s^2 + s = d, char 2 only; throws when unsolvable
  Elt artin_schreier_root(const Elt& d) const;
  bool artin_schreier_solvable(const Elt& d) const {
    return abs_trace(d) == 0;
  }

  std::string descriptor() const {
    std::string s = std::to_string(p) + "^" + std::to_string(f) + ":poly=";
    for (std::size_t i = 0; i < defining_poly.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(defining_poly[i]);
    }
    return s;
  }

  // built once by field_make
  void build_tables();

 private:
  std::vector<std::uint32_t> exp_;  // length 2(q-1), exp_[k] = g^k
  std::vector<std::uint32_t> log_;  // length q, log_[g^k] = k
  mutable std::vector<std::uint32_t> as_root_;  // lazy, char 2
  mutable std::mutex lazy_mutex_;

  std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const;
};

inline Elt Elt::operator+(const Elt& o) const { return Elt(field->add_code(code, o.code), field); }
inline Elt Elt::operator-(const Elt& o) const {
  return Elt(field->add_code(code, field->neg_code(o.code)), field);
}
inline Elt Elt::operator-() const { return Elt(field->neg_code(code), field); }
inline Elt Elt::operator*(const Elt& o) const { return Elt(field->mul_code(code, o.code), field); }
inline Elt Elt::operator/(const Elt& o) const {
  return Elt(field->mul_code(code, field->inv_code(o.code)), field);
}
inline Elt Elt::inv() const { return Elt(field->inv_code(code), field); }
inline Elt Elt::pow(long long e) const {
  if (code == 0 && e == 0) return Elt(1, field);
  return Elt(field->pow_code(code, e), field);
}

// schoolbook multiplication mod defining_poly, used only to bootstrap tables
inline std::uint32_t Field::raw_mul(std::uint32_t a, std::uint32_t b) const {
  std::vector<std::uint32_t> da(f), db(f), prod(2 * f - 1, 0);
  for (std::uint32_t i = 0; i < f; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < f; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < f; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  // reduce: t^f = -(c0 + c1 t + ... + c_{f-1} t^{f-1})
  for (std::uint32_t d = 2 * f - 2; d >= f && d < 2 * f; --d) {
    std::uint32_t top = prod[d];
    if (!top) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < f; ++i) {
      std::uint32_t sub = (top * defining_poly[i]) % p;
      prod[d - f + i] = (prod[d - f + i] + p - sub) % p;
    }
  }
  std::uint32_t r = 0, mul = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    r += prod[i] * mul;
    mul *= p;
  }
  return r;
}

inline void Field::build_tables() {
  log_.assign(q, 0);
  exp_.assign(2 * (q - 1), 0);
  // find a primitive element by direct order computation; the attempt that
  // survives has already filled the exp table
  for (std::uint32_t g = (f == 1 ? 2u : p); g < q; ++g) {
    std::uint32_t v = 1;
    std::uint32_t k = 0;
    bool primitive = true;
    do {
      exp_[k] = v;
      v = raw_mul(v, g);
      ++k;
      if (v == 1 && k < q - 1) {
        primitive = false;
        break;
      }
    } while (k < q - 1);
    if (primitive && v == 1) {
      for (std::uint32_t i = 0; i < q - 1; ++i) {
        exp_[q - 1 + i] = exp_[i];
        log_[exp_[i]] = i;
      }
      return;
    }
  }
  // q = 2: the loop above never runs (no g in range)
  if (q == 2) {
    exp_[0] = 1;
    exp_[1] = 1;
    log_[1] = 0;
    return;
  }
  throw std::logic_error("no primitive element found");
}

inline Elt Field::artin_schreier_root(const Elt& d) const {
  if (p != 2) throw std::domain_error("artin_schreier_root requires characteristic 2");
  {
    std::lock_guard<std::mutex> lock(lazy_mutex_);
    if (as_root_.empty()) {
      as_root_.assign(q, q);  // q = unsolvable marker
      for (std::uint32_t s = 0; s < q; ++s) {
        std::uint32_t v = add_code(mul_code(s, s), s);
        if (as_root_[v] == q) as_root_[v] = s;
      }
    }
  }
  std::uint32_t r = as_root_[d.code];
  if (r == q) throw std::domain_error("s^2 + s = d has no solution");
  return Elt(r, this);
}

namespace detail {

// irreducibility over GF(p) of a monic polynomial given by digit codes,
// low degree first; brute-force root/short-divisor search is enough for the
// degrees used by field construction only when p^f is tiny, so this uses
// trial division by all monic polynomials of degree <= f/2
inline bool prime_poly_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& c) {
  std::uint32_t f = static_cast<std::uint32_t>(c.size()) - 1;
  if (f == 1) return true;
  // divide c by monic divisor d of degree k, checking for zero remainder
  std::vector<std::uint32_t> d;
  std::uint64_t max_code = 1;
  for (std::uint32_t k = 1; 2 * k <= f; ++k) {
    max_code = 1;
    for (std::uint32_t i = 0; i < k; ++i) max_code *= p;
    for (std::uint64_t m = 0; m < max_code; ++m) {
      d.assign(k + 1, 0);
      std::uint64_t mm = m;
      for (std::uint32_t i = 0; i < k; ++i) {
        d[i] = mm % p;
        mm /= p;
      }
      d[k] = 1;
      // long division remainder of c by d
      std::vector<std::uint32_t> r = c;
      for (int deg = static_cast<int>(f); deg >= static_cast<int>(k); --deg) {
        std::uint32_t top = r[deg];
        if (!top) continue;
        r[deg] = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
          std::uint32_t sub = (top * d[i]) % p;
          r[deg - k + i] = (r[deg - k + i] + p - sub) % p;
        }
      }
      bool zero = true;
      for (std::uint32_t i = 0; i < k; ++i)
        if (r[i]) {
          zero = false;
          break;
        }
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace detail

// Deterministic field construction; results are cached and shared, so Field
// pointers can be compared for identity.
inline FieldPtr field_make(std::uint32_t p, std::uint32_t f) {
  static std::mutex registry_mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> registry;

  if (!is_prime_u64(p)) throw std::invalid_argument("p is not prime");
  if (f < 1) throw std::invalid_argument("f must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^20");
  }

  std::lock_guard<std::mutex> lock(registry_mutex);
  auto it = registry.find({p, f});
  if (it != registry.end()) return it->second;

  auto F = std::make_shared<Field>();
  F->p = p;
  F->f = f;
  F->q = static_cast<std::uint32_t>(q);
  // lexicographically smallest monic irreducible, coefficients compared
  // low-degree-first: tuple (c0,...,c_{f-1}) with c0 most significant here
  std::vector<std::uint32_t> c(f + 1, 0);
  c[f] = 1;
  bool found = false;
  std::uint64_t total = q;
  for (std::uint64_t m = 0; m < total && !found; ++m) {
    std::uint64_t mm = m;
    for (std::uint32_t i = 0; i < f; ++i) {
      c[f - 1 - i] = mm % p;  // last tuple slot varies fastest
      mm /= p;
    }
    if (detail::prime_poly_irreducible(p, c)) found = true;
  }
  if (!found) throw std::logic_error("no irreducible polynomial found");
  F->defining_poly = c;
  F->build_tables();
  registry[{p, f}] = F;
  return F;
}

// F_p[a] = F_q iff a lies in no proper subfield
inline bool is_field_generator(const Elt& a) {
  const Field& F = *a.field;
  for (std::uint32_t d = 1; d < F.f; ++d) {
    if (F.f % d != 0) continue;
    Elt x = a;
    for (std::uint32_t i = 0; i < d; ++i) x = F.frobenius(x);
    if (x == a) return false;
  }
  return true;
}

// Embedding of a subfield into an extension: the canonical ring morphism
// sending the subfield's polynomial-basis generator to the smallest root of
// its defining polynomial in the big field.
class Embedding {
 public:
  Embedding(FieldPtr small, FieldPtr big) : small_(small), big_(big) {
    if (small->p != big->p || big->f % small->f != 0)
      throw std::invalid_argument("no embedding: incompatible fields");
    if (small->f == big->f) {
      root_ = big->gen();
      identity_ = true;
      return;
    }
    identity_ = false;
    for (std::uint32_t r = 0; r < big->q; ++r) {
      Elt x(r, big.get());
      Elt acc = big->zero();
      // Horner on the defining polynomial of the small field
      for (int i = static_cast<int>(small->f); i >= 0; --i)
        acc = acc * x + big->from_int(small->defining_poly[i]);
      if (acc.is_zero()) {
        root_ = x;
        return;
      }
    }
    throw std::logic_error("embedding root not found");
  }

  Elt operator()(const Elt& e) const {
    if (e.field != small_.get()) throw std::invalid_argument("element not in source field");
    if (identity_) return Elt(e.code, big_.get());
    Elt acc = big_->zero();
    std::uint32_t c = e.code;
    std::vector<std::uint32_t> digits(small_->f);
    for (std::uint32_t i = 0; i < small_->f; ++i) {
      digits[i] = c % small_->p;
      c /= small_->p;
    }
    for (int i = static_cast<int>(small_->f) - 1; i >= 0; --i)
      acc = acc * root_ + big_->from_int(digits[i]);
    return acc;
  }

  const FieldPtr& source() const { return small_; }
  const FieldPtr& target() const { return big_; }

 private:
  FieldPtr small_, big_;
  Elt root_;
  bool identity_;
};

// Primitive cube root of unity.  Taken inside F itself when 3 | q - 1,
// otherwise inside the quadratic extension; characteristic 3 is an error
// (the only cube root there is 1).
inline Elt cube_root_unity(const FieldPtr& F) {
  if (F->p == 3) throw std::domain_error("no primitive cube root of unity in characteristic 3");
  FieldPtr A = F;
  if ((F->q - 1) % 3 != 0) A = field_make(F->p, 2 * F->f);
  // the two elements of order 3 are g^{(q-1)/3} and its square
  std::uint32_t e = (A->q - 1) / 3;
  Elt w1 = A->primitive_element().pow(e);
  Elt w2 = w1 * w1;
  return (w1.code < w2.code) ? w1 : w2;
}

// Canonically smallest nonsquare of odd GF(q), certified by Euler's criterion.
inline Elt find_nonsquare(const FieldPtr& F) {
  if (F->p == 2) throw std::domain_error("every element of a characteristic-2 field is a square");
  for (std::uint32_t v = 1; v < F->q; ++v) {
    Elt x(v, F.get());
    if (!F->is_square(x)) return x;
  }
  throw std::logic_error("no nonsquare found");  // unreachable for q > 1 odd
}

}  // namespace gf
}  // namespace ortho8

#endif  // ORTHO8_GF_HPP_
