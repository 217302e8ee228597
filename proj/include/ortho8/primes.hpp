// Prime sets: trial-division factoring and the prime divisors of
// |Omega_8^{+-}(q)| read off the group-order polynomial (the small center
// divisor cannot change the prime set).

#ifndef ORTHO8_PRIMES_HPP_
#define ORTHO8_PRIMES_HPP_

#include <cstdint>
#include <set>
#include <stdexcept>

#include "ortho8/forms.hpp"

namespace ortho8 {
namespace primes {

inline std::set<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::set<std::uint64_t> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ps.insert(d);
      n /= d;
    }
  if (n > 1) ps.insert(n);
  return ps;
}

// prime divisors of |Omega_8^sign(q)|:
//   plus:  q^12 (q^4-1)^2 (q^6-1) (q^2-1) up to the center factor
//   minus: q^12 (q^4+1) (q^6-1) (q^4-1) (q^2-1) up to the center factor
inline std::set<std::uint64_t> prime_set_omega(forms::Sign sign, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  if (q > 1024) throw std::invalid_argument("prime_set_omega supports q <= 1024");
  std::uint64_t q2 = q * q, q4 = q2 * q2, q6 = q4 * q2;
  std::set<std::uint64_t> ps = prime_divisors(q);
  if (ps.size() != 1) throw std::invalid_argument("q must be a prime power");
  for (std::uint64_t n : {q2 - 1, q4 - 1, q6 - 1}) {
    auto d = prime_divisors(n);
    ps.insert(d.begin(), d.end());
  }
  if (sign == forms::Sign::kMinus) {
    auto d = prime_divisors(q4 + 1);
    ps.insert(d.begin(), d.end());
  }
  return ps;
}

}  // namespace primes
}  // namespace ortho8

#endif  // ORTHO8_PRIMES_HPP_
