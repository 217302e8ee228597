#include <catch2/catch_amalgamated.hpp>

#include "ortho8/fraction.hpp"
#include "ortho8/poly.hpp"
#include "ortho8/rng.hpp"

using namespace ortho8;
using gf::Elt;
using poly::Poly;

namespace {

Poly<Elt> from_ints(const gf::FieldPtr& F, std::initializer_list<long long> cs) {
  std::vector<Elt> v;
  for (long long c : cs) v.push_back(F->from_int(c));
  return Poly<Elt>(F->zero(), v);
}

}  // namespace

TEST_CASE("degree and zero conventions") {
  auto F = gf::field_make(5, 1);
  Poly<Elt> z = Poly<Elt>::zero(F->zero());
  CHECK(z.deg() == poly::kZeroDeg);
  CHECK(poly::kZeroDeg < 0);
  Poly<Elt> c = Poly<Elt>::constant(F->elt(3));
  CHECK(c.deg() == 0);
  CHECK(from_ints(F, {1, 0, 5}).deg() == 0);  // 5 = 0 mod 5 trims
}

TEST_CASE("ring arithmetic sanity") {
  auto F = gf::field_make(7, 1);
  auto t = Poly<Elt>::variable(F->zero());
  auto p = (t + Poly<Elt>::constant(F->one())).pow(3);
  CHECK(p == from_ints(F, {1, 3, 3, 1}));
  CHECK(p.eval(F->elt(2)) == F->elt(27 % 7));
  auto [q, r] = poly::divrem(p, t + Poly<Elt>::constant(F->elt(2)));
  CHECK(q * (t + Poly<Elt>::constant(F->elt(2))) + r == p);
}

TEST_CASE("gcd basics") {
  auto F = gf::field_make(5, 1);
  auto t = Poly<Elt>::variable(F->zero());
  auto one = poly::ring_one(t);

  // gcd(t^2 - 1, t - 1) = t - 1
  auto a = t * t - one;
  auto b = t - one;
  CHECK(poly_gcd(a, b) == b);

  // gcd(f, 0) is the monic multiple of f
  auto f = from_ints(F, {2, 4, 3});
  CHECK(poly_gcd(f, Poly<Elt>::zero(F->zero())) == poly::make_monic(f));
  CHECK(poly_gcd(f, Poly<Elt>::zero(F->zero())).lead() == F->one());

  // gcd of random products shares the planted factor
  Lcg rng(7);
  for (int it = 0; it < 25; ++it) {
    auto rand_poly = [&](int deg) {
      std::vector<Elt> c;
      for (int i = 0; i <= deg; ++i) c.push_back(F->elt(rng.next_below(5)));
      c.push_back(F->one());
      return Poly<Elt>(F->zero(), c);
    };
    auto g = rand_poly(2), u = rand_poly(3), v = rand_poly(3);
    auto d = poly_gcd(g * u, g * v);
    // the planted g divides the gcd
    CHECK(poly::divrem(d, poly::make_monic(g)).second.is_zero());
  }
}

TEST_CASE("irreducibility, small degrees") {
  auto F2 = gf::field_make(2, 1);
  CHECK(poly::poly_irreducible(from_ints(F2, {1, 1, 1})));  // t^2+t+1
  auto F5 = gf::field_make(5, 1);
  CHECK_FALSE(poly::poly_irreducible(from_ints(F5, {-1, 0, 1})));  // t^2-1 has roots
  CHECK(poly::poly_irreducible(from_ints(F5, {2, 0, 1})));         // t^2+2
  CHECK(poly::poly_irreducible(from_ints(F5, {3, 1})));            // linear
  CHECK_FALSE(poly::poly_irreducible(Poly<Elt>::constant(F5->elt(2))));
}

TEST_CASE("irreducibility vs exhaustive factor search, degree 4-6 over GF(2), GF(3)") {
  for (std::uint32_t p : {2u, 3u}) {
    auto F = gf::field_make(p, 1);
    for (int n = 4; n <= 6; ++n) {
      std::uint64_t count = 1;
      for (int i = 0; i < n; ++i) count *= p;
      int irreducible_found = 0;
      for (std::uint64_t m = 0; m < count; ++m) {
        std::vector<Elt> c;
        std::uint64_t mm = m;
        for (int i = 0; i < n; ++i) {
          c.push_back(F->elt(static_cast<std::uint32_t>(mm % p)));
          mm /= p;
        }
        c.push_back(F->one());
        Poly<Elt> f(F->zero(), c);
        // oracle: trial divide by all monic polys of degree 1..n/2
        bool has_factor = false;
        for (int k = 1; 2 * k <= n && !has_factor; ++k) {
          std::uint64_t dk = 1;
          for (int i = 0; i < k; ++i) dk *= p;
          for (std::uint64_t dm = 0; dm < dk && !has_factor; ++dm) {
            std::vector<Elt> dc;
            std::uint64_t x = dm;
            for (int i = 0; i < k; ++i) {
              dc.push_back(F->elt(static_cast<std::uint32_t>(x % p)));
              x /= p;
            }
            dc.push_back(F->one());
            if (poly::divrem(f, Poly<Elt>(F->zero(), dc)).second.is_zero()) has_factor = true;
          }
        }
        bool irr = poly::poly_irreducible(f);
        CHECK(irr == !has_factor);
        if (irr) ++irreducible_found;
      }
      CHECK(irreducible_found > 0);
    }
  }
}

TEST_CASE("Carlitz count: #(alpha with t^2+t+alpha irreducible over GF(2^f)) = 2^(f-1)") {
  for (std::uint32_t f = 1; f <= 12; ++f) {
    auto F = gf::field_make(2, f);
    std::uint64_t count = 0;
    for (std::uint32_t code = 0; code < F->q; ++code) {
      std::vector<Elt> c{F->elt(code), F->one(), F->one()};
      if (poly::poly_irreducible(Poly<Elt>(F->zero(), c))) ++count;
    }
    CHECK(count == (1ull << (f - 1)));
  }
}

TEST_CASE("fractions reduce and obey field axioms") {
  auto F = gf::field_make(3, 1);
  using Frac = poly::Fraction<Elt>;
  auto t = Poly<Elt>::variable(F->zero());
  auto one = poly::ring_one(t);

  Frac x(t * t - one, t - one);  // reduces to t + 1
  CHECK(x.is_polynomial());
  CHECK(x.as_polynomial() == t + one);

  Frac y(one, t);
  CHECK(y + y + y == poly::ring_zero(y));  // char 3
  CHECK(y * poly::ring_div(poly::ring_one(y), y) == poly::ring_one(y));

  Lcg rng(99);
  auto rand_frac = [&]() {
    std::vector<Elt> n, d;
    for (int i = 0; i < 3; ++i) n.push_back(F->elt(rng.next_below(3)));
    for (int i = 0; i < 2; ++i) d.push_back(F->elt(rng.next_below(3)));
    d.push_back(F->one());
    Poly<Elt> num(F->zero(), n), den(F->zero(), d);
    return Frac(num, den);
  };
  for (int it = 0; it < 30; ++it) {
    Frac a = rand_frac(), b = rand_frac(), c = rand_frac();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == poly::ring_zero(a));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("nested polynomial rings: GF(3)[xi][a]") {
  auto F = gf::field_make(3, 1);
  using P1 = Poly<Elt>;  // GF(3)[xi]
  using P2 = Poly<P1>;   // GF(3)[xi][a]
  P1 xi = P1::variable(F->zero());
  P2 a = P2::variable(P1::zero(F->zero()));
  P2 xi2 = P2::constant(xi);

  // (a*xi + 1)^3 = a^3 xi^3 + 1 in characteristic 3
  P2 lhs = (a * xi2 + poly::ring_one(a)).pow(3);
  P2 rhs = a.pow(3) * xi2.pow(3) + poly::ring_one(a);
  CHECK(lhs == rhs);
}
