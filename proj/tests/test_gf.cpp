#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "ortho8/gf.hpp"
#include "ortho8/rng.hpp"

using namespace ortho8;
using gf::Elt;

TEST_CASE("prime field construction") {
  auto F2 = gf::field_make(2, 1);
  CHECK(F2->q == 2);
  CHECK(F2->defining_poly == std::vector<std::uint32_t>{0, 1});

  auto F5 = gf::field_make(5, 1);
  CHECK((F5->elt(2) + F5->elt(3)).is_zero());
  CHECK(F5->elt(2) * F5->elt(3) == F5->one());
}

TEST_CASE("GF(4) multiplicative structure") {
  auto F4 = gf::field_make(2, 2);
  CHECK(F4->q == 4);
  // t^2 + t + 1 is the lex-smallest irreducible over GF(2)
  CHECK(F4->defining_poly == std::vector<std::uint32_t>{1, 1, 1});
  for (std::uint32_t c = 2; c < 4; ++c) {
    Elt x = F4->elt(c);
    CHECK(x * x * x == F4->one());
    CHECK(x != F4->one());
  }
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(gf::field_make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(gf::field_make(2, 21), std::invalid_argument);
  CHECK_THROWS_AS(gf::field_make(1048583, 1), std::invalid_argument);  // prime > 2^20
}

TEST_CASE("field registry returns identical objects") {
  CHECK(gf::field_make(3, 2).get() == gf::field_make(3, 2).get());
}

TEST_CASE("field axioms, spot-checked") {
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {2, 4}, {3, 2}, {5, 1}, {7, 2}, {13, 1}}) {
    auto F = gf::field_make(p, f);
    Lcg rng(0x9e3779b97f4a7c15ull ^ (p * 1000 + f));
    for (int it = 0; it < 50; ++it) {
      Elt x = F->elt(rng.next_below(F->q));
      Elt y = F->elt(rng.next_below(F->q));
      Elt z = F->elt(rng.next_below(F->q));
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + (-x) == F->zero());
      if (!x.is_zero()) {
        CHECK(x * x.inv() == F->one());
        CHECK(x / x == F->one());
      }
    }
  }
}

TEST_CASE("Frobenius is a field automorphism and x^q = x, exhaustive") {
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 12}, {3, 5}, {5, 3}, {61, 1}}) {
    auto F = gf::field_make(p, f);
    REQUIRE(F->q <= (1u << 12));
    for (std::uint32_t c = 0; c < F->q; ++c) {
      Elt x = F->elt(c);
      CHECK(x.pow(F->q) == x);
    }
    Lcg rng(42 + p);
    for (int it = 0; it < 100; ++it) {
      Elt x = F->elt(rng.next_below(F->q));
      Elt y = F->elt(rng.next_below(F->q));
      CHECK(F->frobenius(x + y) == F->frobenius(x) + F->frobenius(y));
      CHECK(F->frobenius(x * y) == F->frobenius(x) * F->frobenius(y));
    }
  }
}

TEST_CASE("is_field_generator") {
  auto F4 = gf::field_make(2, 2);
  CHECK_FALSE(gf::is_field_generator(F4->one()));
  CHECK(gf::is_field_generator(F4->elt(2)));
  CHECK(gf::is_field_generator(F4->elt(3)));

  auto F7 = gf::field_make(7, 1);
  for (std::uint32_t c = 0; c < 7; ++c) CHECK(gf::is_field_generator(F7->elt(c)));

  // subfield chain inside GF(2^4): GF(4) = {0, 1, g^5, g^10}
  auto F16 = gf::field_make(2, 4);
  int generators = 0;
  for (std::uint32_t c = 0; c < 16; ++c)
    if (gf::is_field_generator(F16->elt(c))) ++generators;
  CHECK(generators == 16 - 4);  // exactly the elements outside GF(4) = GF(2^2) over GF(2^1)...

  // oracle: an element generates GF(16) iff its powers + sums reach everything;
  // cheaper equivalent oracle: x in GF(4) iff x^4 = x
  for (std::uint32_t c = 0; c < 16; ++c) {
    Elt x = F16->elt(c);
    bool in_gf4 = x.pow(4) == x;
    bool in_gf2 = x.pow(2) == x;
    CHECK(gf::is_field_generator(x) == (!in_gf4 && !in_gf2));
  }
}

TEST_CASE("cube_root_unity") {
  auto F4 = gf::field_make(2, 2);
  Elt w = gf::cube_root_unity(F4);
  CHECK(w.field == F4.get());
  CHECK(w != F4->one());
  CHECK(w * w * w == F4->one());
  CHECK(w.code == 2);  // the smaller of the two order-3 elements

  auto F7 = gf::field_make(7, 1);
  Elt w7 = gf::cube_root_unity(F7);
  CHECK(w7 == F7->elt(2));  // 2^3 = 8 = 1 (mod 7)

  // 3 does not divide 5 - 1: the root lives in GF(25)
  auto F5 = gf::field_make(5, 1);
  Elt w5 = gf::cube_root_unity(F5);
  auto F25 = gf::field_make(5, 2);
  CHECK(w5.field == F25.get());
  CHECK(w5 * w5 + w5 + F25->one() == F25->zero());

  CHECK_THROWS_AS(gf::cube_root_unity(gf::field_make(3, 2)), std::domain_error);

  // w^2 + w + 1 = 0 whenever defined
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {7, 1}, {13, 1}, {5, 2}, {11, 1}}) {
    auto F = gf::field_make(p, f);
    Elt om = gf::cube_root_unity(F);
    Elt one = Elt(1, om.field);
    CHECK(om * om + om + one == one - one);
  }
}

TEST_CASE("find_nonsquare") {
  auto F5 = gf::field_make(5, 1);
  CHECK(gf::find_nonsquare(F5) == F5->elt(2));
  auto F7 = gf::field_make(7, 1);
  CHECK(gf::find_nonsquare(F7) == F7->elt(3));
  CHECK_THROWS_AS(gf::find_nonsquare(gf::field_make(2, 3)), std::domain_error);

  // GF(9): derive the expected value by enumerating all squares
  auto F9 = gf::field_make(3, 2);
  std::set<std::uint32_t> squares;
  for (std::uint32_t c = 0; c < 9; ++c) squares.insert((F9->elt(c) * F9->elt(c)).code);
  std::uint32_t smallest_missing = 0;
  while (squares.count(smallest_missing)) ++smallest_missing;
  Elt xi = gf::find_nonsquare(F9);
  CHECK(xi.code == smallest_missing);

  // Euler criterion on every odd field in play
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 1}, {3, 3}, {5, 2}, {7, 2}, {11, 1}, {13, 1}}) {
    auto F = gf::field_make(p, f);
    Elt xi2 = gf::find_nonsquare(F);
    CHECK(xi2.pow((F->q - 1) / 2) == -F->one());
  }
}

TEST_CASE("embeddings are canonical field morphisms") {
  auto F4 = gf::field_make(2, 2);
  auto F16 = gf::field_make(2, 4);
  gf::Embedding em(F4, F16);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      Elt x = F4->elt(a), y = F4->elt(b);
      CHECK(em(x + y) == em(x) + em(y));
      CHECK(em(x * y) == em(x) * em(y));
    }
  CHECK(em(F4->one()) == F16->one());

  auto F5 = gf::field_make(5, 1);
  auto F25 = gf::field_make(5, 2);
  gf::Embedding em5(F5, F25);
  CHECK(em5(F5->elt(3)) == F25->elt(3));  // prime subfield is fixed pointwise
}

TEST_CASE("descriptor serialization") {
  CHECK(gf::field_make(2, 2)->descriptor() == "2^2:poly=1,1,1");
  CHECK(gf::field_make(5, 1)->descriptor() == "5^1:poly=0,1");
}

TEST_CASE("characteristic-2 helpers") {
  auto F8 = gf::field_make(2, 3);
  for (std::uint32_t c = 0; c < 8; ++c) {
    Elt d = F8->elt(c);
    bool solvable = F8->artin_schreier_solvable(d);
    if (solvable) {
      Elt s = F8->artin_schreier_root(d);
      CHECK(s * s + s == d);
    } else {
      CHECK_THROWS_AS(F8->artin_schreier_root(d), std::domain_error);
    }
  }
}

TEST_CASE("odd-characteristic square roots") {
  auto F = gf::field_make(7, 2);
  int square_count = 0;
  for (std::uint32_t c = 1; c < F->q; ++c) {
    Elt x = F->elt(c);
    if (F->is_square(x)) {
      ++square_count;
      Elt r = F->sqrt(x);
      CHECK(r * r == x);
    }
  }
  CHECK(square_count == (static_cast<int>(F->q) - 1) / 2);
}
