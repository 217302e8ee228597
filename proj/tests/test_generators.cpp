#include <catch2/catch_amalgamated.hpp>

#include "ortho8/generators.hpp"
#include "ortho8/words.hpp"

using namespace ortho8;
using namespace ortho8::generators;
using gf::Elt;
using linalg::Mat;

TEST_CASE("build_pair runs its gate for every family at desk scale") {
  auto id8 = [](const gf::FieldPtr& F) { return Mat<Elt>::identity(8, F->zero()); };

  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}}) {
    auto F = gf::field_make(p, f);
    for (const auto& a : valid_a_values(Family::kPlusEven, F)) {
      auto pr = build_pair(Family::kPlusEven, F, a);
      CHECK(pr.x * pr.x == id8(F));
      CHECK(pr.y * pr.y * pr.y == id8(F));
    }
    for (const auto& a : valid_a_values(Family::kMinusEven, F)) {
      auto pr = build_pair(Family::kMinusEven, F, a);
      CHECK(forms::form_sign(pr.form) == forms::Sign::kMinus);
    }
  }
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 1}, {3, 2}}) {
    auto F = gf::field_make(p, f);
    for (const auto& a : valid_a_values(Family::kPlusOdd, F)) {
      auto pr = build_pair(Family::kPlusOdd, F, a);
      CHECK(forms::form_sign(pr.form) == forms::Sign::kPlus);
    }
    Elt xi = gf::find_nonsquare(F);
    for (const auto& a : valid_a_values(Family::kMinusOdd, F, xi)) {
      auto pr = build_pair(Family::kMinusOdd, F, a, xi);
      CHECK(forms::form_sign(pr.form) == forms::Sign::kMinus);
    }
  }
  auto F2 = gf::field_make(2, 1);
  auto pr = build_pair(Family::kMinus2, F2, std::nullopt);
  CHECK(pr.x * pr.x == id8(F2));
  CHECK(forms::form_sign(pr.form) == forms::Sign::kMinus);
}

TEST_CASE("parameter rejection reasons") {
  auto F4 = gf::field_make(2, 2);
  auto F2 = gf::field_make(2, 1);
  auto F3 = gf::field_make(3, 1);
  auto F5 = gf::field_make(5, 1);
  auto F9 = gf::field_make(3, 2);

  // q < 4 for the plus family
  CHECK_THROWS_AS(build_pair(Family::kPlusEven, F2, F2->one()), std::invalid_argument);
  CHECK_THROWS_AS(build_pair(Family::kPlusOdd, F3, F3->elt(1)), std::invalid_argument);
  // a = 0 / a not a generator
  CHECK_THROWS_AS(build_pair(Family::kPlusEven, F4, F4->zero()), std::invalid_argument);
  auto F16 = gf::field_make(2, 4);
  {
    // an element of the GF(4) subfield: x^4 = x but x not in GF(2)
    Elt sub = F16->zero();
    for (std::uint32_t c = 2; c < 16; ++c)
      if (F16->elt(c).pow(4) == F16->elt(c)) {
        sub = F16->elt(c);
        break;
      }
    REQUIRE_FALSE(sub.is_zero());
    CHECK_THROWS_AS(build_pair(Family::kPlusEven, F16, sub), std::invalid_argument);
  }
  // a = +-2 in odd characteristic
  CHECK_THROWS_AS(build_pair(Family::kPlusOdd, F5, F5->elt(2)), std::invalid_argument);
  CHECK_THROWS_AS(build_pair(Family::kPlusOdd, F5, F5->elt(3)), std::invalid_argument);
  // parity mismatches
  CHECK_THROWS_AS(build_pair(Family::kPlusOdd, F4, F4->elt(2)), std::invalid_argument);
  CHECK_THROWS_AS(build_pair(Family::kMinusEven, F5, F5->elt(1)), std::invalid_argument);
  CHECK_THROWS_AS(build_pair(Family::kMinusOdd, F4, F4->elt(2), F4->elt(3)),
                  std::invalid_argument);
  // minus-2 exists over GF(2) only
  CHECK_THROWS_AS(build_pair(Family::kMinus2, F4, std::nullopt), std::invalid_argument);
  // xi must be a nonsquare
  CHECK_THROWS_AS(build_pair(Family::kMinusOdd, F5, F5->elt(1), F5->elt(4)),
                  std::invalid_argument);
  // minus-odd needs F_p[a^2 xi] = F_q: a^2 xi lands in GF(3) here
  Elt a9 = F9->elt(3);  // generator of GF(9)
  Elt bad_xi = gf::find_nonsquare(F9);
  Elt forced = a9 * a9 * bad_xi;
  if (forced.pow(3) == forced) {  // a^2 xi in the prime subfield
    CHECK_THROWS_AS(build_pair(Family::kMinusOdd, F9, a9, bad_xi), std::invalid_argument);
  }
}

TEST_CASE("minus-even validity matches the Witt obstruction polynomial") {
  for (std::uint32_t f = 2; f <= 5; ++f) {
    auto F = gf::field_make(2, f);
    std::size_t valid = 0;
    for (std::uint32_t c = 0; c < F->q; ++c) {
      Elt a = F->elt(c);
      bool ok = true;
      try {
        build_pair(Family::kMinusEven, F, a);
      } catch (const std::invalid_argument&) {
        ok = false;
      }
      if (ok) ++valid;
      bool generator = !a.is_zero() && !(a == F->one()) && gf::is_field_generator(a);
      poly::Poly<Elt> pt(F->zero(),
                         std::vector<Elt>{(a + F->one()).pow(4), F->one(), F->one()});
      CHECK(ok == (generator && poly::poly_irreducible(pt)));
    }
    CHECK(valid > 0);  // Lemma pol_irr guarantees a witness
  }
}

TEST_CASE("tr(xy) = (a+1)^2 for the minus-even family, exhaustive q <= 64") {
  for (std::uint32_t f = 2; f <= 6; ++f) {
    auto F = gf::field_make(2, f);
    for (const auto& a : valid_a_values(Family::kMinusEven, F)) {
      auto pr = build_pair(Family::kMinusEven, F, a);
      Elt expect = (a + F->one()) * (a + F->one());
      CHECK((pr.x * pr.y).trace() == expect);
    }
  }
}

TEST_CASE("chi_xy(1) != 0 for the minus families") {
  auto t_at_one = [](const generators::GeneratorPair& pr) {
    return linalg::char_poly(pr.x * pr.y).eval(pr.field->one());
  };
  for (std::uint32_t f = 2; f <= 4; ++f) {
    auto F = gf::field_make(2, f);
    for (const auto& a : valid_a_values(Family::kMinusEven, F)) {
      auto pr = build_pair(Family::kMinusEven, F, a);
      Elt num = a.pow(4);
      Elt den = (a + F->one()).pow(4);
      CHECK(t_at_one(pr) == num / den);
    }
  }
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {7, 1}}) {
    auto F = gf::field_make(p, f);
    Elt xi = gf::find_nonsquare(F);
    for (const auto& a : valid_a_values(Family::kMinusOdd, F, xi)) {
      auto pr = build_pair(Family::kMinusOdd, F, a, xi);
      CHECK(t_at_one(pr) == a * a * xi);
      CHECK_FALSE(t_at_one(pr).is_zero());
    }
  }
}

TEST_CASE("printed triality images lie in SO+ and have the right orders") {
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {5, 1}, {7, 1}}) {
    auto F = gf::field_make(p, f);
    Elt a = (p == 2) ? F->elt(2) : F->elt(1);
    auto im = printed_triality_images(F, a);
    auto Q = plus_form(F);
    auto id = Mat<Elt>::identity(8, F->zero());
    for (const Mat<Elt>* m : {&im.tau_x, &im.tau2_x, &im.tau_y, &im.tau2_y}) {
      CHECK(Q.preserves(*m));
      CHECK(linalg::det_gauss(*m) == F->one());
    }
    CHECK(im.tau_x * im.tau_x == id);
    CHECK(im.tau2_x * im.tau2_x == id);
    // the printed y-images cube to I in characteristic 2 and to -I otherwise
    Mat<Elt> expect_cube = (p == 2) ? id : -id;
    CHECK(im.tau_y * im.tau_y * im.tau_y == expect_cube);
    CHECK(im.tau2_y * im.tau2_y * im.tau2_y == expect_cube);
    if (p != 2) {
      Mat<Elt> ny = -im.tau_y;
      CHECK(ny * ny * ny == id);
    }
  }
}

TEST_CASE("the q = 2 and q >= 4 even families share the same y matrix") {
  auto F2 = gf::field_make(2, 1);
  auto F4 = gf::field_make(2, 2);
  auto p2 = build_pair(Family::kMinus2, F2, std::nullopt);
  auto p4 = build_pair(Family::kMinusEven, F4, F4->elt(2));
  // same 0/1 pattern
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(p2.y.at(i, j).code == p4.y.at(i, j).code);
  // and y(5,5) = 1 as printed
  CHECK(p4.y.at(4, 4) == F4->one());
}
