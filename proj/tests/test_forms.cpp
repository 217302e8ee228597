#include <catch2/catch_amalgamated.hpp>

#include "ortho8/forms.hpp"
#include "ortho8/generators.hpp"
#include "ortho8/rng.hpp"
#include "ortho8/words.hpp"

using namespace ortho8;
using namespace ortho8::forms;
using generators::Family;
using gf::Elt;
using linalg::Mat;

namespace {

// random non-degenerate quadratic form on F_q^8
QuadraticForm random_form(const gf::FieldPtr& F, Lcg& rng) {
  for (;;) {
    Mat<Elt> gram(8, 8, F->zero());
    std::vector<Elt> diag(8, F->zero());
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        Elt v = F->elt(rng.next_below(F->q));
        gram.at(i, j) = v;
        gram.at(j, i) = v;
      }
    if (F->p == 2) {
      for (int i = 0; i < 8; ++i) diag[i] = F->elt(rng.next_below(F->q));
    } else {
      Elt two = F->from_int(2);
      for (int i = 0; i < 8; ++i) {
        diag[i] = F->elt(rng.next_below(F->q));
        gram.at(i, i) = diag[i] * two;
      }
    }
    try {
      return QuadraticForm(gram, diag);
    } catch (const std::invalid_argument&) {
      // degenerate draw, retry
    }
  }
}

// a pseudorandom word in the generators of a pair, as an isometry sample
Mat<Elt> random_isometry(const generators::GeneratorPair& pr, Lcg& rng, int len = 8) {
  Mat<Elt> g = Mat<Elt>::identity(8, pr.field->zero());
  for (int i = 0; i < len; ++i) g = g * (rng.next_below(2) ? pr.x : pr.y);
  return g;
}

}  // namespace

TEST_CASE("form values and polarization") {
  auto F = gf::field_make(5, 1);
  auto Q = generators::plus_form(F);
  // Q(sum a_i e_i + a_-i e_-i) = sum a_i a_-i
  Lcg rng(11);
  for (int it = 0; it < 20; ++it) {
    std::vector<Elt> v;
    for (int i = 0; i < 8; ++i) v.push_back(F->elt(rng.next_below(5)));
    Elt expect = F->zero();
    for (int i = 0; i < 4; ++i) expect = expect + v[i] * v[4 + i];
    CHECK(Q.value(v) == expect);
    // polarization identity
    std::vector<Elt> u;
    for (int i = 0; i < 8; ++i) u.push_back(F->elt(rng.next_below(5)));
    std::vector<Elt> sum = u;
    for (int i = 0; i < 8; ++i) sum[i] = sum[i] + v[i];
    CHECK(Q.bilinear(u, v) == Q.value(sum) - Q.value(u) - Q.value(v));
  }
}

TEST_CASE("preserves: identity, generators, and a scaling counterexample") {
  auto F = gf::field_make(5, 1);
  auto pr = generators::build_pair(Family::kMinusOdd, F, F->elt(1), F->elt(2));
  CHECK(pr.form.preserves(Mat<Elt>::identity(8, F->zero())));
  CHECK(pr.form.preserves(pr.x));
  CHECK(pr.form.preserves(pr.y));
  Mat<Elt> d = Mat<Elt>::identity(8, F->zero());
  d.at(0, 0) = F->elt(2);  // scales one hyperbolic coordinate
  CHECK_FALSE(pr.form.preserves(d));
}

TEST_CASE("form signs of the paper forms") {
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    auto F = gf::field_make(p, f);
    CHECK(form_sign(generators::plus_form(F)) == Sign::kPlus);
    CHECK(form_sign_witt(generators::plus_form(F)) == Sign::kPlus);
    if (p != 2) {
      auto Q = generators::minus_odd_form(F, gf::find_nonsquare(F));
      CHECK(form_sign(Q) == Sign::kMinus);
      CHECK(form_sign_witt(Q) == Sign::kMinus);
    }
  }
  auto F2 = gf::field_make(2, 1);
  CHECK(form_sign(generators::minus2_form(F2)) == Sign::kMinus);
  CHECK(form_sign_witt(generators::minus2_form(F2)) == Sign::kMinus);
  // minus-even form has sign minus exactly for valid a
  auto F4 = gf::field_make(2, 2);
  for (const auto& a : generators::valid_a_values(Family::kMinusEven, F4)) {
    auto Q = generators::minus_even_form(F4, a);
    CHECK(form_sign(Q) == Sign::kMinus);
    CHECK(form_sign_witt(Q) == Sign::kMinus);
  }
}

TEST_CASE("Arf/discriminant sign agrees with Witt decomposition on random forms") {
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 4}, {3, 1}, {5, 1}, {3, 3}, {5, 2}}) {
    auto F = gf::field_make(p, f);
    REQUIRE(F->q <= 27);
    Lcg rng(0xf0f0 + p * 100 + f);
    for (int it = 0; it < 100; ++it) {
      QuadraticForm Q = random_form(F, rng);
      CHECK(form_sign(Q) == form_sign_witt(Q));
    }
  }
}

TEST_CASE("quasideterminant basics") {
  auto F = gf::field_make(2, 2);
  auto pr = generators::build_pair(Family::kMinusEven, F, F->elt(2));
  CHECK(quasideterminant(Mat<Elt>::identity(8, F->zero()), pr.form) == +1);
  CHECK(quasideterminant(pr.x, pr.form) == +1);  // rk(I - x) = 4
  Mat<Elt> imx = Mat<Elt>::identity(8, F->zero()) - pr.x;
  CHECK(linalg::rank(imx) == 4);
  CHECK_THROWS_AS(quasideterminant(pr.x, generators::minus_odd_form(gf::field_make(5, 1),
                                                                    gf::field_make(5, 1)->elt(2))),
                  std::invalid_argument);
}

TEST_CASE("spinor norm: identity, reflections, and -I") {
  auto F = gf::field_make(5, 1);
  Elt xi = F->elt(2);
  auto Q = generators::minus_odd_form(F, xi);
  CHECK(spinor_norm(Mat<Elt>::identity(8, F->zero()), Q) == +1);

  // reflection in v: spinor norm is the square class of Q(v)
  Lcg rng(404);
  int seen_plus = 0, seen_minus = 0;
  for (int it = 0; it < 60; ++it) {
    std::vector<Elt> v;
    for (int i = 0; i < 8; ++i) v.push_back(F->elt(rng.next_below(5)));
    Elt qv = Q.value(v);
    if (qv.is_zero()) continue;
    Mat<Elt> r = reflection(Q, v);
    int expect = F->is_square(qv) ? +1 : -1;
    CHECK(spinor_norm(r, Q) == expect);
    (expect == 1 ? seen_plus : seen_minus)++;
  }
  CHECK(seen_plus > 0);
  CHECK(seen_minus > 0);

  // -I against the J-form: the product over an orthogonal basis of square
  // classes is xi's class (nonsquare), so -I is never in Omega here
  Mat<Elt> neg = -Mat<Elt>::identity(8, F->zero());
  Elt prod = F->one();
  // orthogonal basis: e_i +- e_{4+i} (i = 0,1,2), e_4, e_8
  for (int i = 0; i < 3; ++i) {
    std::vector<Elt> u(8, F->zero()), w(8, F->zero());
    u[i] = F->one();
    u[4 + i] = F->one();
    w[i] = F->one();
    w[4 + i] = -F->one();
    prod = prod * Q.value(u) * Q.value(w);
  }
  std::vector<Elt> e4(8, F->zero()), e8(8, F->zero());
  e4[3] = F->one();
  e8[7] = F->one();
  prod = prod * Q.value(e4) * Q.value(e8);
  CHECK_FALSE(F->is_square(prod));  // the derived witness
  CHECK(spinor_norm(neg, Q) == -1);
  CHECK_FALSE(in_omega(neg, Q));
}

TEST_CASE("quasideterminant and spinor norm are multiplicative on isometry words") {
  // characteristic 2
  {
    auto F = gf::field_make(2, 3);
    auto valid = generators::valid_a_values(Family::kMinusEven, F);
    REQUIRE_FALSE(valid.empty());
    auto pr = generators::build_pair(Family::kMinusEven, F, valid.front());
    Lcg rng(777);
    for (int it = 0; it < 50; ++it) {
      Mat<Elt> g = random_isometry(pr, rng);
      Mat<Elt> h = random_isometry(pr, rng);
      CHECK(quasideterminant(g * h, pr.form) ==
            quasideterminant(g, pr.form) * quasideterminant(h, pr.form));
    }
  }
  // odd characteristic, including elements with spinor norm -1: mix the
  // generators with reflections
  {
    auto F = gf::field_make(7, 1);
    Elt xi = gf::find_nonsquare(F);
    auto pr = generators::build_pair(Family::kMinusOdd, F, F->elt(1), xi);
    Lcg rng(778);
    std::vector<Mat<Elt>> pool{pr.x, pr.y};
    for (int tries = 0; static_cast<int>(pool.size()) < 4 && tries < 100; ++tries) {
      std::vector<Elt> v;
      for (int i = 0; i < 8; ++i) v.push_back(F->elt(rng.next_below(7)));
      if (!pr.form.value(v).is_zero()) pool.push_back(reflection(pr.form, v));
    }
    auto random_word = [&]() {
      Mat<Elt> g = Mat<Elt>::identity(8, F->zero());
      for (int i = 0; i < 6; ++i) g = g * pool[rng.next_below(pool.size())];
      return g;
    };
    for (int it = 0; it < 50; ++it) {
      Mat<Elt> g = random_word(), h = random_word();
      CHECK(spinor_norm(g * h, pr.form) == spinor_norm(g, pr.form) * spinor_norm(h, pr.form));
    }
  }
}

TEST_CASE("in_omega holds for arbitrary words in x and y") {
  Lcg rng(91);
  for (auto fam : {Family::kPlusOdd, Family::kMinusEven}) {
    auto F = fam == Family::kPlusOdd ? gf::field_make(5, 1) : gf::field_make(2, 2);
    std::optional<Elt> a = fam == Family::kPlusOdd ? F->elt(1) : F->elt(2);
    auto pr = generators::build_pair(fam, F, a);
    for (int it = 0; it < 20; ++it) {
      Mat<Elt> g = random_isometry(pr, rng, 10);
      CHECK(in_omega(g, pr.form));
    }
  }
}

TEST_CASE("degenerate forms are rejected") {
  auto F = gf::field_make(3, 1);
  Mat<Elt> gram(8, 8, F->zero());  // all-zero gram
  std::vector<Elt> diag(8, F->zero());
  CHECK_THROWS_AS(QuadraticForm(gram, diag), std::invalid_argument);
}

TEST_CASE("witt index distinguishes the two types") {
  auto F = gf::field_make(3, 1);
  CHECK(witt_index(generators::plus_form(F)) == 4);
  CHECK(witt_index(generators::minus_odd_form(F, gf::find_nonsquare(F))) == 3);
  auto F4 = gf::field_make(2, 2);
  CHECK(witt_index(generators::plus_form(F4)) == 4);
  CHECK(witt_index(generators::minus_even_form(F4, F4->elt(2))) == 3);
}

TEST_CASE("totally singular spans") {
  auto F = gf::field_make(2, 1);
  auto Q = generators::minus2_form(F);
  auto e = [&](int i) {
    std::vector<Elt> v(8, F->zero());
    v[i] = F->one();
    return v;
  };
  CHECK(forms::totally_singular(Q, {e(1), e(2), e(3)}));
  CHECK_FALSE(forms::totally_singular(Q, {e(0)}));        // Q(e1) = 1
  CHECK_FALSE(forms::totally_singular(Q, {e(1), e(5)}));  // B(e2, e-2) = 1
}
