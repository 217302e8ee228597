#include <catch2/catch_amalgamated.hpp>

#include "ortho8/fraction.hpp"
#include "ortho8/matrix.hpp"
#include "ortho8/rng.hpp"

using namespace ortho8;
using gf::Elt;
using linalg::Mat;
using poly::Poly;

namespace {

Mat<Elt> random_matrix(const gf::FieldPtr& F, std::size_t n, Lcg& rng) {
  Mat<Elt> m(n, n, F->zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = F->elt(rng.next_below(F->q));
  return m;
}

Mat<Elt> random_invertible(const gf::FieldPtr& F, std::size_t n, Lcg& rng) {
  for (;;) {
    Mat<Elt> m = random_matrix(F, n, rng);
    if (!linalg::det_gauss(m).is_zero()) return m;
  }
}

// independent characteristic polynomial: Gaussian determinant of (tI - M)
// over the fraction field GF(q)(t)
Poly<Elt> char_poly_via_fractions(const Mat<Elt>& m) {
  using Frac = poly::Fraction<Elt>;
  const gf::Field* F = m.zero_witness().field;
  Poly<Elt> t = Poly<Elt>::variable(Elt(0, F));
  Mat<Frac> big(m.rows(), m.cols(), Frac(Poly<Elt>::zero(Elt(0, F))));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Poly<Elt> entry = -Poly<Elt>::constant(m.at(i, j));
      if (i == j) entry = t + entry;
      big.at(i, j) = Frac(entry);
    }
  Frac d = linalg::det_gauss(big);
  REQUIRE(d.is_polynomial());
  return d.as_polynomial();
}

}  // namespace

TEST_CASE("char_poly of identity") {
  auto F = gf::field_make(5, 1);
  auto id = Mat<Elt>::identity(8, F->zero());
  Poly<Elt> chi = linalg::char_poly(id);
  auto t = Poly<Elt>::variable(F->zero());
  CHECK(chi == (t - poly::ring_one(t)).pow(8));
}

TEST_CASE("char_poly matches Gaussian determinant of tI - M") {
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {5, 1}, {3, 2}}) {
    auto F = gf::field_make(p, f);
    Lcg rng(1234 + p * 10 + f);
    for (int it = 0; it < 8; ++it) {
      Mat<Elt> m = random_matrix(F, 5, rng);
      CHECK(linalg::char_poly(m) == char_poly_via_fractions(m));
    }
  }
}

TEST_CASE("char_poly is a conjugation invariant") {
  auto F = gf::field_make(7, 1);
  Lcg rng(555);
  for (int it = 0; it < 10; ++it) {
    Mat<Elt> m = random_matrix(F, 6, rng);
    Mat<Elt> g = random_invertible(F, 6, rng);
    Mat<Elt> conj = g * m * linalg::inverse(g);
    CHECK(linalg::char_poly(conj) == linalg::char_poly(m));
  }
}

TEST_CASE("char_poly roots are exactly the eigenvalues, exhaustive lambda scan") {
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {13, 1}}) {
    auto F = gf::field_make(p, f);
    Lcg rng(31 * p + f);
    for (int it = 0; it < 4; ++it) {
      Mat<Elt> m = random_matrix(F, 4, rng);
      Poly<Elt> chi = linalg::char_poly(m);
      for (std::uint32_t c = 0; c < F->q; ++c) {
        Elt lam = F->elt(c);
        bool root = chi.eval(lam).is_zero();
        bool eig = linalg::eigenspace(m, lam).dim() > 0;
        CHECK(root == eig);
      }
    }
  }
}

TEST_CASE("determinants: Berkowitz equals Gaussian, det_rows full selection") {
  auto F = gf::field_make(3, 2);
  Lcg rng(77);
  for (int it = 0; it < 10; ++it) {
    Mat<Elt> m = random_matrix(F, 5, rng);
    Elt d1 = linalg::det(m);
    Elt d2 = linalg::det_gauss(m);
    CHECK(d1 == d2);
    CHECK(linalg::det_rows(m, {0, 1, 2, 3, 4}) == d1);
  }
}

TEST_CASE("det_rows picks the stated square submatrix") {
  auto F = gf::field_make(5, 1);
  Mat<Elt> m(3, 2, F->zero());
  m.at(0, 0) = F->elt(1);
  m.at(0, 1) = F->elt(2);
  m.at(1, 0) = F->elt(4);
  m.at(1, 1) = F->elt(4);
  m.at(2, 0) = F->elt(3);
  m.at(2, 1) = F->elt(1);
  CHECK(linalg::det_rows(m, {0, 2}) == F->from_int(1 * 1 - 2 * 3));
  CHECK_THROWS_AS(linalg::det_rows(m, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(linalg::det_rows(m, {0, 5}), std::invalid_argument);
}

TEST_CASE("eigenspace and e_lambda basics") {
  auto F = gf::field_make(7, 1);
  auto id = Mat<Elt>::identity(5, F->zero());
  CHECK(linalg::eigenspace(id, F->one()).dim() == 5);
  CHECK(linalg::e_lambda(id, F->one()).dim() == 0);  // Im(I - I) = 0

  // diag(1,1,2,3,3) with a nilpotent tweak in the 3-block
  Mat<Elt> m(5, 5, F->zero());
  std::vector<int> d{1, 1, 2, 3, 3};
  for (int i = 0; i < 5; ++i) m.at(i, i) = F->from_int(d[i]);
  m.at(3, 4) = F->one();
  CHECK(linalg::eigenspace(m, F->from_int(1)).dim() == 2);
  CHECK(linalg::eigenspace(m, F->from_int(2)).dim() == 1);
  CHECK(linalg::eigenspace(m, F->from_int(3)).dim() == 1);
  CHECK(linalg::eigenspace(m, F->from_int(5)).dim() == 0);
}

TEST_CASE("e_lambda is contained in the eigenspace") {
  auto F = gf::field_make(3, 2);
  Lcg rng(2024);
  for (int it = 0; it < 12; ++it) {
    Mat<Elt> m = random_matrix(F, 5, rng);
    for (std::uint32_t c = 0; c < F->q; ++c) {
      Elt lam = F->elt(c);
      auto v = linalg::eigenspace(m, lam);
      if (v.dim() == 0) continue;
      auto e = linalg::e_lambda(m, lam);
      CHECK(v.contains_subspace(e, F->zero()));
    }
  }
}

TEST_CASE("subspace canonical form makes equality structural") {
  auto F = gf::field_make(5, 1);
  std::vector<Elt> v1{F->elt(1), F->elt(2), F->elt(3)};
  std::vector<Elt> v2{F->elt(0), F->elt(1), F->elt(4)};
  std::vector<Elt> w1{F->elt(2), F->elt(4), F->elt(1)};  // 2*v1
  std::vector<Elt> w2{F->elt(1), F->elt(3), F->elt(2)};  // v1 + v2
  linalg::Subspace<Elt> a(3, {v1, v2}, F->zero());
  linalg::Subspace<Elt> b(3, {w1, w2}, F->zero());
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(w2, F->zero()));
}

TEST_CASE("intersection via Zassenhaus") {
  auto F = gf::field_make(7, 1);
  Lcg rng(3141);
  for (int it = 0; it < 15; ++it) {
    std::vector<std::vector<Elt>> us;
    for (int k = 0; k < 3; ++k) {
      std::vector<Elt> u;
      for (int j = 0; j < 5; ++j) u.push_back(F->elt(rng.next_below(7)));
      us.push_back(u);
    }
    linalg::Subspace<Elt> U(5, {us[0], us[1]}, F->zero());
    linalg::Subspace<Elt> W(5, {us[1], us[2]}, F->zero());
    auto I = linalg::intersect(U, W, F->zero());
    CHECK(U.contains_subspace(I, F->zero()));
    CHECK(W.contains_subspace(I, F->zero()));
    if (U.dim() == 2 && W.dim() == 2) CHECK(I.contains(us[1], F->zero()));
  }
}

TEST_CASE("element_order") {
  auto F = gf::field_make(5, 1);
  auto id = Mat<Elt>::identity(3, F->zero());
  CHECK(linalg::element_order(id) == 1);

  // permutation of order 6 = lcm(2,3)
  Mat<Elt> m(5, 5, F->zero());
  m.at(0, 1) = F->one();
  m.at(1, 0) = F->one();
  m.at(2, 3) = F->one();
  m.at(3, 4) = F->one();
  m.at(4, 2) = F->one();
  CHECK(linalg::element_order(m) == 6);
  CHECK(linalg::element_order(m, 5) == std::nullopt);  // cap overflow

  Mat<Elt> sing(2, 2, F->zero());
  CHECK_THROWS_AS(linalg::element_order(sing), std::domain_error);
}

TEST_CASE("char_poly over a polynomial ring specializes pointwise") {
  auto F = gf::field_make(5, 1);
  using P = Poly<Elt>;
  P a = P::variable(F->zero());
  P zero = poly::ring_zero(a), one = poly::ring_one(a);
  Mat<P> sym(3, 3, zero);
  sym.at(0, 1) = one;
  sym.at(1, 2) = one;
  sym.at(2, 0) = a;
  sym.at(2, 2) = a * a;
  Poly<P> chi_sym = linalg::char_poly(sym);
  for (std::uint32_t c = 0; c < 5; ++c) {
    Elt a0 = F->elt(c);
    Mat<Elt> inst(3, 3, F->zero());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) inst.at(i, j) = sym.at(i, j).eval(a0);
    Poly<Elt> chi_inst = linalg::char_poly(inst);
    for (int k = 0; k <= 3; ++k) CHECK(chi_sym.coeff(k).eval(a0) == chi_inst.coeff(k));
  }
}

TEST_CASE("matrix text form") {
  auto F = gf::field_make(5, 1);
  Mat<Elt> m(2, 2, F->zero());
  m.at(0, 1) = F->elt(3);
  m.at(1, 0) = F->elt(4);
  CHECK(m.str() == "0,3;4,0");
}
