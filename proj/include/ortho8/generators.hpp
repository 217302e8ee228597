// The (2,3)-generator pairs for the 8-dimensional orthogonal groups, one
// parameterized family per quadratic-form type and characteristic, plus the
// printed triality images of the plus-family pair.  Matrix entries live in
// one table of expression strings per family so each matrix is transcribed
// exactly once; every construction re-checks the defining invariants.

#ifndef ORTHO8_GENERATORS_HPP_
#define ORTHO8_GENERATORS_HPP_

#include <array>
#include <optional>
#include <string>

#include "ortho8/expr.hpp"
#include "ortho8/forms.hpp"
#include "ortho8/poly.hpp"

namespace ortho8 {
namespace generators {

using forms::QuadraticForm;
using gf::Elt;
using linalg::Mat;

enum class Family { kPlusEven, kPlusOdd, kMinus2, kMinusEven, kMinusOdd };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::kPlusEven:
      return "plus-even";
    case Family::kPlusOdd:
      return "plus-odd";
    case Family::kMinus2:
      return "minus-2";
    case Family::kMinusEven:
      return "minus-even";
    case Family::kMinusOdd:
      return "minus-odd";
  }
  return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
  for (Family f : {Family::kPlusEven, Family::kPlusOdd, Family::kMinus2, Family::kMinusEven,
                   Family::kMinusOdd})
    if (s == family_name(f)) return f;
  return std::nullopt;
}

using EntryTable = std::array<std::array<const char*, 8>, 8>;

// basis order everywhere: e1, e2, e3, e4, e-1, e-2, e-3, e-4

inline const EntryTable kXPlusEven = {{
    {"0", "0", "0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "0", "1", "(a+1)^2", "(a+1)^2", "a"},
    {"0", "0", "0", "0", "0", "(a+1)^2", "(a+1)^2", "a"},
    {"0", "0", "0", "0", "0", "a", "a", "1"},
    {"0", "1", "1", "0", "0", "0", "0", "0"},
    {"1", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "0", "1", "a", "0", "0", "0", "0"},
    {"0", "0", "a", "(a+1)^2", "0", "0", "0", "0"},
}};

inline const EntryTable kXPlusOdd = {{
    {"0", "-1", "0", "0", "0", "0", "0", "0"},
    {"-1", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "-1", "-1", "-a", "0", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "-1", "1", "0"},
    {"0", "0", "0", "-1", "-1", "0", "-1", "0"},
    {"0", "0", "0", "-2", "0", "0", "-1", "0"},
    {"1", "-1", "-2", "-2*a", "0", "0", "-a", "1"},
}};

inline const EntryTable kYPlus = {{
    {"1", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "1"},
    {"0", "0", "0", "0", "0", "1", "0", "0"},
    {"0", "0", "1", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "1", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0"},
    {"0", "1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "0"},
}};

inline const EntryTable kTauYPlus = {{
    {"0", "0", "0", "-1", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "1", "0", "0", "0"},
    {"0", "0", "-1", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "-1"},
    {"1", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "-1", "0"},
    {"0", "1", "0", "0", "0", "0", "0", "0"},
}};

inline const EntryTable kTau2YPlus = {{
    {"0", "0", "0", "0", "0", "0", "0", "1"},
    {"-1", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "-1", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "-1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "-1", "0"},
    {"0", "1", "0", "0", "0", "0", "0", "0"},
}};

inline const EntryTable kTauXEven = {{
    {"0", "a", "a", "0", "1", "0", "0", "0"},
    {"a", "0", "0", "0", "0", "1", "0", "1"},
    {"0", "0", "0", "0", "0", "0", "0", "1"},
    {"0", "0", "0", "0", "0", "1", "1", "0"},
    {"a^2+1", "0", "0", "0", "0", "a", "0", "0"},
    {"0", "a^2+1", "a^2+1", "0", "a", "0", "0", "0"},
    {"0", "a^2+1", "a^2+1", "1", "a", "0", "0", "0"},
    {"0", "0", "1", "0", "0", "0", "0", "0"},
}};

inline const EntryTable kTau2XEven = {{
    {"a", "a^2+1", "a^2+1", "0", "0", "0", "0", "0"},
    {"1", "a", "a", "0", "0", "1", "1", "0"},
    {"0", "0", "0", "0", "0", "1", "1", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "1"},
    {"0", "0", "0", "0", "a", "1", "0", "0"},
    {"0", "0", "0", "0", "a^2+1", "a", "0", "0"},
    {"0", "0", "1", "0", "a^2+1", "a", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0"},
}};

inline const EntryTable kTauXOdd = {{
    {"1", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "-1", "0", "0", "0", "0", "0", "0"},
    {"0", "1", "0", "1", "0", "0", "0", "0"},
    {"0", "1", "1", "0", "0", "0", "0", "0"},
    {"0", "-a", "0", "0", "1", "0", "0", "0"},
    {"-a", "0", "-1", "1", "0", "-1", "1", "1"},
    {"0", "-1", "-2", "0", "0", "0", "0", "1"},
    {"0", "1", "0", "2", "0", "0", "1", "0"},
}};

inline const EntryTable kTau2XOdd = {{
    {"0", "0", "0", "-1", "-a", "1", "-1", "0"},
    {"0", "0", "0", "0", "1", "0", "0", "0"},
    {"0", "-1", "-1", "0", "-1", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0"},
    {"0", "1", "0", "0", "0", "0", "0", "0"},
    {"1", "a", "0", "-1", "0", "0", "-1", "0"},
    {"0", "0", "0", "-2", "0", "0", "-1", "0"},
    {"0", "-1", "-2", "0", "-1", "0", "0", "1"},
}};

inline const EntryTable kXMinus2 = {{
    {"0", "1", "0", "0", "1", "0", "0", "0"},
    {"1", "1", "0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0"},
    {"0", "0", "1", "0", "0", "0", "0", "0"},
    {"0", "1", "0", "0", "0", "1", "0", "0"},
    {"1", "1", "0", "0", "1", "1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "1"},
    {"0", "0", "0", "0", "0", "0", "1", "0"},
}};

inline const EntryTable kYMinusEven = {{
    {"0", "0", "0", "0", "1", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0"},
    {"0", "1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "1", "0", "0", "0", "0", "0"},
    {"1", "0", "0", "0", "1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "1"},
    {"0", "0", "0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "0"},
}};

inline const EntryTable kXMinusEven = {{
    {"0", "a^-1", "0", "0", "0", "0", "0", "0"},
    {"a", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "a^2/(a+1)^2", "1/(a+1)^2", "0", "0", "0", "0"},
    {"0", "0", "1/(a+1)^2", "a^2/(a+1)^2", "0", "0", "0", "0"},
    {"(a+1)^2", "a^-1", "0", "0", "0", "a", "0", "0"},
    {"a^-1", "(a+1)^2/a^2", "0", "0", "a^-1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "a^2/(a+1)^2", "1/(a+1)^2"},
    {"0", "0", "0", "0", "0", "0", "1/(a+1)^2", "a^2/(a+1)^2"},
}};

inline const EntryTable kXMinusOdd = {{
    {"0", "0", "0", "0", "2", "0", "0", "0"},
    {"0", "1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "-1", "0", "0", "0", "-a^2*xi/2", "-a*xi"},
    {"0", "1", "0", "-1", "0", "0", "0", "0"},
    {"1/2", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "-1/2", "0", "1", "0", "1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "-1", "0"},
    {"0", "0", "0", "0", "0", "0", "a", "1"},
}};

inline const EntryTable kYMinusOdd = {{
    {"0", "0", "1", "0", "0", "0", "0", "0"},
    {"1", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "0"},
    {"0", "0", "0", "0", "1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "1"},
}};

inline const EntryTable kGramMinusOdd = {{
    {"0", "0", "0", "0", "1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0"},
    {"1", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "1", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "-xi"},
}};

// evaluate a whole entry table over any ring given symbol bindings
template <class R>
Mat<R> eval_table(const EntryTable& tab, const expr::Env<R>& env) {
  Mat<R> m(8, 8, ring_zero(env.witness));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m.at(i, j) = expr::eval_str<R>(tab[i][j], env);
  return m;
}

inline expr::Env<Elt> field_env(const gf::FieldPtr& F, std::optional<Elt> a = std::nullopt,
                                std::optional<Elt> xi = std::nullopt) {
  expr::Env<Elt> env(F->zero());
  if (a) env.bind("a", *a);
  if (xi) env.bind("xi", *xi);
  return env;
}

// the hyperbolic Gram matrix [[0, I4], [I4, 0]] shared by the plus form and
// both even-characteristic minus forms
inline Mat<Elt> hyperbolic_gram(const gf::FieldPtr& F) {
  Mat<Elt> g(8, 8, F->zero());
  for (int i = 0; i < 4; ++i) {
    g.at(i, 4 + i) = F->one();
    g.at(4 + i, i) = F->one();
  }
  return g;
}

// Q(sum a_i e_i + a_{-i} e_{-i}) = sum a_i a_{-i}
inline QuadraticForm plus_form(const gf::FieldPtr& F) {
  if (F->p == 2) return QuadraticForm(hyperbolic_gram(F), std::vector<Elt>(8, F->zero()));
  return QuadraticForm::from_gram_odd(hyperbolic_gram(F));
}

// q = 2 minus form: alpha_1^2 + alpha_{-1}^2 + sum alpha_i alpha_{-i}
inline QuadraticForm minus2_form(const gf::FieldPtr& F) {
  std::vector<Elt> diag(8, F->zero());
  diag[0] = F->one();
  diag[4] = F->one();
  return QuadraticForm(hyperbolic_gram(F), diag);
}

// even q >= 4 minus form: alpha_1^2 + alpha_{-1}^2
//   + a^2 sum_{i>=2} (alpha_i^2 + alpha_{-i}^2) + sum alpha_i alpha_{-i}
inline QuadraticForm minus_even_form(const gf::FieldPtr& F, const Elt& a) {
  std::vector<Elt> diag(8, a * a);
  diag[0] = F->one();
  diag[4] = F->one();
  return QuadraticForm(hyperbolic_gram(F), diag);
}

inline QuadraticForm minus_odd_form(const gf::FieldPtr& F, const Elt& xi) {
  auto env = field_env(F, std::nullopt, xi);
  return QuadraticForm::from_gram_odd(eval_table<Elt>(kGramMinusOdd, env));
}

struct GeneratorPair {
  Family family;
  gf::FieldPtr field;
  Mat<Elt> x;
  Mat<Elt> y;
  QuadraticForm form;
  Elt a;                  // unused for minus-2 (set to 0)
  std::optional<Elt> xi;  // minus-odd only
};

// family-specific parameter validation; throws std::invalid_argument with
// the reason on rejection
inline void validate_params(Family fam, const gf::FieldPtr& F, std::optional<Elt> a,
                            std::optional<Elt> xi) {
  auto need_a = [&]() -> Elt {
    if (!a) throw std::invalid_argument("parameter a is required");
    return *a;
  };
  switch (fam) {
    case Family::kPlusEven:
    case Family::kPlusOdd: {
      if (F->q < 4) throw std::invalid_argument("plus family requires q >= 4");
      bool odd = F->p != 2;
      if (odd != (fam == Family::kPlusOdd))
        throw std::invalid_argument("field parity does not match the family branch");
      Elt av = need_a();
      if (av.is_zero()) throw std::invalid_argument("a must be nonzero");
      if (!gf::is_field_generator(av)) throw std::invalid_argument("a must generate F_q over F_p");
      if (odd && (av == F->from_int(2) || av == F->from_int(-2)))
        throw std::invalid_argument("a = +-2 is excluded for odd characteristic");
      break;
    }
    case Family::kMinus2:
      if (F->q != 2) throw std::invalid_argument("the minus-2 pair is defined over GF(2) only");
      break;
    case Family::kMinusEven: {
      if (F->p != 2 || F->q < 4)
        throw std::invalid_argument("minus-even family requires even q >= 4");
      Elt av = need_a();
      if (av.is_zero() || av == F->one()) throw std::invalid_argument("a must avoid {0, 1}");
      if (!gf::is_field_generator(av)) throw std::invalid_argument("a must generate F_q over F_2");
      // the Witt-index obstruction: t^2 + t + (a+1)^4 must be irreducible
      Elt c = (av + F->one()).pow(4);
      poly::Poly<Elt> pt(F->zero(), std::vector<Elt>{c, F->one(), F->one()});
      if (!poly::poly_irreducible(pt))
        throw std::invalid_argument("t^2 + t + (a+1)^4 is reducible: the form has sign +");
      break;
    }
    case Family::kMinusOdd: {
      if (F->p == 2) throw std::invalid_argument("minus-odd family requires odd q");
      Elt av = need_a();
      if (!xi) throw std::invalid_argument("parameter xi is required");
      if (av.is_zero()) throw std::invalid_argument("a must be nonzero");
      if (xi->is_zero() || F->is_square(*xi))
        throw std::invalid_argument("xi must be a nonsquare");
      Elt u = av * av * (*xi);
      if (!gf::is_field_generator(u))
        throw std::invalid_argument("a^2 xi must generate F_q over F_p");
      break;
    }
  }
}

inline GeneratorPair build_pair(Family fam, const gf::FieldPtr& F, std::optional<Elt> a,
                                std::optional<Elt> xi = std::nullopt) {
  validate_params(fam, F, a, xi);
  auto env = field_env(F, a, xi);
  auto make = [&](const EntryTable& xt, const EntryTable& yt,
                  QuadraticForm Q) -> GeneratorPair {
    return GeneratorPair{fam,
                         F,
                         eval_table<Elt>(xt, env),
                         eval_table<Elt>(yt, env),
                         std::move(Q),
                         a.value_or(F->zero()),
                         xi};
  };
  GeneratorPair pair = [&]() {
    switch (fam) {
      case Family::kPlusEven:
        return make(kXPlusEven, kYPlus, plus_form(F));
      case Family::kPlusOdd:
        return make(kXPlusOdd, kYPlus, plus_form(F));
      case Family::kMinus2:
        return make(kXMinus2, kYMinusEven, minus2_form(F));
      case Family::kMinusEven:
        return make(kXMinusEven, kYMinusEven, minus_even_form(F, *a));
      case Family::kMinusOdd:
        return make(kXMinusOdd, kYMinusOdd, minus_odd_form(F, *xi));
    }
    throw std::logic_error("unknown family");
  }();

  // construction gate: the pair's defining invariants, checked exactly
  const Mat<Elt> id = Mat<Elt>::identity(8, F->zero());
  if (!(pair.x * pair.x == id)) throw std::logic_error("gate: x^2 != I");
  if (pair.x == id) throw std::logic_error("gate: x = I");
  if (!(pair.y * pair.y * pair.y == id)) throw std::logic_error("gate: y^3 != I");
  if (pair.y == id) throw std::logic_error("gate: y = I");
  if (!(linalg::det_gauss(pair.x) == F->one())) throw std::logic_error("gate: det x != 1");
  if (!(linalg::det_gauss(pair.y) == F->one())) throw std::logic_error("gate: det y != 1");
  if (!pair.form.preserves(pair.x)) throw std::logic_error("gate: x does not preserve Q");
  if (!pair.form.preserves(pair.y)) throw std::logic_error("gate: y does not preserve Q");
  if (!forms::in_omega(pair.x, pair.form)) throw std::logic_error("gate: x not in Omega");
  if (!forms::in_omega(pair.y, pair.form)) throw std::logic_error("gate: y not in Omega");
  forms::Sign expect =
      (fam == Family::kPlusEven || fam == Family::kPlusOdd) ? forms::Sign::kPlus
                                                            : forms::Sign::kMinus;
  if (forms::form_sign(pair.form) != expect) throw std::logic_error("gate: wrong form sign");
  return pair;
}

struct TrialityImages {
  Mat<Elt> tau_x;
  Mat<Elt> tau2_x;
  Mat<Elt> tau_y;
  Mat<Elt> tau2_y;
};

// the tau^i(x), tau^i(y) matrices printed for the plus family
inline TrialityImages printed_triality_images(const gf::FieldPtr& F, const Elt& a) {
  Family fam = (F->p == 2) ? Family::kPlusEven : Family::kPlusOdd;
  validate_params(fam, F, a, std::nullopt);
  auto env = field_env(F, a);
  bool even = F->p == 2;
  return TrialityImages{
      eval_table<Elt>(even ? kTauXEven : kTauXOdd, env),
      eval_table<Elt>(even ? kTau2XEven : kTau2XOdd, env),
      eval_table<Elt>(kTauYPlus, env),
      eval_table<Elt>(kTau2YPlus, env),
  };
}

// valid parameter enumeration helpers used by sweeps

inline std::vector<Elt> valid_a_values(Family fam, const gf::FieldPtr& F,
                                       std::optional<Elt> xi = std::nullopt) {
  std::vector<Elt> out;
  if (fam == Family::kMinus2) return out;
  for (std::uint32_t c = 0; c < F->q; ++c) {
    Elt a = F->elt(c);
    try {
      validate_params(fam, F, a, xi);
      out.push_back(a);
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

}  // namespace generators
}  // namespace ortho8

#endif  // ORTHO8_GENERATORS_HPP_
