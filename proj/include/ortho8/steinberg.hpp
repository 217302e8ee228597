// Steinberg root-subgroup generators of Omega_8^+(q), the derived monomial
// elements, a word algebra over the closed eight-letter alphabet, and the
// triality automorphism as a label permutation on fully expanded words.
//
// Everything derived (commutator generators, pi / rho / J, the words for x
// and y) is stored as a word over the eight basic symbols, so tau acts by
// relabeling alone.

#ifndef ORTHO8_STEINBERG_HPP_
#define ORTHO8_STEINBERG_HPP_

#include <string>
#include <vector>

#include "ortho8/expr.hpp"
#include "ortho8/matrix.hpp"

namespace ortho8 {
namespace steinberg {

using gf::Elt;
using linalg::Mat;

enum class Label { kX12, kX21, kX23, kX32, kX34, kX43, kX1m2, kXm21 };

inline const char* label_name(Label l) {
  switch (l) {
    case Label::kX12:
      return "x1,2";
    case Label::kX21:
      return "x2,1";
    case Label::kX23:
      return "x2,3";
    case Label::kX32:
      return "x3,2";
    case Label::kX34:
      return "x3,4";
    case Label::kX43:
      return "x4,3";
    case Label::kX1m2:
      return "x1,-2";
    case Label::kXm21:
      return "x-2,1";
  }
  return "?";
}

// one basic symbol: label, parameter expression, inverse flag
struct Sym {
  Label label;
  std::string param;
  bool inverse = false;

  bool operator==(const Sym&) const = default;
};

using Word = std::vector<Sym>;

inline Word basic(Label l, const std::string& param) { return Word{Sym{l, param, false}}; }

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}
inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }

inline Word inverse(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Sym s = *it;
    s.inverse = !s.inverse;
    r.push_back(s);
  }
  return r;
}

inline Word word_pow(const Word& w, int e) {
  Word base = e < 0 ? inverse(w) : w;
  int n = e < 0 ? -e : e;
  Word r;
  for (int i = 0; i < n; ++i) r = r * base;
  return r;
}

// g conjugated by h: h^-1 g h
inline Word conjugate(const Word& g, const Word& h) { return inverse(h) * g * h; }

// [g, h] = g^-1 h^-1 g h
inline Word commutator(const Word& g, const Word& h) {
  return inverse(g) * inverse(h) * g * h;
}

// (row, col) index pairs of the two elementary positions of each basic
// generator: x = I + alpha (E[first] - E[second]), 0-based
struct BasicPattern {
  int r1, c1, r2, c2;
};

inline BasicPattern basic_pattern(Label l) {
  switch (l) {
    case Label::kX12:
      return {0, 1, 5, 4};
    case Label::kX21:
      return {1, 0, 4, 5};
    case Label::kX23:
      return {1, 2, 6, 5};
    case Label::kX32:
      return {2, 1, 5, 6};
    case Label::kX34:
      return {2, 3, 7, 6};
    case Label::kX43:
      return {3, 2, 6, 7};
    case Label::kX1m2:
      return {0, 5, 1, 4};
    case Label::kXm21:
      return {5, 0, 4, 1};
  }
  throw std::logic_error("unknown label");
}

inline Mat<Elt> basic_matrix(Label l, const Elt& alpha) {
  const gf::Field* F = alpha.field;
  Mat<Elt> m = Mat<Elt>::identity(8, Elt(0, F));
  BasicPattern p = basic_pattern(l);
  m.at(p.r1, p.c1) = m.at(p.r1, p.c1) + alpha;
  m.at(p.r2, p.c2) = m.at(p.r2, p.c2) - alpha;
  return m;
}

// left-to-right product of the expanded word; symbol inverses are the same
// label with negated parameter (root subgroup structure)
inline Mat<Elt> eval_word(const Word& w, const expr::Env<Elt>& env) {
  const gf::Field* F = env.witness.field;
  Mat<Elt> m = Mat<Elt>::identity(8, Elt(0, F));
  for (const Sym& s : w) {
    Elt alpha = expr::eval_str<Elt>(s.param, env);
    if (s.inverse) alpha = -alpha;
    m = m * basic_matrix(s.label, alpha);
  }
  return m;
}

inline Mat<Elt> eval_word(const Word& w, const gf::FieldPtr& F, const Elt& a) {
  expr::Env<Elt> env(F->zero());
  env.bind("a", a);
  return eval_word(w, env);
}

// the triality 3-cycles (x12 -> x34 -> x-21 -> x12), (x21 -> x43 -> x1-2 -> x21)
inline Label tau_label(Label l) {
  switch (l) {
    case Label::kX12:
      return Label::kX34;
    case Label::kX34:
      return Label::kXm21;
    case Label::kXm21:
      return Label::kX12;
    case Label::kX21:
      return Label::kX43;
    case Label::kX43:
      return Label::kX1m2;
    case Label::kX1m2:
      return Label::kX21;
    case Label::kX23:
      return Label::kX23;
    case Label::kX32:
      return Label::kX32;
  }
  throw std::logic_error("unknown label");
}

inline Word tau_rewrite(const Word& w) {
  Word r = w;
  for (Sym& s : r) s.label = tau_label(s.label);
  return r;
}

// ---- derived generators and named elements --------------------------------

inline Word x24(const std::string& a) { return commutator(basic(Label::kX23, a), basic(Label::kX34, "1")); }
inline Word x13(const std::string& a) { return commutator(basic(Label::kX12, a), basic(Label::kX23, "1")); }
inline Word x14(const std::string& a) { return commutator(x13(a), basic(Label::kX34, "1")); }

inline Word pi12() {
  return basic(Label::kX21, "-1") * basic(Label::kX12, "1") * basic(Label::kX21, "-1");
}
inline Word pi23() {
  return basic(Label::kX32, "-1") * basic(Label::kX23, "1") * basic(Label::kX32, "-1");
}
inline Word pi34() {
  return basic(Label::kX43, "-1") * basic(Label::kX34, "1") * basic(Label::kX43, "-1");
}
inline Word pi1m2() {
  return basic(Label::kXm21, "-1") * basic(Label::kX1m2, "1") * basic(Label::kXm21, "-1");
}
inline Word pi13() { return inverse(pi12()) * pi23() * pi12(); }
inline Word pi24() { return inverse(pi23()) * pi34() * pi23(); }

inline Word rho12() { return pi12() * pi1m2(); }
inline Word rho34() { return pi13() * pi24() * rho12() * pi13() * pi24(); }
inline Word big_j() { return rho12() * rho34(); }

inline Word xm13(const std::string& a) { return conjugate(basic(Label::kXm21, a), pi23()); }

// The paper defines x_{-1,4}(alpha) = (x_{-1,3}(1))^{pi_{3,4}} with a literal
// parameter 1 on the right-hand side.  The literal reading makes the left
// parameter irrelevant, and only the alpha reading evaluates to the
// elementary pattern I + alpha(E_{-1,4} - E_{-4,1}); both are kept so the
// verification layer can show the discrepancy instead of hiding it.
inline Word xm14_literal(const std::string&) { return conjugate(xm13("1"), pi34()); }
inline Word xm14(const std::string& a) { return conjugate(xm13(a), pi34()); }

inline Word xm24(const std::string& a) { return conjugate(xm14(a), pi12()); }
inline Word xm34(const std::string& a) { return conjugate(xm24(a), pi23()); }

// y = rho_{1,2} pi_{2,3} rho_{1,2} pi_{3,4}^3
inline Word word_y() { return rho12() * pi23() * rho12() * word_pow(pi34(), 3); }

// x, characteristic-2 branch
inline Word word_x_even() {
  return basic(Label::kX23, "1") * basic(Label::kX34, "a") * pi12() * basic(Label::kX43, "a") *
         basic(Label::kX32, "1") * big_j();
}

// x, odd-characteristic branch
inline Word word_x_odd() {
  return xm14("-1") * xm24("1") * xm34("2") * basic(Label::kX12, "1") *
         basic(Label::kX23, "-1") * x24("-a") * x13("1") * x14("a") * word_pow(pi23(), 2) *
         word_pow(pi13(), -1) * basic(Label::kX12, "-1") * basic(Label::kX23, "1") * x14("-a");
}

inline Word word_x(bool char2) { return char2 ? word_x_even() : word_x_odd(); }

// the word for a derived generator, by its printed name
inline Word derived_word(const std::string& name, const std::string& param) {
  if (name == "x2,4") return x24(param);
  if (name == "x1,3") return x13(param);
  if (name == "x1,4") return x14(param);
  if (name == "x-1,3") return xm13(param);
  if (name == "x-1,4") return xm14(param);
  if (name == "x-1,4 literal") return xm14_literal(param);
  if (name == "x-2,4") return xm24(param);
  if (name == "x-3,4") return xm34(param);
  throw std::invalid_argument("not a derived commutator generator: " + name);
}

// ---- text form -------------------------------------------------------------

inline std::string word_str(const Word& w) {
  std::string s;
  for (const Sym& sym : w) {
    if (!s.empty()) s += " ";
    s += label_name(sym.label);
    s += "(";
    s += sym.param;
    s += ")";
    if (sym.inverse) s += "^-1";
  }
  return s;
}

inline Word parse_word(const std::string& text) {
  Word w;
  std::size_t i = 0;
  auto skip_ws = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    std::size_t open = text.find('(', i);
    if (open == std::string::npos) throw std::invalid_argument("bad word token: " + text);
    std::string name = text.substr(i, open - i);
    Label lab;
    bool found = false;
    for (Label l : {Label::kX12, Label::kX21, Label::kX23, Label::kX32, Label::kX34, Label::kX43,
                    Label::kX1m2, Label::kXm21})
      if (name == label_name(l)) {
        lab = l;
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("unknown symbol: " + name);
    std::size_t close = text.find(')', open);
    if (close == std::string::npos) throw std::invalid_argument("missing ')': " + text);
    std::string param = text.substr(open + 1, close - open - 1);
    expr::parse(param);  // validate now
    i = close + 1;
    bool inv = false;
    if (i + 2 < text.size() + 1 && text.compare(i, 3, "^-1") == 0) {
      inv = true;
      i += 3;
    }
    w.push_back(Sym{lab, param, inv});
  }
  return w;
}

}  // namespace steinberg
}  // namespace ortho8

#endif  // ORTHO8_STEINBERG_HPP_
