// A small expression language for matrix entries and expected values:
// integer literals, named symbols, + - * / ^ and parentheses, with integer
// (possibly negative) exponents.  One parsed tree evaluates over any ring
// carrying the needed symbols, which keeps each transcribed formula single
// sourced across concrete fields, polynomial rings and fraction fields.

#ifndef ORTHO8_EXPR_HPP_
#define ORTHO8_EXPR_HPP_

#include <cctype>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ortho8 {
namespace expr {

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  enum Kind { kNum, kSym, kAdd, kSub, kMul, kDiv, kNeg, kPow } kind;
  long long num = 0;
  std::string sym;
  Expr lhs, rhs;
  long long exp = 0;
};

inline Expr make_num(long long v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::kNum;
  n->num = v;
  return n;
}
inline Expr make_sym(std::string s) {
  auto n = std::make_shared<Node>();
  n->kind = Node::kSym;
  n->sym = std::move(s);
  return n;
}
inline Expr make_bin(Node::Kind k, Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}
inline Expr make_neg(Expr a) {
  auto n = std::make_shared<Node>();
  n->kind = Node::kNeg;
  n->lhs = std::move(a);
  return n;
}
inline Expr make_pow(Expr a, long long e) {
  auto n = std::make_shared<Node>();
  n->kind = Node::kPow;
  n->lhs = std::move(a);
  n->exp = e;
  return n;
}

namespace detail {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}
  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) throw std::invalid_argument("trailing input in expression: " + s_);
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (eat('+'))
        e = make_bin(Node::kAdd, e, term());
      else if (eat('-'))
        e = make_bin(Node::kSub, e, term());
      else
        return e;
    }
  }
  Expr term() {
    Expr e = factor();
    for (;;) {
      if (eat('*'))
        e = make_bin(Node::kMul, e, factor());
      else if (eat('/'))
        e = make_bin(Node::kDiv, e, factor());
      else
        return e;
    }
  }
  Expr factor() {
    if (eat('-')) return make_neg(factor());
    Expr base = primary();
    if (eat('^')) {
      bool neg = eat('-');
      long long e = integer();
      return make_pow(base, neg ? -e : e);
    }
    return base;
  }
  Expr primary() {
    skip();
    if (eat('(')) {
      Expr e = expr();
      if (!eat(')')) throw std::invalid_argument("missing ')' in expression: " + s_);
      return e;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return make_num(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      return make_sym(name);
    }
    throw std::invalid_argument("unexpected character in expression: " + s_);
  }
  long long integer() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw std::invalid_argument("expected integer in expression: " + s_);
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return v;
  }
};

}  // namespace detail

inline Expr parse(const std::string& s) { return detail::Parser(s).parse(); }

// symbol bindings plus a zero witness of the evaluation ring
template <class R>
struct Env {
  std::map<std::string, R> vars;
  R witness;  // any element of the ring, used to mint constants

  explicit Env(R w) : witness(std::move(w)) {}
  Env& bind(const std::string& name, R value) {
    vars.insert_or_assign(name, std::move(value));
    return *this;
  }
};

template <class R>
R from_integer(long long v, const R& witness) {
  R one = ring_one(witness);
  R acc = ring_zero(witness);
  unsigned long long mag = v < 0 ? -static_cast<unsigned long long>(v) : v;
  R base = one;
  while (mag) {
    if (mag & 1ull) acc = acc + base;
    base = base + base;
    mag >>= 1;
  }
  return v < 0 ? -acc : acc;
}

template <class R>
R eval(const Expr& e, const Env<R>& env) {
  switch (e->kind) {
    case Node::kNum:
      return from_integer<R>(e->num, env.witness);
    case Node::kSym: {
      auto it = env.vars.find(e->sym);
      if (it == env.vars.end()) throw std::invalid_argument("unbound symbol: " + e->sym);
      return it->second;
    }
    case Node::kAdd:
      return eval(e->lhs, env) + eval(e->rhs, env);
    case Node::kSub:
      return eval(e->lhs, env) - eval(e->rhs, env);
    case Node::kMul:
      return eval(e->lhs, env) * eval(e->rhs, env);
    case Node::kDiv:
      return ring_div(eval(e->lhs, env), eval(e->rhs, env));
    case Node::kNeg:
      return -eval(e->lhs, env);
    case Node::kPow: {
      R base = eval(e->lhs, env);
      long long ex = e->exp;
      if (ex < 0) {
        base = ring_div(ring_one(env.witness), base);
        ex = -ex;
      }
      R acc = ring_one(env.witness);
      while (ex) {
        if (ex & 1ll) acc = acc * base;
        base = base * base;
        ex >>= 1;
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

template <class R>
R eval_str(const std::string& s, const Env<R>& env) {
  return eval(parse(s), env);
}

}  // namespace expr
}  // namespace ortho8

#endif  // ORTHO8_EXPR_HPP_
