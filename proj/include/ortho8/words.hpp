// Recipe evaluation for the lemma checks: products of named 8x8 matrices
// ("x y^2 x y", "[x,y]"), linear combinations of basis vectors
// ("e1 + w^-1*em3 + w*em4"), and column matrices built from both.  These
// strings are the data the check registry is written in.  Everything is
// generic over the entry ring; inverse powers and commutators require a
// ring whose divisions succeed (fields, or matrices of finite order where
// the recipe avoids them).

#ifndef ORTHO8_WORDS_HPP_
#define ORTHO8_WORDS_HPP_

#include <map>
#include <string>
#include <vector>

#include "ortho8/expr.hpp"
#include "ortho8/matrix.hpp"

namespace ortho8 {
namespace words {

using gf::Elt;
using linalg::Mat;

template <class R>
using MatEnvT = std::map<char, Mat<R>>;
using MatEnv = MatEnvT<Elt>;

namespace detail {

template <class R>
class WordParser {
 public:
  WordParser(const std::string& s, const MatEnvT<R>& env) : s_(s), env_(env) {}

  Mat<R> parse() {
    Mat<R> m = product();
    skip();
    if (pos_ != s_.size()) throw std::invalid_argument("trailing input in word: " + s_);
    return m;
  }

 private:
  const std::string& s_;
  const MatEnvT<R>& env_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Mat<R> identity() const {
    return Mat<R>::identity(env_.begin()->second.rows(), env_.begin()->second.zero_witness());
  }

  Mat<R> product() {
    Mat<R> m = identity();
    for (;;) {
      char c = peek();
      if (c == '\0' || c == ')' || c == ',' || c == ']') return m;
      m = m * factor();
    }
  }

  Mat<R> factor() {
    Mat<R> base = atom();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      long long e = 0;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw std::invalid_argument("expected exponent in word: " + s_);
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        e = e * 10 + (s_[pos_++] - '0');
      if (neg) base = linalg::inverse(base);
      return base.pow(static_cast<unsigned long long>(e));
    }
    return base;
  }

  Mat<R> atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Mat<R> m = product();
      if (peek() != ')') throw std::invalid_argument("missing ')' in word: " + s_);
      ++pos_;
      return m;
    }
    if (c == '[') {  // commutator [u, v] = u^-1 v^-1 u v
      ++pos_;
      Mat<R> u = product();
      if (peek() != ',') throw std::invalid_argument("missing ',' in commutator: " + s_);
      ++pos_;
      Mat<R> v = product();
      if (peek() != ']') throw std::invalid_argument("missing ']' in commutator: " + s_);
      ++pos_;
      return linalg::inverse(u) * linalg::inverse(v) * u * v;
    }
    auto it = env_.find(c);
    if (it == env_.end()) throw std::invalid_argument(std::string("unbound matrix name: ") + c);
    ++pos_;
    return it->second;
  }
};

}  // namespace detail

// evaluate a product word over named matrices
template <class R>
Mat<R> mat_word(const std::string& s, const MatEnvT<R>& env) {
  return detail::WordParser<R>(s, env).parse();
}

// one column recipe: the image of a named vector under a matrix word,
// optionally transposing the word's value first
struct ColumnSpec {
  std::string word;    // "" means the identity
  std::string vector;  // key into the vector map
};

// build the matrix whose columns are word_i (or word_i^T) applied to v_i
template <class R>
Mat<R> column_matrix(const std::vector<ColumnSpec>& cols, const MatEnvT<R>& mats,
                     const std::map<std::string, std::vector<R>>& vectors,
                     bool transpose_words) {
  std::vector<std::vector<R>> columns;
  for (const auto& spec : cols) {
    Mat<R> m = mat_word(spec.word, mats);
    if (transpose_words) m = m.transpose();
    auto it = vectors.find(spec.vector);
    if (it == vectors.end()) throw std::invalid_argument("unbound vector: " + spec.vector);
    columns.push_back(m * it->second);
  }
  return Mat<R>::from_columns(columns);
}

// "v; x v; x y v; x y x v": semicolon-separated columns, the last token of
// each being the vector name
inline std::vector<ColumnSpec> cols_from(const std::string& spec) {
  std::vector<ColumnSpec> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t semi = spec.find(';', start);
    std::string piece =
        semi == std::string::npos ? spec.substr(start) : spec.substr(start, semi - start);
    std::size_t end = piece.find_last_not_of(" \t");
    if (end == std::string::npos) throw std::invalid_argument("empty column spec");
    std::size_t sp = piece.find_last_of(" \t", end);
    std::size_t vstart = sp == std::string::npos ? 0 : sp + 1;
    std::string vec = piece.substr(vstart, end - vstart + 1);
    std::string word = sp == std::string::npos ? "" : piece.substr(0, sp);
    out.push_back(ColumnSpec{word, vec});
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

// lift a matrix entrywise through a subfield embedding
inline Mat<Elt> lift(const Mat<Elt>& m, const gf::Embedding& em) {
  Mat<Elt> r(m.rows(), m.cols(), em.target()->zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = em(m.at(i, j));
  return r;
}

// 1-based row list ("1,2,3,4,5") to 0-based indices
inline std::vector<std::size_t> row_list(const std::string& s) {
  std::vector<std::size_t> rows;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t comma = s.find(',', start);
    std::string piece =
        comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
    rows.push_back(static_cast<std::size_t>(std::stoul(piece)) - 1);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return rows;
}

}  // namespace words
}  // namespace ortho8

#endif  // ORTHO8_WORDS_HPP_
