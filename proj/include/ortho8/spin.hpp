// Burnside irreducibility test: the dimension of the enveloping algebra of
// a pair of 8x8 matrices, computed by spinning the identity under left
// multiplication.  Dimension 64 is equivalent to absolute irreducibility.

#ifndef ORTHO8_SPIN_HPP_
#define ORTHO8_SPIN_HPP_

#include <cstdint>
#include <vector>

#include "ortho8/matrix.hpp"

namespace ortho8 {
namespace spin {

using gf::Elt;
using linalg::Mat;

struct SpinResult {
  std::size_t dimension = 0;
  // how each basis element arose: (generator, parent index); generator 0 is
  // the seed I, 1 means x * parent, 2 means y * parent
  std::vector<std::pair<int, int>> basis_words;
};

namespace detail {

// reduce a flattened matrix against the stored echelon basis; returns true
// (and appends) when independent
class FlatBasis {
 public:
  explicit FlatBasis(const gf::Field* F) : field_(F) {}

  bool insert(std::vector<Elt> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot].is_zero()) continue;
      Elt f = v[pivot];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * row[j];
    }
    std::size_t pivot = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) {
        pivot = j;
        break;
      }
    if (pivot == v.size()) return false;
    Elt inv = v[pivot].inv();
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] * inv;
    rows_.push_back({pivot, std::move(v)});
    return true;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  const gf::Field* field_;
  std::vector<std::pair<std::size_t, std::vector<Elt>>> rows_;
};

inline std::vector<Elt> flatten(const Mat<Elt>& m) {
  std::vector<Elt> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

}  // namespace detail

inline SpinResult spin_dimension(const Mat<Elt>& x, const Mat<Elt>& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
    throw std::invalid_argument("spin_dimension needs square matrices of equal size");
  const gf::Field* F = x.zero_witness().field;
  const std::size_t n = x.rows();

  SpinResult result;
  detail::FlatBasis basis(F);
  std::vector<Mat<Elt>> queue;

  Mat<Elt> id = Mat<Elt>::identity(n, Elt(0, F));
  basis.insert(detail::flatten(id));
  result.basis_words.push_back({0, -1});
  queue.push_back(id);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    // copy: queue may reallocate while we append
    Mat<Elt> m = queue[head];
    for (int gen = 1; gen <= 2; ++gen) {
      Mat<Elt> next = (gen == 1 ? x : y) * m;
      if (basis.insert(detail::flatten(next))) {
        result.basis_words.push_back({gen, static_cast<int>(head)});
        queue.push_back(std::move(next));
        if (basis.size() == n * n) {
          result.dimension = basis.size();
          return result;
        }
      }
    }
  }
  result.dimension = basis.size();
  return result;
}

}  // namespace spin
}  // namespace ortho8

#endif  // ORTHO8_SPIN_HPP_
