// Dense exact linear algebra over an arbitrary commutative ring (Berkowitz
// characteristic polynomial, determinants) and over fields (elimination,
// kernels, canonical subspaces).  Everything here is a value type.

#ifndef ORTHO8_MATRIX_HPP_
#define ORTHO8_MATRIX_HPP_

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ortho8/poly.hpp"

namespace ortho8 {
namespace linalg {

template <class T>
class Mat {
 public:
  Mat(std::size_t r, std::size_t c, const T& fill) : r_(r), c_(c), a_(r * c, fill) {}
  static Mat identity(std::size_t n, const T& witness) {
    Mat m(n, n, ring_zero(witness));
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring_one(witness);
    return m;
  }
  static Mat from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty matrix");
    Mat m(rows.size(), rows[0].size(), ring_zero(rows[0][0]));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.c_) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < m.c_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }
  static Mat from_columns(const std::vector<std::vector<T>>& cols) {
    if (cols.empty() || cols[0].empty()) throw std::invalid_argument("empty matrix");
    Mat m(cols[0].size(), cols.size(), ring_zero(cols[0][0]));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.r_) throw std::invalid_argument("ragged columns");
      for (std::size_t i = 0; i < m.r_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  T zero_witness() const { return ring_zero(a_[0]); }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = m.a_[i] + o.a_[i];
    return m;
  }
  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = m.a_[i] - o.a_[i];
    return m;
  }
  Mat operator-() const {
    Mat m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }
  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
    Mat m(r_, o.c_, ring_zero(a_[0]));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const T& x = at(i, k);
        if (ring_is_zero(x)) continue;
        for (std::size_t j = 0; j < o.c_; ++j) m.at(i, j) = m.at(i, j) + x * o.at(k, j);
      }
    return m;
  }
  Mat operator*(const T& s) const {
    Mat m = *this;
    for (auto& x : m.a_) x = x * s;
    return m;
  }
  std::vector<T> operator*(const std::vector<T>& v) const {
    if (c_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> r(r_, ring_zero(a_[0]));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) r[i] = r[i] + at(i, j) * v[j];
    return r;
  }

  Mat transpose() const {
    Mat m(c_, r_, ring_zero(a_[0]));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  Mat pow(unsigned long long e) const {
    if (r_ != c_) throw std::invalid_argument("power of non-square matrix");
    Mat r = identity(r_, a_[0]);
    Mat b = *this;
    while (e) {
      if (e & 1ull) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  T trace() const {
    if (r_ != c_) throw std::invalid_argument("trace of non-square matrix");
    T s = ring_zero(a_[0]);
    for (std::size_t i = 0; i < r_; ++i) s = s + at(i, i);
    return s;
  }

  bool is_identity() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) {
        T expect = (i == j) ? ring_one(a_[0]) : ring_zero(a_[0]);
        if (!(at(i, j) == expect)) return false;
      }
    return true;
  }

  // square submatrix made of the given rows (0-based), all columns
  Mat row_select(const std::vector<std::size_t>& rows) const {
    Mat m(rows.size(), c_, ring_zero(a_[0]));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] >= r_) throw std::invalid_argument("row index out of range");
      for (std::size_t j = 0; j < c_; ++j) m.at(i, j) = at(rows[i], j);
    }
    return m;
  }

  std::vector<T> row(std::size_t i) const {
    std::vector<T> v(c_, ring_zero(a_[0]));
    for (std::size_t j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(r_, ring_zero(a_[0]));
    for (std::size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < r_; ++i) {
      if (i) s += ";";
      for (std::size_t j = 0; j < c_; ++j) {
        if (j) s += ",";
        s += ring_str(at(i, j));
      }
    }
    return s;
  }

 private:
  std::size_t r_, c_;
  std::vector<T> a_;
  void check_same_shape(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  }
};

// Berkowitz division-free characteristic polynomial det(tI - M), monic of
// degree n, valid over any commutative ring.
template <class T>
poly::Poly<T> char_poly(const Mat<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  const T zero = m.zero_witness();
  const T one = ring_one(zero);
  // highest-degree-first coefficient vector, starts with det(tI - M_1)
  std::vector<T> c{one, -m.at(0, 0)};
  for (std::size_t k = 2; k <= n; ++k) {
    // column above and row left of the diagonal entry of the k-th leading
    // principal submatrix
    std::vector<T> s(k - 1, zero), r(k - 1, zero);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      s[i] = m.at(i, k - 1);
      r[i] = m.at(k - 1, i);
    }
    const T d = m.at(k - 1, k - 1);
    // toeplitz column: 1, -d, -r*s, -r*A*s, -r*A^2*s, ...
    std::vector<T> tcol(k + 1, zero);
    tcol[0] = one;
    tcol[1] = -d;
    std::vector<T> w = s;
    for (std::size_t j = 0; j + 2 <= k; ++j) {
      T q = zero;
      for (std::size_t i = 0; i + 1 < k; ++i) q = q + r[i] * w[i];
      tcol[j + 2] = -q;
      if (j + 3 <= k) {
        std::vector<T> w2(k - 1, zero);
        for (std::size_t i = 0; i + 1 < k; ++i)
          for (std::size_t l = 0; l + 1 < k; ++l) w2[i] = w2[i] + m.at(i, l) * w[l];
        w = std::move(w2);
      }
    }
    std::vector<T> c2(k + 1, zero);
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j < c.size() && j <= i; ++j)
        c2[i] = c2[i] + tcol[i - j] * c[j];
    c = std::move(c2);
  }
  std::vector<T> low_first(c.rbegin(), c.rend());
  return poly::Poly<T>(zero, std::move(low_first));
}

// determinant for any commutative ring, via Berkowitz: det = (-1)^n chi(0)
template <class T>
T det(const Mat<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  T c0 = char_poly(m).coeff(0);
  return (m.rows() % 2 == 0) ? c0 : -c0;
}

// classical Gaussian determinant, coefficients in a field
template <class T>
T det_gauss(Mat<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  const std::size_t n = m.rows();
  T d = ring_one(m.zero_witness());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && ring_is_zero(m.at(piv, col))) ++piv;
    if (piv == n) return m.zero_witness();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d = d * m.at(col, col);
    T inv = ring_div(ring_one(d), m.at(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (ring_is_zero(m.at(i, col))) continue;
      T f = m.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return d;
}

// determinant of the square submatrix picked out by `rows` (0-based)
template <class T>
T det_rows(const Mat<T>& m, const std::vector<std::size_t>& rows) {
  if (rows.size() != m.cols()) throw std::invalid_argument("det_rows needs cols() row indices");
  std::vector<bool> seen(m.rows(), false);
  for (auto r : rows) {
    if (r >= m.rows() || seen[r]) throw std::invalid_argument("bad row selection");
    seen[r] = true;
  }
  return det(m.row_select(rows));
}

// in-place reduced row echelon form; returns pivot column list
template <class T>
std::vector<std::size_t> rref(Mat<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
    std::size_t piv = pr;
    while (piv < m.rows() && ring_is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != pr)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(pr, j));
    T inv = ring_div(ring_one(m.zero_witness()), m.at(pr, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(pr, j) = m.at(pr, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pr || ring_is_zero(m.at(i, col))) continue;
      T f = m.at(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(pr, j);
    }
    pivots.push_back(col);
    ++pr;
  }
  return pivots;
}

template <class T>
std::size_t rank(Mat<T> m) {
  return rref(m).size();
}

template <class T>
Mat<T> inverse(const Mat<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat<T> aug(n, 2 * n, m.zero_witness());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = ring_one(m.zero_witness());
  }
  auto piv = rref(aug);
  if (piv.size() != n || piv.back() != n - 1) throw std::domain_error("singular matrix");
  Mat<T> inv(n, n, m.zero_witness());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// A subspace of F^n held as a canonical reduced-row-echelon basis, so two
// subspaces are equal iff their representations are equal.
template <class T>
class Subspace {
 public:
  // from spanning rows (need not be independent)
  Subspace(std::size_t ambient, const std::vector<std::vector<T>>& spanning, const T& witness)
      : ambient_(ambient), basis_(0, ambient, ring_zero(witness)) {
    if (spanning.empty()) {
      basis_ = Mat<T>(0, ambient, ring_zero(witness));
      return;
    }
    Mat<T> m = Mat<T>::from_rows(spanning);
    auto piv = rref(m);
    basis_ = Mat<T>(piv.size(), ambient, ring_zero(witness));
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < ambient; ++j) basis_.at(i, j) = m.at(i, j);
  }

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return ambient_; }
  const Mat<T>& basis() const { return basis_; }
  std::vector<T> basis_vector(std::size_t i) const { return basis_.row(i); }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const std::vector<T>& v, const T& witness) const {
    std::vector<std::vector<T>> rows;
    for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
    rows.push_back(v);
    Subspace bigger(ambient_, rows, witness);
    return bigger.dim() == dim();
  }

  bool contains_subspace(const Subspace& o, const T& witness) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_vector(i), witness)) return false;
    return true;
  }

 private:
  std::size_t ambient_;
  Mat<T> basis_;
};

// kernel of m (right null space), canonical basis
template <class T>
Subspace<T> kernel(Mat<T> m) {
  const T w = m.zero_witness();
  const std::size_t n = m.cols();
  auto piv = rref(m);
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_piv[free_col]) continue;
    std::vector<T> v(n, ring_zero(w));
    v[free_col] = ring_one(w);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return Subspace<T>(n, basis, w);
}

// column space of m, as a subspace of F^rows
template <class T>
Subspace<T> column_space(const Mat<T>& m) {
  std::vector<std::vector<T>> rows;
  for (std::size_t j = 0; j < m.cols(); ++j) rows.push_back(m.col(j));
  return Subspace<T>(m.rows(), rows, m.zero_witness());
}

// Zassenhaus intersection of two subspaces of the same ambient space
template <class T>
Subspace<T> intersect(const Subspace<T>& u, const Subspace<T>& v, const T& witness) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("ambient mismatch");
  const std::size_t n = u.ambient_dim();
  const T zero = ring_zero(witness);
  Mat<T> big(u.dim() + v.dim(), 2 * n, zero);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      big.at(i, j) = u.basis().at(i, j);
      big.at(i, n + j) = u.basis().at(i, j);
    }
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) big.at(u.dim() + i, j) = v.basis().at(i, j);
  rref(big);
  std::vector<std::vector<T>> inter;
  for (std::size_t i = 0; i < big.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n; ++j)
      if (!ring_is_zero(big.at(i, j))) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    std::vector<T> r(n, zero);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = big.at(i, n + j);
      if (!ring_is_zero(r[j])) nonzero = true;
    }
    if (nonzero) inter.push_back(std::move(r));
  }
  return Subspace<T>(n, inter, witness);
}

// eigenspace V_lambda(m) = ker(m - lambda I)
template <class T>
Subspace<T> eigenspace(const Mat<T>& m, const T& lambda) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenspace of non-square matrix");
  Mat<T> shifted = m - Mat<T>::identity(m.rows(), lambda) * lambda;
  return kernel(shifted);
}

// E_lambda(m) = V_lambda(m) intersected with Im(m - I)
template <class T>
Subspace<T> e_lambda(const Mat<T>& m, const T& lambda) {
  const T w = m.zero_witness();
  Subspace<T> v = eigenspace(m, lambda);
  Mat<T> m1 = m - Mat<T>::identity(m.rows(), w);
  Subspace<T> im = column_space(m1);
  return intersect(v, im, w);
}

struct OrderOverflow {};

// least k <= cap with m^k = I; std::nullopt marks overflow past the cap
template <class T>
std::optional<long long> element_order(const Mat<T>& m, long long cap = 1000000) {
  if (m.rows() != m.cols()) throw std::invalid_argument("order of non-square matrix");
  if (ring_is_zero(det(m))) throw std::domain_error("order of a singular matrix");
  Mat<T> p = m;
  for (long long k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return std::nullopt;
}

}  // namespace linalg
}  // namespace ortho8

#endif  // ORTHO8_MATRIX_HPP_
