// Quadratic forms on F_q^n, their isometry predicates, type (sign)
// determination and the Omega-membership tests: quasideterminant in
// characteristic 2, spinor norm via reflection factorization in odd
// characteristic.

#ifndef ORTHO8_FORMS_HPP_
#define ORTHO8_FORMS_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "ortho8/matrix.hpp"

namespace ortho8 {
namespace forms {

using gf::Elt;
using linalg::Mat;

enum class Sign { kPlus, kMinus };

inline const char* sign_name(Sign s) { return s == Sign::kPlus ? "plus" : "minus"; }

// A non-degenerate quadratic form.  `gram` is the matrix of the polar
// bilinear form B(u,v) = Q(u+v) - Q(u) - Q(v); in odd characteristic
// Q(v) = B(v,v)/2 and `diag` is derived, in characteristic 2 the diagonal
// Q(e_i) is independent data and `gram` is alternating.
class QuadraticForm {
 public:
  QuadraticForm(Mat<Elt> gram, std::vector<Elt> diag)
      : gram_(std::move(gram)), diag_(std::move(diag)) {
    const gf::Field* F = field();
    char2_ = (F->p == 2);
    std::size_t n = gram_.rows();
    if (gram_.cols() != n || diag_.size() != n) throw std::invalid_argument("bad form shape");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(gram_.at(i, j) == gram_.at(j, i))) throw std::invalid_argument("gram not symmetric");
    if (char2_) {
      for (std::size_t i = 0; i < n; ++i)
        if (!gram_.at(i, i).is_zero())
          throw std::invalid_argument("char-2 polar form must be alternating");
    } else {
      Elt two = F->from_int(2);
      for (std::size_t i = 0; i < n; ++i)
        if (!(diag_[i] * two == gram_.at(i, i)))
          throw std::invalid_argument("odd-char diag must be gram_ii / 2");
    }
    if (linalg::det_gauss(gram_).is_zero()) throw std::invalid_argument("degenerate form");
  }

  // odd characteristic: Q derived from the Gram matrix
  static QuadraticForm from_gram_odd(const Mat<Elt>& gram) {
    const gf::Field* F = gram.zero_witness().field;
    if (F->p == 2) throw std::invalid_argument("use the char-2 constructor");
    Elt inv2 = F->from_int(2).inv();
    std::vector<Elt> diag;
    for (std::size_t i = 0; i < gram.rows(); ++i) diag.push_back(gram.at(i, i) * inv2);
    return QuadraticForm(gram, diag);
  }

  const Mat<Elt>& gram() const { return gram_; }
  const std::vector<Elt>& diag() const { return diag_; }
  bool char2() const { return char2_; }
  std::size_t dim() const { return gram_.rows(); }
  const gf::Field* field() const { return gram_.zero_witness().field; }

  Elt bilinear(const std::vector<Elt>& u, const std::vector<Elt>& v) const {
    Elt s = gram_.zero_witness();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) s = s + u[i] * gram_.at(i, j) * v[j];
    }
    return s;
  }

  Elt value(const std::vector<Elt>& v) const {
    Elt s = gram_.zero_witness();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (v[i].is_zero()) continue;
      s = s + diag_[i] * v[i] * v[i];
      for (std::size_t j = i + 1; j < dim(); ++j) s = s + v[i] * gram_.at(i, j) * v[j];
    }
    return s;
  }

  bool preserves(const Mat<Elt>& g) const {
    if (g.rows() != dim() || g.cols() != dim()) throw std::invalid_argument("dimension mismatch");
    // polar form on all basis pairs: g^T gram g = gram
    if (!(g.transpose() * gram_ * g == gram_)) return false;
    // and Q on basis vectors (only extra information in char 2)
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!(value(g.col(i)) == diag_[i])) return false;
    }
    return true;
  }

 private:
  Mat<Elt> gram_;
  std::vector<Elt> diag_;
  bool char2_;
};

namespace detail {

inline std::vector<Elt> unit_vector(const gf::Field* F, std::size_t n, std::size_t i) {
  std::vector<Elt> v(n, Elt(0, F));
  v[i] = Elt(1, F);
  return v;
}

inline std::vector<Elt> add(const std::vector<Elt>& a, const std::vector<Elt>& b) {
  std::vector<Elt> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}
inline std::vector<Elt> sub(const std::vector<Elt>& a, const std::vector<Elt>& b) {
  std::vector<Elt> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}
inline std::vector<Elt> scale(const std::vector<Elt>& a, const Elt& s) {
  std::vector<Elt> r = a;
  for (auto& x : r) x = x * s;
  return r;
}
inline bool is_zero_vec(const std::vector<Elt>& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

// roots of A t^2 + B t + C = 0 over GF(q), ascending by element code
inline std::vector<Elt> solve_quadratic(const Elt& A, const Elt& B, const Elt& C) {
  const gf::Field* F = A.field;
  std::vector<Elt> roots;
  if (A.is_zero()) {
    if (B.is_zero()) return roots;  // constant equation; "no roots" is fine here
    roots.push_back(-C / B);
    return roots;
  }
  if (F->p == 2) {
    if (B.is_zero()) {
      // t^2 = C/A: squaring is bijective, unique root
      Elt rhs = C / A;
      Elt r = rhs;
      for (std::uint32_t i = 1; i < F->f; ++i) r = r * r;  // rhs^(2^(f-1))
      roots.push_back(r);
      return roots;
    }
    // substitute t = (B/A) s: s^2 + s = AC/B^2
    Elt d = A * C / (B * B);
    if (!F->artin_schreier_solvable(d)) return roots;
    Elt s = F->artin_schreier_root(d);
    Elt t1 = s * B / A;
    Elt t2 = (s + F->one()) * B / A;
    if (t2 < t1) std::swap(t1, t2);
    roots.push_back(t1);
    if (!(t1 == t2)) roots.push_back(t2);
    return roots;
  }
  // odd characteristic: discriminant
  Elt disc = B * B - F->from_int(4) * A * C;
  if (!F->is_square(disc)) return roots;
  Elt r = F->sqrt(disc);
  Elt inv2a = (F->from_int(2) * A).inv();
  Elt t1 = (-B + r) * inv2a;
  Elt t2 = (-B - r) * inv2a;
  if (t2 < t1) std::swap(t1, t2);
  roots.push_back(t1);
  if (!(t1 == t2)) roots.push_back(t2);
  return roots;
}

}  // namespace detail

// Q restricted to the span of `basis`, as a form on coordinate space
inline QuadraticForm restrict_form(const QuadraticForm& Q,
                                   const std::vector<std::vector<Elt>>& basis) {
  const gf::Field* F = Q.field();
  std::size_t m = basis.size();
  Mat<Elt> gram(m, m, Elt(0, F));
  std::vector<Elt> diag;
  for (std::size_t i = 0; i < m; ++i) {
    diag.push_back(Q.value(basis[i]));
    for (std::size_t j = 0; j < m; ++j) gram.at(i, j) = Q.bilinear(basis[i], basis[j]);
  }
  return QuadraticForm(gram, diag);
}

// deterministic search for a nonzero singular vector; empty when the form is
// anisotropic (possible only in dimension <= 2 for non-degenerate forms)
inline std::optional<std::vector<Elt>> find_singular_vector(const QuadraticForm& Q) {
  const gf::Field* F = Q.field();
  const std::size_t n = Q.dim();
  using detail::unit_vector;
  for (std::size_t i = 0; i < n; ++i)
    if (Q.diag()[i].is_zero()) return unit_vector(F, n, i);
  // v = e_i + t e_j
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto roots = detail::solve_quadratic(Q.diag()[j], Q.gram().at(i, j), Q.diag()[i]);
      for (const Elt& t : roots) {
        auto v = unit_vector(F, n, i);
        v[j] = t;
        return v;
      }
    }
  // v = e_i + s e_j + t e_k
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::uint32_t sc = 0; sc < F->q; ++sc) {
          Elt s(sc, F);
          Elt constant = Q.diag()[i] + s * s * Q.diag()[j] + s * Q.gram().at(i, j);
          Elt linear = Q.gram().at(i, k) + s * Q.gram().at(j, k);
          auto roots = detail::solve_quadratic(Q.diag()[k], linear, constant);
          for (const Elt& t : roots) {
            auto v = unit_vector(F, n, i);
            v[j] = s;
            v[k] = t;
            return v;
          }
        }
  return std::nullopt;
}

// Witt index by greedy hyperbolic-pair peeling.
inline std::size_t witt_index(const QuadraticForm& Q0) {
  QuadraticForm Q = Q0;
  std::size_t index = 0;
  while (Q.dim() >= 1) {
    auto sing = find_singular_vector(Q);
    if (!sing) return index;
    const gf::Field* F = Q.field();
    std::vector<Elt> v = *sing;
    // partner u with B(v,u) = 1, then made singular
    std::vector<Elt> u;
    for (std::size_t i = 0; i < Q.dim(); ++i) {
      auto e = detail::unit_vector(F, Q.dim(), i);
      if (!Q.bilinear(v, e).is_zero()) {
        u = detail::scale(e, Q.bilinear(v, e).inv());
        break;
      }
    }
    if (u.empty()) throw std::logic_error("degenerate form in witt_index");
    u = detail::add(u, detail::scale(v, -Q.value(u)));
    ++index;
    if (Q.dim() == 2) return index;
    // orthogonal complement of <v, u>
    Mat<Elt> rows(2, Q.dim(), Elt(0, F));
    for (std::size_t j = 0; j < Q.dim(); ++j) {
      std::vector<Elt> e = detail::unit_vector(F, Q.dim(), j);
      rows.at(0, j) = Q.bilinear(v, e);
      rows.at(1, j) = Q.bilinear(u, e);
    }
    auto comp = linalg::kernel(rows);
    std::vector<std::vector<Elt>> basis;
    for (std::size_t i = 0; i < comp.dim(); ++i) basis.push_back(comp.basis_vector(i));
    Q = restrict_form(Q, basis);
  }
  return index;
}

// Arf invariant class for char 2: true = nontrivial (minus type in dim 8).
// Computed from a symplectic basis of the polar form.
inline bool arf_nontrivial(const QuadraticForm& Q) {
  if (!Q.char2()) throw std::invalid_argument("Arf invariant needs characteristic 2");
  const gf::Field* F = Q.field();
  // peel symplectic pairs off the full space
  QuadraticForm R = Q;
  Elt arf(0, F);
  while (R.dim() > 0) {
    // u = e_0; find w with B(u,w) != 0
    std::size_t pick = 0;
    bool found = false;
    for (std::size_t j = 1; j < R.dim(); ++j)
      if (!R.gram().at(0, j).is_zero()) {
        pick = j;
        found = true;
        break;
      }
    if (!found) throw std::logic_error("degenerate alternating form");
    std::vector<Elt> u = detail::unit_vector(F, R.dim(), 0);
    std::vector<Elt> w =
        detail::scale(detail::unit_vector(F, R.dim(), pick), R.gram().at(0, pick).inv());
    arf = arf + R.value(u) * R.value(w);
    if (R.dim() == 2) break;
    Mat<Elt> rows(2, R.dim(), Elt(0, F));
    for (std::size_t j = 0; j < R.dim(); ++j) {
      std::vector<Elt> e = detail::unit_vector(F, R.dim(), j);
      rows.at(0, j) = R.bilinear(u, e);
      rows.at(1, j) = R.bilinear(w, e);
    }
    auto comp = linalg::kernel(rows);
    std::vector<std::vector<Elt>> cbasis;
    for (std::size_t i = 0; i < comp.dim(); ++i) cbasis.push_back(comp.basis_vector(i));
    R = restrict_form(R, cbasis);
  }
  return F->abs_trace(arf) != 0;
}

// Type of a non-degenerate form of even dimension 2m with m even (dim 8
// here): char 2 via the Arf class, odd characteristic via the square class
// of the Gram determinant.
inline Sign form_sign(const QuadraticForm& Q) {
  if (Q.char2()) return arf_nontrivial(Q) ? Sign::kMinus : Sign::kPlus;
  Elt d = linalg::det_gauss(Q.gram());
  return Q.field()->is_square(d) ? Sign::kPlus : Sign::kMinus;
}

// the same decision through the constructive Witt decomposition
inline Sign form_sign_witt(const QuadraticForm& Q) {
  std::size_t w = witt_index(Q);
  if (2 * w == Q.dim()) return Sign::kPlus;
  if (2 * w + 2 == Q.dim()) return Sign::kMinus;
  throw std::logic_error("unexpected Witt index for a non-degenerate form");
}

// char 2: +1 iff rk(I - g) is even
inline int quasideterminant(const Mat<Elt>& g, const QuadraticForm& Q) {
  if (!Q.char2()) throw std::invalid_argument("quasideterminant needs characteristic 2");
  if (!Q.preserves(g)) throw std::invalid_argument("quasideterminant of a non-isometry");
  const gf::Field* F = Q.field();
  Mat<Elt> d = g - Mat<Elt>::identity(g.rows(), Elt(0, F));
  return (linalg::rank(d) % 2 == 0) ? +1 : -1;
}

// reflection in an anisotropic vector v: u -> u - (B(u,v)/Q(v)) v
inline Mat<Elt> reflection(const QuadraticForm& Q, const std::vector<Elt>& v) {
  const gf::Field* F = Q.field();
  Elt qv = Q.value(v);
  if (qv.is_zero()) throw std::invalid_argument("reflection in a singular vector");
  std::size_t n = Q.dim();
  Mat<Elt> r = Mat<Elt>::identity(n, Elt(0, F));
  Elt inv = qv.inv();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Elt> e = detail::unit_vector(F, n, j);
    Elt c = Q.bilinear(e, v) * inv;
    for (std::size_t i = 0; i < n; ++i) r.at(i, j) = r.at(i, j) - c * v[i];
  }
  return r;
}

// An orthogonal basis of anisotropic vectors (odd characteristic): repeatedly
// pick an anisotropic vector of the remaining complement and cut it off.
inline std::vector<std::vector<Elt>> orthogonal_basis(const QuadraticForm& Q) {
  const gf::Field* F = Q.field();
  if (Q.char2()) throw std::invalid_argument("orthogonal basis needs odd characteristic");
  const std::size_t n = Q.dim();
  // rows spanning the current complement
  std::vector<std::vector<Elt>> space;
  for (std::size_t i = 0; i < n; ++i) space.push_back(detail::unit_vector(F, n, i));
  std::vector<std::vector<Elt>> basis;
  while (!space.empty()) {
    // an anisotropic vector among the spanning rows or their pairwise sums
    std::vector<Elt> pick;
    for (const auto& v : space)
      if (!Q.value(v).is_zero()) {
        pick = v;
        break;
      }
    if (pick.empty()) {
      for (std::size_t i = 0; i < space.size() && pick.empty(); ++i)
        for (std::size_t j = i + 1; j < space.size() && pick.empty(); ++j) {
          auto s = detail::add(space[i], space[j]);
          if (!Q.value(s).is_zero()) pick = s;
        }
    }
    if (pick.empty()) throw std::logic_error("no anisotropic vector: degenerate form");
    basis.push_back(pick);
    if (space.size() == 1) break;
    // intersect the span with pick-perp
    Mat<Elt> rows(static_cast<std::size_t>(space.size()), space[0].size(), Elt(0, F));
    for (std::size_t i = 0; i < space.size(); ++i)
      for (std::size_t j = 0; j < space[0].size(); ++j) rows.at(i, j) = space[i][j];
    std::vector<Elt> functional(space.size(), Elt(0, F));
    for (std::size_t i = 0; i < space.size(); ++i) functional[i] = Q.bilinear(space[i], pick);
    // coefficient vectors c with sum c_i B(space_i, pick) = 0
    Mat<Elt> fm(1, space.size(), Elt(0, F));
    for (std::size_t i = 0; i < space.size(); ++i) fm.at(0, i) = functional[i];
    auto ker = linalg::kernel(fm);
    std::vector<std::vector<Elt>> next;
    for (std::size_t k = 0; k < ker.dim(); ++k) {
      auto coef = ker.basis_vector(k);
      std::vector<Elt> v(space[0].size(), Elt(0, F));
      for (std::size_t i = 0; i < space.size(); ++i)
        v = detail::add(v, detail::scale(space[i], coef[i]));
      next.push_back(std::move(v));
    }
    space = std::move(next);
  }
  return basis;
}

// Cartan-Dieudonne factorization of an isometry into reflections (odd
// characteristic): walk an orthogonal basis, sending g b_i back to b_i with
// one or two reflections each.  Returns the reflection vectors; empty for
// the identity.  At most 2 dim(V) reflections.
inline std::vector<std::vector<Elt>> reflection_factorization(const Mat<Elt>& g0,
                                                              const QuadraticForm& Q) {
  Mat<Elt> g = g0;
  std::vector<std::vector<Elt>> vs;
  for (const auto& b : orthogonal_basis(Q)) {
    std::vector<Elt> u = g * b;
    if (u == b) continue;
    std::vector<Elt> w = detail::sub(u, b);
    if (!Q.value(w).is_zero()) {
      // r_w maps u to b and fixes everything already fixed
      vs.push_back(w);
      g = reflection(Q, w) * g;
      continue;
    }
    // Q(u - b) = 0 forces Q(u + b) = 4 Q(b) != 0: reflect u to -b, then
    // r_b sends -b to b; both fix the earlier (orthogonal) basis vectors
    std::vector<Elt> w2 = detail::add(u, b);
    vs.push_back(w2);
    g = reflection(Q, w2) * g;
    vs.push_back(b);
    g = reflection(Q, b) * g;
  }
  if (!g.is_identity()) throw std::logic_error("reflection factorization incomplete");
  return vs;
}

// odd characteristic spinor norm: +1 iff the product of Q(v_i) over a
// reflection factorization is a square
inline int spinor_norm(const Mat<Elt>& g, const QuadraticForm& Q) {
  if (Q.char2()) throw std::invalid_argument("spinor norm needs odd characteristic");
  if (!Q.preserves(g)) throw std::invalid_argument("spinor norm of a non-isometry");
  const gf::Field* F = Q.field();
  Elt prod(1, F);
  for (const auto& v : reflection_factorization(g, Q)) prod = prod * Q.value(v);
  return F->is_square(prod) ? +1 : -1;
}

// membership in Omega = ker(quasideterminant / spinor norm) inside SO
inline bool in_omega(const Mat<Elt>& g, const QuadraticForm& Q) {
  if (!Q.preserves(g)) return false;
  if (!(linalg::det_gauss(g) == Elt(1, Q.field()))) return false;
  return (Q.char2() ? quasideterminant(g, Q) : spinor_norm(g, Q)) == +1;
}

// is the span of the given vectors totally singular for Q?
inline bool totally_singular(const QuadraticForm& Q, const std::vector<std::vector<Elt>>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!Q.value(vs[i]).is_zero()) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!Q.bilinear(vs[i], vs[j]).is_zero()) return false;
  }
  return true;
}

}  // namespace forms
}  // namespace ortho8

#endif  // ORTHO8_FORMS_HPP_
