#pragma once

#include <optional>
#include <vector>

#include "coxcone/types.hpp"

// Exact dense linear algebra: reduced row echelon form and everything that
// falls out of it. All functions are pure and deterministic (first-nonzero
// pivoting), so bases of kernels, row spaces etc. are canonical.

namespace coxcone {

template <typename T>
struct RrefResult {
  Matrix<T> mat;
  std::vector<Index> pivots;  // pivot column of row k, strictly increasing
};

template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m_in) {
  using T = typename Derived::Scalar;
  Matrix<T> m = m_in;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = -1;
    for (Index r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    m.row(p).swap(m.row(row));
    m.row(row) /= m(row, col);
    for (Index r = 0; r < m.rows(); ++r)
      if (r != row && m(r, col) != 0) m.row(r) -= m(r, col) * m.row(row);
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Derived>
Index rank_of(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

// Columns form the canonical basis of { x : m x = 0 }: one vector per free
// column, with entry 1 there and the pivot rows back-substituted.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m_in) {
  using T = typename Derived::Scalar;
  auto [m, pivots] = rref(m_in);
  const Index n = m_in.cols();
  std::vector<bool> is_pivot(n, false);
  for (Index p : pivots) is_pivot[p] = true;
  Matrix<T> out(n, n - static_cast<Index>(pivots.size()));
  out.setZero();
  Index j = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    out(f, j) = 1;
    for (size_t k = 0; k < pivots.size(); ++k) out(pivots[k], j) = -m(k, f);
    ++j;
  }
  return out;
}

// Particular solution of a x = b with free variables set to zero.
template <typename D1, typename D2>
std::optional<Vector<typename D1::Scalar>> solve_particular(
    const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  using T = typename D1::Scalar;
  Matrix<T> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto [m, pivots] = rref(aug);
  Vector<T> x(a.cols());
  x.setZero();
  for (size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == a.cols()) return std::nullopt;  // row 0 = 1: inconsistent
    x(pivots[k]) = m(k, a.cols());
  }
  return x;
}

// Canonical basis of the column span: rref the transpose, keep nonzero rows,
// hand them back as columns. Equal spans give byte-identical results.
template <typename Derived>
Matrix<typename Derived::Scalar> span_basis(const Eigen::MatrixBase<Derived>& cols) {
  using T = typename Derived::Scalar;
  auto [m, pivots] = rref(cols.transpose());
  Matrix<T> out(cols.rows(), static_cast<Index>(pivots.size()));
  for (size_t k = 0; k < pivots.size(); ++k) out.col(k) = m.row(k).transpose();
  return out;
}

template <typename D1, typename D2>
bool span_equal(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  Matrix<typename D1::Scalar> sa = span_basis(a), sb = span_basis(b);
  return sa.rows() == sb.rows() && sa.cols() == sb.cols() && sa == sb;
}

template <typename D1, typename D2>
bool in_span(const Eigen::MatrixBase<D1>& cols, const Eigen::MatrixBase<D2>& v) {
  return solve_particular(cols, v).has_value();
}

template <typename D1, typename D2>
bool span_contained(const Eigen::MatrixBase<D1>& sub, const Eigen::MatrixBase<D2>& big) {
  for (Index j = 0; j < sub.cols(); ++j)
    if (!in_span(big, sub.col(j))) return false;
  return true;
}

// Basis (as columns) of { a : aᵀ s = 0 for every column s }.
template <typename Derived>
Matrix<typename Derived::Scalar> annihilator_basis(const Eigen::MatrixBase<Derived>& cols) {
  return kernel_basis(cols.transpose());
}

// Columns of a intersected with columns of b: solve a u = b w via the kernel
// of [a | -b] and read off the a-part.
template <typename D1, typename D2>
Matrix<typename D1::Scalar> span_intersection(const Eigen::MatrixBase<D1>& a,
                                              const Eigen::MatrixBase<D2>& b) {
  using T = typename D1::Scalar;
  Matrix<T> stacked(a.rows(), a.cols() + b.cols());
  stacked.leftCols(a.cols()) = a;
  stacked.rightCols(b.cols()) = -b;
  Matrix<T> ker = kernel_basis(stacked);
  Matrix<T> raw = a * ker.topRows(a.cols());
  return span_basis(raw);
}

// Standard basis vectors extending the given columns to a basis of R^dim,
// chosen greedily by smallest index (deterministic complements everywhere).
template <typename Derived>
std::vector<Index> completing_unit_columns(const Eigen::MatrixBase<Derived>& cols,
                                           Index dim) {
  using T = typename Derived::Scalar;
  Matrix<T> cur = cols;
  std::vector<Index> picked;
  Index r = rank_of(cur);
  for (Index j = 0; j < dim && r + static_cast<Index>(picked.size()) < dim; ++j) {
    Matrix<T> ext(dim, cur.cols() + 1);
    ext.leftCols(cur.cols()) = cur;
    ext.col(cur.cols()).setZero();
    ext(j, cur.cols()) = 1;
    if (rank_of(ext) > rank_of(cur)) {
      picked.push_back(j);
      cur = std::move(ext);
    }
  }
  return picked;
}

// Canonical representative of v + span(cols): the pivot coordinates of the
// span (in its canonical basis) are cleared out.
inline QVec reduce_mod_span(const QVec& v, const QMat& span_cols) {
  QMat s = span_basis(span_cols);
  QVec out = v;
  for (Index k = 0; k < s.cols(); ++k) {
    Index p = -1;
    for (Index i = 0; i < s.rows(); ++i)
      if (s(i, k) != 0) {
        p = i;
        break;
      }
    if (p >= 0) out -= out(p) * s.col(k);  // s(p,k) == 1 in canonical form
  }
  return out;
}

// Scale a rational vector to coprime integer entries, keeping orientation.
inline QVec integerize(const QVec& v) {
  Int l = 1;
  for (Index i = 0; i < v.size(); ++i) l = lcm(l, v(i).get_den());
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    Rat scaled = v(i) * Rat(l);  // integral by choice of l
    g = gcd(g, scaled.get_num());
  }
  if (g == 0) return QVec::Zero(v.size());
  QVec out(v.size());
  Rat scale = Rat(l) / Rat(g);
  for (Index i = 0; i < v.size(); ++i) out(i) = v(i) * scale;
  return out;
}

// Same, but also flip sign so the first nonzero entry is positive (for
// vectors that only matter up to a line, e.g. lineality basis members).
inline QVec integerize_line(const QVec& v) {
  QVec w = integerize(v);
  for (Index i = 0; i < w.size(); ++i) {
    if (w(i) == 0) continue;
    if (w(i) < 0) w = -w;
    break;
  }
  return w;
}

inline int vec_compare(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Index i = 0; i < a.size(); ++i) {
    int c = cmp(a(i), b(i));
    if (c != 0) return c;
  }
  return 0;
}

inline bool vec_less(const QVec& a, const QVec& b) { return vec_compare(a, b) < 0; }

}  // namespace coxcone
