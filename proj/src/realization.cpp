#include "coxcone/realization.hpp"

#include "coxcone/feasible.hpp"

namespace coxcone {

namespace {

// Accept a (0,0)-shaped placeholder for "no subspace".
QMat subspace_input(const QMat& m, Index n, const char* what) {
  if (m.cols() == 0) return QMat(n, 0);
  require(m.rows() == n, ErrKind::validation,
          std::string(what) + " basis must have one row per index");
  return span_basis(m);
}

bool is_zero(const QMat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

// Does the column span of L meet the nonnegative orthant outside 0?
bool meets_orthant(const QMat& L) {
  if (L.cols() == 0) return false;
  LinSys sys(L.cols());
  QVec total = QVec::Zero(L.cols());
  for (Index i = 0; i < L.rows(); ++i) {
    QVec row = L.row(i).transpose();
    sys.add_ge(row);
    total += row;
  }
  sys.add_gt(total);
  return feasible(sys);
}

}  // namespace

Characteristic characteristic(const RootBase& rb) {
  const Index n = rb.g.n;
  require(rb.hmat.rows() == rb.dim && rb.hmat.cols() == n &&
              rb.amat.rows() == n && rb.amat.cols() == rb.dim,
          ErrKind::validation, "realization matrices have inconsistent shapes");
  Characteristic c;
  c.L_h = kernel_basis(rb.hmat);
  c.L_alpha = kernel_basis(rb.amat.transpose());
  const Index r = rank_of(rb.g.a);
  const Index p = c.L_h.cols(), q = c.L_alpha.cols();
  const Index min_dim = r + (n - r - p) + (n - r - q);
  require(rb.dim >= min_dim, ErrKind::validation,
          "ambient dimension below the minimum for the relation spaces");
  c.d = rb.dim - min_dim;
  return c;
}

RootBase build(const GCM& g, const QMat& L_h_in, const QMat& L_alpha_in, Index d) {
  const Index n = g.n;
  require(d >= 0, ErrKind::validation, "negative defect");
  const QMat at = g.a.transpose();
  QMat L_h = subspace_input(L_h_in, n, "L_h");
  QMat L_alpha = subspace_input(L_alpha_in, n, "L_alpha");
  require(is_zero(at * L_h), ErrKind::validation, "L_h is not inside ker(A^T)");
  require(is_zero(g.a * L_alpha), ErrKind::validation, "L_alpha is not inside ker(A)");
  require(!meets_orthant(L_h), ErrKind::validation,
          "root base violated: the relation space of the h_i meets the "
          "nonnegative orthant");

  const Index r = rank_of(g.a);
  const Index p = L_h.cols(), q = L_alpha.cols();
  const Index k = n - r - q;
  const Index dim = (n - p) + k + d;

  // Rows of B cut out L_h, columns of F cut out L_alpha by pairing.
  QMat B = annihilator_basis(L_h).transpose();  // (n-p) x n
  QMat F = annihilator_basis(L_alpha);          // n x (n-q)
  // Solve F X B = A^T in two unique steps: F W = A^T, then X B = W.
  QMat W(n - q, n);
  for (Index j = 0; j < n; ++j) {
    auto col = solve_particular(F, QVec(at.col(j)));
    require(col.has_value(), ErrKind::internal, "A^T escapes the span cut out by L_alpha");
    W.col(j) = *col;
  }
  QMat X(n - q, n - p);
  QMat bt = B.transpose(), wt = W.transpose();
  for (Index i = 0; i < n - q; ++i) {
    auto row = solve_particular(bt, QVec(wt.col(i)));
    require(row.has_value(), ErrKind::internal, "A^T escapes the row space cut out by L_h");
    X.row(i) = row->transpose();
  }
  std::vector<Index> picked = completing_unit_columns(X, n - q);
  require(static_cast<Index>(picked.size()) == k, ErrKind::internal,
          "completion of the pairing block has the wrong rank");

  RootBase rb;
  rb.g = g;
  rb.dim = dim;
  rb.d = d;
  rb.L_h = L_h;
  rb.L_alpha = L_alpha;
  rb.hmat = QMat::Zero(dim, n);
  rb.hmat.topRows(n - p) = B;
  rb.amat = QMat::Zero(n, dim);
  rb.amat.leftCols(n - p) = F * X;
  for (Index t = 0; t < k; ++t) rb.amat.col(n - p + t) = F.col(picked[t]);

  require(rb.amat * rb.hmat == at, ErrKind::internal, "pairing does not reproduce A^T");
  Characteristic c = characteristic(rb);
  require(span_equal(c.L_h, L_h) && span_equal(c.L_alpha, L_alpha) && c.d == d,
          ErrKind::internal, "built realization has the wrong characteristic");
  return rb;
}

FreeCover free_cover(const RootBase& rb) {
  const Index n = rb.g.n;
  Characteristic c = characteristic(rb);
  {
    RootBase canon = build(rb.g, c.L_h, c.L_alpha, c.d);
    require(canon.dim == rb.dim && canon.hmat == rb.hmat && canon.amat == rb.amat,
            ErrKind::validation, "free_cover needs the coordinates produced by build");
  }
  const QMat none(n, 0);
  const Index r = rank_of(rb.g.a);
  const Index p = c.L_h.cols(), q = c.L_alpha.cols();
  const Index k = n - r - q;   // unit-completion block of rb
  const Index kq = n - r;      // unit-completion block of the quotient
  RootBase fb = build(rb.g, none, none, c.d);
  RootBase quot = build(rb.g, c.L_h, none, c.d);

  // Projection: collapse the first n coordinates of the free base by B, keep
  // the completion and defect blocks.
  QMat phi = QMat::Zero(quot.dim, fb.dim);
  phi.topLeftCorner(n - p, n) = quot.hmat.topRows(n - p);
  phi.block(n - p, n, kq, kq).setIdentity();
  phi.bottomRightCorner(c.d, c.d).setIdentity();

  // Embedding: fixed on the B block and the defect block; the completion
  // block is sent to the unique solution of [X'|Yc'] (P; R) = F Yc.
  QMat xy = quot.amat.leftCols((n - p) + kq);
  QMat rhs = rb.amat.middleCols(n - p, k);
  QMat psi = QMat::Zero(quot.dim, rb.dim);
  psi.topLeftCorner(n - p, n - p).setIdentity();
  psi.bottomRightCorner(c.d, c.d).setIdentity();
  for (Index t = 0; t < k; ++t) {
    auto sol = solve_particular(xy, QVec(rhs.col(t)));
    require(sol.has_value(), ErrKind::internal, "completion block escapes the quotient pairing");
    psi.block(0, n - p + t, quot.dim - c.d, 1) = *sol;
  }

  require(phi * fb.hmat == quot.hmat, ErrKind::internal, "projection misses the h generators");
  require(quot.amat * phi == fb.amat, ErrKind::internal, "projection misses the covectors");
  require(psi * rb.hmat == quot.hmat, ErrKind::internal, "embedding misses the h generators");
  require(quot.amat * psi == rb.amat, ErrKind::internal, "embedding misses the covectors");
  require(rank_of(phi) == quot.dim, ErrKind::internal, "projection is not surjective");
  require(rank_of(psi) == rb.dim, ErrKind::internal, "embedding is not injective");
  require(span_equal(kernel_basis(phi), QMat(fb.hmat * c.L_h)), ErrKind::internal,
          "projection kernel is not the carried relation space");
  if (q > 0) {
    QMat rel_rows = c.L_alpha.transpose() * quot.amat;  // q x quot.dim
    require(span_equal(psi, kernel_basis(rel_rows)), ErrKind::internal,
            "embedding image is not the covector-relation zero set");
  }

  FreeCover out;
  out.free_base = fb;
  out.onto = RealizationMorphism{fb, quot, phi};
  out.into = RealizationMorphism{rb, quot, psi};
  return out;
}

std::pair<IndexSet, IndexSet> exceptional_indices(const RootBase& rb) {
  const Index n = rb.g.n;
  Characteristic c = characteristic(rb);
  IndexSet i0 = 0;
  for (Index i = 0; i < n; ++i) {
    LinSys sys(c.L_alpha.cols());
    for (Index j = 0; j < n; ++j) sys.add_ge(QVec(c.L_alpha.row(j).transpose()));
    sys.add_gt(QVec(c.L_alpha.row(i).transpose()));
    if (feasible(sys)) i0 |= IndexSet(1) << i;
  }
  Classification cl = classify(rb.g, i0);
  require(cl.aff == i0 && cl.fin == 0 && cl.ind == 0, ErrKind::internal,
          "exceptional indices are not a union of affine components");
  return {i0, full_set(n) & ~i0};
}

}  // namespace coxcone
