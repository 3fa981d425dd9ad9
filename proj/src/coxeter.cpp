#include "coxcone/coxeter.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "coxcone/facial.hpp"

namespace coxcone {

namespace {

// reflection i on the coroot coordinates of a free root base: column c of
// the matrix is e_c - a_ci e_i
QMat refl_mat(const GCM& g, int i) {
  QMat p = QMat::Identity(g.n, g.n);
  for (Index c = 0; c < g.n; ++c) p(i, c) -= g.a(c, i);
  return p;
}

// x -> x s_i in place, as the rank one update it is: column c of mat drops
// a_ci times column i, and row i of matinv drops the a_ci-combination of the
// rows.  The snapshots keep the i-entries from being consumed mid-update.
void apply_right(const GCM& g, QMat& mat, QMat& matinv, int i) {
  const QMat ci = mat.col(i);
  for (Index c = 0; c < g.n; ++c) {
    const Rat& a = g.a(c, i);
    if (a != 0) mat.col(c) -= a * ci;
  }
  QMat row = QMat::Zero(1, g.n);
  for (Index c = 0; c < g.n; ++c) {
    const Rat& a = g.a(c, i);
    if (a != 0) row += a * matinv.row(c);
  }
  matinv.row(i) -= row;
}

// x -> s_i x: the same update with the roles of mat and matinv swapped
void apply_left(const GCM& g, QMat& mat, QMat& matinv, int i) {
  apply_right(g, matinv, mat, i);
}

bool col_nonpos(const QMat& m, int i) {
  for (Index r = 0; r < m.rows(); ++r)
    if (m(r, i) > 0) return false;
  return true;
}

bool is_identity_mat(const QMat& m) {
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != ((r == c) ? 1 : 0)) return false;
  return true;
}

// ShortLex-least reduced word: peel the smallest left descent until nothing
// is left.  Each step shortens the element, so the loop ends; an element
// with no descent must be the identity.
std::vector<int> normal_form(const GCM& g, QMat mat, QMat matinv) {
  std::vector<int> word;
  for (;;) {
    int desc = -1;
    for (Index i = 0; i < g.n && desc < 0; ++i)
      if (col_nonpos(matinv, static_cast<int>(i))) desc = static_cast<int>(i);
    if (desc < 0) break;
    apply_left(g, mat, matinv, desc);
    word.push_back(desc);
    require(word.size() <= 100000, ErrKind::internal, "descent peeling does not terminate");
  }
  require(is_identity_mat(mat), ErrKind::internal,
          "element has no descent but is not the identity");
  return word;
}

CoxElem make_elem(const GCM& g, QMat mat, QMat matinv) {
  std::vector<int> word = normal_form(g, mat, matinv);
  return {std::move(mat), std::move(matinv), std::move(word)};
}

void check_letter(const GCM& g, int l) {
  require(l >= 0 && l < g.n, ErrKind::validation,
          "word letter " + std::to_string(l + 1) + " out of range");
}

void check_subset(const GCM& g, IndexSet j, const char* what) {
  require((j & ~full_set(static_cast<int>(g.n))) == 0, ErrKind::validation,
          std::string(what) + " out of range");
}

}  // namespace

bool CoxElem::operator==(const CoxElem& o) const {
  if (mat.rows() != o.mat.rows()) return false;
  for (Index r = 0; r < mat.rows(); ++r)
    for (Index c = 0; c < mat.cols(); ++c)
      if (mat(r, c) != o.mat(r, c)) return false;
  return true;
}

CoxElem cox_identity(const GCM& g) {
  return {QMat::Identity(g.n, g.n), QMat::Identity(g.n, g.n), {}};
}

CoxElem simple_reflection(const GCM& g, int i) {
  check_letter(g, i);
  QMat p = refl_mat(g, i);
  return {p, p, {i}};
}

CoxElem from_word(const GCM& g, const std::vector<int>& word) {
  QMat mat = QMat::Identity(g.n, g.n);
  QMat matinv = QMat::Identity(g.n, g.n);
  for (int l : word) {
    check_letter(g, l);
    apply_right(g, mat, matinv, l);
  }
  return make_elem(g, std::move(mat), std::move(matinv));
}

CoxElem mul(const GCM& g, const CoxElem& a, const CoxElem& b) {
  require(a.mat.rows() == g.n && b.mat.rows() == g.n, ErrKind::validation,
          "elements of different Coxeter groups");
  if (a.word.empty()) return b;
  if (b.word.empty()) return a;
  return make_elem(g, a.mat * b.mat, b.matinv * a.matinv);
}

CoxElem inv(const GCM& g, const CoxElem& a) {
  if (a.word.empty()) return a;
  return make_elem(g, a.matinv, a.mat);
}

LengthDescents length_descents(const CoxElem& w) {
  LengthDescents out;
  out.length = static_cast<Index>(w.word.size());
  for (Index i = 0; i < w.mat.cols(); ++i) {
    if (col_nonpos(w.mat, static_cast<int>(i))) out.right |= IndexSet(1) << i;
    if (col_nonpos(w.matinv, static_cast<int>(i))) out.left |= IndexSet(1) << i;
  }
  return out;
}

IndexSet red_support(const CoxElem& w) { return set_of(w.word); }

CoxElem min_coset_rep(const GCM& g, const CoxElem& w, IndexSet j, CosetSide side) {
  check_subset(g, j, "coset generator set");
  QMat mat = w.mat, matinv = w.matinv;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : set_elements(j)) {
      if (side == CosetSide::right && col_nonpos(mat, i)) {
        apply_right(g, mat, matinv, i);
        moved = true;
      }
      if (side == CosetSide::left && col_nonpos(matinv, i)) {
        apply_left(g, mat, matinv, i);
        moved = true;
      }
    }
  }
  return make_elem(g, std::move(mat), std::move(matinv));
}

DoubleCosetSplit split_double_coset(const GCM& g, const CoxElem& w, IndexSet j, IndexSet k) {
  check_subset(g, j, "left generator set");
  check_subset(g, k, "right generator set");
  QMat rep = w.mat, repinv = w.matinv;
  QMat lft = QMat::Identity(g.n, g.n), lftinv = lft;
  QMat rgt = lft, rgtinv = lft;
  // peeling descents only shortens rep, and the element without descents on
  // either side is the unique shortest element of its double coset
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : set_elements(j))
      if (col_nonpos(repinv, i)) {
        apply_left(g, rep, repinv, i);
        apply_right(g, lft, lftinv, i);
        moved = true;
      }
    for (int i : set_elements(k))
      if (col_nonpos(rep, i)) {
        apply_right(g, rep, repinv, i);
        apply_left(g, rgt, rgtinv, i);
        moved = true;
      }
  }
  DoubleCosetSplit out;
  out.left = make_elem(g, std::move(lft), std::move(lftinv));
  out.rep = make_elem(g, std::move(rep), std::move(repinv));
  out.right = make_elem(g, std::move(rgt), std::move(rgtinv));
  return out;
}

CoxElem min_double_rep(const GCM& g, const CoxElem& w, IndexSet j, IndexSet k) {
  return split_double_coset(g, w, j, k).rep;
}

std::vector<CoxElem> enum_parabolic(const GCM& g, IndexSet j) {
  check_subset(g, j, "generator set");
  Classification c = classify(g, j);
  require(c.aff == 0 && c.ind == 0, ErrKind::validation,
          "the generator set has a component of nonfinite type");
  std::vector<CoxElem> out;
  std::map<std::vector<int>, bool> seen;
  out.push_back(cox_identity(g));
  seen[{}] = true;
  for (size_t head = 0; head < out.size(); ++head) {
    CoxElem cur = out[head];  // copy: out may reallocate below
    for (int i : set_elements(j)) {
      QMat m = cur.mat, mi = cur.matinv;
      apply_right(g, m, mi, i);
      CoxElem next = make_elem(g, std::move(m), std::move(mi));
      if (seen.emplace(next.word, true).second) {
        out.push_back(std::move(next));
        require(out.size() <= 100000, ErrKind::bound,
                "parabolic group enumeration above the bound 100000");
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CoxElem& a, const CoxElem& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return out;
}

QMat act_on_coroots(const RootBase& rb, const CoxElem& w) {
  require(w.mat.rows() == rb.g.n, ErrKind::validation,
          "group element does not match the root base");
  QMat s = QMat::Identity(rb.dim, rb.dim);
  for (int l : w.word)
    s = s * (QMat::Identity(rb.dim, rb.dim) - rb.hmat.col(l) * rb.amat.row(l));
  return s;
}

QMat mid_projector(const RootBase& rb, IndexSet jf) {
  check_subset(rb.g, jf, "projector index set");
  std::vector<CoxElem> grp = enum_parabolic(rb.g, jf);
  QMat sum = QMat::Zero(rb.dim, rb.dim);
  for (const CoxElem& w : grp) sum += act_on_coroots(rb, w);
  return sum / Rat(static_cast<long>(grp.size()));
}

IndexSet cross_parabolic(const RootBase& rb, IndexSet j1, const CoxElem& w, IndexSet j2) {
  check_subset(rb.g, j1, "first index set");
  check_subset(rb.g, j2, "second index set");
  require(is_facial(rb, j1) && is_facial(rb, j2), ErrKind::validation,
          "both index sets must be facial");
  require(min_double_rep(rb.g, w, j1, j2) == w, ErrKind::validation,
          "the group element must be the shortest element of its double coset");
  QMat s = act_on_coroots(rb, w);
  IndexSet out = 0;
  for (int j : set_elements(j2)) {
    QVec v = s * rb.hmat.col(j);
    for (int i : set_elements(j1)) {
      // is v a positive multiple of h_i?
      QVec hi = rb.hmat.col(i);
      Index k = 0;
      while (k < rb.dim && hi(k) == 0) ++k;
      require(k < rb.dim, ErrKind::internal, "zero coroot column");
      if (v(k) == 0) continue;
      Rat cmul = v(k) / hi(k);
      if (cmul <= 0) continue;
      bool match = true;
      for (Index r = 0; r < rb.dim && match; ++r)
        if (v(r) != cmul * hi(r)) match = false;
      if (match) out |= IndexSet(1) << i;
    }
  }
  require(is_facial(rb, out), ErrKind::internal,
          "the transported intersection is not facial");
  return out;
}

}  // namespace coxcone
