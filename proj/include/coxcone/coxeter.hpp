#pragma once

#include <vector>

#include "coxcone/realization.hpp"

namespace coxcone {

// Exact arithmetic in the Coxeter group W attached to a GCM.  Elements act on
// the coroot coordinates of a free root base: there the h''_i are a basis, so
// w is the n x n matrix with column i the coordinates of w(h''_i), and the
// half-space dichotomy (every w(h''_i) lies in the coroot cone or its
// negative) turns length and descent questions into sign tests on columns.
// The matrix depends only on the GCM, never on a particular realization;
// transporting the action onto a working root base is a separate step
// (act_on_coroots below).

struct CoxElem {
  QMat mat;               // column i = coordinates of w(h''_i)
  QMat matinv;            // the same for w^{-1}, kept to read left descents
  std::vector<int> word;  // the ShortLex-least reduced word for w

  bool operator==(const CoxElem& o) const;
  bool operator!=(const CoxElem& o) const { return !(*this == o); }
  bool is_identity() const { return word.empty(); }
};

struct LengthDescents {
  Index length = 0;
  IndexSet left = 0;
  IndexSet right = 0;
};

enum class CosetSide { left, right };

// w = left * rep * right with rep the shortest element of W_J w W_K
struct DoubleCosetSplit {
  CoxElem left;
  CoxElem rep;
  CoxElem right;
};

CoxElem cox_identity(const GCM& g);
CoxElem simple_reflection(const GCM& g, int i);

// word letters are 0-based indices; the stored word is reduced on the way in
CoxElem from_word(const GCM& g, const std::vector<int>& word);
CoxElem mul(const GCM& g, const CoxElem& a, const CoxElem& b);
CoxElem inv(const GCM& g, const CoxElem& a);

// length and the two descent sets, read off the matrix columns
LengthDescents length_descents(const CoxElem& w);

// letters appearing in a reduced word (independent of the choice)
IndexSet red_support(const CoxElem& w);

// shortest element of w W_J (side right) or W_J w (side left)
CoxElem min_coset_rep(const GCM& g, const CoxElem& w, IndexSet j, CosetSide side);

// shortest element of the double coset W_J w W_K, with the cofactors
DoubleCosetSplit split_double_coset(const GCM& g, const CoxElem& w, IndexSet j, IndexSet k);
CoxElem min_double_rep(const GCM& g, const CoxElem& w, IndexSet j, IndexSet k);

// all of W_J for J a union of finite type components, by breadth-first
// right multiplication
std::vector<CoxElem> enum_parabolic(const GCM& g, IndexSet j);

// action of w on the coroot space of rb: the dim x dim matrix taking h_i to
// w(h_i).  Covectors transform by multiplying the inverse matrix from the
// right: (w lambda)^T = lambda^T act_on_coroots(rb, inv(w)).
QMat act_on_coroots(const RootBase& rb, const CoxElem& w);

// averaging projector over W_{J_f} for J_f a union of finite type
// components, as a matrix on the coroot space of rb.  Applied to coroot
// columns from the left it projects onto {h : alpha_i(h) = 0 on J_f} along
// span{h_i : i in J_f}; applied to covector rows from the right it projects
// onto {lambda : lambda(h_i) = 0 on J_f} along span{alpha_i : i in J_f}.
QMat mid_projector(const RootBase& rb, IndexSet jf);

// {i in J1 : R+_0 h_i = w R+_0 h_j for some j in J2}, for J1, J2 facial and
// w the shortest element of its (W_J1, W_J2) double coset; the result is
// again facial
IndexSet cross_parabolic(const RootBase& rb, IndexSet j1, const CoxElem& w, IndexSet j2);

}  // namespace coxcone
