#pragma once

#include "coxcone/cartan.hpp"
#include "coxcone/linalg.hpp"

namespace coxcone {

// A realization of a GCM A over Q: an ambient space h = Q^dim carrying column
// vectors h_i (hmat, column i) and row covectors alpha_i (amat, row i) with
// amat * hmat = A^T, i.e. alpha_i(h_j) = a_ji.  L_h collects the linear
// relations among the h_i, L_alpha those among the alpha_i; d is the defect,
// the number of ambient dimensions beyond the minimum forced by the relation
// spaces.  A root base additionally satisfies L_h ∩ (R+_0)^n = {0}, so that
// the h_i are positively independent.
struct RootBase {
  GCM g;
  Index dim = 0;
  QMat hmat;     // dim x n, column i = h_i
  QMat amat;     // n x dim, row i = alpha_i
  QMat L_h;      // n x p, canonical column basis of { r : sum r_i h_i = 0 }
  QMat L_alpha;  // n x q, canonical column basis of { r : sum r_i alpha_i = 0 }
  Index d = 0;
};

struct Characteristic {
  QMat L_h;
  QMat L_alpha;
  Index d = 0;
};

// Linear map between the ambient spaces of two realizations of the same GCM
// that sends h_i to h_i' and pulls alpha_i' back to alpha_i:
//   map * source.hmat == target.hmat  and  target.amat * map == source.amat.
struct RealizationMorphism {
  RootBase source;
  RootBase target;
  QMat map;  // target.dim x source.dim
};

// Presentation of a realization as a subquotient of a free one: onto.map
// projects the free realization onto the common quotient with kernel spanned
// by the h''-images of L_h, and into.map embeds the original realization into
// that quotient with image the common zero set of the covectors sum r_i
// alpha_i', r in L_alpha.
struct FreeCover {
  RootBase free_base;        // characteristic ({0}, {0}, d)
  RealizationMorphism onto;  // free_base ->> quotient
  RealizationMorphism into;  // original  >-> quotient
};

// Relation spaces and defect, recomputed from hmat/amat/dim.
Characteristic characteristic(const RootBase& rb);

// Deterministic coordinates for the realization with the given characteristic:
// dim = rk(A) + codim(L_h) + codim(L_alpha) + d, with the codimensions taken
// inside ker(A^T) and ker(A).  Throws ErrKind::validation when L_h is not
// inside ker(A^T), L_alpha not inside ker(A), or L_h meets the nonnegative
// orthant in a nonzero point (no root base exists then).
RootBase build(const GCM& g, const QMat& L_h, const QMat& L_alpha, Index d);

// Subquotient presentation of rb.  rb must carry the coordinates produced by
// build (the CLI and the tests only create realizations that way); anything
// else is rejected as ErrKind::validation.
FreeCover free_cover(const RootBase& rb);

// I_0 = { i : alpha_i lies in the cone spanned by all alpha_j and in its
// negative }, read off as the union of supports of the nonnegative vectors in
// L_alpha; returns (I_0, I \ I_0).  I_0 is always a union of affine
// components.
std::pair<IndexSet, IndexSet> exceptional_indices(const RootBase& rb);

}  // namespace coxcone
