#pragma once

#include <optional>
#include <utility>

#include "coxcone/coxeter.hpp"
#include "coxcone/facial.hpp"

// Faces of the Tits cone X, the union of the w-translates of the closed
// chamber { lambda : lambda(h_i) >= 0 }.  Every face of X is a translate
// sigma R(theta) of a base face R(theta) = W_{theta^perp} (closure of the
// facet F_theta), theta special facial; the translate is determined exactly
// modulo the setwise stabilizer W_{theta ∪ theta^perp}.  A pair of theta and
// the shortest coset element is therefore a complete face invariant, and
// order, meet and join questions reduce to word arithmetic on such pairs.

namespace coxcone {

// handle for the face sigma R(theta)
struct TitsFace {
  IndexSet theta = 0;
  CoxElem sigma;  // shortest element of sigma W_{theta ∪ theta^perp}

  bool operator==(const TitsFace& o) const { return theta == o.theta && sigma == o.sigma; }
  bool operator!=(const TitsFace& o) const { return !(*this == o); }
};

struct TitsFaceInfo {
  TitsFace face;
  QMat hull;                    // columns: canonical basis of the linear hull
  Index hull_dim = 0;
  IndexSet pointwise_stab = 0;  // theta; the stabilizer is sigma W_theta sigma^{-1}
  IndexSet setwise_stab = 0;    // theta ∪ theta^perp, conjugated the same way
};

// the open facet sigma F_j containing a point, F_j the chamber points with
// zero set exactly j
struct Facet {
  IndexSet j = 0;
  CoxElem sigma;  // shortest element of sigma W_j
};

struct NormalForm {
  CoxElem sigma;  // shortest sigma with lambda = sigma(mu)
  QVec mu;        // the unique point of the orbit in the closed chamber
};

// { i : lambda(h_i) = 0 } for a point of the closed chamber; the stabilizer
// of lambda is the standard parabolic group on the result.  Rejects points
// outside the chamber.
IndexSet facet_of(const RootBase& rb, const QVec& lambda);

// Repeated ascent: while some lambda(h_i) < 0, reflect at the smallest such
// i.  Ends at the chamber representative, or gives up after cap reflections:
// a point outside the Tits cone descends forever, and no finite procedure
// can tell it apart from one that is merely deep inside.
std::optional<NormalForm> normalize(const RootBase& rb, const QVec& lambda, int cap);

// the facet through an arbitrary point of the Tits cone, within the same cap
std::optional<Facet> facet_through(const RootBase& rb, const QVec& lambda, int cap);

// true iff the stabilizer W_{facet_of(lambda)} is finite
bool is_interior(const RootBase& rb, const QVec& lambda);

// Canonical handle for sigma R(theta).  Validates theta special facial; the
// FacialFamily overload decides that by lookup in the enumerated family
// instead of fresh feasibility runs.
TitsFace tits_face(const RootBase& rb, IndexSet theta, const CoxElem& sigma);
TitsFace tits_face(const RootBase& rb, IndexSet theta);
TitsFace tits_face(const FacialFamily& fam, IndexSet theta, const CoxElem& sigma);

// hull basis and stabilizers; the hull of sigma R(theta) is the sigma-image
// of { lambda : lambda(h_i) = 0 for i in theta }
TitsFaceInfo face_info(const RootBase& rb, const TitsFace& f);

// f1 ⊆ f2 as faces: theta1 ⊇ theta2 and sigma2^{-1} sigma1 in
// W_{theta2^perp} W_{theta1}, decided by the double coset normal form
bool face_leq(const RootBase& rb, const TitsFace& f1, const TitsFace& f2);

// Intersection and smallest common upper bound.  With tau the shortest
// element of W_{N1} sigma1^{-1} sigma2 W_{N2} (N_i the setwise stabilizer
// sets) and the handles moved into that position, the meet is the face of
// the facial closure of theta1 ∪ theta2 ∪ red(tau) and the join drops to
// the nonfinite part of the ray-matching set theta1 ∩ tau(theta2).
std::pair<TitsFace, TitsFace> face_meet_join(const RootBase& rb, const TitsFace& f1,
                                             const TitsFace& f2);
std::pair<TitsFace, TitsFace> face_meet_join(const FacialFamily& fam, const TitsFace& f1,
                                             const TitsFace& f2);

// lambda in sigma R(theta), resp. in its relative interior; empty when
// normalize gives up within cap.  A chamber orbit representative with zero
// set j lies in the face iff j ⊇ theta and the translate parts match modulo
// W_{theta^perp} W_j, and in the relative interior iff moreover the
// nonfinite part of j is exactly theta.
std::optional<bool> face_membership(const RootBase& rb, const QVec& lambda, const TitsFace& f,
                                    int cap);
std::optional<bool> face_ri_membership(const RootBase& rb, const QVec& lambda, const TitsFace& f,
                                       int cap);

}  // namespace coxcone
